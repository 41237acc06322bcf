"""Exhaustive enumeration of small signed graphs.

Connected signed multigraphs with multiplicity at most 2 are generated
exactly once up to isomorphism or up to switching isomorphism.  A graph is
encoded as a vector of pair states over the colex-ordered vertex pairs:

    0 no edge | 1 '+' | 2 '-' | 3 '++' | 4 '+-' | 5 '--'

Generation runs per underlying multigraph (connected simple support plus a
doubled-pair subset, both up to isomorphism); sign patterns are produced in
switching normal form relative to a fixed BFS spanning tree and folded by
the underlying graph's automorphisms.  The heavy symmetric cases vectorize
the folding with numpy.

Caveat: the full universe with same-sign parallel pairs grows very fast;
at 6 vertices it has tens of millions of switching classes.  The
verification suites that need 6 vertices therefore restrict parallel pairs
to differently-signed ones (see suites.py for why that is enough), and the
unrestricted universe is intended for at most 5 vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

import numpy as np

from .graph import Edge, SignedGraph

# pair states
S_NONE, S_P, S_M, S_PP, S_PM, S_MM = range(6)
_FLIP = (S_NONE, S_M, S_P, S_MM, S_PM, S_PP)
_FLIP_NP = np.array(_FLIP, dtype=np.uint8)
_STATE_EDGES = {
    S_P: (1,),
    S_M: (-1,),
    S_PP: (1, 1),
    S_PM: (1, -1),
    S_MM: (-1, -1),
}


@lru_cache(maxsize=None)
def _pairs(n: int) -> tuple[tuple[int, int], ...]:
    """Vertex pairs in colex order: all pairs inside {0..j} precede pairs with j+1."""
    return tuple((i, j) for j in range(n) for i in range(j))


@lru_cache(maxsize=None)
def _pair_index(n: int) -> dict[tuple[int, int], int]:
    return {p: i for i, p in enumerate(_pairs(n))}


def _states_from_graph(g: SignedGraph) -> tuple[int, ...]:
    if g.max_multiplicity > 2:
        raise ValueError("state encoding requires multiplicity at most 2")
    idx = _pair_index(g.n)
    states = [S_NONE] * len(_pairs(g.n))
    bucket: dict[int, list[int]] = {}
    for u, v, s in g.edges:
        p = idx[(u, v) if u < v else (v, u)]
        bucket.setdefault(p, []).append(s)
    for p, signs in bucket.items():
        signs.sort(reverse=True)
        if signs == [1]:
            states[p] = S_P
        elif signs == [-1]:
            states[p] = S_M
        elif signs == [1, 1]:
            states[p] = S_PP
        elif signs == [1, -1]:
            states[p] = S_PM
        else:
            states[p] = S_MM
    return tuple(states)


def _graph_from_states(n: int, states) -> SignedGraph:
    edges = []
    for p, st in enumerate(states):
        if st == S_NONE:
            continue
        i, j = _pairs(n)[p]
        for s in _STATE_EDGES[st]:
            edges.append(Edge(i, j, s))
    return SignedGraph(n, tuple(edges))


# -- canonical forms -------------------------------------------------------------

def canonical_form(g: SignedGraph, modulo: str = "switching_iso") -> tuple[int, ...]:
    """Canonical encoding of a signed graph, equal across (switching-)isomorphs.

    Lexicographically minimal state vector over all vertex orderings and,
    for switching_iso, all switchings; found by a placement DFS with prefix
    pruning.
    """
    if modulo not in ("iso", "switching_iso"):
        raise ValueError(f"unknown modulo: {modulo!r}")
    n = g.n
    sv = _states_from_graph(g)
    if n <= 1:
        return (n,)
    idx = _pair_index(n)
    switching = modulo == "switching_iso"
    best: list[int] | None = None

    def rec(placed: list[int], used: int, xs: list[int], enc: list[int]) -> None:
        nonlocal best
        p = len(placed)
        if p == n:
            if best is None or enc < best:
                best = list(enc)
            return
        for w in range(n):
            if (used >> w) & 1:
                continue
            for s in (0, 1) if (switching and p > 0) else (0,):
                seg = []
                for i, wi in enumerate(placed):
                    a, b = (wi, w) if wi < w else (w, wi)
                    st = sv[idx[(a, b)]]
                    seg.append(_FLIP[st] if xs[i] ^ s else st)
                cand = enc + seg
                if best is not None and cand > best[: len(cand)]:
                    continue
                placed.append(w)
                xs.append(s)
                rec(placed, used | (1 << w), xs, cand)
                placed.pop()
                xs.pop()

    rec([], 0, [], [])
    return (n, *best)


def _automorphisms(n: int, sv) -> list[tuple[int, ...]]:
    """All vertex permutations preserving the pair-state vector."""
    if n <= 1:
        return [tuple(range(n))]
    idx = _pair_index(n)
    perms: list[tuple[int, ...]] = []

    def rec(placed: list[int], used: int) -> None:
        p = len(placed)
        if p == n:
            perms.append(tuple(placed))
            return
        for w in range(n):
            if (used >> w) & 1:
                continue
            ok = True
            for i, wi in enumerate(placed):
                a, b = (wi, w) if wi < w else (w, wi)
                c, d = (i, p)
                if sv[idx[(a, b)]] != sv[idx[(c, d)]]:
                    ok = False
                    break
            if ok:
                placed.append(w)
                rec(placed, used | (1 << w))
                placed.pop()

    rec([], 0)
    return perms


def _pair_perm(n: int, perm: tuple[int, ...]) -> tuple[int, ...]:
    """pair index map: pp[index of (i,j)] = index of (perm(i), perm(j))."""
    idx = _pair_index(n)
    out = []
    for i, j in _pairs(n):
        a, b = perm[i], perm[j]
        out.append(idx[(a, b) if a < b else (b, a)])
    return tuple(out)


# -- connected simple supports up to isomorphism ----------------------------------

@lru_cache(maxsize=None)
def _connected_supports(n: int) -> tuple[tuple[int, ...], ...]:
    """Canonical 0/1 pair-state vectors of connected simple graphs on n vertices.

    Built by attaching a new vertex (with every nonempty neighborhood) to
    each smaller support; every connected graph has a non-cut vertex, so
    the construction is complete.  Colex order makes the old vector a
    prefix of the new one.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n == 1:
        return ((),)
    prev = _connected_supports(n - 1)
    seen: set[tuple[int, ...]] = set()
    for base in prev:
        for nb in range(1, 1 << (n - 1)):
            sv = base + tuple((nb >> i) & 1 for i in range(n - 1))
            canon = _canonical_unsigned(n, sv)
            seen.add(canon)
    return tuple(sorted(seen))


def _canonical_unsigned(n: int, sv) -> tuple[int, ...]:
    """Lex-min of an unsigned pair vector over vertex permutations."""
    idx = _pair_index(n)
    best: list[int] | None = None

    def rec(placed: list[int], used: int, enc: list[int]) -> None:
        nonlocal best
        p = len(placed)
        if p == n:
            if best is None or enc < best:
                best = list(enc)
            return
        for w in range(n):
            if (used >> w) & 1:
                continue
            seg = []
            for wi in placed:
                a, b = (wi, w) if wi < w else (w, wi)
                seg.append(sv[idx[(a, b)]])
            cand = enc + seg
            if best is not None and cand > best[: len(cand)]:
                continue
            placed.append(w)
            rec(placed, used | (1 << w), cand)
            placed.pop()

    rec([], 0, [])
    return tuple(best)


# -- enumeration spec -------------------------------------------------------------

@dataclass(frozen=True)
class EnumSpec:
    """Bounds and equivalence for an enumeration run.

    ``same_sign_parallels=False`` restricts parallel pairs to differently
    signed ones; the suites use it where a same-sign parallel edge provably
    cannot matter for the property being checked.
    """

    max_vertices: int
    max_multiplicity: int = 1
    connected_only: bool = True
    modulo: str = "switching_iso"
    degree_cap: int | None = None
    same_sign_parallels: bool = True

    def __post_init__(self):
        if self.max_vertices < 1:
            raise ValueError("max_vertices must be at least 1")
        if self.max_multiplicity not in (1, 2):
            raise ValueError("max_multiplicity must be 1 or 2")
        if self.modulo not in ("iso", "switching_iso"):
            raise ValueError(f"unknown modulo: {self.modulo!r}")


def enumerate_graphs(spec: EnumSpec):
    """Yield each signed graph within the spec exactly once, deterministically."""
    if spec.connected_only:
        yield from _connected_stream(spec)
        return
    catalog = list(_connected_stream(spec))
    yield from catalog
    by_size: dict[int, list[SignedGraph]] = {}
    for g in catalog:
        by_size.setdefault(g.n, []).append(g)

    def unions(start_idx: int, budget: int, parts: list[SignedGraph]):
        if len(parts) >= 2:
            yield _disjoint_union(parts)
        for i in range(start_idx, len(catalog)):
            g = catalog[i]
            if g.n <= budget:
                parts.append(g)
                yield from unions(i, budget - g.n, parts)
                parts.pop()

    yield from unions(0, spec.max_vertices, [])


def _disjoint_union(parts) -> SignedGraph:
    edges = []
    offset = 0
    for g in parts:
        edges.extend(Edge(u + offset, v + offset, s) for u, v, s in g.edges)
        offset += g.n
    return SignedGraph(offset, tuple(edges))


def _connected_stream(spec: EnumSpec):
    for n in range(1, spec.max_vertices + 1):
        if n == 1:
            yield SignedGraph(1)
            continue
        for support in _connected_supports(n):
            yield from _graphs_on_support(n, support, spec)


def _bfs_tree(n: int, support) -> tuple[list[int], list[int], list[int]]:
    """BFS tree over the support from vertex 0.

    Returns (tree pair indices in BFS order, parent vertex per vertex,
    child vertex per tree pair).
    """
    idx = _pair_index(n)
    adj: list[list[int]] = [[] for _ in range(n)]
    for p, (i, j) in enumerate(_pairs(n)):
        if support[p]:
            adj[i].append(j)
            adj[j].append(i)
    parent = [-1] * n
    seen = [False] * n
    seen[0] = True
    order = [0]
    queue = [0]
    while queue:
        v = queue.pop(0)
        for u in sorted(adj[v]):
            if not seen[u]:
                seen[u] = True
                parent[u] = v
                order.append(u)
                queue.append(u)
    tree_pairs = []
    children = []
    for u in order[1:]:
        v = parent[u]
        tree_pairs.append(idx[(u, v) if u < v else (v, u)])
        children.append(u)
    return tree_pairs, parent, children


def _subtree_masks(n: int, parent: list[int], children: list[int]) -> list[int]:
    """Vertex bitmask of the subtree below each tree pair (child side)."""
    masks = []
    kids: list[list[int]] = [[] for _ in range(n)]
    for u, p in enumerate(parent):
        if p >= 0:
            kids[p].append(u)
    for c in children:
        mask = 0
        stack = [c]
        while stack:
            v = stack.pop()
            mask |= 1 << v
            stack.extend(kids[v])
        masks.append(mask)
    return masks


def _graphs_on_support(n: int, support, spec: EnumSpec):
    npairs = len(support)
    edge_pairs = [p for p in range(npairs) if support[p]]
    auts = _automorphisms(n, support)
    if spec.max_multiplicity == 2:
        d_masks = _doubling_orbits(edge_pairs, auts, n)
    else:
        d_masks = [0]
    for dmask in d_masks:
        underlying = list(support)
        for bit, p in enumerate(edge_pairs):
            if (dmask >> bit) & 1:
                underlying[p] = 2
        if spec.degree_cap is not None:
            degs = [0] * n
            for p, (i, j) in enumerate(_pairs(n)):
                degs[i] += underlying[p]
                degs[j] += underlying[p]
            if max(degs) > spec.degree_cap:
                continue
        aut_ud = [a for a in auts if _preserves(n, underlying, a)]
        yield from _signed_classes(n, underlying, aut_ud, spec)


def _preserves(n: int, vec, perm) -> bool:
    pp = _pair_perm(n, perm)
    return all(vec[pp[p]] == vec[p] for p in range(len(vec)))


def _doubling_orbits(edge_pairs, auts, n) -> list[int]:
    """Doubled-edge subsets up to the support's automorphisms (min of orbit)."""
    m = len(edge_pairs)
    if len(auts) == 1 or m == 0:
        return list(range(1 << m))
    pos = {p: i for i, p in enumerate(edge_pairs)}
    eperms = []
    for a in auts:
        pp = _pair_perm(n, a)
        eperms.append(tuple(pos[pp[p]] for p in edge_pairs))
    eperms = [ep for ep in set(eperms) if ep != tuple(range(m))]
    if not eperms:
        return list(range(1 << m))
    total = (1 << m) * len(eperms)
    if total > 200_000:
        masks = np.arange(1 << m, dtype=np.uint32)
        running = masks.copy()
        for ep in eperms:
            img = np.zeros_like(masks)
            for src in range(m):
                img |= ((masks >> src) & 1) << ep[src]
            np.minimum(running, img, out=running)
        return [int(x) for x in masks[running == masks]]
    out = []
    for mask in range(1 << m):
        minimal = True
        for ep in eperms:
            img = 0
            for src in range(m):
                img |= ((mask >> src) & 1) << ep[src]
            if img < mask:
                minimal = False
                break
        if minimal:
            out.append(mask)
    return out


def _signed_classes(n: int, underlying, aut_ud, spec: EnumSpec):
    """Sign patterns on a fixed underlying, folded to one per equivalence class."""
    npairs = len(underlying)
    switching = spec.modulo == "switching_iso"
    tree_pairs, parent, children = _bfs_tree(n, underlying)
    tree_set = set(tree_pairs)

    single_free = [S_P, S_M]
    double_free = [S_PP, S_PM, S_MM] if spec.same_sign_parallels else [S_PM]
    double_tree = [S_PP, S_PM] if spec.same_sign_parallels else [S_PM]

    alphabets = []
    for p in range(npairs):
        if underlying[p] == 0:
            alphabets.append((S_NONE,))
        elif underlying[p] == 1:
            if switching and p in tree_set:
                alphabets.append((S_P,))
            else:
                alphabets.append(tuple(single_free))
        else:
            if switching and p in tree_set:
                alphabets.append(tuple(double_tree))
            else:
                alphabets.append(tuple(double_free))

    reps = np.array(list(product(*alphabets)), dtype=np.uint8)
    if switching:
        accept = _fold_switching(n, underlying, aut_ud, tree_pairs, parent,
                                 children, reps)
    else:
        accept = _fold_plain(n, aut_ud, reps)
    for row in reps[accept]:
        yield _graph_from_states(n, tuple(int(x) for x in row))


def _encode_keys(reps: np.ndarray) -> np.ndarray:
    """Pack state rows into uint64 keys; numeric order == lex order."""
    npairs = reps.shape[1]
    keys = np.zeros(len(reps), dtype=np.uint64)
    for p in range(npairs):
        keys = (keys << np.uint64(3)) | reps[:, p].astype(np.uint64)
    return keys


def _fold_plain(n: int, aut_ud, reps: np.ndarray) -> np.ndarray:
    """Keep rows minimal in their orbit under relabeling only."""
    own = _encode_keys(reps)
    running = own.copy()
    for a in aut_ud:
        if a == tuple(range(n)):
            continue
        pp = _pair_perm(n, a)
        inv = np.empty(len(pp), dtype=np.intp)
        for src, dst in enumerate(pp):
            inv[dst] = src
        permuted = reps[:, inv]
        np.minimum(running, _encode_keys(permuted), out=running)
    return own <= running


def _fold_switching(n, underlying, aut_ud, tree_pairs, parent, children,
                    reps: np.ndarray) -> np.ndarray:
    """Keep rows minimal under relabeling plus switching.

    Rows arrive in switching normal form (tree singles positive, tree
    doubles in {++, +-}).  The leftover switching freedom flips subtrees
    below +- tree doubles; each automorphism image is re-normalized and
    minimized over that freedom.
    """
    pairs = _pairs(n)
    sub_masks = _subtree_masks(n, parent, children)
    doubled_tree = [(t, sub_masks[k]) for k, t in enumerate(tree_pairs)
                    if underlying[t] == 2]
    own = _encode_keys(reps)
    running = own.copy()
    maxkey = np.uint64(2**63)

    combos = []
    for r in range(len(doubled_tree) + 1):
        for chosen in combinations(doubled_tree, r):
            vmask = 0
            for _, sm in chosen:
                vmask ^= sm
            combos.append((tuple(t for t, _ in chosen), vmask))

    for a in aut_ud:
        identity = a == tuple(range(n))
        if identity:
            normalized = reps
        else:
            pp = _pair_perm(n, a)
            inv = np.empty(len(pp), dtype=np.intp)
            for src, dst in enumerate(pp):
                inv[dst] = src
            normalized = _normalize_switch(n, underlying, tree_pairs, parent,
                                           children, reps[:, inv])
        for chosen, vmask in combos:
            if identity and not chosen:
                continue
            valid = np.ones(len(reps), dtype=bool)
            for t in chosen:
                valid &= normalized[:, t] == S_PM
            if not valid.any():
                continue
            cand = normalized
            if vmask:
                flip_cols = [p for p, (i, j) in enumerate(pairs)
                             if ((vmask >> i) & 1) != ((vmask >> j) & 1)]
                cand = normalized.copy()
                for p in flip_cols:
                    cand[:, p] = _FLIP_NP[cand[:, p]]
            keys = _encode_keys(cand)
            keys[~valid] = maxkey
            np.minimum(running, keys, out=running)
    return own <= running


def _normalize_switch(n, underlying, tree_pairs, parent, children,
                      reps: np.ndarray) -> np.ndarray:
    """Vectorized switching normal form relative to the fixed BFS tree."""
    pairs = _pairs(n)
    rows = len(reps)
    x = np.zeros((rows, n), dtype=bool)
    for k, t in enumerate(tree_pairs):
        child = children[k]
        par = parent[child]
        st = reps[:, t]
        if underlying[t] == 1:
            need_flip = st == S_M
        else:
            need_flip = st == S_MM
        x[:, child] = x[:, par] ^ need_flip
    out = reps.copy()
    for p, (i, j) in enumerate(pairs):
        if underlying[p] == 0:
            continue
        fl = x[:, i] ^ x[:, j]
        col = out[:, p]
        out[:, p] = np.where(fl, _FLIP_NP[col], col)
    return out


# -- graphs whose blocks are all bricks -------------------------------------------

def brick_catalog(max_vertices: int) -> list[SignedGraph]:
    """One representative per brick class with at most max_vertices vertices."""
    from .graph import complete, cycle, double

    out: dict[tuple, SignedGraph] = {}
    for m in range(2, max_vertices + 1):
        candidates = [complete(m)]
        if m >= 3 and m % 2 == 1:
            candidates.append(cycle([1] * m))
            candidates.append(double(cycle([1] * m)))
        if m >= 4 and m % 2 == 0:
            candidates.append(cycle([1] * (m - 1) + [-1]))
        candidates.append(double(complete(m)))
        for g in candidates:
            out.setdefault(canonical_form(g), g)
    return [out[k] for k in sorted(out)]


def enumerate_brick_block_graphs(max_vertices: int) -> list[SignedGraph]:
    """All connected graphs whose blocks are bricks, up to switching iso.

    Every such graph is a tree of bricks glued at cut vertices, so gluing a
    brick onto an existing vertex, in all ways, reaches the whole family;
    switching acts independently on the two sides of a cut vertex, so brick
    representatives up to switching suffice.
    """
    bricks = brick_catalog(max_vertices)
    seen: dict[tuple, SignedGraph] = {}
    frontier: list[SignedGraph] = []
    for g in [SignedGraph(1), *bricks]:
        key = canonical_form(g)
        if key not in seen:
            seen[key] = g
            frontier.append(g)
    while frontier:
        g = frontier.pop(0)
        for b in bricks:
            new_n = g.n + b.n - 1
            if new_n > max_vertices:
                continue
            for v in g.vertices:
                vmap = [0] * b.n
                vmap[0] = v
                for i in range(1, b.n):
                    vmap[i] = g.n + i - 1
                edges = g.edges + tuple(
                    Edge(min(vmap[u], vmap[w]), max(vmap[u], vmap[w]), s)
                    for u, w, s in b.edges
                )
                glued = SignedGraph(new_n, edges)
                key = canonical_form(glued)
                if key not in seen:
                    seen[key] = glued
                    frontier.append(glued)
    return [seen[k] for k in sorted(seen)]
