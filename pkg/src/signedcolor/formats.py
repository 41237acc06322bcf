"""Text formats for graphs and list assignments.

Graph files:

    # optional comments
    name <identifier>        (optional)
    n <vertex count>
    e <u> <v> <+|-|+1|-1>    (one line per edge, order preserved)

List files:

    l <vertex> <color> <color> ...   (one line per vertex)

Both formats are hand-writable, diffable, and round-trip exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import Edge, SignedGraph


class FormatError(ValueError):
    """Malformed input, with a 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


_SIGNS = {"+": 1, "+1": 1, "-": -1, "-1": -1}


@dataclass(frozen=True)
class GraphDocument:
    graph: SignedGraph
    name: str | None = None
    comments: tuple[str, ...] = ()


def parse_graph(text: str) -> GraphDocument:
    name = None
    comments = []
    n = None
    edges: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comments.append(line[1:].strip())
            continue
        fields = line.split()
        kind = fields[0]
        if kind == "name":
            if len(fields) != 2:
                raise FormatError(lineno, "name takes exactly one token")
            name = fields[1]
        elif kind == "n":
            if n is not None:
                raise FormatError(lineno, "duplicate vertex-count line")
            if len(fields) != 2 or not fields[1].isdigit():
                raise FormatError(lineno, "expected: n <nonnegative integer>")
            n = int(fields[1])
        elif kind == "e":
            if n is None:
                raise FormatError(lineno, "edge before the vertex-count line")
            if len(fields) != 4:
                raise FormatError(lineno, "expected: e <u> <v> <sign>")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise FormatError(lineno, "endpoints must be integers") from None
            if fields[3] not in _SIGNS:
                raise FormatError(lineno, f"bad sign token {fields[3]!r}")
            if not (0 <= u < n and 0 <= v < n):
                raise FormatError(lineno, f"vertex id out of range 0..{n - 1}")
            if u == v:
                raise FormatError(lineno, "loops are not allowed")
            edges.append((u, v, _SIGNS[fields[3]]))
        else:
            raise FormatError(lineno, f"unknown directive {kind!r}")
    if n is None:
        raise FormatError(1, "missing vertex-count line 'n <count>'")
    graph = SignedGraph(n, tuple(Edge(*e) for e in edges))
    return GraphDocument(graph, name, tuple(comments))


def write_graph(g: SignedGraph | GraphDocument) -> str:
    if isinstance(g, GraphDocument):
        doc = g
    else:
        doc = GraphDocument(g)
    lines = [f"# {c}" for c in doc.comments]
    if doc.name is not None:
        lines.append(f"name {doc.name}")
    lines.append(f"n {doc.graph.n}")
    for u, v, s in doc.graph.edges:
        lines.append(f"e {u} {v} {'+' if s == 1 else '-'}")
    return "\n".join(lines) + "\n"


def parse_lists(text: str, g: SignedGraph) -> dict[int, frozenset[int]]:
    lists: dict[int, frozenset[int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if fields[0] != "l":
            raise FormatError(lineno, f"unknown directive {fields[0]!r}")
        if len(fields) < 2:
            raise FormatError(lineno, "expected: l <vertex> <color> ...")
        try:
            v = int(fields[1])
        except ValueError:
            raise FormatError(lineno, "vertex must be an integer") from None
        if not (0 <= v < g.n):
            raise FormatError(lineno, f"vertex id out of range 0..{g.n - 1}")
        if v in lists:
            raise FormatError(lineno, f"duplicate list for vertex {v}")
        try:
            colors = frozenset(int(c) for c in fields[2:])
        except ValueError:
            raise FormatError(lineno, "colors must be integers") from None
        lists[v] = colors
    missing = [v for v in g.vertices if v not in lists]
    if missing:
        raise FormatError(1, f"vertex {missing[0]} has no list")
    return lists


def write_lists(lists: dict[int, frozenset[int]]) -> str:
    from .coloring import color_key

    lines = []
    for v in sorted(lists):
        colors = " ".join(str(c) for c in sorted(lists[v], key=color_key))
        lines.append(f"l {v} {colors}".rstrip())
    return "\n".join(lines) + "\n"
