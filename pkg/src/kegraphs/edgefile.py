"""Plain-text edge-list format.

Layout::

    c optional comment lines
    p <n> <m>
    e <u> <v>

The first non-comment line must be the ``p`` line giving the vertex and
edge counts; every following non-comment line is an ``e`` line with
0-based endpoints.  Writers emit edges sorted lexicographically, which
makes the format bit-exact round-trippable.
"""

from __future__ import annotations

import os

from .graph import Graph


class GraphFormatError(ValueError):
    """Parse failure; carries the 1-based line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


def parse_graph(text: str) -> Graph:
    n = None
    m = None
    edges: list[tuple[int, int]] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        fields = line.split()
        if fields[0] == "p":
            if n is not None:
                raise GraphFormatError(line_no, "duplicate p line")
            if len(fields) != 3:
                raise GraphFormatError(line_no, "expected 'p <n> <m>'")
            try:
                n, m = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphFormatError(line_no, "p line counts must be integers") from None
            if n < 0 or m < 0:
                raise GraphFormatError(line_no, "p line counts must be nonnegative")
        elif fields[0] == "e":
            if n is None:
                raise GraphFormatError(line_no, "e line before p line")
            if len(fields) != 3:
                raise GraphFormatError(line_no, "expected 'e <u> <v>'")
            try:
                u, v = int(fields[1]), int(fields[2])
            except ValueError:
                raise GraphFormatError(line_no, "edge endpoints must be integers") from None
            if u == v:
                raise GraphFormatError(line_no, f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphFormatError(line_no, f"edge ({u}, {v}) out of range for n={n}")
            e = (u, v) if u < v else (v, u)
            if e in set(edges):
                raise GraphFormatError(line_no, f"duplicate edge ({e[0]}, {e[1]})")
            edges.append(e)
        else:
            raise GraphFormatError(line_no, f"unknown line type {fields[0]!r}")
    if n is None:
        raise GraphFormatError(1, "missing p line")
    if len(edges) != m:
        raise GraphFormatError(1, f"p line declares {m} edges, found {len(edges)}")
    return Graph(n, edges)


def format_graph(g: Graph) -> str:
    lines = [f"p {g.n} {g.m}"]
    for u, v in sorted(g.edges):
        lines.append(f"e {u} {v}")
    return "\n".join(lines) + "\n"


def read_graph(path: str | os.PathLike) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def write_graph(path: str | os.PathLike, g: Graph) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(g))
