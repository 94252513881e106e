"""Plain-text graph files and Graphviz DOT export.

Graph file format::

    # comment
    n 4
    0 1 +
    1 2 -

The ``n <count>`` header comes first; each edge line is ``u v s`` with
``s`` one of ``+``/``-``.  Blank lines and ``#`` comments are ignored.
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Optional

from .core import SignedGraph, build, sign_char
from .errors import ParseError, SignedGraphError


def parse_graph(text: str) -> SignedGraph:
    n: Optional[int] = None
    header_line = 0
    edges: list[tuple[int, int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ParseError(lineno, f"expected header 'n <count>', got {line!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(lineno, f"bad vertex count {parts[1]!r}") from None
            if n < 1:
                raise ParseError(lineno, "vertex count must be positive")
            header_line = lineno
            continue
        if len(parts) != 3:
            raise ParseError(lineno, f"expected 'u v s', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(lineno, f"bad vertex id in {line!r}") from None
        if parts[2] not in ("+", "-"):
            raise ParseError(lineno, f"sign must be '+' or '-', got {parts[2]!r}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(lineno, f"vertex out of range 0..{n - 1} in {line!r}")
        if u == v:
            raise ParseError(lineno, f"self loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ParseError(lineno, f"edge {key[0]}-{key[1]} already given on line {seen[key]}")
        seen[key] = lineno
        edges.append((u, v, 1 if parts[2] == "+" else -1))
    if n is None:
        raise ParseError(1, "missing header 'n <count>'")
    try:
        return build(n, edges)
    except SignedGraphError as exc:
        raise ParseError(header_line, str(exc)) from None


def read_graph(path) -> SignedGraph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def format_graph(g: SignedGraph, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"n {g.n}")
    lines.extend(f"{u} {v} {sign_char(s)}" for u, v, s in g.signed_edges())
    return "\n".join(lines) + "\n"


def to_dot(g: SignedGraph, basis: Iterable[int] = (), name: str = "G") -> str:
    """Undirected DOT: positive edges solid, negative dashed, basis filled black."""
    basis = set(basis)
    out = [f"graph {name} {{", "  node [shape=circle];"]
    for v in g.vertices():
        if v in basis:
            out.append(f'  {v} [style=filled, fillcolor=black, fontcolor=white];')
        else:
            out.append(f"  {v};")
    for u, v, s in g.signed_edges():
        style = "solid" if s > 0 else "dashed"
        out.append(f"  {u} -- {v} [style={style}];")
    out.append("}")
    return "\n".join(out) + "\n"
