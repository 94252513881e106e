"""Signed graph data model and elementary operations.

Vertices are dense integer ids ``0..n-1``.  Signs are the plain integers
``+1`` and ``-1``; the text forms ``"+"``/``"-"`` are accepted wherever a
sign is read from user input.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import (
    BadSign,
    Disconnected,
    DuplicateEdge,
    NotACycle,
    SelfLoop,
    VertexOutOfRange,
)

POSITIVE = 1
NEGATIVE = -1

Edge = tuple[int, int]


def as_sign(value) -> int:
    """Normalise ``+1``/``-1``/``"+"``/``"-"`` to ``+1`` or ``-1``."""
    if value in ("+", "+1"):
        return POSITIVE
    if value in ("-", "-1"):
        return NEGATIVE
    if isinstance(value, bool):
        raise BadSign(f"not a sign: {value!r}")
    if value == 1:
        return POSITIVE
    if value == -1:
        return NEGATIVE
    raise BadSign(f"not a sign: {value!r}")


def sign_char(s: int) -> str:
    return "+" if s > 0 else "-"


def _key(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SignedGraph:
    """Immutable simple connected graph with a +/-1 signature.

    ``edges`` is sorted lexicographically with ``u < v`` in every pair and
    ``signs[i]`` is the sign of ``edges[i]``.  Use :func:`build` rather than
    the constructor; it performs the validation.
    """

    n: int
    edges: tuple[Edge, ...]
    signs: tuple[int, ...]
    _adj: tuple[tuple[tuple[int, int], ...], ...] = field(
        init=False, repr=False, compare=False, hash=False
    )
    _sign_of: dict = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for (u, v), s in zip(self.edges, self.signs):
            adj[u].append((v, s))
            adj[v].append((u, s))
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))
        object.__setattr__(self, "_sign_of", dict(zip(self.edges, self.signs)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple[tuple[int, int], ...]:
        """``(neighbor, edge sign)`` pairs, sorted by neighbor id."""
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _key(u, v) in self._sign_of

    def sign(self, u: int, v: int) -> int:
        try:
            return self._sign_of[_key(u, v)]
        except KeyError:
            raise KeyError(f"no edge {u}-{v}") from None

    def signed_edges(self) -> list[tuple[int, int, int]]:
        return [(u, v, s) for (u, v), s in zip(self.edges, self.signs)]

    def with_signs(self, signs: Sequence[int]) -> "SignedGraph":
        """Same underlying graph, new signature given in ``edges`` order."""
        return build(self.n, [(u, v, s) for (u, v), s in zip(self.edges, signs)])

    def all_positive(self) -> "SignedGraph":
        return SignedGraph(self.n, self.edges, (POSITIVE,) * self.m)

    def is_homogeneous(self) -> bool:
        return len(set(self.signs)) <= 1

    def _check_vertex(self, v: int) -> None:
        if not (isinstance(v, int) and 0 <= v < self.n):
            raise VertexOutOfRange(f"vertex {v!r} not in 0..{self.n - 1}")


def build(n: int, signed_edges: Iterable[tuple[int, int, object]]) -> SignedGraph:
    """Validate and construct a :class:`SignedGraph`.

    Raises :class:`VertexOutOfRange`, :class:`SelfLoop`, :class:`DuplicateEdge`
    or :class:`Disconnected`.
    """
    if n < 1:
        raise VertexOutOfRange(f"vertex count must be positive, got {n}")
    table: dict[Edge, int] = {}
    for u, v, s in signed_edges:
        for x in (u, v):
            if not (isinstance(x, int) and 0 <= x < n):
                raise VertexOutOfRange(f"vertex {x!r} not in 0..{n - 1}")
        if u == v:
            raise SelfLoop(f"self loop at vertex {u}")
        k = _key(u, v)
        if k in table:
            raise DuplicateEdge(f"edge {k[0]}-{k[1]} given twice")
        table[k] = as_sign(s)

    edges = tuple(sorted(table))
    g = SignedGraph(n, edges, tuple(table[e] for e in edges))
    seen = _reachable(g, 0)
    if len(seen) != n:
        missing = min(set(range(n)) - seen)
        raise Disconnected(f"vertex {missing} is not reachable from vertex 0")
    return g


def _reachable(g: SignedGraph, root: int) -> set[int]:
    seen = {root}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w, _ in g.neighbors(u):
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


def negate(g: SignedGraph) -> SignedGraph:
    return SignedGraph(g.n, g.edges, tuple(-s for s in g.signs))


@dataclass(frozen=True)
class NetDegree:
    vertex: int
    d_plus: int
    d_minus: int

    @property
    def d_net(self) -> int:
        return self.d_plus - self.d_minus


def net_degree(g: SignedGraph, v: int) -> NetDegree:
    g._check_vertex(v)
    plus = sum(1 for _, s in g.neighbors(v) if s > 0)
    return NetDegree(v, plus, g.degree(v) - plus)


def k_neighborhood(g: SignedGraph, dm, v: int, k: int) -> set[int]:
    """Vertices at hop distance exactly ``k`` from ``v``.

    ``dm`` is the graph's :class:`~signed_metric.distance.SignedDistanceMatrix`.
    """
    g._check_vertex(v)
    if k < 1:
        raise ValueError("k must be positive")
    return {u for u in range(g.n) if dm.d[v][u] == k}


def cycle_sign(g: SignedGraph, cycle: Sequence[int]) -> int:
    """Product of edge signs around ``cycle``.

    The cycle may be given open (``[a, b, c]``) or closed (``[a, b, c, a]``).
    """
    verts = list(cycle)
    if len(verts) >= 2 and verts[0] == verts[-1]:
        verts.pop()
    if len(verts) < 3 or len(set(verts)) != len(verts):
        raise NotACycle(f"{list(cycle)} is not a cycle on distinct vertices")
    for v in verts:
        g._check_vertex(v)
    product = 1
    for a, b in zip(verts, verts[1:] + verts[:1]):
        if not g.has_edge(a, b):
            raise NotACycle(f"{a}-{b} is not an edge")
        product *= g.sign(a, b)
    return product


def sign_potentials(g: SignedGraph) -> list[int]:
    """Spanning-tree sign potential of every vertex (root 0 gets +1)."""
    pot = [0] * g.n
    pot[0] = POSITIVE
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w, s in g.neighbors(u):
            if pot[w] == 0:
                pot[w] = pot[u] * s
                queue.append(w)
    return pot


def is_balanced(g: SignedGraph) -> bool:
    """True iff every cycle is positive; O(n + m) potential check."""
    pot = sign_potentials(g)
    return all(s == pot[u] * pot[v] for (u, v), s in zip(g.edges, g.signs))
