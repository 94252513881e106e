"""Tree structure (legs, terminal degrees) and signed-tree dimension results.

A *leg* of an exterior major vertex ``t`` is stored as the tuple of vertices
``(u_1, ..., u_len)`` with ``u_i`` at distance ``i`` from ``t``; ``t`` itself
is not included and the last entry is the terminal leaf.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import SignedGraph
from .distance import SignedDistanceMatrix, signed_distances
from .errors import FormulaNotApplicable, IsAPath, NotATree


@dataclass(frozen=True)
class TreeProfile:
    leaves: frozenset[int]
    major_vertices: frozenset[int]
    exterior_major: frozenset[int]
    terminal_of: dict[int, int]
    legs: dict[int, tuple[tuple[int, ...], ...]]

    def ter(self, v: int) -> int:
        return len(self.legs.get(v, ()))

    @property
    def lam(self) -> int:
        return sum(len(legs) for legs in self.legs.values())

    @property
    def ext(self) -> int:
        return len(self.exterior_major)


@dataclass(frozen=True)
class SignedTreeProfile:
    base: TreeProfile
    special: frozenset[int]

    @property
    def formula_applicable(self) -> bool:
        return all(self.base.ter(t) != 2 for t in self.special)


def is_tree(g: SignedGraph) -> bool:
    return g.m == g.n - 1  # connectivity is guaranteed by construction


def is_path(g: SignedGraph) -> bool:
    return is_tree(g) and all(g.degree(v) <= 2 for v in g.vertices())


def tree_profile(g: SignedGraph) -> TreeProfile:
    if not is_tree(g):
        raise NotATree(f"{g.n} vertices and {g.m} edges is not a tree")
    if is_path(g):
        raise IsAPath("paths have no major vertices")

    leaves = frozenset(v for v in g.vertices() if g.degree(v) == 1)
    majors = frozenset(v for v in g.vertices() if g.degree(v) >= 3)
    terminal_of: dict[int, int] = {}
    legs: dict[int, list[tuple[int, ...]]] = {}
    for leaf in sorted(leaves):
        # walk inward through degree-2 vertices until the first major vertex
        walk = [leaf]
        prev, cur = None, leaf
        while cur not in majors:
            nxt = next(w for w, _ in g.neighbors(cur) if w != prev)
            prev, cur = cur, nxt
            walk.append(cur)
        t = walk.pop()
        terminal_of[leaf] = t
        legs.setdefault(t, []).append(tuple(reversed(walk)))

    return TreeProfile(
        leaves=leaves,
        major_vertices=majors,
        exterior_major=frozenset(legs),
        terminal_of=terminal_of,
        legs={t: tuple(ls) for t, ls in sorted(legs.items())},
    )


def unsigned_tree_dimension(p: TreeProfile) -> int:
    return p.lam - p.ext


def _legs_separated(S, t: int, a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(S[t, x] != S[t, y] for x, y in zip(a, b))


def special_exterior_majors(g: SignedGraph, dm: SignedDistanceMatrix | None = None,
                            p: TreeProfile | None = None) -> SignedTreeProfile:
    """Exterior major vertices having two legs told apart at every depth.

    Two legs are compared at the depths they share; they are separated
    when the signed distances from the major vertex differ at each one.
    """
    if p is None:
        p = tree_profile(g)
    if dm is None:
        dm = signed_distances(g)
    S = dm.signed()
    special = set()
    for t, legs in p.legs.items():
        if any(
            _legs_separated(S, t, legs[i], legs[j])
            for i in range(len(legs))
            for j in range(i + 1, len(legs))
        ):
            special.add(t)
    return SignedTreeProfile(p, frozenset(special))


def signed_tree_bounds(g: SignedGraph) -> tuple[int, int]:
    if is_path(g):
        return (1, 1)
    p = tree_profile(g)
    hi = unsigned_tree_dimension(p)
    return (max(1, hi - p.ext), hi)


def signed_tree_dimension(g: SignedGraph) -> int:
    """Closed-form metric dimension of a signed tree.

    Raises :class:`FormulaNotApplicable` (carrying the bounds) when some
    special exterior major vertex has terminal degree 2.
    """
    if is_path(g):
        return 1
    sp = special_exterior_majors(g)
    bad = sorted(t for t in sp.special if sp.base.ter(t) == 2)
    if bad:
        raise FormulaNotApplicable(bad[0], signed_tree_bounds(g))
    return unsigned_tree_dimension(sp.base) - len(sp.special)
