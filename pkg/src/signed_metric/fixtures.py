"""Reference examples: two signed 9-wheels and a signed caterpillar.

Wheel labels: center 0, rim 1..9 clockwise from the top.  Caterpillar
labels: spine 0..6 left to right; spine vertex ``i`` carries the upper
leaf ``7 + 2i`` and the lower leaf ``8 + 2i``.  Expected values are
stored as published, so a fixture that disagrees with the solver shows up as
a failing regression rather than being silently corrected.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import SignedGraph, build
from .families import family_edges
from .io import format_graph

FIG1_NEGATIVES = ((0, 5), (0, 6), (0, 7), (7, 8), (4, 5))
FIG2_NEGATIVES = ((0, 4), (0, 5), (3, 4), (5, 6))


@dataclass(frozen=True)
class Fixture:
    name: str
    graph: SignedGraph
    expected_dimension: int
    expected_dim_underlying: int
    expected_basis: tuple[int, ...]

    @property
    def expected_mdd(self) -> int:
        return self.expected_dim_underlying - self.expected_dimension

    def text(self) -> str:
        return format_graph(self.graph, comment=f"fixture {self.name}")


def wheel_with_negatives(n: int, negatives) -> SignedGraph:
    neg = {tuple(sorted(e)) for e in negatives}
    return build(n + 1, [(u, v, -1 if (u, v) in neg else 1) for u, v in family_edges("wheel", n)])


def caterpillar(spine: int = 7) -> SignedGraph:
    """Spine of positive edges; each spine vertex gets one + and one - leaf.

    Spine vertices 1 and ``spine - 1`` carry their negative leaf on the
    upper side; the rest carry it below.
    Leaves of spine vertex ``i`` are ``spine + 2i`` (upper) and
    ``spine + 2i + 1`` (lower).
    """
    edges = [(i, i + 1, 1) for i in range(spine - 1)]
    for i in range(spine):
        upper = -1 if i in (1, spine - 1) else 1
        edges.append((i, spine + 2 * i, upper))
        edges.append((i, spine + 2 * i + 1, -upper))
    return build(3 * spine, edges)


FIXTURES = {
    "fig1_w9": Fixture("fig1_w9", wheel_with_negatives(9, FIG1_NEGATIVES), 4, 4, (1, 3, 6, 8)),
    "fig2_w9": Fixture("fig2_w9", wheel_with_negatives(9, FIG2_NEGATIVES), 3, 4, (1, 6, 8)),
    "fig3_tree": Fixture("fig3_tree", caterpillar(7), 2, 7, (8, 20)),
}
