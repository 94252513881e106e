"""Generators and closed forms for paths, cycles, stars, wheels and complete graphs.

Labeling is fixed so that explicit sign lists are unambiguous:

* path ``P_n``: vertices ``0..n-1``, edges ``(i, i+1)``;
* cycle ``C_n``: the path edges followed by the closing edge ``(0, n-1)``;
* star ``K_{1,n}``: center ``0``, leaves ``1..n``, edges ``(0, i)``;
* wheel ``W_n``: center ``0``, rim ``1..n`` in cycle order; rim edges
  ``(i, i+1)`` then ``(1, n)``, then spokes ``(0, i)``;
* complete ``K_n``: all pairs in lexicographic order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Sequence, Union

from .core import NEGATIVE, POSITIVE, SignedGraph, as_sign, build, net_degree
from .distance import SignedDistanceMatrix, signed_distances
from .errors import (
    BadSize,
    NotACycle,
    NotAStar,
    NotAWheel,
    NotComplete,
    SignatureLengthMismatch,
)

FAMILIES = ("path", "cycle", "star", "wheel", "complete")
PRESETS = ("all_positive", "all_negative", "single_negative", "random")
_MIN_SIZE = {"path": 2, "cycle": 3, "star": 2, "wheel": 3, "complete": 2}


def family_edges(family: str, n: int) -> list[tuple[int, int]]:
    """Edges of the family member in canonical order."""
    if family not in FAMILIES:
        raise BadSize(f"unknown family {family!r}")
    if n < _MIN_SIZE[family]:
        raise BadSize(f"{family} needs n >= {_MIN_SIZE[family]}, got {n}")
    if family == "path":
        return [(i, i + 1) for i in range(n - 1)]
    if family == "cycle":
        return [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)]
    if family == "star":
        return [(0, i) for i in range(1, n + 1)]
    if family == "wheel":
        rim = [(i, i + 1) for i in range(1, n)] + [(1, n)]
        return rim + [(0, i) for i in range(1, n + 1)]
    return list(combinations(range(n), 2))


def family_order(family: str, n: int) -> int:
    """Number of vertices of the family member of size parameter ``n``."""
    return n + 1 if family in ("star", "wheel") else n


@dataclass(frozen=True)
class FamilySpec:
    """A family member plus its signature.

    ``signature`` is either an explicit sign sequence in canonical edge
    order (a ``+-`` string works too) or a preset string: ``all_positive``, ``all_negative``,
    ``single_negative:<edge index>`` or ``random:<seed>``.
    """

    family: str
    n: int
    signature: Union[str, Sequence] = "all_positive"

    def signs(self) -> tuple[int, ...]:
        m = len(family_edges(self.family, self.n))
        sig = self.signature
        if not isinstance(sig, str) or (sig and set(sig) <= {"+", "-"}):
            signs = tuple(as_sign(s) for s in sig)
            if len(signs) != m:
                raise SignatureLengthMismatch(
                    f"{self.family} {self.n} has {m} edges, got {len(signs)} signs"
                )
            return signs
        name, _, arg = sig.partition(":")
        if name == "all_positive":
            return (POSITIVE,) * m
        if name == "all_negative":
            return (NEGATIVE,) * m
        if name == "single_negative":
            i = int(arg or 0)
            if not 0 <= i < m:
                raise SignatureLengthMismatch(f"edge index {i} outside 0..{m - 1}")
            return tuple(NEGATIVE if j == i else POSITIVE for j in range(m))
        if name == "random":
            rng = random.Random(int(arg or 0))
            return tuple(rng.choice((POSITIVE, NEGATIVE)) for _ in range(m))
        raise BadSize(f"unknown signature preset {sig!r}")


def generate(spec: FamilySpec) -> SignedGraph:
    edges = family_edges(spec.family, spec.n)
    signs = spec.signs()
    return build(family_order(spec.family, spec.n), [(u, v, s) for (u, v), s in zip(edges, signs)])


def family_graph(family: str, n: int, signs: Sequence) -> SignedGraph:
    return generate(FamilySpec(family, n, tuple(signs)))


def signature_in_family_order(g: SignedGraph, family: str, n: int) -> tuple[int, ...]:
    """Read ``g``'s signs back in the family's canonical edge order."""
    return tuple(g.sign(u, v) for u, v in family_edges(family, n))


# -- recognisers --------------------------------------------------------------

def _is_cycle(g: SignedGraph) -> bool:
    return g.n >= 3 and g.m == g.n and all(g.degree(v) == 2 for v in g.vertices())


def wheel_rim(g: SignedGraph) -> tuple[int, list[int]]:
    """Center and rim (in cycle order) of a wheel; raises :class:`NotAWheel`."""
    N = g.n
    if N < 4 or g.m != 2 * (N - 1):
        raise NotAWheel(f"{N} vertices and {g.m} edges is not a wheel")
    candidates = [v for v in g.vertices() if g.degree(v) == N - 1]
    if not candidates:
        raise NotAWheel("no vertex is adjacent to all others")
    center = candidates[0]
    rim_set = [v for v in g.vertices() if v != center]
    if any(g.degree(v) != 3 for v in rim_set):
        raise NotAWheel("rim vertices must have degree 3")
    start = rim_set[0]
    order = [start]
    prev = None
    cur = start
    while True:
        nxt = [w for w, _ in g.neighbors(cur) if w != center and w != prev]
        step = nxt[0]
        if step == start:
            break
        order.append(step)
        prev, cur = cur, step
        if len(order) > N - 1:
            raise NotAWheel("rim is not a single cycle")
    if len(order) != N - 1:
        raise NotAWheel("rim is not a single cycle")
    return center, order


def star_center(g: SignedGraph) -> int:
    if g.m != g.n - 1 or g.n < 3:
        raise NotAStar(f"{g.n} vertices and {g.m} edges is not a star with n >= 2")
    for v in g.vertices():
        if g.degree(v) == g.n - 1:
            return v
    raise NotAStar("no vertex is adjacent to all others")


# -- cycles -------------------------------------------------------------------

@dataclass(frozen=True)
class CyclePrediction:
    dim1: bool
    witness_vertex: Optional[int] = None


def cycle_dim1_predicate(g: SignedGraph, dm: SignedDistanceMatrix | None = None) -> CyclePrediction:
    """Whether a signed cycle has metric dimension one.

    Some vertex must have net degree zero and, at every distance ``k`` up
    to ``n // 2``, the two vertices at that distance must carry different
    path signs from it.
    """
    if not _is_cycle(g):
        raise NotACycle("underlying graph is not a cycle")
    if dm is None:
        dm = signed_distances(g)
    S = dm.signed()
    for u in g.vertices():
        if net_degree(g, u).d_net != 0:
            continue
        ok = True
        for k in range(1, g.n // 2 + 1):
            ring = [w for w in g.vertices() if dm.d[u, w] == k]
            if len(ring) == 2 and S[u, ring[0]] == S[u, ring[1]]:
                ok = False
                break
        if ok:
            return CyclePrediction(True, u)
    return CyclePrediction(False, None)


# -- stars --------------------------------------------------------------------

def star_dimension(g: SignedGraph) -> int:
    """Metric dimension of a signed star with ``n`` leaves."""
    if g.n == 2:
        return 1
    center = star_center(g)
    leaves = g.n - 1
    if leaves <= 2:
        return 1
    signs = {s for _, s in g.neighbors(center)}
    return leaves - 1 if len(signs) == 1 else leaves - 2


# -- wheels -------------------------------------------------------------------

def unsigned_wheel_dimension(n: int) -> int:
    """Metric dimension of the unsigned wheel with ``n`` rim vertices."""
    if n < 3:
        raise BadSize(f"wheel needs n >= 3, got {n}")
    if n in (4, 5):
        return 2
    if n in (3, 6):
        return 3
    return (2 * n + 2) // 5


def wheel_compatible_predicate(g: SignedGraph) -> tuple[bool, Optional[tuple[int, int, int, int]]]:
    """Compatibility of a signed wheel from its 4-cycles through the center.

    Returns ``(compatible, witness)`` where ``witness`` is a negative
    4-cycle ``(center, a, b, c)`` with ``a-b-c`` consecutive on the rim.
    A three-vertex rim has diameter one and is always compatible.
    """
    center, rim = wheel_rim(g)
    k = len(rim)
    if k == 3:
        return True, None
    for i in range(k):
        a, b, c = rim[i - 1], rim[i], rim[(i + 1) % k]
        sign = g.sign(center, a) * g.sign(a, b) * g.sign(b, c) * g.sign(c, center)
        if sign < 0:
            return False, (center, a, b, c)
    return True, None


def wheel_center_condition(signs_to_center: dict[int, int], n: int) -> bool:
    """Spoke-sign condition under which ``{center, v1}`` resolves ``W_n``.

    Defined for ``n`` in 3, 4, 5; keys of ``signs_to_center`` are rim ids.
    """
    s = signs_to_center
    if n == 3:
        return s[2] != s[3]
    if n == 4:
        return s[2] != s[4]
    if n == 5:
        return s[2] != s[5] and s[3] != s[4]
    raise BadSize(f"no spoke condition for n={n}")


# -- complete graphs ----------------------------------------------------------

def complete_dimension_bounds(g: SignedGraph) -> tuple[int, int]:
    n = g.n
    if g.m != n * (n - 1) // 2:
        raise NotComplete(f"{n} vertices and {g.m} edges is not complete")
    if g.is_homogeneous():
        return (n - 1, n - 1)
    if n == 3:
        return (1, 2)
    return (2, n - 1)
