"""Hop distances, max/min path signs, signed distances and compatibility."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import NEGATIVE, POSITIVE, SignedGraph
from .errors import IncompatibleGraph, TooLarge

ENUMERATION_LIMIT = 12


@dataclass(frozen=True)
class PairDistance:
    d: int
    sigma_max: int
    sigma_min: int

    @property
    def compatible(self) -> bool:
        return self.sigma_max == self.sigma_min

    @property
    def d_max(self) -> int:
        return self.sigma_max * self.d

    @property
    def d_min(self) -> int:
        return self.sigma_min * self.d


@dataclass(frozen=True, eq=False)
class SignedDistanceMatrix:
    """Per-pair hop distance and the max/min sign over all shortest paths.

    ``d``, ``sigma_max`` and ``sigma_min`` are symmetric ``n x n`` integer
    arrays.  The diagonal has ``d = 0`` and both signs ``+1``.
    """

    n: int
    d: np.ndarray
    sigma_max: np.ndarray
    sigma_min: np.ndarray

    def entry(self, u: int, v: int) -> PairDistance:
        return PairDistance(int(self.d[u, v]), int(self.sigma_max[u, v]), int(self.sigma_min[u, v]))

    @property
    def d_max(self) -> np.ndarray:
        return self.sigma_max * self.d

    @property
    def d_min(self) -> np.ndarray:
        return self.sigma_min * self.d

    @property
    def compatible_mask(self) -> np.ndarray:
        return self.sigma_max == self.sigma_min

    def first_incompatible(self) -> Optional[tuple[int, int]]:
        """Lexicographically smallest ``(u, v)``, ``u < v``, with differing signs."""
        bad = np.argwhere(np.triu(~self.compatible_mask, 1))
        if len(bad) == 0:
            return None
        u, v = bad[0]  # argwhere is row-major, hence lexicographic
        return int(u), int(v)

    def signed(self) -> np.ndarray:
        """Common signed distance matrix; requires a compatible graph."""
        witness = self.first_incompatible()
        if witness is not None:
            raise IncompatibleGraph(witness)
        return self.d_max

    def __eq__(self, other):
        if not isinstance(other, SignedDistanceMatrix):
            return NotImplemented
        return (
            self.n == other.n
            and np.array_equal(self.d, other.d)
            and np.array_equal(self.sigma_max, other.sigma_max)
            and np.array_equal(self.sigma_min, other.sigma_min)
        )


def _from_source(g: SignedGraph, u: int):
    """BFS from ``u`` then sign reachability over the shortest-path DAG."""
    n = g.n
    dist = [-1] * n
    dist[u] = 0
    order = [u]
    queue = deque([u])
    while queue:
        x = queue.popleft()
        for w, _ in g.neighbors(x):
            if dist[w] < 0:
                dist[w] = dist[x] + 1
                order.append(w)
                queue.append(w)

    pos = [False] * n
    neg = [False] * n
    pos[u] = True
    # BFS order is a topological order of the shortest-path DAG
    for w in order[1:]:
        level = dist[w] - 1
        p_any = n_any = False
        for p, s in g.neighbors(w):
            if dist[p] != level:
                continue
            if s > 0:
                p_any = p_any or pos[p]
                n_any = n_any or neg[p]
            else:
                p_any = p_any or neg[p]
                n_any = n_any or pos[p]
        pos[w] = p_any
        neg[w] = n_any
    smax = [POSITIVE if pos[w] else NEGATIVE for w in range(n)]
    smin = [NEGATIVE if neg[w] else POSITIVE for w in range(n)]
    return dist, smax, smin


def signed_distances(g: SignedGraph) -> SignedDistanceMatrix:
    d = np.zeros((g.n, g.n), dtype=np.int64)
    smax = np.ones((g.n, g.n), dtype=np.int64)
    smin = np.ones((g.n, g.n), dtype=np.int64)
    for u in range(g.n):
        d[u], smax[u], smin[u] = _from_source(g, u)
    return SignedDistanceMatrix(g.n, d, smax, smin)


def enumerate_shortest_paths(g: SignedGraph, u: int, v: int) -> list[tuple[tuple[int, ...], int]]:
    """Every shortest ``u``-``v`` path with its sign, by iterative deepening.

    Deliberately shares nothing with :func:`signed_distances`; it is the
    definitional oracle.  Exponential, so limited to small graphs.
    """
    if g.n > ENUMERATION_LIMIT:
        raise TooLarge(f"path enumeration limited to {ENUMERATION_LIMIT} vertices, got {g.n}")
    g._check_vertex(u)
    g._check_vertex(v)
    if u == v:
        return [((u,), POSITIVE)]

    for length in range(1, g.n):
        found: list[tuple[tuple[int, ...], int]] = []
        path = [u]
        on_path = {u}

        def extend(sign: int) -> None:
            last = path[-1]
            if len(path) - 1 == length:
                if last == v:
                    found.append((tuple(path), sign))
                return
            for w, s in g.neighbors(last):
                if w in on_path:
                    continue
                path.append(w)
                on_path.add(w)
                extend(sign * s)
                path.pop()
                on_path.discard(w)

        extend(POSITIVE)
        if found:
            return sorted(found)
    raise AssertionError("connected graph without a u-v path")  # unreachable


@dataclass(frozen=True)
class CompatibilityReport:
    compatible: bool
    witness: Optional[tuple[int, int]] = None


def compatibility(g: SignedGraph, dm: SignedDistanceMatrix | None = None) -> CompatibilityReport:
    if dm is None:
        dm = signed_distances(g)
    witness = dm.first_incompatible()
    return CompatibilityReport(witness is None, witness)
