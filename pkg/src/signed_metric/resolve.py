"""Metric representations, resolving sets and exact metric dimension."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, islice
from typing import Iterator, Optional, Sequence

import numpy as np

from .core import SignedGraph
from .distance import SignedDistanceMatrix, signed_distances
from .errors import (
    BadSize,
    DuplicateLandmark,
    EmptyLandmarks,
    SizeCapExceeded,
)

DEFAULT_CAP = 16
_CHUNK = 8192
_INT_LIMIT = 1 << 62


@dataclass(frozen=True)
class MetricRepresentation:
    vertex: int
    landmarks: tuple[int, ...]
    coords: tuple[int, ...]


@dataclass(frozen=True)
class ResolutionResult:
    dimension: int
    basis: tuple[int, ...]
    representations: tuple[MetricRepresentation, ...]
    dim_underlying: int

    @property
    def mdd(self) -> int:
        return self.dim_underlying - self.dimension


def _landmarks(g: SignedGraph, W: Sequence[int]) -> tuple[int, ...]:
    W = tuple(W)
    if not W:
        raise EmptyLandmarks("landmark set is empty")
    for w in W:
        g._check_vertex(w)
    if len(set(W)) != len(W):
        raise DuplicateLandmark(f"landmark list {list(W)} repeats a vertex")
    return W


def representation(g: SignedGraph, dm: SignedDistanceMatrix, v: int, W: Sequence[int]) -> MetricRepresentation:
    g._check_vertex(v)
    W = _landmarks(g, W)
    S = dm.signed()
    return MetricRepresentation(v, W, tuple(int(S[v, w]) for w in W))


def colliding_pair(g: SignedGraph, dm: SignedDistanceMatrix, W: Sequence[int]) -> Optional[tuple[int, int]]:
    """Lexicographically smallest pair of vertices sharing a representation."""
    W = _landmarks(g, W)
    S = dm.signed()
    first_seen: dict[tuple[int, ...], int] = {}
    best = None
    for v in range(g.n):
        key = tuple(int(S[v, w]) for w in W)
        if key in first_seen:
            pair = (first_seen[key], v)
            if best is None or pair < best:
                best = pair
        else:
            first_seen[key] = v
    return best


def is_resolving(g: SignedGraph, dm: SignedDistanceMatrix, W: Sequence[int]) -> bool:
    return colliding_pair(g, dm, W) is None


def _resolving_mask(S: np.ndarray, combos: np.ndarray) -> np.ndarray:
    """For each row of ``combos`` (landmark subsets), whether it resolves.

    Each vertex's representation is folded into one integer label per
    subset; labels are renumbered whenever the next fold could overflow.
    """
    n = S.shape[0]
    base = 2 * n + 1
    cols = S[:, combos] + n  # (n, C, k), values in 0..2n
    labels = cols[:, :, 0].T.copy()  # (C, n)
    for j in range(1, combos.shape[1]):
        if int(labels.max()) * base + base >= _INT_LIMIT:
            _, inverse = np.unique(labels, return_inverse=True)
            labels = inverse.reshape(labels.shape)
        labels = labels * base + cols[:, :, j].T
    labels.sort(axis=1)
    return ~(labels[:, 1:] == labels[:, :-1]).any(axis=1)


def _resolving_subsets(S: np.ndarray, k: int) -> Iterator[tuple[int, ...]]:
    """Resolving ``k``-subsets in lexicographic order."""
    n = S.shape[0]
    source = combinations(range(n), k)
    while True:
        chunk = list(islice(source, _CHUNK))
        if not chunk:
            return
        combos = np.array(chunk, dtype=np.int64)
        for i in np.flatnonzero(_resolving_mask(S, combos)):
            yield chunk[i]


def _minimum_basis(S: np.ndarray) -> tuple[int, ...]:
    n = S.shape[0]
    for k in range(1, n):
        for subset in _resolving_subsets(S, k):
            return subset
    raise AssertionError("V minus one vertex always resolves")  # unreachable


@lru_cache(maxsize=4096)
def _underlying_dimension(n: int, edges: tuple) -> int:
    g = SignedGraph(n, edges, (1,) * len(edges))
    return len(_minimum_basis(signed_distances(g).d))


def _check_size(g: SignedGraph, cap: int) -> None:
    if g.n < 2:
        raise BadSize("metric dimension needs at least two vertices")
    if g.n > cap:
        raise SizeCapExceeded(g.n, cap)


def underlying_dimension(g: SignedGraph, cap: int = DEFAULT_CAP) -> int:
    """Metric dimension of the unsigned graph (via its all-positive copy)."""
    _check_size(g, cap)
    return _underlying_dimension(g.n, g.edges)


def metric_dimension(g: SignedGraph, cap: int = DEFAULT_CAP, dm: SignedDistanceMatrix | None = None) -> ResolutionResult:
    """Exact metric dimension by subset enumeration in increasing size.

    The basis returned is the lexicographically first resolving subset of
    minimum size.  Raises :class:`IncompatibleGraph` or
    :class:`SizeCapExceeded`.
    """
    _check_size(g, cap)
    if dm is None:
        dm = signed_distances(g)
    S = dm.signed()
    basis = _minimum_basis(S)
    reps = tuple(
        MetricRepresentation(v, basis, tuple(int(S[v, w]) for w in basis)) for v in range(g.n)
    )
    return ResolutionResult(len(basis), basis, reps, _underlying_dimension(g.n, g.edges))


def dimension(g: SignedGraph, cap: int = DEFAULT_CAP, dm: SignedDistanceMatrix | None = None) -> int:
    _check_size(g, cap)
    if dm is None:
        dm = signed_distances(g)
    return len(_minimum_basis(dm.signed()))


def all_bases(g: SignedGraph, k: int, cap: int = DEFAULT_CAP, dm: SignedDistanceMatrix | None = None) -> list[tuple[int, ...]]:
    """Every resolving ``k``-subset, in lexicographic order."""
    _check_size(g, cap)
    if not 1 <= k <= g.n:
        raise BadSize(f"subset size {k} outside 1..{g.n}")
    if dm is None:
        dm = signed_distances(g)
    return list(_resolving_subsets(dm.signed(), k))
