"""Exponential reference checks used by the verification harness and tests.

Nothing here is used by the production algorithms; each function recomputes
a property from its definition so the fast paths can be compared to it.
"""

from __future__ import annotations

from typing import Iterator

from .core import SignedGraph, cycle_sign
from .distance import SignedDistanceMatrix, enumerate_shortest_paths, signed_distances
from .errors import TooLarge

CYCLE_LIMIT = 10


def simple_cycles(g: SignedGraph) -> Iterator[tuple[int, ...]]:
    """Each simple cycle once: starts at its smallest vertex, second < last."""
    if g.n > CYCLE_LIMIT:
        raise TooLarge(f"cycle enumeration limited to {CYCLE_LIMIT} vertices, got {g.n}")
    for start in g.vertices():
        path = [start]
        on_path = {start}

        def walk(v: int):
            for w, _ in g.neighbors(v):
                if w == start and len(path) >= 3 and path[1] < path[-1]:
                    yield tuple(path)
                elif w > start and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    yield from walk(w)
                    path.pop()
                    on_path.discard(w)

        yield from walk(start)


def balanced_by_cycles(g: SignedGraph) -> bool:
    return all(cycle_sign(g, c) > 0 for c in simple_cycles(g))


def sigmas_by_enumeration(g: SignedGraph, u: int, v: int) -> tuple[int, int, int]:
    """``(d, sigma_max, sigma_min)`` straight from the list of shortest paths."""
    paths = enumerate_shortest_paths(g, u, v)
    signs = {s for _, s in paths}
    d = len(paths[0][0]) - 1
    return d, (1 if 1 in signs else -1), (-1 if -1 in signs else 1)


def compatible_by_cycles(g: SignedGraph, dm: SignedDistanceMatrix | None = None) -> bool:
    """No negative even cycle ``C_2k`` has an antipodal pair at distance ``k``."""
    if dm is None:
        dm = signed_distances(g)
    for c in simple_cycles(g):
        if len(c) % 2 or cycle_sign(g, c) > 0:
            continue
        k = len(c) // 2
        if any(dm.d[c[i], c[i + k]] == k for i in range(k)):
            return False
    return True
