from itertools import combinations

from hypothesis import strategies as st

from signed_metric.core import build
from signed_metric.families import family_edges
from signed_metric.oracles import sigmas_by_enumeration


def wheel(n, negatives=()):
    neg = {tuple(sorted(e)) for e in negatives}
    return build(n + 1, [(u, v, -1 if (u, v) in neg else 1) for u, v in family_edges("wheel", n)])


def brute_signed_matrix(g):
    """Signed distances from explicit shortest-path enumeration, or None if incompatible."""
    D = {}
    for u in range(g.n):
        for v in range(g.n):
            d, smax, smin = sigmas_by_enumeration(g, u, v)
            if smax != smin:
                return None
            D[u, v] = smax * d
    return D


def brute_resolves(D, n, W):
    return len({tuple(D[v, w] for w in W) for v in range(n)}) == n


def brute_dimension(g):
    D = brute_signed_matrix(g)
    assert D is not None, "graph is incompatible"
    for k in range(1, g.n):
        for W in combinations(range(g.n), k):
            if brute_resolves(D, g.n, W):
                return k
    raise AssertionError


@st.composite
def signed_graphs(draw, min_n=2, max_n=7):
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    others = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    extra = draw(st.lists(st.sampled_from(others), unique=True)) if others else []
    edges.update(extra)
    edges = sorted(edges)
    signs = draw(st.lists(st.sampled_from((1, -1)), min_size=len(edges), max_size=len(edges)))
    return build(n, [(u, v, s) for (u, v), s in zip(edges, signs)])


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
