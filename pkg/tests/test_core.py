import pytest
from hypothesis import given, settings

from signed_metric.core import (
    as_sign,
    build,
    cycle_sign,
    is_balanced,
    k_neighborhood,
    negate,
    net_degree,
)
from signed_metric.distance import signed_distances
from signed_metric.errors import (
    BadSign,
    Disconnected,
    DuplicateEdge,
    NotACycle,
    SelfLoop,
    VertexOutOfRange,
)
from signed_metric.families import FamilySpec, family_graph, generate
from signed_metric.fixtures import FIXTURES
from signed_metric.oracles import balanced_by_cycles

from .conftest import signed_graphs


def test_build_p2():
    g = build(2, [(0, 1, "+")])
    assert g.n == 2 and g.edges == ((0, 1),) and g.signs == (1,)


def test_build_k3_one_negative():
    g = build(3, [(0, 1, 1), (1, 2, 1), (0, 2, -1)])
    assert g.sign(2, 0) == -1
    assert g.edges == ((0, 1), (0, 2), (1, 2))


@pytest.mark.parametrize(
    "n, edges, exc",
    [
        (4, [(0, 1, 1), (2, 3, 1)], Disconnected),
        (3, [(0, 1, 1), (1, 0, -1), (1, 2, 1)], DuplicateEdge),
        (2, [(0, 0, 1), (0, 1, 1)], SelfLoop),
        (2, [(0, 2, 1)], VertexOutOfRange),
        (2, [(0, 1, 0)], BadSign),
    ],
)
def test_build_errors(n, edges, exc):
    with pytest.raises(exc):
        build(n, edges)


def test_error_classes_are_distinct():
    assert len({Disconnected, DuplicateEdge, SelfLoop, VertexOutOfRange}) == 4


def test_as_sign():
    assert as_sign("+") == 1 and as_sign("-") == -1 and as_sign(-1) == -1
    with pytest.raises(BadSign):
        as_sign(True)


def test_negate_examples():
    k3 = family_graph("complete", 3, "+++")
    assert negate(k3).signs == (-1, -1, -1)
    p3 = family_graph("path", 3, "+-")
    assert negate(p3) == family_graph("path", 3, "-+")
    fig1 = FIXTURES["fig1_w9"].graph
    assert negate(negate(fig1)) == fig1


def test_net_degree_examples():
    c = family_graph("cycle", 4, "+-++")
    assert net_degree(c, 1).d_net == 0
    k3 = build(3, [(0, 1, 1), (1, 2, 1), (0, 2, -1)])
    assert net_degree(k3, 0).d_net == 0
    star = generate(FamilySpec("star", 4))
    nd = net_degree(star, 0)
    assert (nd.d_plus, nd.d_minus, nd.d_net) == (4, 0, 4)
    with pytest.raises(VertexOutOfRange):
        net_degree(star, 9)


def test_k_neighborhood_examples():
    c5 = generate(FamilySpec("cycle", 5))
    dm = signed_distances(c5)
    assert k_neighborhood(c5, dm, 0, 1) == {1, 4}
    assert k_neighborhood(c5, dm, 0, 2) == {2, 3}
    p4 = generate(FamilySpec("path", 4))
    assert k_neighborhood(p4, signed_distances(p4), 0, 3) == {3}


def test_cycle_sign_examples():
    k3 = build(3, [(0, 1, 1), (1, 2, 1), (0, 2, -1)])
    assert cycle_sign(k3, [0, 1, 2]) == -1
    assert cycle_sign(k3, [0, 1, 2, 0]) == -1
    assert cycle_sign(family_graph("cycle", 4, "++++"), [0, 1, 2, 3]) == 1
    assert cycle_sign(family_graph("cycle", 4, "+-+-"), [0, 1, 2, 3]) == 1
    with pytest.raises(NotACycle):
        cycle_sign(family_graph("cycle", 4, "++++"), [0, 2, 1, 3])
    with pytest.raises(NotACycle):
        cycle_sign(k3, [0, 1])


def test_is_balanced_examples():
    assert is_balanced(generate(FamilySpec("wheel", 5)))
    assert not is_balanced(family_graph("cycle", 4, "-+++"))
    assert is_balanced(family_graph("star", 4, "+--+"))
    assert is_balanced(FIXTURES["fig3_tree"].graph)


@given(signed_graphs())
def test_negate_preserves_structure(g):
    h = negate(g)
    assert h.n == g.n and h.edges == g.edges
    assert all(h.degree(v) == g.degree(v) for v in g.vertices())
    assert negate(h) == g


@given(signed_graphs())
def test_net_degree_sum(g):
    total = sum(net_degree(g, v).d_net for v in g.vertices())
    pos = sum(1 for s in g.signs if s > 0)
    assert total == 2 * (pos - (g.m - pos))
    for v in g.vertices():
        nd = net_degree(g, v)
        assert nd.d_plus + nd.d_minus == g.degree(v)
        assert (nd.d_net - g.degree(v)) % 2 == 0


@given(signed_graphs())
def test_k_neighborhoods_partition(g):
    dm = signed_distances(g)
    for v in g.vertices():
        ecc = int(dm.d[v].max())
        rings = [k_neighborhood(g, dm, v, k) for k in range(1, ecc + 1)]
        assert sum(len(r) for r in rings) == g.n - 1
        assert set().union(*rings) == set(g.vertices()) - {v}


@settings(max_examples=300)
@given(signed_graphs(max_n=7))
def test_balance_matches_cycle_enumeration(g):
    assert is_balanced(g) == balanced_by_cycles(g)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_negation_flips_balance_of_odd_cycles(n):
    from itertools import product

    for signs in product((1, -1), repeat=n):
        g = family_graph("cycle", n, signs)
        assert is_balanced(negate(g)) != is_balanced(g)


@pytest.mark.parametrize("n", [4, 6])
def test_negation_keeps_even_cycle_sign(n):
    from itertools import product

    cyc = list(range(n))
    for signs in product((1, -1), repeat=n):
        g = family_graph("cycle", n, signs)
        assert cycle_sign(negate(g), cyc) == cycle_sign(g, cyc)
