import pytest
from hypothesis import given, settings, strategies as st

from cointerval_dga import UNIT, Chain, Monomial, build_cointerval
from cointerval_dga.formats import parse_cell, parse_vertex
from cointerval_dga.morse import (
    CRITICAL, LOWER, UPPER, HomotopyError, Vertex, classify_vertex, contracting_homotopy,
    elementary_reduction_paths, homotopy_sets, prec_compare, prec_minimal_edge, precedes,
    strand_morse_acyclicity,
)
from cointerval_dga.resolution import (
    augmentation_chain, differential, enumerate_basis, squarefree_supports, strand_vertices,
)

from conftest import EXAMPLE_INTERVALS


def x(*idx, n=4):
    return Monomial.from_support(n, idx)


def v(s, n=4):
    return parse_vertex(s, n)


def test_prec_examples():
    a, b, c = parse_cell("[1|4]"), parse_cell("[3|4]"), parse_cell("[2|3]")
    assert prec_compare(a, b) == -1 and prec_compare(b, a) == 1
    assert prec_compare(a, c) == -1
    assert prec_compare(a, a) == 0
    assert precedes(parse_cell("[2|3,4]"), parse_cell("[2,3|4]")) is False
    assert prec_compare(parse_cell("[2|3,4]"), parse_cell("[2,3|4]")) == 0   # incomparable


def test_prec_minimal_edge(G):
    assert prec_minimal_edge(G, x(1, 3, 4)) == parse_cell("[1|4]")
    assert prec_minimal_edge(G, x(1, 2)) is None
    assert prec_minimal_edge(G, x(2, 3)) == parse_cell("[2|3]")


def test_homotopy_sets_examples(G):
    s = homotopy_sets(G, x(1, 4), parse_cell("[2|3]"))
    assert (s.C1, s.C2, s.C3) == ({4}, set(), {1})
    assert (s.m1, s.m2, s.m3) == (4, None, 1)
    s = homotopy_sets(G, x(), parse_cell("[2|3]"))
    assert not (s.C1 or s.C2 or s.C3)
    s = homotopy_sets(G, x(4), parse_cell("[2|3]"))
    assert s.C1 == {4} and not s.C3


def test_homotopy_examples(G):
    h = contracting_homotopy(G, v("x1*x3*x4"))
    assert str(h) == "x3*[1|4]"
    h = contracting_homotopy(G, v("x1*x4*[2|3]"))
    assert str(h) == "x1*[2|3,4] + x3*[1,2|4]"
    assert not contracting_homotopy(G, v("x2*x3*[1|4]"))
    assert not contracting_homotopy(G, v("[2|3,4]"))
    assert not contracting_homotopy(G, v("x1*x2"))


def test_homotopy_on_chains_is_linear(G):
    a = Chain.basis_element(4, parse_cell("[2|3]"), x(1, 4))
    b = Chain.basis_element(4, parse_cell("[3|4]"), x(1, 4), coefficient=-2)
    assert contracting_homotopy(G, a + b) == contracting_homotopy(G, a) - 2 * contracting_homotopy(
        G, Chain.basis_element(4, parse_cell("[3|4]"), x(1, 4)))


def test_classify_examples(G):
    m = classify_vertex(G, v("x4*[2|3]"))
    assert (m.polarity, m.rule, str(m.partner)) == (LOWER, "M1", "[2|3,4]")
    m = classify_vertex(G, v("[2|3,4]"))
    assert (m.polarity, m.rule, str(m.partner)) == (UPPER, "M1", "x4*[2|3]")
    assert classify_vertex(G, v("x1*x2")).polarity == CRITICAL
    assert str(classify_vertex(G, v("x1*x4*[2|3]"))) == "Lower(M1) partner x1*[2|3,4]"
    assert classify_vertex(G, v("x1*x2")).to_json() == {"polarity": "critical", "rule": None,
                                                       "partner": None}


def test_acyclicity_examples(G):
    assert strand_morse_acyclicity(G, {1, 2, 3, 4})
    assert strand_morse_acyclicity(G, set())
    assert strand_morse_acyclicity(G, x(1, 2, 4) * x(1, 4))


def test_reduction_paths_descend(G):
    paths = list(elementary_reduction_paths(G, x(1, 2, 3, 4)))
    assert paths
    for hi, _, lo in paths:
        assert precedes(lo.cell, hi.cell)


# -- identities over a family ------------------------------------------------

def _strand_vertices_all(H, bound):
    """Every strand vertex with exponents <= bound."""
    from itertools import product
    for exps in product(range(bound + 1), repeat=H.n):
        alpha = Monomial(exps)
        for d, verts in strand_vertices(H, alpha).items():
            for m, e in verts:
                yield d, Vertex(m, e)


def test_homotopy_identities_family(family4):
    for H in family4:
        for d, u in _strand_vertices_all(H, 1):
            one = Chain.basis_element(H.n, u.cell, u.monomial)
            cu = contracting_homotopy(H, u)
            cls = classify_vertex(H, u)
            assert bool(cu) == (cls.polarity == LOWER), (H, u)
            assert not contracting_homotopy(H, cu), (H, u)
            if cu:
                assert cu.degree == d + 1
                assert cu.multidegrees() == {u.monomial * u.cell.multidegree(H.n)}
                assert cu.coefficient(cls.partner.monomial, cls.partner.cell) in (1, -1)
                for t in cu:
                    assert classify_vertex(H, Vertex(t.monomial, t.basis)).polarity == UPPER
            if d == 0:
                lhs = differential(H, cu) if cu else Chain.zero(0)
                assert lhs == one - augmentation_chain(H, one), (H, u)
            else:
                lhs = (differential(H, cu) if cu else Chain.zero(d)) + contracting_homotopy(
                    H, differential(H, one))
                assert lhs == one, (H, u)


def test_matching_is_involution(family4):
    for H in family4:
        for _, u in _strand_vertices_all(H, 1):
            cls = classify_vertex(H, u)
            if cls.polarity == CRITICAL:
                assert u.cell.is_unit and not H.in_edge_ideal(u.monomial)
                continue
            back = classify_vertex(H, cls.partner)
            assert back.partner == u and back.rule == cls.rule
            assert {back.polarity, cls.polarity} == {LOWER, UPPER}


def test_basis_elements_killed(family5):
    for H in family5:
        for d in range(1, 4):
            for e in enumerate_basis(H, d):
                assert not contracting_homotopy(H, Chain.basis_element(H.n, e))


def test_acyclicity_family(family4):
    for H in family4:
        for S in squarefree_supports(H.n):
            assert strand_morse_acyclicity(H, S), (H, S)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(0, 2), min_size=4, max_size=4))
def test_homotopy_identity_random_strands(exps):
    G = build_cointerval(EXAMPLE_INTERVALS)
    alpha = Monomial(exps)
    for d, verts in strand_vertices(G, alpha).items():
        for m, e in verts:
            one = Chain.basis_element(4, e, m)
            cu = contracting_homotopy(G, one)
            if d == 0:
                got = differential(G, cu) if cu else Chain.zero(0)
                assert got == one - augmentation_chain(G, one)
            else:
                got = contracting_homotopy(G, differential(G, one))
                if cu:
                    got = got + differential(G, cu)
                assert got == one


def test_invalid_vertex_rejected(G):
    with pytest.raises(ValueError):
        classify_vertex(G, (x(), parse_cell("[1|3]")))
    assert issubclass(HomotopyError, AssertionError)
    assert classify_vertex(G, (x(1, 2), UNIT)).polarity == CRITICAL
