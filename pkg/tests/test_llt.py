import pytest

from lltgraphs import (
    QPoly,
    gamma_graph,
    inversions,
    llt_poly,
    parse_strip,
    to_basis,
    two_row_schur,
)
from lltgraphs.errors import NotUnicellular, PreconditionViolated, ZeroPolynomial
from lltgraphs.llt import llt_via_colourings, top_q_degree, validate_tableau
from lltgraphs.qsymfunc import SymFunc

from oracle import brute_inversions, brute_llt

RUNNING = "4/0,5/4,8/5,6/1"


def _poly_as_nested_dict(f):
    return {exps: dict(c.pairs()) for exps, c in f.terms()}


def test_validate_tableau_checks_shape_and_rows():
    lam = parse_strip(RUNNING)
    validate_tableau(lam, ((1, 2, 2, 3), (5,), (1, 1, 3), (1, 4, 4, 4, 5)))
    with pytest.raises(ValueError):
        validate_tableau(lam, ((1, 2), (5,), (1, 1, 3), (1, 4, 4, 4, 5)))
    with pytest.raises(ValueError):
        validate_tableau(lam, ((2, 1, 2, 3), (5,), (1, 1, 3), (1, 4, 4, 4, 5)))


def test_inversion_counts_of_worked_fillings():
    lam = parse_strip(RUNNING)
    assert inversions(lam, ((1, 2, 2, 3), (5,), (1, 1, 3), (1, 4, 4, 4, 5))) == 5
    assert inversions(lam, ((4, 4, 4, 4), (3,), (1, 1, 1), (2, 2, 2, 2, 2))) == 6


def test_inversions_match_cell_pair_scan():
    strips = ["2/0,3/1", "1/0,1/0,2/1", "3/0,3/2,4/1"]
    from itertools import combinations_with_replacement, product

    for literal in strips:
        strip = parse_strip(literal)
        rows = [(r.lo, r.hi) for r in strip.rows]
        fillings = [
            list(combinations_with_replacement(range(1, 4), r.size))
            for r in strip.rows
        ]
        for tableau in product(*fillings):
            assert inversions(strip, tableau) == brute_inversions(rows, tableau)


@pytest.mark.parametrize(
    "literal,k",
    [
        ("2/0", 2),
        ("1/0,1/0", 2),
        ("2/0,2/1", 3),
        ("1/0,2/1,2/0", 2),
        ("3/0,3/2", 3),
        ("4/0,5/4", 2),
    ],
)
def test_llt_poly_matches_brute_enumeration(literal, k):
    strip = parse_strip(literal)
    rows = [(r.lo, r.hi) for r in strip.rows]
    assert _poly_as_nested_dict(llt_poly(strip, k)) == brute_llt(rows, k)


def test_llt_poly_defaults_to_row_count():
    strip = parse_strip("2/0,2/1")
    assert llt_poly(strip) == llt_poly(strip, 2)


def test_llt_poly_is_symmetric():
    f = llt_poly(parse_strip("3/0,3/2,4/1"), 3)
    assert f.is_symmetric()


def test_top_degree_is_total_edge_weight(sweep_main, sweep_main_polys):
    from lltgraphs import total_edge_weight

    for strip, f in zip(sweep_main, sweep_main_polys):
        assert top_q_degree(f) == total_edge_weight(strip)


def test_top_degree_of_zero_polynomial_raises():
    with pytest.raises(ZeroPolynomial):
        top_q_degree(SymFunc.zero(2, 3))


def test_two_row_formula_smallest_case():
    exp = two_row_schur(2, 1, 1)
    assert dict(exp.items()) == {(3,): QPoly.one(), (2, 1): QPoly.q_power(1)}


def test_two_row_formula_caps_q_at_edge_weight():
    exp = two_row_schur(3, 2, 1)
    assert dict(exp.items()) == {
        (5,): QPoly.one(),
        (4, 1): QPoly.q_power(1),
        (3, 2): QPoly.q_power(1),
    }


def test_two_row_formula_preconditions():
    with pytest.raises(PreconditionViolated):
        two_row_schur(1, 2, 1)
    with pytest.raises(PreconditionViolated):
        two_row_schur(3, 2, 3)
    with pytest.raises(PreconditionViolated):
        two_row_schur(3, 2, -1)


def test_gamma_graph_of_five_cell_pair():
    lam = parse_strip("2/1,1/0,1/0,2/1,2/1")
    mu = parse_strip("1/0,2/1,2/1,1/0,2/1")
    g_lam = gamma_graph(lam)
    g_mu = gamma_graph(mu)
    assert g_lam.edges == frozenset(
        {(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)}
    )
    assert g_mu.edges == frozenset(
        {(1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (4, 5)}
    )
    assert g_lam.degree_multiset() == (4, 2, 2, 2, 2)
    assert g_mu.degree_multiset() == (3, 3, 3, 2, 1)


def test_gamma_graph_rejects_wide_rows():
    with pytest.raises(NotUnicellular):
        gamma_graph(parse_strip(RUNNING))


def test_colouring_route_agrees_with_tableau_route(sweep_uni):
    for strip in sweep_uni:
        assert llt_via_colourings(gamma_graph(strip), 3) == llt_poly(strip, 3)


def test_running_example_top_coefficient():
    lam = parse_strip(RUNNING)
    exp = to_basis(llt_poly(lam, 4), "s")
    # the lone highest-q term sits on the sorted row sizes
    assert exp.coeff((5, 4, 3, 1)) == QPoly.q_power(6)
