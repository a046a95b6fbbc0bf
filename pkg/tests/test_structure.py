import pytest

from lltgraphs import (
    NoncommutingPath,
    apply_move,
    apply_moves,
    canonical_form,
    find_minimal_ncp,
    is_nesting,
    is_strict_pair,
    llt_poly,
    local_rotate,
    m_ij,
    parse_strip,
    pi_graph,
    prec,
    similarity_witness,
    strict_pairs,
    strict_sequences,
)
from lltgraphs.errors import (
    BlockNotSeparable,
    GraphsNotIsomorphic,
    HypothesisViolated,
    IndexOutOfRange,
    PreconditionViolated,
)
from lltgraphs.strips import HorizontalStrip, Row
from lltgraphs.structure import is_minimal_ncp, is_noncommuting_path

from oracle import raw_strict_sequences


def strip_of(pairs):
    return HorizontalStrip(tuple(Row(a, b) for a, b in pairs))


# ---- noncommuting paths ------------------------------------------------------

def test_path_type_validates_indices():
    p = NoncommutingPath((1, 3, 5))
    assert p.endpoints == (1, 5)
    with pytest.raises(ValueError):
        NoncommutingPath((1, 2))
    with pytest.raises(ValueError):
        NoncommutingPath((1, 3, 3))


def test_five_row_chain_is_minimal():
    strip = parse_strip("6/0,7/5,6/3,4/1,8/3")
    p = find_minimal_ncp(strip, 1, 5)
    assert p == NoncommutingPath((1, 2, 3, 4, 5))
    assert is_minimal_ncp(strip, p.indices)
    assert is_noncommuting_path(strip, p.indices)
    # no interior subset survives
    assert not is_noncommuting_path(strip, (1, 2, 5))
    assert not is_noncommuting_path(strip, (1, 4, 5))


def test_no_path_between_commuting_far_rows():
    strip = parse_strip("1/0,3/2,5/4")
    assert find_minimal_ncp(strip, 1, 3) is None


def test_find_minimal_ncp_validates_endpoints():
    strip = parse_strip("1/0,3/2,5/4")
    with pytest.raises(IndexOutOfRange):
        find_minimal_ncp(strip, 2, 2)
    with pytest.raises(IndexOutOfRange):
        find_minimal_ncp(strip, 1, 4)


def test_shortest_chain_beats_longer_detour():
    # rows 1 and 3 commute but both fight row 2
    strip = strip_of([(0, 1), (2, 3), (5, 6), (3, 4)])
    p = find_minimal_ncp(strip, 1, 4)
    assert p is not None
    assert p.endpoints == (1, 4)
    assert is_minimal_ncp(strip, p.indices)


# ---- strict pairs ------------------------------------------------------------

def test_partial_overlap_is_strict():
    strip = strip_of([(0, 4), (3, 8)])
    assert is_strict_pair(strip, 1, 2)


def test_glued_zero_overlap_pair_is_strict():
    # two disjoint rows welded together by a third covering both
    strip = strip_of([(1, 5), (6, 11), (4, 7)])
    assert m_ij(strip, 1, 2) == 0
    assert m_ij(strip, 1, 3) + m_ij(strip, 2, 3) == strip.sizes[2] + 1
    assert strict_pairs(strip) == [(1, 2), (1, 3)]
    assert not is_nesting(strip)


def test_glued_pair_derived_instance():
    strip = strip_of([(0, 1), (2, 4), (0, 3)])
    assert strict_pairs(strip) == [(1, 2)]


def test_far_apart_rows_are_not_strict():
    strip = parse_strip("1/0,5/4")
    assert strict_pairs(strip) == []


def test_strict_needs_left_start():
    strip = strip_of([(6, 11), (1, 5), (4, 7)])
    assert not is_strict_pair(strip, 1, 2)


def test_strict_pairs_do_not_commute(sweep_main):
    from lltgraphs.strips import m_pair

    for strip in sweep_main:
        for i, j in strict_pairs(strip):
            ri, rj = strip.rows[i - 1], strip.rows[j - 1]
            assert m_pair(ri, rj) != m_pair(rj, ri), (strip.literal, i, j)


# ---- strict sequences ----------------------------------------------------------

def test_six_link_chain_with_spanning_witness():
    strip = strip_of(
        [(0, 2), (3, 7), (8, 9), (10, 13), (14, 16), (17, 20), (1, 18)]
    )
    assert strict_sequences(strip) == [((1, 2, 3, 4, 5, 6), 7)]


def test_two_link_chain_with_witness_above():
    strip = strip_of([(0, 0), (1, 2), (0, 1)])
    assert strict_sequences(strip) == [((1, 2), 3)]


def test_two_row_strip_has_no_sequences():
    assert strict_sequences(parse_strip("3/0,9/3")) == []


def test_chain_characterization_matches_raw_definition_spotwise():
    cases = [
        [(0, 2), (3, 7), (8, 9), (10, 13), (14, 16), (17, 20), (1, 18)],
        [(0, 0), (1, 2), (0, 1)],
        [(1, 5), (6, 11), (4, 7)],
        [(0, 1), (2, 4), (0, 3)],
        [(0, 2), (4, 5), (0, 5)],
    ]
    for pairs in cases:
        strip = strip_of(pairs)
        got = strict_sequences(strip)
        raw = raw_strict_sequences(pairs)
        assert bool(got) == bool(raw), pairs
        for item in got:
            assert item in raw, (pairs, item)


# ---- nesting -------------------------------------------------------------------

def test_twelve_row_nested_family():
    strip = strip_of(
        [
            (2, 3),
            (0, 2),
            (0, 3),
            (4, 5),
            (6, 7),
            (4, 7),
            (11, 12),
            (10, 12),
            (8, 12),
            (0, 12),
            (0, 12),
            (0, 12),
        ]
    )
    assert is_nesting(strip)


def test_disjoint_rows_with_slack_are_nesting():
    assert is_nesting(parse_strip("1/0,5/4"))


def test_glued_configuration_is_not_nesting():
    assert not is_nesting(strip_of([(1, 5), (6, 11), (4, 7)]))


def test_prec_is_transitive_on_the_nested_family():
    strip = strip_of(
        [
            (2, 3),
            (0, 2),
            (0, 3),
            (4, 5),
            (6, 7),
            (4, 7),
            (11, 12),
            (10, 12),
            (8, 12),
            (0, 12),
            (0, 12),
            (0, 12),
        ]
    )
    n = strip.n
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            for c in range(1, n + 1):
                if len({a, b, c}) == 3 and prec(strip, a, b) and prec(strip, b, c):
                    assert prec(strip, a, c), (a, b, c)


def test_nested_minimal_path_runs_head_to_tail():
    strip = strip_of(
        [
            (2, 3),
            (0, 2),
            (0, 3),
            (4, 5),
            (6, 7),
            (4, 7),
            (11, 12),
            (10, 12),
            (8, 12),
            (0, 12),
            (0, 12),
            (0, 12),
        ]
    )
    # rows 1 and 5 commute with zero overlap; any minimal path between
    # them must chain end to end
    p = find_minimal_ncp(strip, 1, 5)
    assert p == NoncommutingPath((1, 4, 5))
    for a, b in zip(p.indices, p.indices[1:]):
        assert strip.rows[b - 1].lo == strip.rows[a - 1].hi + 1


# ---- local rotation --------------------------------------------------------------

def test_rotating_nested_pair_is_identity():
    strip = parse_strip("1/0,2/1")
    assert local_rotate(strip, 2) == strip


def test_rotating_uneven_pair_reflects_contents():
    assert local_rotate(parse_strip("1/0,3/1"), 2) == parse_strip("2/0,3/2")


def test_rotation_preserves_graph_and_polynomial():
    strip = parse_strip("1/0,3/1")
    out = local_rotate(strip, 2)
    assert canonical_form(pi_graph(out)) == canonical_form(pi_graph(strip))
    assert llt_poly(out, 2) == llt_poly(strip, 2)


def test_rotation_validates_position_and_adjacency():
    with pytest.raises(IndexOutOfRange):
        local_rotate(parse_strip("1/0,2/1"), 1)
    with pytest.raises(PreconditionViolated):
        local_rotate(parse_strip("1/0,3/2"), 2)


def test_rotation_rejects_one_sided_overlap():
    # row 3 overlaps the right half of the pair only, in the forbidden
    # direction
    with pytest.raises(HypothesisViolated) as info:
        local_rotate(parse_strip("1/0,2/1,3/1"), 2)
    assert info.value.condition == 3
    assert info.value.row == 3


# ---- similarity witnesses ---------------------------------------------------------

def test_witness_for_nested_swap():
    moves = similarity_witness(parse_strip("2/0,2/1"), parse_strip("2/1,2/0"))
    assert moves == [("commute_swap", 1)]


def test_witness_for_equal_strips_is_empty():
    lam = parse_strip("4/0,5/4,8/5,6/1")
    assert similarity_witness(lam, lam) == []


def test_witness_rejects_different_graphs():
    with pytest.raises(GraphsNotIsomorphic):
        similarity_witness(parse_strip("1/0"), parse_strip("2/0"))


def test_witness_for_running_pair_replays_exactly():
    lam = parse_strip("4/0,5/4,8/5,6/1")
    mu = parse_strip("5/4,9/5,7/2,3/0")
    moves = similarity_witness(lam, mu)
    assert moves is not None
    baseline = llt_poly(lam, 4)
    current = lam
    for move in moves:
        current = apply_move(current, move)
        assert llt_poly(current, 4) == baseline, move
    assert current == mu
    assert apply_moves(lam, moves) == mu


def test_witness_budget_exhaustion_returns_none():
    lam = parse_strip("4/0,5/4,8/5,6/1")
    mu = parse_strip("5/4,9/5,7/2,3/0")
    assert similarity_witness(lam, mu, budget=2) is None
