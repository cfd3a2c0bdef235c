"""Degree-sequence layer: frozen values plus exhaustive small-order checks."""

import pytest

from wtgraph import seqcore
from wtgraph.errors import EmptySequence, IndexOutOfRange, RowOverflow

from _oracles import all_candidate_sequences, all_graphic_sequences, havel_hakimi


def test_normalize_sorts():
    assert seqcore.normalize([1, 2, 2, 3]) == (3, 2, 2, 1)
    assert seqcore.normalize([0]) == (0,)
    assert seqcore.normalize([1, 1, 1, 1, 0]) == (1, 1, 1, 1, 0)


def test_normalize_rejects_bad_input():
    with pytest.raises(EmptySequence):
        seqcore.normalize([])
    with pytest.raises(ValueError):
        seqcore.normalize([2, -1])
    with pytest.raises(ValueError):
        seqcore.normalize([1.5, 1.5])


def test_parse_and_format_round_trip():
    assert seqcore.parse_sequence("3,3,2,1,1") == (3, 3, 2, 1, 1)
    assert seqcore.format_sequence((3, 3, 2, 1, 1)) == "3,3,2,1,1"
    with pytest.raises(ValueError):
        seqcore.parse_sequence("x,y")


def test_corrected_durfee_values():
    assert seqcore.corrected_durfee((1, 1, 1, 1, 0)) == 2
    assert seqcore.corrected_durfee((2, 2, 1, 1)) == 2
    assert seqcore.corrected_durfee((7, 7, 3, 3, 3, 3, 2, 1, 1)) == 4
    assert seqcore.corrected_durfee((0,)) == 1
    assert seqcore.corrected_durfee((0, 0, 0)) == 1
    assert seqcore.corrected_durfee((3, 3, 3, 3)) == 4


def test_eg_difference_values():
    assert seqcore.eg_difference((2, 2, 1, 1), 1) == 1
    assert seqcore.eg_difference((2, 2, 1, 1), 2) == 0
    assert seqcore.eg_difference((1, 1, 1, 1, 0), 1) == 2
    assert seqcore.eg_difference((3, 3, 1, 1), 2) == -2


def test_eg_difference_domain():
    with pytest.raises(IndexOutOfRange):
        seqcore.eg_difference((2, 2, 1, 1), 0)
    with pytest.raises(IndexOutOfRange):
        seqcore.eg_difference((2, 2, 1, 1), 3)


def test_eg_profile_values():
    assert seqcore.eg_profile((2, 2, 1, 1)) == seqcore.EgProfile(2, (1, 0))
    assert seqcore.eg_profile((3, 2, 2, 1)) == seqcore.EgProfile(3, (0, 0, 0))
    assert seqcore.eg_profile((7, 7, 3, 3, 3, 3, 2, 1, 1)) == seqcore.EgProfile(4, (1, 0, 2, 2))
    assert seqcore.eg_profile((0,)) == seqcore.EgProfile(1, (0,))


def test_eg_profile_matches_pointwise_calls():
    for n in range(1, 7):
        for d in all_candidate_sequences(n):
            prof = seqcore.eg_profile(d)
            assert prof.m == seqcore.corrected_durfee(d)
            for k in range(1, prof.m + 1):
                assert prof.deltas[k - 1] == seqcore.eg_difference(d, k)


def test_is_graphic_examples():
    assert seqcore.is_graphic((3, 2, 2, 1))
    assert not seqcore.is_graphic((3, 3, 1, 1))
    assert not seqcore.is_graphic((1, 1, 1))


def test_is_graphic_agrees_with_havel_hakimi():
    # exhaustive over entries <= n-1; larger entries separately below
    for n in range(1, 8):
        for d in all_candidate_sequences(n):
            assert seqcore.is_graphic(d) == havel_hakimi(d), d


def test_is_graphic_rejects_oversized_terms():
    for d in [(5, 1, 1, 1), (4, 4, 4, 4), (2, 2), (7, 7, 7, 1)]:
        assert not seqcore.is_graphic(d)
        assert not havel_hakimi(d)


def test_classify_examples():
    c = seqcore.classify((2, 2, 1, 1))
    assert (c.graphic, c.split, c.weakly_threshold, c.threshold) == (True, True, True, False)
    c = seqcore.classify((3, 3, 2, 1, 1))
    assert (c.graphic, c.split, c.weakly_threshold, c.threshold) == (True, True, True, False)
    c = seqcore.classify((2, 2, 2, 2))
    assert (c.graphic, c.split, c.weakly_threshold) == (True, False, False)
    c = seqcore.classify((3, 1, 1, 1))
    assert (c.graphic, c.split, c.weakly_threshold, c.threshold) == (True, True, True, True)


def test_classify_flag_chain():
    for n in range(1, 8):
        for d in all_candidate_sequences(n):
            c = seqcore.classify(d)
            if c.threshold:
                assert c.weakly_threshold
            if c.weakly_threshold:
                assert c.split
            if c.split:
                assert c.graphic


def test_threshold_sequence_count_is_power_of_two():
    for n in range(1, 9):
        count = sum(
            1 for d in all_graphic_sequences(n) if seqcore.classify(d).threshold
        )
        assert count == 2 ** (n - 1), n


def test_ferrers_cells_and_counts():
    diagram = seqcore.ferrers((2, 2, 1, 1))
    assert diagram.below_diagonal_count(1) == 3
    assert diagram.right_of_diagonal_count(1) == 2
    # every row carries exactly d_i ones
    for i, t in enumerate((2, 2, 1, 1)):
        assert sum(1 for c in diagram.cells[i] if c == "1") == t
        assert diagram.cells[i][i] == "*"


def test_ferrers_overflow():
    with pytest.raises(RowOverflow):
        seqcore.ferrers((5, 1, 1, 1))


def test_render_ferrers_frozen():
    assert seqcore.render_ferrers(seqcore.ferrers((1, 0))) == "* 1\n0 *\n"
    assert seqcore.render_ferrers(seqcore.ferrers((0,))) == "*\n"
    assert seqcore.render_ferrers(seqcore.ferrers((2, 2, 1, 1))) == (
        "* 1 1 0\n"
        "1 * 1 0\n"
        "1 0 * 0\n"
        "1 0 0 *\n"
    )
    assert seqcore.render_ferrers(seqcore.ferrers((1, 1, 1, 1, 0))) == (
        "* 1 0 0 0\n"
        "1 * 0 0 0\n"
        "1 0 * 0 0\n"
        "1 0 0 * 0\n"
        "0 0 0 0 *\n"
    )


def test_render_ferrers_nine_vertex_composition():
    text = seqcore.render_ferrers(seqcore.ferrers((7, 7, 3, 3, 3, 3, 2, 1, 1)))
    assert text == (
        "* 1 1 1 1 1 1 1 0\n"
        "1 * 1 1 1 1 1 1 0\n"
        "1 1 * 1 0 0 0 0 0\n"
        "1 1 1 * 0 0 0 0 0\n"
        "1 1 1 0 * 0 0 0 0\n"
        "1 1 1 0 0 * 0 0 0\n"
        "1 1 0 0 0 0 * 0 0\n"
        "1 0 0 0 0 0 0 * 0\n"
        "1 0 0 0 0 0 0 0 *\n"
    )


def test_delta_equals_diagram_counts():
    # slack formula against diagram cell counting, exhaustive n <= 7
    for n in range(1, 8):
        for d in all_candidate_sequences(n):
            diagram = seqcore.ferrers(d)
            m = seqcore.corrected_durfee(d)
            for k in range(1, m + 1):
                lhs = seqcore.eg_difference(d, k)
                rhs = diagram.below_diagonal_count(k) - diagram.right_of_diagonal_count(k)
                assert lhs == rhs, (d, k)


def test_last_delta_even_for_graphic():
    for n in range(1, 9):
        for d in all_graphic_sequences(n):
            prof = seqcore.eg_profile(d)
            assert prof.deltas[-1] % 2 == 0, d
