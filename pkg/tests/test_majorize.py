"""Dominance order: frozen examples plus exhaustive small-order laws."""

import pytest

from wtgraph import majorize, seqcore
from wtgraph.errors import InvalidTransformation, NotGraphic, SizeLimit

from _oracles import all_candidate_sequences, all_graphic_sequences


def test_majorizes_examples():
    assert majorize.majorizes((3, 1, 1, 1), (2, 2, 1, 1))
    assert not majorize.majorizes((2, 2, 1, 1), (3, 1, 1, 1))
    assert majorize.majorizes((3, 2, 1), (2, 2, 2))
    assert majorize.majorizes((2, 2), (2, 1, 1))  # zero padding
    assert not majorize.majorizes((2, 1, 1), (2, 2))
    assert not majorize.majorizes((3, 1), (2, 1))  # sums differ
    assert majorize.majorizes((2, 1), (2, 1))


def test_apply_unit_transformation():
    t = majorize.UnitTransformation
    assert majorize.apply_unit_transformation((3, 1, 1, 1), t(1, 2)) == (2, 2, 1, 1)
    assert majorize.apply_unit_transformation((4, 0), t(1, 2)) == (3, 1)
    with pytest.raises(InvalidTransformation):
        majorize.apply_unit_transformation((2, 2), t(1, 2))
    with pytest.raises(InvalidTransformation):
        majorize.apply_unit_transformation((3, 1), t(1, 1))
    with pytest.raises(InvalidTransformation):
        majorize.apply_unit_transformation((3, 1), t(1, 3))


def test_downward_neighbors_examples():
    assert majorize.downward_neighbors((3, 1, 1, 1)) == {(2, 2, 1, 1)}
    assert majorize.downward_neighbors((2, 2, 2)) == set()
    assert majorize.downward_neighbors((4, 2, 0)) == {(3, 3, 0), (3, 2, 1), (4, 1, 1)}


def test_unit_transformation_steps_down():
    for n in range(1, 7):
        for a in all_candidate_sequences(n):
            for b in majorize.downward_neighbors(a):
                assert majorize.majorizes(a, b)
                assert a != b
                assert sum(a) == sum(b)


def test_graphic_preserved_downward():
    for n in range(1, 8):
        for a in all_graphic_sequences(n):
            for b in majorize.downward_neighbors(a):
                assert seqcore.is_graphic(b), (a, b)


def test_durfee_change_under_single_step():
    # one step can raise m by at most one, and then the new last slack
    # of the upper sequence equals the old last slack of the lower one
    for n in range(1, 8):
        for e in all_candidate_sequences(n):
            m_e = seqcore.corrected_durfee(e)
            for d in majorize.downward_neighbors(e):
                m_d = seqcore.corrected_durfee(d)
                if m_d < m_e:
                    assert m_e == m_d + 1, (e, d)
                    assert seqcore.eg_difference(e, m_e) == seqcore.eg_difference(d, m_d), (e, d)


def test_is_majorization_maximal():
    assert majorize.is_majorization_maximal((3, 1, 1, 1))
    assert not majorize.is_majorization_maximal((2, 2, 1, 1))
    assert majorize.is_majorization_maximal((2, 2, 2))
    with pytest.raises(NotGraphic):
        majorize.is_majorization_maximal((3, 3, 1, 1))


def test_threshold_iff_maximal():
    for n in range(1, 7):
        for d in all_graphic_sequences(n):
            assert seqcore.classify(d).threshold == majorize.is_majorization_maximal(d), d


def test_verify_upward_closure():
    for n, total in [(4, 6), (5, 8), (6, 10)]:
        report = majorize.verify_upward_closure(n, total)
        assert report.counterexamples == ()
        assert report.wt_count > 0
    with pytest.raises(SizeLimit):
        majorize.verify_upward_closure(9, 10)


def test_upward_closure_all_small_sums():
    for n in range(1, 7):
        for total in range(0, n * (n - 1) + 1, 2):
            report = majorize.verify_upward_closure(n, total)
            assert report.counterexamples == (), (n, total)
