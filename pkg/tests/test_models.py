"""Tests for the walk models, their DP and the brute-force oracle."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from knoedel.models import (
    BETA,
    WalkModel,
    brute_force_distribution,
    dp_distribution,
    dp_table,
    format_state,
    parse_state,
    residue_class,
    state_sort_key,
)

probabilities = st.fractions(
    min_value=Fraction(1, 50), max_value=Fraction(49, 50), max_denominator=50
)


def test_double_large_transitions():
    m = WalkModel.double_large()
    assert m.transitions(0) == [(2, Fraction(1, 3)), (BETA, Fraction(2, 3))]
    assert m.transitions(3) == [(5, Fraction(1, 3)), (2, Fraction(2, 3))]
    assert m.transitions(1) == [(3, Fraction(1, 3)), (0, Fraction(2, 3))]
    assert m.transitions(BETA) == [(1, Fraction(1))]


def test_double_small_transitions():
    m = WalkModel.double_small()
    assert m.transitions(0) == [(1, Fraction(1))]
    assert m.transitions(1) == [(2, Fraction(2, 3)), (BETA, Fraction(1, 3))]
    assert m.transitions(4) == [(5, Fraction(2, 3)), (2, Fraction(1, 3))]
    assert m.transitions(BETA) == [(0, Fraction(1))]


def test_step_matches_transitions():
    for model in (WalkModel.double_large(), WalkModel.double_small()):
        for state in [0, 1, 2, 5, BETA]:
            targets = dict(model.transitions(state))
            assert model.step(state, True) in targets
            assert model.step(state, False) in targets


def test_walk_model_validation():
    with pytest.raises(ValueError):
        WalkModel.double_large(Fraction(0))
    with pytest.raises(ValueError):
        WalkModel.double_large(Fraction(1))
    with pytest.raises(ValueError):
        WalkModel.double_small(Fraction(3, 2))


def test_balanced_flag():
    assert WalkModel.double_large().is_balanced
    assert WalkModel.double_small().is_balanced
    assert not WalkModel.double_large(Fraction(1, 2)).is_balanced
    assert not WalkModel.double_small(Fraction(1, 3)).is_balanced


def test_double_large_early_rows():
    rows = dp_table(WalkModel.double_large(), 4)
    assert rows[0].probabilities == {0: Fraction(1)}
    assert rows[1].probabilities == {2: Fraction(1, 3), BETA: Fraction(2, 3)}
    assert rows[2].probabilities == {4: Fraction(1, 9), 1: Fraction(8, 9)}
    assert rows[3].probabilities == {
        6: Fraction(1, 27),
        3: Fraction(10, 27),
        0: Fraction(16, 27),
    }
    assert rows[4].probabilities == {
        8: Fraction(1, 81),
        5: Fraction(12, 81),
        2: Fraction(36, 81),
        BETA: Fraction(32, 81),
    }


def test_double_small_early_rows():
    rows = dp_table(WalkModel.double_small(), 6)
    assert rows[1].probabilities == {1: Fraction(1)}
    assert rows[2].probabilities == {2: Fraction(2, 3), BETA: Fraction(1, 3)}
    assert rows[3].probabilities == {3: Fraction(4, 9), 0: Fraction(5, 9)}
    assert rows[4].probabilities == {4: Fraction(8, 27), 1: Fraction(19, 27)}
    assert rows[5].probabilities == {
        5: Fraction(16, 81),
        2: Fraction(46, 81),
        BETA: Fraction(19, 81),
    }
    assert rows[6].prob(0) == Fraction(103, 243)


def test_dp_distribution_returns_requested_step():
    dist = dp_distribution(WalkModel.double_large(), 3)
    assert dist.step == 3
    assert dist.prob(0) == Fraction(16, 27)


def test_brute_force_agrees_with_dp():
    for model in (WalkModel.double_large(), WalkModel.double_small()):
        rows = dp_table(model, 10)
        for n in range(11):
            assert brute_force_distribution(model, n).probabilities == {
                s: m for s, m in rows[n].probabilities.items()
            }


def test_brute_force_agrees_for_unbalanced_probability():
    model = WalkModel.double_large(Fraction(2, 5))
    assert brute_force_distribution(model, 7).probabilities == dp_distribution(
        model, 7
    ).probabilities


def test_brute_force_limit():
    with pytest.raises(ValueError, match="oracle limit exceeded"):
        brute_force_distribution(WalkModel.double_large(), 23)


def test_negative_steps_rejected():
    with pytest.raises(ValueError):
        dp_table(WalkModel.double_large(), -1)
    with pytest.raises(ValueError):
        brute_force_distribution(WalkModel.double_large(), -1)


@given(probabilities)
@settings(max_examples=40)
def test_rows_are_distributions_for_any_probability(p):
    """Every DP row sums to one regardless of the red probability."""
    for model in (WalkModel.double_large(p), WalkModel.double_small(p)):
        for row in dp_table(model, 8):
            assert row.total() == 1
            assert all(mass > 0 for mass in row.probabilities.values())


@given(probabilities)
@settings(max_examples=25)
def test_double_large_recursion_for_any_probability(p):
    """Mass at step n satisfies the incoming-edge equations of the model."""
    model = WalkModel.double_large(p)
    q = model.q
    rows = dp_table(model, 7)
    for n in range(1, 8):
        prev, cur = rows[n - 1], rows[n]
        assert cur.prob(0) == q * prev.prob(1)
        assert cur.prob(BETA) == q * prev.prob(0)
        assert cur.prob(1) == prev.prob(BETA) + q * prev.prob(2)
        for i in range(2, 2 * n + 1):
            assert cur.prob(i) == p * prev.prob(i - 2) + q * prev.prob(i + 1)


@given(probabilities)
@settings(max_examples=25)
def test_double_small_recursion_for_any_probability(p):
    model = WalkModel.double_small(p)
    q = model.q
    rows = dp_table(model, 7)
    for n in range(1, 8):
        prev, cur = rows[n - 1], rows[n]
        assert cur.prob(0) == prev.prob(BETA) + q * prev.prob(2)
        assert cur.prob(BETA) == q * prev.prob(1)
        assert cur.prob(1) == prev.prob(0) + q * prev.prob(3)
        for i in range(2, n + 1):
            assert cur.prob(i) == p * prev.prob(i - 1) + q * prev.prob(i + 2)


def test_residue_class_values():
    m1 = WalkModel.double_large()
    m2 = WalkModel.double_small()
    assert residue_class(m1, 0) == 0
    assert residue_class(m1, 1) == 2
    assert residue_class(m1, 2) == 1
    assert residue_class(m1, BETA) == 1
    assert residue_class(m2, 0) == 0
    assert residue_class(m2, 1) == 1
    assert residue_class(m2, 2) == 2
    assert residue_class(m2, BETA) == 2


def test_support_obeys_residue_class_and_frontier():
    for model in (WalkModel.double_large(), WalkModel.double_small()):
        bound = 2 if model.kind.value == "double-large" else 1
        for row in dp_table(model, 15):
            for state in row.support():
                assert residue_class(model, state) == row.step % 3
                if isinstance(state, int):
                    assert state <= bound * row.step


def test_state_parsing_and_formatting():
    assert parse_state("beta") is BETA
    assert parse_state(" Beta ") is BETA
    assert parse_state("7") == 7
    assert format_state(BETA) == "beta"
    assert format_state(12) == "12"
    with pytest.raises(ValueError):
        parse_state("-3")
    with pytest.raises(ValueError):
        parse_state("sigma")


def test_state_sort_key_puts_beta_last():
    states = [BETA, 4, 0, 7]
    assert sorted(states, key=state_sort_key) == [0, 4, 7, BETA]
