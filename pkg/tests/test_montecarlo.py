"""Tests for the seeded simulation and its deviation reports."""

from fractions import Fraction

import pytest

from knoedel.models import BETA, StepDistribution, WalkModel, dp_distribution
from knoedel.montecarlo import (
    EmpiricalDistribution,
    SimConfig,
    four_sigma_report,
    mix64,
    red_threshold,
    simulate,
    splitmix_draw,
)


def test_mix64_matches_reference_stream():
    """First outputs of the reference SplitMix64 stream seeded with 0."""
    golden = 0x9E3779B97F4A7C15
    assert mix64(golden) == 0xE220A8397B1DCDAF
    assert mix64(2 * golden % 2**64) == 0x6E789E6AA1B965F4
    assert mix64(3 * golden % 2**64) == 0x06C45D188009454F


def test_splitmix_draw_frozen_values():
    assert splitmix_draw(42, 0, 0) == 6332618229526065668
    assert splitmix_draw(42, 0, 1) == 17630415256238047317
    assert splitmix_draw(42, 1, 0) == 18201609923829866926
    assert splitmix_draw(42, 1, 1) == 5693819483401481853


def test_red_threshold_is_exact_ceiling():
    assert red_threshold(Fraction(1, 3)) == (2**64 + 2) // 3
    assert red_threshold(Fraction(2, 3)) == (2**65 + 2) // 3
    assert red_threshold(Fraction(1, 2)) == 2**63
    assert red_threshold(Fraction(1, 2**64)) == 1


def test_simulate_matches_scalar_replay():
    """The vectorized path reproduces the documented draw scheme bit for bit."""
    for model in (WalkModel.double_large(), WalkModel.double_small()):
        config = SimConfig(model, steps=9, trials=60, seed=2024)
        threshold = red_threshold(model.p)
        counts: dict = {}
        for trial in range(config.trials):
            state = 0
            for k in range(config.steps):
                red = splitmix_draw(config.seed, trial, k) < threshold
                state = model.step(state, red)
            counts[state] = counts.get(state, 0) + 1
        assert simulate(config).counts == counts


def test_simulate_is_deterministic():
    config = SimConfig(WalkModel.double_large(), 7, 5000, 99)
    assert simulate(config).counts == simulate(config).counts


def test_simulate_frozen_counts():
    """Regression pins for the cross-version reproducibility promise."""
    large = simulate(SimConfig(WalkModel.double_large(), 6, 1000, 42))
    assert large.counts == {0: 469, 3: 378, 6: 133, 9: 20}
    small = simulate(SimConfig(WalkModel.double_small(), 7, 1000, 42))
    assert small.counts == {1: 591, 4: 328, 7: 81}


def test_simulate_zero_steps():
    result = simulate(SimConfig(WalkModel.double_small(), 0, 17, 5))
    assert result.counts == {0: 17}


def test_simulate_validates_config():
    model = WalkModel.double_large()
    with pytest.raises(ValueError, match="trials"):
        simulate(SimConfig(model, 3, 0, 1))
    with pytest.raises(ValueError, match="steps"):
        simulate(SimConfig(model, -1, 10, 1))


def test_simulate_visits_beta():
    result = simulate(SimConfig(WalkModel.double_large(), 1, 3000, 11))
    assert set(result.counts) == {2, BETA}
    assert result.count(2) + result.count(BETA) == 3000
    assert result.frequency(BETA) == Fraction(result.count(BETA), 3000)


def test_four_sigma_report_small_run_within_bounds():
    for model in (WalkModel.double_large(), WalkModel.double_small()):
        exact = dp_distribution(model, 6)
        empirical = simulate(SimConfig(model, 6, 100_000, 1729))
        report = four_sigma_report(empirical, exact)
        assert [cell.state for cell in report] == exact.support()
        assert all(cell.within for cell in report)


def test_four_sigma_report_flags_impossible_state():
    exact = StepDistribution(2, {1: Fraction(8, 9), 4: Fraction(1, 9)})
    fabricated = EmpiricalDistribution(2, 100, 0, {1: 88, 4: 10, 7: 2})
    report = four_sigma_report(fabricated, exact)
    offender = [cell for cell in report if cell.state == 7]
    assert len(offender) == 1
    assert offender[0].expected == 0
    assert not offender[0].within


def test_four_sigma_report_checks_step_agreement():
    exact = dp_distribution(WalkModel.double_large(), 4)
    empirical = simulate(SimConfig(WalkModel.double_large(), 5, 100, 3))
    with pytest.raises(ValueError, match="step count"):
        four_sigma_report(empirical, exact)


def test_four_sigma_decision_is_exact():
    """The within flag uses the squared rational inequality, not floats."""
    exact = StepDistribution(0, {0: Fraction(1)})
    empirical = EmpiricalDistribution(0, 4, 0, {0: 4})
    cell = four_sigma_report(empirical, exact)[0]
    assert cell.within and cell.deviation == 0 and cell.bound == 0.0
