"""Cross-route verification suites.

Each suite pits two independently implemented routes to the same numbers
against each other: dynamic programming against brute-force path
enumeration, closed-form coefficients against dynamic programming,
explicit series coefficients against reversion and reciprocal, closed
Girard-Waring sums against their defining recurrences, and simulation
against exact probabilities.  A suite never trusts the route it is
checking; failures carry enough context to locate the disagreement.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import closedforms, montecarlo
from .exactmath import Polynomial, TruncatedSeries
from .models import (
    BETA,
    BRUTE_FORCE_LIMIT,
    ModelKind,
    WalkModel,
    brute_force_distribution,
    dp_table,
    residue_class,
)


@dataclass
class SuiteResult:
    """Outcome of one verification suite."""

    name: str
    passed: bool
    checks: int
    failures: list[str]


class _Suite:
    def __init__(self, name: str):
        self.name = name
        self.checks = 0
        self.failures: list[str] = []

    def check(self, ok: bool, label: str) -> None:
        self.checks += 1
        if not ok:
            self.failures.append(label)

    def result(self) -> SuiteResult:
        return SuiteResult(self.name, not self.failures, self.checks, self.failures)


def _both_models() -> list[WalkModel]:
    return [WalkModel.double_large(), WalkModel.double_small()]


def normalization_and_support_suite(max_steps: int = 30) -> SuiteResult:
    """Rows sum to one and mass stays inside the residue class."""
    suite = _Suite("normalization-and-support")
    for model in _both_models():
        bound_factor = 2 if model.kind is ModelKind.DOUBLE_LARGE else 1
        for row in dp_table(model, max_steps):
            n = row.step
            suite.check(row.total() == 1, f"{model.name} step {n}: total {row.total()}")
            for state in row.support():
                suite.check(
                    residue_class(model, state) == n % 3,
                    f"{model.name} step {n}: state {state} outside residue class",
                )
                if isinstance(state, int):
                    suite.check(
                        state <= bound_factor * n,
                        f"{model.name} step {n}: state {state} beyond frontier",
                    )
    return suite.result()


def oracle_equivalence_suite(max_steps: int = 12) -> SuiteResult:
    """Forward DP equals brute-force path enumeration."""
    suite = _Suite("oracle-equivalence")
    cap = min(max_steps, BRUTE_FORCE_LIMIT)
    for model in _both_models():
        rows = dp_table(model, cap)
        for n in range(cap + 1):
            brute = brute_force_distribution(model, n)
            same = {
                s: m for s, m in rows[n].probabilities.items() if m
            } == {s: m for s, m in brute.probabilities.items() if m}
            suite.check(same, f"{model.name} step {n}: dp and brute force disagree")
    return suite.result()


def recursion_fidelity_suite(max_steps: int = 30) -> SuiteResult:
    """DP rows satisfy the incoming-edge recursions written out by hand."""
    suite = _Suite("recursion-fidelity")
    for model in _both_models():
        p, q = model.p, model.q
        rows = dp_table(model, max_steps)
        for n in range(1, max_steps + 1):
            prev, cur = rows[n - 1], rows[n]
            if model.kind is ModelKind.DOUBLE_LARGE:
                expected = {0: q * prev.prob(1), BETA: q * prev.prob(0),
                            1: prev.prob(BETA) + q * prev.prob(2)}
                for i in range(2, 2 * n + 1):
                    expected[i] = p * prev.prob(i - 2) + q * prev.prob(i + 1)
            else:
                expected = {0: prev.prob(BETA) + q * prev.prob(2), BETA: q * prev.prob(1),
                            1: prev.prob(0) + q * prev.prob(3)}
                for i in range(2, n + 1):
                    expected[i] = p * prev.prob(i - 1) + q * prev.prob(i + 2)
            for state, mass in expected.items():
                suite.check(
                    cur.prob(state) == mass,
                    f"{model.name} step {n}: state {state} breaks the recursion",
                )
    return suite.result()


def closed_form_grid_suite(max_steps: int = 30) -> SuiteResult:
    """Closed-form coefficients match DP on the full reachable grid."""
    suite = _Suite("closed-form-grid")
    for model in _both_models():
        bound_factor = 2 if model.kind is ModelKind.DOUBLE_LARGE else 1
        rows = dp_table(model, max_steps)
        for n in range(max_steps + 1):
            row = rows[n]
            states = list(range(bound_factor * n + 1)) + [BETA]
            for state in states:
                got = closedforms.closed_form_probability(model, state, n)
                suite.check(
                    got == row.prob(state),
                    f"{model.name} step {n} state {state}: "
                    f"closed form {got} != dp {row.prob(state)}",
                )
    return suite.result()


def series_suite(order: int = 30) -> SuiteResult:
    """Explicit series coefficients against reversion and reciprocal."""
    suite = _Suite("series")
    order = max(order, 2)
    t = closedforms.t_series(order)
    x_poly = closedforms.x_of_t()
    x_series = TruncatedSeries(x_poly.coeffs, order)

    suite.check(t == x_series.reversion(), "t series differs from reversion of x(t)")
    identity = TruncatedSeries.identity(order)
    suite.check(x_series.compose(t) == identity, "x(t(x)) is not the identity")
    suite.check(t.compose(x_series) == identity, "t(x(t)) is not the identity")

    inv = closedforms.inv_one_minus_t_series(order)
    suite.check(inv == (1 - t).recip(), "1/(1-t) series differs from direct reciprocal")

    bad = closedforms.bad_factor_root_series(order)
    suite.check(bad == Fraction(2, 3) * inv, "bad factor is not 2/3 of 1/(1-t)")
    suite.check(
        bad == closedforms.bad_factor_root_rational().expand(t),
        "bad factor series differs from its rational function",
    )

    blocks = min(order - 1, 10)
    large = dp_table(WalkModel.double_large(), 3 * blocks)
    small = dp_table(WalkModel.double_small(), 3 * blocks)
    f0 = closedforms.f0_series(order)
    g0 = closedforms.g0_series(order)
    for n_blocks in range(blocks + 1):
        suite.check(
            f0.coeff(n_blocks) == large[3 * n_blocks].prob(0),
            f"f0 coefficient {n_blocks} differs from dp",
        )
        suite.check(
            g0.coeff(n_blocks) == small[3 * n_blocks].prob(0),
            f"g0 coefficient {n_blocks} differs from dp",
        )
    return suite.result()


def kernel_identity_suite() -> SuiteResult:
    """The three exact kernel identities."""
    suite = _Suite("kernel-identities")
    for item in closedforms.kernel_identity_results():
        suite.check(item.holds, f"{item.name}: {item.detail}")
    return suite.result()


def girard_waring_suite(max_power: int = 40) -> SuiteResult:
    """Closed symmetric-function sums against their linear recurrences.

    Both sequences satisfy a_m = e a_(m-1) - f a_(m-2); the power sums
    start 2, e and the difference quotients start 0, 1.
    """
    suite = _Suite("girard-waring")
    pair = closedforms.symmetric_pair()
    e, f = pair.sum_of_roots, pair.product_of_roots
    power_sums = [Polynomial([2]), e]
    quotients = [Polynomial(), Polynomial([1])]
    for m in range(2, max_power + 1):
        power_sums.append(e * power_sums[-1] - f * power_sums[-2])
        quotients.append(e * quotients[-1] - f * quotients[-2])
    for m in range(max_power + 1):
        suite.check(
            closedforms.girard_waring_power_sum(m) == power_sums[m],
            f"power sum {m} differs from recurrence",
        )
        suite.check(
            closedforms.girard_waring_quotient(m) == quotients[m],
            f"difference quotient {m} differs from recurrence",
        )
    return suite.result()


def column_consistency_suite(max_column: int = 12, max_blocks: int = 8) -> SuiteResult:
    """Per-column rational functions reproduce the coefficient formulas."""
    suite = _Suite("column-consistency")
    t = closedforms.t_series(max_blocks + 1)
    for m in range(max_column + 1):
        expansion = closedforms.f_u_coeff(m).expand(t)
        for n_blocks in range(max_blocks + 1):
            n = 3 * n_blocks - m
            want = closedforms.f_state_coeff(n, m) if n >= 0 else Fraction(0)
            suite.check(
                expansion.coeff(n_blocks) == want,
                f"double-large column {m} block {n_blocks}: expansion != coefficient",
            )
    for j in range(max_column + 1):
        expansion = closedforms.g_u_coeff(j).expand(t)
        for n_blocks in range(max_blocks + 1):
            want = closedforms.g_state_coeff(3 * n_blocks + j, j)
            suite.check(
                expansion.coeff(n_blocks) == want,
                f"double-small column {j} block {n_blocks}: expansion != coefficient",
            )
    for n_blocks in range(max_blocks + 1):
        suite.check(
            closedforms.fbeta_coeff(n_blocks)
            == Fraction(2, 3) * closedforms.f_state_coeff(3 * n_blocks, 0),
            f"double-large BETA block {n_blocks} breaks the one-step relation",
        )
        suite.check(
            closedforms.gbeta_coeff(n_blocks)
            == Fraction(1, 3) * closedforms.g_state_coeff(3 * n_blocks + 1, 1),
            f"double-small BETA block {n_blocks} breaks the one-step relation",
        )
    return suite.result()


def simulation_suite(
    trials: int = 20000, steps: int = 6, seed: int = montecarlo.DEFAULT_SEED
) -> SuiteResult:
    """Quick seeded simulation against exact probabilities, 4-sigma cells."""
    suite = _Suite("simulation-four-sigma")
    for model in _both_models():
        exact = dp_table(model, steps)[steps]
        empirical = montecarlo.simulate(montecarlo.SimConfig(model, steps, trials, seed))
        for cell in montecarlo.four_sigma_report(empirical, exact):
            suite.check(
                cell.within,
                f"{model.name} step {steps} state {cell.state}: "
                f"deviation {float(cell.deviation):.2e} exceeds 4-sigma {cell.bound:.2e}",
            )
    return suite.result()


def run_verification(
    order: int = 30,
    max_steps: int = 30,
    trials: int = 20000,
    seed: int = montecarlo.DEFAULT_SEED,
) -> list[SuiteResult]:
    """Run every suite with shared size limits."""
    return [
        normalization_and_support_suite(max_steps),
        oracle_equivalence_suite(min(max_steps, 12)),
        recursion_fidelity_suite(max_steps),
        closed_form_grid_suite(max_steps),
        series_suite(order),
        kernel_identity_suite(),
        girard_waring_suite(),
        column_consistency_suite(max_blocks=min(8, max(order - 1, 1))),
        simulation_suite(trials=trials, seed=seed),
    ]
