"""Acceptance criteria for the package, one test per criterion.

Each test prints a single PASS or FAIL line (run with ``pytest -s`` to
see them live) and enforces the stated size limits, tolerances and time
budgets.  Exact comparisons are exact: no tolerance is applied anywhere
except the explicit four-sigma bound of the Monte Carlo criterion.
"""

import time
from fractions import Fraction

from knoedel import closedforms as cf
from knoedel.exactmath import Polynomial, TruncatedSeries
from knoedel.models import (
    BETA,
    WalkModel,
    brute_force_distribution,
    dp_table,
    residue_class,
)
from knoedel.montecarlo import SimConfig, four_sigma_report, simulate


def _report(number: int, name: str, ok: bool, detail: str, elapsed: float,
            budget: float | None = None) -> None:
    status = "PASS" if ok else "FAIL"
    timing = f" [{elapsed:.2f}s" + (f" < {budget:.0f}s]" if budget else "]")
    print(f"[{status}] criterion {number:02d} {name}: {detail}{timing}")
    assert ok, f"criterion {number:02d} {name}: {detail}"
    if budget is not None:
        assert elapsed < budget, f"criterion {number:02d} exceeded {budget}s"


def test_criterion_01_oracle_equivalence():
    start = time.perf_counter()
    bad = []
    for model in (WalkModel.double_large(), WalkModel.double_small()):
        rows = dp_table(model, 14)
        for n in range(15):
            if brute_force_distribution(model, n).probabilities != rows[n].probabilities:
                bad.append((model.name, n))
    elapsed = time.perf_counter() - start
    _report(1, "oracle-equivalence", not bad,
            f"dp equals brute force for n <= 14 on both walks {bad or ''}".strip(),
            elapsed, budget=30)


def test_criterion_02_double_large_grid():
    start = time.perf_counter()
    model = WalkModel.double_large()
    rows = dp_table(model, 30)
    bad = []
    for n in range(31):
        for j in range(2 * n + 1):
            if cf.f_state_coeff(n, j) != rows[n].prob(j):
                bad.append((n, j))
    anchors = cf.f_state_coeff(0, 0) == 1 and cf.f_state_coeff(3, 0) == Fraction(16, 27)
    elapsed = time.perf_counter() - start
    _report(2, "double-large-grid", not bad and anchors,
            "closed form equals dp for all states, n <= 30; anchors 1 and 16/27",
            elapsed, budget=10)


def test_criterion_03_double_large_beta_series():
    start = time.perf_counter()
    model = WalkModel.double_large()
    rows = dp_table(model, 28)
    ok = cf.fbeta_coeff(0) == Fraction(2, 3)
    for m in range(10):
        ok = ok and cf.fbeta_coeff(m) == rows[3 * m + 1].prob(BETA)
    elapsed = time.perf_counter() - start
    _report(3, "double-large-beta-series", ok,
            "BETA coefficients equal dp at steps 3m+1 for m <= 9; anchor 2/3",
            elapsed)


def test_criterion_04_double_small_grid():
    start = time.perf_counter()
    model = WalkModel.double_small()
    rows = dp_table(model, 30)
    bad = []
    for n in range(31):
        for state in list(range(n + 1)) + [BETA]:
            if cf.closed_form_probability(model, state, n) != rows[n].prob(state):
                bad.append((n, state))
    anchors = (
        cf.g0_coeff(1) == Fraction(5, 9) and cf.g_state_coeff(2, 2) == Fraction(2, 3)
    )
    elapsed = time.perf_counter() - start
    _report(4, "double-small-grid", not bad and anchors,
            "closed form equals dp for all states incl. BETA, steps <= 30; "
            "anchors 5/9 and 2/3", elapsed, budget=10)


def test_criterion_05_series_reversion_and_reciprocal():
    start = time.perf_counter()
    order = 31  # keeps coefficients of x^0 .. x^30
    x_series = TruncatedSeries(cf.x_of_t().coeffs, order)
    t = cf.t_series(order)
    ok = t == x_series.reversion()
    ok = ok and cf.inv_one_minus_t_series(order) == (1 - t).recip()
    ok = ok and t.coeff(1) == Fraction(4, 27)
    elapsed = time.perf_counter() - start
    _report(5, "series-reversion-reciprocal", ok,
            "t(x) is the reversion of x(t) and 1/(1-t) matches recip, order 30; "
            "anchor 4/27", elapsed)


def test_criterion_06_kernel_identities():
    start = time.perf_counter()
    results = cf.kernel_identity_results()
    ok = len(results) == 3 and all(item.holds for item in results)
    elapsed = time.perf_counter() - start
    _report(6, "kernel-identities", ok,
            "all three kernel identities hold in exact arithmetic", elapsed)


def test_criterion_07_girard_waring():
    start = time.perf_counter()
    pair = cf.symmetric_pair()
    e, f = pair.sum_of_roots, pair.product_of_roots
    power_sums = [Polynomial([2]), e]
    quotients = [Polynomial(), Polynomial([1])]
    for _ in range(2, 41):
        power_sums.append(e * power_sums[-1] - f * power_sums[-2])
        quotients.append(e * quotients[-1] - f * quotients[-2])
    ok = all(cf.girard_waring_power_sum(m) == power_sums[m] for m in range(41))
    ok = ok and all(cf.girard_waring_quotient(m) == quotients[m] for m in range(41))
    elapsed = time.perf_counter() - start
    _report(7, "girard-waring", ok,
            "closed sums equal the linear recurrences for m <= 40", elapsed)


def test_criterion_08_normalization_and_residues():
    start = time.perf_counter()
    ok = True
    for model in (WalkModel.double_large(), WalkModel.double_small()):
        bound = 2 if model.kind.value == "double-large" else 1
        for row in dp_table(model, 100):
            ok = ok and row.total() == 1
            for state in row.support():
                ok = ok and residue_class(model, state) == row.step % 3
                if isinstance(state, int):
                    ok = ok and state <= bound * row.step
    elapsed = time.perf_counter() - start
    _report(8, "normalization-and-residues", ok,
            "rows sum to 1 and supports obey the mod-3 law for n <= 100",
            elapsed, budget=60)


def test_criterion_09_monte_carlo():
    start = time.perf_counter()
    trials = 1_000_000
    seed = 1729
    cells = 0
    outside = 0
    for model in (WalkModel.double_large(), WalkModel.double_small()):
        rows = dp_table(model, 12)
        for steps in range(13):
            empirical = simulate(SimConfig(model, steps, trials, seed))
            for cell in four_sigma_report(empirical, rows[steps]):
                cells += 1
                outside += 0 if cell.within else 1
        repeat = simulate(SimConfig(model, 12, trials, seed))
        again = simulate(SimConfig(model, 12, trials, seed))
        assert repeat.counts == again.counts, "simulation is not reproducible"
    share = Fraction(cells - outside, cells)
    ok = share >= Fraction(99, 100)
    elapsed = time.perf_counter() - start
    _report(9, "monte-carlo", ok,
            f"{cells - outside}/{cells} cells within 4-sigma at 10^6 trials, "
            "steps <= 12, reproducible", elapsed)


def test_criterion_10_column_consistency():
    start = time.perf_counter()
    t = cf.t_series(9)  # keeps blocks N <= 8
    ok = True
    for m in range(13):
        expansion = cf.f_u_coeff(m).expand(t)
        for n_blocks in range(9):
            n = 3 * n_blocks - m
            want = cf.f_state_coeff(n, m) if n >= 0 else Fraction(0)
            ok = ok and expansion.coeff(n_blocks) == want
    for j in range(13):
        expansion = cf.g_u_coeff(j).expand(t)
        for n_blocks in range(9):
            ok = ok and expansion.coeff(n_blocks) == cf.g_state_coeff(3 * n_blocks + j, j)
    elapsed = time.perf_counter() - start
    _report(10, "column-consistency", ok,
            "column rational functions reproduce the coefficient formulas "
            "for columns <= 12, blocks <= 8", elapsed)
