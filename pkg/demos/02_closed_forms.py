"""Closed-form step probabilities checked cell by cell against the DP.

Each probability of either walk has an explicit finite binomial sum:
no recursion, no series, just generalized binomial coefficients.  This
script evaluates the closed forms over a grid and prints them next to
the dynamic-programming values.
"""

from knoedel import (
    BETA,
    WalkModel,
    closed_form_probability,
    dp_table,
    f_state_coeff,
    fbeta_coeff,
    g0_coeff,
    g_state_coeff,
    gbeta_coeff,
)

GRID_STEPS = 12


def compare_grid(model):
    rows = dp_table(model, GRID_STEPS)
    mismatches = 0
    print(f"\n=== {model.name}: closed form vs dp, n <= {GRID_STEPS} ===")
    for n in range(GRID_STEPS + 1):
        for state in rows[n].support():
            exact = rows[n].prob(state)
            closed = closed_form_probability(model, state, n)
            mark = "ok" if closed == exact else "MISMATCH"
            if n <= 6:
                print(f"  n={n:2d} state={state!r:5}  closed={closed}  dp={exact}  {mark}")
            mismatches += closed != exact
    print(f"  ... {mismatches} mismatches over the whole grid")
    assert mismatches == 0


def show_anchor_values():
    print("\nhand-checkable anchors:")
    print(f"  double-large n=3  state 0    -> {f_state_coeff(3, 0)}   (expected 16/27)")
    print(f"  double-large n=1  state beta -> {fbeta_coeff(0)}    (expected 2/3)")
    print(f"  double-small n=3  state 0    -> {g0_coeff(1)}    (expected 5/9)")
    print(f"  double-small n=2  state 2    -> {g_state_coeff(2, 2)}    (expected 2/3)")
    print(f"  double-small n=2  state beta -> {gbeta_coeff(0)}    (expected 1/3)")


def beta_feeds_from_one_edge():
    """BETA has a single incoming black edge, so its closed form is q times
    the mass of the feeding state one step earlier."""
    print("\nBETA one-step relations, first blocks:")
    for m in range(4):
        lhs = fbeta_coeff(m)
        rhs = f_state_coeff(3 * m, 0)
        print(f"  double-large block {m}: {lhs} = 2/3 * {rhs}")
        assert 3 * lhs == 2 * rhs
    for m in range(4):
        lhs = gbeta_coeff(m)
        rhs = g_state_coeff(3 * m + 1, 1)
        print(f"  double-small block {m}: {lhs} = 1/3 * {rhs}")
        assert 3 * lhs == rhs


if __name__ == "__main__":
    for model in (WalkModel.double_large(), WalkModel.double_small()):
        compare_grid(model)
    show_anchor_values()
    beta_feeds_from_one_edge()
