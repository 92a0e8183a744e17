"""Closed-form coefficients and generating-function algebra for the walks.

The generating function of the double-large walk satisfies a kernel
equation whose kernel K(z, u) = x u^3 - 3u + 2 (after the substitution
u = zU, x = z^3) factors over the algebraic functions of

    x = (27/4) t (1 - t)^2.

The three roots of x U^3 - 3U + 2 in U are the "bad factor"
U1 = 2 / (3(1 - t)) and the reciprocals of

    sigma, tau = (3/4) t -+ (3/4) sqrt(4t - 3t^2),

whose symmetric functions are polynomials in t:

    sigma + tau = (3/2) t,      sigma * tau = (9/4) t (t - 1).

Everything downstream of the kernel lives in these objects:

* step probabilities of either walk at a numbered state or at BETA,
  as explicit single or double binomial sums over Fraction,
* the t-expansions of the state-0 generating functions, obtained by
  composing a rational function of t with the reversion t(x),
* the per-state rational functions of t whose x-expansions reproduce
  the binomial-sum coefficients column by column,
* Girard-Waring closed sums for sigma^m + tau^m and the difference
  quotient (sigma^m - tau^m) / (sigma - tau),
* the kernel identities themselves, checked exactly.

Series in this module are expansions in x unless a name says otherwise;
``t_series`` is the bridge, the compositional inverse of x(t).

All closed forms assume the balanced draw probabilities (p = 1/3 for
double-large, p = 2/3 for double-small); the dispatcher
``closed_form_probability`` refuses other walks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactmath import (
    DEFAULT_ORDER,
    Polynomial,
    RationalFunction,
    TruncatedSeries,
    binom_general,
)
from .models import ModelKind, State, WalkModel, _BetaState

_T = Polynomial.x()
_ONE_MINUS_T = Polynomial([1, -1])
_ONE_MINUS_3T = Polynomial([1, -3])
_FOUR_MINUS_3T = Polynomial([4, -3])


def x_of_t() -> Polynomial:
    """The substitution x = (27/4) t (1 - t)^2 as a polynomial in t."""
    return Fraction(27, 4) * _T * _ONE_MINUS_T**2


def t_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Reversion t(x) of x = (27/4) t (1-t)^2, by its explicit coefficients.

    [x^k] t = (1/k) C(3k-2, k-1) 2^(2k) / 3^(3k) for k >= 1.  The first
    terms are (4/27) x + (32/729) x^2 + (448/19683) x^3 + ...  The library
    checks this against ``x_of_t`` series reversion, so the two routes
    stay independent.
    """
    coeffs = [Fraction(0)]
    for k in range(1, order):
        coeffs.append(binom_general(3 * k - 2, k - 1) * Fraction(2**(2 * k), k * 3**(3 * k)))
    return TruncatedSeries(coeffs, order)


def inv_one_minus_t_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Expansion of 1 / (1 - t(x)) in x.

    [x^k] = (1/(2k+1)) C(3k, k) 2^(2k) / 3^(3k); the constant term is 1.
    Equals ``(1 - t_series(order)).recip()`` coefficient for coefficient.
    """
    coeffs = [
        binom_general(3 * k, k) * Fraction(2**(2 * k), (2 * k + 1) * 3**(3 * k))
        for k in range(order)
    ]
    return TruncatedSeries(coeffs, order)


def bad_factor_root_rational() -> RationalFunction:
    """The kernel root U1 = 2 / (3 (1 - t)) that carries no walk mass."""
    return RationalFunction(Polynomial([2]), 3 * _ONE_MINUS_T)


def bad_factor_root_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """Expansion of the bad-factor root 2 / (3(1 - t(x))) in x.

    [x^k] = (1/(2k+1)) C(3k, k) 2^(2k+1) / 3^(3k+1), starting 2/3 + (8/81) x
    + ...  This is exactly 2/3 times ``inv_one_minus_t_series``; keeping the
    two normalizations separate is the point, since conflating them scales
    every downstream probability by 2/3.
    """
    coeffs = [
        binom_general(3 * k, k) * Fraction(2**(2 * k + 1), (2 * k + 1) * 3**(3 * k + 1))
        for k in range(order)
    ]
    return TruncatedSeries(coeffs, order)


def f0_rational() -> RationalFunction:
    """Return-probability generating function of the double-large walk,
    as a rational function of t: f0 = 1 / ((1 - t)(1 - 3t))."""
    return RationalFunction(Polynomial([1]), _ONE_MINUS_T * _ONE_MINUS_3T)


def f0_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """x-expansion of f0; [x^N] is the probability of state 0 after 3N steps
    of the double-large walk."""
    return f0_rational().expand(t_series(order))


def g0_rational() -> RationalFunction:
    """State-0 generating function of the double-small walk:
    g0 = 4 / ((1 - 3t)(4 - 3t))."""
    return RationalFunction(Polynomial([4]), _ONE_MINUS_3T * _FOUR_MINUS_3T)


def g0_series(order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """x-expansion of g0; [x^N] is the probability of state 0 after 3N steps
    of the double-small walk."""
    return g0_rational().expand(t_series(order))


def f_state_coeff(steps: int, state: int) -> Fraction:
    """Probability that the double-large walk sits at numbered state
    ``state`` after ``steps`` steps, as a closed double sum.

    With j = state, the value vanishes unless steps + j = 3N for an
    integer N >= 0, and then equals

        (3/2)^j (4/27)^N (-1)^(N-j) [ S1 + 3 S2 ]
        S1 = sum_k (-1)^k C(j-k, k)   C(k-2N-2, N-j+k)
        S2 = sum_k (-1)^k C(j-1-k, k) C(k-2N-1, N-j+k)

    The generalized binomials cut both sums off on their own, including
    at unreachable states beyond the walk's frontier.
    """
    if steps < 0 or state < 0:
        raise ValueError("steps and state must be non-negative")
    j = state
    if (steps + j) % 3:
        return Fraction(0)
    n_blocks = (steps + j) // 3
    s1 = Fraction(0)
    for k in range(j // 2 + 1):
        term = binom_general(j - k, k) * binom_general(k - 2 * n_blocks - 2, n_blocks - j + k)
        s1 += -term if k % 2 else term
    s2 = Fraction(0)
    for k in range((j - 1) // 2 + 1):
        term = binom_general(j - 1 - k, k) * binom_general(k - 2 * n_blocks - 1, n_blocks - j + k)
        s2 += -term if k % 2 else term
    sign = -1 if (n_blocks - j) % 2 else 1
    return Fraction(3, 2) ** j * Fraction(4, 27) ** n_blocks * sign * (s1 + 3 * s2)


def fbeta_coeff(index: int) -> Fraction:
    """Probability that the double-large walk sits at BETA after 3m+1 steps:
    2^(2m+1) / 3^(3m+1) * C(3m+1, m)."""
    if index < 0:
        raise ValueError("index must be non-negative")
    m = index
    return Fraction(2 ** (2 * m + 1), 3 ** (3 * m + 1)) * binom_general(3 * m + 1, m)


def g0_coeff(index: int) -> Fraction:
    """Probability that the double-small walk sits at state 0 after 3N steps:
    sum_i 2^(2i) / 3^(2N+i) * C(2N+i, i)."""
    if index < 0:
        raise ValueError("index must be non-negative")
    n_blocks = index
    total = Fraction(0)
    for i in range(n_blocks + 1):
        total += Fraction(2 ** (2 * i), 3 ** (2 * n_blocks + i)) * binom_general(2 * n_blocks + i, i)
    return total


def gbeta_coeff(index: int) -> Fraction:
    """Probability that the double-small walk sits at BETA after 3N+2 steps:
    sum_i 2^(2i) / 3^(2N+i+1) * C(2N+1+i, i).

    Equals one third of the state-1 probability one step earlier, since the
    only route into BETA is the black edge out of state 1.
    """
    if index < 0:
        raise ValueError("index must be non-negative")
    n_blocks = index
    total = Fraction(0)
    for i in range(n_blocks + 1):
        total += Fraction(2 ** (2 * i), 3 ** (2 * n_blocks + i + 1)) * binom_general(
            2 * n_blocks + 1 + i, i
        )
    return total


def g_state_coeff(steps: int, state: int) -> Fraction:
    """Probability that the double-small walk sits at numbered state
    ``state`` after ``steps`` steps.

    For state j >= 1 the value vanishes unless steps - j = 3N for an
    integer N >= 0, and then equals

        sum_{i=0}^{N} 2^(2i+j-1) / 3^(2N+i+j-1) * C(2N+j+i, i).

    State 0 has a different coefficient shape and is routed to
    ``g0_coeff``.
    """
    if steps < 0 or state < 0:
        raise ValueError("steps and state must be non-negative")
    j = state
    if j == 0:
        return g0_coeff(steps // 3) if steps % 3 == 0 else Fraction(0)
    if (steps - j) % 3:
        return Fraction(0)
    n_blocks = (steps - j) // 3
    if n_blocks < 0:
        return Fraction(0)
    total = Fraction(0)
    for i in range(n_blocks + 1):
        total += Fraction(
            2 ** (2 * i + j - 1), 3 ** (2 * n_blocks + i + j - 1)
        ) * binom_general(2 * n_blocks + j + i, i)
    return total


def f_u_coeff(order_in_u: int) -> RationalFunction:
    """Rational function of t behind column m of the double-large walk.

    Writing f_m for the generating function of the state-m probabilities,
    z^m f_m is a function of x alone and its x-expansion is this rational
    function composed with t(x):

        (3/2)^m / ((1-3t)(1-t)) * [ S1(t) - 3 S2(t) ]
        S1 = sum_k (-1)^k C(m-k, k)   (t-1)^k     t^(m-k)
        S2 = sum_k (-1)^k C(m-1-k, k) (t-1)^(k+1) t^(m-k)

    [x^N] of the expansion equals ``f_state_coeff(3N - m, m)``; m = 0
    degenerates to ``f0_rational``.
    """
    m = order_in_u
    if m < 0:
        raise ValueError("column index must be non-negative")
    t_minus_1 = Polynomial([-1, 1])
    s1 = Polynomial()
    for k in range(m // 2 + 1):
        term = binom_general(m - k, k) * t_minus_1**k * _T ** (m - k)
        s1 = s1 + (-term if k % 2 else term)
    s2 = Polynomial()
    for k in range((m - 1) // 2 + 1):
        term = binom_general(m - 1 - k, k) * t_minus_1 ** (k + 1) * _T ** (m - k)
        s2 = s2 + (-term if k % 2 else term)
    num = Fraction(3, 2) ** m * (s1 - 3 * s2)
    return RationalFunction(num, _ONE_MINUS_3T * _ONE_MINUS_T)


def g_u_coeff(order_in_u: int) -> RationalFunction:
    """Rational function of t behind column j of the double-small walk.

    For j >= 1 it is 6 / ((1-3t)(4-3t)) * (2 / (3(1-t)))^j, and [x^N] of
    its expansion equals ``g_state_coeff(3N + j, j)``.  Column 0 has the
    different shape ``g0_rational`` and is routed there.
    """
    j = order_in_u
    if j < 0:
        raise ValueError("column index must be non-negative")
    if j == 0:
        return g0_rational()
    num = Polynomial([Fraction(6 * 2**j, 3**j)])
    den = _ONE_MINUS_3T * _FOUR_MINUS_3T * _ONE_MINUS_T**j
    return RationalFunction(num, den)


@dataclass(frozen=True)
class SymmetricPair:
    """Elementary symmetric functions of the kernel roots sigma and tau."""

    sum_of_roots: Polynomial
    product_of_roots: Polynomial


def symmetric_pair() -> SymmetricPair:
    """sigma + tau = (3/2) t and sigma tau = (9/4) t (t - 1)."""
    return SymmetricPair(
        sum_of_roots=Fraction(3, 2) * _T,
        product_of_roots=Fraction(9, 4) * (_T**2 - _T),
    )


def girard_waring_power_sum(m: int) -> Polynomial:
    """sigma^m + tau^m as a polynomial in t, by the Girard-Waring closed sum

    sum_{i<=m/2} (-1)^i m/(m-i) C(m-i, i) e^(m-2i) f^i

    with e, f the symmetric pair.  m = 0 gives the constant 2.
    """
    if m < 0:
        raise ValueError("power must be non-negative")
    if m == 0:
        return Polynomial([2])
    pair = symmetric_pair()
    total = Polynomial()
    for i in range(m // 2 + 1):
        coeff = Fraction(m, m - i) * binom_general(m - i, i)
        term = coeff * pair.sum_of_roots ** (m - 2 * i) * pair.product_of_roots**i
        total = total + (-term if i % 2 else term)
    return total


def girard_waring_quotient(m: int) -> Polynomial:
    """(sigma^m - tau^m) / (sigma - tau) as a polynomial in t:

    sum_{i<=(m-1)/2} (-1)^i C(m-1-i, i) e^(m-1-2i) f^i.

    m = 0 gives 0 and m = 1 gives 1.
    """
    if m < 0:
        raise ValueError("power must be non-negative")
    if m == 0:
        return Polynomial()
    pair = symmetric_pair()
    total = Polynomial()
    for i in range((m - 1) // 2 + 1):
        coeff = binom_general(m - 1 - i, i)
        term = coeff * pair.sum_of_roots ** (m - 1 - 2 * i) * pair.product_of_roots**i
        total = total + (-term if i % 2 else term)
    return total


@dataclass(frozen=True)
class IdentityCheck:
    """Outcome of one exact kernel identity verification."""

    name: str
    holds: bool
    detail: str


def _vpoly_mul(a: list[Polynomial], b: list[Polynomial]) -> list[Polynomial]:
    """Multiply polynomials in V whose coefficients are polynomials in t."""
    out = [Polynomial() for _ in range(len(a) + len(b) - 1)]
    for i, ca in enumerate(a):
        for k, cb in enumerate(b):
            out[i + k] = out[i + k] + ca * cb
    return out


def kernel_identity_results() -> list[IdentityCheck]:
    """Check the three kernel identities in exact arithmetic.

    1. The bad-factor root satisfies x U1^3 - 3 U1 + 2 = 0.
    2. The kernel cubic factors: 2V^3 - 3V^2 + x =
       2 (V - (3/2)(1-t)) (V^2 - eV + f).
    3. The explicit roots (3/4)t -+ (3/4) sqrt(4t - 3t^2) have elementary
       symmetric functions e and f; the radical cancels in both.
    """
    results = []

    u1 = bad_factor_root_rational()
    x_rf = RationalFunction(x_of_t())
    residue = x_rf * u1**3 - 3 * u1 + 2
    results.append(
        IdentityCheck(
            name="bad-factor-root-kills-kernel",
            holds=residue.is_zero(),
            detail="x U1^3 - 3 U1 + 2 reduces to the zero rational function",
        )
    )

    pair = symmetric_pair()
    lhs = [x_of_t(), Polynomial(), Polynomial([-3]), Polynomial([2])]
    linear = [Fraction(-3, 2) * _ONE_MINUS_T, Polynomial([1])]
    quadratic = [pair.product_of_roots, -pair.sum_of_roots, Polynomial([1])]
    rhs = [2 * c for c in _vpoly_mul(linear, quadratic)]
    results.append(
        IdentityCheck(
            name="kernel-cubic-factorization",
            holds=lhs == rhs,
            detail="2V^3 - 3V^2 + x = 2(V - (3/2)(1-t))(V^2 - eV + f) coefficient-wise",
        )
    )

    rational_part = Fraction(3, 4) * _T
    radical_square = Fraction(9, 16) * (4 * _T - 3 * _T**2)
    sum_explicit = 2 * rational_part
    product_explicit = rational_part**2 - radical_square
    holds = sum_explicit == pair.sum_of_roots and product_explicit == pair.product_of_roots
    results.append(
        IdentityCheck(
            name="explicit-roots-match-symmetric-pair",
            holds=holds,
            detail="(3/4)t -+ (3/4)sqrt(4t-3t^2) re-derive e and f with the radical cancelled",
        )
    )

    return results


def closed_form_probability(model: WalkModel, state: State, steps: int) -> Fraction:
    """Step probability of either walk through the closed forms alone.

    Raises ValueError for walks whose draw probability is not the balanced
    one the closed forms were derived for.
    """
    if not model.is_balanced:
        raise ValueError(
            "closed forms require the balanced probabilities "
            "(p=1/3 for double-large, p=2/3 for double-small)"
        )
    if steps < 0:
        raise ValueError("steps must be non-negative")
    if model.kind is ModelKind.DOUBLE_LARGE:
        if isinstance(state, _BetaState):
            return fbeta_coeff((steps - 1) // 3) if steps % 3 == 1 else Fraction(0)
        return f_state_coeff(steps, state)
    if isinstance(state, _BetaState):
        return gbeta_coeff((steps - 2) // 3) if steps % 3 == 2 else Fraction(0)
    return g_state_coeff(steps, state)
