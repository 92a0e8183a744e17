"""Exact arithmetic for truncated power series and rational functions.

Everything here works over ``fractions.Fraction``, so all results are exact.
The three building blocks are

* ``TruncatedSeries``: a formal power series kept to a fixed truncation
  order, with ring operations, reciprocal, composition and reversion
  (compositional inverse via the Lagrange inversion formula),
* ``Polynomial``: a dense polynomial with exact coefficients,
* ``RationalFunction``: a quotient of two polynomials, comparable by
  cross multiplication and expandable into a ``TruncatedSeries``.

A truncated series of order ``n`` retains the coefficients of
``t^0 .. t^(n-1)``.  Binary operations between series of different orders
truncate to the smaller order, so a result never pretends to more
precision than its inputs support.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Union

Scalar = Union[int, Fraction]

DEFAULT_ORDER = 32


def binom_general(a: int, b: int) -> Fraction:
    """Binomial coefficient C(a, b) for arbitrary integer upper index.

    Uses the falling-factorial definition a (a-1) ... (a-b+1) / b!, which
    stays valid for negative ``a``.  A negative lower index gives 0.
    """
    if b < 0:
        return Fraction(0)
    num = 1
    for i in range(b):
        num *= a - i
    return Fraction(num, factorial(b))


def _as_fraction(value: Scalar) -> Fraction:
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


class TruncatedSeries:
    """Formal power series truncated to a fixed number of coefficients."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar], order: int | None = None):
        vals = [_as_fraction(c) for c in coeffs]
        if order is not None:
            if order < 1:
                raise ValueError("order must be at least 1")
            del vals[order:]
            vals.extend([Fraction(0)] * (order - len(vals)))
        elif not vals:
            raise ValueError("empty coefficient list needs an explicit order")
        self._coeffs = tuple(vals)

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> TruncatedSeries:
        return cls([], order)

    @classmethod
    def constant(cls, value: Scalar, order: int = DEFAULT_ORDER) -> TruncatedSeries:
        return cls([value], order)

    @classmethod
    def identity(cls, order: int = DEFAULT_ORDER) -> TruncatedSeries:
        """The series t itself."""
        return cls([0, 1], order)

    @property
    def order(self) -> int:
        return len(self._coeffs)

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    def coeff(self, k: int) -> Fraction:
        """Coefficient of t^k.  Asking beyond the truncation order is a bug."""
        if not 0 <= k < len(self._coeffs):
            raise IndexError(f"coefficient {k} outside truncation order {len(self._coeffs)}")
        return self._coeffs[k]

    def truncate(self, order: int) -> TruncatedSeries:
        if not 1 <= order <= len(self._coeffs):
            raise ValueError("can only truncate to a smaller positive order")
        return TruncatedSeries(self._coeffs[:order])

    def _lift(self, other: object) -> TruncatedSeries | None:
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries([other], len(self._coeffs))
        return None

    def __add__(self, other: object) -> TruncatedSeries:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        n = min(len(self._coeffs), len(rhs._coeffs))
        return TruncatedSeries([self._coeffs[k] + rhs._coeffs[k] for k in range(n)])

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries([-c for c in self._coeffs])

    def __sub__(self, other: object) -> TruncatedSeries:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> TruncatedSeries:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other: object) -> TruncatedSeries:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        n = min(len(self._coeffs), len(rhs._coeffs))
        out = [Fraction(0)] * n
        for i, a in enumerate(self._coeffs[:n]):
            if a == 0:
                continue
            for j in range(n - i):
                b = rhs._coeffs[j]
                if b:
                    out[i + j] += a * b
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> TruncatedSeries:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("series exponent must be a non-negative integer")
        result = TruncatedSeries.constant(1, len(self._coeffs))
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def recip(self) -> TruncatedSeries:
        """Multiplicative inverse.  Needs a nonzero constant term.

        Recurrence: b0 = 1/a0 and b_m = -b0 * sum_{k=1..m} a_k b_{m-k}.
        """
        a = self._coeffs
        if a[0] == 0:
            raise ValueError("not a unit: constant term is zero")
        b = [Fraction(1, 1) / a[0]]
        for m in range(1, len(a)):
            acc = Fraction(0)
            for k in range(1, m + 1):
                if a[k]:
                    acc += a[k] * b[m - k]
            b.append(-b[0] * acc)
        return TruncatedSeries(b)

    def compose(self, inner: TruncatedSeries) -> TruncatedSeries:
        """Substitute ``inner`` for the variable.  Inner constant term must vanish."""
        if inner._coeffs[0] != 0:
            raise ValueError("inner series must have zero constant term")
        n = min(len(self._coeffs), len(inner._coeffs))
        g = inner.truncate(n)
        acc = TruncatedSeries.zero(n)
        for k in reversed(range(n)):
            acc = acc * g + self._coeffs[k]
        return acc

    def reversion(self) -> TruncatedSeries:
        """Compositional inverse r with r(self) = t, by Lagrange inversion.

        Requires zero constant term and a nonzero linear term.  Coefficient
        formula: r_d = (1/d) [t^(d-1)] (t / self)^d.
        """
        a = self._coeffs
        if a[0] != 0 or a[1] == 0:
            raise ValueError("not invertible as formal series")
        n = len(a)
        quotient = TruncatedSeries(a[1:], n).recip()
        out = [Fraction(0)] * n
        power = TruncatedSeries.constant(1, n)
        for d in range(1, n):
            power = power * quotient
            out[d] = power.coeff(d - 1) / d
        return TruncatedSeries(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self._coeffs[:6])
        tail = ", ..." if len(self._coeffs) > 6 else ""
        return f"TruncatedSeries([{shown}{tail}], order={len(self._coeffs)})"


class Polynomial:
    """Dense polynomial over Fraction, indexed by ascending powers."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        vals = [_as_fraction(c) for c in coeffs]
        while vals and vals[-1] == 0:
            vals.pop()
        self._coeffs = tuple(vals)

    @classmethod
    def x(cls) -> Polynomial:
        return cls([0, 1])

    @classmethod
    def constant(cls, value: Scalar) -> Polynomial:
        return cls([value])

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self._coeffs) - 1

    def is_zero(self) -> bool:
        return not self._coeffs

    def coeff(self, k: int) -> Fraction:
        if k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def __call__(self, point):
        """Horner evaluation; works for scalars, series and polynomials."""
        acc = point * 0
        for c in reversed(self._coeffs):
            acc = acc * point + c
        return acc

    def _lift(self, other: object) -> Polynomial | None:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial([other])
        return None

    def __add__(self, other: object) -> Polynomial:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        n = max(len(self._coeffs), len(rhs._coeffs))
        return Polynomial([self.coeff(k) + rhs.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self._coeffs])

    def __sub__(self, other: object) -> Polynomial:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> Polynomial:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other: object) -> Polynomial:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        if self.is_zero() or rhs.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self._coeffs) + len(rhs._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(rhs._coeffs):
                if b:
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> Polynomial:
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("polynomial exponent must be a non-negative integer")
        result = Polynomial([1])
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return self._coeffs == rhs._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({list(self._coeffs)!r})"


class RationalFunction:
    """Quotient of two polynomials.  Equality is by cross multiplication."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial | Scalar, den: Polynomial | Scalar = 1):
        self.num = num if isinstance(num, Polynomial) else Polynomial([num])
        self.den = den if isinstance(den, Polynomial) else Polynomial([den])
        if self.den.is_zero():
            raise ValueError("zero denominator")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def reciprocal(self) -> RationalFunction:
        if self.num.is_zero():
            raise ValueError("zero denominator")
        return RationalFunction(self.den, self.num)

    def _lift(self, other: object) -> RationalFunction | None:
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction, Polynomial)):
            return RationalFunction(other)
        return None

    def __add__(self, other: object) -> RationalFunction:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return RationalFunction(self.num * rhs.den + rhs.num * self.den, self.den * rhs.den)

    __radd__ = __add__

    def __neg__(self) -> RationalFunction:
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other: object) -> RationalFunction:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> RationalFunction:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other: object) -> RationalFunction:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return RationalFunction(self.num * rhs.num, self.den * rhs.den)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> RationalFunction:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return self * rhs.reciprocal()

    def __rtruediv__(self, other: object) -> RationalFunction:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return rhs * self.reciprocal()

    def __pow__(self, exponent: int) -> RationalFunction:
        if not isinstance(exponent, int):
            raise ValueError("exponent must be an integer")
        if exponent < 0:
            return self.reciprocal() ** (-exponent)
        return RationalFunction(self.num**exponent, self.den**exponent)

    def __eq__(self, other: object) -> bool:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return self.num * rhs.den == rhs.num * self.den

    def __hash__(self) -> int:
        raise TypeError("RationalFunction is unhashable; compare with ==")

    def expand(self, series: TruncatedSeries) -> TruncatedSeries:
        """Expand num/den around the substituted series argument."""
        return self.num(series) * self.den(series).recip()

    def __call__(self, point):
        if isinstance(point, TruncatedSeries):
            return self.expand(point)
        den = self.den(point)
        if den == 0:
            raise ZeroDivisionError("denominator vanishes at evaluation point")
        return self.num(point) / den

    def __repr__(self) -> str:
        return f"RationalFunction({self.num!r}, {self.den!r})"
