"""Truncated power series and binomial-coefficient utilities.

A ``PowerSeries`` is an immutable list of coefficients ``a[0..order]`` for
``sum a_k z^k + O(z^(order+1))``.  Coefficients may be :class:`BigReal`
(numeric mode) or :class:`fractions.Fraction` (exact mode); every operation
here is written against the common field interface (``+ - * /``, multiplication
and division by Python ints), so the two modes share one code path.  The exact
mode exists so that identities can be tested with no rounding error at all.

The composition helper substitutes the Koebe-type map ``u = z/(1-z)``
(coefficients 0,1,1,1,...) into a series in ``u``; that map is the pullback of
the half-plane variable used throughout the coefficient computations.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Sequence, Union

from .bigreal import BigReal

Coefficient = Union[BigReal, Fraction]


class SeriesOrderError(ValueError):
    """Raised when operands have mismatched truncation orders."""


class SeriesDomainError(ValueError):
    """Raised when an operation's analytic precondition fails (e.g. log of a
    series whose constant term is not 1)."""


class PowerSeries:
    """Immutable truncated power series with field-agnostic coefficients."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Sequence[Coefficient]):
        if len(coeffs) == 0:
            raise SeriesOrderError("a series needs at least the z^0 coefficient")
        object.__setattr__(self, "coeffs", tuple(coeffs))
        object.__setattr__(self, "order", len(coeffs) - 1)

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("PowerSeries is immutable")

    def __getitem__(self, k: int) -> Coefficient:
        return self.coeffs[k]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self) -> str:
        head = ", ".join(repr(c) for c in self.coeffs[:3])
        tail = ", ..." if len(self.coeffs) > 3 else ""
        return f"PowerSeries([{head}{tail}], order={self.order})"

    # -- field plumbing ---------------------------------------------------------

    def zero_coeff(self) -> Coefficient:
        """Additive identity of this series' coefficient field."""
        c = self.coeffs[0]
        if isinstance(c, BigReal):
            return BigReal.zero(c.precision)
        return Fraction(0)

    def one_coeff(self) -> Coefficient:
        """Multiplicative identity of this series' coefficient field."""
        c = self.coeffs[0]
        if isinstance(c, BigReal):
            return BigReal.one(c.precision)
        return Fraction(1)

    def map(self, fn: Callable[[Coefficient], Coefficient]) -> "PowerSeries":
        return PowerSeries([fn(c) for c in self.coeffs])


def _require_same_order(a: PowerSeries, b: PowerSeries) -> None:
    if a.order != b.order:
        raise SeriesOrderError(
            f"series orders differ: {a.order} vs {b.order}"
        )


def series_add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    _require_same_order(a, b)
    return PowerSeries([x + y for x, y in zip(a.coeffs, b.coeffs)])


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated at the common order."""
    _require_same_order(a, b)
    zero = a.zero_coeff()
    out = []
    for n in range(a.order + 1):
        acc = zero
        for k in range(n + 1):
            acc = acc + a.coeffs[k] * b.coeffs[n - k]
        out.append(acc)
    return PowerSeries(out)


def series_log(a: PowerSeries) -> PowerSeries:
    """Logarithm of a series with constant term 1.

    Uses the differential-equation recurrence: with ``b = log a``,

        n * b_n = n * a_n - sum_{k=1}^{n-1} k * b_k * a_{n-k}

    which needs one division per coefficient and no transcendental calls.
    The constant term of the result is exactly the field zero.
    """
    c0 = a.coeffs[0]
    if isinstance(c0, BigReal):
        tol = BigReal(1, c0.precision) / (10 ** max(c0.precision - 2, 1))
        if abs(c0 - 1) > tol:
            raise SeriesDomainError(
                f"series_log needs constant term 1, got {c0.digits_str(20)}"
            )
    else:
        if c0 != 1:
            raise SeriesDomainError(f"series_log needs constant term 1, got {c0}")
    zero = a.zero_coeff()
    b = [zero]
    for n in range(1, a.order + 1):
        acc = a.coeffs[n] * n
        for k in range(1, n):
            acc = acc - (b[k] * k) * a.coeffs[n - k]
        b.append(acc / n)
    return PowerSeries(b)


def series_derivative(a: PowerSeries) -> PowerSeries:
    """Termwise derivative; the order drops by one."""
    if a.order == 0:
        return PowerSeries([a.zero_coeff()])
    return PowerSeries([a.coeffs[k] * k for k in range(1, a.order + 1)])


def koebe_series(order: int, precision: int | None = None) -> PowerSeries:
    """The extremal map ``K(z) = z/(1-z)^2 = z + 2 z^2 + 3 z^3 + ...``.

    Coefficients 0, 1, 2, ..., order.  With ``precision=None`` the coefficients
    are exact ``Fraction`` values, otherwise ``BigReal`` at ``precision``.
    """
    if order < 1:
        raise SeriesOrderError("koebe_series needs order >= 1")
    if precision is None:
        return PowerSeries([Fraction(n) for n in range(order + 1)])
    return PowerSeries([BigReal(n, precision) for n in range(order + 1)])


def _geometric_shift(order: int, like: Coefficient) -> PowerSeries:
    """``z/(1-z) = z + z^2 + ... + z^order`` in the field of ``like``."""
    if isinstance(like, BigReal):
        zero: Coefficient = BigReal.zero(like.precision)
        one: Coefficient = BigReal.one(like.precision)
    else:
        zero, one = Fraction(0), Fraction(1)
    return PowerSeries([zero] + [one] * order)


def series_compose_zmap(a: PowerSeries) -> PowerSeries:
    """Substitute ``u = z/(1-z) = z + z^2 + z^3 + ...`` into a series in ``u``.

    Horner evaluation: ``result = (...((a_N u + a_{N-1}) u + ...) u + a_0)``,
    with every intermediate product truncated at ``a.order``.  Because the
    substituted map has no constant term, the truncation is exact: coefficient
    ``n`` of the result depends only on ``a_0..a_n``.
    """
    u = _geometric_shift(a.order, a.coeffs[0])
    zero = a.zero_coeff()
    acc = PowerSeries([a.coeffs[a.order]] + [zero] * a.order)
    for k in range(a.order - 1, -1, -1):
        acc = series_mul(acc, u)
        acc = PowerSeries([acc.coeffs[0] + a.coeffs[k]] + list(acc.coeffs[1:]))
    return acc


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient; 0 outside the triangle, errors on n < 0."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


class BinomialTable:
    """Dense Pascal-triangle rows up to ``n_max``, for hot inner loops.

    Built additively (each entry is the sum of the two above it) and
    cross-checked at the corners against the multiplicative formula.
    """

    __slots__ = ("n_max", "rows")

    def __init__(self, n_max: int):
        if n_max < 0:
            raise ValueError("BinomialTable needs n_max >= 0")
        rows = [[1]]
        for n in range(1, n_max + 1):
            prev = rows[-1]
            row = [1]
            for k in range(1, n):
                row.append(prev[k - 1] + prev[k])
            row.append(1)
            rows.append(row)
        object.__setattr__(self, "n_max", n_max)
        object.__setattr__(self, "rows", tuple(tuple(r) for r in rows))
        # consistency spot-check against the independent implementation
        if n_max >= 1:
            mid = n_max // 2
            if self.rows[n_max][mid] != math.comb(n_max, mid):
                raise AssertionError("Pascal construction disagrees with math.comb")

    def __setattr__(self, name, value):  # pragma: no cover - immutability guard
        raise AttributeError("BinomialTable is immutable")

    def get(self, n: int, k: int) -> int:
        if n < 0 or n > self.n_max:
            raise ValueError(f"row {n} outside table (0..{self.n_max})")
        if k < 0 or k > n:
            return 0
        return self.rows[n][k]


def parity_sign(exponent: int) -> int:
    """(-1)**exponent computed safely for any integer sign of the exponent."""
    return -1 if exponent % 2 else 1
