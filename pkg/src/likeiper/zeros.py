"""Zero-ordinate ingestion, partial zero sums, and tail/remainder bounds.

With x_k = 1/4 + t_k^2 (t_k the imaginary parts of the nontrivial zeros),
the power sums Z(j) = sum_k x_k^(-j) tie the coefficient sequence to the
zeros through a binomial inversion: the alternating central-binomial
combination of lambda_1..lambda_n equals Z(n) up to a tail that shrinks like
t_1^(-(2n-1)).  This module computes the truncated sums, rigorous-to-a-factor
tail bounds from the zero-counting density (1/2pi) log(t/2pi) dt, and the
inversion consistency check.

Ordinates are ingested from a data file, never computed here; the shipped
table carries provenance in its header.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Tuple

import mpmath
from mpmath import mp

from .bigreal import BigReal, DEFAULT_DIGITS
from .datafiles import default_zeros_path, parse_indexed_table
from .lambda_core import LambdaTable
from .series import binomial, parity_sign


class ZeroDataError(ValueError):
    """Raised for unusable zero-ordinate files."""


@dataclass(frozen=True)
class ZeroList:
    """Validated, strictly increasing zero ordinates t_1 < t_2 < ..."""

    ordinates: Tuple[BigReal, ...]
    digits: int
    source: str = ""
    warnings: Tuple[str, ...] = ()

    @property
    def count(self) -> int:
        return len(self.ordinates)

    @property
    def last(self) -> BigReal:
        return self.ordinates[-1]


def load_zeros(path: Optional[Path] = None) -> ZeroList:
    """Load and validate a zero-ordinate table.

    Hard failures: non-increasing ordinates, or a first ordinate outside
    (14.1, 14.2) — both indicate a corrupt or mislabeled file.  A file with
    very few ordinates is accepted but carries a warning, since tail bounds
    then dominate every partial sum.
    """
    if path is None:
        path = default_zeros_path()
    metadata, rows = parse_indexed_table(path)
    digits = int(metadata.get("digits", 0)) or 30
    ordinates: List[BigReal] = []
    previous = None
    for index, text in rows:
        t = BigReal(text, digits)
        if previous is not None and not (t > previous):
            raise ZeroDataError(
                f"{path}: ordinate #{index} = {text} is not strictly increasing"
            )
        previous = t
        ordinates.append(t)
    first = ordinates[0]
    if not (BigReal("14.1", digits) < first < BigReal("14.2", digits)):
        raise ZeroDataError(
            f"{path}: first ordinate {first.digits_str(10)} outside (14.1, 14.2); "
            "not a table of nontrivial-zero ordinates from the start"
        )
    warnings: List[str] = []
    if len(ordinates) < 10:
        warnings.append(
            f"only {len(ordinates)} ordinate(s): tail bounds dominate partial sums"
        )
    return ZeroList(
        ordinates=tuple(ordinates),
        digits=digits,
        source=metadata.get("source", str(path)),
        warnings=tuple(warnings),
    )


def z_partial(j: int, zeros: ZeroList, precision: int = DEFAULT_DIGITS) -> BigReal:
    """Truncated power sum sum_{k=1}^{count} (1/4 + t_k^2)^(-j).

    Single ascending pass in fixed order so results are reproducible
    bit-for-bit.
    """
    if j < 1:
        raise ValueError("z_partial needs j >= 1")
    with mp.workdps(precision + 10):
        total = mpmath.mpf(0)
        quarter = mpmath.mpf(1) / 4
        for t in zeros.ordinates:
            x = quarter + t.value * t.value
            total += x ** (-j)
        return BigReal(total, precision)


def tail_integral(j: int, T: BigReal | int, precision: int = DEFAULT_DIGITS) -> BigReal:
    """Closed form of the density integral over the omitted tail:

        integral_T^inf (1/2pi) log(t/2pi) t^(-2j) dt
          = (1/2pi) T^(-(2j-1)) (1/(2j-1)) (log(T/2pi) + 1/(2j-1)).
    """
    if j < 1:
        raise ValueError("tail_integral needs j >= 1")
    with mp.workdps(precision + 10):
        Tv = T.value if isinstance(T, BigReal) else mpmath.mpf(T)
        twopi = 2 * mp.pi
        inv = mpmath.mpf(1) / (2 * j - 1)
        value = (1 / twopi) * Tv ** (-(2 * j - 1)) * inv * (mpmath.log(Tv / twopi) + inv)
        return BigReal(value, precision)


def z_tail_bound(j: int, zeros: ZeroList, precision: int = DEFAULT_DIGITS) -> BigReal:
    """Upper bound on the omitted tail of z_partial(j).

    Twice the density integral beyond the last ingested ordinate: the
    zero-counting function fluctuates around the smooth density, and the
    factor 2 absorbs that fluctuation over every range relevant here.
    """
    return tail_integral(j, zeros.last, precision) * 2


def delta_bound(n: int, precision: int = DEFAULT_DIGITS) -> BigReal:
    """Bound on the dropped remainder Delta(n) = sum_rho (-1)^(n-1) rho^(-n):

        |Delta(n)| < (1/2pi) (1/14)^(2n-1) (1/(2n-1)) (log(14/2pi) + 1/(2n-1)).

    This is the density integral from the first-zero height; it does not
    assume anything about the real parts of the zeros.
    """
    if n < 1:
        raise ValueError("delta_bound needs n >= 1")
    with mp.workdps(precision + 10):
        twopi = 2 * mp.pi
        inv = mpmath.mpf(1) / (2 * n - 1)
        value = (
            (1 / twopi)
            * mpmath.mpf(14) ** (-(2 * n - 1))
            * inv
            * (mpmath.log(14 / twopi) + inv)
        )
        return BigReal(value, precision)


@dataclass(frozen=True)
class InversionCheck:
    """One row of the lambda <-> zero-sum consistency check."""

    n: int
    lhs: BigReal            # alternating central-binomial combination of lambdas
    z_truncated: BigReal    # partial power sum over ingested zeros
    tail_bound: BigReal
    allowance: BigReal      # extra slack for lambda rounding
    consistent: bool

    @property
    def residual(self) -> BigReal:
        return abs(self.lhs - self.z_truncated)


def inversion_check(
    n: int,
    lambdas: LambdaTable,
    zeros: ZeroList,
    precision: int = DEFAULT_DIGITS,
    allowance: Optional[BigReal] = None,
) -> InversionCheck:
    """Check sum_{k=0}^n (-1)^(k-1) C(2n, n-k) lambda_k = Z(n) within bounds.

    The k = 0 term vanishes (lambda_0 = 0 by convention).  The right side is
    only available truncated, so consistency means

        |LHS - z_partial(n)| <= z_tail_bound(n) + allowance

    with a tiny allowance (default 10^-40) for the rounding of the lambda
    values themselves.
    """
    if n < 1:
        raise ValueError("inversion_check needs n >= 1")
    if lambdas.n_max < n:
        raise ValueError(
            f"lambda table covers n <= {lambdas.n_max}, need n = {n}"
        )
    if allowance is None:
        allowance = BigReal(1, precision) / (10 ** 40)
    lhs = BigReal.zero(precision)
    for k in range(1, n + 1):
        weight = parity_sign(k - 1) * binomial(2 * n, n - k)
        lhs = lhs + lambdas.lam(k) * weight
    z_trunc = z_partial(n, zeros, precision)
    bound = z_tail_bound(n, zeros, precision)
    residual = abs(lhs - z_trunc)
    consistent = residual <= bound + allowance
    return InversionCheck(
        n=n,
        lhs=lhs,
        z_truncated=z_trunc,
        tail_bound=bound,
        allowance=allowance,
        consistent=consistent,
    )
