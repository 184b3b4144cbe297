"""Fundamental constants: Stieltjes coefficients, zeta at integers, polygamma.

The Stieltjes coefficients gamma_k (the Laurent coefficients of zeta about
s = 1) are loaded from a bundled table rather than recomputed: high-index
gamma_k are expensive, and a fixed table keeps results reproducible.  The
loader cross-validates the table's gamma_0 entry against an independently
computed Euler constant before anything downstream can consume it.

``zeta_int`` evaluates zeta at integer arguments >= 2 by Euler-Maclaurin
summation with an explicit error-term cutoff; it exists so the polygamma
values at 1/2 (used by the trend computation) do not depend on any library
zeta routine.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, Optional

import mpmath
from mpmath import mp

from .bigreal import BigReal, DEFAULT_DIGITS
from .datafiles import DataFormatError, default_stieltjes_path, parse_indexed_table


class ConstantsError(ValueError):
    """Raised for unusable constants tables or out-of-domain requests."""


def euler_gamma(precision: int = DEFAULT_DIGITS) -> BigReal:
    """Euler's constant at the requested precision."""
    with mp.workdps(precision + 10):
        value = +mp.euler
    return BigReal(value, precision)


def log_pi(precision: int = DEFAULT_DIGITS) -> BigReal:
    with mp.workdps(precision + 10):
        value = mpmath.log(mp.pi)
    return BigReal(value, precision)


def log_two(precision: int = DEFAULT_DIGITS) -> BigReal:
    with mp.workdps(precision + 10):
        value = mpmath.log(2)
    return BigReal(value, precision)


@dataclass(frozen=True)
class StieltjesTable:
    """Stieltjes coefficients gamma_0..gamma_{k_max} at a common digit count."""

    entries: Dict[int, BigReal]
    digits: int
    source: str = ""

    @property
    def k_max(self) -> int:
        return max(self.entries)

    def gamma(self, k: int) -> BigReal:
        try:
            return self.entries[k]
        except KeyError:
            raise ConstantsError(
                f"Stieltjes table covers k <= {self.k_max}; gamma_{k} missing"
            ) from None

    def require(self, k_max: int) -> None:
        for k in range(k_max + 1):
            if k not in self.entries:
                raise ConstantsError(
                    f"Stieltjes table is missing gamma_{k} "
                    f"(need k = 0..{k_max}, table has k <= {self.k_max})"
                )


def load_stieltjes(path: Optional[Path] = None, precision: Optional[int] = None) -> StieltjesTable:
    """Load and validate a Stieltjes-coefficient table.

    Validation: the file must contain contiguous indices starting at 0, and
    the k = 0 entry must agree with an independently computed Euler constant
    to the table's stated digit count (minus a 2-digit margin for the table's
    own final-place rounding).  A table whose first entry is wrong poisons
    every downstream coefficient, so this failure is loud and early.
    """
    if path is None:
        path = default_stieltjes_path()
    metadata, rows = parse_indexed_table(path)
    digits = int(metadata.get("digits", 0)) or _min_value_digits(rows)
    if precision is not None:
        digits = min(digits, precision)
    if digits < 10:
        raise ConstantsError(f"{path}: table digit count {digits} too small")
    entries: Dict[int, BigReal] = {}
    expected = 0
    for index, text in rows:
        if index != expected:
            raise ConstantsError(
                f"{path}: Stieltjes indices must be contiguous from 0; "
                f"expected {expected}, found {index}"
            )
        entries[index] = BigReal(text, digits)
        expected += 1
    reference = euler_gamma(digits)
    if not entries[0].agrees_to(reference, digits - 2):
        raise ConstantsError(
            f"{path}: gamma_0 entry {entries[0].digits_str(20)} does not match "
            f"the Euler constant {reference.digits_str(20)}"
        )
    return StieltjesTable(entries=entries, digits=digits, source=metadata.get("source", str(path)))


def _min_value_digits(rows) -> int:
    def digit_count(text: str) -> int:
        body = text.lstrip("+-")
        return len(body.replace(".", "").lstrip("0"))

    return min(digit_count(text) for _, text in rows)


def zeta_int(k: int, precision: int = DEFAULT_DIGITS) -> BigReal:
    """zeta(k) for integer k >= 2 by Euler-Maclaurin summation.

    With N direct terms and correction terms through the Bernoulli number
    B_{2j}, the remainder is bounded by the first omitted correction term;
    terms are added until they drop below the target or stop shrinking.
    """
    if not isinstance(k, int) or k < 2:
        raise ConstantsError(f"zeta_int needs an integer k >= 2, got {k!r}")
    work = precision + 15
    with mp.workdps(work):
        N = max(10, precision)
        s = mpmath.mpf(k)
        total = mpmath.fsum(mpmath.mpf(n) ** (-s) for n in range(1, N))
        Nf = mpmath.mpf(N)
        total += Nf ** (1 - s) / (s - 1)
        total += Nf ** (-s) / 2
        target = mpmath.mpf(10) ** (-(precision + 10))
        # correction term j: B_{2j}/(2j)! * (s)(s+1)...(s+2j-2) * N^(-s-2j+1)
        rising = s  # product of (s+i) for i = 0..2j-2, started at j = 1
        power = Nf ** (-s - 1)
        previous = None
        for j in range(1, 200):
            term = mpmath.bernoulli(2 * j) / mpmath.factorial(2 * j) * rising * power
            total += term
            magnitude = abs(term)
            if magnitude < target:
                break
            if previous is not None and magnitude >= previous:
                raise ConstantsError(
                    f"zeta_int({k}) correction terms stopped converging at j={j}"
                )
            previous = magnitude
            rising *= (s + 2 * j - 1) * (s + 2 * j)
            power /= Nf * Nf
        else:  # pragma: no cover - loop bound generous
            raise ConstantsError(f"zeta_int({k}) did not reach target precision")
        value = +total
    return BigReal(value, precision)


def polygamma_half(k: int, precision: int = DEFAULT_DIGITS) -> BigReal:
    """psi^(k)(1/2): digamma and its derivatives at one half.

    Closed forms: psi(1/2) = -gamma - 2 log 2, and for k >= 1

        psi^(k)(1/2) = (-1)^(k+1) * k! * (2^(k+1) - 1) * zeta(k+1).
    """
    if not isinstance(k, int) or k < 0:
        raise ConstantsError(f"polygamma_half needs an integer k >= 0, got {k!r}")
    if k == 0:
        return -(euler_gamma(precision) + 2 * log_two(precision))
    sign = -1 if (k + 1) % 2 else 1
    with mp.workdps(precision + 10):
        factor = mpmath.factorial(k) * (mpmath.mpf(2) ** (k + 1) - 1)
        value = sign * factor * zeta_int(k + 1, precision + 5).value
    return BigReal(value, precision)


@dataclass(frozen=True)
class FundamentalConstants:
    """The handful of constants the asymptotic-model formulas share."""

    precision: int
    gamma: BigReal = field(repr=False)
    log2pi: BigReal = field(repr=False)
    log4pi: BigReal = field(repr=False)
    c_model: BigReal = field(repr=False)


def fundamental_constants(precision: int = DEFAULT_DIGITS) -> FundamentalConstants:
    """gamma, log 2pi, log 4pi, and the model's additive constant

        c = (gamma - 1 - log 2pi) / 2,

    which is the constant term in the large-n model (1/2) log n + c + gamma
    for the normalized coefficients.
    """
    gamma = euler_gamma(precision)
    with mp.workdps(precision + 10):
        l2pi = mpmath.log(2 * mp.pi)
        l4pi = mpmath.log(4 * mp.pi)
    log2pi = BigReal(l2pi, precision)
    log4pi = BigReal(l4pi, precision)
    c_model = (gamma - 1 - log2pi) / 2
    return FundamentalConstants(
        precision=precision, gamma=gamma, log2pi=log2pi, log4pi=log4pi, c_model=c_model
    )
