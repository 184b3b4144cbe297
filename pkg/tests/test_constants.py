"""Constants are checked against independently derived oracles.

The shipped Stieltjes table and the helper constants all ultimately come
from one library, so the tests here recompute the anchor values by
unrelated routes: Brent-McMillan for the Euler constant, an explicit
Euler-Maclaurin expansion of sum(log k / k) for the first Stieltjes
coefficient, and the Apery central-binomial series for zeta(3).
"""

from pathlib import Path

import mpmath
import pytest
from mpmath import mp

from likeiper import (
    BigReal,
    ConstantsError,
    big,
    euler_gamma,
    fundamental_constants,
    load_stieltjes,
    log_pi,
    log_two,
    polygamma_half,
    zeta_int,
)
from likeiper.constants import default_stieltjes_path


def brent_mcmillan_gamma(dps: int = 70, n: int = 35) -> mpmath.mpf:
    """Euler's constant via the Bessel-function ratio.

    gamma = (sum H_k a_k) / (sum a_k) - log n  with  a_k = (n^k / k!)^2;
    the error is O(e^(-4n)), about 1e-60 at n = 35.
    """
    with mp.workdps(dps + 10):
        a = mp.mpf(1)
        h = mp.mpf(0)
        num = mp.mpf(0)
        den = mp.mpf(0)
        for k in range(0, 6 * n):
            num += a * h
            den += a
            a *= mp.mpf(n) ** 2 / (k + 1) ** 2
            h += mp.mpf(1) / (k + 1)
        return num / den - mp.log(n)


def euler_maclaurin_gamma1(dps: int = 60, big_n: int = 60, terms: int = 14) -> mpmath.mpf:
    """First Stieltjes coefficient via Euler-Maclaurin for f(x) = log(x)/x.

    Uses f^(m)(x) = (-1)^m m! (log x - H_m) / x^(m+1), which turns the
    correction terms into  B_2j/(2j) * (log N - H_{2j-1}) / N^(2j).
    With N = 60 and 14 terms the truncation error is near 1e-42.
    """
    with mp.workdps(dps + 15):
        n = mp.mpf(big_n)
        total = mp.fsum(mp.log(k) / k for k in range(1, big_n + 1))
        total -= mp.log(n) ** 2 / 2
        total -= mp.log(n) / (2 * n)
        for j in range(1, terms + 1):
            harmonic = mp.fsum(mp.mpf(1) / i for i in range(1, 2 * j))
            total += mp.bernoulli(2 * j) / (2 * j) * (mp.log(n) - harmonic) / n ** (2 * j)
        return total


def apery_zeta3(dps: int = 60) -> mpmath.mpf:
    """zeta(3) = (5/2) sum_{k>=1} (-1)^(k-1) / (k^3 C(2k,k))."""
    with mp.workdps(dps + 10):
        total = mp.mpf(0)
        for k in range(1, 120):
            total += mp.mpf((-1) ** (k - 1)) / (k**3 * mp.binomial(2 * k, k))
        return mp.mpf(5) / 2 * total


def agrees(x: BigReal, y_mpf: mpmath.mpf, digits: int) -> bool:
    with mp.workdps(max(x.precision, digits) + 10):
        return bool(abs(x.value - y_mpf) < mp.mpf(10) ** (-digits))


class TestEulerGamma:
    def test_brent_mcmillan_oracle(self):
        oracle = brent_mcmillan_gamma()
        assert agrees(euler_gamma(60), oracle, 50)

    def test_precision_stability(self):
        assert euler_gamma(60).agrees_to(euler_gamma(100), 55)

    def test_known_digits(self):
        assert euler_gamma(30).to_decimal_string(10) == "0.5772156649"


class TestZetaInt:
    def test_apery_oracle(self):
        assert agrees(zeta_int(3, 60), apery_zeta3(), 50)

    def test_basel(self):
        with mp.workdps(70):
            assert agrees(zeta_int(2, 60), mp.pi**2 / 6, 55)

    @pytest.mark.parametrize("k", range(2, 21))
    def test_matches_library(self, k):
        with mp.workdps(70):
            assert agrees(zeta_int(k, 60), mp.zeta(k), 55)

    def test_rejects_pole_and_small(self):
        with pytest.raises(ValueError):
            zeta_int(1, 50)
        with pytest.raises(ValueError):
            zeta_int(0, 50)


class TestPolygammaHalf:
    @pytest.mark.parametrize("k", range(0, 9))
    def test_matches_library(self, k):
        with mp.workdps(70):
            assert agrees(polygamma_half(k, 60), mp.psi(k, mp.mpf("0.5")), 50)

    def test_base_value_closed_form(self):
        # psi(1/2) = -gamma - 2 log 2
        expected = -euler_gamma(60) - big(2, 60) * log_two(60)
        assert polygamma_half(0, 60).agrees_to(expected, 55)

    @pytest.mark.parametrize("k", range(1, 9))
    def test_zeta_closed_form(self, k):
        # psi^(k)(1/2) = (-1)^(k+1) k! (2^(k+1) - 1) zeta(k+1)
        fact = 1
        for i in range(2, k + 1):
            fact *= i
        sign = 1 if (k + 1) % 2 == 0 else -1
        expected = big(sign * fact * (2 ** (k + 1) - 1), 60) * zeta_int(k + 1, 60)
        assert polygamma_half(k, 60).agrees_to(expected, 52)


class TestStieltjesTable:
    def test_load_default(self, stieltjes):
        assert stieltjes.digits == 100
        assert stieltjes.k_max == 80
        stieltjes.require(80)

    def test_require_beyond_range(self, stieltjes):
        with pytest.raises(ConstantsError):
            stieltjes.require(81)
        with pytest.raises(ConstantsError):
            stieltjes.gamma(81)

    def test_gamma0_oracle(self, stieltjes):
        assert agrees(stieltjes.gamma(0), brent_mcmillan_gamma(), 50)

    def test_gamma1_oracle(self, stieltjes):
        assert agrees(stieltjes.gamma(1), euler_maclaurin_gamma1(), 35)

    def test_precision_clamp(self):
        table = load_stieltjes(precision=30)
        assert table.digits == 30
        assert table.gamma(0).precision == 30

    def test_default_path_exists(self):
        assert default_stieltjes_path().is_file()


def write_table(tmp_path: Path, body: str, digits: int = 30) -> Path:
    path = tmp_path / "table.tsv"
    path.write_text(f"# digits: {digits}\n{body}")
    return path


GAMMA0 = "0.577215664901532860606512090082"
GAMMA1 = "-0.072815845483676724860586375875"


class TestLoadErrors:
    def test_gap_in_indices(self, tmp_path):
        path = write_table(tmp_path, f"0\t{GAMMA0}\n2\t{GAMMA1}\n")
        with pytest.raises(ConstantsError, match="contiguous"):
            load_stieltjes(path)

    def test_not_starting_at_zero(self, tmp_path):
        path = write_table(tmp_path, f"1\t{GAMMA1}\n")
        with pytest.raises(ConstantsError, match="contiguous"):
            load_stieltjes(path)

    def test_wrong_gamma0_rejected(self, tmp_path):
        path = write_table(tmp_path, f"0\t0.577215664901532860606512090182\n1\t{GAMMA1}\n")
        with pytest.raises(ConstantsError, match="Euler constant"):
            load_stieltjes(path)

    def test_digit_count_too_small(self, tmp_path):
        path = write_table(tmp_path, "0\t0.5772156649\n", digits=8)
        with pytest.raises(ConstantsError, match="too small"):
            load_stieltjes(path)

    def test_good_small_table_loads(self, tmp_path):
        path = write_table(tmp_path, f"0\t{GAMMA0}\n1\t{GAMMA1}\n")
        table = load_stieltjes(path)
        assert table.k_max == 1
        assert table.digits == 30


class TestFundamentalConstants:
    def test_model_constant_digits(self):
        fc = fundamental_constants(50)
        assert fc.c_model.to_decimal_string(4) == "-1.1303"

    def test_fields_consistent(self):
        fc = fundamental_constants(60)
        assert fc.gamma.agrees_to(euler_gamma(60), 55)
        # log(4 pi) - log(2 pi) = log 2
        assert (fc.log4pi - fc.log2pi).agrees_to(log_two(60), 55)
        with mp.workdps(70):
            assert agrees(fc.log2pi, mp.log(2 * mp.pi), 55)

    def test_c_model_definition(self):
        # c = (gamma - 1 - log 2pi) / 2
        fc = fundamental_constants(60)
        direct = (fc.gamma - big(1, 60) - fc.log2pi) / 2
        assert fc.c_model.agrees_to(direct, 55)

    def test_log_helpers(self):
        with mp.workdps(70):
            assert agrees(log_pi(60), mp.log(mp.pi), 55)
            assert agrees(log_two(60), mp.log(2), 55)
