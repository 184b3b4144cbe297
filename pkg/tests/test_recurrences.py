from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from mpmath import mp

from likeiper import (
    FULL_HISTORY,
    ORDER_M,
    SELF_SEEDED,
    VOROS,
    BigReal,
    HistoryError,
    RecurrenceScheme,
    big,
    closed_form_check_linear,
    discrete_derivative,
    model_predictor,
    parity_sign,
    phi_nlogn,
    predict_full_history,
    predict_order_m,
    predict_voros,
    prediction_run,
    self_seeded_run,
)


def poly_values(coeffs, upto):
    """[P(0), P(1), ..., P(upto)] for P(x) = sum coeffs[d] x^d, exact."""
    return [
        sum(Fraction(c) * Fraction(k) ** d for d, c in enumerate(coeffs))
        for k in range(upto + 1)
    ]


class TestDiscreteDerivative:
    def test_second_difference_kills_linear(self):
        f = poly_values([0, 1], 6)  # f(k) = k
        assert discrete_derivative(f, 6, 2) == 0

    def test_second_difference_of_square(self):
        f = poly_values([0, 0, 1], 6)  # f(k) = k^2
        assert discrete_derivative(f, 6, 2) == 2

    def test_third_difference_of_cube(self):
        f = poly_values([0, 0, 0, 1], 6)  # f(k) = k^3
        assert discrete_derivative(f, 6, 3) == 6

    @pytest.mark.parametrize("degree", range(6))
    @pytest.mark.parametrize("order", range(1, 7))
    def test_polynomial_annihilation(self, degree, order):
        # order > degree annihilates; order == degree maps leading a to a * order!
        coeffs = [Fraction(d + 2, 2 * d + 3) for d in range(degree + 1)]
        f = poly_values(coeffs, 8)
        result = discrete_derivative(f, 8, order)
        if order > degree:
            assert result == 0
        elif order == degree:
            factorial = 1
            for i in range(2, order + 1):
                factorial *= i
            assert result == coeffs[-1] * factorial

    def test_order_zero_is_value(self):
        f = poly_values([5, 1], 4)
        assert discrete_derivative(f, 4, 0) == f[0]

    def test_errors(self):
        f = poly_values([0, 1], 3)
        with pytest.raises(ValueError):
            discrete_derivative(f, 3, -1)
        with pytest.raises(HistoryError):
            discrete_derivative(f, 3, 4)
        with pytest.raises(HistoryError):
            discrete_derivative([Fraction(0)], 3, 3)

    @settings(max_examples=30, deadline=None)
    @given(
        f=st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=50), min_size=5, max_size=5),
        g=st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=50), min_size=5, max_size=5),
        alpha=st.fractions(min_value=-4, max_value=4, max_denominator=9),
        beta=st.fractions(min_value=-4, max_value=4, max_denominator=9),
        m=st.integers(min_value=0, max_value=4),
    )
    def test_linearity(self, f, g, alpha, beta, m):
        combined = [alpha * x + beta * y for x, y in zip(f, g)]
        lhs = discrete_derivative(combined, 4, m)
        rhs = alpha * discrete_derivative(f, 4, m) + beta * discrete_derivative(g, 4, m)
        assert lhs == rhs


class TestPredictOrderM:
    def test_exact_on_linear(self):
        history = poly_values([0, 3], 9)  # f(k) = 3k
        for n in range(2, 10):
            assert predict_order_m(history[:n], n, 2) == 3 * n

    def test_order3_exact_on_quadratic(self):
        history = poly_values([0, 0, 1], 9)  # f(k) = k^2
        for n in range(3, 10):
            assert predict_order_m(history[:n], n, 3) == n * n

    def test_boundary_uses_zero_at_origin(self):
        # at n = m the lowest index is 0, which is pinned to value 0
        history = [Fraction(0), Fraction(5)]
        assert predict_order_m(history, 2, 2) == 10

    def test_errors(self):
        history = poly_values([0, 1], 4)
        with pytest.raises(ValueError):
            predict_order_m(history, 4, 1)
        with pytest.raises(HistoryError):
            predict_order_m(history, 2, 3)


class TestPredictFullHistory:
    def test_n4_weights(self):
        h = [Fraction(0), Fraction(10), Fraction(100), Fraction(1000)]
        assert predict_full_history(h, 4) == 4 * 1000 - 6 * 100 + 4 * 10

    def test_empty_sum_at_n1(self):
        assert predict_full_history([Fraction(0)], 1) == 0
        zero = predict_full_history([BigReal.zero(40)], 1)
        assert isinstance(zero, BigReal) and zero.to_fraction() == 0

    def test_exact_on_linear_through_origin(self):
        history = poly_values([0, Fraction(7, 3)], 12)
        for n in range(2, 13):
            assert predict_full_history(history[:n], n) == Fraction(7, 3) * n

    def test_history_too_short(self):
        with pytest.raises(HistoryError):
            predict_full_history([Fraction(0), Fraction(1)], 4)

    @settings(max_examples=25, deadline=None)
    @given(
        f=st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=50), min_size=6, max_size=6),
        g=st.lists(st.fractions(min_value=-9, max_value=9, max_denominator=50), min_size=6, max_size=6),
        alpha=st.fractions(min_value=-4, max_value=4, max_denominator=9),
    )
    def test_linearity_in_history(self, f, g, alpha):
        combined = [alpha * x + y for x, y in zip(f, g)]
        lhs = predict_full_history(combined, 6)
        rhs = alpha * predict_full_history(f, 6) + predict_full_history(g, 6)
        assert lhs == rhs


class TestPredictVoros:
    def test_n2_weight(self):
        h = [Fraction(0), Fraction(3)]
        assert predict_voros(h, 2) == 12

    def test_n3_weights(self):
        # C(6,1) h(2) - C(6,2) h(1)
        h = [Fraction(0), Fraction(1), Fraction(1)]
        assert predict_voros(h, 3) == 6 - 15

    def test_history_too_short(self):
        with pytest.raises(HistoryError):
            predict_voros([Fraction(0)], 3)


class TestSchemeValidation:
    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            RecurrenceScheme(kind="mystery")

    def test_order_m_needs_m(self):
        with pytest.raises(ValueError):
            RecurrenceScheme(kind=ORDER_M)
        with pytest.raises(ValueError):
            RecurrenceScheme(kind=ORDER_M, m=1)

    def test_other_kinds_reject_m(self):
        with pytest.raises(ValueError):
            RecurrenceScheme(kind=FULL_HISTORY, m=3)
        with pytest.raises(ValueError):
            RecurrenceScheme(kind=VOROS, m=2)

    def test_bad_seed_mode(self):
        with pytest.raises(ValueError):
            RecurrenceScheme(kind=VOROS, seed_mode="psychic")


class TestSelfSeeded:
    def test_voros_squares(self):
        scheme = RecurrenceScheme(kind=VOROS, seed_mode=SELF_SEEDED)
        lam1 = Fraction(1)
        values = self_seeded_run(scheme, lam1, n_max=12)
        assert values == [Fraction(n * n) for n in range(1, 13)]

    def test_voros_rejects_c(self):
        scheme = RecurrenceScheme(kind=VOROS, seed_mode=SELF_SEEDED)
        with pytest.raises(ValueError, match="no c accepted"):
            self_seeded_run(scheme, Fraction(1), c=Fraction(2))

    @pytest.mark.parametrize("c", [2, 3, 4, 7])
    def test_full_history_closed_form(self, c):
        # lambda2 = c lambda1 propagates to ((c/2 - 1) n (n-1) + n) lambda1
        scheme = RecurrenceScheme(kind=FULL_HISTORY, seed_mode=SELF_SEEDED)
        lam1 = Fraction(5, 3)
        values = self_seeded_run(scheme, lam1, c=Fraction(c), n_max=16)
        for n in range(1, 17):
            expected = ((Fraction(c, 2) - 1) * n * (n - 1) + n) * lam1
            assert values[n - 1] == expected

    def test_order2_linear(self):
        scheme = RecurrenceScheme(kind=ORDER_M, m=2, seed_mode=SELF_SEEDED)
        lam1 = Fraction(1)
        values = self_seeded_run(scheme, lam1, c=Fraction(2), n_max=10)
        assert values == [Fraction(n) for n in range(1, 11)]

    def test_order2_affine(self):
        # c != 2 makes the order-2 iteration the affine line 1 + (n-1)(c-1)
        scheme = RecurrenceScheme(kind=ORDER_M, m=2, seed_mode=SELF_SEEDED)
        values = self_seeded_run(scheme, Fraction(1), c=Fraction(3), n_max=8)
        assert values == [Fraction(1 + (n - 1) * 2) for n in range(1, 9)]

    def test_missing_c(self):
        scheme = RecurrenceScheme(kind=FULL_HISTORY, seed_mode=SELF_SEEDED)
        with pytest.raises(ValueError, match="initial condition"):
            self_seeded_run(scheme, Fraction(1))

    def test_order3_needs_explicit_initial(self):
        scheme = RecurrenceScheme(kind=ORDER_M, m=3, seed_mode=SELF_SEEDED)
        with pytest.raises(ValueError, match="initial values"):
            self_seeded_run(scheme, Fraction(1))

    def test_order3_quadratic_fixed_point(self):
        scheme = RecurrenceScheme(
            kind=ORDER_M,
            m=3,
            seed_mode=SELF_SEEDED,
            initial=(Fraction(4), Fraction(9)),
        )
        values = self_seeded_run(scheme, Fraction(1), n_max=10)
        assert values == [Fraction(n * n) for n in range(1, 11)]

    def test_requires_self_seeded_mode(self):
        scheme = RecurrenceScheme(kind=VOROS)
        with pytest.raises(ValueError, match="self_seeded"):
            self_seeded_run(scheme, Fraction(1))

    def test_bad_n_max(self):
        scheme = RecurrenceScheme(kind=VOROS, seed_mode=SELF_SEEDED)
        with pytest.raises(ValueError):
            self_seeded_run(scheme, Fraction(1), n_max=0)


class TestPredictionRun:
    def test_exact_history_linear(self):
        scheme = RecurrenceScheme(kind=ORDER_M, m=2)
        history = poly_values([0, 1], 6)
        results = prediction_run(scheme, history, 2, 6)
        assert [r.n for r in results] == [2, 3, 4, 5, 6]
        for r in results:
            assert r.predicted == r.n
            assert r.exact == r.n
            assert r.abs_error == 0
            assert r.rel_error == 0

    def test_zero_exact_gives_no_rel_error(self):
        scheme = RecurrenceScheme(kind=ORDER_M, m=2)
        history = [Fraction(k - 2) for k in range(4)]  # h(2) = 0
        results = prediction_run(scheme, history, 2, 2)
        assert results[0].exact == 0
        assert results[0].abs_error == 2  # 2 h(1) - h(0) = -2 vs exact 0
        assert results[0].rel_error is None

    def test_prediction_past_history_has_no_exact(self):
        scheme = RecurrenceScheme(kind=FULL_HISTORY)
        history = poly_values([0, 1], 5)
        results = prediction_run(scheme, history, 6, 6)
        assert results[0].exact is None
        assert results[0].abs_error is None
        assert results[0].predicted == 6

    def test_on_real_coefficients(self, table7):
        scheme = RecurrenceScheme(kind=FULL_HISTORY)
        results = prediction_run(scheme, table7.tiny_history(), 2, 7)
        for r in results:
            assert r.exact is table7.tiny_part(r.n)
            assert r.abs_error.agrees_to(abs(r.predicted - r.exact), 45)
        # accuracy sharpens fast as more history becomes available
        rel = [r.rel_error for r in results]
        assert all(rel[i] > rel[i + 1] for i in range(len(rel) - 1))
        assert rel[0] < big(1, 50) / 4
        assert rel[-1] < big(1, 50) / 10**3


class TestClosedFormCheckLinear:
    def test_rows_cover_2_through_n_max(self):
        rows = closed_form_check_linear(Fraction(1), Fraction(0), 9)
        assert [n for n, _, _ in rows] == list(range(2, 10))

    def test_zero_intercept_is_exact(self):
        rows = closed_form_check_linear(Fraction(7, 2), Fraction(0), 12)
        for n, predicted, residual in rows:
            assert predicted == Fraction(7, 2) * n
            assert residual == 0

    def test_intercept_survives_on_even_n(self):
        rows = closed_form_check_linear(Fraction(0), Fraction(1), 10)
        for n, predicted, residual in rows:
            expected = 2 if n % 2 == 0 else 0
            assert residual == expected
            assert predicted == expected

    def test_general_affine_pattern(self):
        alpha, beta = Fraction(3, 7), Fraction(-2, 5)
        rows = closed_form_check_linear(alpha, beta, 11)
        for n, predicted, residual in rows:
            expected_residual = 2 * beta if n % 2 == 0 else 0
            assert residual == expected_residual
            assert predicted == alpha * n + expected_residual


class TestOnCoefficientHistories:
    def test_full_history_error_alternates_on_tiny(self, table15):
        scheme = RecurrenceScheme(kind=FULL_HISTORY)
        results = prediction_run(scheme, table15.tiny_history(), 3, 15)
        signs = [1 if r.predicted > r.exact else -1 for r in results]
        for a, b in zip(signs, signs[1:]):
            assert a == -b

    def test_order2_above_order3_below(self, table15):
        # on the normalized tiny ratios, order-2 predictions sit above the
        # exact values and order-3 predictions sit below, for 3 <= n <= 11
        tiny = table15.tiny_history()
        for n in range(3, 12):
            exact = table15.tiny_part(n) / n
            upper = predict_order_m(tiny, n, 2) / n
            lower = predict_order_m(tiny, n, 3) / n
            assert lower < exact < upper


class TestPhiNlogn:
    def test_small_n_zeros(self):
        for n in (1, 2):
            phi1, _ = phi_nlogn(n, 40)
            assert phi1.to_fraction() == 0
        phi1, phi2 = phi_nlogn(1, 40)
        assert phi2.to_fraction() == 0

    def test_phi1_at_3(self):
        phi1, _ = phi_nlogn(3, 50)
        with mp.workdps(60):
            assert abs(phi1.value - 6 * mp.log(2)) < mp.mpf(10) ** -45

    def test_phi2_alternating(self):
        with mp.workdps(60):
            for n in (2, 3, 6, 9):
                _, phi2 = phi_nlogn(n, 50)
                expected = parity_sign(n - 1) * n * mp.log(n)
                assert abs(phi2.value - expected) < mp.mpf(10) ** -45

    def test_gap_shrinks(self):
        gaps = []
        for n in (8, 16, 32):
            phi1, phi2 = phi_nlogn(n, 50)
            gaps.append(abs(phi1 - phi2))
        assert gaps[0] > gaps[1] > gaps[2]
        assert gaps[2] < big(Fraction(31, 100), 50)

    def test_rejects_n_below_1(self):
        with pytest.raises(ValueError):
            phi_nlogn(0)


class TestModelPredictor:
    def test_needs_n_at_least_2(self):
        with pytest.raises(ValueError):
            model_predictor(1)

    @pytest.mark.parametrize("n", [2, 5, 10, 15])
    def test_sign_convention_relation(self, n):
        raw = model_predictor(n, 50, raw_printed_signs=True)
        aligned = model_predictor(n, 50)
        assert raw.agrees_to(aligned * parity_sign(n - 1), 45)

    def test_against_direct_recomputation(self):
        n, digits = 10, 50
        with mp.workdps(digits + 15):
            gamma = mp.euler
            c = (gamma - 1 - mp.log(2 * mp.pi)) / 2
            slope = c + gamma
            total = mp.mpf(0)
            for k in range(1, n):
                g = k * mp.log(k) / 2 + slope * k
                total += mp.mpf(parity_sign(k - n + 1)) * mp.binomial(n, k) * g
            got = model_predictor(n, digits)
            assert abs(got.value - total) < mp.mpf(10) ** -(digits - 5)

    def test_assembles_from_phi_sums(self):
        # by linearity: predictor(g) = (1/2) (-1)^(n-1) phi1(n) + (c+gamma) n
        from likeiper import fundamental_constants

        n = 16
        consts = fundamental_constants(50)
        phi1, phi2 = phi_nlogn(n, 50)
        assembled = phi1 * (parity_sign(n - 1)) / 2 + (consts.c_model + consts.gamma) * n
        assert model_predictor(n, 50).agrees_to(assembled, 44)

    def test_deviation_from_smooth_model_is_half_phi_gap(self):
        # predictor(g)/n - ((1/2) log n + c + gamma) = (phi2 - phi1)/(2n)
        # with the (-1)^(n-1) factor folded in; check the magnitudes agree
        from likeiper import fundamental_constants

        n = 16
        consts = fundamental_constants(50)
        phi1, phi2 = phi_nlogn(n, 50)
        with mp.workdps(60):
            smooth = mp.log(n) / 2 + consts.c_model.value + consts.gamma.value
            deviation = abs(model_predictor(n, 50).value / n - smooth)
            gap = abs((phi1 - phi2).value) / (2 * n)
            assert abs(deviation - gap) < mp.mpf(10) ** -40
