from fractions import Fraction

import pytest

from thetazeros.fixtures import RK_FIRST_20
from thetazeros.rk import (
    RkTable,
    aux_coefficients,
    cross_validate,
    difference_monotonicity,
    ratio_profile,
    rk_euler_cube,
    rk_recurrence,
    rk_triple_product,
    triple_product_series,
    verify_triple_product,
)
from thetazeros.series import make_series, one


class TestRecurrence:
    def test_first_six(self):
        assert rk_recurrence(5).values == (1, 3, 9, 22, 51, 108)

    def test_seed(self):
        assert rk_recurrence(0).values == (1,)

    def test_first_twenty(self):
        assert rk_recurrence(20).values == (1,) + RK_FIRST_20

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            rk_recurrence(-1)


class TestEulerCubeRoute:
    def test_first_four(self):
        assert rk_euler_cube(3).values == (1, 3, 9, 22)

    def test_seed(self):
        assert rk_euler_cube(0).values == (1,)


class TestTripleProductSeries:
    def test_order_six(self):
        assert triple_product_series(6).coeffs == (1, -3, 0, 5, 0, 0, -7)

    def test_order_zero(self):
        assert triple_product_series(0).coeffs == (1,)

    def test_fifth_term(self):
        assert triple_product_series(10).coeff(10) == 9

    def test_verification_small_orders(self):
        assert verify_triple_product(0).ok
        assert verify_triple_product(6).ok

    def test_verification_order_200(self):
        report = verify_triple_product(200)
        assert report.ok and report.first_mismatch is None


class TestCrossValidation:
    def test_three_way_small(self):
        cv = cross_validate(50)
        assert cv.agree
        assert cv.values == rk_recurrence(50).values

    def test_three_way_1000(self):
        assert cross_validate(1000).agree

    def test_methods_pairwise(self):
        n = 200
        assert rk_recurrence(n).values == rk_euler_cube(n).values
        assert rk_recurrence(n).values == rk_triple_product(n).values


class TestRkTableValidation:
    def test_bad_method(self):
        with pytest.raises(ValueError):
            RkTable(1, (1, 3), "guesswork")

    def test_bad_seed(self):
        with pytest.raises(ValueError):
            RkTable(1, (2, 3), "recurrence")

    def test_length_mismatch(self):
        with pytest.raises(ValueError):
            RkTable(3, (1, 3), "recurrence")


class TestAuxTable:
    def test_matches_literal_products(self):
        # independent oracle: build W from the literal product over k >= 2,
        # then attach factors of R = 1/(1-q) one at a time
        n = 300
        tail = one(n)
        for k in range(2, n + 1):
            tail = tail * make_series([1] + [0] * (k - 1) + [-1] + [0] * (n - k))
        w = (tail**3).inverse()
        r_geo = make_series([1, -1] + [0] * (n - 1)).inverse()
        rw = w * r_geo
        rrw = rw * r_geo
        rrrw = rrw * r_geo
        aux = aux_coefficients(n)
        assert aux.u == w.coeffs
        assert aux.t == rw.coeffs
        assert aux.s == rrw.coeffs
        assert aux.r == rrrw.coeffs

    def test_telescoping_and_positivity(self):
        aux = aux_coefficients(2000)
        assert aux.telescoping_failure() is None
        assert aux.positivity_failure() is None

    def test_u1_is_zero(self):
        # the W product has no linear term, which is why positivity starts at k = 2
        assert aux_coefficients(5).u[1] == 0


class TestDifferenceMonotonicity:
    def test_small(self):
        r = rk_recurrence(6).values
        d1 = [r[k + 1] - r[k] for k in range(5)]
        assert d1 == [2, 6, 13, 29, 57]
        report = difference_monotonicity(20)
        assert report.all_ok

    def test_minimal_n(self):
        # at n = 3 the second differences compared include 7 < 16
        r = rk_recurrence(5).values
        assert r[3] - 2 * r[2] + r[1] == 7
        assert r[4] - 2 * r[3] + r[2] == 16
        assert difference_monotonicity(3).all_ok

    def test_n_too_small(self):
        with pytest.raises(ValueError):
            difference_monotonicity(2)


class TestRatioProfile:
    def test_first_ratio(self):
        assert ratio_profile(1).ratios[0] == Fraction(3, 1)

    def test_fifth_ratio(self):
        assert ratio_profile(5).ratios[4] == Fraction(108, 51)

    def test_observed_decreasing_prefix(self):
        profile = ratio_profile(400)
        assert profile.decreasing_observed_from_1
        assert profile.first_non_decrease is None

    def test_tail_ratio_near_one(self):
        profile = ratio_profile(2000)
        assert 1.0 < profile.last_ratio < 1.2

    def test_ratios_exact(self):
        profile = ratio_profile(30)
        r = rk_recurrence(30).values
        assert all(
            profile.ratios[k] == Fraction(r[k + 1], r[k]) for k in range(30)
        )
