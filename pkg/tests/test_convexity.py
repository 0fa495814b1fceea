import math

import pytest

from thetazeros.convexity import (
    bridge_bound,
    convexity_margins,
    curvature_part_coeff,
    default_grid,
    euler_cube,
    euler_cube_d2,
    euler_d2,
    euler_profile,
    euler_value,
    log_derivative,
    log_second_derivative,
    partial_sum_gaps,
    square_part_coeff,
)


class TestPartCoeffs:
    def test_s0_closed_form(self):
        for q in (0.1, 0.5, 0.9):
            assert square_part_coeff(0, q) == pytest.approx(3.0 / (1 - q) ** 4, rel=1e-14)
            expected = 1.0 / (1 - q * q) ** 2 + 2.0 / (1 - q) ** 3
            assert curvature_part_coeff(0, q) == pytest.approx(expected, rel=1e-14)

    def test_s1_closed_form(self):
        for q in (0.2, 0.6):
            expected = 6.0 / ((1 - q) ** 2 * (1 - q * q) ** 2)
            assert square_part_coeff(1, q) == pytest.approx(expected, rel=1e-14)

    def test_hand_values_at_half(self):
        assert square_part_coeff(0, 0.5) == pytest.approx(48.0)
        assert curvature_part_coeff(0, 0.5) == pytest.approx(17.7777777777778, rel=1e-12)

    def test_curvature_below_simple_bound(self):
        for q in (0.1, 0.4, 0.8, 0.95):
            for s in (0, 1, 2, 5, 17, 60):
                assert curvature_part_coeff(s, q) < 3 * (s + 1) / (1 - q ** (s + 1)) ** 3

    def test_domain(self):
        with pytest.raises(ValueError):
            square_part_coeff(0, 1.0)
        with pytest.raises(ValueError):
            curvature_part_coeff(0, 0.0)
        with pytest.raises(ValueError):
            square_part_coeff(-1, 0.5)


class TestPartialSums:
    def test_gap_at_q03_s80(self):
        g_sq, g_d2 = partial_sum_gaps(0.3, 80)
        assert g_sq < 1e-10 and g_d2 < 1e-10

    def test_gaps_criterion_points(self):
        for q in (0.1, 0.3, 0.5):
            g_sq, g_d2 = partial_sum_gaps(q, 200)
            assert g_sq < 1e-8 and g_d2 < 1e-8

    def test_log_derivatives_match_series_definitions(self):
        q = 0.3
        lp = -sum(q ** (k - 1) / (1 - q**k) ** 2 for k in range(1, 200))
        assert log_derivative(q) == pytest.approx(lp, rel=1e-13)
        u = -sum((k - 1) * q ** (k - 2) / (1 - q**k) ** 2 for k in range(2, 200))
        v = -sum(k * q ** (2 * k - 2) / (1 - q**k) ** 3 for k in range(1, 200))
        assert log_second_derivative(q) == pytest.approx(u + 2 * v, rel=1e-13)


class TestMarginChain:
    def test_chain_pointwise(self):
        for q in (0.05, 0.25, 0.5, 0.75, 0.95):
            for s in range(61):
                a = square_part_coeff(s, q)
                b = curvature_part_coeff(s, q)
                mid = bridge_bound(s, q)
                assert a > mid > b

    def test_grid_report(self):
        report = convexity_margins(default_grid(0.05), 60)
        assert report.all_pass and report.bridge_ok
        assert report.min_margin > 0
        assert report.mpp_min > 0

    def test_margin_shrinks_toward_origin(self):
        # the s = 0 margin degenerates to zero as q -> 0, which is why the
        # grid stays interior
        m_small = square_part_coeff(0, 0.01) - curvature_part_coeff(0, 0.01)
        m_mid = square_part_coeff(0, 0.3) - curvature_part_coeff(0, 0.3)
        assert 0 < m_small < m_mid

    def test_grid_validation(self):
        with pytest.raises(ValueError):
            convexity_margins([0.5, 1.0], 10)
        with pytest.raises(ValueError):
            convexity_margins([0.5], -1)


class TestSecondDerivative:
    def test_positive_on_unit_interval(self):
        for q in (0.01, 0.2, 0.5, 0.9, 0.99):
            assert euler_cube_d2(q) > 0

    def test_matches_closed_form(self):
        for q in (0.2, 0.37, 0.6):
            lp = log_derivative(q)
            lpp = log_second_derivative(q)
            closed = (9 * lp * lp + 3 * lpp) * euler_cube(q)
            assert euler_cube_d2(q) == pytest.approx(closed, rel=1e-9)

    def test_matches_finite_differences(self):
        q, h = 0.4, 1e-4
        fd = (euler_cube(q + h) - 2 * euler_cube(q) + euler_cube(q - h)) / h**2
        assert euler_cube_d2(q) == pytest.approx(fd, rel=1e-6)

    def test_small_q_linear_regime(self):
        # M'' = 30 q - 210 q^4 + ..., so the leading behavior near 0 is 30 q
        assert euler_cube_d2(0.01) == pytest.approx(0.2999979, rel=1e-6)
        assert euler_cube_d2(0.0) == 0.0

    def test_terms_override(self):
        assert euler_cube_d2(0.5, terms=30) == pytest.approx(euler_cube_d2(0.5), rel=1e-12)

    def test_domain(self):
        with pytest.raises(ValueError):
            euler_cube_d2(1.0)


class TestEulerProfile:
    def test_values(self):
        assert euler_value(0.0) == 1.0
        assert euler_cube(0.0) == 1.0
        # first factors dominate: E(0.5) ~ 0.5 * 0.75 * 0.875 * ...
        manual = math.prod(1 - 0.5**k for k in range(1, 60))
        assert euler_value(0.5) == pytest.approx(manual, rel=1e-12)
        assert 0.0 < euler_cube(0.5) < 1.0

    def test_slope_at_origin(self):
        h = 1e-6
        slope = (euler_cube(h) - euler_cube(-h)) / (2 * h)
        assert slope == pytest.approx(-3.0, abs=1e-5)

    def test_profile_summary(self):
        grid = [x / 100 for x in range(-99, 100) if x != 0]
        profile = euler_profile(grid)
        assert profile.all_positive
        assert profile.decreasing_on_unit_interval
        assert -1.0 < profile.argmax_m < 0.0
        assert -1.0 < profile.argmax_e < 0.0
        assert profile.argmax_m == profile.argmax_e
        assert euler_cube(profile.argmax_m) > 1.0

    def test_inflection_brackets(self):
        grid = [x / 100 for x in range(-99, 100) if x != 0]
        profile = euler_profile(grid)
        # the cube has an inflection at the origin and more inside (-1, 0);
        # the product itself has one in (-1, 0) and one in (0, 1)
        assert any(lo < 0.0 < hi for lo, hi in profile.m_inflection_brackets)
        assert any(hi < 0.0 for lo, hi in profile.m_inflection_brackets)
        assert any(hi < 0.0 for lo, hi in profile.e_inflection_brackets)
        assert any(lo > 0.0 for lo, hi in profile.e_inflection_brackets)

    def test_second_derivative_signs_near_zero(self):
        assert euler_cube_d2(-0.05) < 0
        assert euler_cube_d2(0.05) > 0
        assert euler_d2(-0.05) < 0

    def test_grid_validation(self):
        with pytest.raises(ValueError):
            euler_profile([0.5, 1.5])
        with pytest.raises(ValueError):
            euler_value(1.0)
