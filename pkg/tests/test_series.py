import random

import pytest

from thetazeros.series import (
    InsufficientOrderError,
    IntSeries,
    LaurentSeries,
    NonInvertibleError,
    euler_product,
    make_series,
    one,
)


def full_poly_mul(a, b):
    """Untruncated polynomial product, the brute-force oracle."""
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for k, bk in enumerate(b):
            out[i + k] += ai * bk
    return out


def random_series(rng, max_order=10, span=9):
    order = rng.randint(0, max_order)
    return make_series([rng.randint(-span, span) for _ in range(order + 1)])


class TestMakeSeries:
    def test_constant(self):
        s = make_series([1])
        assert s.order == 0 and s.coeffs == (1,)

    def test_euler_prefix(self):
        assert make_series([1, -1, -1]).coeffs == (1, -1, -1)

    def test_cube_prefix(self):
        s = make_series([1, -3, 0, 5])
        assert s.order == 3 and s.coeff(3) == 5

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            make_series([])

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            make_series([1, 0.5])


class TestArithmetic:
    def test_difference_of_squares(self):
        a = make_series([1, 1, 0])
        b = make_series([1, -1, 0])
        assert (a * b).coeffs == (1, 0, -1)

    def test_multiplicative_identity(self):
        s = make_series([4, -7, 2, 0, 3])
        assert s * one(s.order) == s

    def test_mul_truncates_to_min_order(self):
        a = make_series([1, 2, 3, 4, 5])
        b = make_series([1, 1])
        assert (a * b).order == 1

    def test_pow_binomial(self):
        assert (make_series([1, 1, 0]) ** 2).coeffs == (1, 2, 1)

    def test_pow_zero_is_one(self):
        s = make_series([5, 1, 2])
        assert (s**0) == one(2)

    def test_pow_euler_cube_matches_sparse(self):
        cube = euler_product(6) ** 3
        assert cube.coeffs == (1, -3, 0, 5, 0, 0, -7)

    def test_pow_negative_rejected(self):
        with pytest.raises(ValueError):
            make_series([1]) ** -1

    def test_coeff_out_of_window(self):
        s = make_series([1, 2])
        assert s.coeff(-3) == 0
        with pytest.raises(InsufficientOrderError):
            s.coeff(2)

    def test_truncate_cannot_extend(self):
        s = make_series([1, 2, 3])
        assert s.truncate(1).coeffs == (1, 2)
        with pytest.raises(InsufficientOrderError):
            s.truncate(5)


class TestInverse:
    def test_geometric(self):
        s = make_series([1, -1, 0, 0, 0])
        assert s.inverse().coeffs == (1, 1, 1, 1, 1)

    def test_one(self):
        assert one(3).inverse() == one(3)

    def test_reciprocal_euler_cube(self):
        inv = (euler_product(5) ** 3).inverse()
        assert inv.coeffs == (1, 3, 9, 22, 51, 108)

    def test_non_unit_rejected(self):
        with pytest.raises(NonInvertibleError):
            make_series([2, 1]).inverse()

    def test_two_sided_inverse_random(self):
        rng = random.Random(20240817)
        for _ in range(100):
            order = rng.randint(1, 64)
            coeffs = [rng.choice((1, -1))] + [
                rng.randint(-9, 9) for _ in range(order)
            ]
            a = make_series(coeffs)
            b = a.inverse()
            assert a * b == one(order)
            assert b * a == one(order)


class TestRingAxioms:
    def test_random_identities(self):
        rng = random.Random(987123)
        for _ in range(100):
            a = random_series(rng)
            b = random_series(rng)
            c = random_series(rng)
            assert a * b == b * a
            assert a + b == b + a
            assert (a * b) * c == a * (b * c)
            assert (a + b) + c == a + (b + c)
            assert a * (b + c) == a * b + a * c
            n = min(a.order, b.order)
            assert (a - b) + b.truncate(n) == a.truncate(n)
            assert a + (-a) == IntSeries((0,) * (a.order + 1))


class TestEulerProduct:
    def test_order_seven(self):
        assert euler_product(7).coeffs == (1, -1, -1, 0, 0, 1, 0, 1)

    def test_single_factor(self):
        assert euler_product(1).coeffs == (1, -1)

    def test_matches_literal_expansion(self):
        for n in range(31):
            poly = [1]
            for k in range(1, n + 1):
                poly = full_poly_mul(poly, [1] + [0] * (k - 1) + [-1])
            assert euler_product(n).coeffs == tuple(poly[: n + 1])


class TestLaurent:
    def test_shift_monomial(self):
        s = LaurentSeries.from_coeffs(0, [1]).shift(-4)
        assert s.valuation == -4 and s.coeff_at(-4) == 1

    def test_exponents_add(self):
        a = LaurentSeries.from_coeffs(-3, [1])
        assert (a * a).valuation == -6
        assert (a * a).coeff_at(-6) == 1

    def test_cancellation(self):
        a = LaurentSeries.from_coeffs(-4, [1])
        assert (a + (-a)).is_zero()

    def test_add_aligns_windows(self):
        a = LaurentSeries.from_coeffs(-1, [1, 2, 3, 4])  # window [-1, 2]
        b = LaurentSeries.from_coeffs(0, [10, 20])  # window [0, 1]
        c = a + b
        assert c.valuation == -1 and c.top == 1
        assert [c.coeff_at(d) for d in (-1, 0, 1)] == [1, 12, 23]

    def test_mul_window(self):
        a = LaurentSeries.from_coeffs(-2, [1, 1, 1])  # window [-2, 0]
        b = LaurentSeries.from_coeffs(1, [1, -1])  # window [1, 2]
        c = a * b
        assert c.valuation == -1 and c.top == 0
        assert [c.coeff_at(d) for d in (-1, 0)] == [1, 0]

    def test_coeff_below_valuation_is_zero(self):
        a = LaurentSeries.from_coeffs(2, [7])
        assert a.coeff_at(-5) == 0

    def test_coeff_above_window_raises(self):
        a = LaurentSeries.from_coeffs(2, [7])
        with pytest.raises(InsufficientOrderError):
            a.coeff_at(3)

    def test_normalize_strips_leading_zeros(self):
        a = LaurentSeries.from_coeffs(-2, [0, 0, 5, 1])
        n = a.normalize()
        assert n.valuation == 0 and n.body.coeffs == (5, 1)
        assert a.first_nonzero() == (0, 5)

    def test_normalize_zero_unchanged(self):
        z = LaurentSeries.from_coeffs(-1, [0, 0])
        assert z.normalize() is z
        assert z.first_nonzero() is None

    def test_truncate_top(self):
        a = LaurentSeries.from_coeffs(-1, [1, 2, 3])
        t = a.truncate_top(0)
        assert t.top == 0 and t.body.coeffs == (1, 2)
        with pytest.raises(InsufficientOrderError):
            a.truncate_top(5)

    def test_str_smoke(self):
        assert "q" in str(LaurentSeries.from_coeffs(-1, [-1, 0, 2]))
        assert "O(q^3)" in str(make_series([1, -3, 0]))
