"""The coefficient sequence of 1/(q)_inf^3 by three independent routes.

Throughout this package r_k denotes the k-th Taylor coefficient of the
reciprocal cubed Euler product

    1 + sum_{k>=1} r_k q^k = 1 / prod_{i>=1} (1 - q^i)^3,

which is OEIS A000716: 1, 3, 9, 22, 51, 108, ...  The three routes are

* ``recurrence``      r_k = sum_{v>=1} (-1)^(v-1) (2v+1) r_{k-v(v+1)/2},
                      seeded by r_0 = 1 with r_k = 0 for k < 0; every
                      summand with v(v+1)/2 > k vanishes by that
                      convention, so the sum is finite.
* ``euler-cube``      invert the cube of the literal product prod (1-q^i).
* ``triple-product``  invert the sparse series sum_j (-1)^j (2j+1) q^{j(j+1)/2},
                      which equals the cubed Euler product.

cross_validate runs all three and demands exact agreement; the identity
behind the third route is itself checked by verify_triple_product.  The
module also provides the auxiliary tables and difference checks that make
the growth structure of r_k machine-verifiable, plus an exact-rational
consecutive-ratio profile (reported as an observation, never asserted,
since whether the ratios decrease for all k is an open question).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .series import IntSeries, euler_product, make_series

METHODS = ("recurrence", "euler-cube", "triple-product")


@dataclass(frozen=True)
class RkTable:
    """Values r_0..r_n with the route that produced them."""

    n: int
    values: tuple[int, ...]
    method: str

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}")
        if len(self.values) != self.n + 1:
            raise ValueError("table length does not match n")
        if self.values[0] != 1:
            raise ValueError("r_0 must be 1")
        if any(v <= 0 for v in self.values):
            raise ValueError("all r_k must be positive")


def rk_recurrence(n: int) -> RkTable:
    """r_0..r_n from the triangular-lag recurrence."""
    if n < 0:
        raise ValueError("n must be non-negative")
    r = [0] * (n + 1)
    r[0] = 1
    for k in range(1, n + 1):
        acc = 0
        v = 1
        lag = 1  # v(v+1)/2
        while lag <= k:
            term = (2 * v + 1) * r[k - lag]
            acc += term if v % 2 else -term
            v += 1
            lag += v
        r[k] = acc
    return RkTable(n, tuple(r), "recurrence")


def rk_euler_cube(n: int) -> RkTable:
    """r_0..r_n as the coefficients of inverse(euler_product(n)^3)."""
    if n < 0:
        raise ValueError("n must be non-negative")
    cube = euler_product(n) ** 3
    return RkTable(n, cube.inverse().coeffs, "euler-cube")


def triple_product_series(order: int) -> IntSeries:
    """sum_j (-1)^j (2j+1) q^{j(j+1)/2}, materialized densely through ``order``."""
    if order < 0:
        raise ValueError("order must be non-negative")
    c = [0] * (order + 1)
    j = 0
    e = 0  # j(j+1)/2
    while e <= order:
        coeff = 2 * j + 1
        c[e] = coeff if j % 2 == 0 else -coeff
        j += 1
        e += j
    return IntSeries(tuple(c))


def rk_triple_product(n: int) -> RkTable:
    """r_0..r_n as the coefficients of inverse(triple_product_series(n))."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return RkTable(n, triple_product_series(n).inverse().coeffs, "triple-product")


@dataclass(frozen=True)
class TripleProductReport:
    order: int
    ok: bool
    first_mismatch: tuple[int, int, int] | None  # (exponent, product side, sparse side)


def verify_triple_product(order: int) -> TripleProductReport:
    """Compare euler_product(order)^3 with the sparse signed odd-number series."""
    lhs = (euler_product(order) ** 3).coeffs
    rhs = triple_product_series(order).coeffs
    for k, (a, b) in enumerate(zip(lhs, rhs)):
        if a != b:
            return TripleProductReport(order, False, (k, a, b))
    return TripleProductReport(order, True, None)


@dataclass(frozen=True)
class CrossValidation:
    n: int
    agree: bool
    values: tuple[int, ...]
    first_mismatch: tuple[str, str, int] | None  # (method a, method b, index)


def cross_validate(n: int) -> CrossValidation:
    """Run all three routes and check exact coefficient-for-coefficient agreement."""
    tables = [rk_recurrence(n), rk_euler_cube(n), rk_triple_product(n)]
    base = tables[0]
    for other in tables[1:]:
        for k in range(n + 1):
            if base.values[k] != other.values[k]:
                return CrossValidation(
                    n, False, base.values, (base.method, other.method, k)
                )
    return CrossValidation(n, True, base.values, None)


@dataclass(frozen=True)
class AuxCoeffTable:
    """Coefficients of R^3*W, R^2*W, R*W and W, where R = 1/(1-q) and
    W = prod_{i>=2} 1/(1-q^i)^3.

    R^3*W is the reciprocal cubed Euler product itself, and each
    multiplication by (1-q) peels one factor of R off, so the four rows
    come from one sparse inversion followed by three sparse products.
    """

    n: int
    r: tuple[int, ...]
    s: tuple[int, ...]
    t: tuple[int, ...]
    u: tuple[int, ...]

    def telescoping_failure(self) -> tuple[str, int] | None:
        """First (row, k) where x_{k+1} = x_k + y_{k+1} fails, or None."""
        for name, hi, lo in (("r", self.r, self.s), ("s", self.s, self.t), ("t", self.t, self.u)):
            for k in range(self.n):
                if hi[k + 1] != hi[k] + lo[k + 1]:
                    return name, k
        return None

    def positivity_failure(self) -> tuple[str, int] | None:
        """First (row, k) with a non-positive entry for k >= 2, or None."""
        for name, row in (("s", self.s), ("t", self.t), ("u", self.u)):
            for k in range(2, self.n + 1):
                if row[k] <= 0:
                    return name, k
        return None


def aux_coefficients(n: int) -> AuxCoeffTable:
    if n < 0:
        raise ValueError("n must be non-negative")
    r = triple_product_series(n).inverse()
    one_minus_q = make_series([1, -1] + [0] * max(0, n - 1))
    s = r * one_minus_q
    t = s * one_minus_q
    u = t * one_minus_q
    return AuxCoeffTable(n, r.coeffs, s.coeffs, t.coeffs, u.coeffs)


@dataclass(frozen=True)
class MonotonicityReport:
    n: int
    values_increasing: bool
    first_differences_increasing: bool
    second_differences_increasing: bool
    telescoping_ok: bool
    positivity_ok: bool

    @property
    def all_ok(self) -> bool:
        return (
            self.values_increasing
            and self.first_differences_increasing
            and self.second_differences_increasing
            and self.telescoping_ok
            and self.positivity_ok
        )


def difference_monotonicity(n: int) -> MonotonicityReport:
    """Verify strict growth of r_k, of its first differences (from k = 0) and
    of its second differences (from k = 1), up to index n, and validate the
    auxiliary tables' telescoping and positivity."""
    if n < 3:
        raise ValueError("n must be at least 3")
    r = rk_recurrence(n + 2).values
    d1 = [r[k + 1] - r[k] for k in range(n + 2)]
    d2 = [d1[k + 1] - d1[k] for k in range(n + 1)]
    values_inc = all(r[k] < r[k + 1] for k in range(n + 1))
    first_inc = all(d1[k] < d1[k + 1] for k in range(n + 1))
    second_inc = all(d2[k] < d2[k + 1] for k in range(1, n))
    aux = aux_coefficients(n + 2)
    return MonotonicityReport(
        n,
        values_inc,
        first_inc,
        second_inc,
        aux.telescoping_failure() is None,
        aux.positivity_failure() is None,
    )


@dataclass(frozen=True)
class RatioProfile:
    """Exact consecutive ratios r_{k+1}/r_k with a purely observational summary.

    ``decreasing_observed_from_1`` records whether the computed prefix
    decreases strictly for k >= 1.  Whether that holds for every k is an
    open question; this table reports what was seen and asserts nothing.
    """

    n: int
    ratios: tuple[Fraction, ...]
    decreasing_observed_from_1: bool
    first_non_decrease: int | None
    last_ratio: float


def ratio_profile(n: int) -> RatioProfile:
    if n < 1:
        raise ValueError("n must be at least 1")
    r = rk_recurrence(n).values
    ratios = tuple(Fraction(r[k + 1], r[k]) for k in range(n))
    first_bad = None
    for k in range(1, len(ratios) - 1):
        if ratios[k + 1] >= ratios[k]:
            first_bad = k
            break
    return RatioProfile(n, ratios, first_bad is None, first_bad, float(ratios[-1]))
