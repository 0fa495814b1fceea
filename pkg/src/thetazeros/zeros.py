"""Laurent expansions of the zeros of the partial theta function.

theta(q, x) = sum_{s>=0} q^{s(s+1)/2} x^s is entire in x for fixed |q| < 1,
and for small |q| its zeros sit near the points -q^{-j}, j = 1, 2, 3, ...
The j-th zero admits a Laurent expansion with exact integer coefficients,

    z_j(q) = -q^{-j} + sign * q^kappa * (g_0 + g_1 q + g_2 q^2 + ...),

which solve_expansion computes constructively, one power of q at a time:

* Substituting the bare pole -q^{-j} for x makes every negative power of q
  cancel in pairs (the term degrees s(s+1)/2 - j*s repeat symmetrically on
  the way down and up); the lowest surviving term is q^j, with coefficient 1.
* Adding a correction u*q^d to the argument perturbs theta, to first order,
  by u*q^d times d(theta)/dx, whose lowest term has coefficient +1 or -1.
  Matching degree and coefficient of the lowest surviving term therefore
  fixes both kappa and sign, and each later g_m is read off the same way.
  Every pivot is a unit, so the coefficients are integers; a non-unit pivot
  would be a structural impossibility and raises NonUnitPivotError.
* Corrections interact nonlinearly at higher degrees, which is why the
  residual is recomputed by full substitution at every step rather than
  maintained incrementally, and why a final full-residual check must come
  out identically zero through the resolved window before a result is
  returned.

sign and kappa are discovered by the first cancellation, not assumed; they
always come out as (-1)^j and j(j-1)/2.  The g coefficients stabilize onto
the universal sequence r_k (rk module) for k <= j, which
stabilization_report tabulates.  delta_series repackages a zero as
-q^{-j} / delta_j(q) with delta_j = 1 + O(q^{j(j+1)/2}).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .rk import rk_recurrence
from .series import (
    InsufficientOrderError,
    IntSeries,
    LaurentSeries,
    convolve_truncated,
)


class NonUnitPivotError(RuntimeError):
    """A cancellation pivot other than +-1 appeared; this must never happen."""


def term_degree(s: int, j: int) -> int:
    """Degree in q of the s-th term of theta(q, -q^{-j}): s(s+1)/2 - j*s."""
    if s < 0 or j < 1:
        raise ValueError("need s >= 0 and j >= 1")
    return s * (s + 1) // 2 - j * s


def theta_series(x: LaurentSeries, top: int) -> LaurentSeries:
    """theta(q, x) for a Laurent polynomial x, reliable through degree ``top``.

    x is interpreted as exact: coefficients outside its stored window are
    taken to be zero.  Terms of theta whose lowest degree exceeds ``top``
    are omitted (they cannot touch the window); one extra term past the
    cutoff is always included as a safety margin.
    """
    return _theta_pair(x, top, with_dx=False)[0]


def theta_dx_series(x: LaurentSeries, top: int) -> LaurentSeries:
    """d(theta)/dx (q, x) = sum_{s>=1} s q^{s(s+1)/2} x^{s-1}, through ``top``."""
    return _theta_pair(x, top, with_dx=True)[1]


def _theta_pair(x: LaurentSeries, top: int, with_dx: bool):
    if top < 0:
        raise ValueError("top must be non-negative")
    if x.is_zero():
        theta = LaurentSeries.from_coeffs(0, [1] + [0] * top)
        dx = None
        if with_dx:
            # only the s = 1 term q * x^0 survives at x = 0
            dx = LaurentSeries.from_coeffs(0, [0] * top + [0]) if top < 1 else \
                LaurentSeries.from_coeffs(0, [0, 1] + [0] * (top - 1))
        return theta, dx

    xn = x.normalize()
    v = xn.valuation
    dip = 2 * max(0, -v)

    def tdeg(s):  # degree of q^{s(s+1)/2} x^s
        return s * (s + 1) // 2 + v * s

    def ddeg(t):  # degree of q^{(t+1)(t+2)/2} x^t, the t-th derivative term
        return (t + 1) * (t + 2) // 2 + v * t

    s_stop = dip
    while tdeg(s_stop) <= top:
        s_stop += 1
    n_theta = s_stop + 1  # powers 0..s_stop; the last is the safety margin
    n_dx = 0
    if with_dx:
        t_stop = dip
        while ddeg(t_stop) <= top:
            t_stop += 1
        n_dx = t_stop + 1
    n_pow = max(n_theta, n_dx)

    need = 0
    for s in range(n_pow):
        need = max(need, top - tdeg(s))
        if with_dx:
            need = max(need, top - ddeg(s))
    need = max(need, 0)

    body = list(xn.body.coeffs[: need + 1])
    body += [0] * (need + 1 - len(body))

    val_theta = min(tdeg(s) for s in range(n_theta))
    arr_theta = [0] * (top - val_theta + 1)
    val_dx = 0
    arr_dx = []
    if with_dx:
        val_dx = min(ddeg(t) for t in range(n_dx))
        arr_dx = [0] * (top - val_dx + 1)

    power = [1] + [0] * need  # body^0
    for s in range(n_pow):
        d = tdeg(s)
        if s < n_theta and d <= top:
            base = d - val_theta
            for i in range(min(need, top - d) + 1):
                ci = power[i]
                if ci:
                    arr_theta[base + i] += ci
        if with_dx and s < n_dx:
            dd = ddeg(s)
            if dd <= top:
                base = dd - val_dx
                f = s + 1
                for i in range(min(need, top - dd) + 1):
                    ci = power[i]
                    if ci:
                        arr_dx[base + i] += f * ci
        if s < n_pow - 1:
            power = convolve_truncated(power, body, need)

    theta = LaurentSeries.from_coeffs(val_theta, arr_theta)
    dx = LaurentSeries.from_coeffs(val_dx, arr_dx) if with_dx else None
    return theta, dx


@dataclass(frozen=True)
class ZeroExpansion:
    """The j-th zero: -q^{-j} + sign * q^kappa * sum_k g[k] q^k, with g[0] = 1."""

    j: int
    kappa: int
    sign: int
    g: tuple[int, ...]

    def to_laurent(self) -> LaurentSeries:
        """Materialize the zero as a Laurent series with valuation -j."""
        arr = [0] * (self.kappa + self.j + len(self.g))
        arr[0] = -1
        base = self.kappa + self.j
        for k, gk in enumerate(self.g):
            arr[base + k] = self.sign * gk
        return LaurentSeries.from_coeffs(-self.j, arr)


def expansion_to_laurent(z: ZeroExpansion) -> LaurentSeries:
    """Functional form of ZeroExpansion.to_laurent."""
    return z.to_laurent()


def solve_expansion(j: int, n_coeffs: int) -> ZeroExpansion:
    """Compute sign, kappa and the first n_coeffs correction coefficients of
    the j-th zero by successive cancellation.

    Each step substitutes the partial expansion into the truncated theta,
    locates the lowest not-yet-cancelled coefficient and kills it with the
    next correction term; the pivot is the leading coefficient of the
    x-derivative of theta, which is a unit.  If a required coefficient falls
    outside a reliable window the solve is retried with a wider one before
    the error surfaces.
    """
    if j < 1:
        raise ValueError("j must be at least 1")
    if n_coeffs < 1:
        raise ValueError("n_coeffs must be at least 1")
    return _solve_cached(j, n_coeffs)


@lru_cache(maxsize=None)
def _solve_cached(j: int, n_coeffs: int) -> ZeroExpansion:
    last_error = None
    for margin in (1, 8, 32):
        try:
            return _solve(j, n_coeffs, margin)
        except InsufficientOrderError as exc:
            last_error = exc
    raise last_error


def _solve(j: int, n_coeffs: int, margin: int) -> ZeroExpansion:
    base = LaurentSeries.from_coeffs(-j, [-1])
    theta0, dx0 = _theta_pair(base, j + margin, with_dx=True)

    lead = theta0.first_nonzero()
    if lead is None:
        raise InsufficientOrderError("no surviving term inside the discovery window")
    d0, c0 = lead
    lead_dx = dx0.first_nonzero()
    if lead_dx is None:
        raise InsufficientOrderError("derivative vanished inside the discovery window")
    p, pivot = lead_dx
    if pivot not in (1, -1):
        raise NonUnitPivotError(f"derivative pivot {pivot} at degree {p} is not a unit")

    kappa = d0 - p
    u0 = -c0 * pivot  # solves c0 + pivot * u0 = 0
    if u0 not in (1, -1):
        raise NonUnitPivotError(f"leading correction {u0} is not a unit")
    sign = u0
    g = [1]

    for m in range(1, n_coeffs):
        resid = theta_series(_partial_ansatz(j, kappa, sign, g), d0 + m)
        for d in range(resid.valuation, d0 + m):
            if resid.coeff_at(d) != 0:
                raise NonUnitPivotError(
                    f"residual failed to cancel at degree {d} while solving g_{m}"
                )
        c = resid.coeff_at(d0 + m)
        g.append(-c * pivot * sign)  # c + pivot * (sign * g_m) = 0

    final = theta_series(_partial_ansatz(j, kappa, sign, g), d0 + n_coeffs - 1)
    for d in range(final.valuation, d0 + n_coeffs):
        if final.coeff_at(d) != 0:
            raise NonUnitPivotError(
                f"final residual is nonzero at degree {d}; expansion is inconsistent"
            )
    return ZeroExpansion(j, kappa, sign, tuple(g))


def _partial_ansatz(j: int, kappa: int, sign: int, g) -> LaurentSeries:
    arr = [0] * (kappa + j + len(g))
    arr[0] = -1
    base = kappa + j
    for k, gk in enumerate(g):
        arr[base + k] = sign * gk
    return LaurentSeries.from_coeffs(-j, arr)


def residual_check(z: ZeroExpansion, order: int) -> LaurentSeries:
    """Substitute the truncated expansion into theta and return the residual.

    For a correct expansion every coefficient from the window bottom
    (degree -kappa) through the resolved order j + len(g) - 1 vanishes
    exactly; the first nonzero degree, if inside the requested window, is
    the truncation error of the ansatz.
    """
    return theta_series(z.to_laurent(), order)


@dataclass(frozen=True)
class DeltaSeries:
    """The denominator form of a zero: z_j = -q^{-j} / delta, with
    delta = 1 + (-1)^j q^{j(j+1)/2} * phi and phi = 1 + O(q)."""

    j: int
    delta: IntSeries
    phi: IntSeries


def delta_series(j: int, order: int) -> DeltaSeries:
    """delta_j through q^order, derived from the zero expansion.

    The expansion -q^{-j} + sign*q^kappa*G(q) factors as
    -q^{-j} * (1 - sign*q^{j+kappa}*G(q)), so delta_j is the inverse of
    1 - sign*q^{j(j+1)/2}*G(q); phi_j is read off by stripping the prefix.
    """
    if j < 1:
        raise ValueError("j must be at least 1")
    lead = j * (j + 1) // 2
    if order < lead:
        raise ValueError(f"order must be at least j(j+1)/2 = {lead}")
    z = solve_expansion(j, order - lead + 1)
    inner = [0] * (order + 1)
    inner[0] = 1
    for k, gk in enumerate(z.g):
        inner[lead + k] = -z.sign * gk
    delta = IntSeries(tuple(inner)).inverse()

    if any(delta.coeffs[i] != 0 for i in range(1, lead)):
        raise NonUnitPivotError("delta has a term below its leading correction")
    if delta.coeffs[lead] != z.sign:
        raise NonUnitPivotError("delta leading correction does not match the sign")
    phi = IntSeries(tuple(z.sign * delta.coeffs[lead + i] for i in range(order - lead + 1)))
    return DeltaSeries(j, delta, phi)


@dataclass(frozen=True)
class StabilizationRow:
    """How far the coefficients of the j-th zero agree with the universal r_k."""

    j: int
    compared_through: int  # min(depth, j), the range where agreement is guaranteed
    guaranteed_range_ok: bool
    matched_through: int  # largest k <= depth with g_i == r_i for all i <= k
    first_divergence: tuple[int, int, int] | None  # (k, g_k, r_k), observation only


def stabilization_report(j_max: int, depth: int) -> list[StabilizationRow]:
    """For each 2 <= j <= j_max compare g_{j,k} against r_k for k <= depth.

    Agreement for k <= j is the stabilization property and is flagged by
    ``guaranteed_range_ok``; where the coefficients first part ways is
    reported as data, with no claim attached.
    """
    if j_max < 2:
        raise ValueError("j_max must be at least 2")
    if depth < 1:
        raise ValueError("depth must be at least 1")
    r = rk_recurrence(depth).values
    rows = []
    for j in range(2, j_max + 1):
        z = solve_expansion(j, depth + 1)
        compare = min(depth, j)
        guaranteed = all(z.g[k] == r[k] for k in range(1, compare + 1))
        matched = 0
        divergence = None
        for k in range(1, depth + 1):
            if z.g[k] == r[k]:
                matched = k
            else:
                divergence = (k, z.g[k], r[k])
                break
        rows.append(StabilizationRow(j, compare, guaranteed, matched, divergence))
    return rows
