"""Floating evaluation of theta(q, x) with explicit tail bounds, and Newton
root-finding seeded by the exact Laurent expansions.

Everything runs on mpmath at a working precision derived from the size of
the largest summand: near its j-th zero the series passes through terms of
magnitude about |q|^(-j(j-1)/2) before cancelling down to nearly zero, so
plain doubles run out of digits around j = 5 and the precision has to grow
with j and with the accuracy asked of the Newton limit.

theta_eval sums t_s = q^{s(s+1)/2} x^s until the term ratio is dominated by
1/2 and the current term has dropped below eps/2; the omitted tail is then
geometrically dominated and |t_{s+1}| / (1 - |q|^{s+2} |x|) is a true upper
bound for it.  find_zero polishes the expansion-predicted value with Newton
steps until the residual bottoms out near working precision, so that the
reported agreement between the found zero and the truncated prediction
measures the truncation error of the expansion, not the solver tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath as mp

from .zeros import ZeroExpansion, solve_expansion

TERM_CAP = 10**6
NEWTON_MAX_ITERS = 64
GUARANTEED_RADIUS = 0.108  # all zeros are known to be distinct inside this radius
SOFT_RADIUS = 0.3
DEFAULT_SEED_ORDER = 12
DEFAULT_TOL = 1e-10


class ConvergenceError(RuntimeError):
    """Series summation or Newton iteration failed to converge."""


class SingularDerivativeError(RuntimeError):
    """The x-derivative of theta vanished (to working precision) at an iterate."""


@dataclass(frozen=True)
class EvalResult:
    """Value of theta at a point plus a rigorous error bound.

    ``tail_bound`` dominates both the geometric tail of the omitted terms
    and a conservative allowance for the roundoff of the summation, so
    |value - theta(q, x)| <= tail_bound.  ``value`` is an mpmath number at
    the working precision of the call; it behaves like a complex/float
    scalar.
    """

    value: object
    tail_bound: float
    terms_used: int


def _peak_log10(q: float, x: float) -> float:
    """log10 of (an upper bound for) the largest |q^{s(s+1)/2} x^s| over s >= 0."""
    if x == 0 or q == 0:
        return 0.0
    la = math.log10(q)
    lx = math.log10(x)
    s_star = -lx / la - 0.5
    if s_star <= 0:
        return 0.0
    return s_star * (s_star + 1) / 2 * la + s_star * lx


def _auto_dps(q: float, x: float, eps: float) -> int:
    peak = _peak_log10(q, x)
    return max(20, int(peak - math.log10(eps)) + 12)


def _roundoff_allowance(peak, ops: int):
    """Conservative bound on accumulated roundoff: each of the O(ops)
    multiply-adds perturbs by at most an ulp of the largest intermediate."""
    return 10 * (ops + 4) * peak * mp.mpf(10) ** (-mp.mp.dps)


def theta_eval(q, x, eps: float = 1e-12, dps: int | None = None) -> EvalResult:
    """Sum theta(q, x) to within ``eps``, returning value and tail bound.

    Stops at the first index s for which |q|^{s+1} |x| <= 1/2 and
    |t_s| <= eps/2; the tail is then bounded by |t_{s+1}| / (1 - |q|^{s+2}|x|),
    which is at most eps.  Raises for |q| >= 1, and if the domination
    condition is not reached within a hard term cap (impossible for |q| < 1
    but guarding float pathologies).
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    aq_f = abs(complex(q))
    if aq_f >= 1:
        raise ValueError("theta(q, x) requires |q| < 1")
    if dps is None:
        dps = _auto_dps(aq_f, abs(complex(x)), eps)
    with mp.workdps(dps):
        qm = mp.mpmathify(q)
        xm = mp.mpmathify(x)
        aq = abs(qm)
        ax = abs(xm)
        half = mp.mpf(1) / 2
        eps_half = mp.mpf(eps) / 2
        t = mp.mpf(1)
        total = t
        s = 0
        qp = qm  # q^{s+1}
        peak = mp.mpf(1)
        while True:
            if abs(qp) * ax <= half and abs(t) <= eps_half:
                t_next = t * qp * xm
                tail = abs(t_next) / (1 - abs(qp) * aq * ax)
                tail += _roundoff_allowance(peak, s + 1)
                return EvalResult(total, float(tail), s + 1)
            t = t * qp * xm
            total += t
            s += 1
            qp *= qm
            peak = max(peak, abs(t), abs(total))
            if s > TERM_CAP:
                raise ConvergenceError("term cap reached before geometric domination")


def theta_dx(q, x, eps: float = 1e-12, dps: int | None = None) -> EvalResult:
    """d(theta)/dx (q, x) = sum_{s>=1} s q^{s(s+1)/2} x^{s-1}, same scheme as
    theta_eval with the term-ratio test adjusted for the factor s."""
    if eps <= 0:
        raise ValueError("eps must be positive")
    aq_f = abs(complex(q))
    if aq_f >= 1:
        raise ValueError("theta(q, x) requires |q| < 1")
    if dps is None:
        dps = _auto_dps(aq_f, abs(complex(x)), eps)
    with mp.workdps(dps):
        qm = mp.mpmathify(q)
        xm = mp.mpmathify(x)
        aq = abs(qm)
        ax = abs(xm)
        half = mp.mpf(1) / 2
        eps_half = mp.mpf(eps) / 2
        t = qm  # s = 1 term: 1 * q^1 * x^0
        total = t
        s = 1
        qp = qm * qm  # q^{s+1}
        peak = abs(t)
        while True:
            ratio_next = (mp.mpf(s + 1) / s) * abs(qp) * ax
            if ratio_next <= half and abs(t) <= eps_half:
                t_next = t * (mp.mpf(s + 1) / s) * qp * xm
                denom = 1 - (mp.mpf(s + 2) / (s + 1)) * abs(qp) * aq * ax
                tail = abs(t_next) / denom + _roundoff_allowance(peak, s)
                return EvalResult(total, float(tail), s)
            t = t * (mp.mpf(s + 1) / s) * qp * xm
            total += t
            s += 1
            qp *= qm
            peak = max(peak, abs(t), abs(total))
            if s > TERM_CAP:
                raise ConvergenceError("term cap reached before geometric domination")


def evaluate_expansion(z: ZeroExpansion, q, order: int | None = None):
    """Numeric value of the truncated expansion at q, using terms g_0..g_order.

    Must be called inside an mpmath working-precision context when high
    accuracy is required; the computation itself is plain Horner evaluation.
    """
    if order is None:
        order = len(z.g) - 1
    if order >= len(z.g):
        raise ValueError(f"expansion holds {len(z.g)} coefficients, order {order} requested")
    qm = mp.mpmathify(q)
    acc = mp.mpf(0)
    for k in range(order, -1, -1):
        acc = acc * qm + z.g[k]
    return -(qm ** (-z.j)) + z.sign * qm**z.kappa * acc


@dataclass(frozen=True)
class ZeroFindReport:
    """Outcome of polishing one predicted zero with Newton iteration.

    ``predicted`` and ``found`` are reported as machine complex numbers; the
    quantities derived from them (residual, agreement) were computed at the
    full working precision before rounding.
    """

    j: int
    q: complex
    predicted: complex
    found: complex
    iterations: int
    residual: float
    agreement: float
    first_omitted: float
    seed_order: int
    tol: float
    in_guaranteed_regime: bool
    best_effort: bool
    conditioning: float
    dps: int


def _solver_dps(aq: float, j: int, seed_order: int, g) -> int:
    kappa = j * (j - 1) // 2
    la = math.log10(aq)
    peak = max(0.0, -kappa * la)
    omit = abs(g[seed_order + 1]) if seed_order + 1 < len(g) else 1
    omit_digits = -(math.log10(omit) + (kappa + seed_order + 1) * la)
    return max(30, int(peak + max(0.0, omit_digits)) + 15)


def _newton(q, j: int, seed_order: int, dps: int):
    """Newton-polish the expansion seed; returns mp-precision internals."""
    z = solve_expansion(j, seed_order + 2)
    with mp.workdps(dps):
        qm = mp.mpmathify(q)
        seed = evaluate_expansion(z, qm, seed_order)
        floor_eps = mp.mpf(10) ** (-(dps - 5))
        x = seed
        iterations = 0
        value = theta_eval(qm, x, eps=float(floor_eps), dps=dps).value
        target = mp.mpf(10) ** (-(dps - int(max(0.0, _peak_log10(abs(complex(q)), abs(complex(x))))) - 8))
        while abs(value) > target and iterations < NEWTON_MAX_ITERS:
            deriv = theta_dx(qm, x, eps=float(floor_eps), dps=dps).value
            if abs(deriv) < floor_eps:
                raise SingularDerivativeError(
                    f"|d(theta)/dx| below precision floor at iterate {iterations}"
                )
            step = value / deriv
            x = x - step
            iterations += 1
            value = theta_eval(qm, x, eps=float(floor_eps), dps=dps).value
            if abs(step) <= abs(x) * mp.mpf(10) ** (-(dps - 8)):
                break
        residual = abs(theta_eval(qm, x, eps=float(floor_eps), dps=dps).value)
        return z, qm, seed, x, iterations, residual


def find_zero(
    q,
    j: int,
    seed_order: int = DEFAULT_SEED_ORDER,
    tol: float = DEFAULT_TOL,
    dps: int | None = None,
) -> ZeroFindReport:
    """Locate the j-th zero of theta(q, .) by Newton iteration from the
    expansion-predicted seed, and report how well prediction and limit agree.

    The iteration is pushed to the working-precision floor, far below
    ``tol``; success simply requires the final residual |theta(q, found)| to
    be at most ``tol``.  A validity flag records whether |q| lies inside the
    radius where the zeros are guaranteed distinct; beyond |q| = 0.3 the
    result is additionally marked best-effort.
    """
    if j < 1:
        raise ValueError("j must be at least 1")
    aq = abs(complex(q))
    if aq == 0 or aq >= 1:
        raise ValueError("need 0 < |q| < 1")
    z = solve_expansion(j, seed_order + 2)
    if dps is None:
        dps = _solver_dps(aq, j, seed_order, z.g)
    z, qm, seed, x, iterations, residual = _newton(q, j, seed_order, dps)
    if float(residual) > tol:
        raise ConvergenceError(
            f"Newton residual {float(residual):.3e} above tolerance {tol:.3e} "
            f"after {iterations} iterations"
        )
    with mp.workdps(dps):
        agreement = float(abs(x - seed))
        first_omitted = float(
            abs(z.g[seed_order + 1]) * abs(qm) ** (z.kappa + seed_order + 1)
        )
        conditioning = float(abs(qm) ** (-j) * mp.mpf(10) ** (-dps))
    return ZeroFindReport(
        j=j,
        q=complex(qm),
        predicted=complex(seed),
        found=complex(x),
        iterations=iterations,
        residual=float(residual),
        agreement=agreement,
        first_omitted=first_omitted,
        seed_order=seed_order,
        tol=tol,
        in_guaranteed_regime=aq <= GUARANTEED_RADIUS,
        best_effort=aq > SOFT_RADIUS,
        conditioning=conditioning,
        dps=dps,
    )


@dataclass(frozen=True)
class SweepRow:
    order: int
    error: float
    first_omitted: float
    ratio: float


@dataclass(frozen=True)
class SweepTable:
    """Agreement between the Newton-found zero and its truncated predictions."""

    j: int
    q: complex
    rows: tuple[SweepRow, ...]
    monotone_decreasing: bool
    max_ratio: float


def convergence_sweep(q, j: int, orders, dps: int | None = None) -> SweepTable:
    """For each truncation order, measure |found - prediction(order)|.

    The error must shrink as the order grows and stay within a small factor
    of the first omitted term of the expansion.
    """
    orders = sorted(set(int(m) for m in orders))
    if not orders or orders[0] < 0:
        raise ValueError("orders must be non-negative")
    aq = abs(complex(q))
    top = max(orders)
    z = solve_expansion(j, top + 2)
    if dps is None:
        dps = _solver_dps(aq, j, top, z.g)
    z, qm, _seed, x, _its, _res = _newton(q, j, top, dps)
    rows = []
    with mp.workdps(dps):
        for m in orders:
            pred = evaluate_expansion(z, qm, m)
            err = float(abs(x - pred))
            omitted = float(abs(z.g[m + 1]) * abs(qm) ** (z.kappa + m + 1))
            rows.append(SweepRow(m, err, omitted, err / omitted if omitted else float("inf")))
    errors = [row.error for row in rows]
    monotone = all(errors[i + 1] < errors[i] for i in range(len(errors) - 1))
    max_ratio = max(row.ratio for row in rows)
    return SweepTable(j, complex(qm), tuple(rows), monotone, max_ratio)
