"""Numerical witnesses for the shape of the Euler product and its cube.

Write E(q) = prod_{k>=1} (1 - q^k) and M(q) = E(q)^3, and let
L(q) = log E(q), so that M'' = (9 L'^2 + 3 L'') M.  Since M > 0 on (-1, 1),
convexity of M on (0, 1) reduces to 3 L'^2 + L'' > 0 there.  Expanding both
pieces per power of q,

    3 L'(q)^2      = sum_{s>=0} q^s * A_s(q),
    L''(q)         = -sum_{s>=0} q^s * B_s(q),

with A_s given by square_part_coeff (a convolution of the factors
1/(1-q^k)^2, split by the parity of s) and B_s by curvature_part_coeff.
Positivity of every margin A_s - B_s implies the convexity; this module
checks the sharper chain

    A_s > 3(s+1)/(1-q^{s+1})^3 > B_s

on a finite grid, together with direct positivity of M'' from its sparse
second-derivative series.  A finite grid only witnesses the inequalities,
it does not prove them, and the reports say so.

All computations are double precision; the factors 1/(1-q^k) stay below
1e4 for q <= 0.99, so no extended precision or log-space tricks are needed
on any grid interior to (0, 1).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath as mp
import numpy as np

WITNESS_LABEL = "finite numerical witness, not a proof"


def _check_unit_interval(q: float) -> float:
    q = float(q)
    if not 0.0 < q < 1.0:
        raise ValueError("q must lie strictly inside (0, 1)")
    return q


def square_part_coeff(s: int, q: float) -> float:
    """A_s(q): the factor multiplying q^s in the expansion of 3 L'(q)^2.

    Collecting the products q^{k-1}/(1-q^k)^2 * q^{l-1}/(1-q^l)^2 with
    k + l = s + 2 gives, with h(k) = 1/(1-q^k)^2,

        s even:  6 * sum_{v=1}^{s/2} h(v) h(s+2-v) + 3 * h(s/2+1)^2
        s odd:   6 * sum_{v=1}^{(s+1)/2} h(v) h(s+2-v)
    """
    if s < 0:
        raise ValueError("s must be non-negative")
    q = _check_unit_interval(q)
    h = lambda k: 1.0 / (1.0 - q**k) ** 2
    half = s // 2 if s % 2 == 0 else (s + 1) // 2
    acc = 6.0 * sum(h(v) * h(s + 2 - v) for v in range(1, half + 1))
    if s % 2 == 0:
        acc += 3.0 * h(s // 2 + 1) ** 2
    return acc


def curvature_part_coeff(s: int, q: float) -> float:
    """B_s(q): the factor multiplying q^s in the expansion of -L''(q),

        B_s = (s+1)/(1-q^{s+2})^2 + 2(s+1) q^s/(1-q^{s+1})^3.
    """
    if s < 0:
        raise ValueError("s must be non-negative")
    q = _check_unit_interval(q)
    return (s + 1) / (1.0 - q ** (s + 2)) ** 2 + 2.0 * (s + 1) * q**s / (1.0 - q ** (s + 1)) ** 3


def bridge_bound(s: int, q: float) -> float:
    """The separating quantity 3(s+1)/(1-q^{s+1})^3 between A_s and B_s."""
    if s < 0:
        raise ValueError("s must be non-negative")
    q = _check_unit_interval(q)
    return 3.0 * (s + 1) / (1.0 - q ** (s + 1)) ** 3


def log_derivative(q: float, tol: float = 1e-18) -> float:
    """L'(q) = -sum_{k>=1} q^{k-1} / (1-q^k)^2, summed to convergence."""
    q = float(q)
    if not -1.0 < q < 1.0:
        raise ValueError("q must lie inside (-1, 1)")
    acc = 0.0
    k = 1
    qp = 1.0  # q^{k-1}
    while True:
        term = qp / (1.0 - q**k) ** 2
        acc += term
        if abs(term) < tol and k > 4:
            return -acc
        k += 1
        qp *= q
        if k > 10**6:
            raise RuntimeError("log-derivative series failed to converge")


def log_second_derivative(q: float, tol: float = 1e-18) -> float:
    """L''(q) as the sum of its two convergent pieces,

        -sum_{k>=2} (k-1) q^{k-2}/(1-q^k)^2  -  2 sum_{k>=1} k q^{2k-2}/(1-q^k)^3.
    """
    q = float(q)
    if not -1.0 < q < 1.0:
        raise ValueError("q must lie inside (-1, 1)")
    u = 0.0
    k = 2
    qp = 1.0  # q^{k-2}
    while True:
        term = (k - 1) * qp / (1.0 - q**k) ** 2
        u += term
        if abs(term) < tol and k > 5:
            break
        k += 1
        qp *= q
        if k > 10**6:
            raise RuntimeError("series failed to converge")
    v = 0.0
    k = 1
    qp = 1.0  # q^{2k-2}
    while True:
        term = k * qp / (1.0 - q**k) ** 3
        v += term
        if abs(term) < tol and k > 5:
            break
        k += 1
        qp *= q * q
        if k > 10**6:
            raise RuntimeError("series failed to converge")
    return -u - 2.0 * v


def partial_sum_gaps(q: float, s_max: int) -> tuple[float, float]:
    """How well the per-power expansions reproduce their closed forms:
    returns (|sum q^s A_s - 3 L'^2|, |sum q^s B_s + L''|)."""
    q = _check_unit_interval(q)
    sq = sum(q**s * square_part_coeff(s, q) for s in range(s_max + 1))
    cv = sum(q**s * curvature_part_coeff(s, q) for s in range(s_max + 1))
    lp = log_derivative(q)
    lpp = log_second_derivative(q)
    return abs(sq - 3.0 * lp * lp), abs(-cv - lpp)


def euler_value(q: float, tol: float = 1e-18) -> float:
    """E(q) = prod_{k>=1} (1 - q^k) for |q| < 1, truncated once |q|^k < tol."""
    q = float(q)
    if not -1.0 < q < 1.0:
        raise ValueError("q must lie inside (-1, 1)")
    if q == 0.0:
        return 1.0
    acc = 1.0
    k = 1
    qp = q
    while abs(qp) >= tol:
        acc *= 1.0 - qp
        k += 1
        qp *= q
        if k > 10**6:
            break
    return acc


def euler_cube(q: float) -> float:
    """M(q) = E(q)^3."""
    return euler_value(q) ** 3


def _log10_euler(q: float) -> float:
    """log10 E(q), accumulated as a sum of logs so it never underflows."""
    acc = 0.0
    k = 1
    qp = q
    while abs(qp) >= 1e-18:
        acc += math.log10(1.0 - qp)
        k += 1
        qp *= q
        if k > 10**6:
            break
    return acc


def euler_cube_d2(q: float, terms: int | None = None):
    """M''(q) from the sparse series M = sum_j (-1)^j (2j+1) q^{j(j+1)/2}:

        M''(q) = sum_j (-1)^j (2j+1) e(e-1) q^{e-2},   e = j(j+1)/2.

    The alternating terms grow to a sizable peak before the tail decays, yet
    near q = 1 they cancel down to something microscopic (M is flat there),
    which is far beyond double precision.  The sum is therefore carried at a
    working precision sized from a closed-form magnitude estimate
    (9 L'^2 + 3 L'') * M whenever doubles would lose the result in roundoff.

    ``terms`` caps the number of j-terms; by default the sum runs until the
    superexponentially decaying tail is negligible against the result.
    """
    q = float(q)
    if not -1.0 < q < 1.0:
        raise ValueError("q must lie inside (-1, 1)")
    if q == 0.0:
        return 0.0

    # magnitude estimates: the largest term, and the result via closed forms
    peak_log10 = -math.inf
    j = 2
    while True:
        e = j * (j + 1) // 2
        t = math.log10(2 * j + 1) + math.log10(e * (e - 1)) + (e - 2) * math.log10(abs(q))
        peak_log10 = max(peak_log10, t)
        if t < peak_log10 - 40:
            break
        j += 1
    lp = log_derivative(q)
    curv = 9.0 * lp * lp + 3.0 * log_second_derivative(q)
    if curv == 0.0:
        est_log10 = peak_log10 - 25.0
    else:
        est_log10 = math.log10(abs(curv)) + 3.0 * _log10_euler(abs(q))
    lost_digits = peak_log10 - est_log10

    if lost_digits <= 12.0:
        acc = 0.0
        j = 0
        small = 0
        floor = 10.0 ** (est_log10 - 16)
        while True:
            e = j * (j + 1) // 2
            if e >= 2:
                term = (2 * j + 1) * e * (e - 1) * q ** (e - 2)
                acc += term if j % 2 == 0 else -term
                if terms is None and abs(term) < floor:
                    small += 1
                    if small >= 2:
                        return acc
                else:
                    small = 0
            j += 1
            if terms is not None and j > terms:
                return acc
            if j > 10**6:
                raise RuntimeError("second-derivative series failed to converge")

    dps = int(lost_digits) + 25
    with mp.workdps(dps):
        qm = mp.mpf(q)
        acc = mp.mpf(0)
        floor = mp.mpf(10) ** (est_log10 - 16)
        j = 0
        small = 0
        while True:
            e = j * (j + 1) // 2
            if e >= 2:
                term = (2 * j + 1) * e * (e - 1) * qm ** (e - 2)
                acc += term if j % 2 == 0 else -term
                if terms is None and abs(term) < floor:
                    small += 1
                    if small >= 2:
                        break
                else:
                    small = 0
            j += 1
            if terms is not None and j > terms:
                break
            if j > 10**6:
                raise RuntimeError("second-derivative series failed to converge")
        as_float = float(acc)
        return as_float if (as_float != 0.0 or acc == 0) else acc


def euler_d2(q: float) -> float:
    """E''(q) = (L'(q)^2 + L''(q)) * E(q)."""
    lp = log_derivative(q)
    return (lp * lp + log_second_derivative(q)) * euler_value(q)


@dataclass(frozen=True)
class ConvexityReport:
    """Grid evidence for the margin chain and for M'' > 0 on (0, 1)."""

    q_grid: tuple[float, ...]
    s_max: int
    min_margin: float
    mpp_min: float
    all_pass: bool
    bridge_ok: bool
    min_margin_at: tuple[float, int]
    label: str = WITNESS_LABEL


def default_grid(step: float = 0.01) -> tuple[float, ...]:
    """Interior grid step, 2*step, ..., 1-step; endpoints are excluded because
    the margins degenerate to zero there."""
    n = round(1.0 / step) - 1
    return tuple(round(k * step, 10) for k in range(1, n + 1))


def convexity_margins(q_grid, s_max: int) -> ConvexityReport:
    """Evaluate A_s - B_s and the bridge chain for every grid point and every
    s <= s_max, plus M'' at each grid point."""
    if s_max < 0:
        raise ValueError("s_max must be non-negative")
    q_grid = tuple(float(q) for q in q_grid)
    for q in q_grid:
        _check_unit_interval(q)

    s_arr = np.arange(s_max + 1)
    min_margin = math.inf
    min_at = (float("nan"), -1)
    bridge_ok = True
    for q in q_grid:
        k = np.arange(s_max + 3, dtype=float)
        qk = q**k
        h2 = np.empty_like(qk)
        h2[0] = np.inf
        h2[1:] = 1.0 / (1.0 - qk[1:]) ** 2
        h3 = np.empty_like(qk)
        h3[0] = np.inf
        h3[1:] = 1.0 / (1.0 - qk[1:]) ** 3
        h4 = h2 * h2

        a = np.empty(s_max + 1)
        for s in range(s_max + 1):
            half = s // 2 if s % 2 == 0 else (s + 1) // 2
            conv = 0.0
            if half:
                conv = float(np.dot(h2[1 : half + 1], h2[s + 1 : s + 1 - half : -1]))
            a[s] = 6.0 * conv + (3.0 * h4[s // 2 + 1] if s % 2 == 0 else 0.0)
        b = (s_arr + 1) * h2[s_arr + 2] + 2.0 * (s_arr + 1) * q**s_arr * h3[s_arr + 1]
        bridge = 3.0 * (s_arr + 1) * h3[s_arr + 1]

        margins = a - b
        idx = int(np.argmin(margins))
        if margins[idx] < min_margin:
            min_margin = float(margins[idx])
            min_at = (q, idx)
        if not (np.all(a > bridge) and np.all(bridge > b)):
            bridge_ok = False

    mpp_min = min(euler_cube_d2(q) for q in q_grid)
    all_pass = min_margin > 0.0 and mpp_min > 0.0 and bridge_ok
    return ConvexityReport(
        q_grid, s_max, min_margin, mpp_min, all_pass, bridge_ok, min_at
    )


@dataclass(frozen=True)
class EulerProfile:
    """Tabulated behavior of E and M across a grid in (-1, 1)."""

    q_grid: tuple[float, ...]
    m_values: tuple[float, ...]
    e_values: tuple[float, ...]
    all_positive: bool
    decreasing_on_unit_interval: bool
    argmax_m: float
    argmax_e: float
    m_inflection_brackets: tuple[tuple[float, float], ...]
    e_inflection_brackets: tuple[tuple[float, float], ...]


def euler_profile(q_grid) -> EulerProfile:
    """Tabulate M and E over a grid interior to (-1, 1): positivity, the
    monotone decrease on [0, 1), the location of the maxima (expected in
    (-1, 0)), and sign-change brackets of the second derivatives."""
    q_grid = tuple(sorted(float(q) for q in q_grid))
    if not q_grid or q_grid[0] <= -1.0 or q_grid[-1] >= 1.0:
        raise ValueError("grid must lie strictly inside (-1, 1)")
    m_vals = tuple(euler_cube(q) for q in q_grid)
    e_vals = tuple(euler_value(q) for q in q_grid)
    positive = all(v > 0 for v in m_vals) and all(v > 0 for v in e_vals)
    right = [(q, m, e) for q, m, e in zip(q_grid, m_vals, e_vals) if q >= 0.0]
    decreasing = all(
        right[i][1] > right[i + 1][1] and right[i][2] > right[i + 1][2]
        for i in range(len(right) - 1)
    )
    argmax_m = q_grid[max(range(len(q_grid)), key=lambda i: m_vals[i])]
    argmax_e = q_grid[max(range(len(q_grid)), key=lambda i: e_vals[i])]

    def brackets(second):
        vals = [second(q) for q in q_grid]
        out = []
        for i in range(len(vals) - 1):
            if vals[i] == 0.0 or vals[i] * vals[i + 1] < 0.0:
                out.append((q_grid[i], q_grid[i + 1]))
        return tuple(out)

    return EulerProfile(
        q_grid,
        m_vals,
        e_vals,
        positive,
        decreasing,
        argmax_m,
        argmax_e,
        brackets(euler_cube_d2),
        brackets(euler_d2),
    )
