"""The golden-fixture verification suite behind ``thetazeros verify-all``.

Each check pins one embedded reference value or identity; run_all returns
one result per check so callers can print a line apiece and aggregate an
exit status.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import fixtures
from .rk import cross_validate, rk_recurrence, verify_triple_product
from .zeros import delta_series, solve_expansion


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def run_all() -> list[CheckResult]:
    results = []

    table = rk_recurrence(20).values
    ok = table == (1,) + fixtures.RK_FIRST_20
    results.append(CheckResult("rk first 20 values", ok, f"got {table[1:6]}..."))

    cv = cross_validate(1000)
    results.append(
        CheckResult(
            "rk three-way agreement at n=1000",
            cv.agree,
            "" if cv.agree else f"first mismatch {cv.first_mismatch}",
        )
    )

    tp = verify_triple_product(500)
    results.append(
        CheckResult(
            "cubed Euler product equals sparse series at order 500",
            tp.ok,
            "" if tp.ok else f"first mismatch {tp.first_mismatch}",
        )
    )

    for j, row in fixtures.DELTA_ROWS.items():
        got = delta_series(j, 9).delta.coeffs
        results.append(
            CheckResult(f"delta_{j} first ten coefficients", got == row, f"got {got}")
        )

    z4 = solve_expansion(4, 6)
    results.append(
        CheckResult(
            "fourth zero sextuple",
            z4.g == fixtures.SEXTUPLE_J4,
            f"got {z4.g}",
        )
    )
    for j in range(5, 9):
        z = solve_expansion(j, 6)
        results.append(
            CheckResult(
                f"stabilized sextuple at j={j}",
                z.g == fixtures.SEXTUPLE_STABLE,
                f"got {z.g}",
            )
        )

    z1 = solve_expansion(1, 2)
    results.append(
        CheckResult(
            "first zero anomaly g_1 = 2",
            z1.g[1] == fixtures.J1_SECOND_COEFF,
            f"got {z1.g[1]}",
        )
    )

    signs_ok = True
    kappas_ok = True
    for j in range(1, 13):
        z = solve_expansion(j, 1)
        signs_ok = signs_ok and z.sign == (-1) ** j
        kappas_ok = kappas_ok and z.kappa == j * (j - 1) // 2
    results.append(CheckResult("discovered signs match (-1)^j for j <= 12", signs_ok))
    results.append(
        CheckResult("discovered exponents match j(j-1)/2 for j <= 12", kappas_ok)
    )

    return results
