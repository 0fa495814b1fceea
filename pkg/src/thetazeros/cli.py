"""Command-line front end.

Subcommands map one-to-one onto the library modules:

    rk          the universal coefficient table, by any or all routes
    zero        Laurent expansion of the j-th zero
    delta       the denominator series delta_j
    stabilize   agreement table between zero coefficients and r_k
    numeric     Newton root-finding against the expansion prediction
    convexity   grid witness for the margin chain and M'' > 0
    verify-all  the embedded golden-fixture suite

Every JSON report embeds the invoking configuration; CSV output starts with
a ``# config: {...}`` comment line followed by a header row.  Output goes to
stdout unless --output is given; a bare filename is placed in the directory
named by the THETAZEROS_OUT environment variable when it is set.

Exit codes: 0 success, 2 bad arguments, 3 verification mismatch,
4 numeric non-convergence.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import convexity, numeric, rk, verify, zeros

EXIT_OK = 0
EXIT_BAD_ARGS = 2
EXIT_MISMATCH = 3
EXIT_NO_CONVERGENCE = 4


def _config(args: argparse.Namespace, *names: str) -> dict:
    cfg = {"subcommand": args.command}
    for name in names:
        cfg[name.replace("_", "-")] = getattr(args, name)
    cfg["format"] = args.format
    cfg["output"] = args.output
    return cfg


def _emit(args: argparse.Namespace, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if args.output is None:
        sys.stdout.write(text)
        return
    path = Path(args.output)
    if not path.is_absolute():
        base = os.environ.get("THETAZEROS_OUT")
        if base:
            path = Path(base) / path
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text, encoding="utf-8", newline="\n")


def _json_text(payload: dict) -> str:
    return json.dumps(payload, sort_keys=True, indent=2)


def _csv_text(config: dict, header: list[str], rows: list[list]) -> str:
    lines = ["# config: " + json.dumps(config, sort_keys=True)]
    lines.append(",".join(header))
    for row in rows:
        lines.append(",".join(_csv_cell(v) for v in row))
    return "\n".join(lines)


def _csv_cell(v) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(v)


def _complex_obj(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def cmd_rk(args) -> int:
    cfg = _config(args, "n", "method")
    if args.method == "all":
        cv = rk.cross_validate(args.n)
        values = cv.values
        verdict = "agree" if cv.agree else f"mismatch {cv.first_mismatch}"
    else:
        table = {
            "recurrence": rk.rk_recurrence,
            "euler-cube": rk.rk_euler_cube,
            "triple-product": rk.rk_triple_product,
        }[args.method](args.n)
        values = table.values
        verdict = None
    if args.format == "json":
        payload = {"config": cfg, "n": args.n, "method": args.method, "values": list(values)}
        if verdict is not None:
            payload["verdict"] = verdict
        _emit(args, _json_text(payload))
    else:
        _emit(args, _csv_text(cfg, ["k", "r_k"], [[k, v] for k, v in enumerate(values)]))
    if verdict not in (None, "agree"):
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_zero(args) -> int:
    cfg = _config(args, "j", "order")
    z = zeros.solve_expansion(args.j, args.order + 1)
    if args.format == "json":
        payload = {"config": cfg, "j": z.j, "kappa": z.kappa, "sign": z.sign, "g": list(z.g)}
        _emit(args, _json_text(payload))
    else:
        _emit(args, _csv_text(cfg, ["k", "g_k"], [[k, v] for k, v in enumerate(z.g)]))
    return EXIT_OK


def cmd_delta(args) -> int:
    cfg = _config(args, "j", "order")
    d = zeros.delta_series(args.j, args.order)
    if args.format == "json":
        payload = {
            "config": cfg,
            "j": d.j,
            "delta": list(d.delta.coeffs),
            "phi": list(d.phi.coeffs),
        }
        _emit(args, _json_text(payload))
    else:
        rows = [[k, v] for k, v in enumerate(d.delta.coeffs)]
        _emit(args, _csv_text(cfg, ["exponent", "coefficient"], rows))
    return EXIT_OK


def cmd_stabilize(args) -> int:
    cfg = _config(args, "jmax", "depth")
    rows = zeros.stabilization_report(args.jmax, args.depth)
    if args.format == "json":
        payload = {
            "config": cfg,
            "rows": [
                {
                    "j": r.j,
                    "compared_through": r.compared_through,
                    "guaranteed_range_ok": r.guaranteed_range_ok,
                    "matched_through": r.matched_through,
                    "first_divergence": list(r.first_divergence) if r.first_divergence else None,
                }
                for r in rows
            ],
        }
        _emit(args, _json_text(payload))
    else:
        table = [
            [
                r.j,
                r.compared_through,
                r.guaranteed_range_ok,
                r.matched_through,
                r.first_divergence[0] if r.first_divergence else "",
                r.first_divergence[1] if r.first_divergence else "",
                r.first_divergence[2] if r.first_divergence else "",
            ]
            for r in rows
        ]
        header = ["j", "compared_through", "guaranteed_range_ok", "matched_through",
                  "divergence_k", "divergence_g", "divergence_r"]
        _emit(args, _csv_text(cfg, header, table))
    if not all(r.guaranteed_range_ok for r in rows):
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_numeric(args) -> int:
    cfg = _config(args, "q", "j", "tol", "seed_order", "sweep")
    try:
        if args.sweep:
            orders = [int(tok) for tok in args.sweep.split(",")]
            table = numeric.convergence_sweep(args.q, args.j, orders)
            if args.format == "json":
                payload = {
                    "config": cfg,
                    "j": table.j,
                    "q": _complex_obj(table.q),
                    "monotone_decreasing": table.monotone_decreasing,
                    "max_ratio": table.max_ratio,
                    "rows": [
                        {
                            "order": r.order,
                            "error": r.error,
                            "first_omitted": r.first_omitted,
                            "ratio": r.ratio,
                        }
                        for r in table.rows
                    ],
                }
                _emit(args, _json_text(payload))
            else:
                rows = [[r.order, r.error] for r in table.rows]
                _emit(args, _csv_text(cfg, ["order", "error"], rows))
            return EXIT_OK
        report = numeric.find_zero(args.q, args.j, seed_order=args.seed_order, tol=args.tol)
    except (numeric.ConvergenceError, numeric.SingularDerivativeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NO_CONVERGENCE
    payload = {
        "config": cfg,
        "j": report.j,
        "q": _complex_obj(report.q),
        "predicted": _complex_obj(report.predicted),
        "found": _complex_obj(report.found),
        "iterations": report.iterations,
        "residual": report.residual,
        "agreement": report.agreement,
        "first_omitted": report.first_omitted,
        "seed_order": report.seed_order,
        "tol": report.tol,
        "in_guaranteed_regime": report.in_guaranteed_regime,
        "best_effort": report.best_effort,
        "conditioning": report.conditioning,
        "dps": report.dps,
    }
    if args.format == "json":
        _emit(args, _json_text(payload))
    else:
        keys = [k for k in payload if k not in ("config", "q", "predicted", "found")]
        header = ["q", "predicted", "found"] + keys
        row = [report.q.real, report.predicted.real, report.found.real] + [
            payload[k] for k in keys
        ]
        _emit(args, _csv_text(cfg, header, [row]))
    return EXIT_OK


def cmd_convexity(args) -> int:
    cfg = _config(args, "q_min", "q_max", "q_step", "smax")
    n_steps = int(round((args.q_max - args.q_min) / args.q_step))
    grid = [round(args.q_min + k * args.q_step, 12) for k in range(n_steps + 1)]
    grid = [q for q in grid if 0.0 < q < 1.0]
    report = convexity.convexity_margins(grid, args.smax)
    if args.format == "json":
        payload = {
            "config": cfg,
            "label": report.label,
            "s_max": report.s_max,
            "min_margin": report.min_margin,
            "min_margin_at": {"q": report.min_margin_at[0], "s": report.min_margin_at[1]},
            "mpp_min": float(report.mpp_min),
            "bridge_ok": report.bridge_ok,
            "all_pass": report.all_pass,
            "grid_points": len(report.q_grid),
        }
        _emit(args, _json_text(payload))
    else:
        rows = []
        for q in report.q_grid:
            for s in range(report.s_max + 1):
                a = convexity.square_part_coeff(s, q)
                b = convexity.curvature_part_coeff(s, q)
                rows.append([q, s, a, b, a - b])
        _emit(args, _csv_text(cfg, ["q", "s", "S_s", "T_s", "margin"], rows))
    return EXIT_OK if report.all_pass else EXIT_MISMATCH


def cmd_verify_all(args) -> int:
    results = verify.run_all()
    lines = []
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        suffix = f"  ({r.detail})" if (r.detail and not r.ok) else ""
        lines.append(f"{status}  {r.name}{suffix}")
    all_ok = all(r.ok for r in results)
    lines.append(f"{'PASS' if all_ok else 'FAIL'}  overall: {sum(r.ok for r in results)}/{len(results)} checks")
    if args.format == "json":
        payload = {
            "config": _config(args),
            "checks": [{"name": r.name, "ok": r.ok, "detail": r.detail} for r in results],
            "all_ok": all_ok,
        }
        _emit(args, _json_text(payload))
    else:
        _emit(args, "\n".join(lines))
    return EXIT_OK if all_ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="thetazeros",
        description="Exact Laurent expansions of the zeros of the partial theta function.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--output", default=None, help="output file (stdout if omitted)")

    p = sub.add_parser("rk", help="the universal coefficient table r_0..r_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--method",
        choices=("recurrence", "euler-cube", "triple-product", "all"),
        default="all",
    )
    common(p)
    p.set_defaults(func=cmd_rk)

    p = sub.add_parser("zero", help="Laurent expansion of the j-th zero")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--order", type=int, default=12, help="highest correction index g_k computed")
    common(p)
    p.set_defaults(func=cmd_zero)

    p = sub.add_parser("delta", help="the denominator series delta_j through q^order")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_delta)

    p = sub.add_parser("stabilize", help="agreement between zero coefficients and r_k")
    p.add_argument("--jmax", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_stabilize)

    p = sub.add_parser("numeric", help="Newton root-finding against the prediction")
    p.add_argument("--q", type=float, required=True)
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--tol", type=float, default=numeric.DEFAULT_TOL)
    p.add_argument("--seed-order", type=int, default=numeric.DEFAULT_SEED_ORDER)
    p.add_argument("--sweep", default=None, help="comma-separated truncation orders; emits the error table")
    common(p)
    p.set_defaults(func=cmd_numeric)

    p = sub.add_parser("convexity", help="grid witness for the margin chain")
    p.add_argument("--q-min", type=float, default=0.01)
    p.add_argument("--q-max", type=float, default=0.99)
    p.add_argument("--q-step", type=float, default=0.01)
    p.add_argument("--smax", type=int, default=200)
    common(p)
    p.set_defaults(func=cmd_convexity)

    p = sub.add_parser("verify-all", help="run the embedded golden-fixture suite")
    common(p)
    p.set_defaults(func=cmd_verify_all)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_ARGS


if __name__ == "__main__":
    sys.exit(main())
