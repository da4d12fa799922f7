"""Command-line entry point: ``umbral {umbra,tsh,family,ks,verify,mc} ...``.

Exit codes: 0 when everything checked passes, 1 when a check fails, 2 for usage errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from pathlib import Path

from . import families, kailath, levy, numcheck, verify
from .tsh import tsh_polys
from . import umbra as U
from .polyring import rat, rat_str

FORMATS = ("text", "json", "latex", "csv")
UMBRA_OPS = ("cumulant", "partition", "inverse", "comp_inverse", "primitive")


class UsageError(Exception):
    pass


def default_order() -> int:
    raw = os.environ.get("UMBRAL_ORDER")
    if raw is None:
        return levy.DEFAULT_ORDER
    try:
        n = int(raw)
    except ValueError:
        raise UsageError(f"UMBRAL_ORDER must be an integer, got {raw!r}") from None
    if n < 1:
        raise UsageError("UMBRAL_ORDER must be positive")
    return n


def parse_params(items) -> dict:
    out = {}
    for item in items or ():
        key, sep, value = item.partition("=")
        if not sep or not key:
            raise UsageError(f"--param expects key=value, got {item!r}")
        try:
            out[key.strip()] = rat(value.strip())
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"parameter {key!r} is not a rational: {value!r}") from None
    return out


def load_process(token: str, params: dict, order: int) -> levy.ProcessUmbra:
    if token.endswith(".json") or Path(token).is_file():
        spec, cfg_order = levy.load_spec(token)
        return levy.from_triplet(spec, max(order, cfg_order or 0))
    return levy.named_process(token, params, order)


# -- rendering -----------------------------------------------------------------


def _csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _latex_table(header, rows) -> str:
    cols = "r" + "l" * (len(header) - 1)
    lines = [rf"\begin{{tabular}}{{{cols}}}", " & ".join(header) + r" \\", r"\hline"]
    lines += [" & ".join(f"${c}$" for c in row) + r" \\" for row in rows]
    lines.append(r"\end{tabular}")
    return "\n".join(lines)


def _text_table(header, rows) -> str:
    rows = [[str(c) for c in r] for r in rows]
    widths = [max(len(str(h)), *(len(r[i]) for r in rows)) for i, h in enumerate(header)] if rows else [
        len(h) for h in header]
    fmt = "  ".join(f"{{:<{w}}}" for w in widths)
    return "\n".join([fmt.format(*header), *(fmt.format(*r) for r in rows)]).rstrip()


def _render(fmt, payload, header, text_rows, latex_rows=None) -> str:
    if fmt == "json":
        return json.dumps(payload, indent=2)
    if fmt == "csv":
        return _csv(header, text_rows)
    if fmt == "latex":
        return _latex_table(header, latex_rows if latex_rows is not None else text_rows)
    return _text_table(header, text_rows)


# -- subcommands -----------------------------------------------------------------


def cmd_umbra(args) -> int:
    order = args.order
    name = args.name.lower()
    if name in U.SPECIAL_NAMES or name in U._ALIASES:
        a = U.special(name, order)
    else:
        a = load_process(args.name, parse_params(args.param), order).alpha
    for op in args.apply or ():
        a = getattr(U, op)(a)
    payload = {"name": args.name, "apply": list(args.apply or ()), **a.to_json()}
    rows = [(n, str(m)) for n, m in enumerate(a.moments)]
    latex = [(n, m.latex()) for n, m in enumerate(a.moments)]
    print(_render(args.format, payload, ("n", "moment"), rows, latex))
    return 0


def cmd_tsh(args) -> int:
    K = args.max_degree
    proc = load_process(args.process, parse_params(args.param), max(args.order, K))
    Q = tsh_polys(proc, K)
    if args.format == "latex":
        lines = [r"\begin{align*}"]
        lines += [rf"Q_{{{k}}}(x,t) &= {q.latex()} \\" for k, q in enumerate(Q)]
        lines.append(r"\end{align*}")
        print("\n".join(lines))
        return 0
    payload = {
        "process": proc.label,
        "params": {k: str(v) for k, v in proc.params.items()},
        "rows": [{"k": k, "Q": q.to_json(), "text": str(q)} for k, q in enumerate(Q)],
    }
    print(_render(args.format, payload, ("k", "Q_k(x,t)"), [(k, str(q)) for k, q in enumerate(Q)]))
    return 0


def cmd_family(args) -> int:
    params = parse_params(args.param) or None
    table = families.family_table(args.name, params, args.max_degree)
    header = ("k", "classical", "umbral", "factor")
    rows = [(r.k, str(r.classical), str(r.umbral), str(r.factor)) for r in table.rows]
    latex = [(r.k, r.classical.latex(), r.umbral.latex(), r.factor.latex()) for r in table.rows]
    print(_render(args.format, table.to_json(), header, rows, latex))
    return 0 if all(c.passed for c in table.checks()) else 1


def cmd_ks(args) -> int:
    if args.jumps:
        try:
            jumps = [rat(j.strip()) for j in args.jumps.split(",") if j.strip()]
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"--jumps must be comma-separated rationals, got {args.jumps!r}") from None
        res = kailath.jump_path_eval(jumps, args.n)
        payload = res.to_json()
        rows = [(res.n, rat_str(res.variation), rat_str(res.integral), rat_str(res.ks_value), res.check)]
        print(_render(args.format, payload, ("n", "variation", "integral", "ks_value", "check"), rows))
        return 0 if res.check else 1
    poly = kailath.ks_poly(args.n, kailath.sigma_symbols(args.n))
    payload = {"n": args.n, "poly": poly.to_json(), "text": str(poly)}
    print(_render(args.format, payload, ("n", "P"), [(args.n, str(poly))], [(args.n, poly.latex())]))
    return 0


def cmd_verify(args) -> int:
    report = verify.run_suite(args.suite, args.order)
    if args.format == "json":
        print(json.dumps(report.to_json(), indent=2))
    elif args.format == "csv":
        print(_csv(("id", "status"), [(c.id, "pass" if c.passed else "fail") for c in report.checks]))
    else:
        print(report.to_text())
    return report.exit_code


def cmd_mc(args) -> int:
    cfg = numcheck.SimConfig(args.process, parse_params(args.param), t=args.t, steps=args.steps,
                             paths=args.paths, seed=args.seed)
    report = numcheck.martingale_check(cfg, K=args.max_degree)
    header = ("k", "mean", "se", "z", "cond_z", "slope_z")
    rows = [(r.k, f"{r.mean:.6g}", f"{r.se:.3g}", f"{r.z:.3f}", f"{r.cond_z:.3f}", f"{r.slope_z:.3f}")
            for r in report.rows]
    out = _render(args.format, report.to_json(), header, rows)
    if args.format == "text":
        out += f"\n{'PASS' if report.passed else 'FAIL'} ({report.seconds:.2f}s, reruns={report.reruns})"
    print(out)
    return 0 if report.passed else 1


# -- parser ------------------------------------------------------------------------


def _nonneg(value: str) -> int:
    try:
        n = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {value!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return n


def build_parser(order: int) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="umbral", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, formats=FORMATS):
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--order", type=_nonneg, default=order, help="truncation order")

    p = sub.add_parser("umbra", help="moment table of a special umbra or a process")
    p.add_argument("--name", required=True, help="special umbra, process name, or triplet config")
    p.add_argument("--param", action="append", metavar="KEY=VALUE")
    p.add_argument("--apply", action="append", choices=UMBRA_OPS, help="operation applied in order")
    common(p)
    p.set_defaults(func=cmd_umbra)

    p = sub.add_parser("tsh", help="time-space harmonic polynomials Q_k(x,t)")
    p.add_argument("--process", required=True, help="process name or triplet config .json")
    p.add_argument("--param", action="append", metavar="KEY=VALUE")
    p.add_argument("--max-degree", type=_nonneg, default=4)
    common(p)
    p.set_defaults(func=cmd_tsh)

    p = sub.add_parser("family", help="classical family versus its umbral expression")
    p.add_argument("--name", required=True, choices=families.FAMILY_NAMES)
    p.add_argument("--param", action="append", metavar="KEY=VALUE")
    p.add_argument("--max-degree", type=_nonneg, default=8)
    common(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("ks", help="Kailath-Segall polynomial or a pure-jump path check")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--jumps", help="comma-separated rational jump sizes")
    common(p)
    p.set_defaults(func=cmd_ks)

    p = sub.add_parser("verify", help="run verification suites")
    p.add_argument("--suite", default="all", choices=verify.SUITES + ("all",))
    common(p, ("text", "json", "csv"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("mc", help="Monte Carlo martingale cross-check")
    p.add_argument("--process", required=True, choices=levy.PROCESS_NAMES)
    p.add_argument("--param", action="append", metavar="KEY=VALUE")
    p.add_argument("--t", type=float, default=1.0)
    p.add_argument("--steps", type=int, default=4)
    p.add_argument("--paths", type=int, default=100_000)
    p.add_argument("--max-degree", type=_nonneg, default=4)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.set_defaults(func=cmd_mc)
    return parser


def run(argv=None) -> int:
    try:
        parser = build_parser(default_order())
    except UsageError as exc:
        print(f"umbral: {exc}", file=sys.stderr)
        return 2
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (UsageError, levy.BadParameter, families.UnknownFamily, ValueError, KeyError,
            FileNotFoundError, json.JSONDecodeError) as exc:
        print(f"umbral: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
