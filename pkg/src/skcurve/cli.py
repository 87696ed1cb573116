"""Command-line interface: ``skcurve <subcommand> [options]``.

Exit codes: 0 success, 1 usage/domain/parse error, 2 certification failure.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import certify as cert
from .curve import evaluate, evaluate_real, tiling
from .exact import DomainError, Dyadic, ExactRatio, parse_dyadic
from .extremal import treug_search
from .metrics import locality_certified, locality_dyadic, slr
from .render import RenderSpec, render_traversal_svg
from .rivals import RivalCurveId, rival_locality

EXIT_OK, EXIT_ERROR, EXIT_CERT_FAIL = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _approx(v) -> str:
    return f"{float(v):.12g}"


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _point_text(p) -> str:
    return f"{p}  ~ ({_approx(p.x)}, {_approx(p.y)})"


def cmd_eval(args) -> int:
    try:
        t = parse_dyadic(args.t)
    except DomainError:
        t = None
    if t is not None:
        p = evaluate(t)
        _emit(args, {"t": str(t), "point": p.to_json(), "approx": [float(p.x), float(p.y)]},
              f"s({t}) = {_point_text(p)}")
        return EXIT_OK
    try:
        real = Fraction(args.t)
    except ValueError:
        raise DomainError(f"not a time: {args.t!r}") from None
    p, bound = evaluate_real(real, args.depth)
    _emit(
        args,
        {"t": args.t, "depth": args.depth, "point": p.to_json(), "approx": [float(p.x), float(p.y)],
         "error_bound_sq": str(bound)},
        f"s({args.t}) ~ {_point_text(p)}  (squared error <= {bound})",
    )
    return EXIT_OK


def cmd_slr(args) -> int:
    t1, t2 = parse_dyadic(args.t1), parse_dyadic(args.t2)
    v = slr(t1, t2)
    _emit(args, {"t1": str(t1), "t2": str(t2), "slr": v.to_json()}, f"{v}  ~ {_approx(v)}")
    return EXIT_OK


def _ratio_cell(r: ExactRatio | None) -> str:
    return "" if r is None else str(r)


def cmd_locality(args) -> int:
    if args.sweep:
        depths = [int(d) for d in args.sweep.split(",") if d.strip()]
        rows = []
        for d in depths:
            att = locality_dyadic(d).attained_max
            cu = locality_certified(d).certified_upper if d >= 2 else None
            rows.append((d, att, cu))
        if args.json:
            print(json.dumps([{"depth": d, "attained_max": a.to_json(),
                               "certified_upper": None if c is None else c.to_json()} for d, a, c in rows],
                             indent=2))
        else:
            w = csv.writer(sys.stdout, lineterminator="\n")
            w.writerow(["depth", "attained_max", "certified_upper"])
            for d, a, c in rows:
                w.writerow([d, _ratio_cell(a), _ratio_cell(c)])
        return EXIT_OK
    report = locality_certified(args.depth) if args.certified else locality_dyadic(args.depth)
    text = [f"depth {report.depth}",
            f"attained max SLR = {report.attained_max}  ~ {_approx(report.attained_max)}",
            f"witness (t1, t2) = ({report.witness.t1}, {report.witness.t2})"]
    if report.certified_upper is not None:
        text.append(f"certified upper bound = {report.certified_upper}  ~ {_approx(report.certified_upper)}")
    _emit(args, report.to_json(), "\n".join(text))
    return EXIT_OK


def cmd_certify(args) -> int:
    table = cert.load_table(args.input)
    if args.tol is not None:
        tol = _parse_tol(args.tol)
    else:
        tol = Dyadic(0) if table.encoding == "dyadic" else cert.decimal_tolerance()
    verdict = cert.certify(table, tol)
    if verdict.passed:
        iso = verdict.isometry
        text = f"PASS: consistent with the Sierpinski-Knopp curve at depth {table.depth}"
        if iso is not None and not iso.is_identity():
            text += f"\nisometry: {json.dumps(iso.to_json())}"
    else:
        text = f"FAIL at {verdict.failed_check}: {json.dumps(verdict.first_violation)}"
    _emit(args, verdict.to_json(), text)
    return EXIT_OK if verdict.passed else EXIT_CERT_FAIL


def _parse_tol(text: str) -> Dyadic:
    try:
        return parse_dyadic(text)
    except DomainError:
        pass
    try:
        Fraction(text)
    except ValueError:
        raise DomainError(f"bad tolerance {text!r}") from None
    return cert.decimal_tolerance(text)


def cmd_tiling(args) -> int:
    fr = tiling(args.order)
    if args.json:
        print(json.dumps([f.to_json() for f in fr], indent=2))
    else:
        for f in fr:
            print(f"{f.index}\t[{f.time_start}, {f.time_end}]\t{f.entry} {f.right} {f.exit}")
    return EXIT_OK


def cmd_render(args) -> int:
    svg = render_traversal_svg(RenderSpec(args.order, args.size, not args.no_subdivision, not args.no_arrow))
    if args.output:
        Path(args.output).write_text(svg)
    else:
        sys.stdout.write(svg)
    return EXIT_OK


def cmd_rival(args) -> int:
    rep = rival_locality(RivalCurveId(args.curve), args.depth)
    sk = locality_dyadic(args.depth).attained_max
    payload = rep.to_json() | {"curve": args.curve, "sierpinski_knopp": sk.to_json(),
                               "rival_exceeds_sk": rep.attained_max > sk}
    _emit(
        args,
        payload,
        f"{args.curve} depth {args.depth}: max SLR = {rep.attained_max}  ~ {_approx(rep.attained_max)} "
        f"at ({rep.witness.t1}, {rep.witness.t2}); Sierpinski-Knopp: {sk}",
    )
    return EXIT_OK


def cmd_extremal(args) -> int:
    res = treug_search(args.resolution)
    s = res["argmax"]
    print(json.dumps({"max_area": res["max_area"], "argmax": {"a": s.a, "b": s.b, "c": s.c},
                      "resolution": args.resolution}, indent=2 if args.json else None))
    return EXIT_OK


def cmd_export(args) -> int:
    table = cert.export_table(args.depth, args.encoding)
    text = json.dumps(table.to_json())
    if args.output:
        Path(args.output).write_text(text + "\n")
    else:
        print(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable JSON output")
    p = _Parser(prog="skcurve", description="Exact Sierpinski-Knopp curve toolkit.")
    p.add_argument("--json", action="store_true", help="machine-readable JSON output")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("eval", parents=[common], help="evaluate s(t)")
    s.add_argument("--t", required=True, help='time, dyadic "m/2^e" (exact) or decimal (approximate)')
    s.add_argument("--depth", type=int, default=24, help="depth for non-dyadic times")
    s.set_defaults(func=cmd_eval)

    s = sub.add_parser("slr", parents=[common], help="square-to-linear ratio of two times")
    s.add_argument("--t1", required=True)
    s.add_argument("--t2", required=True)
    s.set_defaults(func=cmd_slr)

    s = sub.add_parser("locality", parents=[common], help="exhaustive or certified locality")
    s.add_argument("--depth", type=int, default=10)
    s.add_argument("--certified", action="store_true", help="branch-and-bound upper bound to --depth")
    s.add_argument("--sweep", help="comma-separated depths; CSV depth,attained_max,certified_upper")
    s.set_defaults(func=cmd_locality)

    s = sub.add_parser("certify", parents=[common], help="certify a candidate table")
    s.add_argument("--input", required=True)
    s.add_argument("--tol", help="additive tolerance on squared distances")
    s.set_defaults(func=cmd_certify)

    s = sub.add_parser("tiling", parents=[common], help="list the order-n fractions")
    s.add_argument("--order", type=int, required=True)
    s.set_defaults(func=cmd_tiling)

    s = sub.add_parser("render", parents=[common], help="SVG of the fraction traversal")
    s.add_argument("--order", type=int, default=4)
    s.add_argument("--size", type=int, default=512)
    s.add_argument("--no-subdivision", action="store_true")
    s.add_argument("--no-arrow", action="store_true")
    s.add_argument("--output")
    s.set_defaults(func=cmd_render)

    s = sub.add_parser("rival", parents=[common], help="locality of a comparison curve")
    s.add_argument("--curve", choices=[c.value for c in RivalCurveId], default="hilbert")
    s.add_argument("--depth", type=int, default=8)
    s.set_defaults(func=cmd_rival)

    s = sub.add_parser("extremal", parents=[common], help="grid search for the extremal triangle")
    s.add_argument("--resolution", type=int, default=2000)
    s.set_defaults(func=cmd_extremal)

    s = sub.add_parser("export-table", parents=[common], help="write the curve samples as a table")
    s.add_argument("--depth", type=int, required=True)
    s.add_argument("--encoding", choices=["dyadic", "decimal"], default="dyadic")
    s.add_argument("--output")
    s.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (DomainError, ValueError, OSError) as exc:
        print(f"skcurve {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
