"""Command-line front end.

Subcommands: mixedvol, volume, check, fuzz, extremal, grassmann-sample,
report.  Exit codes: 0 all checks hold, 1 a violation was found, 2 usage or
input error.  Exact mode is the default everywhere; --mode float is accepted
only by mixedvol and volume (verification must be exact).
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional

from .grassmann import abs_map, check_gp3, check_quad_ineq, pluecker, render_pluecker_csv
from .numeric import (
    Mat3xM,
    approx_str,
    parse_matrix,
    parse_rational,
    render_matrix,
    render_rational,
)
from .reduction import SStats, extremal_config
from .rng import SplitMix64, random_vec3
from .verify import (
    FuzzConfig,
    IneqReport,
    check_af_square,
    check_bezout,
    check_lemma_matrix,
    fuzz,
)
from .witness import pyramid_equality_report
from .zonotope import (
    Zonotope3,
    mixed_volume,
    mixed_volume_float,
    mixed_volume_repeated,
    parse_zonotope,
    render_zonotope,
    volume,
    volume_float,
)

_CHECK_ARITY = {"bezout": 3, "lemma": 1, "af-square": 4, "grassmann": 1}


def _load_zonotope(path: str) -> Zonotope3:
    try:
        return parse_zonotope(Path(path).read_text())
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from exc


def _load_matrix(path: str) -> Mat3xM:
    try:
        return parse_matrix(Path(path).read_text())
    except ValueError as exc:
        raise ValueError(f"{path}: {exc}") from exc


def _emit(text: str, args) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _rat_line(label: str, q: Fraction) -> str:
    return f"{label} = {render_rational(q)} ({approx_str(q)})"


def _report_text(report: IneqReport) -> str:
    lines = [
        _rat_line("lhs  ", report.lhs),
        _rat_line("rhs  ", report.rhs),
        _rat_line("slack", report.slack),
    ]
    if report.ratio is not None:
        lines.append(_rat_line("ratio", report.ratio))
    else:
        lines.append("ratio = undefined (a right-hand factor vanishes)")
    lines.append(f"holds = {'yes' if report.holds else 'NO'}")
    return "\n".join(lines) + "\n"


def _report_csv(report: IneqReport, name: str = "") -> str:
    ratio = render_rational(report.ratio) if report.ratio is not None else ""
    prefix = f"{name}," if name else ""
    header = "name," if name else ""
    return (f"{header}lhs,rhs,slack,ratio,holds\n"
            f"{prefix}{render_rational(report.lhs)},{render_rational(report.rhs)},"
            f"{render_rational(report.slack)},{ratio},{report.holds}\n")


def _require_exact(args) -> None:
    if args.mode == "float":
        raise ValueError(f"subcommand {args.command!r} runs in exact mode only")


def cmd_mixedvol(args) -> int:
    bodies = [_load_zonotope(p) for p in args.files]
    if args.mode == "float":
        _emit(f"{mixed_volume_float(*bodies)!r}\n", args)
    else:
        v = mixed_volume(*bodies)
        _emit(f"{render_rational(v)} ({approx_str(v)})\n", args)
    return 0


def cmd_volume(args) -> int:
    body = _load_zonotope(args.file)
    if args.mode == "float":
        _emit(f"{volume_float(body)!r}\n", args)
    else:
        v = volume(body)
        _emit(f"{render_rational(v)} ({approx_str(v)})\n", args)
    return 0


def _check_grassmann(args) -> int:
    mat = _load_matrix(args.files[0])
    point = pluecker(mat)
    residuals = check_gp3(point)
    bad = [r for r in residuals if r.value != 0]
    lines = [f"columns = {mat.m}, minor coordinates = {len(point.coords)}",
             f"exchange relations checked = {len(residuals)}, nonzero residuals = {len(bad)}"]
    ok = not bad
    quad = None
    if mat.m >= 5:
        quad = check_quad_ineq(abs_map(point), mat.m - 2)
        ok = ok and quad.holds
    if args.output == "csv" and quad is not None:
        _emit(_report_csv(quad, name="quad-ineq"), args)
    else:
        text = "\n".join(lines) + "\n"
        if quad is not None:
            text += _report_text(quad)
        _emit(text, args)
    return 0 if ok else 1


def cmd_check(args) -> int:
    _require_exact(args)
    expected = _CHECK_ARITY[args.target]
    if len(args.files) != expected:
        raise ValueError(f"check {args.target} needs {expected} input file(s), "
                         f"got {len(args.files)}")
    if args.target == "grassmann":
        return _check_grassmann(args)
    if args.target == "lemma":
        mat = _load_matrix(args.files[0])
        report = check_lemma_matrix(mat.columns)
        witness = render_matrix(mat)
    elif args.target == "bezout":
        bodies = [_load_zonotope(p) for p in args.files]
        report = check_bezout(*bodies)
        witness = "".join(render_zonotope(b) for b in bodies)
    else:
        bodies = [_load_zonotope(p) for p in args.files]
        report = check_af_square(*bodies)
        witness = "".join(render_zonotope(b) for b in bodies)
    if args.output == "csv":
        _emit(_report_csv(report), args)
    else:
        _emit(_report_text(report), args)
    if not report.holds:
        sys.stderr.write("violated by input:\n" + witness)
        return 1
    return 0


def cmd_fuzz(args) -> int:
    _require_exact(args)
    target = args.target.replace("-", "_")
    config = FuzzConfig(target=target, trials=args.trials, m_max=args.m_max,
                        coeff_bound=args.coeff_bound, seed=args.seed)
    if args.output == "csv":
        rows = ["trial,target,m,slack_num,slack_den,ratio_num,ratio_den"]

        def on_trial(index: int, m: int, report: IneqReport) -> None:
            if report.ratio is not None:
                rn, rd = report.ratio.numerator, report.ratio.denominator
            else:
                rn, rd = "", ""
            rows.append(f"{index},{target},{m},{report.slack.numerator},"
                        f"{report.slack.denominator},{rn},{rd}")

        summary = fuzz(config, on_trial=on_trial)
        _emit("\n".join(rows) + "\n", args)
    else:
        summary = fuzz(config)
        lines = [
            f"target      = {target}",
            f"trials      = {summary.trials}",
            f"seed        = {summary.seed}",
            f"failures    = {summary.failures}",
            _rat_line("min slack  ", summary.min_slack),
        ]
        if summary.max_ratio is not None:
            lines.append(_rat_line("max ratio  ", summary.max_ratio))
        lines.append("worst case (minimum slack):")
        lines.append(summary.worst_case.rstrip("\n"))
        _emit("\n".join(lines) + "\n", args)
    return 0 if summary.failures == 0 else 1


def cmd_extremal(args) -> int:
    _require_exact(args)
    s = SStats(*(parse_rational(v) for v in (args.s1, args.s2, args.s3, args.s4)))
    lo, hi = parse_rational(args.lo), parse_rational(args.hi)
    lo2, hi2 = parse_rational(args.lo2), parse_rational(args.hi2)
    a, b, c = extremal_config(s, lo, hi, lo2, hi2)
    report = check_bezout(a, b, c)
    balanced = s.s1 * s.s4 == s.s2 * s.s3
    lines = [
        "generators of A:",
        render_zonotope(a).rstrip("\n"),
        _rat_line("V(A,A,A)", volume(a)),
        _rat_line("V(A,B,C)", mixed_volume(a, b, c)),
        _rat_line("V(A,A,B)", mixed_volume_repeated(a, b)),
        _rat_line("V(A,A,C)", mixed_volume_repeated(a, c)),
    ]
    if report.ratio is not None:
        lines.append(_rat_line("ratio   ", report.ratio))
        lines.append(f"ratio equals 3/2: {'yes' if report.ratio == Fraction(3, 2) else 'no'}")
    else:
        lines.append("ratio    = undefined (a right-hand factor vanishes)")
    lines.append(f"s1*s4 == s2*s3: {'yes' if balanced else 'no'}")
    _emit("\n".join(lines) + "\n", args)
    return 0 if report.holds else 1


def cmd_grassmann_sample(args) -> int:
    _require_exact(args)
    if args.n < 3:
        raise ValueError(f"--n must be >= 3, got {args.n}")
    rng = SplitMix64(args.seed)
    mat = Mat3xM(tuple(random_vec3(rng, args.coeff_bound) for _ in range(args.n)))
    point = pluecker(mat)
    if args.output == "csv":
        _emit(render_pluecker_csv(point), args)
        return 0
    residuals = check_gp3(point)
    bad = sum(1 for r in residuals if r.value != 0)
    text = (f"# random 3x{args.n} matrix, seed {args.seed}\n"
            + render_matrix(mat)
            + f"# minor coordinates ({len(point.coords)}):\n"
            + render_pluecker_csv(point)
            + f"# exchange relations checked = {len(residuals)}, nonzero residuals = {bad}\n")
    _emit(text, args)
    return 0 if bad == 0 else 1


def cmd_report(args) -> int:
    """Run the built-in showcase battery; exit 0 only if everything holds."""
    _require_exact(args)
    checks: list[tuple[str, IneqReport]] = []

    equality = extremal_config(SStats(*(Fraction(1),) * 4),
                               Fraction(0), Fraction(1), Fraction(0), Fraction(1))
    checks.append(("4-generator equality configuration", check_bezout(*equality)))
    checks.append(("square pyramid segment witness", pyramid_equality_report()))

    cube = Zonotope3.from_generators([(1, 0, 0), (0, 1, 0), (0, 0, 1)])
    seg1 = Zonotope3.from_generators([(1, 0, 0)])
    seg2 = Zonotope3.from_generators([(0, 1, 0)])
    checks.append(("unit cube vs its edge segments", check_bezout(cube, seg1, seg2)))
    checks.append(("generator-matrix form on the cube", check_lemma_matrix(cube.generators)))

    mat6 = Mat3xM(equality[0].generators + seg1.generators + seg2.generators)
    residuals = check_gp3(pluecker(mat6))
    gp_ok = all(r.value == 0 for r in residuals)
    checks.append(("quadratic minor inequality (6 columns)",
                   check_quad_ineq(abs_map(pluecker(mat6)), 4)))

    fuzz_lines = []
    all_hold = gp_ok
    for target in ("bezout", "lemma", "af_square"):
        summary = fuzz(FuzzConfig(target=target, trials=args.trials, m_max=6,
                                  coeff_bound=12, seed=args.seed))
        ok = summary.failures == 0
        all_hold = all_hold and ok
        fuzz_lines.append(f"fuzz {target:<9} trials={summary.trials} "
                          f"failures={summary.failures} "
                          f"min_slack={render_rational(summary.min_slack)}")

    if args.output == "csv":
        lines = ["name,lhs,rhs,slack,ratio,holds"]
        for name, report in checks:
            ratio = render_rational(report.ratio) if report.ratio is not None else ""
            lines.append(f"{name},{render_rational(report.lhs)},{render_rational(report.rhs)},"
                         f"{render_rational(report.slack)},{ratio},{report.holds}")
            all_hold = all_hold and report.holds
        _emit("\n".join(lines) + "\n", args)
    else:
        blocks = []
        for name, report in checks:
            blocks.append(f"== {name}\n{_report_text(report)}")
            all_hold = all_hold and report.holds
        blocks.append(f"== exchange-relation residuals all zero: {'yes' if gp_ok else 'NO'}\n")
        blocks.append("\n".join(fuzz_lines) + "\n")
        _emit("\n".join(blocks), args)
    return 0 if all_hold else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--mode", choices=("exact", "float"), default="exact",
                        help="scalar mode; float is for throughput experiments only")
    common.add_argument("--output", choices=("text", "csv"), default="text",
                        help="output format")
    common.add_argument("--out", default=None, help="write output to this path")
    common.add_argument("--seed", type=int, default=1, help="64-bit RNG seed")

    parser = argparse.ArgumentParser(
        prog="zonomix",
        description="Exact mixed volumes of zonotopes in R^3 and mechanical "
                    "verification of the inequality "
                    "V(A,A,A)V(A,B,C) <= (3/2)V(A,A,B)V(A,A,C).")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mixedvol", parents=[common],
                       help="mixed volume of three zonotope files")
    p.add_argument("files", nargs=3, metavar="ZONOTOPE")
    p.set_defaults(func=cmd_mixedvol)

    p = sub.add_parser("volume", parents=[common], help="volume of a zonotope file")
    p.add_argument("file", metavar="ZONOTOPE")
    p.set_defaults(func=cmd_volume)

    p = sub.add_parser("check", parents=[common],
                       help="check one inequality on explicit inputs")
    p.add_argument("target", choices=sorted(_CHECK_ARITY))
    p.add_argument("files", nargs="+", metavar="FILE")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("fuzz", parents=[common],
                       help="randomized exact checking with a deterministic seed")
    p.add_argument("--target", required=True,
                   choices=("bezout", "lemma", "af-square", "af_square"))
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--m-max", type=int, default=6, dest="m_max")
    p.add_argument("--coeff-bound", type=int, default=16, dest="coeff_bound")
    p.set_defaults(func=cmd_fuzz)

    p = sub.add_parser("extremal", parents=[common],
                       help="build the 4-generator tight configuration and report it")
    p.add_argument("--s1", default="1")
    p.add_argument("--s2", default="1")
    p.add_argument("--s3", default="1")
    p.add_argument("--s4", default="1")
    p.add_argument("--lo", default="0", help="first x-slope value")
    p.add_argument("--hi", default="1", help="second x-slope value")
    p.add_argument("--lo2", default="0", help="first y-slope value")
    p.add_argument("--hi2", default="1", help="second y-slope value")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("grassmann-sample", parents=[common],
                       help="random matrix -> minor coordinates (CSV) + relation check")
    p.add_argument("--n", type=int, default=6, help="number of columns")
    p.add_argument("--coeff-bound", type=int, default=16, dest="coeff_bound")
    p.set_defaults(func=cmd_grassmann_sample)

    p = sub.add_parser("report", parents=[common],
                       help="named witnesses plus a short fuzz pass on every checker")
    p.add_argument("--trials", type=int, default=200)
    p.set_defaults(func=cmd_report)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, ZeroDivisionError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
