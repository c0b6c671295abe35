"""Command line front end.

Subcommands: decode, encode, gen, validate, analyze, iso, aut,
switch-pasch, twins, fixtures.  Systems are read from --fixture names,
files, or stdin, in any of the three text formats (compact-code lines,
cyclic spec lines, explicit triple list).  Exit codes: 0 success,
1 malformed input, 2 budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys as _sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from . import fixtures
from .core import (BudgetExceededError, SteinerError, TripleSystem,
                   decode_compact, direct_product, encode_compact,
                   format_triple_list, generate_cyclic, infer_order,
                   load_systems, parse_cyclic_line)
from .isomorphism import are_isomorphic, automorphism_group
from .report import (analyze_system, expand_ops, render_figures, report_json,
                     write_csv)
from .resolvability import format_resolution, resolutions
from .trades import classify_twins, switched_system

EXIT_OK = 0
EXIT_BAD_INPUT = 1
EXIT_BUDGET = 2


def _read_text(path: str | None) -> str:
    if path is None or path == "-":
        return _sys.stdin.read()
    return Path(path).read_text()


def _load_inputs(args, allow_many=True) -> list[tuple[str, TripleSystem]]:
    """Systems named on the command line, labelled for reports."""
    if getattr(args, "fixture", None):
        return [(args.fixture, fixtures.get(args.fixture))]
    text = _read_text(getattr(args, "infile", None))
    systems = load_systems(text, getattr(args, "v", None))
    if not allow_many and len(systems) > 1:
        raise SteinerError("expected a single system")
    return [(f"input{i}" if len(systems) > 1 else "input", s)
            for i, s in enumerate(systems)]


def _load_one(token: str) -> TripleSystem:
    """A fixture name, or a path to a file holding one system."""
    try:
        return fixtures.get(token)
    except KeyError:
        pass
    systems = load_systems(Path(token).read_text())
    if len(systems) != 1:
        raise SteinerError(f"{token}: expected exactly one system")
    return systems[0]


def cmd_decode(args) -> int:
    text = _read_text(args.infile)
    for line in text.splitlines():
        code = line.split("#", 1)[0].strip()
        if not code:
            continue
        sysm = decode_compact(code, args.v if args.v else infer_order(len(code)))
        _sys.stdout.write(format_triple_list(sysm))
    return EXIT_OK


def cmd_encode(args) -> int:
    for _, sysm in _load_inputs(args):
        print(encode_compact(sysm))
    return EXIT_OK


def cmd_gen(args) -> int:
    if args.kind == "cyclic":
        spec = parse_cyclic_line(f"cyclic v={args.v} {args.bases}")
        sysm = generate_cyclic(spec)
    else:
        sysm = direct_product(_load_one(args.a), _load_one(args.b))
    print(encode_compact(sysm))
    return EXIT_OK


def cmd_validate(args) -> int:
    systems = _load_inputs(args)
    for label, sysm in systems:
        print(f"{label}: valid STS({sysm.v}), {len(sysm.blocks)} blocks")
    return EXIT_OK


def _analysis_job(payload):
    label, code, v, ops, budget, rainbow, double_res, timings = payload
    sysm = decode_compact(code, v)
    return analyze_system(sysm, ops, label=label, budget=budget,
                          rainbow=rainbow, double_res=double_res,
                          timings=timings)


def cmd_analyze(args) -> int:
    ops = expand_ops(args.ops)
    inputs = _load_inputs(args)
    jobs = [(label, encode_compact(s), s.v, ops, args.budget, args.rainbow,
             args.double_res, not args.no_timings) for label, s in inputs]
    if args.threads > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.threads) as pool:
            reports = list(pool.map(_analysis_job, jobs))
    else:
        reports = [_analysis_job(j) for j in jobs]
    doc = reports[0] if len(reports) == 1 else reports
    rendered = report_json(doc)
    if args.json:
        Path(args.json).write_text(rendered + "\n")
    else:
        print(rendered)
    if args.report_dir:
        outdir = Path(args.report_dir)
        outdir.mkdir(parents=True, exist_ok=True)
        write_csv(reports, outdir / "report.csv")
        for rep in reports:
            render_figures(rep, outdir)
    if args.resolutions_out:
        lines = []
        for _, sysm in inputs:
            for r in resolutions(sysm):
                lines.append(format_resolution(r))
        Path(args.resolutions_out).write_text("\n".join(lines) + "\n")
    if any("budget-exceeded" in json.dumps(r) for r in reports):
        return EXIT_BUDGET
    return EXIT_OK


def cmd_iso(args) -> int:
    a = _load_one(args.a)
    b = _load_one(args.b)
    witness = are_isomorphic(a, b)
    if witness is None:
        print("non-isomorphic")
    else:
        print("isomorphic via " + " ".join(str(p) for p in witness))
    return EXIT_OK


def cmd_aut(args) -> int:
    for label, sysm in _load_inputs(args):
        group = automorphism_group(sysm)
        print(f"{label}: order {group.order}, orbit sizes "
              f"{list(group.orbit_sizes())}")
        for g in group.generators:
            print("  gen " + " ".join(str(p) for p in g))
    return EXIT_OK


def cmd_switch_pasch(args) -> int:
    [(_, sysm)] = _load_inputs(args, allow_many=False)
    result = switched_system(sysm, "pasch", args.instance)
    print(encode_compact(result.system))
    return EXIT_OK


def cmd_twins(args) -> int:
    for label, sysm in _load_inputs(args):
        rep = classify_twins(sysm)
        line = f"{label}: {rep.classification}"
        if rep.partner is not None:
            line += (f" partner_pasch_count={rep.partner_pasch_count}"
                     f" partner_aut_order={rep.partner_aut_order}"
                     f" partner={encode_compact(rep.partner)}")
        print(line)
    return EXIT_OK


def cmd_fixtures(args) -> int:
    if args.action == "list":
        for name in fixtures.names():
            kind = "cyclic" if name in fixtures.CYCLIC_SPECS else "compact"
            print(f"{name}\t{kind}")
    else:
        for name in fixtures.names():
            print(f"# {name}")
            print(encode_compact(fixtures.get(name)))
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    # usage errors are malformed input: exit 1, not argparse's default 2
    def error(self, message):
        self.print_usage(_sys.stderr)
        print(f"error: {message}", file=_sys.stderr)
        raise SystemExit(EXIT_BAD_INPUT)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="steiner", description="Steiner triple system toolkit")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input_opts(p, with_v=False):
        p.add_argument("--fixture", help="named fixture (see `fixtures list`)")
        p.add_argument("--in", dest="infile", default=None,
                       help="input file (default stdin)")
        if with_v:
            p.add_argument("--v", type=int, default=None,
                           help="point count (inferred from code length if omitted)")

    p = sub.add_parser("decode", help="compact codes -> explicit triple lists")
    p.add_argument("--in", dest="infile", default=None)
    p.add_argument("--v", type=int, default=None)
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("encode", help="systems -> compact codes")
    add_input_opts(p, with_v=True)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("gen", help="generate a system")
    gensub = p.add_subparsers(dest="kind", required=True)
    pc = gensub.add_parser("cyclic", help="develop base blocks mod v")
    pc.add_argument("--v", type=int, required=True)
    pc.add_argument("--bases", required=True,
                    help="semicolon-separated base blocks, e.g. 0,1,5;0,2,10")
    pc.set_defaults(func=cmd_gen)
    pp = gensub.add_parser("product", help="direct product of two systems")
    pp.add_argument("--a", required=True, help="fixture name or file")
    pp.add_argument("--b", required=True, help="fixture name or file")
    pp.set_defaults(func=cmd_gen)

    p = sub.add_parser("validate", help="check systems")
    add_input_opts(p, with_v=True)
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("analyze", help="run analyses and emit a report")
    add_input_opts(p, with_v=True)
    p.add_argument("--ops", default="",
                   help="comma list: configs,colouring,resolvability,cycles,"
                        "independent,ec,aut or all")
    p.add_argument("--budget", type=int, default=None,
                   help="work budget for heavy searches")
    p.add_argument("--threads", type=int, default=1,
                   help="parallel workers for batch input")
    p.add_argument("--json", default=None, help="write the report here")
    p.add_argument("--report-dir", default=None,
                   help="write report.csv and figures into this directory")
    p.add_argument("--resolutions-out", default=None,
                   help="export resolutions, one line each")
    p.add_argument("--rainbow", action="store_true",
                   help="include the rainbow parallel-class analysis")
    p.add_argument("--double-res", action="store_true",
                   help="include the double-resolvability scan")
    p.add_argument("--no-timings", action="store_true",
                   help="omit the timings section")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("iso", help="isomorphism test between two systems")
    p.add_argument("a", help="fixture name or file")
    p.add_argument("b", help="fixture name or file")
    p.set_defaults(func=cmd_iso)

    p = sub.add_parser("aut", help="automorphism group")
    add_input_opts(p, with_v=True)
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("switch-pasch", help="switch the k-th pasch")
    add_input_opts(p, with_v=True)
    p.add_argument("--instance", type=int, default=0,
                   help="pasch index in deterministic enumeration order")
    p.set_defaults(func=cmd_switch_pasch)

    p = sub.add_parser("twins", help="twin classification")
    add_input_opts(p, with_v=True)
    p.set_defaults(func=cmd_twins)

    p = sub.add_parser("fixtures", help="the built-in corpus")
    p.add_argument("action", choices=("list", "dump"))
    p.set_defaults(func=cmd_fixtures)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceededError as e:
        print(f"budget exceeded: {e}", file=_sys.stderr)
        return EXIT_BUDGET
    except (SteinerError, KeyError, OSError, ValueError) as e:
        print(f"error: {e}", file=_sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
