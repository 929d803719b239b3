"""Command-line front end.

Exit codes: 0 all assertions pass, 1 an asserted invariant failed (the
report names it), 2 invalid input, 3 a size cap was exceeded.
"""

from __future__ import annotations

import argparse
import sys
from math import comb

from . import discriminant as disc
from . import filtration as filt
from . import jets
from . import suite as suite_mod
from .errors import SizeCapError
from .suite import SCHEMA, SuiteConfig, load_config, render_report, run_suite


def _base_record(**fields) -> dict:
    record = {"schema": SCHEMA}
    record.update(fields)
    return record


def _cmd_filtration(args) -> tuple[dict, bool]:
    result = filt.canonical_filtration(args.m, args.n, args.d, args.lmax)
    dims = result.dims
    formula_ok = dims[0] == 1 and all(
        dims[l] == comb(args.m * args.n + l, args.m * args.n)
        for l in range(1, args.lmax + 1) if l < args.d)
    record = _base_record(m=args.m, n=args.n, d=args.d, lmax=args.lmax,
                          dims=dims, formula_ok=formula_ok,
                          module_dim=result.module_dim,
                          saturation_level=result.saturation_level)
    return record, formula_ok


def _cmd_taylor(args) -> tuple[dict, bool]:
    if not 1 <= args.l <= args.d:
        raise ValueError("taylor check needs 1 <= l <= d")
    _, rank = jets.taylor_matrix(args.m, args.n, args.d, args.l)
    expected = comb(args.m * args.n + args.l, args.m * args.n)
    _, kernel_dim = jets.kernel_sections(args.m, args.n, args.d, args.l)
    section_dim = len(jets.section_space(args.m, args.n, args.d))
    ok = rank == expected and kernel_dim == section_dim - expected
    record = _base_record(m=args.m, n=args.n, d=args.d, l=args.l,
                          rank=rank, expected=expected, kernel=kernel_dim,
                          section_dim=section_dim, ok=ok)
    return record, ok


def _cmd_split(args) -> tuple[dict, bool]:
    report = filt.verma_split_check(args.m, args.n, args.d, args.l)
    record = _base_record(m=args.m, n=args.n, d=args.d, l=args.l,
                          dim_ul_g=report.dim_ul_g, dim_ul_n=report.dim_ul_n,
                          dim_ann=report.dim_ann, split_holds=report.split_holds)
    return record, report.split_holds


def _cmd_serre(args) -> tuple[dict, bool]:
    reports = filt.serre_power_check(args.m, args.n, args.d)
    rows = [{"index": r.index, "power": r.power,
             "below_nonzero": r.below_nonzero, "at_power_zero": r.at_power_zero,
             "ok": r.ok} for r in reports]
    ok = all(r.ok for r in reports)
    record = _base_record(m=args.m, n=args.n, d=args.d, roots=rows, ok=ok)
    return record, ok


def _cmd_duality(args) -> tuple[dict, bool]:
    report = jets.duality_check(args.m, args.n, args.d, args.l)
    record = _base_record(m=args.m, n=args.n, d=args.d, l=args.l,
                          filtration_dim=report.filtration_dim,
                          taylor_rank=report.taylor_rank,
                          dim_match=report.dim_match,
                          pairing_vanishes=report.pairing_vanishes,
                          ok=report.ok)
    return record, report.ok


def _cmd_disc(args) -> tuple[dict, bool]:
    seed = 0 if args.seed is None else args.seed
    record = suite_mod.disc_report(args.d, args.l, disc.DEFAULT_DEGREE_CAP, seed)
    report = _base_record(**record)
    return report, record["ok"]


def _cmd_suite(args) -> tuple[dict, bool]:
    if args.config:
        config = load_config(args.config)
    else:
        config = SuiteConfig()
    if args.seed is not None:
        config.seed = args.seed
    if args.format:
        config.fmt = args.format
    else:
        args.format = config.fmt  # config file may select the format
    report = run_suite(config, with_timings=args.timings)
    return report, report["verdict"] == "pass"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="vermajet",
        description="Exact-arithmetic checks for canonical filtrations, jet "
                    "truncations and discriminants of grassmannian linear systems.")
    parser.add_argument("--format", choices=("json", "csv"), default=None,
                        help="report format (default json)")
    parser.add_argument("--out", default=None, help="write the report to a file")
    parser.add_argument("--seed", type=int, default=None,
                        help="seed for sampling operations (default 0)")
    parser.add_argument("--timings", action="store_true",
                        help="include wall-clock timings (breaks byte-identical output)")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, flags):
        p = sub.add_parser(name, help=help_text)
        for flag in flags:
            p.add_argument(f"--{flag}", type=int, required=True)
        return p

    add("filtration", "canonical filtration dimensions", ("m", "n", "d", "lmax"))
    add("taylor", "rank and kernel of the order-l jet truncation", ("m", "n", "d", "l"))
    add("split", "enveloping algebra splitting dimensions", ("m", "n", "d", "l"))
    add("serre", "lowering powers on the highest weight vector", ("m", "n", "d"))
    add("duality", "filtration vs jet fiber duality", ("m", "n", "d", "l"))
    add("disc", "multiple-root locus checks", ("d", "l"))
    suite_parser = sub.add_parser("suite", help="run the desk suite")
    suite_parser.add_argument("--config", default=None,
                              help="JSON configuration file (defaults to the desk suite)")
    return parser


_HANDLERS = {
    "filtration": _cmd_filtration,
    "taylor": _cmd_taylor,
    "split": _cmd_split,
    "serre": _cmd_serre,
    "duality": _cmd_duality,
    "disc": _cmd_disc,
    "suite": _cmd_suite,
}


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        record, ok = _HANDLERS[args.command](args)
    except SizeCapError as error:
        _emit(render_report(suite_mod.raised_size_cap(error), args.format or "json"),
              args.out)
        return 3
    except ValueError as error:
        sys.stderr.write(f"error: {error}\n")
        return 2
    _emit(render_report(record, args.format or "json"), args.out)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
