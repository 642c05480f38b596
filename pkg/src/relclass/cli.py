"""Command line entry point: `relclass <subcommand> ...`.

Exit status is 0 when every check passed, 1 when a check failed, 2 on usage errors.
"""

import argparse
import sys

from . import campaigns
from .errors import InvariantViolation
from .forms import form_class_number, split_discriminant, strict_and_wide
from .orders import class_record, relative_class_number
from .pell import fundamental_unit
from .store import ResultRecord, write


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def _int(text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=_int, default=None,
                        help="worker processes (default: $RELCLASS_JOBS or CPU count)")
    common.add_argument("--out", help="append result records to this file")
    common.add_argument("--format", choices=("jsonl", "tsv"), default="jsonl")

    p = _Parser(prog="relclass", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    s = sub.add_parser("unit", parents=[common], help="fundamental unit of Q(sqrt(m))")
    s.add_argument("m", type=_int)
    s = sub.add_parser("relcn", parents=[common], help="relative class number h_{d0}(f)")
    s.add_argument("d0", type=_int)
    s.add_argument("f", type=_int)
    s = sub.add_parser("record", parents=[common], help="full class record for (d0, f)")
    s.add_argument("d0", type=_int)
    s.add_argument("f", type=_int)
    s = sub.add_parser("forms", parents=[common], help="form class number H(d)")
    s.add_argument("d", type=_int)
    s = sub.add_parser("verify46", parents=[common], help="relative class numbers of Q(sqrt(46))")
    s.add_argument("--fmax", type=_int, default=10**4)
    s = sub.add_parser("scan-mdy", parents=[common], help="squarefree m with m | y(eps_m)")
    s.add_argument("--mmax", type=_int, default=60000)
    s.add_argument("--full-census", action="store_true",
                   help="scan all m < 10^7 (hours); uses the modular fast path")
    s.add_argument("--modular", action="store_true", help="track y mod m only")
    s = sub.add_parser("aac", parents=[common], help="Ankeny-Artin-Chowla / Mordell scan")
    s.add_argument("--pmax", type=_int, default=10**4)
    s = sub.add_parser("cohn", parents=[common], help="H_5(5^n) = 1 tower")
    s.add_argument("--nmax", type=_int, default=5)
    s = sub.add_parser("sweep31", parents=[common], help="witness primes with h_{d0}(f) = 1")
    s.add_argument("--mmax", type=_int, default=45)
    s = sub.add_parser("crosscheck", parents=[common], help="form count vs unit route")
    s.add_argument("--limit", type=_int, default=20000)
    s = sub.add_parser("stephens", parents=[common], help="evidence for the other m | y fields")
    s.add_argument("--fmax", type=_int, default=10**3)
    return p


def _run_campaign(args, jobs):
    if args.cmd == "verify46":
        return campaigns.verify_theorem_1_1(args.fmax, jobs=jobs)
    if args.cmd == "scan-mdy":
        if args.full_census:
            return campaigns.scan_m_divides_y(10**7 - 1, jobs=jobs, modular=True)
        return campaigns.scan_m_divides_y(args.mmax, jobs=jobs, modular=args.modular)
    if args.cmd == "aac":
        return campaigns.scan_aac(args.pmax, jobs=jobs)
    if args.cmd == "cohn":
        return campaigns.cohn_tower(args.nmax)
    if args.cmd == "sweep31":
        return campaigns.sweep_theorem_3_1(args.mmax, jobs=jobs)
    if args.cmd == "crosscheck":
        return campaigns.cross_check_forms(args.limit, jobs=jobs)
    if args.cmd == "stephens":
        return campaigns.stephens_evidence(args.fmax, jobs=jobs)
    raise UsageError(f"unknown command {args.cmd}")


def _dispatch(args) -> tuple[list[ResultRecord], bool]:
    if args.cmd == "unit":
        u = fundamental_unit(args.m)
        print(u)
        return [ResultRecord.make("unit", {"m": u.m, "x": u.x, "y": u.y, "c": u.c, "norm": u.norm})], True
    if args.cmd == "relcn":
        h = relative_class_number(args.d0, args.f)
        print(h)
        return [ResultRecord.make("class", {"d0": args.d0, "f": args.f, "h_rel": h})], True
    if args.cmd == "record":
        values = class_record(args.d0, args.f).as_dict()
        print(" ".join(f"{k}={v}" for k, v in values.items()))
        return [ResultRecord.make("class", values)], True
    if args.cmd == "forms":
        d0, f = split_discriminant(args.d)
        H = form_class_number(args.d)
        h_plus, h = strict_and_wide(args.d)
        print(f"H={H} h_plus={h_plus} h={h} d0={d0} f={f}")
        return [ResultRecord.make("form_count", {"d": args.d, "H": H, "h_plus": h_plus, "h": h})], True

    jobs = args.jobs if args.jobs is not None else campaigns.default_jobs()
    res = _run_campaign(args, jobs)
    for msg in res.failures:
        print(f"FAIL {msg}", file=sys.stderr)
    print(res.summary())
    base = {"campaign": res.name, **res.params}
    recs = [ResultRecord.make("campaign_item", {**base, **it}) for it in res.items]
    recs.append(ResultRecord.make("campaign_item", {**base, "summary": True, "passed": res.passed,
                                                    **res.counts}))
    return recs, res.passed


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    try:
        records, ok = _dispatch(args)
    except InvariantViolation as exc:
        print(f"FAIL {exc}", file=sys.stderr)
        return 1
    except (ValueError, UsageError) as exc:
        print(f"relclass: error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        write(records, args.out, args.format)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
