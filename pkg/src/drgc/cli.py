"""Command-line interface.

    drgc list
    drgc spectrum <target>
    drgc verify <target> [--seeds 0,1,..] [--exact-cap N] [--format json|csv] [-o FILE]
    drgc verify-all [same options]

Targets are catalog names (``drgc list``), family specs like ``johnson:6,3``,
or raw graph6 strings.  Exit codes: 0 = no violation, 2 = violation found,
1 = operational error.
"""

from __future__ import annotations

import argparse
import sys

from .catalog import catalog_list
from .errors import DrgcError
from .report import emit, verify_all, verify_one
from .search import SearchConfig


def _add_common(p):
    p.add_argument("--seeds", default=None,
                   help="comma-separated RNG seeds (default 0..7)")
    p.add_argument("--exact-cap", type=int, default=24,
                   help="max n for exact enumeration (default 24, hard cap 30)")
    p.add_argument("--refine-budget", type=int, default=100_000)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("-o", "--output", default=None, help="write report to a file")


def _config(args) -> SearchConfig:
    seeds = tuple(int(s) for s in args.seeds.split(",")) if args.seeds \
        else (0, 1, 2, 3, 4, 5, 6, 7)
    return SearchConfig(exact_cap=args.exact_cap, seeds=seeds,
                        refine_budget=args.refine_budget)


def _write(data: bytes, output):
    if output:
        with open(output, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="drgc", description=__doc__,
                                     formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="list catalog entries")

    p_spec = sub.add_parser("spectrum", help="print the spectrum of a target")
    p_spec.add_argument("target")

    p_verify = sub.add_parser("verify", help="run the verification pipeline on one target")
    p_verify.add_argument("target")
    _add_common(p_verify)

    p_all = sub.add_parser("verify-all", help="verify the whole catalog and family grid")
    _add_common(p_all)

    args = parser.parse_args(argv)
    try:
        if args.command == "list":
            for e in catalog_list():
                print(f"{e.name:22s} {e.source:16s} {str(e.array):42s} "
                      f"status={e.status}")
            return 0
        if args.command == "spectrum":
            from .graph import intersection_array
            from .report import _resolve
            from .spectral import drg_spectrum
            _, g, _, entry = _resolve(args.target)
            ia = entry.array if g is None else intersection_array(g)
            sp = drg_spectrum(ia)
            print(f"array: {ia}")
            print("thetas:", " ".join(f"{t:.12g}" for t in sp.thetas))
            print("lambdas:", " ".join(f"{t:.12g}" for t in sp.lambdas))
            return 0
        if args.command == "verify":
            record = verify_one(args.target, _config(args))
            report = {"schema": 1, "records": [record]}
            _write(emit(report, args.format), args.output)
            return 2 if record["status"] == "VIOLATION" else 0
        if args.command == "verify-all":
            report = verify_all(_config(args))
            _write(emit(report, args.format), args.output)
            summary = ", ".join(f"{k}={v}" for k, v in report["counts"].items())
            print(f"\n{summary}", file=sys.stderr)
            return 2 if report["counts"]["VIOLATION"] else 0
    except DrgcError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 1


if __name__ == "__main__":
    sys.exit(main())
