"""Command line front end.

Reports are JSON on stdout (CSV for the table commands with --csv).
Exit codes: 0 success, 1 a verification failed, 2 invalid input,
3 the request exceeds the search budget.
"""

import argparse
import csv
import json
import os
import sys
from pathlib import Path

from . import __version__, checks
from .adjsort import diameter_bound, sort_cyclic
from .allswaps import coset_sort_time, sort_time_lower_bounds, worst_sort_time
from .core import canonicalize, parse_arrangement, replay, same_class, trivial
from .oracle import BudgetError, Mode, SearchConfig, distance, distance_table


def _add_oracle_options(p):
    p.add_argument("--max-states", type=int, default=None, help="state budget for searches")
    p.add_argument(
        "--cache-dir",
        default=None,
        help="distance table cache directory (or set CIRCLESORT_CACHE)",
    )


def _config_from(args):
    cache = getattr(args, "cache_dir", None) or os.environ.get("CIRCLESORT_CACHE")
    kwargs = {}
    if getattr(args, "max_states", None):
        kwargs["max_states"] = args.max_states
    if cache:
        kwargs["cache_dir"] = Path(cache)
    return SearchConfig(**kwargs)


def _report(command, inputs, payload):
    return {"command": command, "version": __version__, "input": inputs, **payload}


def _emit(obj):
    print(json.dumps(obj, indent=2))


def _cmd_sort(args):
    a = parse_arrangement(args.perm)
    seq = sort_cyclic(a)
    end = replay(a, seq)
    sorted_ok = same_class(end, trivial(a.n))
    _emit(
        _report(
            "sort",
            {"perm": args.perm},
            {
                "n": a.n,
                "bound": diameter_bound(a.n),
                "length": len(seq),
                "moves": [int(p) for p in seq.data],
                "result": str(end),
                "reached_sorted_class": sorted_ok,
            },
        )
    )
    return 0 if sorted_ok and len(seq) <= diameter_bound(a.n) else 1


def _cmd_dist(args):
    a = parse_arrangement(args.perm)
    mode = Mode(args.mode)
    config = _config_from(args)
    payload = {"n": a.n, "mode": mode.value}
    code = 0
    if mode is Mode.ALLSWAP:
        perm = tuple(x - 1 for x in canonicalize(a).labels)
        payload["distance"] = coset_sort_time(perm).sort_time
        payload["method"] = "coset-formula"
        if args.bfs:
            bfs_value = distance(a, mode, config)
            match = bfs_value == payload["distance"]
            payload["bfs_check"] = {"distance": bfs_value, "match": match}
            if not match:
                code = 1
    else:
        payload["distance"] = distance(a, mode, config)
        payload["method"] = "search"
    _emit(_report("dist", {"perm": args.perm, "mode": args.mode}, payload))
    return code


def _cmd_diam(args):
    mode = Mode(args.mode)
    config = _config_from(args)
    d = distance_table(args.n, mode, config).diameter()
    payload = {"n": args.n, "mode": mode.value, "diameter": d}
    code = 0
    if mode is Mode.ADJACENT:
        payload["formula"] = diameter_bound(args.n)
        payload["match"] = d == payload["formula"]
        if not payload["match"]:
            code = 1
    elif mode is Mode.ALLSWAP:
        payload["upper"] = max(args.n - 2, 0)
        payload["attains_upper"] = d == payload["upper"]
    _emit(_report("diam", {"n": args.n, "mode": args.mode}, payload))
    return code


def _cmd_table(args):
    mode = Mode(args.mode)
    config = _config_from(args)
    rows = []
    for n in range(1, args.max_n + 1):
        t = distance_table(n, mode, config)
        rows.append({"n": n, "diameter": t.diameter(), "histogram": t.histogram()})
    if args.csv:
        w = csv.writer(sys.stdout)
        w.writerow(["n", "diameter", "distance", "count"])
        for row in rows:
            for d, c in sorted(row["histogram"].items()):
                w.writerow([row["n"], row["diameter"], d, c])
    else:
        _emit(_report("table", {"max_n": args.max_n, "mode": args.mode}, {"rows": rows}))
    return 0


def _cmd_tvalues(args):
    rows = []
    for n in range(2, args.max_n + 1):
        w = worst_sort_time(n)
        rows.append(
            {
                "n": n,
                "sort_time": w.sort_time,
                "is_prime": w.is_prime,
                "attains_n_minus_2": w.sort_time == n - 2,
                "witness": " ".join(str(x) for x in w.witness),
                "lower_bounds": {source: value for source, value in w.lower_bounds},
            }
        )
    if args.csv:
        w = csv.writer(sys.stdout)
        w.writerow(["n", "sort_time", "is_prime", "attains_n_minus_2", "witness", "lower_bounds"])
        for row in rows:
            bounds = ";".join(f"{s}={v}" for s, v in row["lower_bounds"].items())
            w.writerow(
                [
                    row["n"],
                    row["sort_time"],
                    row["is_prime"],
                    row["attains_n_minus_2"],
                    row["witness"],
                    bounds,
                ]
            )
    else:
        _emit(_report("tvalues", {"max_n": args.max_n}, {"rows": rows}))
    return 0


def _cmd_bounds(args):
    n = args.n
    if n < 2:
        raise ValueError("bounds need n >= 2")
    payload = {
        "n": n,
        "adjacent_worst": diameter_bound(n),
        "allswap_upper": n - 2,
        "lower_bounds": {source: value for source, value in sort_time_lower_bounds(n)},
    }
    _emit(_report("bounds", {"n": n}, payload))
    return 0


def _cmd_verify(args):
    config = _config_from(args)
    results = checks.run_suite(args.suite, max_n=args.max_n, config=config)
    payload = {
        "suite": args.suite,
        "passed": all(r.passed for r in results),
        "checks": [
            {
                "name": r.name,
                "passed": r.passed,
                "seconds": r.seconds,
                "lines": list(r.lines),
            }
            for r in results
        ],
    }
    _emit(_report("verify", {"suite": args.suite, "max_n": args.max_n}, payload))
    return 0 if payload["passed"] else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="circlesort",
        description="Sorting labeled circles with swaps: constructions, exact tables, bounds.",
    )
    parser.add_argument("--version", action="version", version=f"circlesort {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sort", help="sort an arrangement with adjacent swaps")
    p.add_argument("--perm", required=True, help="labels clockwise from vertex 0, e.g. '3 1 2'")
    p.set_defaults(fn=_cmd_sort)

    p = sub.add_parser("dist", help="exact distance to the sorted class")
    p.add_argument("--perm", required=True)
    p.add_argument("--mode", choices=[m.value for m in Mode], default="adjacent")
    p.add_argument("--bfs", action="store_true", help="cross-check the allswap formula by search")
    _add_oracle_options(p)
    p.set_defaults(fn=_cmd_dist)

    p = sub.add_parser("diam", help="diameter of the distance table")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=[m.value for m in Mode], default="adjacent")
    _add_oracle_options(p)
    p.set_defaults(fn=_cmd_diam)

    p = sub.add_parser("table", help="per-n diameter and distance histogram")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--mode", choices=[m.value for m in Mode], default="adjacent")
    p.add_argument("--csv", action="store_true")
    _add_oracle_options(p)
    p.set_defaults(fn=_cmd_table)

    p = sub.add_parser("tvalues", help="worst any-swap sorting times with bounds")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(fn=_cmd_tvalues)

    p = sub.add_parser("bounds", help="all applicable bounds for one n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(fn=_cmd_bounds)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", choices=sorted(checks.SUITES), required=True)
    p.add_argument("--max-n", type=int, default=None)
    _add_oracle_options(p)
    p.set_defaults(fn=_cmd_verify)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except BudgetError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
