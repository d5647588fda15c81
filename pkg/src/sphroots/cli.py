"""Command-line front end.

Exit codes: 0 on success, 1 on verification failure (nonempty table diff,
or disagreement between methods under ``--method both``), 2 on invalid
input or a non-spherical datum.  With ``--format json`` all output is a
single JSON document on stdout; identical invocations produce byte-identical
output.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import rootsystem as rsmod
from .croots import levi_datum
from .degeneration import degenerate
from .enumeration import enumerate_cases, verify_tables
from .errors import NotSpherical, SphrootsError
from .solver import base_solve, optimized_solve
from .sphericity import theta_witness
from .subgroup import make_subgroup
from .tables import TABLE_IDS, dump_rows


def _emit(payload, fmt: str, text_fn=None) -> None:
    if fmt == "json":
        print(json.dumps(payload, sort_keys=True))
    elif text_fn is not None:
        text_fn(payload)
    else:
        print(json.dumps(payload, sort_keys=True, indent=2))


def _parse_psi(raw: str) -> list[tuple[int, ...]]:
    """Semicolon-separated restricted roots, comma-separated entries."""
    out = []
    for part in raw.split(";"):
        part = part.strip()
        if part:
            out.append(tuple(int(x) for x in part.split(",")))
    return out


def _datum_from_args(args):
    rs = rsmod.build(args.type, args.rank)
    complement = sorted({int(x) for x in args.complement.split(",")})
    if any(a < 1 or a > rs.rank for a in complement):
        raise SphrootsError(f"complement {complement} out of range")
    levi = [a for a in range(1, rs.rank + 1) if a not in set(complement)]
    L = levi_datum(rs, levi)
    psi = _parse_psi(args.psi)
    if any(len(v) != len(complement) for v in psi):
        raise SphrootsError("each psi entry needs one value per complement node")
    return make_subgroup(L, psi)


def _cmd_roots(args) -> int:
    rs = rsmod.build(args.type, args.rank)
    payload = {
        "type": rs.type_label,
        "rank": rs.rank,
        "cartan": [list(row) for row in rs.cartan],
        "simple_roots": [list(rs.simple_root(i)) for i in range(1, rs.rank + 1)],
        "positive_roots": [list(r) for r in rs.positive_roots],
    }

    def text(p):
        label = p["type"] if p["type"][-1].isdigit() else f"{p['type']}{p['rank']}"
        print(f"type {label}, {len(p['positive_roots'])} positive roots")
        print("cartan:")
        for row in p["cartan"]:
            print("  " + " ".join(f"{x:3d}" for x in row))
        print("positive roots (height, coefficients):")
        for r in p["positive_roots"]:
            print(f"  {sum(r):3d}  {r}")

    _emit(payload, args.format, text)
    return 0


def _cmd_check(args) -> int:
    H = _datum_from_args(args)
    witness = theta_witness(H)
    payload = {
        "spherical": witness.spherical,
        "rank": witness.rank,
        "theta": [list(v) for v in witness.theta],
    }
    _emit(payload, args.format,
          lambda p: print("spherical" if p["spherical"] else "not spherical",
                          f"rank={p['rank']}" if p["spherical"] else ""))
    return 0


def _cmd_compute(args) -> int:
    H = _datum_from_args(args)
    check = args.check if args.check is not None else args.method == "both"
    results = {}
    if args.method in ("base", "both"):
        results["base"] = base_solve(H, check=check)
    if args.method in ("optimized", "both"):
        results["optimized"] = optimized_solve(H, "compute", check=check)
        results["table"] = optimized_solve(H, "table", check=check)
    chosen = results.get("optimized") or results["base"]
    agree = len({r.root_set for r in results.values()}) == 1
    payload = {
        "spherical": True,
        "rank": len(chosen.roots),
        "spherical_roots": [list(v) for v in chosen.roots],
        "method": args.method,
        "methods_agree": agree,
    }

    def text(p):
        print(f"rank {p['rank']}")
        for v in p["spherical_roots"]:
            print(f"  {v}")
        if not p["methods_agree"]:
            print("METHOD DISAGREEMENT", file=sys.stderr)

    _emit(payload, args.format, text)
    return 0 if agree else 1


def _cmd_degenerate(args) -> int:
    H = _datum_from_args(args)
    lam = tuple(int(x) for x in getattr(args, "lambda").split(","))
    check = args.check if args.check is not None else True
    d = degenerate(H, lam, check=check)
    shift = sorted(
        (list(src), list(line.root) if line.root is not None else "h_delta")
        for src, line in d.shift_map.items())
    payload = {
        "delta": list(d.delta),
        "target": d.target.to_wire(),
        "u_infinity": [list(v) for v in d.u_infinity],
        "shift_map": [[s, t] for s, t in shift],
    }
    _emit(payload, args.format)
    return 0


def _cmd_enumerate(args) -> int:
    rs = rsmod.build(args.type, args.rank)
    records = enumerate_cases(rs, args.complement_size, args.psi_size,
                              solve=not args.skip_solve)
    payload = [r.to_json() for r in records]
    _emit(payload, args.format,
          lambda p: [print(json.dumps(rec, sort_keys=True)) for rec in p])
    return 0


def _cmd_verify_tables(args) -> int:
    check = args.check if args.check is not None else True
    report = verify_tables(args.type, max_rank=args.max_rank, check=check)
    payload = report.to_json()

    def text(p):
        status = "OK" if p["empty"] else "DIFF"
        print(f"{p['scope']}: {status} ({p['checked']} cases checked)")
        for kind in ("missing", "extra", "rank_mismatches", "sigma_mismatches"):
            for item in p[kind]:
                print(f"  {kind}: {json.dumps(item, sort_keys=True)}")

    _emit(payload, args.format, text)
    return 0 if report.empty else 1


def _cmd_tables(args) -> int:
    if args.table_command != "dump":
        raise SphrootsError("unknown tables subcommand")
    params = tuple(int(x) for x in args.params.split(",")) if args.params else None
    rows = dump_rows(args.table, n=args.n, params=params)
    _emit(rows, args.format,
          lambda p: [print(json.dumps(rec, sort_keys=True)) for rec in p])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sphroots",
        description="Exact spherical-root computations for Levi-split subgroups")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, datum=False):
        p.add_argument("--format", choices=("json", "text"), default="text")
        if datum:
            p.add_argument("--type", required=True)
            p.add_argument("--rank", type=int, required=True)
            p.add_argument("--complement", required=True,
                           help="comma-separated 1-based complement nodes")
            p.add_argument("--psi", required=True,
                           help="semicolon-separated restricted roots, e.g. '1;2'")
            p.add_argument("--assert", dest="check",
                           action=argparse.BooleanOptionalAction, default=None,
                           help="toggle runtime invariant checking")

    p = sub.add_parser("roots", help="dump a root system")
    p.add_argument("--type", required=True)
    p.add_argument("--rank", type=int)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=_cmd_roots)

    p = sub.add_parser("check", help="sphericity and rank of a datum")
    common(p, datum=True)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("compute", help="spherical roots of a datum")
    common(p, datum=True)
    p.add_argument("--method", choices=("base", "optimized", "both"),
                   default="optimized")
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("degenerate", help="degenerate a datum along one active root")
    common(p, datum=True)
    p.add_argument("--lambda", required=True,
                   help="comma-separated restricted root to degenerate along")
    p.set_defaults(func=_cmd_degenerate)

    p = sub.add_parser("enumerate", help="enumerate canonical cases")
    p.add_argument("--type", required=True)
    p.add_argument("--rank", type=int)
    p.add_argument("--complement-size", dest="complement_size", type=int,
                   choices=(1, 2), required=True)
    p.add_argument("--psi-size", dest="psi_size", type=int, choices=(1, 2),
                   required=True)
    p.add_argument("--skip-solve", action="store_true")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify-tables", help="regenerate tables and diff")
    p.add_argument("--type", required=True)
    p.add_argument("--max-rank", dest="max_rank", type=int, default=10)
    p.add_argument("--assert", dest="check",
                   action=argparse.BooleanOptionalAction, default=None)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=_cmd_verify_tables)

    p = sub.add_parser("tables", help="table row instantiations")
    tsub = p.add_subparsers(dest="table_command", required=True)
    pd = tsub.add_parser("dump")
    pd.add_argument("--table", type=int, choices=TABLE_IDS, required=True)
    pd.add_argument("--n", type=int)
    pd.add_argument("--params")
    pd.add_argument("--format", choices=("json", "text"), default="text")
    pd.set_defaults(func=_cmd_tables)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotSpherical as exc:
        print(f"not spherical: {exc}", file=sys.stderr)
        return 2
    except SphrootsError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
