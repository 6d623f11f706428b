"""
Command-line front end.

Exit codes: 0 success, 1 a verification identity failed, 2 bad
arguments or malformed input, 3 scale-cap refusal.  All results go to
stdout, diagnostics to stderr; identical invocations (any thread count)
produce byte-identical output.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import alcoved, geometry, numbers, orbit
from .errors import ScaleCapError
from .permcore import as_permutation

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_BAD_ARGS = 2
EXIT_SCALE_CAP = 3

UNCAPPED = 10**9


def render_table(headers: list[str], rows: list[list], fmt: str) -> str:
    if fmt == "json":
        records = [dict(zip(headers, row)) for row in rows]
        return json.dumps(records, sort_keys=True) + "\n"
    str_rows = [[str(cell) for cell in row] for row in rows]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(headers)
        writer.writerows(str_rows)
        return buf.getvalue()
    widths = [
        max(len(h), *(len(r[c]) for r in str_rows)) if str_rows else len(h)
        for c, h in enumerate(headers)
    ]
    lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
    for row in str_rows:
        lines.append("  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
    return "\n".join(lines) + "\n"


def render_json(record: dict) -> str:
    return json.dumps(record, sort_keys=True) + "\n"


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=["plain", "csv", "json"], default="plain")
    parser.add_argument("--threads", type=int, default=1)
    parser.add_argument("--max-factorial-cap", type=int, default=orbit.DEFAULT_FACTORIAL_CAP,
                        help="largest S_m allowed for exhaustive enumeration")
    parser.add_argument("--max-ambient", type=int, default=geometry.DEFAULT_AMBIENT_CAP,
                        help="largest ambient dimension allowed for lattice-point DP")
    parser.add_argument("--force", action="store_true",
                        help="lift the scale caps entirely")


def _caps(args) -> tuple[int, int]:
    if args.force:
        return UNCAPPED, UNCAPPED
    return args.max_factorial_cap, args.max_ambient


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulercat",
        description="Exact Eulerian-Catalan counts, censuses, and polytope volumes",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eulerian-row", help="one row of the Eulerian triangle")
    p.add_argument("--n", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("ec", help="Eulerian-Catalan numbers EC_0..EC_max")
    p.add_argument("--max-n", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("fuss", help="the Fuss-type count A(n, kn+k-1)/(n+1)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("catalan", help="Catalan numbers C_0..C_max")
    p.add_argument("--max-n", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("dyck-count", help="exhaustive (k-1)-Dyck permutation count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=2)
    _add_common(p)

    p = sub.add_parser("census", help="exceedance census of S_{2n+1} with n descents")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--by-position", action="store_true",
                   help="bucket by the exact set of exceedance positions")
    _add_common(p)

    p = sub.add_parser("orbit", help="cyclic-orbit certificate for one permutation")
    p.add_argument("word", type=int, nargs="+", metavar="W")
    _add_common(p)

    p = sub.add_parser("volume", help="exact normalized volume via Ehrhart counting")
    p.add_argument("--shape", choices=["hypersimplex", "pkn", "p2n"], required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--flip", default="",
                   help="comma-separated flip set T for --shape p2n, e.g. 1,2")
    _add_common(p)

    p = sub.add_parser("verify", help="run a cross-verification identity")
    p.add_argument("target", choices=[
        "equidistribution", "subdivision", "alcoved-vs-dyck", "census-vs-volumes",
    ])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=2)
    _add_common(p)

    return parser


def _cmd_eulerian_row(args) -> int:
    if args.n < 1:
        raise ValueError("--n must be >= 1")
    rows = [[m, numbers.eulerian(m, args.n)] for m in range(args.n)]
    sys.stdout.write(render_table(["m", "count"], rows, args.format))
    return EXIT_OK


def _cmd_ec(args) -> int:
    if args.max_n < 0:
        raise ValueError("--max-n must be >= 0")
    rows = [[n, numbers.eulerian_catalan(n)] for n in range(args.max_n + 1)]
    sys.stdout.write(render_table(["n", "ec"], rows, args.format))
    return EXIT_OK


def _cmd_fuss(args) -> int:
    rows = [[args.k, args.n, numbers.fuss_eulerian_catalan(args.k, args.n)]]
    sys.stdout.write(render_table(["k", "n", "count"], rows, args.format))
    return EXIT_OK


def _cmd_catalan(args) -> int:
    if args.max_n < 0:
        raise ValueError("--max-n must be >= 0")
    rows = [[n, numbers.catalan(n)] for n in range(args.max_n + 1)]
    sys.stdout.write(render_table(["n", "catalan"], rows, args.format))
    return EXIT_OK


def _cmd_dyck_count(args) -> int:
    cap, _ = _caps(args)
    count = orbit.count_dyck_permutations(args.n, args.k, cap=cap, threads=args.threads)
    rows = [[args.n, args.k, count]]
    sys.stdout.write(render_table(["n", "k", "count"], rows, args.format))
    return EXIT_OK


def _cmd_census(args) -> int:
    cap, _ = _caps(args)
    if args.by_position:
        census = alcoved.exceedance_position_census(
            args.n, cap=cap, threads=args.threads
        )
        rows = [[alcoved.subset_key(T), count] for T, count in census.items()]
        sys.stdout.write(render_table(["positions", "count"], rows, args.format))
    else:
        census = orbit.equidistribution_census(args.n, cap=cap, threads=args.threads)
        rows = [[j, count] for j, count in sorted(census.items())]
        sys.stdout.write(render_table(["exceedance", "count"], rows, args.format))
    return EXIT_OK


def _cmd_orbit(args) -> int:
    cert = orbit.analyze_orbit(as_permutation(args.word))
    if args.format == "json":
        sys.stdout.write(render_json(cert.to_json_dict()))
        return EXIT_OK
    rows = [
        [start, " ".join(str(v) for v in w), exc]
        for (start, w), exc in zip(cert.shifts, cert.exceedances)
    ]
    sys.stdout.write(f"case: {cert.case_tag}\n")
    sys.stdout.write(render_table(["start", "shift", "exceedance"], rows, args.format))
    return EXIT_OK


def _parse_flip(text: str, n: int) -> frozenset[int]:
    if not text.strip():
        return frozenset()
    try:
        flips = frozenset(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse flip set {text!r}") from exc
    if not flips <= set(range(1, n + 1)):
        raise ValueError(f"flip set {sorted(flips)} not a subset of 1..{n}")
    return flips


def _volume_spec(args) -> alcoved.AlcovedSpec:
    if args.shape == "hypersimplex":
        if args.k is None:
            raise ValueError("--k is required for --shape hypersimplex")
        return alcoved.spec_for_hypersimplex(args.k, args.n)
    if args.shape == "pkn":
        if args.k is None:
            raise ValueError("--k is required for --shape pkn")
        return alcoved.spec_for_Pkn(args.k, args.n)
    return alcoved.spec_for_P2n_flipped(args.n, _parse_flip(args.flip, args.n))


def _cmd_volume(args) -> int:
    _, ambient_cap = _caps(args)
    spec = _volume_spec(args)
    record = geometry.ehrhart_volume(spec, cap=ambient_cap)
    if args.format == "json":
        sys.stdout.write(render_json(
            {"spec": spec.to_json_dict(), "ehrhart": record.to_json_dict()}
        ))
        return EXIT_OK
    rows = [[args.shape, record.dimension, record.normalized_volume]]
    sys.stdout.write(render_table(["shape", "dimension", "volume"], rows, args.format))
    return EXIT_OK


def _verify_equidistribution(args, cap: int) -> tuple[bool, dict]:
    census = orbit.equidistribution_census(args.n, cap=cap, threads=args.threads)
    expected = numbers.eulerian_catalan(args.n)
    ok = all(count == expected for count in census.values())
    return ok, {
        "target": "equidistribution",
        "n": args.n,
        "census": {str(j): c for j, c in sorted(census.items())},
        "expected": expected,
    }


def _verify_subdivision(args, ambient_cap: int) -> tuple[bool, dict]:
    report = geometry.verify_subdivision(args.k, args.n, cap=ambient_cap)
    return report.passed, {"target": "subdivision", **report.to_json_dict()}


def _verify_alcoved_vs_dyck(args, cap: int) -> tuple[bool, dict]:
    via_alcoves = alcoved.w_set_count(
        alcoved.spec_for_Pkn(args.k, args.n), cap=cap, threads=args.threads
    )
    via_paths = orbit.count_dyck_permutations(
        args.n, args.k, cap=cap, threads=args.threads
    )
    return via_alcoves == via_paths, {
        "target": "alcoved-vs-dyck",
        "k": args.k,
        "n": args.n,
        "alcoved_count": via_alcoves,
        "dyck_count": via_paths,
    }


def _verify_census_vs_volumes(args, cap: int, ambient_cap: int) -> tuple[bool, dict]:
    census = alcoved.exceedance_position_census(args.n, cap=cap, threads=args.threads)
    entries = {}
    mismatches = []
    for T, count in census.items():
        spec = alcoved.spec_for_P2n_flipped(args.n, T)
        volume = geometry.ehrhart_volume(spec, cap=ambient_cap).normalized_volume
        entries[alcoved.subset_key(T)] = {"census": count, "volume": volume}
        if count != volume:
            mismatches.append(alcoved.subset_key(T))
    return not mismatches, {
        "target": "census-vs-volumes",
        "n": args.n,
        "entries": entries,
        "mismatches": mismatches,
    }


def _cmd_verify(args) -> int:
    cap, ambient_cap = _caps(args)
    if args.target == "equidistribution":
        ok, report = _verify_equidistribution(args, cap)
    elif args.target == "subdivision":
        ok, report = _verify_subdivision(args, ambient_cap)
    elif args.target == "alcoved-vs-dyck":
        ok, report = _verify_alcoved_vs_dyck(args, cap)
    else:
        ok, report = _verify_census_vs_volumes(args, cap, ambient_cap)
    report["status"] = "PASS" if ok else "FAIL"
    if args.format == "json":
        sys.stdout.write(render_json(report))
    else:
        sys.stdout.write(f"{report['status']} {args.target}\n")
        for key in sorted(report):
            if key not in ("status", "target"):
                sys.stdout.write(f"  {key}: {report[key]}\n")
    return EXIT_OK if ok else EXIT_VERIFY_FAILED


_DISPATCH = {
    "eulerian-row": _cmd_eulerian_row,
    "ec": _cmd_ec,
    "fuss": _cmd_fuss,
    "catalan": _cmd_catalan,
    "dyck-count": _cmd_dyck_count,
    "census": _cmd_census,
    "orbit": _cmd_orbit,
    "volume": _cmd_volume,
    "verify": _cmd_verify,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except ScaleCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SCALE_CAP
    except (ValueError, AssertionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_ARGS


if __name__ == "__main__":
    sys.exit(main())
