"""Command line: ``stablerep {decompose,tensor,classify,scan,verify,tables}``.

Exit status is 0 on success or agreement, 1 when two routes disagree or an
internal consistency check fails, and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Sequence

from .cyclotomic import is_prime
from .errors import ConsistencyError, DomainError
from .oracle import decompose_kN, green_transport, schur_apply
from .oracle.kn import basis_module
from .partitions import Partition
from .plethysm import decompose_plethysm, p_small_pairs
from .stable_ring import StableElement, cg_multiply, height_position_tables
from .verify import DEFAULT_ORACLE_BUDGET, SCANS, resolve_scans, run_scan

THETA_MAX_P = 97
ORACLE_MAX_P = 13

EXIT_OK, EXIT_DISAGREE, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _prime(text: str, bound: int) -> int:
    try:
        p = int(text)
    except ValueError as exc:
        raise UsageError(f"p must be an integer, got {text!r}") from exc
    if p < 3 or not is_prime(p):
        raise UsageError(f"p must be an odd prime, got {p}")
    if p > bound:
        raise UsageError(f"p={p} exceeds the bound {bound} for this command")
    return p


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except DomainError as exc:
        raise UsageError(str(exc)) from exc


def _basis(text: str, p: int) -> StableElement:
    try:
        l, m = (int(x) for x in text.split(","))
    except ValueError as exc:
        raise UsageError(f"expected a basis label 'l,m', got {text!r}") from exc
    if not 0 <= l <= p - 2:
        raise UsageError(f"l={l} outside [0, {p - 2}]")
    return StableElement.basis(p, l, m)


def _check_l(l: int, p: int) -> None:
    if not 0 <= l <= p - 2:
        raise UsageError(f"l={l} outside [0, {p - 2}]")


def _emit(args: argparse.Namespace, data: object, text: str) -> None:
    if args.format == "json":
        print(json.dumps(data, indent=2, sort_keys=True))
    else:
        print(text)


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def cmd_decompose(args: argparse.Namespace) -> int:
    bound = ORACLE_MAX_P if args.oracle else THETA_MAX_P
    p = _prime(args.p, bound)
    nu = _partition(args.nu)
    _check_l(args.l, p)
    if nu.size() >= p:
        raise UsageError(f"{nu} is not {p}-small")
    result = decompose_plethysm(nu, args.l, p, args.omega)
    data = result.to_json()
    lines = [
        f"p={p} nu={nu} l={args.l} omega={result.twist_m}",
        f"decomposition: {result.decomposition}",
        f"projective: {_yes(result.projective)}",
        f"stably-irreducible: {_yes(result.stably_irreducible)}",
        f"case: {result.theorem_case}",
    ]
    status = EXIT_OK
    if args.oracle:
        kn = decompose_kN(schur_apply(nu, basis_module(args.l, result.twist_m, p)))
        matrix = green_transport(kn)
        agree = matrix == result.decomposition
        data["oracle"] = {"kn": kn.to_json(), "decomposition": matrix.to_json(), "agree": agree}
        lines.append(f"oracle: {matrix}")
        lines.append("AGREE" if agree else "DISAGREE")
        status = EXIT_OK if agree else EXIT_DISAGREE
    _emit(args, data, "\n".join(lines))
    return status


def cmd_tensor(args: argparse.Namespace) -> int:
    p = _prime(args.p, THETA_MAX_P)
    a, b = _basis(args.a, p), _basis(args.b, p)
    product = cg_multiply(a, b)
    _emit(args, product.to_json(), f"{a} (x) {b} = {product}")
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    p = _prime(args.p, THETA_MAX_P)
    nu = _partition(args.nu)
    _check_l(args.l, p)
    if nu.size() >= p:
        raise UsageError(f"{nu} is not {p}-small")
    result = decompose_plethysm(nu, args.l, p, args.omega)
    data = {"p": p, "nu": nu.to_json(), "l": args.l, "twist_m": result.twist_m, "case": result.theorem_case}
    _emit(args, data, result.theorem_case)
    return EXIT_OK


def cmd_scan(args: argparse.Namespace) -> int:
    p = _prime(args.p, THETA_MAX_P)
    rows = []
    for nu, l in p_small_pairs(p):
        if args.l is not None and l != args.l:
            continue
        rows.append(decompose_plethysm(nu, l, p, args.omega))
    if args.only_irreducible:
        rows = [r for r in rows if r.stably_irreducible]
    text = "\n".join(f"{str(r.nu):<16} l={r.l:<3} {r.theorem_case:<19} {r.decomposition}" for r in rows)
    _emit(args, [r.to_json() for r in rows], text)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    primes = [_prime(x.strip(), THETA_MAX_P) for x in args.p_list.split(",") if x.strip()]
    try:
        scans = resolve_scans(args.theorems.split(","))
    except DomainError as exc:
        raise UsageError(str(exc)) from exc
    if "oracle" in scans:
        for p in primes:
            if p > ORACLE_MAX_P:
                raise UsageError(f"p={p} exceeds the bound {ORACLE_MAX_P} for the oracle scan")
    if args.jobs < 1:
        raise UsageError("--jobs must be at least 1")
    reports = []
    for name in scans:
        start = time.perf_counter()
        report = run_scan(name, primes, args.oracle_budget, args.jobs, args.seed)
        reports.append(report)
        if args.format != "json":
            print(f"{report.line()} ({time.perf_counter() - start:.1f}s)")
            for failure in report.failures:
                print(f"  {failure}")
    if args.format == "json":
        print(json.dumps({"p_list": primes, "scans": [r.to_json() for r in reports]}, indent=2, sort_keys=True))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_DISAGREE


def cmd_tables(args: argparse.Namespace) -> int:
    p = _prime(args.p, THETA_MAX_P)
    tables = height_position_tables(p)
    if args.format == "json":
        print(json.dumps(tables.to_json(), indent=2, sort_keys=True))
    else:
        print(tables.render(), end="")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="stablerep", description="Modular plethysms of the natural SL2(F_p)-module.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp: argparse.ArgumentParser, needs_p: bool = True) -> None:
        if needs_p:
            sp.add_argument("--p", required=True, help="odd prime")
        sp.add_argument("--format", choices=("table", "json"), default="table")

    sp = sub.add_parser("decompose", help="decompose nabla^nu(Omega^m Sym^l E) modulo projectives")
    common(sp)
    sp.add_argument("--nu", required=True, help="partition, e.g. 4,3,1")
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--omega", type=int, default=0, help="Heller twist m")
    sp.add_argument("--oracle", action="store_true", help="also decompose with explicit matrices over F_p")
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("tensor", help="product of two basis elements 'l,m'")
    common(sp)
    sp.add_argument("--a", required=True)
    sp.add_argument("--b", required=True)
    sp.set_defaults(func=cmd_tensor)

    sp = sub.add_parser("classify", help="closed-form verdict for (nu, l, omega)")
    common(sp)
    sp.add_argument("--nu", required=True)
    sp.add_argument("--l", type=int, required=True)
    sp.add_argument("--omega", type=int, default=0)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("scan", help="decompose every p-small nu for one or all l")
    common(sp)
    sp.add_argument("--l", type=int, default=None)
    sp.add_argument("--omega", type=int, default=0)
    sp.add_argument("--only-irreducible", action="store_true")
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("verify", help="run agreement scans; exit 1 on any counterexample")
    common(sp, needs_p=False)
    sp.add_argument("--p-list", default="3,5,7")
    sp.add_argument("--theorems", default=",".join(SCANS), help="scan names or numeric aliases, comma separated")
    sp.add_argument("--oracle-budget", type=int, default=DEFAULT_ORACLE_BUDGET, help="max (l+1)^|nu| for p <= 7")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--seed", type=int, default=0, help="seed for the randomized ring scan")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("tables", help="the two height/position tables")
    common(sp)
    sp.set_defaults(func=cmd_tables)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"stablerep {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError as exc:
        print(f"stablerep {args.command}: internal consistency failure: {exc}", file=sys.stderr)
        return EXIT_DISAGREE


if __name__ == "__main__":
    sys.exit(main())
