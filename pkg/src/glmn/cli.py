"""Command-line front end.

Exit codes: 0 success / all checks pass, 1 a verification failed,
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from . import verify as V
from .algebra import Envelope, formal_matrix
from .casimir import berezinian, casimir, ncsf_matrix
from .harish_chandra import hc_image, hc_series
from .ncsf import NcsfKind, ncsf_coefficient, ncsf_paths

FAMILIES = [k.value for k in NcsfKind]
VERIFY_CHECKS = list(V.CHECKS) + ["all"]


def _positive(name, minimum):
    def conv(s):
        try:
            v = int(s)
        except ValueError:
            raise argparse.ArgumentTypeError(f"{name} must be an integer") from None
        if v < minimum:
            raise argparse.ArgumentTypeError(f"{name} must be >= {minimum}")
        return v

    return conv


def _dims_args(p, required=True):
    p.add_argument("--m", type=_positive("m", 1), required=required, help="even block size")
    p.add_argument("--n", type=_positive("n", 1), required=required, help="odd block size")


def _format_arg(p):
    p.add_argument("--format", choices=["text", "json"], default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="glmn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("berezinian", help="quantum Berezinian B(t) truncated at t^order")
    _dims_args(p)
    p.add_argument("--order", type=_positive("order", 0), default=4)
    p.add_argument("--method", choices=["direct", "factored"], default="direct")
    _format_arg(p)

    p = sub.add_parser("casimir", help="a Casimir element Lambda_k, S_k, Psi_k or Phi_k")
    _dims_args(p)
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--k", type=_positive("k", 1), required=True)
    _format_arg(p)

    p = sub.add_parser("ncsf", help="noncommutative symmetric function of a matrix at an index")
    p.add_argument("--matrix", choices=["ehat", "formal"], default="ehat")
    p.add_argument("--m", type=_positive("m", 1))
    p.add_argument("--n", type=_positive("n", 1))
    p.add_argument("--size", type=_positive("size", 1), help="size of the formal matrix")
    p.add_argument("--i", type=_positive("i", 1), required=True)
    p.add_argument("--kind", choices=FAMILIES, required=True)
    p.add_argument("--k", type=_positive("k", 1), required=True)
    p.add_argument("--method", choices=["series", "paths"], default="series")
    _format_arg(p)

    p = sub.add_parser("hc", help="Harish-Chandra image of a Casimir element or of B(t)")
    _dims_args(p)
    p.add_argument("--of", help="'<family>:<k>' or 'berezinian'")
    p.add_argument("--family", choices=FAMILIES)
    p.add_argument("--k", type=_positive("k", 1))
    p.add_argument("--order", type=_positive("order", 0), default=4)
    p.add_argument("--shifted", action="store_true", help="express in x, y instead of lambda, mu")
    _format_arg(p)

    p = sub.add_parser("verify", help="run theorem checks over a grid of (m, n)")
    p.add_argument("check", choices=VERIFY_CHECKS)
    _dims_args(p, required=False)
    p.add_argument("--order", type=_positive("order", 0), default=4)
    p.add_argument("--k", type=_positive("k", 1), help="highest degree for psi-eq-phi")
    p.add_argument("--trials", type=_positive("trials", 1), default=100)
    p.add_argument("--threads", type=_positive("threads", 1), default=1)
    _format_arg(p)
    return parser


def _emit(obj, fmt):
    if fmt == "json":
        print(json.dumps(obj.to_json(), sort_keys=True))
    else:
        print(obj)


def _cmd_berezinian(args):
    _emit(berezinian(Envelope(args.m, args.n), args.order, args.method), args.format)
    return 0


def _cmd_casimir(args):
    _emit(casimir(Envelope(args.m, args.n), args.family, args.k).value, args.format)
    return 0


def _cmd_ncsf(args, parser):
    if args.matrix == "ehat":
        if args.m is None or args.n is None:
            parser.error("--matrix ehat needs --m and --n")
        U = Envelope(args.m, args.n)
        if args.i > U.dims.size:
            parser.error(f"--i must be at most m + n = {U.dims.size}")
        A = ncsf_matrix(U, args.i)
    else:
        if args.size is None:
            parser.error("--matrix formal needs --size")
        if args.i > args.size:
            parser.error("--i must be at most --size")
        A = formal_matrix(args.size)
    fn = ncsf_coefficient if args.method == "series" else ncsf_paths
    _emit(fn(A, args.i, args.kind, args.k), args.format)
    return 0


def _cmd_hc(args, parser):
    U = Envelope(args.m, args.n)
    family, k = args.family, args.k
    if args.of:
        if args.of == "berezinian":
            _emit(hc_series(U, berezinian(U, args.order), args.shifted), args.format)
            return 0
        family, _, kk = args.of.partition(":")
        if family not in FAMILIES or not kk.isdigit() or int(kk) < 1:
            parser.error("--of expects '<family>:<k>' with family in lambda, s, psi, phi, or 'berezinian'")
        k = int(kk)
    if family is None or k is None:
        parser.error("hc needs --family and --k (or --of)")
    _emit(hc_image(U, casimir(U, family, k).value, args.shifted), args.format)
    return 0


def _grid(args, parser):
    if (args.m is None) != (args.n is None):
        parser.error("give both --m and --n, or neither for the default grid")
    if args.m is None:
        return list(V.DEFAULT_GRID)
    return [(args.m, args.n)]


def run_verify(check: str, grid, order: int, k: int | None = None, trials: int = 100, threads: int = 1):
    """All CheckResults for a verify subcommand, in fixed report order."""
    names = list(V.CHECKS) if check == "all" else [check]
    cells = []
    for name in names:
        K = k if (name == "psi-eq-phi" and k is not None) else order
        cells += [(V.CHECKS[name], (m, n, K)) for m, n in grid]
    if check == "all":
        cells.append((V.check_formal_series_vs_paths, (order,)))
        for m, n in grid:
            cells.append((V.check_example_psi, (m, n)))
            cells.append((V.check_generating_relations, (m, n, order)))
            cells.append((V.check_kernel_properties, (m, n, trials)))
    with ThreadPoolExecutor(max_workers=threads) as pool:
        chunks = list(pool.map(lambda c: c[0](*c[1]), cells))
    results = [r for chunk in chunks for r in chunk]
    if check == "all":
        results.append(V.check_idempotence(results))
    return results


def _cmd_verify(args, parser):
    grid = _grid(args, parser)
    results = run_verify(args.check, grid, args.order, args.k, args.trials, args.threads)
    ok = all(r.passed for r in results)
    if args.format == "json":
        print(json.dumps(
            [{"check": r.check, "cell": r.cell, "passed": r.passed, "detail": r.detail} for r in results],
            sort_keys=True,
        ))
    else:
        for r in results:
            print(r.line())
        print(f"{sum(r.passed for r in results)}/{len(results)} checks passed")
    if not ok:
        first = next(r for r in results if not r.passed)
        print(f"first counterexample: {first.check} {first.cell}: {first.detail}", file=sys.stderr)
    return 0 if ok else 1


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "berezinian":
        return _cmd_berezinian(args)
    if args.command == "casimir":
        return _cmd_casimir(args)
    if args.command == "ncsf":
        return _cmd_ncsf(args, parser)
    if args.command == "hc":
        return _cmd_hc(args, parser)
    return _cmd_verify(args, parser)


if __name__ == "__main__":
    sys.exit(main())
