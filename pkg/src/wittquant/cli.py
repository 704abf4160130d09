"""Command-line front end: deformed-structure queries and verification runs.

Verbs:
  delta / antipode            the modular closed forms on a basis symbol
  char0-delta / char0-antipode  the char-0 closed forms from r-matrix data
  verify                      run verification suites, optional JSON report
  dims                        dimension anchors for a (p, n) configuration

Exit codes: 0 success / all checks pass, 1 check failure, 2 usage error.
Identical invocations print byte-identical stdout (fixed seeds, canonical
element ordering); wall-clock timing appears only in the JSON report file.
"""
from __future__ import annotations

import argparse
import json
import sys

from .grammar import format_element
from .liealg import RMatrixData
from .twist import char0_general, modular
from .verify import Char0Config, ModularConfig, run_suites


class UsageError(ValueError):
    pass


def _csv_ints(text: str):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"expected a comma-separated integer list, got {text!r}") from None


def _eta_from_directions(text: str, n: int):
    dirs = _csv_ints(text)
    if not dirs:
        raise UsageError("eta must select at least one direction")
    eta = [0] * n
    for k in dirs:
        if not 1 <= k <= n:
            raise UsageError(f"twist direction {k} out of range 1..{n}")
        eta[k - 1] = 1
    return tuple(eta)


def _default_char0(n: int) -> Char0Config:
    d0 = tuple(1 if j == 0 else 0 for j in range(n))
    d0p = tuple(1 if j == min(1, n - 1) else 0 for j in range(n))
    gamma = tuple(1 if j == 0 else 0 for j in range(n))
    return Char0Config(d0=d0, d0p=d0p, gamma=gamma)


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="wittquant", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="verb", required=True)

    def modular_flags(p):
        p.add_argument("--p", type=int, required=True, help="odd prime >= 3")
        p.add_argument("--n", type=int, required=True, help="number of variables")
        p.add_argument("--eta", default="1", help="comma list of twisted directions, e.g. 1,2")
        p.add_argument("--q", type=int, default=0, help="parameter of t^p = q t")

    for verb in ("delta", "antipode"):
        p = sub.add_parser(verb, help=f"print the deformed {verb} of x^(alpha)D_i")
        modular_flags(p)
        p.add_argument("--alpha", required=True, help="comma list exponent, e.g. 1,0")
        p.add_argument("--i", type=int, required=True, help="derivation index (1-based)")

    for verb in ("char0-delta", "char0-antipode"):
        p = sub.add_parser(verb, help=f"print the char-0 deformed {verb.split('-')[1]} of x^alpha d_i")
        p.add_argument("--d0", required=True, help="comma list: first r-matrix derivation")
        p.add_argument("--d0p", required=True, help="comma list: second r-matrix derivation")
        p.add_argument("--gamma", required=True, help="comma list: r-matrix exponent")
        p.add_argument("--alpha", required=True, help="comma list exponent of the argument")
        p.add_argument("--i", type=int, required=True, help="derivation index (1-based)")
        p.add_argument("--trunc", type=int, default=5, help="series truncation order")

    p = sub.add_parser("verify", help="run verification suites")
    modular_flags(p)
    p.add_argument("--suite", default="all", help="'all' or comma list: factorial,commutation,twist,hopf,reduction,restricted,dims")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trunc", type=int, default=4, help="char-0 series truncation order")
    p.add_argument("--json-path", default=None, help="write the JSON report here")

    p = sub.add_parser("dims", help="print the dimension anchors")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    return ap


def run_command(args: argparse.Namespace) -> int:
    if args.verb in ("delta", "antipode"):
        eta = _eta_from_directions(args.eta, args.n)
        hopf = modular(args.p, args.n, eta, args.q)
        alpha = _csv_ints(args.alpha)
        bd = hopf.uea.alg.basis_symbol(alpha, args.i)
        out = hopf.delta_basis(bd) if args.verb == "delta" else hopf.antipode_basis(bd)
        print(format_element(out))
        return 0

    if args.verb in ("char0-delta", "char0-antipode"):
        rm = RMatrixData(_csv_ints(args.d0), _csv_ints(args.d0p), _csv_ints(args.gamma))
        hopf = char0_general(rm, cap=args.trunc)
        alpha = _csv_ints(args.alpha)
        bd = hopf.uea.alg.basis_symbol(alpha, args.i)
        out = hopf.delta_basis(bd) if args.verb == "char0-delta" else hopf.antipode_basis(bd)
        print(format_element(out))
        return 0

    if args.verb == "dims":
        p, n = args.p, args.n
        if p < 3:
            raise UsageError("p must be an odd prime >= 3")
        dim_u = p ** (n * p**n)
        dim_t = p ** (1 + n * p**n)
        status = "enumerable" if dim_u <= 5000 else "structural (enumeration skipped)"
        print(f"dim u(W({n};1)) = {p}^({n}*{p}^{n}) = {dim_u} [{status}]")
        print(f"dim over K[t]_{p}^(q) = {p}^(1+{n}*{p}^{n}) = {dim_t}")
        return 0

    if args.verb == "verify":
        eta = _eta_from_directions(args.eta, args.n)
        mcfg = ModularConfig(args.p, args.n, eta, args.q, seed=args.seed)
        ccfg = _default_char0(args.n)
        ccfg = Char0Config(ccfg.d0, ccfg.d0p, ccfg.gamma, cap=args.trunc, seed=args.seed)
        reports = run_suites(args.suite, modular_cfg=mcfg, char0_cfg=ccfg)
        failed = 0
        for rep in reports:
            cfg_bits = " ".join(
                f"{k}={v}" for k, v in sorted(rep.config.items()) if v is not None
            )
            print(f"[{rep.suite}] {cfg_bits}")
            for c in sorted(rep.checks, key=lambda c: c.name):
                line = f"  {c.name}: {c.status}"
                if c.counterexample and c.status == "fail":
                    line += f"  counterexample: {c.counterexample}"
                print(line)
                failed += c.status == "fail"
        print(f"RESULT: {'pass' if not failed else f'fail ({failed} checks)'}")
        if args.json_path:
            payload = [rep.to_json_dict() for rep in reports]
            with open(args.json_path, "w") as fh:
                json.dump(payload, fh, indent=2)
                fh.write("\n")
        return 0 if not failed else 1

    raise UsageError(f"unknown verb {args.verb!r}")


def main(argv=None) -> int:
    ap = _build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as ex:
        return int(ex.code or 0)
    try:
        return run_command(args)
    except (UsageError, ValueError) as ex:
        print(f"error: {ex}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
