"""Subcommand-style command line front end.

Reports are JSON objects with sorted keys.  Without ``--json`` a short
``key: value`` listing is printed instead.  Exit codes: 0 success, 1 domain
error, 2 resource or budget error, 3 not found.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Callable, Sequence

import numpy as np

from . import alinear, ftops, numfield, statecheck, textio
from .config import Budgets
from .errors import DomainError, NotFoundError, ResourceError
from .search import search_selfdual
from .sympcode import (SympCode, dual, is_self_orthogonal, macwilliams, offending_pair,
                       parameters, singleton_check, weight_distribution)

EXIT_OK, EXIT_DOMAIN, EXIT_RESOURCE, EXIT_NOT_FOUND = 0, 1, 2, 3
_DEFAULTS = Budgets()


def _params_report(C: SympCode, budget: int) -> dict:
    params = parameters(C, budget)
    status = singleton_check(params)
    return {**params.as_dict(), "dim": C.dim, "self_orthogonal": True, "pure": params.is_pure,
            "singleton": status, "mds": status == "mds"}


def _write_code(args, text: str, report: dict) -> None:
    if args.out:
        textio.write(args.out, text)
        report["out"] = args.out


def cmd_qrcode(args) -> dict:
    ring = numfield.QuadRing(args.pprime)
    M = numfield.qr_module(ring, args.max_pprime)
    C = numfield.reduce_mod_p(M, args.p)
    report = {"command": "qrcode", "pprime": args.pprime, "p": args.p, "budget": args.budget,
              "kind": numfield.reduction_algebra(ring, args.p).kind,
              "nu": [str(c) for c in numfield.nu_poly(ring)],
              "module_generators": [[str(x) for x in row] for row in M.rows]}
    report.update(_params_report(C, args.budget))
    _write_code(args, textio.format_symplectic(C), report)
    return report


def cmd_analyze(args) -> dict:
    C = textio.read(args.code, textio.parse_symplectic)
    if not is_self_orthogonal(C):
        raise DomainError(f"not self-orthogonal: generator pair {offending_pair(C)}")
    report = {"command": "analyze", "p": C.p, "budget": args.budget}
    report.update(_params_report(C, args.budget))
    D = dual(C)
    if C.size <= args.budget:
        A = weight_distribution(C, args.budget)
        report["weight_distribution"] = list(A.counts)
        if D.size <= args.budget:
            B = weight_distribution(D, args.budget)
            report["dual_weight_distribution"] = list(B.counts)
            report["macwilliams_consistent"] = macwilliams(A, C.size, C.p, C.n) == B
    report["canonical"] = textio.format_symplectic(C).splitlines()
    return report


def cmd_badprimes(args) -> dict:
    ring = numfield.QuadRing(args.pprime)
    M = numfield.qr_module(ring, args.max_pprime)
    return {"command": "badprimes", "pprime": args.pprime, "d": args.d,
            "bad_primes": sorted(numfield.bad_primes(M, args.d))}


def cmd_ftcheck(args) -> dict:
    T = textio.read(args.matrix, textio.parse_ftmat)
    C = textio.read(args.code, textio.parse_symplectic)
    A = T.algebra
    return {"command": "ftcheck", "p": A.p, "t": A.t, "d": A.d, "kind": A.kind, "m": T.m,
            "unitary": ftops.is_ft_unitary(T), "monomial": ftops.is_monomial(T),
            "symplectic_embedding": ftops.is_symplectic_matrix(ftops.embed_symplectic(T), A.p),
            "preserves": ftops.preserves_code_power(T, C)}


def cmd_search_selfdual(args) -> dict:
    C, params, trial = search_selfdual(args.n, args.d, args.p, trials=args.trials,
                                       seed=args.seed, attempts=args.attempts)
    # re-verify through a canonical text round trip, as an analyze run would see it
    text = textio.format_symplectic(C)
    C2 = textio.parse_symplectic(text)
    report = {"command": "search-selfdual", "seed": args.seed, "trials": args.trials,
              "trial_index": trial, "verified": C2 == C and parameters(C2).d >= args.d}
    report.update(_params_report(C2, args.budget))
    report["canonical"] = text.splitlines()
    _write_code(args, text, report)
    return report


def cmd_css(args) -> dict:
    C1 = textio.read(args.c1, textio.parse_classical)
    C2 = textio.read(args.c2, textio.parse_classical)
    C = alinear.css_build(C1, C2)
    report = {"command": "css", "p": C.p, "budget": args.budget,
              "formula_d": alinear.css_distance(C1, C2, args.budget)}
    report.update(_params_report(C, args.budget))
    _write_code(args, textio.format_symplectic(C), report)
    return report


def cmd_puncture(args) -> dict:
    C = textio.read(args.code, textio.parse_symplectic)
    P = alinear.puncture_code(C)
    report = {"command": "puncture", "p": C.p, "n": C.n, "puncture_dim": P.dim,
              "puncture_code": textio.format_classical(P).splitlines()}
    _write_code(args, textio.format_classical(P), report)
    if args.word is not None:
        S = alinear.shorten(C, [int(x) for x in args.word.replace(",", " ").split()])
        report["shortened"] = {**_params_report(S, args.budget),
                               "dual_distance": alinear.shortened_dual_distance(S, args.budget),
                               "canonical": textio.format_symplectic(S).splitlines()}
        report["original_dual_distance"] = alinear.shortened_dual_distance(C, args.budget)
        if args.short_out:
            textio.write(args.short_out, textio.format_symplectic(S))
    return report


def cmd_statecheck(args) -> dict:
    C = textio.read(args.code, textio.parse_symplectic)
    P = statecheck.projector(C, args.cap)
    d = args.d if args.d is not None else parameters(C, args.budget).d
    res = statecheck.kl_check(P, d, C.p, C.n, cap=args.cap)
    herm = float(np.abs(P - P.conj().T).max())
    idem = float(np.abs(P @ P - P).max())
    return {"command": "statecheck", "p": C.p, "n": C.n, "d": d, "cap": args.cap,
            "trace": float(np.trace(P).real), "expected_rank": C.p ** (C.n - C.dim),
            "hermitian_residual": herm, "idempotent_residual": idem,
            "kl_passed": res.passed, "kl_checked": res.checked,
            "kl_max_residual": res.max_residual,
            "witness": None if res.witness is None else [list(x) for x in res.witness.pairs]}


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="nbcodes", description="Nonbinary stabilizer code toolkit.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--budget", type=int, default=_DEFAULTS.enumeration,
                        help="maximum codewords per exhaustive enumeration")
    common.add_argument("--cap", type=int, default=_DEFAULTS.dim_cap,
                        help="maximum Hilbert space dimension for dense operators")
    common.add_argument("--seed", type=int, default=_DEFAULTS.seed)
    common.add_argument("--json", action="store_true", help="print the report as JSON")
    common.add_argument("--out", help="write the produced code to this file")
    common.add_argument("--timings", action="store_true",
                        help="add wall-clock seconds to the report (breaks byte-identity)")
    common.add_argument("--max-pprime", type=int, default=_DEFAULTS.max_pprime)
    sub = ap.add_subparsers(dest="command", required=True)

    def add(name: str, fn: Callable, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, parents=[common], help=help)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("qrcode", cmd_qrcode, "reduce the quadratic-residue module mod p")
    sp.add_argument("--pprime", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp = add("analyze", cmd_analyze, "parameters and enumerators of a code file")
    sp.add_argument("code")
    sp = add("badprimes", cmd_badprimes, "primes where the reduced distance drops below d")
    sp.add_argument("--pprime", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp = add("ftcheck", cmd_ftcheck, "check a matrix over A against a code")
    sp.add_argument("matrix")
    sp.add_argument("code")
    sp = add("search-selfdual", cmd_search_selfdual, "random search for a self-dual code")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--trials", type=int, default=_DEFAULTS.trials)
    sp.add_argument("--attempts", type=int, default=_DEFAULTS.attempts)
    sp = add("css", cmd_css, "build a code from two classical code files")
    sp.add_argument("c1")
    sp.add_argument("c2")
    sp = add("puncture", cmd_puncture, "puncture code P(C) and optional shortening")
    sp.add_argument("code")
    sp.add_argument("--word", help="puncture word c, space or comma separated")
    sp.add_argument("--short-out", help="write the shortened code to this file")
    sp = add("statecheck", cmd_statecheck, "dense projector and Knill-Laflamme check")
    sp.add_argument("code")
    sp.add_argument("--d", type=int, help="distance to check (default: computed)")
    return ap


def _render(report: dict, as_json: bool) -> str:
    if as_json:
        return json.dumps(report, sort_keys=True, indent=2)
    lines = []
    for k in sorted(report):
        v = report[k]
        if isinstance(v, list) and v and isinstance(v[0], str) and k in ("canonical", "puncture_code"):
            lines.append(f"{k}:")
            lines += [f"  {x}" for x in v]
        else:
            lines.append(f"{k}: {json.dumps(v, sort_keys=True)}")
    return "\n".join(lines)


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    start = time.perf_counter()
    try:
        report = args.fn(args)
    except NotFoundError as e:
        print(f"not found: {e}", file=sys.stderr)
        return EXIT_NOT_FOUND
    except ResourceError as e:
        print(f"resource error: {e}", file=sys.stderr)
        return EXIT_RESOURCE
    except (DomainError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    if args.timings:
        report["seconds"] = round(time.perf_counter() - start, 3)
    print(_render(report, args.json))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
