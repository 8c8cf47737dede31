"""Command-line interface.

Exit status: 0 success, 1 verification or consistency failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from typing import Sequence

from . import kernels, pullback
from .errors import InternalCheckFailure, InvalidInput, SemitorsionError
from .oracle import DEFAULT_MODULUS, torsion_length_oracle
from .search import SearchConfig, run_search
from .semigroup import is_symmetric, make_semigroup, parse_gens
from .sideal import (
    bidual,
    dual,
    end_ring,
    enumerate_ideals,
    is_module_over,
    lemma21_report,
    make_ideal,
)
from .tensor import torsion_profile
from .verify import CRITERIA, run_criterion

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _emit(payload: dict, as_json: bool, human: str) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(human)


def cmd_info(args: argparse.Namespace) -> int:
    S = make_semigroup(parse_gens(args.gens))
    E = end_ring(S)
    payload = {
        "semigroup": list(S.min_gens),
        "multiplicity": S.multiplicity,
        "apery": list(S.apery),
        "frobenius": S.frobenius,
        "gaps": list(S.gaps),
        "genus": S.genus,
        "symmetric": is_symmetric(S),
        "e_ring_gens": list(E.ring_gens),
        "e_extra_elements": list(E.extra_elements),
        "dvr": S.multiplicity == 1,
        "lemma21": None if S.multiplicity == 1 else lemma21_report(S).to_dict(),
    }
    lines = [
        f"semigroup     {S}",
        f"multiplicity  {S.multiplicity}",
        f"apery         {list(S.apery)}",
        f"frobenius     {S.frobenius}",
        f"gaps          {list(S.gaps)}  (genus {S.genus})",
        f"symmetric     {payload['symmetric']}",
        f"E = (m:m)     <{','.join(map(str, E.ring_gens))}>  extra {list(E.extra_elements)}",
    ]
    if S.multiplicity == 1:
        lines.append("maximal ideal is principal: R is a DVR and R = E = integral closure")
    else:
        rep = payload["lemma21"]
        lines.append(f"E/R simple    {rep['simple']}  y = {rep['y']}  "
                     f"E = R + yR: {rep['generator_pair_ok']}")
    _emit(payload, args.json, "\n".join(lines))
    return EXIT_OK


def cmd_ideals(args: argparse.Namespace) -> int:
    S = make_semigroup(parse_gens(args.gens))
    E = end_ring(S)
    rows = []
    for I in enumerate_ideals(S):
        rows.append({
            "gens": list(I.gens),
            "principal": I.is_principal,
            "e_module": is_module_over(I, E),
            "dual": list(dual(I).gens),
            "reflexive": bidual(I) == I,
        })
    human = [f"{len(rows)} ideals over {S}"]
    human += [f"  {r['gens']!s:<16} principal={r['principal']!s:<5} E-module={r['e_module']!s:<5} "
              f"dual={r['dual']} reflexive={r['reflexive']}" for r in rows]
    _emit({"semigroup": list(S.min_gens), "ideals": rows}, args.json, "\n".join(human))
    return EXIT_OK


def cmd_tensor(args: argparse.Namespace) -> int:
    S = make_semigroup(parse_gens(args.gens))
    M, N = make_ideal(S, parse_gens(args.m)), make_ideal(S, parse_gens(args.n))
    base = end_ring(S) if args.base == "e" else None
    prof = torsion_profile(M, N, base)
    payload = {"semigroup": list(S.min_gens), "m_gens": list(M.gens), "n_gens": list(N.gens),
               "base": args.base, "profile": prof.to_dict(),
               "torsion_length": prof.torsion_length}
    status = EXIT_OK
    human = [f"M = {M} (shift {M.shift}), N = {N} (shift {N.shift}) over {S}, "
             f"base {args.base.upper()}"]
    human += [f"  d={d:<4} classes={c} in_MN={p}"
              for d, c, p in prof.rows if args.verbose or c != 1]
    human.append(f"torsion_length {prof.torsion_length}")
    if args.oracle:
        t = torsion_length_oracle(M, N, base, field_modulus=args.modulus)
        payload["oracle_torsion_length"] = t
        payload["oracle_agrees"] = t == prof.torsion_length
        human.append(f"oracle (p={args.modulus}) {t}: "
                     + ("agrees" if t == prof.torsion_length else "DISAGREES"))
        if t != prof.torsion_length:
            status = EXIT_FAIL
    _emit(payload, args.json, "\n".join(human))
    return status


def cmd_search(args: argparse.Namespace) -> int:
    cfg = SearchConfig(
        max_genus=args.max_genus,
        symmetric_only=not args.all_semigroups,
        oracle_check=not args.no_oracle,
        output_path=args.out,
        worker_count=args.jobs,
        max_embedding_dim=args.max_embedding_dim,
        resume=args.resume,
    )
    summary = run_search(cfg)
    if args.out is None:
        for h in summary.hit_list:
            print(h.to_json())
    print(json.dumps(summary.to_dict(), sort_keys=True))
    return EXIT_OK


def cmd_pullback(args: argparse.Namespace) -> int:
    rep = pullback.report()
    human = "\n".join(f"{k:<26} {v}" for k, v in rep.items())
    _emit(rep, args.json, human)
    ok = (rep["len_B"] == 2 * rep["len_A"] and rep["E_is_local"] and rep["deep_guard_agrees"])
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify_paper(args: argparse.Namespace) -> int:
    numbers = args.only or sorted(CRITERIA)
    results = [run_criterion(n) for n in numbers]
    if args.json:
        print(json.dumps({
            "backend": kernels.BACKEND,
            "criteria": [{"number": r.number, "title": r.title, "passed": r.passed,
                          "detail": r.detail, "seconds": round(r.seconds, 3)} for r in results],
            "passed": all(r.passed for r in results),
        }, sort_keys=True))
    else:
        print(f"kernel backend: {kernels.BACKEND}")
        for r in results:
            print(r.line())
        print("ALL PASS" if all(r.passed for r in results) else "FAILURES")
    return EXIT_OK if all(r.passed for r in results) else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="semitorsion", description=__doc__.splitlines()[0])
    p.add_argument("-v", "--verbose", action="store_true", help="debug logging; all profile rows")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name: str, func, help: str) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--json", action="store_true", help="machine-readable output")
        sp.set_defaults(func=func)
        return sp

    sp = add("info", cmd_info, "semigroup facts and the ring E = (m:m)")
    sp.add_argument("--gens", required=True, help="generators, e.g. 4,5,6")

    sp = add("ideals", cmd_ideals, "list all monomial ideals up to shift")
    sp.add_argument("--gens", required=True)

    sp = add("tensor", cmd_tensor, "torsion profile of M ⊗ N")
    sp.add_argument("--gens", required=True)
    sp.add_argument("--m", required=True, help="generators of M as exponents, e.g. 4,5")
    sp.add_argument("--n", required=True)
    sp.add_argument("--base", choices=("r", "e"), default="r")
    sp.add_argument("--oracle", action="store_true", help="cross-check with matrix ranks")
    sp.add_argument("--modulus", type=int, default=DEFAULT_MODULUS,
                    help="oracle field: odd prime, or 0 for the rationals")

    sp = add("search", cmd_search, "exhaustive search for torsion-free products")
    sp.add_argument("--max-genus", type=int, required=True)
    grp = sp.add_mutually_exclusive_group()
    grp.add_argument("--symmetric-only", action="store_true", default=True)
    grp.add_argument("--all-semigroups", action="store_true")
    sp.add_argument("--max-embedding-dim", type=int, default=None)
    sp.add_argument("--no-oracle", action="store_true")
    sp.add_argument("--out", default=None, help="JSONL output file")
    sp.add_argument("--jobs", type=int, default=1)
    sp.add_argument("--resume", action="store_true")

    add("pullback", cmd_pullback, "the conductor-square example")

    sp = add("verify-paper", cmd_verify_paper, "run every acceptance check")
    sp.add_argument("--only", type=int, nargs="+", choices=sorted(CRITERIA))
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.command == "search" and args.resume and not args.out:
        parser.error("--resume requires --out")
    try:
        return args.func(args)
    except InvalidInput as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InternalCheckFailure, SemitorsionError) as exc:
        print(f"failure: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
