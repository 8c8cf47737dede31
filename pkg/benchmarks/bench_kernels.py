"""Compare the compiled and pure-Python kernels on the search workload.

    python benchmarks/bench_kernels.py [--genus 6] [--repeat 3]
"""
from __future__ import annotations

import argparse
import itertools
import time

from semitorsion.kernels import compiled_kernels, python_kernels
from semitorsion.oracle import build_fiber_matrix
from semitorsion.semigroup import enumerate_semigroups
from semitorsion.sideal import enumerate_ideals
from semitorsion.tensor import stable_degree


def fiber_jobs(genus):
    jobs = []
    for S in enumerate_semigroups(genus):
        ideals = [I for I in enumerate_ideals(S) if not I.is_principal]
        for M, N in itertools.combinations_with_replacement(ideals, 2):
            hi = stable_degree(M, N, S.min_gens) + S.multiplicity
            jobs.append((M.mask(hi + 1), N.mask(hi + 1), hi, list(S.min_gens)))
    return jobs


def rank_jobs(genus, limit=3000):
    jobs = []
    for S in enumerate_semigroups(genus):
        ideals = [I for I in enumerate_ideals(S) if not I.is_principal]
        for M, N in itertools.combinations_with_replacement(ideals, 2):
            d = stable_degree(M, N, S.min_gens) // 2
            fm = build_fiber_matrix(M, N, d, S.min_gens)
            if fm.relation_rows:
                jobs.append((fm.dense(), len(fm.relation_rows), len(fm.nodes), 65521))
            if len(jobs) >= limit:
                return jobs
    return jobs


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t0)
    return min(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--genus", type=int, default=6)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    fj = fiber_jobs(args.genus)
    rj = rank_jobs(args.genus)
    backends = [("python", python_kernels)]
    if compiled_kernels is not None:
        backends.append(("cython", compiled_kernels))
    else:
        print("compiled kernels not built; timing the fallback only")

    print(f"{len(fj)} ideal pairs (all degrees), {len(rj)} fiber matrices, genus <= {args.genus}")
    results = {}
    for name, k in backends:
        tf, rf = best_of(lambda: [k.fiber_class_counts(a, b, 0, hi, g) for a, b, hi, g in fj],
                         args.repeat)
        tr, rr = best_of(lambda: [k.rank_mod_p(*job) for job in rj], args.repeat)
        results[name] = (tf, tr, rf, rr)
        print(f"{name:>7}: union-find {tf * 1e3:9.1f} ms   rank mod p {tr * 1e3:9.1f} ms")
    if len(results) == 2:
        py, cy = results["python"], results["cython"]
        assert py[2] == cy[2] and py[3] == cy[3], "backends disagree"
        print(f"speedup: union-find x{py[0] / cy[0]:.1f}, rank x{py[1] / cy[1]:.1f} "
              "(outputs identical)")


if __name__ == "__main__":
    main()
