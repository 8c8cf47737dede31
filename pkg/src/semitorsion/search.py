"""Exhaustive search for torsion-free tensor products of non-free monomial ideals.

Work is split by semigroup.  Results are merged in enumeration order so the
JSONL output is byte-identical for any worker count.  A progress side file
(``<output>.progress``) lets an interrupted sweep resume.
"""
from __future__ import annotations

import hashlib
import json
import logging
import os
import time
from dataclasses import asdict, dataclass, field
from multiprocessing import get_context
from typing import Iterable, Iterator

from .errors import InvalidInput, OracleDisagreement, OutputUnwritable, ResumeMismatch
from .oracle import torsion_length_oracle
from .semigroup import DEFAULT_GENUS_CAP, Semigroup, enumerate_semigroups, make_semigroup
from .sideal import ERing, SIdeal, end_ring, enumerate_ideals, is_module_over, make_ideal
from .tensor import lemma22_compare, torsion_profile

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SearchConfig:
    max_genus: int
    symmetric_only: bool = True
    oracle_check: bool = True
    output_path: str | None = None
    worker_count: int = 1
    max_embedding_dim: int | None = None
    resume: bool = False

    def validate(self) -> None:
        if self.max_genus < 0 or self.max_genus > DEFAULT_GENUS_CAP:
            raise InvalidInput(f"max_genus must be in [0, {DEFAULT_GENUS_CAP}]")
        if self.worker_count < 1:
            raise InvalidInput("worker_count must be >= 1")
        if self.max_embedding_dim is not None and self.max_embedding_dim < 1:
            raise InvalidInput("max_embedding_dim must be >= 1")

    def config_hash(self) -> str:
        key = {
            "max_genus": self.max_genus,
            "symmetric_only": self.symmetric_only,
            "oracle_check": self.oracle_check,
            "max_embedding_dim": self.max_embedding_dim,
        }
        return hashlib.sha256(json.dumps(key, sort_keys=True).encode()).hexdigest()[:16]

    def semigroups(self) -> Iterator[Semigroup]:
        for S in enumerate_semigroups(self.max_genus, self.symmetric_only):
            if self.max_embedding_dim is None or S.embedding_dimension <= self.max_embedding_dim:
                yield S


@dataclass(frozen=True)
class SearchHit:
    semigroup: tuple[int, ...]
    frobenius: int
    m_gens: tuple[int, ...]
    n_gens: tuple[int, ...]
    torsion_length: int
    oracle_confirmed: bool = False
    e_ring_gens: tuple[int, ...] = ()
    e_extra_elements: tuple[int, ...] = ()
    lemma22_equal: bool | None = None
    theorem_consistent: bool = False

    def to_dict(self) -> dict:
        return {k: list(v) if isinstance(v, tuple) else v for k, v in asdict(self).items()}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: dict) -> SearchHit:
        return cls(**{k: tuple(v) if isinstance(v, list) else v for k, v in data.items()})


@dataclass
class SearchSummary:
    semigroups: int = 0
    pairs: int = 0
    hits: int = 0
    skipped_semigroups: int = 0
    runtime_s: float = 0.0
    config_hash: str = ""
    hit_list: list[SearchHit] = field(default_factory=list, repr=False)

    def to_dict(self) -> dict:
        d = asdict(self)
        d.pop("hit_list")
        return d


def enumerate_pairs(S: Semigroup) -> Iterator[tuple[SIdeal, SIdeal]]:
    """Unordered pairs (M <= N) of non-principal normalized ideals, M = N allowed."""
    ideals = [I for I in enumerate_ideals(S) if not I.is_principal]
    for i, M in enumerate(ideals):
        for N in ideals[i:]:
            yield M, N


def e_ring_is_local_monomial(E: ERing) -> bool:
    """True when E is k[[T]] for a numerical semigroup T: local, residue field k."""
    T = E.semigroup
    bound = E.underlying.conductor + T.multiplicity
    return E.underlying.shift == 0 and all((z in T) == (z in E) for z in range(-1, bound + 1))


def verify_hit(hit: SearchHit, oracle: bool = True) -> SearchHit:
    """Fill the confirmation fields of a candidate found by the union-find engine."""
    if hit.torsion_length != 0:
        raise OracleDisagreement(f"candidate reports torsion {hit.torsion_length}, not a hit")
    S = make_semigroup(hit.semigroup)
    M, N = make_ideal(S, hit.m_gens), make_ideal(S, hit.n_gens)
    confirmed = False
    if oracle:
        t = torsion_length_oracle(M, N)
        if t != 0:
            raise OracleDisagreement(
                f"{S} {M} {N}: engine says torsion-free, oracle says length {t}"
            )
        confirmed = True
    E = end_ring(S)
    lemma22 = None
    if is_module_over(M, E) and is_module_over(N, E):
        lemma22 = lemma22_compare(M, N, E).equal_dims
    consistent = e_ring_is_local_monomial(E)
    return SearchHit(
        semigroup=tuple(S.min_gens),
        frobenius=S.frobenius,
        m_gens=M.gens,
        n_gens=N.gens,
        torsion_length=0,
        oracle_confirmed=confirmed,
        e_ring_gens=E.ring_gens,
        e_extra_elements=E.extra_elements,
        lemma22_equal=lemma22,
        theorem_consistent=bool(consistent),
    )


def search_semigroup(S: Semigroup, oracle_check: bool = True) -> tuple[int, list[SearchHit]]:
    """Scan every non-free pair over one semigroup; returns (pair count, hits)."""
    npairs = 0
    hits = []
    for M, N in enumerate_pairs(S):
        npairs += 1
        if torsion_profile(M, N).torsion_length == 0:
            cand = SearchHit(tuple(S.min_gens), S.frobenius, M.gens, N.gens, 0)
            hits.append(verify_hit(cand, oracle=oracle_check))
    return npairs, hits


def _job(args: tuple[tuple[int, ...], bool]) -> tuple[tuple[int, ...], int, list[SearchHit]]:
    gens, oracle_check = args
    npairs, hits = search_semigroup(make_semigroup(gens), oracle_check)
    return gens, npairs, hits


def search_semigroups(
    semigroups: Iterable[Semigroup], oracle_check: bool = True, workers: int = 1
) -> Iterator[tuple[tuple[int, ...], int, list[SearchHit]]]:
    """Yield (generators, pair count, hits) per semigroup, in input order."""
    jobs = [(tuple(S.min_gens), oracle_check) for S in semigroups]
    if workers == 1 or len(jobs) <= 1:
        yield from map(_job, jobs)
        return
    with get_context("spawn").Pool(workers) as pool:
        yield from pool.imap(_job, jobs)


def _progress_path(output_path: str) -> str:
    return output_path + ".progress"


def _load_resume(cfg: SearchConfig) -> set[tuple[int, ...]]:
    path = _progress_path(cfg.output_path)
    if not os.path.exists(path):
        return set()
    done: set[tuple[int, ...]] = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if not line.strip():
                continue
            rec = json.loads(line)
            if rec["config_hash"] != cfg.config_hash():
                raise ResumeMismatch(
                    f"{path} was written by config {rec['config_hash']}, not {cfg.config_hash()}"
                )
            done.add(tuple(rec["semigroup"]))
    # drop hits of a semigroup that was interrupted mid-write
    if os.path.exists(cfg.output_path):
        with open(cfg.output_path, encoding="utf-8") as fh:
            keep = [ln for ln in fh if ln.strip() and tuple(json.loads(ln)["semigroup"]) in done]
        with open(cfg.output_path, "w", encoding="utf-8") as fh:
            fh.writelines(keep)
    return done


def run_search(cfg: SearchConfig) -> SearchSummary:
    """Run the sweep described by ``cfg``; hits go to ``cfg.output_path`` as JSON Lines."""
    cfg.validate()
    start = time.perf_counter()
    summary = SearchSummary(config_hash=cfg.config_hash())
    done: set[tuple[int, ...]] = set()
    out = prog = None
    if cfg.output_path:
        try:
            if cfg.resume:
                done = _load_resume(cfg)
            mode = "a" if cfg.resume else "w"
            out = open(cfg.output_path, mode, encoding="utf-8")
            prog = open(_progress_path(cfg.output_path), mode, encoding="utf-8")
        except OSError as exc:
            raise OutputUnwritable(f"cannot write {cfg.output_path}: {exc}") from exc
    todo = []
    for S in cfg.semigroups():
        if tuple(S.min_gens) in done:
            summary.skipped_semigroups += 1
        else:
            todo.append(S)
    try:
        for gens, npairs, hits in search_semigroups(todo, cfg.oracle_check, cfg.worker_count):
            summary.semigroups += 1
            summary.pairs += npairs
            summary.hits += len(hits)
            summary.hit_list.extend(hits)
            if out is not None:
                out.writelines(h.to_json() + "\n" for h in hits)
                out.flush()
                prog.write(json.dumps(
                    {"config_hash": summary.config_hash, "pair_index": npairs,
                     "semigroup": list(gens)}, sort_keys=True) + "\n")
                prog.flush()
            log.debug("%s: %d pairs, %d hits", gens, npairs, len(hits))
    finally:
        if out is not None:
            out.close()
            prog.close()
    summary.runtime_s = round(time.perf_counter() - start, 3)
    return summary
