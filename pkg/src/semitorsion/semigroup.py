"""Numerical semigroups: construction, Apéry sets, symmetry, enumeration by genus.

A numerical semigroup S stands for the one-dimensional local domain
k[[t^s : s in S]].  Nothing here depends on the base field k, so every
result computed from a :class:`Semigroup` holds in all characteristics.
"""
from __future__ import annotations

import heapq
import json
from dataclasses import dataclass, field
from functools import reduce
from math import gcd
from typing import Iterable, Iterator

from .errors import EmptyGenerators, GenusCapExceeded, InvalidInput, NotCoprime

DEFAULT_GENUS_CAP = 12


def _apery(gens: Iterable[int], m: int) -> tuple[int, ...]:
    # Dijkstra on the residues mod m; edge r -> r+g of weight g.
    gens = sorted(set(gens))
    dist: list[float] = [float("inf")] * m
    dist[0] = 0
    heap = [(0, 0)]
    while heap:
        w, r = heapq.heappop(heap)
        if w > dist[r]:
            continue
        for g in gens:
            t = (r + g) % m
            if w + g < dist[t]:
                dist[t] = w + g
                heapq.heappush(heap, (w + g, t))
    return tuple(int(x) for x in dist)


@dataclass(frozen=True)
class Semigroup:
    """A numerical semigroup, identified by its minimal generators.

    Use :func:`make_semigroup` rather than the constructor.
    """

    min_gens: tuple[int, ...]
    multiplicity: int = field(compare=False)
    apery: tuple[int, ...] = field(compare=False, repr=False)
    frobenius: int = field(compare=False)
    gaps: tuple[int, ...] = field(compare=False, repr=False)
    genus: int = field(compare=False)

    def __contains__(self, n: int) -> bool:
        return n >= 0 and n >= self.apery[n % self.multiplicity]

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.min_gens)) + ">"

    @property
    def embedding_dimension(self) -> int:
        return len(self.min_gens)

    @property
    def is_natural(self) -> bool:
        return self.multiplicity == 1

    def elements_upto(self, bound: int) -> list[int]:
        return [n for n in range(bound + 1) if n in self]

    def to_text(self) -> str:
        return ",".join(map(str, self.min_gens))

    def to_json(self) -> str:
        return json.dumps(list(self.min_gens))


def _minimalize(S_apery: tuple[int, ...], m: int, candidates: list[int]) -> tuple[int, ...]:
    """Drop candidates that are sums of two nonzero elements of S."""
    def member(n: int) -> bool:
        return n >= 0 and n >= S_apery[n % m]

    kept = []
    for g in candidates:
        if not any(member(h) and member(g - h) for h in range(1, g // 2 + 1)):
            kept.append(g)
    return tuple(kept)


def make_semigroup(gens: Iterable[int]) -> Semigroup:
    """Build the numerical semigroup generated by ``gens``.

    >>> S = make_semigroup([4, 5, 6])
    >>> S.apery, S.frobenius, S.gaps
    ((0, 5, 6, 11), 7, (1, 2, 3, 7))
    """
    gens = sorted(set(int(g) for g in gens))
    if not gens:
        raise EmptyGenerators("at least one generator is required")
    if gens[0] < 1:
        raise InvalidInput(f"generators must be >= 1, got {gens[0]}")
    g = reduce(gcd, gens)
    if g != 1:
        raise NotCoprime(f"gcd of generators is {g}, not 1")
    m = gens[0]
    apery = _apery(gens, m)
    frob = max(apery) - m
    min_gens = _minimalize(apery, m, gens)
    gaps = tuple(n for n in range(1, frob + 1) if n < apery[n % m])
    return Semigroup(min_gens, m, apery, frob, gaps, len(gaps))


def from_gaps(gaps: Iterable[int]) -> Semigroup:
    """The semigroup whose gap set is ``gaps`` (assumed valid)."""
    gaps = set(gaps)
    if not gaps:
        return make_semigroup([1])
    frob = max(gaps)
    elems = [n for n in range(1, 2 * frob + 2) if n not in gaps]
    S = make_semigroup(elems)
    if set(S.gaps) != gaps:
        raise InvalidInput(f"{sorted(gaps)} is not the gap set of a numerical semigroup")
    return S


def parse_gens(text: str) -> list[int]:
    """Parse ``"4,5,6"`` or ``"[4, 5, 6]"`` into a list of integers."""
    text = text.strip()
    try:
        if text.startswith("["):
            vals = json.loads(text)
        else:
            vals = [int(tok) for tok in text.split(",") if tok.strip()]
        return [int(v) for v in vals]
    except (ValueError, TypeError) as exc:
        raise InvalidInput(f"cannot parse generator list {text!r}") from exc


def contains(S: Semigroup, n: int) -> bool:
    return n in S


def is_symmetric(S: Semigroup) -> bool:
    """Kunz's criterion: k[[S]] is Gorenstein iff S is symmetric."""
    return 2 * S.genus == S.frobenius + 1


def children(S: Semigroup) -> list[Semigroup]:
    """Children in the genus tree: remove one minimal generator above the Frobenius number."""
    return [from_gaps(S.gaps + (g,)) for g in S.min_gens if g > S.frobenius]


def enumerate_semigroups(
    max_genus: int, symmetric_only: bool = False, cap: int = DEFAULT_GENUS_CAP
) -> Iterator[Semigroup]:
    """Every numerical semigroup of genus <= max_genus, once each.

    Ordered by genus, then lexicographically by gap tuple.
    """
    if max_genus < 0:
        raise InvalidInput("max_genus must be >= 0")
    if max_genus > cap:
        raise GenusCapExceeded(f"max_genus {max_genus} exceeds cap {cap}")
    level = [make_semigroup([1])]
    for genus in range(max_genus + 1):
        level.sort(key=lambda s: s.gaps)
        for S in level:
            if not symmetric_only or is_symmetric(S):
                yield S
        if genus < max_genus:
            level = [c for S in level for c in children(S)]
