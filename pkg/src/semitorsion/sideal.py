"""Fractional monomial ideals of a numerical semigroup ring (S-ideals).

An S-ideal is a subset I of the integers, bounded below, with I + S ⊆ I.
It models a rank-one torsion-free monomial module.  Ideals are stored
shift-normalized: the least generator is 0 and the original offset lives in
``shift``.  Equality ignores the shift, so isomorphic ideals compare equal.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

from .errors import (
    EmptyGenerators,
    NotARing,
    PrincipalMaximalIdeal,
    SemigroupMismatch,
)
from .semigroup import Semigroup, make_semigroup


@dataclass(frozen=True)
class SIdeal:
    semigroup: Semigroup
    gens: tuple[int, ...]
    shift: int = field(default=0, compare=False)

    def __contains__(self, z: int) -> bool:
        """Membership in the normalized set (generators shifted to start at 0)."""
        S = self.semigroup
        return any((z - a) in S for a in self.gens)

    def contains_actual(self, z: int) -> bool:
        return (z - self.shift) in self

    @property
    def conductor(self) -> int:
        """Least c with [c, ∞) inside the normalized set."""
        S = self.semigroup
        m = S.multiplicity
        least = [min(a + S.apery[(r - a) % m] for a in self.gens) for r in range(m)]
        return max(least) - m + 1

    @property
    def is_principal(self) -> bool:
        return len(self.gens) == 1

    def mask(self, length: int) -> bytes:
        """Membership flags of the normalized set on 0..length-1."""
        c = self.conductor
        return bytes(1 if (z >= c or z in self) else 0 for z in range(length))

    def members_upto(self, bound: int) -> list[int]:
        return [z for z in range(bound + 1) if z in self]

    def shifted(self, by: int) -> SIdeal:
        return SIdeal(self.semigroup, self.gens, self.shift + by)

    def to_dict(self) -> dict:
        return {
            "semigroup": list(self.semigroup.min_gens),
            "gens": list(self.gens),
            "shift": self.shift,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.gens)) + "}"


@dataclass(frozen=True)
class ERing:
    """E = (m : m) as an S-ideal that is also a numerical semigroup."""

    underlying: SIdeal
    ring_gens: tuple[int, ...]
    extra_elements: tuple[int, ...]

    @property
    def semigroup(self) -> Semigroup:
        return make_semigroup(self.ring_gens)

    def __contains__(self, z: int) -> bool:
        return self.underlying.contains_actual(z)


def make_ideal(S: Semigroup, gens: Iterable[int]) -> SIdeal:
    gens = sorted(set(int(g) for g in gens))
    if not gens:
        raise EmptyGenerators("an ideal needs at least one generator")
    base = gens[0]
    kept: list[int] = []
    for g in gens:
        g -= base
        if all((g - h) not in S for h in kept):
            kept.append(g)
    return SIdeal(S, tuple(kept), base)


def ideal_from_dict(data: dict) -> SIdeal:
    S = make_semigroup(data["semigroup"])
    I = make_ideal(S, data["gens"])
    return I.shifted(int(data.get("shift", 0)))


def unit_ideal(S: Semigroup) -> SIdeal:
    return SIdeal(S, (0,), 0)


def maximal_ideal(S: Semigroup) -> SIdeal:
    return make_ideal(S, S.min_gens)


def is_principal(I: SIdeal) -> bool:
    return I.is_principal


def _same_ring(I: SIdeal, J: SIdeal) -> None:
    if I.semigroup != J.semigroup:
        raise SemigroupMismatch(f"ideals over {I.semigroup} and {J.semigroup}")


def product(I: SIdeal, J: SIdeal) -> SIdeal:
    _same_ring(I, J)
    sums = [a + b + I.shift + J.shift for a in I.gens for b in J.gens]
    return make_ideal(I.semigroup, sums)


def colon(target: SIdeal, source: SIdeal) -> SIdeal:
    """{z : z + source ⊆ target}, i.e. Hom(source, target), with actual shifts."""
    _same_ring(target, source)
    S = target.semigroup
    src = [b + source.shift for b in source.gens]
    lo = target.shift - source.shift
    # every z with z + min(source) >= conductor(target) qualifies
    hi = target.shift + target.conductor - source.shift
    members = [z for z in range(lo, hi) if all(target.contains_actual(z + b) for b in src)]
    members.extend(range(hi, hi + S.multiplicity))
    return make_ideal(S, members)


def dual(I: SIdeal) -> SIdeal:
    return colon(unit_ideal(I.semigroup), I)


def bidual(I: SIdeal) -> SIdeal:
    return dual(dual(I))


def end_ring(S: Semigroup) -> ERing:
    """The endomorphism ring of the maximal ideal, as a numerical semigroup containing S."""
    m_ideal = maximal_ideal(S)
    E = colon(m_ideal, m_ideal)
    if E.shift != 0 or E.gens[0] != 0:
        raise NotARing(f"(m:m) over {S} does not have 0 as least element")
    bound = E.conductor + S.multiplicity
    elems = E.members_upto(bound)
    for a in elems:
        for b in elems:
            if a + b <= bound and (a + b) not in E:
                raise NotARing(f"(m:m) over {S} not closed: {a}+{b}")
    extra = tuple(z for z in elems if z not in S)
    ring = make_semigroup([z for z in elems if z > 0] or [1])
    return ERing(E, ring.min_gens, extra)


@dataclass(frozen=True)
class Lemma21Report:
    simple: bool
    y: int | None
    generator_pair_ok: bool

    def to_dict(self) -> dict:
        return {"simple": self.simple, "y": self.y, "generator_pair_ok": self.generator_pair_ok}


def lemma21_report(S: Semigroup) -> Lemma21Report:
    """Is E/R simple, and is E generated over R by 1 and its extra element?"""
    if S.multiplicity == 1:
        raise PrincipalMaximalIdeal(f"{S} is the valuation ring k[[t]]; R = E = integral closure")
    E = end_ring(S)
    if len(E.extra_elements) != 1:
        return Lemma21Report(False, None, False)
    y = E.extra_elements[0]
    pair = make_ideal(S, [0, y])
    ok = pair == E.underlying and pair.shift == E.underlying.shift == 0
    return Lemma21Report(True, y, ok)


def enumerate_ideals(S: Semigroup) -> list[SIdeal]:
    """All normalized S-ideals: antichains of {0} ∪ gaps(S) that contain 0."""
    gaps = S.gaps
    out: list[tuple[int, ...]] = []

    def extend(chosen: list[int], start: int) -> None:
        out.append(tuple(chosen))
        for i in range(start, len(gaps)):
            g = gaps[i]
            if all((g - h) not in S for h in chosen):
                chosen.append(g)
                extend(chosen, i + 1)
                chosen.pop()

    extend([0], 0)
    out.sort()
    return [SIdeal(S, gens, 0) for gens in out]


def is_module_over(I: SIdeal, E: ERing) -> bool:
    """Is I closed under multiplication by E?"""
    if I.semigroup != E.underlying.semigroup:
        raise SemigroupMismatch(f"ideal over {I.semigroup}, ring over {E.underlying.semigroup}")
    return all((a + e) in I for a in I.gens for e in E.ring_gens)
