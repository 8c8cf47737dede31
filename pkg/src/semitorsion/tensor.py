"""Graded pieces of M ⊗ N for monomial ideals, and the torsion they carry.

For S-ideals M, N the tensor product over R = k[[S]] has a k-basis indexed by
the connected components of each degree-d fiber: nodes are pairs (x, y) with
x in M, y in N, x + y = d, and (x, y) ~ (x - g, y + g) for ring generators g.
The torsion-free quotient of M ⊗ N is the product MN, which is
one-dimensional in degree d exactly when d ∈ M + N.  So the length of the
torsion submodule is the sum over d of (classes - [d ∈ MN]).

Degrees are reported in actual (unnormalized) coordinates, so shifting an
ideal translates the rows but leaves the counts alone.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Sequence

from . import kernels
from .errors import NotClosedUnderRing, StabilizationFailure
from .semigroup import make_semigroup
from .sideal import ERing, SIdeal, _same_ring, is_module_over, product


@dataclass(frozen=True)
class TorsionProfile:
    degree_min: int
    degree_stable: int
    rows: tuple[tuple[int, int, bool], ...]
    torsion_length: int
    base_ring_gens: tuple[int, ...]

    @property
    def is_torsion_free(self) -> bool:
        return self.torsion_length == 0

    def to_dict(self) -> dict:
        return {
            "base_ring_gens": list(self.base_ring_gens),
            "degree_min": self.degree_min,
            "degree_stable": self.degree_stable,
            "rows": [[d, c, p] for d, c, p in self.rows],
            "torsion_length": self.torsion_length,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def base_gens(M: SIdeal, base: ERing | None) -> tuple[int, ...]:
    return M.semigroup.min_gens if base is None else base.ring_gens


def check_ring_gens(M: SIdeal, N: SIdeal, ring_gens: Sequence[int]) -> None:
    _same_ring(M, N)
    S = M.semigroup
    T = make_semigroup(ring_gens)
    if not all(s in T for s in S.min_gens):
        raise NotClosedUnderRing(f"ring generated by {list(ring_gens)} does not contain {S}")
    for I in (M, N):
        bad = [(a, g) for a in I.gens for g in ring_gens if (a + g) not in I]
        if bad:
            raise NotClosedUnderRing(f"ideal {I} not closed under ring generator {bad[0][1]}")


def stable_degree(M: SIdeal, N: SIdeal, ring_gens: Sequence[int]) -> int:
    """Normalized degree from which every fiber is a single class (conservative)."""
    return M.conductor + N.conductor + 2 * max(ring_gens)


def class_counts(M: SIdeal, N: SIdeal, ring_gens: Sequence[int], d_hi: int) -> list[int]:
    """Class counts for normalized degrees 0..d_hi; no validation."""
    mm = M.mask(d_hi + 1)
    mn = N.mask(d_hi + 1)
    return kernels.fiber_class_counts(mm, mn, 0, d_hi, list(ring_gens))


def graded_fiber_classes(M: SIdeal, N: SIdeal, d: int, ring_gens: Sequence[int]) -> int:
    """Dimension of the degree-d piece of M ⊗ N over the ring generated by ``ring_gens``."""
    check_ring_gens(M, N, ring_gens)
    dn = d - M.shift - N.shift
    if dn < 0:
        return 0
    return kernels.fiber_classes(M.mask(dn + 1), N.mask(dn + 1), dn, list(ring_gens))


def torsion_profile(M: SIdeal, N: SIdeal, base: ERing | None = None) -> TorsionProfile:
    """Per-degree classes of M ⊗ N over R (``base=None``) or over E."""
    gens = base_gens(M, base)
    check_ring_gens(M, N, gens)
    return _profile(M, N, gens)


def _profile(M: SIdeal, N: SIdeal, gens: Sequence[int]) -> TorsionProfile:
    m = M.semigroup.multiplicity
    d_star = stable_degree(M, N, gens)
    d_hi = d_star + m
    counts = class_counts(M, N, gens, d_hi)
    MN = product(M, N)
    offset = M.shift + N.shift
    rows = []
    torsion = 0
    for d, c in enumerate(counts):
        inp = (d - (MN.shift - offset)) in MN
        if c == 0 and inp or c > 0 and not inp:
            raise StabilizationFailure(f"fiber {d} has {c} classes but membership in MN is {inp}")
        if d >= d_star and (c != 1 or not inp):
            raise StabilizationFailure(f"degree {d} >= {d_star} has {c} classes")
        torsion += c - (1 if inp else 0)
        rows.append((d + offset, c, inp))
    return TorsionProfile(offset, d_star + offset, tuple(rows), torsion, tuple(gens))


def torsion_length(M: SIdeal, N: SIdeal, base: ERing | None = None) -> int:
    return torsion_profile(M, N, base).torsion_length


def is_torsion_free(M: SIdeal, N: SIdeal, base: ERing | None = None) -> bool:
    return torsion_profile(M, N, base).torsion_length == 0


@dataclass(frozen=True)
class Lemma22Report:
    equal_dims: bool
    first_discrepancy: int | None
    counts_r: tuple[int, ...]
    counts_e: tuple[int, ...]
    degree_min: int

    def to_dict(self) -> dict:
        return {
            "counts_e": list(self.counts_e),
            "counts_r": list(self.counts_r),
            "degree_min": self.degree_min,
            "equal_dims": self.equal_dims,
            "first_discrepancy": self.first_discrepancy,
        }


def lemma22_compare(M: SIdeal, N: SIdeal, E: ERing) -> Lemma22Report:
    """Compare graded dimensions of M ⊗_R N and M ⊗_E N degree by degree.

    Both ideals must be E-modules.  Base change R -> E is predicted to be an
    isomorphism when M ⊗_R N is torsion-free; with torsion the comparison is
    only descriptive.
    """
    for I in (M, N):
        if not is_module_over(I, E):
            raise NotClosedUnderRing(f"{I} is not a module over E = <{E.ring_gens}>")
    r_gens = M.semigroup.min_gens
    check_ring_gens(M, N, r_gens)
    check_ring_gens(M, N, E.ring_gens)
    d_hi = max(stable_degree(M, N, r_gens), stable_degree(M, N, E.ring_gens))
    d_hi += M.semigroup.multiplicity
    cr = class_counts(M, N, r_gens, d_hi)
    ce = class_counts(M, N, E.ring_gens, d_hi)
    offset = M.shift + N.shift
    first = next((d + offset for d, (a, b) in enumerate(zip(cr, ce)) if a != b), None)
    return Lemma22Report(first is None, first, tuple(cr), tuple(ce), offset)
