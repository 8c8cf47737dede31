"""Exact finite-dimensional model of a conductor-square pullback domain.

D is k[X] localized at the two maximal ideals (X) and (X-1); A = k[T]/(T^2);
B = k[X]/(X^2) × k[X]/((X-1)^2) = D/f with f = X^2 (X-1)^2 the conductor; and
R = A ×_B D via i(a + bt) = (a + bx, a + b(x-1)).  Everything that matters
about R, its maximal ideal m, and E = End(m) is visible modulo f, because f
lies in m and is an ideal of D.  We compute modulo f, then repeat the
endomorphism-ring computation modulo f^2 as an independent guard.

Algebras are products of truncated polynomial rings k[u]/(u^n) with u = X - c,
and elements are flat tuples of Fractions (one block of n coefficients per
factor).  The base field is Q.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .errors import NotClosed

Vec = tuple[Fraction, ...]


# -- linear algebra over Q ---------------------------------------------------

def rref(vectors: Sequence[Sequence[Fraction]], width: int) -> list[Vec]:
    """Reduced row-echelon basis of the span of ``vectors``."""
    rows = [list(map(Fraction, v)) for v in vectors]
    out: list[list[Fraction]] = []
    for c in range(width):
        piv = next((r for r in rows if r[c] != 0), None)
        if piv is None:
            continue
        rows.remove(piv)
        piv = [a / piv[c] for a in piv]
        rows = [[a - r[c] * b for a, b in zip(r, piv)] for r in rows]
        out = [[a - r[c] * b for a, b in zip(r, piv)] for r in out]
        out.append(piv)
    out.sort(key=lambda r: next(i for i, a in enumerate(r) if a != 0))
    return [tuple(r) for r in out]


def nullspace(rows: Sequence[Sequence[Fraction]], width: int) -> list[Vec]:
    """Basis of {v : row·v = 0 for every row}."""
    R = rref(rows, width)
    pivots = [next(i for i, a in enumerate(r) if a != 0) for r in R]
    basis = []
    for free in (c for c in range(width) if c not in pivots):
        v = [Fraction(0)] * width
        v[free] = Fraction(1)
        for r, p in zip(R, pivots):
            v[p] = -r[free]
        basis.append(tuple(v))
    return basis


def in_span(v: Sequence[Fraction], basis: Sequence[Vec], width: int) -> bool:
    return len(rref(list(basis) + [tuple(v)], width)) == len(rref(basis, width))


def intersect(U: Sequence[Vec], W: Sequence[Vec], width: int) -> list[Vec]:
    """U ∩ W via the annihilator of W restricted to U."""
    ann_w = nullspace(W, width) if W else [tuple(Fraction(int(i == j)) for j in range(width))
                                           for i in range(width)]
    rows = [[sum(a * u[k] for k, a in enumerate(h)) for u in U] for h in ann_w]
    coeffs = nullspace(rows, len(U)) if U else []
    return rref([tuple(sum(c * u[k] for c, u in zip(cf, U)) for k in range(width))
                 for cf in coeffs], width)


# -- truncated product algebras ----------------------------------------------

@dataclass(frozen=True)
class TruncatedAlgebra:
    """∏_i k[u_i]/(u_i^{n_i}) with u_i = X - centers[i]."""

    centers: tuple[int, ...]
    orders: tuple[int, ...]

    @property
    def dim(self) -> int:
        return sum(self.orders)

    def blocks(self, v: Vec) -> list[Vec]:
        out, k = [], 0
        for n in self.orders:
            out.append(v[k:k + n])
            k += n
        return out

    def mul(self, a: Vec, b: Vec) -> Vec:
        out: list[Fraction] = []
        for pa, pb, n in zip(self.blocks(a), self.blocks(b), self.orders):
            out.extend(sum((pa[i] * pb[k - i] for i in range(k + 1)), Fraction(0))
                       for k in range(n))
        return tuple(out)

    def one(self) -> Vec:
        return self.from_poly([1])

    def basis(self) -> list[Vec]:
        return [tuple(Fraction(int(i == j)) for j in range(self.dim)) for i in range(self.dim)]

    def from_poly(self, coeffs: Sequence[int]) -> Vec:
        """Image of the polynomial Σ coeffs[j] X^j (Taylor-expanded at each center)."""
        out: list[Fraction] = []
        for c, n in zip(self.centers, self.orders):
            # coefficient of u^k in f(u + c) is Σ_j coeffs[j] C(j,k) c^(j-k)
            out.extend(Fraction(sum(a * comb(j, k) * c ** (j - k)
                                    for j, a in enumerate(coeffs) if j >= k))
                       for k in range(n))
        return tuple(out)

    def truncate(self, v: Vec, target: TruncatedAlgebra) -> Vec:
        return tuple(x for blk, n in zip(self.blocks(v), target.orders) for x in blk[:n])

    def trace(self, a: Vec) -> Fraction:
        return sum((self.mul(a, e)[i] for i, e in enumerate(self.basis())), Fraction(0))

    def radical(self) -> list[Vec]:
        """Nilradical, as the radical of the trace form (valid in characteristic 0)."""
        basis = self.basis()
        gram = [[self.trace(self.mul(a, b)) for b in basis] for a in basis]
        return nullspace(gram, self.dim)


def _add(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def idealizer(alg: TruncatedAlgebra, ideal: Sequence[Vec]) -> list[Vec]:
    """{β : β·ideal ⊆ ideal} as a subspace of ``alg``."""
    ann = nullspace(ideal, alg.dim)
    rows = []
    for mvec in ideal:
        images = [alg.mul(e, mvec) for e in alg.basis()]  # columns of L_m
        for h in ann:
            rows.append([sum(a * img[k] for k, a in enumerate(h)) for img in images])
    return nullspace(rows, alg.dim)


@dataclass(frozen=True)
class SubalgebraFacts:
    dim: int
    is_ring: bool
    radical_dim: int
    residue_dim: int
    radical_square_zero: bool

    @property
    def is_local(self) -> bool:
        # residue algebra of dimension 1 is k itself
        return self.residue_dim == 1


def subalgebra_facts(alg: TruncatedAlgebra, sub: Sequence[Vec]) -> SubalgebraFacts:
    w = alg.dim
    closed = in_span(alg.one(), sub, w) and all(
        in_span(alg.mul(a, b), sub, w) for a in sub for b in sub)
    rad = intersect(list(sub), alg.radical(), w)
    sq_zero = all(not any(alg.mul(a, b)) for a in rad for b in rad)
    return SubalgebraFacts(len(sub), closed, len(rad), len(sub) - len(rad), sq_zero)


# -- the example ---------------------------------------------------------------

B_ALG = TruncatedAlgebra((0, 1), (2, 2))
DEEP_ALG = TruncatedAlgebra((0, 1), (4, 4))
A_DIM = 2


def i_map(a: Fraction | int, b: Fraction | int, alg: TruncatedAlgebra = B_ALG) -> Vec:
    """i(a + bt) = (a + bx, a + b(x-1)), lifted to ``alg`` via the same formula per factor."""
    first = TruncatedAlgebra(alg.centers[:1], alg.orders[:1]).from_poly([a, b])
    second = TruncatedAlgebra(alg.centers[1:], alg.orders[1:]).from_poly([a - b, b])
    return tuple(first + second)


@dataclass(frozen=True)
class PullbackLab:
    alg: TruncatedAlgebra
    mu: Vec
    r_image: tuple[Vec, ...]
    m_image: tuple[Vec, ...]


def build_example() -> PullbackLab:
    one, mu = i_map(1, 0), i_map(0, 1)
    w = B_ALG.dim
    return PullbackLab(B_ALG, mu, tuple(rref([one, mu], w)), tuple(rref([mu], w)))


def i_is_ring_hom() -> bool:
    A_basis = [(1, 0), (0, 1)]

    def a_mul(u, v):
        return (u[0] * v[0], u[0] * v[1] + u[1] * v[0])

    if i_map(1, 0) != B_ALG.one():
        return False
    return all(i_map(*a_mul(u, v)) == B_ALG.mul(i_map(*u), i_map(*v))
               for u in A_basis for v in A_basis)


@dataclass(frozen=True)
class LengthFacts:
    len_B: int
    len_A: int
    bass_gorenstein: bool


def length_facts() -> LengthFacts:
    lab = build_example()
    len_b = lab.alg.dim
    len_a = len(lab.r_image)
    return LengthFacts(len_b, len_a, len_b == 2 * len_a)


@dataclass(frozen=True)
class RbarFacts:
    max_ideal_count: int
    two_generated_over_A: bool
    generators: tuple[Vec, Vec] | None
    one_generator_suffices: bool


def _a_span(lab: PullbackLab, gens: Sequence[Vec]) -> list[Vec]:
    return rref([v for g in gens for v in (g, lab.alg.mul(lab.mu, g))], lab.alg.dim)


def _factor_idempotents(alg: TruncatedAlgebra) -> list[Vec]:
    out, k = [], 0
    for n in alg.orders:
        out.append(tuple(Fraction(int(j == k)) for j in range(alg.dim)))
        k += n
    return out


def rbar_facts() -> RbarFacts:
    """Maximal ideals of B = D/f and generation of B over A."""
    lab = build_example()
    alg = lab.alg
    idem = _factor_idempotents(alg)
    if alg.mul(idem[0], idem[1]) != (0,) * alg.dim or _add(*idem) != alg.one():
        raise NotClosed("factor idempotents are not orthogonal or do not sum to 1")
    count = 0
    for e in idem:
        factor = rref([alg.mul(e, b) for b in alg.basis()], alg.dim)
        rad = intersect(factor, alg.radical(), alg.dim)
        if len(factor) - len(rad) != 1:
            raise NotClosed("a factor of B is not local with residue field k")
        count += 1
    if alg.dim - len(alg.radical()) != count:
        raise NotClosed("B/rad(B) is not split of the expected dimension")

    pair = None
    candidates = [(alg.one(), lab.mu)]
    grid = [tuple(map(Fraction, c)) for c in itertools.product((0, 1), repeat=alg.dim)]
    candidates += [(u, v) for u, v in itertools.combinations(grid, 2)]
    for u, v in candidates:
        if len(_a_span(lab, [u, v])) == alg.dim:
            pair = (u, v)
            break
    single = any(len(_a_span(lab, [u])) == alg.dim for u in grid)
    return RbarFacts(count, pair is not None, pair, single)


@dataclass(frozen=True)
class EndFacts:
    dim_E_bar: int
    is_ring: bool
    is_local: bool
    residue_dim: int
    simple_over_R: bool
    radical_dim: int
    radical_square_zero: bool
    contains_R: bool
    basis: tuple[Vec, ...]


def end_of_m() -> EndFacts:
    """E = End(m) modulo the conductor: {β ∈ B : β·m ⊆ m}."""
    lab = build_example()
    alg = lab.alg
    E = idealizer(alg, lab.m_image)
    facts = subalgebra_facts(alg, E)
    if not facts.is_ring:
        raise NotClosed("End(m) modulo the conductor is not closed under multiplication")
    contains_r = all(in_span(v, E, alg.dim) for v in lab.r_image)
    return EndFacts(
        dim_E_bar=facts.dim,
        is_ring=facts.is_ring,
        is_local=facts.is_local,
        residue_dim=facts.residue_dim,
        simple_over_R=facts.dim - len(lab.r_image) == 1,
        radical_dim=facts.radical_dim,
        radical_square_zero=facts.radical_square_zero,
        contains_R=contains_r,
        basis=tuple(E),
    )


@dataclass(frozen=True)
class DeepGuard:
    conductor_dim: int
    m_dim: int
    dim_E: int
    dim_E_mod_conductor: int
    is_ring: bool
    is_local: bool
    residue_dim: int
    reduction_matches: bool

    @property
    def agrees(self) -> bool:
        shallow = end_of_m()
        return (self.is_ring and self.reduction_matches
                and self.dim_E_mod_conductor == shallow.dim_E_bar
                and self.is_local == shallow.is_local
                and self.residue_dim == shallow.residue_dim)


def deep_guard() -> DeepGuard:
    """Recompute End(m) inside D/f^2 and compare with the computation in D/f."""
    alg = DEEP_ALG
    w = alg.dim
    f = alg.from_poly([0, 0, 1, -2, 1])  # X^2 (X-1)^2
    cond = rref([alg.mul(f, b) for b in alg.basis()], w)
    m_ideal = rref([i_map(0, 1, alg)] + cond, w)
    E = idealizer(alg, m_ideal)
    facts = subalgebra_facts(alg, E)
    reduced = rref([alg.truncate(v, B_ALG) for v in E], B_ALG.dim)
    shallow = rref(end_of_m().basis, B_ALG.dim)
    return DeepGuard(
        conductor_dim=len(cond),
        m_dim=len(m_ideal),
        dim_E=len(E),
        dim_E_mod_conductor=len(E) - len(intersect(E, cond, w)),
        is_ring=facts.is_ring,
        is_local=facts.is_local,
        residue_dim=facts.residue_dim,
        reduction_matches=reduced == shallow,
    )


def _vec_json(v: Vec) -> list:
    return [str(x) for x in v]


def report() -> dict:
    """Everything the lab computes, JSON-ready."""
    lf, rf, ef, dg = length_facts(), rbar_facts(), end_of_m(), deep_guard()
    lab = build_example()
    return {
        "A_dim": A_DIM,
        "i_ring_hom": i_is_ring_hom(),
        "dim_i_A": len(lab.r_image),
        "dim_m_image": len(lab.m_image),
        "len_B": lf.len_B,
        "len_A": lf.len_A,
        "bass_gorenstein": lf.bass_gorenstein,
        "max_ideal_count": rf.max_ideal_count,
        "rbar_local": rf.max_ideal_count == 1,
        "two_generated_over_A": rf.two_generated_over_A,
        "two_generators": [_vec_json(v) for v in rf.generators] if rf.generators else None,
        "one_generator_suffices": rf.one_generator_suffices,
        "dim_E_bar": ef.dim_E_bar,
        "E_is_ring": ef.is_ring,
        "E_is_local": ef.is_local,
        "E_residue_dim": ef.residue_dim,
        "E_radical_dim": ef.radical_dim,
        "E_radical_square_zero": ef.radical_square_zero,
        "E_contains_R": ef.contains_R,
        "simple_over_R": ef.simple_over_R,
        "deep_conductor_dim": dg.conductor_dim,
        "deep_m_dim": dg.m_dim,
        "deep_dim_E": dg.dim_E,
        "deep_dim_E_mod_conductor": dg.dim_E_mod_conductor,
        "deep_is_local": dg.is_local,
        "deep_residue_dim": dg.residue_dim,
        "deep_reduction_matches": dg.reduction_matches,
        "deep_guard_agrees": dg.agrees,
    }
