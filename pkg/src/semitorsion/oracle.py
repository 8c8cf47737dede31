"""Brute-force fiber dimensions by exact linear algebra.

Each degree-d fiber of M ⊗ N is presented as k^nodes modulo the span of the
relation vectors e_(x,y) - e_(x-g,y+g).  Its dimension is nodes - rank.
This shares no code with the union-find path in :mod:`tensor`: membership
is tested through :class:`SIdeal` directly and rank comes from Gaussian
elimination.

Characteristic 2 is refused: there the signed and unsigned incidence
matrices coincide and the rank formula needs a bipartiteness correction.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import kernels
from .errors import FiberTooLarge, InvalidInput
from .sideal import ERing, SIdeal, product
from .tensor import base_gens, check_ring_gens, stable_degree

DEFAULT_MODULUS = 65521
DEFAULT_NODE_CAP = 10**5


@dataclass(frozen=True)
class FiberMatrix:
    degree: int
    nodes: tuple[tuple[int, int], ...]
    relation_rows: tuple[tuple[int, int], ...]  # (index of +1, index of -1)
    field_modulus: int

    def dense(self) -> list[int]:
        n = len(self.nodes)
        flat = [0] * (len(self.relation_rows) * n)
        for i, (plus, minus) in enumerate(self.relation_rows):
            flat[i * n + plus] = 1
            flat[i * n + minus] = -1
        return flat


@dataclass(frozen=True)
class FiberRank:
    nodes: int
    rank: int
    classes: int


def _check_modulus(p: int) -> None:
    if p == 0:
        return
    if p < 3 or p % 2 == 0 or any(p % q == 0 for q in range(3, int(p**0.5) + 1, 2)):
        raise InvalidInput(f"field_modulus must be 0 or an odd prime, got {p}")


def build_fiber_matrix(
    M: SIdeal, N: SIdeal, d: int, ring_gens: Sequence[int],
    field_modulus: int = DEFAULT_MODULUS, node_cap: int = DEFAULT_NODE_CAP,
) -> FiberMatrix:
    """Nodes and relations of the degree-d fiber, d in actual coordinates."""
    lo = M.shift
    hi = d - N.shift
    if hi - lo + 1 > node_cap:
        raise FiberTooLarge(f"fiber at degree {d} may have {hi - lo + 1} nodes (cap {node_cap})")
    nodes = [(x, d - x) for x in range(lo, hi + 1)
             if M.contains_actual(x) and N.contains_actual(d - x)]
    index = {x: i for i, (x, _) in enumerate(nodes)}
    rows = []
    for x, _ in nodes:
        for g in ring_gens:
            j = index.get(x - g)
            if j is not None:
                rows.append((index[x], j))
    return FiberMatrix(d, tuple(nodes), tuple(rows), field_modulus)


def rank_rational(flat: Sequence[int], nrows: int, ncols: int) -> int:
    """Rank over Q by fraction-exact row reduction."""
    rows = [[Fraction(flat[i * ncols + j]) for j in range(ncols)] for i in range(nrows)]
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(r + 1, nrows):
            if rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == nrows:
            break
    return r


def matrix_rank(fm: FiberMatrix) -> int:
    n, m = len(fm.nodes), len(fm.relation_rows)
    if n == 0 or m == 0:
        return 0
    if fm.field_modulus == 0:
        return rank_rational(fm.dense(), m, n)
    return kernels.rank_mod_p(fm.dense(), m, n, fm.field_modulus)


def fiber_rank_oracle(
    M: SIdeal, N: SIdeal, d: int, ring_gens: Sequence[int],
    field_modulus: int = DEFAULT_MODULUS, node_cap: int = DEFAULT_NODE_CAP,
) -> FiberRank:
    _check_modulus(field_modulus)
    check_ring_gens(M, N, ring_gens)
    fm = build_fiber_matrix(M, N, d, ring_gens, field_modulus, node_cap)
    r = matrix_rank(fm)
    return FiberRank(len(fm.nodes), r, len(fm.nodes) - r)


def torsion_length_oracle(
    M: SIdeal, N: SIdeal, base: ERing | None = None, field_modulus: int = DEFAULT_MODULUS
) -> int:
    """Torsion length of M ⊗ N with every fiber dimension taken from a matrix rank."""
    _check_modulus(field_modulus)
    gens = base_gens(M, base)
    check_ring_gens(M, N, gens)
    offset = M.shift + N.shift
    d_hi = stable_degree(M, N, gens) + M.semigroup.multiplicity
    MN = product(M, N)
    total = 0
    for d in range(offset, offset + d_hi + 1):
        fm = build_fiber_matrix(M, N, d, gens, field_modulus)
        classes = len(fm.nodes) - matrix_rank(fm)
        total += classes - (1 if MN.contains_actual(d) else 0)
    return total
