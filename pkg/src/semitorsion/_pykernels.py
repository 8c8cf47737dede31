"""Pure-Python reference kernels; used when the compiled core is unavailable.

Signatures match ``_ckernels`` exactly.
"""
from __future__ import annotations

from typing import Sequence


def fiber_classes(mask_m: bytes, mask_n: bytes, d: int, gens: Sequence[int]) -> int:
    """Connected components of the degree-d fiber of M⊗N.

    Nodes are x with mask_m[x] and mask_n[d-x]; x is joined to x-g for every
    ring generator g with mask_m[x-g].  mask_n must be closed under gens.
    """
    if d < 0:
        return 0
    parent = list(range(d + 1))

    def find(a: int) -> int:
        root = a
        while parent[root] != root:
            root = parent[root]
        while parent[a] != root:
            parent[a], a = root, parent[a]
        return root

    count = 0
    for x in range(d + 1):
        if not (mask_m[x] and mask_n[d - x]):
            continue
        count += 1
        for g in gens:
            if g <= x and mask_m[x - g]:
                ra, rb = find(x), find(x - g)
                if ra != rb:
                    parent[ra] = rb
                    count -= 1
    return count


def fiber_class_counts(
    mask_m: bytes, mask_n: bytes, d_lo: int, d_hi: int, gens: Sequence[int]
) -> list[int]:
    return [fiber_classes(mask_m, mask_n, d, gens) for d in range(d_lo, d_hi + 1)]


def rank_mod_p(flat: Sequence[int], nrows: int, ncols: int, p: int) -> int:
    """Rank over GF(p) of a row-major dense integer matrix."""
    pivots: dict[int, dict[int, int]] = {}
    for i in range(nrows):
        row = {j: v % p for j in range(ncols) if (v := flat[i * ncols + j]) % p}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(row[lead], -1, p)
                pivots[lead] = {j: v * inv % p for j, v in row.items()}
                break
            f = row[lead]
            for j, v in piv.items():
                nv = (row.get(j, 0) - f * v) % p
                if nv:
                    row[j] = nv
                else:
                    row.pop(j, None)
    return len(pivots)
