# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: fiber union-find and dense rank over GF(p)."""
from cpython.mem cimport PyMem_Malloc, PyMem_Free
from libc.stdint cimport int64_t


cdef inline Py_ssize_t _find(Py_ssize_t* parent, Py_ssize_t a) noexcept nogil:
    cdef Py_ssize_t root = a, nxt
    while parent[root] != root:
        root = parent[root]
    while parent[a] != root:
        nxt = parent[a]
        parent[a] = root
        a = nxt
    return root


cdef Py_ssize_t _fiber(const unsigned char[:] mm, const unsigned char[:] mn, Py_ssize_t d,
                       Py_ssize_t* g, Py_ssize_t ng, Py_ssize_t* parent) noexcept nogil:
    cdef Py_ssize_t x, k, ra, rb, count = 0
    for x in range(d + 1):
        parent[x] = x
    for x in range(d + 1):
        if mm[x] == 0 or mn[d - x] == 0:
            continue
        count += 1
        for k in range(ng):
            if g[k] <= x and mm[x - g[k]]:
                ra = _find(parent, x)
                rb = _find(parent, x - g[k])
                if ra != rb:
                    parent[ra] = rb
                    count -= 1
    return count


def fiber_class_counts(const unsigned char[:] mask_m, const unsigned char[:] mask_n,
                       Py_ssize_t d_lo, Py_ssize_t d_hi, gens):
    cdef Py_ssize_t ng = len(gens), k, d
    if d_hi < 0 or d_hi < d_lo:
        return []
    if mask_m.shape[0] <= d_hi or mask_n.shape[0] <= d_hi:
        raise IndexError("masks shorter than the requested degree range")
    cdef Py_ssize_t* g = <Py_ssize_t*>PyMem_Malloc((ng + 1) * sizeof(Py_ssize_t))
    cdef Py_ssize_t* parent = <Py_ssize_t*>PyMem_Malloc((d_hi + 1) * sizeof(Py_ssize_t))
    if g == NULL or parent == NULL:
        PyMem_Free(g)
        PyMem_Free(parent)
        raise MemoryError()
    out = []
    try:
        for k in range(ng):
            g[k] = gens[k]
        for d in range(d_lo, d_hi + 1):
            out.append(0 if d < 0 else _fiber(mask_m, mask_n, d, g, ng, parent))
    finally:
        PyMem_Free(g)
        PyMem_Free(parent)
    return out


def fiber_classes(mask_m, mask_n, Py_ssize_t d, gens):
    if d < 0:
        return 0
    return fiber_class_counts(mask_m, mask_n, d, d, gens)[0]


def rank_mod_p(flat, Py_ssize_t nrows, Py_ssize_t ncols, int64_t p):
    """Rank over GF(p) of a row-major dense integer matrix (p < 2**31)."""
    cdef Py_ssize_t n = nrows * ncols, i, j, r = 0, c, piv
    cdef int64_t inv, f, t
    if n == 0:
        return 0
    cdef int64_t* a = <int64_t*>PyMem_Malloc(n * sizeof(int64_t))
    if a == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            a[i] = (<int64_t>flat[i]) % p
            if a[i] < 0:
                a[i] += p
        with nogil:
            for c in range(ncols):
                if r == nrows:
                    break
                piv = -1
                for i in range(r, nrows):
                    if a[i * ncols + c] != 0:
                        piv = i
                        break
                if piv < 0:
                    continue
                if piv != r:
                    for j in range(ncols):
                        t = a[r * ncols + j]
                        a[r * ncols + j] = a[piv * ncols + j]
                        a[piv * ncols + j] = t
                inv = _inv(a[r * ncols + c], p)
                for j in range(c, ncols):
                    a[r * ncols + j] = a[r * ncols + j] * inv % p
                for i in range(r + 1, nrows):
                    f = a[i * ncols + c]
                    if f != 0:
                        for j in range(c, ncols):
                            a[i * ncols + j] = (a[i * ncols + j] - f * a[r * ncols + j]) % p
                            if a[i * ncols + j] < 0:
                                a[i * ncols + j] += p
                r += 1
    finally:
        PyMem_Free(a)
    return r


cdef int64_t _inv(int64_t a, int64_t p) noexcept nogil:
    cdef int64_t result = 1, e = p - 2
    a %= p
    while e > 0:
        if e & 1:
            result = result * a % p
        a = a * a % p
        e >>= 1
    return result
