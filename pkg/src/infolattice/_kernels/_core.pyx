# cython: boundscheck=False, wraparound=False, nonecheck=False, cdivision=True
"""Compiled row-reduction kernel over packed 64-bit signed Pauli rows.

Mirrors ``_purepy.reduce_pauli_rows`` exactly (same pivots, same phases) for
chains of at most 64 sites.
"""

from libc.stdlib cimport free, malloc

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #define ILAT_POPCNT(x) __builtin_popcountll(x)
    #else
    static int ILAT_POPCNT(unsigned long long v) {
        int c = 0;
        while (v) { v &= v - 1; ++c; }
        return c;
    }
    #endif
    """
    int ILAT_POPCNT(unsigned long long) nogil

ctypedef unsigned long long u64


cdef inline int _mul_phase(u64 xa, u64 za, u64 xb, u64 zb) nogil:
    cdef u64 xc = xa ^ xb
    cdef u64 zc = za ^ zb
    cdef int delta = (
        ILAT_POPCNT(xa & za)
        + ILAT_POPCNT(xb & zb)
        + 2 * ILAT_POPCNT(za & xb)
        - ILAT_POPCNT(xc & zc)
    )
    # two's complement: delta & 3 == delta mod 4 also for negative delta
    return delta & 3


def reduce_pauli_rows_packed(xs, zs, phases, cols):
    """Packed-word equivalent of the pure-Python reduction.

    Accepts and mutates plain Python lists so callers need not care which
    backend runs.
    """
    cdef Py_ssize_t n = len(xs)
    cdef Py_ssize_t ncols = len(cols)
    cdef u64 *wx = <u64 *> malloc(n * sizeof(u64))
    cdef u64 *wz = <u64 *> malloc(n * sizeof(u64))
    cdef int *ph = <int *> malloc(n * sizeof(int))
    cdef long *cc = <long *> malloc(ncols * sizeof(long))
    if wx == NULL or wz == NULL or ph == NULL or cc == NULL:
        free(wx); free(wz); free(ph); free(cc)
        raise MemoryError
    cdef Py_ssize_t i
    for i in range(n):
        wx[i] = xs[i]
        wz[i] = zs[i]
        ph[i] = phases[i]
    for i in range(ncols):
        cc[i] = cols[i]

    cdef Py_ssize_t rank = 0, order_pos, r, pivot
    cdef long c
    cdef int site, use_z, delta, pp
    cdef u64 bit, xp, zp, tmp
    cdef int tmpi
    pivots = []
    for order_pos in range(ncols):
        if rank == n:
            break
        c = cc[order_pos]
        site = <int> (c >> 1)
        use_z = <int> (c & 1)
        bit = (<u64> 1) << site
        pivot = -1
        for r in range(rank, n):
            if (wz[r] if use_z else wx[r]) & bit:
                pivot = r
                break
        if pivot < 0:
            continue
        if pivot != rank:
            tmp = wx[rank]; wx[rank] = wx[pivot]; wx[pivot] = tmp
            tmp = wz[rank]; wz[rank] = wz[pivot]; wz[pivot] = tmp
            tmpi = ph[rank]; ph[rank] = ph[pivot]; ph[pivot] = tmpi
        xp = wx[rank]
        zp = wz[rank]
        pp = ph[rank]
        for r in range(n):
            if r == rank:
                continue
            if not ((wz[r] if use_z else wx[r]) & bit):
                continue
            delta = _mul_phase(wx[r], wz[r], xp, zp)
            wx[r] ^= xp
            wz[r] ^= zp
            ph[r] = (ph[r] + pp + delta) & 3
        pivots.append(order_pos)
        rank += 1

    for i in range(n):
        xs[i] = wx[i]
        zs[i] = wz[i]
        phases[i] = ph[i]
    free(wx); free(wz); free(ph); free(cc)
    return rank, pivots
