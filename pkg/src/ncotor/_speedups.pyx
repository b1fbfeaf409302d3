# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: closure stepping and the brute-force oracle scan.

Drop-in twins of ncotor._pykernels for up to 64 diagonals (bit patterns fit
one machine word); ncotor.kernels routes larger instances to the pure module.
The oracle scan keeps its independence from the engine here too: it works on
raw endpoint arrays with an inline interleaving test and never touches the
non-crossing mask tables.
"""

from libc.stdint cimport uint64_t


cdef inline uint64_t _nc64(uint64_t* masks, int d, uint64_t full, uint64_t bits):
    cdef uint64_t acc = full
    cdef int i = 0
    while bits:
        if bits & 1:
            acc &= masks[i]
        bits >>= 1
        i += 1
    return acc


cdef int _load_masks(object masks, uint64_t* cmasks) except -1:
    cdef int d = len(masks)
    if d > 64:
        raise ValueError("compiled kernels handle at most 64 diagonals")
    cdef int i
    for i in range(d):
        cmasks[i] = masks[i]
    return d


def nc_bits(masks, full, bits):
    """Intersection of the non-crossing masks of every member of `bits`."""
    cdef uint64_t cmasks[64]
    cdef int d = _load_masks(masks, cmasks)
    return _nc64(cmasks, d, <uint64_t> full, <uint64_t> bits)


def closure_bits(masks, full, bits):
    """Double non-crossing complement of `bits`."""
    cdef uint64_t cmasks[64]
    cdef int d = _load_masks(masks, cmasks)
    cdef uint64_t f = <uint64_t> full
    return _nc64(cmasks, d, f, _nc64(cmasks, d, f, <uint64_t> bits))


def next_closed(masks, full, prev):
    """Lectically next closed set strictly after `prev`, or -1 when exhausted."""
    cdef uint64_t cmasks[64]
    cdef int d = _load_masks(masks, cmasks)
    cdef uint64_t f = <uint64_t> full
    cdef uint64_t p = <uint64_t> prev
    cdef uint64_t bit, below, candidate
    cdef int i
    for i in range(d - 1, -1, -1):
        bit = (<uint64_t> 1) << i
        if p & bit:
            continue
        below = bit - 1
        candidate = _nc64(cmasks, d, f, _nc64(cmasks, d, f, (p & below) | bit))
        if (candidate & below) == (p & below):
            return candidate
    return -1


def brute_fixed_points(avec, bvec):
    """All subsets fixed by the double non-crossing complement, by raw scan.

    Quadratic interleaving test per complement, no precomputed tables.
    """
    cdef int d = len(avec)
    if d > 30:
        raise ValueError("oracle scan above 2^30 subsets is never budgeted")
    cdef int ca[64]
    cdef int cb[64]
    cdef int i
    for i in range(d):
        ca[i] = avec[i]
        cb[i] = bvec[i]

    out = []
    cdef uint64_t s, t, w
    cdef uint64_t end = (<uint64_t> 1) << d
    for s in range(end):
        t = _brute_nc(ca, cb, d, s)
        w = _brute_nc(ca, cb, d, t)
        if w == s:
            out.append(s)
    return out


cdef inline uint64_t _brute_nc(int* ca, int* cb, int d, uint64_t s):
    cdef uint64_t t = 0
    cdef int u, v, au, bu, av, bv
    cdef uint64_t rest
    cdef bint keep
    for u in range(d):
        au = ca[u]
        bu = cb[u]
        rest = s
        keep = True
        v = 0
        while rest:
            if rest & 1:
                av = ca[v]
                bv = cb[v]
                if (au < av and av < bu and bu < bv) or (av < au and au < bv and bv < bu):
                    keep = False
                    break
            rest >>= 1
            v += 1
        if keep:
            t |= (<uint64_t> 1) << u
    return t
