"""Pure-Python kernels: closure stepping and the brute-force oracle scan.

This module mirrors the compiled ncotor._speedups extension; ncotor.kernels
picks between the two at call time.  These versions work with arbitrary-size
Python ints, so they carry no limit on the number of diagonals.

The two halves are deliberately independent of each other: the closure
walkers consume precomputed non-crossing masks from the fast engine, while
`brute_fixed_points` re-derives everything from raw endpoint arrays with an
inline interleaving test (no mask tables, no lattice walk) so that it can
serve as an oracle for the engine.
"""

from __future__ import annotations

# ---------------------------------------------------------------- fast engine


def nc_bits(masks: tuple[int, ...], full: int, bits: int) -> int:
    """Intersection of the non-crossing masks of every member of `bits`."""
    acc = full
    while bits:
        low = bits & -bits
        acc &= masks[low.bit_length() - 1]
        if not acc:
            return 0
        bits ^= low
    return acc


def closure_bits(masks: tuple[int, ...], full: int, bits: int) -> int:
    """Double non-crossing complement of `bits`."""
    return nc_bits(masks, full, nc_bits(masks, full, bits))


def next_closed(masks: tuple[int, ...], full: int, prev: int) -> int:
    """Lectically next closed set strictly after `prev`, or -1 when exhausted.

    Standard next-closure stepping: try to flip each absent bit i from the
    highest down, close the prefix below i together with i, and accept the
    first candidate that introduces nothing new below i.
    """
    for i in range(len(masks) - 1, -1, -1):
        bit = 1 << i
        if prev & bit:
            continue
        below = bit - 1
        candidate = closure_bits(masks, full, (prev & below) | bit)
        if candidate & below == prev & below:
            return candidate
    return -1


# ------------------------------------------------------------- oracle kernel


def brute_fixed_points(avec: list[int], bvec: list[int]) -> list[int]:
    """All subsets fixed by the double non-crossing complement, by raw scan.

    Subsets are bit patterns over the given diagonal order (avec[i], bvec[i]
    are the normalized endpoints of diagonal i).  Every complement is computed
    from scratch with a quadratic interleaving test.
    """
    d = len(avec)
    out = []
    for s in range(1 << d):
        t = _brute_nc(avec, bvec, d, s)
        if _brute_nc(avec, bvec, d, t) == s:
            out.append(s)
    return out


def _brute_nc(avec: list[int], bvec: list[int], d: int, s: int) -> int:
    t = 0
    for u in range(d):
        au, bu = avec[u], bvec[u]
        rest = s
        keep = True
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            av, bv = avec[v], bvec[v]
            if au < av < bu < bv or av < au < bv < bu:
                keep = False
                break
        if keep:
            t |= 1 << u
    return t
