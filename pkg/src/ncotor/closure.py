"""Non-crossing complements, closed configurations, frames, enumeration.

For a set S of n-diagonals, nc(S) collects every n-diagonal crossing no
member of S.  The map is antitone and nc(nc(-)) is a closure operator; the
fixed points of nc(nc(-)) are the "closed" sets, each of which pairs with its
complement nc(S) (itself closed) to form a completed pair.  Sets fixed by nc
itself - the maximal non-crossing configurations - play the role of
cluster-tilting configurations.
"""

from __future__ import annotations

import functools
from typing import Iterator

from . import kernels
from .errors import NotClosed, SpecMismatch
from .polygon import (
    DiagSet,
    Diagonal,
    PolygonSpec,
    crossing,
    diagonal,
    diagonal_rank,
    is_n_diagonal,
    n_diagonals,
)


@functools.lru_cache(maxsize=None)
def _mask_table(spec: PolygonSpec) -> tuple[tuple[int, ...], int]:
    """Per-diagonal masks of non-crossing partners, plus the full-universe mask.

    Bit j of masks[i] is set iff diagonal j does not cross diagonal i (every
    diagonal is non-crossing with itself).
    """
    diags = n_diagonals(spec)
    d = len(diags)
    masks = []
    for i in range(d):
        m = 0
        for j in range(d):
            if not crossing(spec, diags[i], diags[j]):
                m |= 1 << j
        masks.append(m)
    return tuple(masks), (1 << d) - 1


def non_crossing(s: DiagSet) -> DiagSet:
    """nc(S): every n-diagonal of the spec crossing no member of S.

    nc(empty) is the full set of n-diagonals; nc is antitone, and S is always
    contained in nc(nc(S)).
    """
    masks, full = _mask_table(s.spec)
    return DiagSet(s.spec, kernels.nc_bits(masks, full, s.bits))


def nc_closure(s: DiagSet) -> DiagSet:
    """nc(nc(S)): the closure of S (extensive, monotone, idempotent)."""
    masks, full = _mask_table(s.spec)
    return DiagSet(s.spec, kernels.closure_bits(masks, full, s.bits))


def is_closed(s: DiagSet) -> bool:
    """True when S equals its own double complement."""
    return nc_closure(s).bits == s.bits


def cotorsion_pair(s: DiagSet) -> tuple[DiagSet, DiagSet]:
    """The completed pair (S, nc(S)) for a closed S; rejects non-closed input.

    The partner nc(S) is closed as well, and nc(nc(S)) == S recovers the
    first component.
    """
    if not is_closed(s):
        raise NotClosed(f"{s.text()} is not closed over {s.spec}")
    return s, non_crossing(s)


def frame(s: DiagSet) -> DiagSet:
    """S ∩ nc(S): the members of S crossing no other member.

    The frame is pairwise non-crossing; for closed S it is also the frame of
    the partner nc(S).
    """
    return s & non_crossing(s)


@functools.lru_cache(maxsize=None)
def _ptolemy_table(spec: PolygonSpec) -> tuple[tuple[int, int], ...]:
    """For each crossing pair (as a 2-bit pattern), the required connector bits.

    Connectors of a crossing pair are the chords joining an endpoint of one
    member to an endpoint of the other; only those that are n-diagonals
    impose membership requirements.
    """
    diags = n_diagonals(spec)
    rows = []
    for i in range(len(diags)):
        for j in range(i + 1, len(diags)):
            u, v = diags[i], diags[j]
            if not crossing(spec, u, v):
                continue
            required = 0
            for p in (u.a, u.b):
                for q in (v.a, v.b):
                    try:
                        c = diagonal(spec, p, q)
                    except Exception:
                        continue  # edge or degenerate: no constraint
                    if is_n_diagonal(spec, c):
                        required |= 1 << diagonal_rank(spec, c)
            rows.append((1 << i | 1 << j, required))
    return tuple(rows)


def is_ptolemy(s: DiagSet) -> bool:
    """True when every crossing pair inside S has all its n-diagonal connectors in S.

    Closed sets always satisfy this; the converse holds when n == 1 but fails
    in general.
    """
    bits = s.bits
    for pair_bits, required in _ptolemy_table(s.spec):
        if bits & pair_bits == pair_bits and required & ~bits:
            return False
    return True


def closed_sets(spec: PolygonSpec, *, limit: int | None = None) -> Iterator[DiagSet]:
    """Yield every closed set exactly once, in lectic order.

    Walks the closure lattice with next-closure stepping; the caller controls
    termination (or passes `limit`).  The empty set's closure comes first and
    the full set (always closed) comes last.
    """
    masks, full = _mask_table(spec)
    count = 0
    bits = kernels.closure_bits(masks, full, 0)
    while bits != -1:
        if limit is not None and count >= limit:
            return
        yield DiagSet(spec, bits)
        count += 1
        bits = kernels.next_closed(masks, full, bits)


def cluster_tilting_sets(spec: PolygonSpec) -> Iterator[DiagSet]:
    """Yield the sets fixed by nc itself: maximal pairwise non-crossing sets.

    Every such set is closed, so this filters the closed-set stream.
    """
    masks, full = _mask_table(spec)
    for s in closed_sets(spec):
        if kernels.nc_bits(masks, full, s.bits) == s.bits:
            yield s


class Configuration:
    """A candidate closed configuration with lazily cached derived data.

    Caches populate on first use and are never invalidated; instances are
    treated as immutable values.
    """

    __slots__ = ("members", "_nc", "_frame", "_closed")

    def __init__(self, members: DiagSet):
        self.members = members
        self._nc: DiagSet | None = None
        self._frame: DiagSet | None = None
        self._closed: bool | None = None

    @property
    def spec(self) -> PolygonSpec:
        return self.members.spec

    @property
    def nc_set(self) -> DiagSet:
        if self._nc is None:
            self._nc = non_crossing(self.members)
        return self._nc

    @property
    def frame_set(self) -> DiagSet:
        if self._frame is None:
            self._frame = self.members & self.nc_set
        return self._frame

    @property
    def closed(self) -> bool:
        if self._closed is None:
            self._closed = is_closed(self.members)
        return self._closed

    def __eq__(self, other) -> bool:
        return isinstance(other, Configuration) and self.members == other.members

    def __hash__(self) -> int:
        return hash(("Configuration", self.members))

    def __repr__(self) -> str:
        return f"Configuration({self.members.spec}, {self.members.text()})"
