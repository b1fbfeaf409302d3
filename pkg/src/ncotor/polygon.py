"""Polygon substrate: labelled vertices, n-diagonals, crossing, translation, cells.

The ambient object is a convex polygon with N = n*(m+1) + 2 vertices labelled
1..N clockwise.  A chord (a, b) is an *n-diagonal* when the label difference
along either boundary arc is congruent to 1 mod n; cutting along a pairwise
non-crossing family of n-diagonals decomposes the polygon into cells whose
vertex counts are again congruent to 2 mod n, so each cell is a scaled-down
copy of the same kind of polygon.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import (
    CrossingCutSet,
    InvalidDiagonal,
    InvalidSpec,
    NotNDiagonal,
    SpecMismatch,
)


@dataclass(frozen=True)
class PolygonSpec:
    """Ambient polygon parameters: arc residue n >= 1 and size parameter m >= 1."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if not (isinstance(self.n, int) and isinstance(self.m, int)):
            raise InvalidSpec(f"spec parameters must be integers, got ({self.n!r}, {self.m!r})")
        if self.n < 1 or self.m < 1:
            raise InvalidSpec(f"require n >= 1 and m >= 1, got n={self.n}, m={self.m}")

    @property
    def N(self) -> int:
        """Number of polygon vertices."""
        return self.n * (self.m + 1) + 2

    def __str__(self) -> str:
        return f"spec({self.n},{self.m})"


def make_spec(n: int, m: int) -> PolygonSpec:
    return PolygonSpec(n, m)


class Diagonal(NamedTuple):
    """A normalized chord: 1 <= a < b <= N and 2 <= b - a <= N - 2.

    Normalization excludes polygon edges, including the wrap edge (1, N).
    """

    a: int
    b: int

    def __str__(self) -> str:
        return f"({self.a},{self.b})"


def normalize_vertex(spec: PolygonSpec, label: int) -> int:
    """Map an arbitrary integer label into 1..N, respecting the cyclic order."""
    return (label - 1) % spec.N + 1


def diagonal(spec: PolygonSpec, x: int, y: int) -> Diagonal:
    """Build the normalized Diagonal through vertices x and y.

    Labels outside 1..N are reduced cyclically.  Rejects vertex pairs that
    coincide or are adjacent on the boundary (those are edges, not diagonals).
    """
    a = normalize_vertex(spec, x)
    b = normalize_vertex(spec, y)
    if a > b:
        a, b = b, a
    if a == b:
        raise InvalidDiagonal(f"({x},{y}) collapses to a single vertex of {spec}")
    if b - a < 2 or b - a > spec.N - 2:
        raise InvalidDiagonal(f"({x},{y}) is a boundary edge of {spec}, not a diagonal")
    return Diagonal(a, b)


def is_n_diagonal(spec: PolygonSpec, d: Diagonal) -> bool:
    """True when the arc difference of d is congruent to 1 mod n.

    The complementary arc has difference N - (b - a) == 1 mod n automatically,
    because N == 2 mod n.
    """
    return (d.b - d.a) % spec.n == 1 % spec.n


@functools.lru_cache(maxsize=None)
def n_diagonals(spec: PolygonSpec) -> tuple[Diagonal, ...]:
    """Every n-diagonal of the spec, in lexicographic order of (a, b).

    The position of a diagonal in this tuple is its rank; together the
    n-diagonals number N*m/2.
    """
    N, n = spec.N, spec.n
    out: list[Diagonal] = []
    for a in range(1, N + 1):
        for b in range(a + 2, min(N, a + N - 2) + 1):
            if (b - a) % n == 1 % n:
                out.append(Diagonal(a, b))
    return tuple(out)


@functools.lru_cache(maxsize=None)
def _rank_table(spec: PolygonSpec) -> dict[Diagonal, int]:
    return {d: i for i, d in enumerate(n_diagonals(spec))}


def diagonal_rank(spec: PolygonSpec, d: Diagonal) -> int:
    """Rank of d among the spec's n-diagonals; rejects other chords."""
    rank = _rank_table(spec).get(d)
    if rank is None:
        raise NotNDiagonal(f"{d} is not an n-diagonal of {spec}")
    return rank


def rank_to_diagonal(spec: PolygonSpec, rank: int) -> Diagonal:
    diags = n_diagonals(spec)
    if not 0 <= rank < len(diags):
        raise IndexError(f"rank {rank} out of range 0..{len(diags) - 1} for {spec}")
    return diags[rank]


def crossing(spec: PolygonSpec, u: Diagonal, v: Diagonal) -> bool:
    """True iff u and v cross in the polygon interior.

    With both chords normalized, crossing is exactly strict interleaving of
    the endpoint labels; chords sharing an endpoint never cross, and no chord
    crosses itself.
    """
    return u.a < v.a < u.b < v.b or v.a < u.a < v.b < u.b


def tau(spec: PolygonSpec, d: Diagonal) -> Diagonal:
    """Translate d by -n: both endpoints move n steps counterclockwise.

    Applying tau N/gcd(N, n) times is the identity.  Every n-diagonal crosses
    its own translate.
    """
    return diagonal(spec, d.a - spec.n, d.b - spec.n)


def tau_inverse(spec: PolygonSpec, d: Diagonal) -> Diagonal:
    """Translate d by +n (inverse of tau)."""
    return diagonal(spec, d.a + spec.n, d.b + spec.n)


class DiagSet:
    """Immutable set of n-diagonals over one spec, bit-indexed by rank.

    Bit i of `bits` is the rank-i diagonal of the spec.  Equality and hashing
    include the spec, so sets over different polygons never compare equal.
    """

    __slots__ = ("spec", "bits")

    def __init__(self, spec: PolygonSpec, bits: int):
        total = len(n_diagonals(spec))
        if not 0 <= bits < (1 << total):
            raise InvalidDiagonal(f"bit pattern {bits:#x} out of range for {spec}")
        object.__setattr__(self, "spec", spec)
        object.__setattr__(self, "bits", bits)

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("DiagSet is immutable")

    @classmethod
    def empty(cls, spec: PolygonSpec) -> "DiagSet":
        return cls(spec, 0)

    @classmethod
    def full(cls, spec: PolygonSpec) -> "DiagSet":
        return cls(spec, (1 << len(n_diagonals(spec))) - 1)

    @classmethod
    def from_diagonals(cls, spec: PolygonSpec, diags: Iterable) -> "DiagSet":
        """Build from Diagonal instances or raw (x, y) pairs; validates each."""
        bits = 0
        for item in diags:
            if isinstance(item, Diagonal):
                d = diagonal(spec, item.a, item.b)
            else:
                x, y = item
                d = diagonal(spec, x, y)
            if not is_n_diagonal(spec, d):
                raise NotNDiagonal(f"{d} is not an n-diagonal of {spec}")
            bits |= 1 << diagonal_rank(spec, d)
        return cls(spec, bits)

    def ranks(self) -> Iterator[int]:
        bits = self.bits
        while bits:
            low = bits & -bits
            yield low.bit_length() - 1
            bits ^= low

    def __iter__(self) -> Iterator[Diagonal]:
        diags = n_diagonals(self.spec)
        for r in self.ranks():
            yield diags[r]

    def pairs(self) -> list[tuple[int, int]]:
        """Members as plain (a, b) tuples, in rank order."""
        return [(d.a, d.b) for d in self]

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, d: Diagonal) -> bool:
        rank = _rank_table(self.spec).get(Diagonal(*d))
        return rank is not None and self.bits >> rank & 1 == 1

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DiagSet)
            and self.spec == other.spec
            and self.bits == other.bits
        )

    def __hash__(self) -> int:
        return hash((self.spec, self.bits))

    def _check_spec(self, other: "DiagSet") -> None:
        if self.spec != other.spec:
            raise SpecMismatch(f"cannot combine sets over {self.spec} and {other.spec}")

    def __or__(self, other: "DiagSet") -> "DiagSet":
        self._check_spec(other)
        return DiagSet(self.spec, self.bits | other.bits)

    def __and__(self, other: "DiagSet") -> "DiagSet":
        self._check_spec(other)
        return DiagSet(self.spec, self.bits & other.bits)

    def __sub__(self, other: "DiagSet") -> "DiagSet":
        self._check_spec(other)
        return DiagSet(self.spec, self.bits & ~other.bits)

    def issubset(self, other: "DiagSet") -> bool:
        self._check_spec(other)
        return self.bits & ~other.bits == 0

    __le__ = issubset

    def text(self) -> str:
        """Canonical text form: members in rank order, e.g. {(1,4),(1,6)}."""
        return "{" + ",".join(str(d) for d in self) + "}"

    def __repr__(self) -> str:
        return f"DiagSet({self.spec}, {self.text()})"


@dataclass(frozen=True)
class Cell:
    """One region cut out by a non-crossing family of n-diagonals.

    `vertices` lists the ambient labels in clockwise boundary order, starting
    from the smallest label.  The vertex count is congruent to 2 mod n, so a
    non-trivial cell hosts n-diagonals of its own (a trivial one is too small).
    """

    spec: PolygonSpec
    vertices: tuple[int, ...]

    def __post_init__(self) -> None:
        s = len(self.vertices)
        if s < 3:
            raise InvalidSpec(f"cell needs at least 3 vertices, got {self.vertices}")
        if len(set(self.vertices)) != s:
            raise InvalidSpec(f"cell vertices repeat: {self.vertices}")
        if s % self.spec.n != 2 % self.spec.n:
            raise InvalidSpec(
                f"cell size {s} is not 2 mod {self.spec.n}: {self.vertices}"
            )

    @property
    def size(self) -> int:
        return len(self.vertices)

    @property
    def is_trivial(self) -> bool:
        """True when the cell is too small to contain any n-diagonal."""
        return self.size < self.spec.n + 3

    def position(self, label: int) -> int:
        """Index of an ambient vertex label within this cell (0-based)."""
        try:
            return self.vertices.index(label)
        except ValueError:
            raise InvalidDiagonal(f"vertex {label} is not on cell {self.vertices}") from None

    def contains_diagonal(self, d: Diagonal) -> bool:
        """True when d runs through this cell's interior (not along an edge)."""
        vs = set(self.vertices)
        if d.a not in vs or d.b not in vs:
            return False
        gap = (self.position(d.b) - self.position(d.a)) % self.size
        return gap not in (1, self.size - 1)

    def ambient_of_local(self, d: Diagonal) -> Diagonal:
        """Map a diagonal of the cell-local polygon back to ambient labels."""
        return diagonal(self.spec, self.vertices[d.a - 1], self.vertices[d.b - 1])

    def local_of_ambient(self, d: Diagonal) -> Diagonal:
        """Relabel an ambient diagonal inside this cell to local labels 1..size."""
        p, q = self.position(d.a) + 1, self.position(d.b) + 1
        if p > q:
            p, q = q, p
        return Diagonal(p, q)


def cell_spec(cell: Cell) -> PolygonSpec | None:
    """Spec of the cell-local polygon, or None for a trivial cell."""
    if cell.is_trivial:
        return None
    return PolygonSpec(cell.spec.n, (cell.size - 2) // cell.spec.n - 1)


@dataclass(frozen=True)
class CellDecomposition:
    """The |cut|+1 cells obtained by slicing the polygon along a cut set."""

    spec: PolygonSpec
    cut: "DiagSet"
    cells: tuple[Cell, ...]

    def cell_containing(self, d: Diagonal) -> Cell:
        """The unique cell whose interior carries d; rejects cut members."""
        for cell in self.cells:
            if cell.contains_diagonal(d):
                return cell
        raise InvalidDiagonal(
            f"{d} does not lie inside any cell of the cut {self.cut.text()}"
        )


def cell_decomposition(spec: PolygonSpec, cut: DiagSet) -> CellDecomposition:
    """Slice the polygon along a pairwise non-crossing cut set.

    Yields len(cut) + 1 cells, sorted by smallest vertex label.  Every cut
    member becomes an edge of exactly two cells; every polygon edge belongs
    to exactly one cell.  Rejects cut sets containing a crossing pair.
    """
    if cut.spec != spec:
        raise SpecMismatch(f"cut set over {cut.spec}, expected {spec}")
    members = list(cut)
    for i in range(len(members)):
        for j in range(i + 1, len(members)):
            if crossing(spec, members[i], members[j]):
                raise CrossingCutSet(
                    f"cut members {members[i]} and {members[j]} cross"
                )

    cells: list[tuple[int, ...]] = [tuple(range(1, spec.N + 1))]
    for d in members:
        for idx, cell in enumerate(cells):
            if d.a in cell and d.b in cell:
                i, j = cell.index(d.a), cell.index(d.b)
                if i > j:
                    i, j = j, i
                # non-crossing family: endpoints are non-adjacent in exactly
                # one current cell, so this split fires exactly once per d
                first = cell[i : j + 1]
                second = cell[j:] + cell[: i + 1]
                cells[idx : idx + 1] = [first, second]
                break
        else:  # pragma: no cover - unreachable for validated cut sets
            raise InvalidDiagonal(f"cut member {d} not locatable in any cell")

    def start_at_min(vs: tuple[int, ...]) -> tuple[int, ...]:
        k = vs.index(min(vs))
        return vs[k:] + vs[:k]

    ordered = sorted((start_at_min(vs) for vs in cells), key=lambda vs: vs[0])
    return CellDecomposition(spec, cut, tuple(Cell(spec, vs) for vs in ordered))
