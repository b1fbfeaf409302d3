"""Translation quiver of the n-diagonals, and cut-relative subfactor models.

Vertices are the n-diagonals.  Arrows connect (a, b) to the cyclic
normalizations of (a, b+n) and (a+n, b) whenever the target is again an
n-diagonal; tau edges record the -n translation.  Cutting along a pairwise
non-crossing set D produces cell models whose diagonal sets jointly account
for everything compatible with D, giving a product decomposition of the
closed sets containing D in their frame.
"""

from __future__ import annotations

from dataclasses import dataclass

from .closure import closed_sets, frame, is_closed
from .errors import CutCrossesMembers, InputError, SpecMismatch
from .polygon import (
    Cell,
    DiagSet,
    Diagonal,
    PolygonSpec,
    cell_decomposition,
    cell_spec,
    crossing,
    diagonal,
    is_n_diagonal,
    n_diagonals,
    tau,
)


@dataclass(frozen=True)
class QuiverVertex:
    """An n-diagonal with its mesh coordinates.

    row = (b - a - 1)/n, in 1..m; column = a + b - (n+3), the mesh
    x-coordinate: both arrow families advance it by n, and a tau step
    retreats it by 2n whenever no label wraps past vertex 1.
    """

    diagonal: Diagonal
    row: int
    column: int


@dataclass(frozen=True)
class Quiver:
    spec: PolygonSpec
    vertices: tuple[QuiverVertex, ...]
    arrows: tuple[tuple[Diagonal, Diagonal], ...]
    tau_edges: tuple[tuple[Diagonal, Diagonal], ...]

    def vertex(self, d: Diagonal) -> QuiverVertex:
        for v in self.vertices:
            if v.diagonal == d:
                return v
        raise InputError(f"{d} is not a vertex of the quiver over {self.spec}")

    def arrows_from(self, d: Diagonal) -> list[Diagonal]:
        return [t for (s, t) in self.arrows if s == d]


def shift_by_n(spec: PolygonSpec, d: Diagonal) -> Diagonal:
    """The tau translate of d (both labels shifted by -n)."""
    return tau(spec, d)


def ar_quiver(spec: PolygonSpec) -> Quiver:
    """Build the translation quiver on all n-diagonals of the spec.

    Arrow targets that normalize to boundary edges are skipped.  The vertex
    (1, n+2) sits at column 0, row 1.
    """
    verts = []
    arrows = []
    tau_edges = []
    for d in n_diagonals(spec):
        verts.append(
            QuiverVertex(
                diagonal=d,
                row=(d.b - d.a - 1) // spec.n,
                column=d.a + d.b - (spec.n + 3),
            )
        )
        for (x, y) in ((d.a, d.b + spec.n), (d.a + spec.n, d.b)):
            try:
                t = diagonal(spec, x, y)
            except Exception:
                continue
            if is_n_diagonal(spec, t):
                arrows.append((d, t))
        tau_edges.append((d, tau(spec, d)))
    return Quiver(spec, tuple(verts), tuple(arrows), tuple(tau_edges))


@dataclass(frozen=True)
class SubfactorPart:
    """One cell of the cut, together with its own polygon model (None if trivial)."""

    cell: Cell
    spec: PolygonSpec | None


@dataclass(frozen=True)
class SubfactorImage:
    """Cut-relative decomposition with both transport directions.

    `restrict` sends an ambient set compatible with the cut to its tuple of
    cell-local sets; `induce` rebuilds the ambient set (cut included) from
    such a tuple.  The two are mutually inverse on compatible sets.
    """

    ambient: PolygonSpec
    cut: DiagSet
    parts: tuple[SubfactorPart, ...]

    def restrict(self, s: DiagSet) -> tuple[DiagSet | None, ...]:
        """Cell-local images of the members of s outside the cut.

        Requires the cut to be contained in s and no member to cross the cut.
        Trivial parts (no local spec) contribute None.
        """
        if s.spec != self.ambient:
            raise SpecMismatch(f"set over {s.spec}, decomposition over {self.ambient}")
        if not self.cut.issubset(s):
            raise InputError(f"restrict requires the cut {self.cut.text()} inside the set")
        offending = [
            d for d in s - self.cut
            if any(crossing(self.ambient, d, c) for c in self.cut)
        ]
        if offending:
            raise CutCrossesMembers(
                "members cross the cut set: " + ",".join(str(d) for d in offending)
            )
        locals_: list[DiagSet | None] = []
        for part in self.parts:
            if part.spec is None:
                locals_.append(None)
                continue
            inside = [
                part.cell.local_of_ambient(d)
                for d in s - self.cut
                if part.cell.contains_diagonal(d)
            ]
            locals_.append(DiagSet.from_diagonals(part.spec, inside))
        return tuple(locals_)

    def induce(self, locals_: tuple[DiagSet | None, ...]) -> DiagSet:
        """Ambient set generated by cell-local sets: their images plus the cut."""
        if len(locals_) != len(self.parts):
            raise InputError(
                f"expected {len(self.parts)} cell-local sets, got {len(locals_)}"
            )
        out = self.cut
        for part, local in zip(self.parts, locals_):
            if part.spec is None:
                if local is not None and len(local):
                    raise InputError("trivial cell cannot carry diagonals")
                continue
            if local is None:
                continue
            if local.spec != part.spec:
                raise SpecMismatch(
                    f"cell-local set over {local.spec}, cell model over {part.spec}"
                )
            out = out | DiagSet.from_diagonals(
                self.ambient, (part.cell.ambient_of_local(d) for d in local)
            )
        return out


def subfactor_decompose(spec: PolygonSpec, cut: DiagSet) -> SubfactorImage:
    """Decompose the ambient polygon along a pairwise non-crossing cut set."""
    decomposition = cell_decomposition(spec, cut)
    parts = tuple(
        SubfactorPart(cell=cell, spec=cell_spec(cell)) for cell in decomposition.cells
    )
    return SubfactorImage(ambient=spec, cut=cut, parts=parts)


@dataclass(frozen=True)
class SubfactorReport:
    """Outcome of the exhaustive product-decomposition check for one cut."""

    ambient: PolygonSpec
    cut: tuple[tuple[int, int], ...]
    ambient_count: int
    local_counts: tuple[int, ...]
    mismatches: tuple[str, ...]

    @property
    def product(self) -> int:
        p = 1
        for c in self.local_counts:
            p *= c
        return p

    @property
    def ok(self) -> bool:
        return not self.mismatches and self.ambient_count == self.product


def subfactor_bijection_check(spec: PolygonSpec, cut: DiagSet) -> SubfactorReport:
    """Exhaustively verify the product decomposition of closed sets over a cut.

    Ambient side: closed sets whose frame contains the cut.  Local side: the
    product of the closed sets of each non-trivial cell model.  Checks that
    restrict is a bijection between the two, with induce as its inverse.
    """
    image = subfactor_decompose(spec, cut)
    ambient_side = [
        s for s in closed_sets(spec)
        if cut.issubset(s) and cut.issubset(frame(s))
    ]
    mismatches: list[str] = []

    local_universes: list[list[DiagSet] | None] = []
    for part in image.parts:
        if part.spec is None:
            local_universes.append(None)
        else:
            local_universes.append(list(closed_sets(part.spec)))

    seen: set[tuple] = set()
    for s in ambient_side:
        locals_ = image.restrict(s)
        key = tuple(None if l is None else l.bits for l in locals_)
        if key in seen:
            mismatches.append(f"restrict not injective at {s.text()}")
        seen.add(key)
        for part, local in zip(image.parts, locals_):
            if local is not None and not is_closed(local):
                mismatches.append(
                    f"restrict of {s.text()} not closed in cell {part.cell.vertices}"
                )
        if image.induce(locals_) != s:
            mismatches.append(f"induce(restrict) differs at {s.text()}")

    def combos(i: int, acc: list[DiagSet | None]):
        if i == len(local_universes):
            yield tuple(acc)
            return
        u = local_universes[i]
        if u is None:
            yield from combos(i + 1, acc + [None])
        else:
            for cand in u:
                yield from combos(i + 1, acc + [cand])

    ambient_keys = {tuple(None if l is None else l.bits for l in image.restrict(s))
                    for s in ambient_side}
    for combo in combos(0, []):
        induced = image.induce(combo)
        if not is_closed(induced):
            mismatches.append("induce of a local combination is not closed: "
                              + induced.text())
            continue
        if not cut.issubset(frame(induced)):
            mismatches.append("induce of a local combination drops the cut from "
                              "the frame: " + induced.text())
            continue
        key = tuple(None if l is None else l.bits for l in combo)
        if key not in ambient_keys:
            mismatches.append("local combination missed by restrict: "
                              + induced.text())

    return SubfactorReport(
        ambient=spec,
        cut=tuple(cut.pairs()),
        ambient_count=len(ambient_side),
        local_counts=tuple(
            len(u) for u in local_universes if u is not None
        ),
        mismatches=tuple(mismatches),
    )
