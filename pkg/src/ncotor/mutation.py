"""Cut-relative rotation of configurations.

Fixing a pairwise non-crossing cut set D, every other diagonal lies inside
exactly one cell of the decomposition along D; rotating each such diagonal
one n-step inside its own cell (and keeping D itself pointwise fixed) sends
closed sets to closed sets and transports frames to frames.  With an empty
cut this degenerates to the global whole-polygon rotation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .closure import Configuration
from .errors import (
    CutCrossesMembers,
    InputError,
    NotClosed,
    NotInFrame,
    SpecMismatch,
    VerificationFailure,
)
from .polygon import (
    Cell,
    DiagSet,
    Diagonal,
    PolygonSpec,
    cell_decomposition,
    crossing,
    diagonal,
)

Direction = Literal["backward", "forward"]

_SHIFT = {"backward": -1, "forward": +1}


def _check_direction(direction: str) -> None:
    if direction not in _SHIFT:
        raise InputError(f"direction must be 'backward' or 'forward', got {direction!r}")


def rotate_polygon(spec: PolygonSpec, d: Diagonal, direction: Direction = "backward") -> Diagonal:
    """Rotate a diagonal n vertex steps around the whole polygon.

    "backward" moves both endpoints counterclockwise (label - n), matching
    tau; "forward" is the inverse.
    """
    _check_direction(direction)
    shift = _SHIFT[direction] * spec.n
    return diagonal(spec, d.a + shift, d.b + shift)


def rotate_in_cell(cell: Cell, d: Diagonal, direction: Direction = "backward") -> Diagonal:
    """Rotate a diagonal n positions along its cell's boundary.

    Positions are indices into the cell's clockwise vertex tuple; the image
    is returned as a normalized ambient diagonal and is again an n-diagonal
    lying inside the same cell.
    """
    _check_direction(direction)
    if not cell.contains_diagonal(d):
        raise InputError(f"{d} is not an interior diagonal of cell {cell.vertices}")
    s = cell.size
    shift = _SHIFT[direction] * cell.spec.n
    pa = (cell.position(d.a) + shift) % s
    pb = (cell.position(d.b) + shift) % s
    return diagonal(cell.spec, cell.vertices[pa], cell.vertices[pb])


def rotate_set(s: DiagSet, cut: DiagSet, direction: Direction = "backward") -> DiagSet:
    """Rotate every member of S outside the cut inside its cell; keep the cut.

    Rejects sets whose members cross the cut (they would not lie in any
    cell).  Preserves cardinality.
    """
    _check_direction(direction)
    if s.spec != cut.spec:
        raise SpecMismatch(f"set over {s.spec} but cut over {cut.spec}")
    decomposition = cell_decomposition(s.spec, cut)
    offending = [
        d for d in s - cut
        if any(crossing(s.spec, d, c) for c in cut)
    ]
    if offending:
        raise CutCrossesMembers(
            "members cross the cut set: " + ",".join(str(d) for d in offending)
        )
    moved = [rotate_in_cell(decomposition.cell_containing(d), d, direction)
             for d in s - cut]
    out = DiagSet.from_diagonals(s.spec, moved) | cut
    assert len(out) == len(s), "cell rotation must preserve cardinality"
    return out


def movement_map(s: DiagSet, cut: DiagSet, direction: Direction = "backward") -> dict[Diagonal, Diagonal]:
    """Where each member of S goes under rotate_set (cut members stay put)."""
    _check_direction(direction)
    decomposition = cell_decomposition(s.spec, cut)
    out: dict[Diagonal, Diagonal] = {d: d for d in s & cut}
    for d in s - cut:
        out[d] = rotate_in_cell(decomposition.cell_containing(d), d, direction)
    return out


@dataclass(frozen=True)
class MutationStep:
    """A validated mutation request: a pairwise non-crossing cut plus a direction."""

    cut: DiagSet
    direction: Direction = "backward"

    def __post_init__(self) -> None:
        _check_direction(self.direction)
        members = list(self.cut)
        for i in range(len(members)):
            for j in range(i + 1, len(members)):
                if crossing(self.cut.spec, members[i], members[j]):
                    raise InputError(
                        f"cut members {members[i]} and {members[j]} cross"
                    )


@dataclass(frozen=True)
class MutationRecord:
    """One applied mutation: configurations before and after, plus the step."""

    before: Configuration
    step: MutationStep
    after: Configuration


def mutate(config: Configuration, step: MutationStep) -> MutationRecord:
    """Apply a cut-relative rotation to a closed configuration.

    Requires the configuration to be closed and the cut to lie inside its
    frame; the result is closed again and its frame is the rotated frame of
    the input.  The closedness of the result is re-checked defensively.
    """
    if config.spec != step.cut.spec:
        raise SpecMismatch(f"configuration over {config.spec}, cut over {step.cut.spec}")
    if not config.closed:
        raise NotClosed(f"{config.members.text()} is not closed; mutation undefined")
    stray = step.cut - config.frame_set
    if len(stray):
        raise NotInFrame(
            "cut members outside the frame: " + ",".join(str(d) for d in stray)
        )
    after = Configuration(rotate_set(config.members, step.cut, step.direction))
    if not after.closed:  # pragma: no cover - theorem violation
        raise VerificationFailure(
            f"rotation of {config.members.text()} along {step.cut.text()} "
            "produced a non-closed set"
        )
    return MutationRecord(before=config, step=step, after=after)
