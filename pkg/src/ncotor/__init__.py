"""Workbench for non-crossing n-diagonal configurations of a polygon.

Core layers:

- polygon:   vertices, n-diagonals, crossing, translation, cell decompositions
- closure:   non-crossing complements, closed sets, frames, enumeration
- mutation:  cut-relative rotation of closed configurations
- quiver:    translation quiver and cut-relative subfactor models
- oracle:    independent brute-force certification of all of the above
- formats:   the JSON document envelope shared by CLI, service, and tests
- cli:       the `ncotor` command
- service:   in-memory mutation sessions over HTTP
"""

from .closure import (
    Configuration,
    closed_sets,
    cluster_tilting_sets,
    cotorsion_pair,
    frame,
    is_closed,
    is_ptolemy,
    nc_closure,
    non_crossing,
)
from .errors import (
    BudgetExceeded,
    DocumentError,
    InputError,
    InvalidDiagonal,
    InvalidSpec,
    NcotorError,
    NotClosed,
    NotInFrame,
    NotNDiagonal,
    VerificationFailure,
)
from .mutation import (
    MutationRecord,
    MutationStep,
    movement_map,
    mutate,
    rotate_in_cell,
    rotate_polygon,
    rotate_set,
)
from .polygon import (
    Cell,
    CellDecomposition,
    DiagSet,
    Diagonal,
    PolygonSpec,
    cell_decomposition,
    cell_spec,
    crossing,
    diagonal,
    diagonal_rank,
    is_n_diagonal,
    make_spec,
    n_diagonals,
    rank_to_diagonal,
    tau,
    tau_inverse,
)
from .quiver import (
    Quiver,
    QuiverVertex,
    SubfactorImage,
    ar_quiver,
    shift_by_n,
    subfactor_bijection_check,
    subfactor_decompose,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
