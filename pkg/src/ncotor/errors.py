"""Exception taxonomy shared across the package.

The CLI maps these onto exit statuses: input rejections (InputError and
subclasses) exit 2, budget refusals exit 3, failed verification exits 4.
"""

from __future__ import annotations


class NcotorError(Exception):
    """Base class for every error raised by this package."""


class InputError(NcotorError):
    """A caller-supplied value violates a documented precondition."""


class InvalidSpec(InputError):
    pass


class InvalidDiagonal(InputError):
    pass


class NotNDiagonal(InputError):
    pass


class CrossingCutSet(InputError):
    """A cut set offered where a pairwise non-crossing family is required."""


class CutCrossesMembers(InputError):
    """Members outside the cut set cross the cut set."""


class NotClosed(InputError):
    """A closed configuration was required."""


class NotInFrame(InputError):
    """A mutation cut set must consist of frame members."""


class SpecMismatch(InputError):
    """Two sets over different ambient polygons were combined."""


class DocumentError(InputError):
    """A configuration document failed to parse; `where` names the offending field."""

    def __init__(self, message: str, where: str = "", offending: list | None = None):
        super().__init__(message)
        self.where = where
        self.offending = offending or []


class BudgetExceeded(NcotorError):
    """An exhaustive scan would overrun the configured subset budget."""


class VerificationFailure(NcotorError):
    """An internal consistency assertion failed (theorem or replay check)."""
