"""Exception types shared across the package."""


class CrystalDegError(Exception):
    """Base class for every error raised by :mod:`crystaldeg`."""


class ShapeError(CrystalDegError, ValueError):
    """A partition or shape argument is malformed or out of range."""


class TableauError(CrystalDegError, ValueError):
    """A filling violates the tableau invariants.

    ``cell`` is the offending ``(row, column)`` pair (0-indexed, row 0 is the
    bottom row) when one can be named.
    """

    def __init__(self, message, cell=None):
        super().__init__(message)
        self.cell = cell


class InvariantViolation(CrystalDegError, RuntimeError):
    """An internal invariant failed; this indicates a bug, never bad input."""


class PrerequisiteError(CrystalDegError):
    """An axiom check was requested on a graph that fails P1 or P2."""

    def __init__(self, failed):
        super().__init__(f"prerequisite failed: {', '.join(failed)}")
        self.failed = tuple(failed)


class GeneralZeroWeightError(CrystalDegError):
    """A zero-weight vertex has an i-string longer than 3.

    No induced dual equivalence edge rule exists for such vertices; only the
    extractor in general mode handles them.
    """


class SchemaError(CrystalDegError, ValueError):
    """A graph document does not match its schema.

    ``pointer`` is a JSON pointer to the offending value.
    """

    def __init__(self, pointer, message):
        super().__init__(f"{pointer or '/'}: {message}")
        self.pointer = pointer
