"""Exception types shared across the package.

ValueError is reserved for malformed arguments (wrong shapes, bad flags,
non-Hermitian input and the like).  The classes below signal that a
numerical decision went against the caller: a vector left a span, a basis
failed to close under brackets, a search ran out of candidates.
"""


class LieAlgebraError(Exception):
    """Base class for numerical failures in Lie-algebraic computations."""


class NotInSpanError(LieAlgebraError):
    """An element (or one of its brackets) is not inside the expected span."""


class NotClosedError(LieAlgebraError):
    """A basis that should be bracket-closed is not, at working tolerance."""


class NotSemisimpleError(LieAlgebraError):
    """An operation that needs a semisimple algebra got something else."""


class SplittingSearchError(LieAlgebraError):
    """No splitting element found among the admissible candidates."""


class DecompositionError(LieAlgebraError):
    """A decomposition's internal consistency checks failed."""


class StageFailure(LieAlgebraError):
    """Wraps a numerical failure with the pipeline stage that raised it."""

    def __init__(self, stage, error):
        self.stage = stage
        self.error = error
        super().__init__(f"{stage}: {error}")
