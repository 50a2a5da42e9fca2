"""Exception types shared across the package."""


class GraphFormatError(ValueError):
    """Malformed graph or constraint text. ``line`` is 1-based, or None."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DisconnectedGraph(ValueError):
    """A spanning tree was requested for a graph with several components."""


class NotCograph(ValueError):
    """The constrained vertices induce a path on four vertices."""

    def __init__(self, path):
        self.path = tuple(path)
        super().__init__(f"induced P4 on vertices {self.path}")


class NoTightSet(ValueError):
    """The vertex lies in no tight set; saturate the bounds first."""


class InstanceTooLarge(ValueError):
    """An exhaustive routine was asked to run beyond its size guard."""


class PreconditionRefuted(ValueError):
    """The caller's planarity/girth promise is contradicted by the input.

    ``witness`` is either a :class:`~degforest.wndt.DensityWitness` or a
    tuple of vertices forming a cycle shorter than the promised girth.
    """

    def __init__(self, witness, message):
        self.witness = witness
        super().__init__(message)


class InternalError(AssertionError):
    """An invariant that the construction guarantees was found broken."""
