"""Exception types shared across the package."""


class Rc2Error(Exception):
    """Base class for all package errors."""


class InvalidInput(Rc2Error):
    """Malformed edge list, JSON document, or coloring payload."""

    def __init__(self, message: str, line: int | None = None):
        super().__init__(message if line is None else f"line {line}: {message}")
        self.line = line


class InvalidSpec(Rc2Error):
    """Family descriptor with an unknown name or out-of-range parameters."""


class NotTwoConnected(Rc2Error):
    """The operation requires a 2-connected input graph."""


class NoFan(Rc2Error):
    """No pair of internally disjoint paths into the anchor set exists."""


class NotApplicable(Rc2Error):
    """The operation does not apply to this graph shape (e.g. a bare cycle)."""


class NotMinimal(Rc2Error):
    """The host graph is not minimally 2-connected."""


class PreconditionViolated(Rc2Error):
    """A documented precondition of the operation does not hold."""


class MalformedDecomposition(Rc2Error):
    """Ear decomposition pieces overlap improperly or a prefix is not 2-connected."""


class LabelingImpossible(Rc2Error):
    """No valid base labeling exists for the decomposition."""


class LabelingInvalid(Rc2Error):
    """A supplied base labeling is inconsistent with the graph."""


class NotACycle(Rc2Error):
    """The input graph is not a simple cycle."""


class NotHamiltonianCycle(Rc2Error):
    """The supplied vertex sequence is not a Hamiltonian cycle of the graph."""


class ChordInvalid(Rc2Error):
    """The supplied chord is missing or joins adjacent cycle vertices."""


class EndpointNotEligible(Rc2Error):
    """An ear endpoint has no entry in the running vertex-to-color map."""


class NoInteriorDegreeTwo(Rc2Error):
    """The ear interior contains no degree-2 vertex of the host graph."""


class TraceMissing(Rc2Error):
    """The coloring result carries no step-by-step trace to check."""


class BudgetExceeded(Rc2Error):
    """The brute-force search ran out of its candidate budget.

    ``lower_bound`` is the largest value proved so far: every color count
    strictly below it was exhausted without finding a valid coloring.
    """

    def __init__(self, message: str, lower_bound: int):
        super().__init__(message)
        self.lower_bound = lower_bound
