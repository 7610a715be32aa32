"""Exception types shared across the package."""


class DegreeLabError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(DegreeLabError):
    """Input value violates a documented precondition (e.g. degree 0)."""


class ParseError(DegreeLabError):
    """Malformed input file; carries the offending 1-based line number."""

    def __init__(self, message, line_no=None):
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)
        self.line_no = line_no


class InfeasibleSequence(DegreeLabError):
    """No simple graph realizes the given degree sequence."""


class InfeasibleScenario(DegreeLabError):
    """An experiment scenario produced an infeasible degree sequence."""


class PreconditionViolated(DegreeLabError):
    """Caller broke a stated mathematical precondition."""


class RejectionBudgetExceeded(DegreeLabError):
    """Pairing-model rejection sampler gave up; use the switching sampler."""


class EdgeNotPresent(DegreeLabError):
    """A switching move referenced an edge the graph does not contain."""


class TooLarge(DegreeLabError):
    """Instance exceeds a configured brute-force cap."""


class IsolatedVertex(DegreeLabError):
    """Kernel construction requires minimum degree 1."""


class InconsistentPaths(DegreeLabError):
    """A kernel multigraph violates its path invariants."""


class EmptyS0(DegreeLabError):
    """The exploration process needs a nonempty starting set."""


class DomainError(DegreeLabError):
    """Argument outside the mathematical domain of the operation."""


class ConvergenceFailure(DegreeLabError):
    """Root bracketing or iteration failed to converge."""
