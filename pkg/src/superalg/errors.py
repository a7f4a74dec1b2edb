"""Exception hierarchy shared by all modules."""


class SuperalgError(Exception):
    """Base class for every error raised by this package."""


class ShapeError(SuperalgError):
    """Dimension or shape mismatch in exact linear algebra."""


class NotAnIdeal(SuperalgError):
    """A subspace claimed to be a graded two-sided ideal is not one."""


class DegenerateForm(SuperalgError):
    """An operation required a non-degenerate form and got a degenerate one."""


class SplitRequired(SuperalgError):
    """The computation needs a field extension of the rationals."""


class SimpleAlgebra(SuperalgError):
    """No proper nonzero graded two-sided ideal exists."""


class ConditionViolation(SuperalgError):
    """Extension datum or context fails its defining conditions.

    `violations` is a list of human-readable strings, one per failed
    condition, each naming the witnessing basis indices.
    """

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class PreconditionError(SuperalgError):
    """An operation's stated precondition does not hold for the input."""


class SchemaError(SuperalgError):
    """JSON input does not match the interchange schema.

    `location` is a dotted/indexed path into the offending document.
    """

    def __init__(self, message, location=""):
        self.location = location
        super().__init__(f"{message} (at {location})" if location else message)
