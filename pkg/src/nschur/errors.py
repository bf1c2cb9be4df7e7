"""Exception types shared across the package."""


class NonExactDivision(ArithmeticError):
    """Polynomial division left a nonzero remainder."""


class ZeroPolynomial(ValueError):
    """The requested quantity is undefined for the zero polynomial."""


class MissingAssignment(ValueError):
    """A full substitution did not cover every variable."""

    def __init__(self, variable: str):
        self.variable = variable
        super().__init__(f"no value assigned to {variable}")


class TruncationTooSmall(ValueError):
    """The requested truncation does not contain the whole prefix."""


class DenominatorNotUnit(ArithmeticError):
    """A specialization expected the denominator to collapse to 1."""


class SingularConstantTerm(ArithmeticError):
    """The constant-term block H_0 of a numeric series is singular."""


class NotStabilized(ArithmeticError):
    """Two successive truncations past the band bound disagree."""


class InsufficientDegree(ValueError):
    """A series is truncated below a degree the computation needs."""

    def __init__(self, degree: int):
        self.degree = degree
        super().__init__(f"series truncated below required coefficient H_{degree}")
