"""Exception hierarchy.

Input errors (bad text, unknown names) derive from :class:`InputError`; the
CLI maps them to exit code 2. Everything else derived from
:class:`SpectreError` is a domain error (exit code 1).
"""


class SpectreError(Exception):
    """Base class for all errors raised by this package."""


class InputError(SpectreError, ValueError):
    """Malformed user input."""


class PolynomialSyntaxError(InputError):
    def __init__(self, message, text="", position=0, expected=None):
        self.text = text
        self.position = position
        self.expected = expected
        super().__init__(f"{message} at position {position}")


class NegativeExponent(PolynomialSyntaxError):
    pass


class UnknownVariable(InputError):
    def __init__(self, name, variables):
        self.name = name
        self.variables = tuple(variables)
        super().__init__(f"unknown variable {name!r}; expected one of {', '.join(self.variables)}")


class UnknownSingularity(InputError):
    pass


class NotACriticalGerm(SpectreError):
    """f(0) != 0, so the origin is not on the hypersurface."""


class NotIsolated(SpectreError):
    """The Milnor algebra is infinite dimensional."""


class ResourceLimit(SpectreError):
    pass


class NotQuasiHomogeneous(SpectreError):
    pass


class UnderdeterminedWeights(SpectreError):
    pass


class WeightOutOfRange(SpectreError):
    def __init__(self, weights):
        self.weights = tuple(weights)
        shown = ", ".join(str(w) for w in self.weights)
        super().__init__(f"weights ({shown}) are not all in (0, 1)")


class NonIntegralMu(SpectreError):
    pass


class GaloisUnstable(SpectreError):
    """An eigenvalue multiset that is not the root set of an integer polynomial."""

    def __init__(self, fractions):
        self.fractions = tuple(fractions)
        super().__init__(
            "eigenvalue fractions are not closed under the Galois action: "
            + ", ".join(str(q) for q in self.fractions)
        )


class NotFiniteWithinCap(SpectreError):
    def __init__(self, cap):
        self.cap = cap
        super().__init__(f"matrix has no finite order <= {cap}")


class NotConvenient(SpectreError):
    pass


class BasisIncompatible(SpectreError):
    """Newton weights of the monomial basis do not form a valid spectrum."""

    def __init__(self, message, raw):
        self.raw = raw
        super().__init__(message)


class DomainError(SpectreError):
    def __init__(self, bound, message):
        self.bound = bound
        super().__init__(f"{bound}: {message}")
