"""Exception taxonomy for poslab.

Every error raised by the library derives from PoslabError.  Errors carry
the offending data as attributes so callers (and the CLI) can render exact
witnesses without re-parsing messages.
"""


class PoslabError(Exception):
    """Base class for all poslab errors."""


# ---------------------------------------------------------------- matroids

class EmptyBases(PoslabError):
    pass


class MixedCardinality(PoslabError):
    def __init__(self, subset, expected):
        self.subset = tuple(sorted(subset))
        self.expected = expected
        super().__init__(
            f"subset {self.subset} has size {len(self.subset)}, expected {expected}"
        )


class ExchangeFailure(PoslabError):
    """Basis exchange axiom failed for (I, J, a): no b in J repairs I - a."""

    def __init__(self, I, J, a):
        self.I = tuple(sorted(I))
        self.J = tuple(sorted(J))
        self.a = a
        super().__init__(f"exchange fails for I={self.I}, J={self.J}, a={a}")


class BadRank(PoslabError):
    pass


class NoTransversal(PoslabError):
    pass


class OverlapError(PoslabError):
    pass


class DependentContraction(PoslabError):
    pass


class EmptyResult(PoslabError):
    pass


class UnknownName(PoslabError):
    pass


class SameElement(PoslabError):
    pass


# ------------------------------------------------------------ exact kernel

class RankDeficient(PoslabError):
    pass


class NotSymmetric(PoslabError):
    pass


class ZeroPolynomial(PoslabError):
    pass


class BadParams(PoslabError):
    pass


# --------------------------------------------------------------- multipoly

class BadIndex(PoslabError):
    pass


class DimensionMismatch(PoslabError):
    pass


class EmptyJ(PoslabError):
    pass


class SameVariable(PoslabError):
    pass


# ---------------------------------------------------------- property checks

class EmptyInput(PoslabError):
    pass


class EmptyDomain(PoslabError):
    pass


class DomainNotBinary(PoslabError):
    pass


class NegativeCoefficientInput(PoslabError):
    pass


class NonpositiveC(PoslabError):
    pass


class NotMultiaffine(PoslabError):
    pass


class NotHomogeneous(PoslabError):
    pass


class EOnVanishingLocus(PoslabError):
    pass


# ---------------------------------------------------------------- positroid

class InvalidNecklace(PoslabError):
    pass


# ----------------------------------------------------------------- tropical

class ZeroCoefficientStored(PoslabError):
    pass


class SupportMismatch(PoslabError):
    pass


class NotAPositroid(PoslabError):
    pass


class NotValuated(PoslabError):
    pass


class ChainTooShort(PoslabError):
    pass


class ConstituentNotValuated(PoslabError):
    def __init__(self, index, witness=None):
        self.index = index
        self.witness = witness
        super().__init__(f"chain constituent {index} is not a valuated matroid")


class InvalidChain(PoslabError):
    pass


class NonRationalEvaluation(PoslabError):
    """Puiseux evaluation point has no exact rational root of the needed order."""
