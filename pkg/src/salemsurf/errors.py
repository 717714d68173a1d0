"""Exception taxonomy.

Every failure mode has its own class so callers can match precisely;
all inherit from SalemsurfError. Verification mismatches are not
exceptions (they become fail-status report nodes); exceptions mean the
computation itself could not proceed.
"""


class SalemsurfError(Exception):
    pass


# field construction / arithmetic
class ReducibleModulus(SalemsurfError):
    pass


class DegreeMismatch(SalemsurfError):
    pass


class DivisionByZero(SalemsurfError):
    pass


class ContextMismatch(SalemsurfError):
    pass


class LogOfZero(SalemsurfError):
    pass


class NoEmbedding(SalemsurfError):
    pass


# polynomial engine
class ArityMismatch(SalemsurfError):
    pass


class VariableAbsent(SalemsurfError):
    pass


class ZeroPolynomial(SalemsurfError):
    pass


class DimensionMismatch(SalemsurfError):
    pass


class NotSquarefree(SalemsurfError):
    pass


class DivisionNotExact(SalemsurfError):
    pass


class ExtensionBoundExceeded(SalemsurfError):
    pass


class ParseError(SalemsurfError):
    pass


# integer lattice / real roots
class SpectralRadiusNotRealCertified(SalemsurfError):
    pass


class NotReciprocal(SalemsurfError):
    pass


class OddDegree(SalemsurfError):
    pass


class NotSalem(SalemsurfError):
    pass


class NotIsometry(SalemsurfError):
    pass


class WrongDimension(SalemsurfError):
    pass


# cuspidal cubic
class NotOnCurve(SalemsurfError):
    pass


class CuspPoint(SalemsurfError):
    pass


class DegenerateCoefficient(SalemsurfError):
    pass


class NotLehmerRoot(SalemsurfError):
    pass


class CollisionDetected(SalemsurfError):
    pass


class NotCuspidal(SalemsurfError):
    pass


class NotPreserved(SalemsurfError):
    pass


class NotAffine(SalemsurfError):
    pass


# model / reporting
class InvariantViolation(SalemsurfError):
    pass


class NoSolution(SalemsurfError):
    pass


class NonUniqueSolution(SalemsurfError):
    pass


class UnknownSuite(SalemsurfError):
    pass
