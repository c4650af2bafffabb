"""Exception types raised across the package.

Each operation raises the narrowest class that names the violated
hypothesis; the CLI maps some of them to dedicated exit codes.
"""

from __future__ import annotations


class QCGoppaError(Exception):
    """Base class for every error raised by this package."""


# fields
class ReducibleModulus(QCGoppaError):
    pass


class DegreeMismatch(QCGoppaError):
    pass


class DivisionByZero(QCGoppaError, ZeroDivisionError):
    pass


class ContextMismatch(QCGoppaError):
    pass


class NonDivisorDegree(QCGoppaError):
    pass


class TableMiss(QCGoppaError):
    pass


class ScaleExceeded(QCGoppaError):
    """An exhaustive routine was asked to run beyond its desk-scale cap."""


# polynomials
class DivisionByZeroPoly(QCGoppaError, ZeroDivisionError):
    pass


class DegreeZero(QCGoppaError):
    pass


class ParseError(QCGoppaError, ValueError):
    pass


# projective line
class OrderNotFound(QCGoppaError):
    pass


class DomainNotClosed(QCGoppaError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class UnsupportedOrder(QCGoppaError):
    pass


class CubeRootAbsent(QCGoppaError):
    pass


# invariant polynomials
class RootAtA(QCGoppaError):
    pass


class AffineMatrix(QCGoppaError):
    pass


class CoefficientsNotRational(QCGoppaError):
    pass


class FixedBeta(QCGoppaError):
    pass


class DegenerateMatrix(QCGoppaError):
    pass


class UnsupportedS(QCGoppaError):
    pass


class NoCubeRootOfUnity(QCGoppaError):
    pass


# codes
class RootInSupport(QCGoppaError):
    def __init__(self, message: str, point=None):
        super().__init__(message)
        self.point = point


class OrbitNotUniform(QCGoppaError):
    pass


class NotClosed(QCGoppaError):
    pass


class NonDivisor(QCGoppaError):
    pass
