"""Coefficient rings for power series and Bell transforms.

A ring is a stateless strategy object; values are plain Python objects
(Fraction, float or Polynomial) so that series code stays generic.
"""
import math
import operator
from abc import ABC, abstractmethod
from fractions import Fraction
from numbers import Rational

from bellkit.errors import DomainError
from bellkit.polynomial import Polynomial


class CoefficientRing(ABC):
    """Commutative ring containing the rationals.

    Subclasses implement ``zero``, ``one`` and ``coerce``; arithmetic defaults
    to Python operators, which all supported value types implement.

    Attributes:
        name (str): ring name (used in logs and error messages)
        exact (bool): whether equality is exact
    """

    name: str
    exact = True

    @abstractmethod
    def zero(self):
        """Additive identity."""

    @abstractmethod
    def one(self):
        """Multiplicative identity."""

    @abstractmethod
    def coerce(self, value):
        """Convert scalar (or ring element) into the ring."""

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def scale(self, a, r):
        """Multiply ring element by exact rational r."""
        return a * Fraction(r)

    def div_int(self, a, k):
        """Divide ring element by positive integer k (exact)."""
        if k <= 0:
            raise DomainError(f"division by non-positive integer {k}")
        return a * Fraction(1, k)

    def eq(self, a, b):
        return a == b

    def is_zero(self, a):
        return self.eq(a, self.zero())

    def dot(self, xs, ys):
        """Sum of pairwise products."""
        return sum(map(operator.mul, xs, ys), self.zero())

    def __repr__(self):
        return f"{type(self).__name__}()"


class RationalRing(CoefficientRing):
    """Exact rationals (Fraction)."""

    name = "rationals"

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def coerce(self, value):
        if isinstance(value, Rational) and not isinstance(value, bool):
            return Fraction(value)
        if isinstance(value, Polynomial) and value.degree <= 0:
            return value.coeff(0)
        raise DomainError(f"cannot use {value!r} as exact rational")

    def div_int(self, a, k):
        if k <= 0:
            raise DomainError(f"division by non-positive integer {k}")
        return a / k


class FloatRing(CoefficientRing):
    """Double precision reals; equality within relative tolerance."""

    name = "floats"
    exact = False

    def __init__(self, rel_tol=1e-12, abs_tol=1e-12):
        self.rel_tol = rel_tol
        self.abs_tol = abs_tol

    def zero(self):
        return 0.0

    def one(self):
        return 1.0

    def coerce(self, value):
        if isinstance(value, Polynomial):
            if value.degree > 0:
                raise DomainError(f"cannot use {value} as float")
            value = value.coeff(0)
        return float(value)

    def scale(self, a, r):
        return a * float(r)

    def div_int(self, a, k):
        if k <= 0:
            raise DomainError(f"division by non-positive integer {k}")
        return a / k

    def eq(self, a, b):
        return math.isclose(a, b, rel_tol=self.rel_tol, abs_tol=self.abs_tol)


class PolynomialRing(CoefficientRing):
    """Polynomials in x over the rationals."""

    name = "polynomials"

    def zero(self):
        return Polynomial()

    def one(self):
        return Polynomial.constant(1)

    def coerce(self, value):
        if isinstance(value, Polynomial):
            return value
        if isinstance(value, Rational) and not isinstance(value, bool):
            return Polynomial.constant(value)
        raise DomainError(f"cannot use {value!r} as polynomial")

    def div_int(self, a, k):
        if k <= 0:
            raise DomainError(f"division by non-positive integer {k}")
        return a / k


RATIONALS = RationalRing()
FLOATS = FloatRing()
POLYNOMIALS = PolynomialRing()
