"""Dense univariate polynomials over the rationals."""
from fractions import Fraction
from numbers import Rational

from bellkit.data.utils import format_rational
from bellkit.errors import DomainError


def _scalar(value):
    if isinstance(value, Rational) and not isinstance(value, bool):
        return Fraction(value)
    return None


class Polynomial:
    """Immutable polynomial with Fraction coefficients, index = degree.

    Coefficients are stored without trailing zeros; the zero polynomial has
    no stored coefficients and degree -1.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs=()):
        coeffs = [Fraction(c) for c in coeffs]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        self._coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, value):
        """Constant polynomial."""
        return cls((value,))

    @classmethod
    def x(cls):
        """The polynomial x."""
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree, coeff=1):
        """Polynomial coeff * x^degree."""
        return cls([0] * degree + [coeff])

    @property
    def coeffs(self):
        """Coefficient tuple, index = degree."""
        return self._coeffs

    @property
    def degree(self):
        """Degree (-1 for the zero polynomial)."""
        return len(self._coeffs) - 1

    @property
    def leading_coefficient(self):
        """Coefficient of the highest power (0 for zero polynomial)."""
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def coeff(self, degree):
        """Coefficient of x^degree."""
        if 0 <= degree < len(self._coeffs):
            return self._coeffs[degree]
        return Fraction(0)

    def is_zero(self):
        return not self._coeffs

    def is_integral(self):
        """Check all coefficients are integers."""
        return all(c.denominator == 1 for c in self._coeffs)

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        value = _scalar(other)
        if value is None:
            return None
        return Polynomial.constant(value)

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([c + (b[i] if i < len(b) else 0) for i, c in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return Polynomial([-c for c in self._coeffs])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        value = _scalar(other)
        if value is not None:
            return Polynomial([c * value for c in self._coeffs])
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Polynomial()
        result = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other._coeffs):
                if b:
                    result[i + j] += a * b
        return Polynomial(result)

    __rmul__ = __mul__

    def __truediv__(self, other):
        value = _scalar(other)
        if value is None:
            return NotImplemented
        if value == 0:
            raise ZeroDivisionError("polynomial division by zero scalar")
        return Polynomial([c / value for c in self._coeffs])

    def __divmod__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        dd = other.degree
        lead = other.leading_coefficient
        terms = [(i, c) for i, c in enumerate(other._coeffs[:-1]) if c]
        quot = [Fraction(0)] * max(len(rem) - dd, 0)
        for k in range(len(rem) - 1, dd - 1, -1):
            q = rem[k] / lead
            if q == 0:
                continue
            quot[k - dd] = q
            rem[k] = Fraction(0)
            for i, c in terms:
                rem[k - dd + i] -= q * c
        return Polynomial(quot), Polynomial(rem[:dd] if dd > 0 else ())

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        """Divide by polynomial, requiring zero remainder.

        Raises:
            DomainError: if the division leaves a remainder
        """
        quot, rem = divmod(self, other)
        if not rem.is_zero():
            raise DomainError(f"{other} does not divide {self}")
        return quot

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        if len(self._coeffs) <= 1:
            return hash(self.coeff(0))
        return hash(self._coeffs)

    def __call__(self, value):
        """Evaluate by Horner's scheme."""
        result = Fraction(0) if _scalar(value) is not None else 0
        for c in reversed(self._coeffs):
            result = result * value + c
        return result

    def derivative(self):
        return Polynomial([i * c for i, c in enumerate(self._coeffs)][1:])

    def reflect(self):
        """Substitute x -> -x."""
        return Polynomial([-c if i % 2 else c for i, c in enumerate(self._coeffs)])

    def __str__(self):
        if not self._coeffs:
            return "0"
        parts = []
        for d in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[d]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if d == 0:
                body = format_rational(mag)
            else:
                power = "x" if d == 1 else f"x^{d}"
                body = power if mag == 1 else f"{format_rational(mag)}*{power}"
            parts.append((sign, body))
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self):
        return f"Polynomial({str(self)!r})"
