"""Truncated formal power series over a pluggable coefficient ring.

A series of order N stores coefficients 0..N. Binary operations require equal
orders and return a series of the same order.
"""
import logging
from fractions import Fraction

from bellkit.errors import DomainError
from bellkit.rings import RATIONALS

logger = logging.getLogger(__name__)


class PowerSeries:
    """Immutable truncated power series sum c_n x^n, n = 0..order.

    Attributes:
        ring (CoefficientRing): coefficient ring
    """

    __slots__ = ("_coeffs", "ring")

    def __init__(self, coeffs, ring=RATIONALS):
        """Initialize series from coefficients.

        Args:
            coeffs (Iterable): coefficients c_0..c_N (at least one)
            ring (CoefficientRing): ring the coefficients are coerced into
        """
        coeffs = tuple(ring.coerce(c) for c in coeffs)
        if not coeffs:
            raise DomainError("power series needs at least the constant term")
        self._coeffs = coeffs
        self.ring = ring

    @classmethod
    def from_callable(cls, f, order, ring=RATIONALS):
        """Series with coefficients f(0)..f(order)."""
        return cls((f(n) for n in range(order + 1)), ring)

    @classmethod
    def one(cls, order, ring=RATIONALS):
        return cls([ring.one()] + [ring.zero()] * order, ring)

    @classmethod
    def x(cls, order, ring=RATIONALS):
        """The series x (equal to 0 at order 0)."""
        coeffs = [ring.zero()] * (order + 1)
        if order >= 1:
            coeffs[1] = ring.one()
        return cls(coeffs, ring)

    @property
    def order(self):
        return len(self._coeffs) - 1

    @property
    def coeffs(self):
        return self._coeffs

    def __getitem__(self, n):
        return self._coeffs[n]

    def __len__(self):
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def truncate(self, order):
        """Drop coefficients above the given order."""
        if order > self.order:
            raise DomainError(f"cannot extend series of order {self.order} to {order}")
        return PowerSeries(self._coeffs[: order + 1], self.ring)

    def _check(self, other):
        if not isinstance(other, PowerSeries):
            raise TypeError(f"expected PowerSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise DomainError(f"order mismatch: {self.order} != {other.order}")

    def __add__(self, other):
        self._check(other)
        r = self.ring
        return PowerSeries(map(r.add, self._coeffs, other._coeffs), r)

    def __sub__(self, other):
        self._check(other)
        r = self.ring
        return PowerSeries(map(r.sub, self._coeffs, other._coeffs), r)

    def __neg__(self):
        return PowerSeries(map(self.ring.neg, self._coeffs), self.ring)

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            return mul(self, other)
        return self.scale(other)

    def scale(self, r):
        """Multiply every coefficient by exact rational r."""
        return PowerSeries((self.ring.scale(c, r) for c in self._coeffs), self.ring)

    def derivative(self):
        """Formal derivative; the result has order N - 1 (order 0 stays 0)."""
        r = self.ring
        if self.order == 0:
            return PowerSeries([r.zero()], r)
        return PowerSeries(
            (r.scale(c, n) for n, c in enumerate(self._coeffs) if n > 0), r
        )

    def integral(self):
        """Formal antiderivative with zero constant term; order N + 1."""
        r = self.ring
        return PowerSeries(
            [r.zero()] + [r.div_int(c, n + 1) for n, c in enumerate(self._coeffs)], r
        )

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return self.order == other.order and all(
            self.ring.eq(a, b) for a, b in zip(self._coeffs, other._coeffs)
        )

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        terms = ", ".join(str(c) for c in self._coeffs)
        return f"PowerSeries([{terms}], order={self.order})"


def mul(a, b):
    """Cauchy product truncated at the common order.

    Raises:
        DomainError: on order mismatch
    """
    a._check(b)
    ring = a.ring
    ac, bc = a.coeffs, b.coeffs
    return PowerSeries(
        (ring.dot(ac[: n + 1], reversed(bc[: n + 1])) for n in range(a.order + 1)),
        ring,
    )


def exp(a):
    """Exponential of series with zero constant term.

    Uses n E_n = sum_{k=1..n} k a_k E_{n-k}, E_0 = 1.

    Raises:
        DomainError: if the constant term is nonzero
    """
    ring = a.ring
    if not ring.is_zero(a[0]):
        raise DomainError(f"exp needs zero constant term, got {a[0]}")
    ka = [ring.scale(c, k) for k, c in enumerate(a.coeffs)]
    result = [ring.one()]
    for n in range(1, a.order + 1):
        s = ring.dot(ka[1 : n + 1], reversed(result))
        result.append(ring.div_int(s, n))
    return PowerSeries(result, ring)


def log(a):
    """Logarithm of series with constant term 1 (inverse of exp).

    Uses n L_n = n a_n - sum_{k=1..n-1} k L_k a_{n-k}.

    Raises:
        DomainError: if the constant term is not 1
    """
    ring = a.ring
    if not ring.eq(a[0], ring.one()):
        raise DomainError(f"log needs constant term 1, got {a[0]}")
    coeffs = a.coeffs
    kl = [ring.zero()]
    result = [ring.zero()]
    for n in range(1, a.order + 1):
        s = ring.dot(kl[1:n], reversed(coeffs[1:n]))
        nl = ring.sub(ring.scale(coeffs[n], n), s)
        kl.append(nl)
        result.append(ring.div_int(nl, n))
    return PowerSeries(result, ring)


def pow_rational(a, e):
    """Rational power exp(e log a) of series with constant term 1.

    Raises:
        DomainError: if the constant term is not 1
    """
    e = Fraction(e)
    logarithm = log(a)
    if e == 0:
        return PowerSeries.one(a.order, a.ring)
    return exp(logarithm.scale(e))


def _exponent_getter(beta):
    if callable(beta):
        return beta
    values = list(beta)
    return lambda m: values[m - 1]


def euler_product(beta, order, ring=RATIONALS):
    """Expand prod_{m=1..order} (1 - x^m)^beta(m) up to x^order.

    Factors with m > order do not affect the result and are omitted.

    Args:
        beta (Callable[[int], object] | Sequence): exponents beta(1..order),
            as a callable or a sequence indexed from m = 1
        order (int): truncation order N
        ring (CoefficientRing): coefficient ring

    Returns:
        PowerSeries: the truncated product
    """
    get = _exponent_getter(beta)
    exponents = [ring.coerce(get(m)) for m in range(1, order + 1)]
    one, minus_one = ring.one(), ring.neg(ring.one())

    units = (one, minus_one)
    if all(ring.is_zero(b) or any(ring.eq(b, u) for u in units) for b in exponents):
        # Finite cyclotomic-type products: multiply or divide by (1 - x^m)
        coeffs = [one] + [ring.zero()] * order
        for m, b in enumerate(exponents, start=1):
            if ring.eq(b, one):
                for n in range(order, m - 1, -1):
                    coeffs[n] = ring.sub(coeffs[n], coeffs[n - m])
            elif ring.eq(b, minus_one):
                for n in range(m, order + 1):
                    coeffs[n] = ring.add(coeffs[n], coeffs[n - m])
        return PowerSeries(coeffs, ring)

    # log (1 - x^m)^b = -b sum_r x^{mr} / r
    logarithm = [ring.zero()] * (order + 1)
    for m, b in enumerate(exponents, start=1):
        if ring.is_zero(b):
            continue
        for r in range(1, order // m + 1):
            term = ring.scale(b, Fraction(-1, r))
            logarithm[m * r] = ring.add(logarithm[m * r], term)
    logger.debug("Expanding Euler product to order %d over %s", order, ring.name)
    return exp(PowerSeries(logarithm, ring))
