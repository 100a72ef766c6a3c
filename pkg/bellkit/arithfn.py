"""Arithmetic functions, Dirichlet convolution and driver registry access.

All values are exact (:class:`fractions.Fraction` or ``int``) except the
von Mangoldt/log helpers, which are floats by nature.
"""
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Tuple

from bellkit.environment import sieve_bound
from bellkit.errors import DomainError

logger = logging.getLogger(__name__)


def _check_positive(n):
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"expected positive integer, got {n!r}")
    if n < 1:
        raise DomainError(f"expected positive integer, got {n}")


@dataclass(frozen=True)
class ArithmeticFunction:
    """Map from positive integers to scalars (a driver g).

    Attributes:
        evaluator (Callable[[int], object]): pure map n -> value
        name (str): identifier of the function
        params (tuple): parameters the function was built with
        exact (bool): False for float-valued functions (log driver)
    """

    evaluator: Callable[[int], object]
    name: str
    params: Tuple = field(default=())
    exact: bool = True

    def __call__(self, n):
        _check_positive(n)
        return self.evaluator(n)

    def values(self, limit):
        """Evaluate at 1..limit."""
        return [self(n) for n in range(1, limit + 1)]


class Factorizer:
    """Integer factorization by smallest-prime-factor sieve and trial division.

    The sieve covers n <= bound and is built once in the constructor; it is
    never modified afterwards, so one instance may be shared between threads.
    """

    def __init__(self, bound):
        """Build the sieve.

        Args:
            bound (int): largest n handled by the sieve
        """
        self.bound = bound
        spf = list(range(bound + 1))
        for i in range(2, math.isqrt(bound) + 1):
            if spf[i] == i:
                for j in range(i * i, bound + 1, i):
                    if spf[j] == j:
                        spf[j] = i
        self._spf = spf
        logger.debug("Built smallest-prime-factor sieve up to %d", bound)

    def factorize(self, n):
        """Factorize n into {prime: exponent}.

        Args:
            n (int): positive integer

        Returns:
            dict[int, int]: prime factorization (empty for n = 1)
        """
        _check_positive(n)
        factors = {}
        if n <= self.bound:
            while n > 1:
                p = self._spf[n]
                n //= p
                factors[p] = factors.get(p, 0) + 1
            return factors

        p = 2
        while p * p <= n:
            while n % p == 0:
                n //= p
                factors[p] = factors.get(p, 0) + 1
            p += 1 if p == 2 else 2
        if n > 1:
            factors[n] = factors.get(n, 0) + 1
        return factors


@lru_cache(maxsize=None)
def _factorizer(bound):
    return Factorizer(bound)


def default_factorizer():
    """Get shared factorizer for the configured sieve bound."""
    return _factorizer(sieve_bound())


def factorize(n):
    """Prime factorization of n as {prime: exponent}."""
    return default_factorizer().factorize(n)


def is_prime(n):
    """Check primality of positive integer n."""
    if not isinstance(n, int) or n < 2:
        return False
    factors = factorize(n)
    return factors == {n: 1}


def divisors(n):
    """Sorted positive divisors of n by trial division up to sqrt(n)."""
    _check_positive(n)
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


def mobius(n):
    """Möbius function: (-1)^k on squarefree n with k prime factors, else 0.

    Raises:
        DomainError: if n < 1
    """
    factors = factorize(n)
    if any(e > 1 for e in factors.values()):
        return 0
    return -1 if len(factors) % 2 else 1


def dirichlet_convolve(f, g, n):
    """Evaluate (f * g)(n) = sum over d | n of f(d) g(n/d)."""
    return sum((f(d) * g(n // d) for d in divisors(n)), Fraction(0))


def euler_phi(n):
    """Euler's totient."""
    return jordan_totient(1, n)


def jordan_totient(k, n):
    """Jordan totient J_k(n) = n^k prod over p | n of (1 - p^-k)."""
    if k < 0:
        raise DomainError(f"expected nonnegative k, got {k}")
    result = 1
    for p, e in factorize(n).items():
        result *= p ** (k * (e - 1)) * (p ** k - 1)
    return Fraction(result)


def sigma(k, n):
    """Divisor power sum sigma_k(n).

    ``n`` may be a Fraction (as in sigma(n/4)); non-integral arguments give 0.
    """
    if isinstance(n, Fraction):
        if n.denominator != 1:
            return Fraction(0)
        n = int(n)
    result = 1
    for p, e in factorize(n).items():
        if k == 0:
            result *= e + 1
        else:
            result *= (p ** (k * (e + 1)) - 1) // (p ** k - 1)
    return Fraction(result)


def ramanujan_sum(q, n):
    """Ramanujan sum c_q(n) = sum over d | gcd(q, n) of d mu(q/d)."""
    _check_positive(q)
    _check_positive(n)
    return Fraction(sum(d * mobius(q // d) for d in divisors(math.gcd(q, n))))


def chi4(n):
    """Non-principal character modulo 4."""
    _check_positive(n)
    return (0, 1, 0, -1)[n % 4]


def r4(n):
    """Number of representations as sum of four squares (Jacobi)."""
    _check_positive(n)
    return 8 * sigma(1, n) - 32 * sigma(1, Fraction(n, 4))


def von_mangoldt(n):
    """Prime p if n is a power of p, otherwise None."""
    factors = factorize(n)
    if len(factors) == 1:
        return next(iter(factors))
    return None


def von_mangoldt_float(n):
    """Von Mangoldt function as float: log p on prime powers p^k, else 0."""
    p = von_mangoldt(n)
    return math.log(p) if p is not None else 0.0


def builtin_driver(name, params=()):
    """Build named driver from the driver registry.

    Args:
        name (str): driver name (module name in ``bellkit.drivers``)
        params (Sequence): driver parameters

    Returns:
        ArithmeticFunction: the driver evaluator

    Raises:
        DriverError: on unknown name or wrong parameter arity
    """
    from bellkit.driver import DriverManager

    return DriverManager.default().create(name, params)


def list_drivers():
    """Describe registered drivers.

    Returns:
        list[dict]: ``name``, ``display_name`` and ``params`` of each driver
    """
    from bellkit.driver import DriverManager

    return DriverManager.default().describe()
