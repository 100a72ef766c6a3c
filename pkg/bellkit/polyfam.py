"""Classical polynomial families as Bell transforms over Q[x].

Each family is the coefficient sequence of exp(-sum g(k) t^k / k) for a
polynomial-valued driver g. EGF families (everything but Laguerre) satisfy

    P_n = -sum_{k=1..n} C(n-1, k-1) (k-1)! g(k) P_{n-k},

and Laguerre (OGF) satisfies n L_n = -sum_{k=1..n} g(k) L_{n-k}. The family
recurrences below are these identities specialized to each driver; the
generic engine in :mod:`bellkit.bell` gives an independent second path.
"""
import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from bellkit import bell
from bellkit.arithfn import ArithmeticFunction
from bellkit.environment import FAMILY_MAP
from bellkit.errors import DomainError
from bellkit.polynomial import Polynomial
from bellkit.rings import POLYNOMIALS

logger = logging.getLogger(__name__)

X = Polynomial.x()
ONE = Polynomial.constant(1)
HALF = Fraction(1, 2)

# Tables grow in place; key is the family name plus its parameters
_TABLES = {}


def _check_degree(n):
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"polynomial index must be a nonnegative integer, got {n!r}")


def _extend(key, n, first, step):
    """Cached table of key, extended in a loop until it holds index n.

    Args:
        key (tuple): cache key
        n (int): largest index needed
        first: entry at index 0
        step (callable): ``step(table, m)`` returns entry m from entries 0..m-1

    Returns:
        list: the table (at least n + 1 entries)
    """
    table = _TABLES.setdefault(key, [first])
    while len(table) <= n:
        table.append(step(table, len(table)))
    return table


def _bernoulli_step(numbers, n):
    total = sum(math.comb(n + 1, j) * numbers[j] for j in range(n))
    return -total / (n + 1)


def _bernoulli_number(n):
    return _extend(("bernoulli_numbers",), n, Fraction(1), _bernoulli_step)[n]


def bernoulli_numbers(limit):
    """Bernoulli numbers B_0..B_N with B_1 = -1/2.

    Uses sum_{j=0..n} C(n+1, j) B_j = 0 for n >= 1.

    Args:
        limit (int): N >= 0

    Returns:
        list[Fraction]: B_0, ..., B_N
    """
    _check_degree(limit)
    _bernoulli_number(limit)
    return _TABLES[("bernoulli_numbers",)][: limit + 1]


def _appell_step(weight):
    def step(polys, n):
        value = (X - HALF) * polys[n - 1]
        for k in range(2, n + 1):
            w = math.comb(n - 1, k - 1) * weight(k)
            if w:
                value -= polys[n - k] * w
        return value

    return step


def bernoulli_poly(n):
    """Bernoulli polynomial B_n(x).

    B_n = (x - 1/2) B_{n-1} - sum_{k=2..n} C(n-1, k-1) (B_k / k) B_{n-k}.
    """
    _check_degree(n)
    step = _appell_step(lambda k: _bernoulli_number(k) / k)
    return _extend(("bernoulli",), n, ONE, step)[n]


def euler_poly(n):
    """Euler polynomial E_n(x).

    E_n = (x - 1/2) E_{n-1} - sum_{k=2..n} C(n-1, k-1) ((2^k - 1) B_k / k) E_{n-k}.
    """
    _check_degree(n)
    step = _appell_step(lambda k: (2 ** k - 1) * _bernoulli_number(k) / k)
    return _extend(("euler",), n, ONE, step)[n]


def euler_numbers(limit):
    """Euler numbers E_n = 2^n E_n(1/2), n = 0..limit (1, 0, -1, 0, 5, ...)."""
    _check_degree(limit)
    return [int(euler_poly(n)(HALF) * 2 ** n) for n in range(limit + 1)]


def _hermite_step(polys, n):
    value = X * polys[n - 1] * 2
    if n >= 2:
        value -= polys[n - 2] * (2 * (n - 1))
    return value


def hermite_poly(n):
    """Physicists' Hermite polynomial, H_n = 2x H_{n-1} - 2(n-1) H_{n-2}."""
    _check_degree(n)
    return _extend(("hermite",), n, ONE, _hermite_step)[n]


def _touchard_step(polys, n):
    total = Polynomial()
    for j in range(n):
        total += polys[j] * math.comb(n - 1, j)
    return X * total


def touchard_poly(n):
    """Touchard polynomial, T_n = x sum_{j=0..n-1} C(n-1, j) T_j."""
    _check_degree(n)
    return _extend(("touchard",), n, ONE, _touchard_step)[n]


def laguerre_poly(n, alpha):
    """Generalized Laguerre polynomial L_n^(alpha)(x).

    Uses n L_n = -sum_{k=1..n} (x k - alpha - 1) L_{n-k}.

    Args:
        n (int): degree
        alpha (Fraction): exact rational parameter

    Returns:
        Polynomial: L_n^(alpha)
    """
    _check_degree(n)
    alpha = Fraction(alpha)

    def step(polys, m):
        total = Polynomial()
        for k in range(1, m + 1):
            total += Polynomial((-(alpha + 1), k)) * polys[m - k]
        return -total / m

    return _extend(("laguerre", alpha), n, ONE, step)[n]


def charlier_poly(n, a):
    """Charlier polynomial C_n(x; a).

    Uses C_n = -sum_{k=1..n} C(n-1, k-1) (k-1)! g(k) C_{n-k} with
    g(1) = a - x/a and g(k) = x (-1)^k / a^k.

    Raises:
        DomainError: if a = 0
    """
    _check_degree(n)
    a = Fraction(a)
    if a == 0:
        raise DomainError("Charlier parameter a must be nonzero")
    driver = _charlier_driver(a)

    def step(polys, m):
        total = Polynomial()
        for k in range(1, m + 1):
            weight = math.comb(m - 1, k - 1) * math.factorial(k - 1)
            total += driver(k) * polys[m - k] * weight
        return -total

    return _extend(("charlier", a), n, ONE, step)[n]


def _bernoulli_driver(k):
    if k == 1:
        return Polynomial((HALF, -1))
    return Polynomial.constant(_bernoulli_number(k) / math.factorial(k))


def _euler_driver(k):
    if k == 1:
        return Polynomial((HALF, -1))
    return Polynomial.constant(
        (2 ** k - 1) * _bernoulli_number(k) / math.factorial(k)
    )


def _hermite_driver(k):
    if k == 1:
        return X * -2
    if k == 2:
        return Polynomial.constant(2)
    return Polynomial()


def _touchard_driver(k):
    return X * Fraction(-1, math.factorial(k - 1))


def _laguerre_driver(alpha):
    return lambda k: Polynomial((-(alpha + 1), k))


def _charlier_driver(a):
    def driver(k):
        if k == 1:
            return Polynomial((a, -1 / a))
        return X * (Fraction(-1) ** k / a ** k)

    return driver


@dataclass(frozen=True)
class FamilySpec:
    """Polynomial family with its fixed exact parameters.

    Attributes:
        family (str): family name (key of FAMILY_MAP)
        alpha (Fraction): Laguerre parameter
        a (Fraction): Charlier parameter (nonzero)
    """

    family: str
    alpha: Optional[Fraction] = None
    a: Optional[Fraction] = None

    def __post_init__(self):
        if self.family not in FAMILY_MAP:
            raise DomainError(
                f"unknown family {self.family!r} (known: {', '.join(FAMILY_MAP)})"
            )
        required = FAMILY_MAP[self.family]["params"]
        for name in ("alpha", "a"):
            value = getattr(self, name)
            if name in required and value is None:
                raise DomainError(f"family {self.family} needs parameter {name}")
            if value is not None:
                object.__setattr__(self, name, Fraction(value))
        if self.family == "charlier" and self.a == 0:
            raise DomainError("Charlier parameter a must be nonzero")

    @property
    def normalization(self):
        """'egf' (weights t^n / n!) or 'ogf' (weights t^n)."""
        return FAMILY_MAP[self.family]["normalization"]

    @property
    def params(self):
        """Required parameters by name."""
        return {name: getattr(self, name) for name in FAMILY_MAP[self.family]["params"]}


_DRIVERS = {
    "bernoulli": lambda spec: _bernoulli_driver,
    "euler": lambda spec: _euler_driver,
    "hermite": lambda spec: _hermite_driver,
    "touchard": lambda spec: _touchard_driver,
    "laguerre": lambda spec: _laguerre_driver(spec.alpha),
    "charlier": lambda spec: _charlier_driver(spec.a),
}

_FAMILIES = {
    "bernoulli": lambda spec, n: bernoulli_poly(n),
    "euler": lambda spec, n: euler_poly(n),
    "hermite": lambda spec, n: hermite_poly(n),
    "touchard": lambda spec, n: touchard_poly(n),
    "laguerre": lambda spec, n: laguerre_poly(n, spec.alpha),
    "charlier": lambda spec, n: charlier_poly(n, spec.a),
}


def family_driver(spec):
    """Polynomial-valued driver g of the family's generating function.

    Returns:
        ArithmeticFunction: k -> Polynomial
    """
    params = tuple(spec.params.values())
    return ArithmeticFunction(_DRIVERS[spec.family](spec), spec.family, params)


def family_poly(spec, n):
    """Polynomial of degree n of the family by its own recurrence."""
    return _FAMILIES[spec.family](spec, n)


def family_via_bell(spec, n):
    """Polynomial of degree n via the generic Bell recurrence over Q[x].

    The generic coefficients a(n) are P_n / n! for EGF families and L_n for
    Laguerre.
    """
    _check_degree(n)
    a = bell.coeffs_via_recurrence(family_driver(spec), n, POLYNOMIALS)
    if spec.normalization == "egf":
        return a[n] * math.factorial(n)
    return a[n]


def family_table(spec, upto, via_bell=False):
    """Polynomials of degrees 0..upto.

    Args:
        spec (FamilySpec): family
        upto (int): largest degree
        via_bell (bool): use the generic Bell path instead of the recurrence

    Returns:
        list[Polynomial]: P_0, ..., P_upto
    """
    _check_degree(upto)
    if via_bell:
        a = bell.coeffs_via_recurrence(family_driver(spec), upto, POLYNOMIALS)
        if spec.normalization == "egf":
            return [p * math.factorial(n) for n, p in enumerate(a.values)]
        return list(a.values)
    logger.debug("Generating %s table up to degree %d", spec.family, upto)
    return [family_poly(spec, n) for n in range(upto + 1)]
