"""Bell transform of arithmetic functions.

The Bell transform of a driver g is F_g(x) = exp(-sum g(n) x^n / n). This
module computes its Euler-product exponents beta_g(m) = (mu * g)(m) / m, its
coefficients a_g(n) by three independent paths, and both inverse directions.
"""
import logging
import math
from dataclasses import dataclass
from typing import Tuple

from bellkit import series
from bellkit.arithfn import mobius
from bellkit.environment import COEFFICIENT_PATHS
from bellkit.errors import DomainError, PathMismatchError
from bellkit.rings import RATIONALS, CoefficientRing

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BellExponentSequence:
    """Exponents beta(1..N) of the Euler product prod (1 - x^m)^beta(m).

    Attributes:
        values (tuple): beta(1), ..., beta(N)
        ring (CoefficientRing): ring of the values
    """

    values: Tuple
    ring: CoefficientRing = RATIONALS

    @property
    def limit(self):
        return len(self.values)

    def __call__(self, m):
        if not 1 <= m <= len(self.values):
            raise DomainError(f"exponent index {m} outside 1..{len(self.values)}")
        return self.values[m - 1]


@dataclass(frozen=True)
class CoefficientSequence:
    """Coefficients a(0..N) of a Bell transform; a(0) = 1 always.

    Attributes:
        values (tuple): a(0), ..., a(N)
        ring (CoefficientRing): ring of the values
    """

    values: Tuple
    ring: CoefficientRing = RATIONALS

    def __post_init__(self):
        if not self.values or not self.ring.eq(self.values[0], self.ring.one()):
            first = self.values[0] if self.values else None
            raise DomainError(f"coefficient sequence must start with 1, got {first}")

    @property
    def limit(self):
        return len(self.values) - 1

    def __getitem__(self, n):
        return self.values[n]

    def __len__(self):
        return len(self.values)

    def as_series(self):
        return series.PowerSeries(self.values, self.ring)


def _driver_values(g, limit, ring):
    """Evaluate g(1..limit) into the ring; g may be callable or a sequence."""
    if callable(g):
        return [ring.coerce(g(n)) for n in range(1, limit + 1)]
    values = list(g)
    if len(values) < limit:
        raise DomainError(f"driver lists {len(values)} values, {limit} needed")
    return [ring.coerce(v) for v in values[:limit]]


def bell_exponents(g, limit, ring=RATIONALS):
    """Bell exponents beta_g(m) = (1/m) sum_{d | m} mu(d) g(m/d), m = 1..limit.

    Args:
        g (Callable | Sequence): driver
        limit (int): N >= 1
        ring (CoefficientRing): value ring

    Returns:
        BellExponentSequence: exponents beta(1..N)
    """
    if limit < 1:
        raise DomainError(f"exponent limit must be >= 1, got {limit}")
    gv = _driver_values(g, limit, ring)
    conv = [ring.zero()] * (limit + 1)
    for d in range(1, limit + 1):
        mu = mobius(d)
        if mu == 0:
            continue
        for j in range(1, limit // d + 1):
            conv[d * j] = ring.add(conv[d * j], ring.scale(gv[j - 1], mu))
    values = tuple(ring.div_int(conv[m], m) for m in range(1, limit + 1))
    return BellExponentSequence(values, ring)


def inverse_exponents(beta):
    """Reconstruct driver g(n) = sum_{d | n} d beta(d) from exponents.

    Args:
        beta (BellExponentSequence | Sequence): exponents beta(1..N)

    Returns:
        list: g(1..N)
    """
    if isinstance(beta, BellExponentSequence):
        ring, values = beta.ring, list(beta.values)
    else:
        ring = RATIONALS
        values = [ring.coerce(b) for b in beta]
    limit = len(values)
    g = [ring.zero()] * (limit + 1)
    for d in range(1, limit + 1):
        term = ring.scale(values[d - 1], d)
        for n in range(d, limit + 1, d):
            g[n] = ring.add(g[n], term)
    return g[1:]


def coeffs_via_recurrence(g, limit, ring=RATIONALS):
    """Coefficients by n a(n) = -sum_{k=1..n} g(k) a(n-k), a(0) = 1.

    Args:
        g (Callable | Sequence): driver
        limit (int): N >= 0
        ring (CoefficientRing): ring with exact division by positive integers

    Returns:
        CoefficientSequence: a(0..N)
    """
    gv = _driver_values(g, limit, ring)
    a = [ring.one()]
    for n in range(1, limit + 1):
        s = ring.dot(gv[:n], reversed(a))
        a.append(ring.neg(ring.div_int(s, n)))
    return CoefficientSequence(tuple(a), ring)


def complete_bell(xs, ring=RATIONALS):
    """Complete exponential Bell polynomials B_0..B_n at x_1..x_n.

    Uses B_{n+1} = sum_{i=0..n} C(n, i) B_{n-i} x_{i+1}, B_0 = 1.

    Args:
        xs (Sequence): x_1..x_n
        ring (CoefficientRing): value ring

    Returns:
        list: B_0..B_n
    """
    xs = [ring.coerce(x) for x in xs]
    bs = [ring.one()]
    for n in range(len(xs)):
        total = ring.zero()
        for i in range(n + 1):
            term = ring.mul(bs[n - i], xs[i])
            total = ring.add(total, ring.scale(term, math.comb(n, i)))
        bs.append(total)
    return bs


def coeffs_via_bell_poly(g, limit, ring=RATIONALS):
    """Coefficients a(n) = B_n(-0! g(1), ..., -(n-1)! g(n)) / n!.

    Returns:
        CoefficientSequence: a(0..N)
    """
    gv = _driver_values(g, limit, ring)
    factorials = [1]
    for n in range(1, limit + 1):
        factorials.append(factorials[-1] * n)
    xs = [ring.scale(gv[m - 1], -factorials[m - 1]) for m in range(1, limit + 1)]
    bs = complete_bell(xs, ring)
    return CoefficientSequence(
        tuple(ring.div_int(b, factorials[n]) for n, b in enumerate(bs)), ring
    )


def coeffs_via_product(g, limit, ring=RATIONALS):
    """Coefficients by expanding the Euler product with the Bell exponents of g.

    Returns:
        CoefficientSequence: a(0..N)
    """
    if limit == 0:
        return CoefficientSequence((ring.one(),), ring)
    beta = bell_exponents(g, limit, ring)
    return CoefficientSequence(series.euler_product(beta, limit, ring).coeffs, ring)


_PATHS = {
    "recurrence": coeffs_via_recurrence,
    "bellpoly": coeffs_via_bell_poly,
    "product": coeffs_via_product,
}


def transform(g, limit, path="recurrence", ring=RATIONALS):
    """Compute a(0..N) by the named path (recurrence, bellpoly or product)."""
    if path not in _PATHS:
        raise DomainError(f"unknown path {path!r} (known: {', '.join(_PATHS)})")
    name = getattr(g, "name", "sequence")
    logger.debug("Bell transform of %s to order %d via %s", name, limit, path)
    return _PATHS[path](g, limit, ring)


def check_all_paths(g, limit, ring=RATIONALS):
    """Compute coefficients by all three paths and compare them.

    Returns:
        CoefficientSequence: the (common) coefficients

    Raises:
        PathMismatchError: naming the first index where paths disagree
    """
    results = {path: transform(g, limit, path, ring) for path in COEFFICIENT_PATHS}
    reference = results[COEFFICIENT_PATHS[0]]
    for n in range(limit + 1):
        values = {path: r[n] for path, r in results.items()}
        if not all(ring.eq(v, reference[n]) for v in values.values()):
            raise PathMismatchError(n, values)
    return reference


def recover_driver(a, ring=RATIONALS):
    """Recover the driver whose Bell transform has coefficients a.

    Solves the recurrence for g: g(n) = -n a(n) - sum_{k=1..n-1} g(k) a(n-k).

    Args:
        a (CoefficientSequence | Sequence): a(0..N) with a(0) = 1
        ring (CoefficientRing): ring of plain sequences

    Returns:
        list: g(1..N)

    Raises:
        DomainError: if a(0) != 1
    """
    if not isinstance(a, CoefficientSequence):
        a = CoefficientSequence(tuple(ring.coerce(v) for v in a), ring)
    ring = a.ring
    values = a.values
    g = []
    for n in range(1, a.limit + 1):
        s = ring.dot(g, reversed(values[1:n]))
        g.append(ring.sub(ring.scale(values[n], -n), s))
    return g
