"""Congruence inheritance and exact vanishing sweeps.

If the Bell exponents beta(m) vanish modulo a prime p for every m not
divisible by p, so do the coefficients a(n) for every n not divisible by p;
if the exponents vanish exactly, so do the coefficients. This module checks
both hypotheses and conclusions on concrete sequences and builds the
classical sequences they apply to.
"""
import logging
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel, model_validator

from bellkit import bell, series
from bellkit.arithfn import (
    ArithmeticFunction,
    builtin_driver,
    euler_phi,
    is_prime,
    mobius,
)
from bellkit.data.utils import format_value
from bellkit.errors import DomainError, PIntegralityError
from bellkit.polynomial import Polynomial
from bellkit.rings import RATIONALS

logger = logging.getLogger(__name__)

# Product form gives Phi_1 = 1 - x; the conventional Phi_1 is x - 1
CYCLOTOMIC_SIGN_NOTE = "product form: Phi_1 = 1 - x (conventional sign: x - 1)"


class Violation(BaseModel):
    """Index n (p does not divide n) where the conclusion fails."""

    n: int
    residue: str


class CongruenceReport(BaseModel):
    """Outcome of a congruence or vanishing sweep."""

    theorem: Literal["congruence", "vanishing"]
    preset: Optional[str] = None
    params: Dict[str, str] = {}
    note: Optional[str] = None
    p: int
    limit: int
    hypothesis_ok: bool
    verdict: bool
    violations: List[Violation] = []

    @model_validator(mode="after")
    def _check_consistency(self):
        if self.verdict != (not self.violations):
            raise ValueError("verdict must be true iff there are no violations")
        if any(v.n % self.p == 0 for v in self.violations):
            raise ValueError("violation reported at an index divisible by p")
        return self


def _check_prime(p):
    if not is_prime(p):
        raise DomainError(f"modulus must be prime, got {p}")


def reduce_mod_p(value, p, index=None):
    """Reduce p-integral rational u/v to u * v^-1 mod p.

    Raises:
        PIntegralityError: if p divides the denominator
    """
    value = Fraction(value)
    if value.denominator % p == 0:
        raise PIntegralityError(index, p, value)
    return value.numerator * pow(value.denominator, -1, p) % p


def _limit(sequence_limit, limit):
    if limit is None:
        return sequence_limit
    if limit > sequence_limit:
        raise DomainError(f"limit {limit} exceeds sequence limit {sequence_limit}")
    return limit


def check_exponent_hypothesis(beta, p, limit=None):
    """Check beta(m) = 0 mod p for all m <= limit with p not dividing m.

    Args:
        beta (BellExponentSequence): exponents
        p (int): prime
        limit (int): largest m checked (defaults to beta.limit)

    Returns:
        bool: whether the congruence hypothesis holds

    Raises:
        PIntegralityError: if some checked beta(m) is not p-integral
    """
    _check_prime(p)
    limit = _limit(beta.limit, limit)
    residues = [reduce_mod_p(beta(m), p, m) for m in range(1, limit + 1) if m % p]
    return not any(residues)


def check_vanishing_hypothesis(beta, p, limit=None):
    """Check beta(m) = 0 exactly for all m <= limit with p not dividing m."""
    _check_prime(p)
    limit = _limit(beta.limit, limit)
    ring = beta.ring
    return all(ring.is_zero(beta(m)) for m in range(1, limit + 1) if m % p)


def _coefficients(a):
    if isinstance(a, bell.CoefficientSequence):
        return a
    return bell.CoefficientSequence(tuple(RATIONALS.coerce(v) for v in a))


def _derived_exponents(a, limit):
    return bell.bell_exponents(bell.recover_driver(a), limit, a.ring)


def verify_congruence(a, p, limit=None, beta=None):
    """Report all n <= limit with p not dividing n and a(n) != 0 mod p.

    Args:
        a (CoefficientSequence | Sequence): coefficients a(0..N)
        p (int): prime
        limit (int): largest index checked (defaults to N)
        beta (BellExponentSequence): exponents for the hypothesis check; derived
            from the coefficients when omitted

    Returns:
        CongruenceReport: sweep outcome

    Raises:
        PIntegralityError: if a checked coefficient is not p-integral
    """
    _check_prime(p)
    a = _coefficients(a)
    limit = _limit(a.limit, limit)

    violations = []
    for n in range(1, limit + 1):
        if n % p == 0:
            continue
        residue = reduce_mod_p(a[n], p, n)
        if residue:
            violations.append(Violation(n=n, residue=str(residue)))

    if limit == 0:
        hypothesis = True
    else:
        if beta is None:
            beta = _derived_exponents(a, limit)
        try:
            hypothesis = check_exponent_hypothesis(beta, p, limit)
        except PIntegralityError:
            hypothesis = False

    logger.debug(
        "Congruence sweep p=%d limit=%d: %d violation(s)", p, limit, len(violations)
    )
    return CongruenceReport(
        theorem="congruence",
        p=p,
        limit=limit,
        hypothesis_ok=hypothesis,
        verdict=not violations,
        violations=violations,
    )


def verify_vanishing(a, p, limit=None, beta=None):
    """Report all n <= limit with p not dividing n and a(n) != 0 exactly.

    Residues in the report are the offending coefficients themselves.
    """
    _check_prime(p)
    a = _coefficients(a)
    limit = _limit(a.limit, limit)
    ring = a.ring

    violations = [
        Violation(n=n, residue=format_value(a[n]))
        for n in range(1, limit + 1)
        if n % p and not ring.is_zero(a[n])
    ]
    if limit == 0:
        hypothesis = True
    else:
        if beta is None:
            beta = _derived_exponents(a, limit)
        hypothesis = check_vanishing_hypothesis(beta, p, limit)

    logger.debug(
        "Vanishing sweep p=%d limit=%d: %d violation(s)", p, limit, len(violations)
    )
    return CongruenceReport(
        theorem="vanishing",
        p=p,
        limit=limit,
        hypothesis_ok=hypothesis,
        verdict=not violations,
        violations=violations,
    )


def _constant_exponents(value, limit):
    return bell.BellExponentSequence(tuple(Fraction(value) for _ in range(limit)))


@lru_cache(maxsize=16)
def _product_table(value, limit):
    return tuple(series.euler_product(lambda m: value, limit).coeffs)


def tau(limit):
    """Ramanujan's tau(1..limit) from Delta(q)/q = prod (1 - q^m)^24.

    Returns:
        list[int]: tau(n) = a(n - 1) for n = 1..limit
    """
    if limit < 1:
        raise DomainError(f"tau limit must be >= 1, got {limit}")
    return [int(c) for c in _product_table(24, limit - 1)]


def colored_partitions(k, limit):
    """Number of k-colored partitions p_k(0..limit), prod (1 - x^m)^-k.

    Returns:
        list[int]: p_k(0), ..., p_k(limit)
    """
    if k < 1:
        raise DomainError(f"number of colors must be >= 1, got {k}")
    return [int(c) for c in _product_table(-k, limit)]


def _cyclotomic_exponents(q):
    return lambda m: mobius(q // m) if q % m == 0 else 0


def cyclotomic(q):
    """Cyclotomic polynomial as the finite product prod_{m | q} (1 - x^m)^mu(q/m).

    For q = 1 this is 1 - x (see CYCLOTOMIC_SIGN_NOTE).

    Returns:
        Polynomial: integer polynomial of degree phi(q)
    """
    if q < 1:
        raise DomainError(f"cyclotomic index must be >= 1, got {q}")
    degree = int(euler_phi(q))
    product = series.euler_product(_cyclotomic_exponents(q), degree)
    return Polynomial(product.coeffs)


def r4_exponents(limit):
    """Exponents of prod ((1 - x^n) / (1 - x^4n))^8: 8 off multiples of 4, else 0."""
    return bell.BellExponentSequence(
        tuple(Fraction(0 if m % 4 == 0 else 8) for m in range(1, limit + 1))
    )


def r4_coefficients(limit):
    """Coefficients a(0..limit) of prod ((1 - x^n) / (1 - x^4n))^8."""
    if limit == 0:
        return bell.CoefficientSequence((Fraction(1),))
    product = series.euler_product(r4_exponents(limit), limit)
    return bell.CoefficientSequence(product.coeffs)


PRESETS = ("tau", "colored", "cyclotomic", "r4", "driver")


def preset_sequence(preset, limit=None, k=None, q=None, driver=None, params=()):
    """Build coefficients and their exponents for a named sweep preset.

    Args:
        preset (str): one of PRESETS
        limit (int): coefficient limit N (cyclotomic defaults to phi(q))
        k (int): number of colors (colored)
        q (int): cyclotomic index (cyclotomic)
        driver (str | ArithmeticFunction): driver or its name (driver)
        params (Sequence): driver parameters (driver)

    Returns:
        tuple[CoefficientSequence, BellExponentSequence | None]: coefficients
            and exponents (None when N = 0)
    """
    if preset == "cyclotomic":
        if q is None or q < 1:
            raise DomainError("cyclotomic preset needs q >= 1")
        if limit is None:
            limit = int(euler_phi(q))
    if limit is None or limit < 0:
        raise DomainError(f"preset {preset!r} needs a limit >= 0")

    if preset == "tau":
        beta = _constant_exponents(24, limit)
        values = _product_table(24, limit)
    elif preset == "colored":
        if k is None or k < 1:
            raise DomainError("colored preset needs k >= 1")
        beta = _constant_exponents(-k, limit)
        values = _product_table(-k, limit)
    elif preset == "cyclotomic":
        exponent = _cyclotomic_exponents(q)
        beta = bell.BellExponentSequence(
            tuple(Fraction(exponent(m)) for m in range(1, limit + 1))
        )
        values = series.euler_product(beta, limit).coeffs
    elif preset == "r4":
        beta = r4_exponents(limit)
        values = r4_coefficients(limit).values
    elif preset == "driver":
        g = driver
        if not isinstance(g, ArithmeticFunction):
            g = builtin_driver(driver, params)
        if not g.exact:
            raise DomainError(f"sweeps need an exact driver, {g.name!r} is float")
        values = bell.coeffs_via_recurrence(g, limit).values
        beta = bell.bell_exponents(g, limit) if limit else None
    else:
        raise DomainError(f"unknown preset {preset!r} (known: {', '.join(PRESETS)})")

    if limit == 0:
        beta = None
    return bell.CoefficientSequence(tuple(values)), beta
