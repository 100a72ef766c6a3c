from fractions import Fraction

import pytest
import sympy
from pydantic import ValidationError

from bellkit import bell, congruence, series
from bellkit.arithfn import builtin_driver, divisors, is_prime, mobius
from bellkit.congruence import (
    CongruenceReport,
    Violation,
    check_exponent_hypothesis,
    check_vanishing_hypothesis,
    colored_partitions,
    cyclotomic,
    preset_sequence,
    r4_coefficients,
    reduce_mod_p,
    tau,
    verify_congruence,
    verify_vanishing,
)
from bellkit.errors import DomainError, PIntegralityError
from bellkit.polynomial import Polynomial

PRIMES = [p for p in range(2, 20) if is_prime(p)]


def sympy_polynomial(expr):
    x = sympy.Symbol("x")
    gens = sorted(expr.free_symbols, key=str) or [x]
    coeffs = sympy.Poly(expr, *gens).all_coeffs()[::-1]
    return Polynomial(Fraction(int(c.p), int(c.q)) for c in coeffs)


class TestReduction:
    def test_reduce(self):
        assert reduce_mod_p(Fraction(1, 3), 2) == 1
        assert reduce_mod_p(Fraction(-1, 3), 5) == 3
        assert reduce_mod_p(10, 5) == 0

    def test_not_p_integral(self):
        with pytest.raises(PIntegralityError) as info:
            reduce_mod_p(Fraction(1, 6), 3, index=7)
        assert info.value.index == 7
        assert info.value.p == 3


class TestHypotheses:
    def test_mobius_exponents_fail_at_two(self):
        beta = bell.bell_exponents(builtin_driver("epsilon"), 20)
        assert not check_exponent_hypothesis(beta, 2)

    def test_constant_exponents(self):
        beta = bell.BellExponentSequence(tuple(Fraction(24) for _ in range(30)))
        assert check_exponent_hypothesis(beta, 2)
        assert check_exponent_hypothesis(beta, 3)
        assert not check_exponent_hypothesis(beta, 5)

    def test_non_p_integral_exponent(self):
        beta = bell.BellExponentSequence((Fraction(1, 3), Fraction(0)))
        with pytest.raises(PIntegralityError):
            check_exponent_hypothesis(beta, 3)

    def test_vanishing_hypothesis(self):
        beta = bell.BellExponentSequence((Fraction(0), Fraction(1), Fraction(0)))
        assert check_vanishing_hypothesis(beta, 2)
        assert not check_vanishing_hypothesis(beta, 3)

    @pytest.mark.parametrize("p", [1, 4, 9, 0])
    def test_modulus_must_be_prime(self, p):
        beta = bell.BellExponentSequence((Fraction(0),))
        with pytest.raises(DomainError):
            check_exponent_hypothesis(beta, p)
        with pytest.raises(DomainError):
            verify_congruence([1, 0], p)


class TestTau:
    def test_first_values(self):
        assert tau(6) == [1, -24, 252, -1472, 4830, -6048]

    def test_rejects_empty(self):
        with pytest.raises(DomainError):
            tau(0)

    def test_ramanujan_congruences(self):
        values = [None] + tau(1000)
        assert all(values[n] % 2 == 0 for n in range(2, 1001, 2))
        assert all(values[n] % 3 == 0 for n in range(1, 1001) if n % 3 != 1)

    @pytest.mark.parametrize("p", [2, 3])
    def test_sweep(self, p):
        a, beta = preset_sequence("tau", 1000)
        report = verify_congruence(a, p, beta=beta)
        assert report.verdict
        assert report.hypothesis_ok
        assert report.violations == []
        assert report.limit == 1000

    def test_sweep_fails_at_five(self):
        a, beta = preset_sequence("tau", 30)
        report = verify_congruence(a, 5, beta=beta)
        assert not report.hypothesis_ok
        assert not report.verdict
        assert report.violations[0] == Violation(n=1, residue="1")


class TestColoredPartitions:
    def test_partitions(self):
        assert colored_partitions(1, 10) == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]

    def test_two_colors(self):
        assert colored_partitions(2, 5) == [1, 2, 5, 10, 20, 36]

    @pytest.mark.parametrize("k", range(1, 6))
    def test_positive_integers(self, k):
        product = series.euler_product(lambda m: -k, 200)
        assert all(c.denominator == 1 and c > 0 for c in product.coeffs)
        assert colored_partitions(k, 200) == [int(c) for c in product.coeffs]

    @pytest.mark.parametrize("p", [2, 3, 5, 7, 11])
    def test_congruence(self, p):
        a, beta = preset_sequence("colored", 300, k=p)
        report = verify_congruence(a, p, beta=beta)
        assert report.verdict
        assert report.hypothesis_ok

    def test_hypothesis_from_coefficients(self):
        a = colored_partitions(5, 40)
        report = verify_congruence(a, 5)
        assert report.hypothesis_ok
        assert report.verdict
        report = verify_congruence(a, 3)
        assert not report.hypothesis_ok
        assert not report.verdict

    def test_rejects_no_colors(self):
        with pytest.raises(DomainError):
            colored_partitions(0, 5)


class TestCyclotomic:
    def test_small(self):
        x = Polynomial.x()
        assert cyclotomic(1) == 1 - x
        assert cyclotomic(2) == 1 + x
        assert cyclotomic(12) == x * x * x * x - x * x + 1

    def test_matches_sympy(self):
        for q in range(2, 61):
            assert cyclotomic(q) == sympy_polynomial(sympy.cyclotomic_poly(q))

    def test_factorization_of_x_power_minus_one(self):
        for n in range(1, 61):
            product = Polynomial.constant(1)
            for d in divisors(n):
                product = product * cyclotomic(d)
            assert product == 1 - Polynomial.monomial(n)

    def test_integral_coefficients(self):
        for q in (105, 165, 195):
            poly = cyclotomic(q)
            assert poly.is_integral()
            assert poly.degree == sympy.totient(q)
        assert cyclotomic(105).coeff(7) == -2

    def test_vanishing_sweep(self):
        for q in range(1, 301):
            for p in PRIMES:
                if q % (p * p):
                    continue
                a, beta = preset_sequence("cyclotomic", q=q)
                report = verify_vanishing(a, p, beta=beta)
                assert report.verdict, (q, p)
                assert report.hypothesis_ok, (q, p)

    def test_vanishing_fails_without_square(self):
        a, beta = preset_sequence("cyclotomic", q=6)
        report = verify_vanishing(a, 2, beta=beta)
        assert not report.verdict
        assert not report.hypothesis_ok
        assert report.violations[0] == Violation(n=1, residue="-1")

    def test_exponents_are_mobius_values(self):
        _, beta = preset_sequence("cyclotomic", limit=18, q=18)
        expected = [mobius(18 // m) if 18 % m == 0 else 0 for m in range(1, 19)]
        assert list(beta.values) == expected


class TestFourSquares:
    def test_first_values(self):
        assert r4_coefficients(4).values == (1, -8, 20, 0, -62)
        assert r4_coefficients(0).values == (1,)

    def test_matches_driver(self):
        expected = bell.coeffs_via_recurrence(builtin_driver("r4"), 60)
        assert r4_coefficients(60) == expected

    def test_parity(self):
        a = r4_coefficients(64)
        for n in range(1, 65):
            if n % 8:
                assert a[n] % 2 == 0
        assert a[8] % 2 == 1

    def test_congruence_sweep(self):
        a, beta = preset_sequence("r4", 200)
        report = verify_congruence(a, 2, beta=beta)
        assert report.verdict
        assert report.hypothesis_ok


class TestReports:
    def test_vanishing_residues_are_values(self):
        report = verify_vanishing([1, -1, Fraction(1, 2), Fraction(-1, 6)], 2)
        assert report.theorem == "vanishing"
        assert [v.residue for v in report.violations] == ["-1", "-1/6"]
        assert not report.hypothesis_ok

    def test_congruence_reports_non_p_integral_coefficient(self):
        a = bell.coeffs_via_recurrence(builtin_driver("epsilon"), 3)
        with pytest.raises(PIntegralityError) as info:
            verify_congruence(a, 2)
        assert info.value.index == 3

    def test_limit(self):
        a = colored_partitions(2, 20)
        report = verify_congruence(a, 2, limit=10)
        assert report.limit == 10
        with pytest.raises(DomainError):
            verify_congruence(a, 2, limit=21)

    def test_empty_sweep(self):
        report = verify_congruence([1], 3)
        assert report.verdict
        assert report.hypothesis_ok

    def test_verdict_consistency(self):
        with pytest.raises(ValidationError):
            CongruenceReport(
                theorem="congruence",
                p=2,
                limit=3,
                hypothesis_ok=True,
                verdict=True,
                violations=[Violation(n=1, residue="1")],
            )
        with pytest.raises(ValidationError):
            CongruenceReport(
                theorem="congruence",
                p=2,
                limit=3,
                hypothesis_ok=True,
                verdict=False,
                violations=[Violation(n=2, residue="1")],
            )


class TestPresets:
    def test_unknown(self):
        with pytest.raises(DomainError):
            preset_sequence("magic", 5)

    def test_missing_parameters(self):
        with pytest.raises(DomainError):
            preset_sequence("colored", 5)
        with pytest.raises(DomainError):
            preset_sequence("cyclotomic")
        with pytest.raises(DomainError):
            preset_sequence("tau")

    def test_float_driver_rejected(self):
        with pytest.raises(DomainError):
            preset_sequence("driver", 5, driver="log_float")

    def test_driver(self):
        a, beta = preset_sequence("driver", 4, driver="power_k", params=["0"])
        assert a.values == (1, -1, 0, 0, 0)
        assert beta.values == (1, 0, 0, 0)
        a, beta = preset_sequence("driver", 0, driver="epsilon")
        assert beta is None
        assert congruence.PRESETS[-1] == "driver"
