from fractions import Fraction
from itertools import product

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from bellkit import arithfn, environment
from bellkit.arithfn import (
    ArithmeticFunction,
    Factorizer,
    dirichlet_convolve,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    jordan_totient,
    mobius,
    ramanujan_sum,
    sigma,
)
from bellkit.errors import ConfigurationError, DomainError

one = ArithmeticFunction(lambda n: Fraction(1), "one")
identity = ArithmeticFunction(Fraction, "id")
mu = ArithmeticFunction(mobius, "mobius")
sigma_1 = ArithmeticFunction(lambda n: sigma(1, n), "sigma")


@pytest.mark.parametrize("n, expected", [(1, 1), (2, -1), (12, 0), (30, -1), (35, 1)])
def test_mobius(n, expected):
    assert mobius(n) == expected


@pytest.mark.parametrize("n", [0, -3])
def test_mobius_rejects_nonpositive(n):
    with pytest.raises(DomainError):
        mobius(n)


def test_mobius_matches_sympy():
    for n in range(1, 300):
        assert mobius(n) == int(sympy.mobius(n))


def test_convolution_of_mobius_and_one_is_identity_element():
    assert dirichlet_convolve(mu, one, 1) == 1
    assert all(dirichlet_convolve(mu, one, n) == 0 for n in range(2, 10 ** 4 + 1))


def test_convolution_of_mobius_and_identity():
    values = [dirichlet_convolve(mu, identity, m) / m for m in range(1, 7)]
    expected = [Fraction(1), Fraction(1, 2), Fraction(2, 3), Fraction(1, 2)]
    assert values == expected + [Fraction(4, 5), Fraction(1, 3)]
    assert all(
        dirichlet_convolve(mu, identity, m) == euler_phi(m) for m in range(1, 100)
    )


def test_mobius_inverts_sigma():
    for n in range(1, 51):
        assert dirichlet_convolve(mu, sigma_1, n) == n


@settings(max_examples=5)
@given(st.randoms(use_true_random=False))
def test_mobius_inversion_round_trip(rng):
    limit = 2000
    f = [rng.randint(-5, 5) for _ in range(limit)]
    summatory = [0] * (limit + 1)
    for d in range(1, limit + 1):
        for n in range(d, limit + 1, d):
            summatory[n] += f[d - 1]
    big_f = ArithmeticFunction(summatory.__getitem__, "summatory")
    assert [dirichlet_convolve(mu, big_f, n) for n in range(1, limit + 1)] == f


def test_totients_match_sympy():
    assert euler_phi(1) == 1
    for n in range(1, 200):
        assert euler_phi(n) == int(sympy.totient(n))
        assert sigma(1, n) == int(sympy.divisor_sigma(n, 1))
        assert sigma(0, n) == int(sympy.divisor_sigma(n, 0))


def test_jordan_totient():
    assert jordan_totient(2, 4) == 12
    for k in range(5):
        for n in range(1, 501):
            expected = sum(mobius(n // d) * d ** k for d in divisors(n))
            assert jordan_totient(k, n) == expected


def test_sigma_of_non_integral_argument_is_zero():
    assert sigma(1, Fraction(6, 4)) == 0
    assert sigma(1, Fraction(8, 4)) == 3
    assert sigma(1, 6) == 12


def test_ramanujan_sum():
    for q in range(1, 40):
        assert ramanujan_sum(q, 1) == mobius(q)
        assert ramanujan_sum(q, q) == euler_phi(q)
        assert ramanujan_sum(1, q) == 1


def test_r4_matches_brute_force():
    squares = {}
    for quadruple in product(range(-7, 8), repeat=4):
        total = sum(v * v for v in quadruple)
        squares[total] = squares.get(total, 0) + 1
    for n in range(1, 51):
        assert arithfn.r4(n) == squares[n]


def test_chi4():
    assert [arithfn.chi4(n) for n in range(1, 9)] == [1, 0, -1, 0, 1, 0, -1, 0]


def test_von_mangoldt():
    assert arithfn.von_mangoldt(8) == 2
    assert arithfn.von_mangoldt(12) is None
    assert arithfn.von_mangoldt(1) is None
    assert arithfn.von_mangoldt_float(9) == pytest.approx(1.0986122886681098)
    assert arithfn.von_mangoldt_float(10) == 0.0


def test_divisors():
    assert divisors(1) == [1]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert divisors(49) == [1, 7, 49]


@given(st.integers(1, 10 ** 6))
def test_divisors_match_sympy(n):
    assert divisors(n) == sympy.divisors(n)


@given(st.integers(1, 10 ** 8))
def test_factorize_round_trip(n):
    factors = factorize(n)
    assert all(is_prime(p) for p in factors)
    value = 1
    for p, e in factors.items():
        value *= p ** e
    assert value == n


def test_trial_division_above_sieve_bound():
    factorizer = Factorizer(10)
    assert factorizer.factorize(9991) == {97: 1, 103: 1}
    assert factorizer.factorize(2 ** 5 * 3) == {2: 5, 3: 1}
    assert factorizer.factorize(7) == {7: 1}


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert not is_prime(Fraction(3))


class TestSieveBound:
    def test_default(self, monkeypatch):
        monkeypatch.delenv(environment.SIEVE_BOUND_VARIABLE, raising=False)
        assert environment.sieve_bound() == environment.DEFAULT_SIEVE_BOUND

    def test_override(self, monkeypatch):
        monkeypatch.setenv(environment.SIEVE_BOUND_VARIABLE, "100")
        assert environment.sieve_bound() == 100
        assert factorize(10 ** 4 + 7) == sympy.factorint(10 ** 4 + 7)

    @pytest.mark.parametrize("raw", ["abc", "0", "-5", "1.5"])
    def test_invalid(self, monkeypatch, raw):
        monkeypatch.setenv(environment.SIEVE_BOUND_VARIABLE, raw)
        with pytest.raises(ConfigurationError):
            environment.sieve_bound()


class TestArithmeticFunction:
    def test_values(self):
        assert identity.values(4) == [1, 2, 3, 4]

    @pytest.mark.parametrize("n", [0, -1, 1.0, True])
    def test_rejects_non_positive_integers(self, n):
        with pytest.raises(DomainError):
            identity(n)

    def test_immutable(self):
        with pytest.raises(AttributeError):
            identity.name = "other"


def test_list_drivers():
    names = [d["name"] for d in arithfn.list_drivers()]
    assert names == sorted(names)
    assert set(names) >= {
        "epsilon",
        "power_k",
        "chi4",
        "phi",
        "ramanujan_q",
        "log_float",
        "r4",
        "constant_c",
        "custom_file",
    }
