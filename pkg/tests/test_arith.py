import cmath
import math
from fractions import Fraction

import pytest

from evenfourier import arith
from evenfourier.arith import (
    IDENTITY,
    MOBIUS,
    ONE,
    TAU,
    ArithFunction,
    LogCombination,
    classical,
    dirichlet_convolve,
    divisors,
    factorize,
    mobius_transform,
    ramanujan_sum,
    ramanujan_sum_exponential,
    ramanujan_sum_holder,
)
from evenfourier.errors import BoundError, NumericInstabilityError


def brute_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def brute_mobius(n):
    out, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    return -out if m > 1 else out


def test_factorize_examples():
    assert factorize(1).factors == ()
    assert factorize(12).factors == ((2, 2), (3, 1))
    fac = factorize(720720)
    assert fac.factors == ((2, 4), (3, 2), (5, 1), (7, 1), (11, 1), (13, 1))
    assert math.prod(p**e for p, e in fac.factors) == 720720


def test_factorize_large_prime_and_bounds():
    assert factorize(999999000001).factors == ((999999000001, 1),)
    with pytest.raises(BoundError):
        factorize(10**12 + 1)
    for bad in (0, -3):
        with pytest.raises(ValueError):
            factorize(bad)


@pytest.mark.parametrize("n", [1, 2, 6, 12, 36, 97, 360, 1001])
def test_divisors_match_enumeration(n):
    assert divisors(n) == brute_divisors(n)


def test_divisors_examples():
    assert divisors(1) == [1]
    assert divisors(6) == [1, 2, 3, 6]
    assert divisors(12) == [1, 2, 3, 4, 6, 12]


def test_classical_examples():
    assert classical("mobius", 6) == 1
    assert classical("euler_phi", 6) == 2
    assert classical("phi_k", 12, k=1) == 4
    assert sum(d * brute_mobius(12 // d) for d in brute_divisors(12)) == 4
    assert classical("tau", 12) == 6
    assert classical("sigma_k", 6, k=2) == 1 + 4 + 9 + 36
    assert classical("phi_k", 6, k=-1) == Fraction(1, 6) - Fraction(1, 3) - Fraction(1, 2) + 1


def test_classical_rejects_unknown_kind():
    with pytest.raises(ValueError):
        classical("liouville", 5)


def test_mobius_matches_brute_force():
    assert all(arith.mobius(n) == brute_mobius(n) for n in range(1, 500))


def test_von_mangoldt_is_symbolic():
    assert arith.von_mangoldt(8) == LogCombination.of([(2, 1)])
    assert arith.von_mangoldt(6).is_zero
    assert arith.von_mangoldt(1).is_zero
    assert float(arith.von_mangoldt(9)) == pytest.approx(math.log(3))
    total = arith.von_mangoldt(4) + arith.von_mangoldt(2).scale(-1)
    assert total.is_zero


def test_dirichlet_convolve_examples():
    assert dirichlet_convolve(MOBIUS, ONE, 1) == 1
    assert dirichlet_convolve(MOBIUS, ONE, 10) == 0
    assert dirichlet_convolve(ONE, ONE, 12) == 6


def test_mobius_transform_examples():
    assert mobius_transform(ONE, 5) == 0
    assert mobius_transform(IDENTITY, 6) == 2
    assert mobius_transform(TAU, 4) == 1


def test_multiplicative_declaration_checked():
    with pytest.raises(ValueError):
        ArithFunction(lambda n: 2 * n, "twice", multiplicative=True)


def exponential_reference(q, n):
    return sum(cmath.exp(2j * math.pi * k * n / q) for k in range(1, q + 1) if math.gcd(k, q) == 1)


def test_ramanujan_examples():
    assert all(ramanujan_sum(1, n) == 1 for n in range(-5, 20))
    assert ramanujan_sum(6, 12) == 2
    assert ramanujan_sum(4, 2) == -2
    assert round(exponential_reference(4, 2).real) == -2
    assert ramanujan_sum_holder(6, 1) == 1
    assert ramanujan_sum_holder(4, 2) == -2
    assert ramanujan_sum_holder(5, 5) == 4
    assert ramanujan_sum_exponential(2, 1) == -1
    assert ramanujan_sum_exponential(6, 2) == -1
    assert ramanujan_sum_exponential(6, 6) == 2


def test_ramanujan_zero_and_negative_arguments():
    for q in range(1, 30):
        assert ramanujan_sum(q, 0) == arith.euler_phi(q)
        assert ramanujan_sum(q, -7) == ramanujan_sum(q, 7)
        assert ramanujan_sum_holder(q, 0) == arith.euler_phi(q)


def test_ramanujan_sum_rejects_bad_modulus():
    with pytest.raises(ValueError):
        ramanujan_sum(0, 3)


def test_exponential_oracle_bound_and_tolerance():
    with pytest.raises(BoundError):
        ramanujan_sum_exponential(10**4 + 1, 1)
    with pytest.raises(NumericInstabilityError):
        # tolerance far below double rounding noise
        ramanujan_sum_exponential(997, 3, tol=1e-300)


def test_ramanujan_table_entries():
    r = 360
    table = arith.ramanujan_table(r)
    divs = divisors(r)
    for i, d in enumerate(divs):
        for j, e in enumerate(divs):
            assert table[i][j] == ramanujan_sum(r // d, e)
