import math
from fractions import Fraction

import pytest

from evenfourier.arith import EPSILON, IDENTITY, TAU, ramanujan_sum
from evenfourier.errors import ModulusMismatchError, NotEvenError
from evenfourier.even import (
    EvenFunction,
    PeriodicTable,
    cauchy_convolve,
    completely_even,
    constant_even,
    epsilon_even,
    eta_even,
    evaluate,
    fourier_coefficients,
    from_core,
    from_periodic,
    make_even,
    mobius_core,
    ramanujan_even,
    rational_str,
    rho,
)

F = Fraction


def test_make_even_examples():
    f = make_even(1, [5])
    assert all(f(n) == 5 for n in range(-3, 10))
    assert make_even(6, [1, 0, 0, 0]) == rho(6)
    alt = make_even(4, [-1, 1, 1])
    assert [alt(n) for n in range(1, 9)] == [(-1) ** n for n in range(1, 9)]


def test_make_even_wrong_length():
    with pytest.raises(ValueError):
        make_even(6, [1, 2, 3])


def test_evaluate_examples():
    r6 = rho(6)
    assert evaluate(r6, 35) == 1
    assert evaluate(r6, 10) == 0
    assert evaluate(ramanujan_even(6), 4) == ramanujan_sum(6, 2) == -1
    assert evaluate(r6, 0) == r6(6) == 0
    assert evaluate(r6, -5) == 1


def test_from_periodic_examples():
    assert from_periodic(PeriodicTable(4, (0, 0, 0, 1))).values == (0, 0, 1)
    with pytest.raises(NotEvenError) as info:
        from_periodic(PeriodicTable(4, (1, 0, 0, 0)))
    assert info.value.residue == 3
    assert from_periodic(PeriodicTable(1, (F(7, 3),))).values == (F(7, 3),)


def test_from_periodic_roundtrip_and_exactness():
    f = make_even(12, [F(1, 2), -1, 3, 0, 2, F(-5, 7)])
    assert from_periodic(f.expand()) == f
    with pytest.raises(TypeError):
        from_periodic(PeriodicTable(2, (1.0, 2.0)))


def test_mobius_core_examples():
    assert mobius_core(rho(6)) == (1, -1, -1, 1)
    assert from_core(6, (1, -1, -1, 1)) == rho(6)
    for r in (1, 7, 12, 30):
        assert mobius_core(constant_even(r)) == (1,) + (0,) * (len(constant_even(r).values) - 1)
    assert mobius_core(completely_even(TAU, 6)) == (1, 1, 1, 1)


def test_fourier_coefficients_examples():
    c6 = ramanujan_even(6)
    assert fourier_coefficients(c6).alpha == (0, 0, 0, 1)
    assert fourier_coefficients(rho(6)).alpha == (F(1, 3), F(-1, 3), F(-1, 6), F(1, 6))
    assert fourier_coefficients(rho(6)).expand() == rho(6)
    assert fourier_coefficients(constant_even(10)).alpha == (1, 0, 0, 0)


def test_fourier_coefficients_basis_vectors():
    r = 12
    for q in (1, 2, 3, 4, 6, 12):
        alpha = fourier_coefficients(ramanujan_even(r, q)).as_dict()
        assert alpha == {d: int(d == q) for d in alpha}


def brute_cauchy(f, h, n):
    return sum((f(a) * h(n - a) for a in range(f.r)), F(0))


def test_cauchy_examples():
    f = make_even(12, [F(1, 2), -1, 3, 0, 2, F(-5, 7)])
    assert cauchy_convolve(f, epsilon_even(12)) == f
    assert cauchy_convolve(rho(4), rho(4))(2) == 2
    assert cauchy_convolve(rho(3), rho(3))(1) == 1


def test_cauchy_matches_definition_on_all_residues():
    f = make_even(8, [1, F(2, 3), -1, 4])
    h = make_even(8, [0, 1, F(-1, 2), 3])
    out = cauchy_convolve(f, h)
    for n in range(1, 17):
        assert out(n) == brute_cauchy(f, h, n)


def test_cauchy_modulus_mismatch():
    with pytest.raises(ModulusMismatchError):
        cauchy_convolve(rho(4), rho(6))


def test_completely_even_examples():
    for r in (1, 5, 12):
        assert completely_even(EPSILON, r) == rho(r)
    assert completely_even(TAU, 6).values == (1, 2, 2, 4)
    assert completely_even(IDENTITY, 4).values == (1, 2, 4)


def test_eta_and_epsilon():
    assert eta_even(6).values == (0, 0, 0, 6)
    assert epsilon_even(6).values == (0, 0, 0, 1)
    assert PeriodicTable.eta(6).residues == eta_even(6).expand().residues


def test_arithmetic_and_norm():
    f = make_even(6, [1, 2, 3, 4])
    g = make_even(6, [1, 1, 1, 1])
    assert (f + g).values == (2, 3, 4, 5)
    assert (f - g).values == (0, 1, 2, 3)
    assert (f * g) == f
    assert (2 * f).values == (2, 4, 6, 8)
    assert f.norm1() == sum(abs(f(n)) for n in range(1, 7))
    with pytest.raises(ModulusMismatchError):
        f + rho(4)


def test_json_roundtrip():
    f = make_even(12, [F(1, 2), -1, 3, 0, 2, F(-5, 7)])
    text = f.to_json()
    assert '"1/2"' in text and '"-1/1"' in text
    assert EvenFunction.from_json(text) == f
    with pytest.raises(ValueError):
        EvenFunction.from_json('{"r": 6, "divisors": [1, 2, 3], "values": ["1/1", "1/1", "1/1"]}')


def test_rational_str():
    assert rational_str(F(-6, 4)) == "-3/2"
    assert rational_str(5) == "5/1"
    assert rational_str(5, human=True) == "5"
    assert rational_str(F(0)) == "0/1"


def test_ramanujan_even_needs_divisor():
    with pytest.raises(ValueError):
        ramanujan_even(6, 4)


def test_gcd_definition_holds():
    f = completely_even(TAU, 36)
    assert all(f(n) == TAU(math.gcd(n, 36)) for n in range(1, 200))
