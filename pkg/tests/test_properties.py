import math
from fractions import Fraction

import hypothesis.strategies as st
from hypothesis import given, settings

from evenfourier import arith
from evenfourier import transform as tr
from evenfourier.arith import divisor_tuple
from evenfourier.even import EvenFunction, cauchy_convolve, fourier_coefficients, from_periodic

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)
moduli = st.integers(min_value=1, max_value=360)


@st.composite
def even_functions(draw, r=None):
    r = draw(moduli) if r is None else r
    values = draw(st.lists(rationals, min_size=len(divisor_tuple(r)), max_size=len(divisor_tuple(r))))
    return EvenFunction(r, tuple(values))


@st.composite
def even_pairs(draw):
    r = draw(st.integers(min_value=1, max_value=48))
    return draw(even_functions(r)), draw(even_functions(r))


@given(st.integers(min_value=1, max_value=300), st.integers(min_value=-1000, max_value=1000))
def test_ramanujan_paths_agree(q, n):
    assert arith.ramanujan_sum(q, n) == arith.ramanujan_sum_holder(q, n) == arith.ramanujan_sum_exponential(q, n)


@given(st.integers(min_value=1, max_value=10**9))
def test_factorization_multiplies_back(n):
    fac = arith.factorize(n)
    assert math.prod(p**e for p, e in fac.factors) == n


@given(even_functions())
def test_transform_is_involution_up_to_r(f):
    assert tr.dft(tr.dft(f)) == f * f.r
    assert tr.idft(tr.dft(f)) == f


@given(even_functions())
def test_structured_equals_core(f):
    assert tr.dft(f) == tr.dft_via_core(f)


@settings(max_examples=40)
@given(even_functions())
def test_structured_matches_naive(f):
    fast = tr.dft(f).expand().residues
    slow = tr.dft_naive(f.expand()).residues
    assert max(abs(complex(a) - b) for a, b in zip(fast, slow)) <= 1e-9 * float(f.norm1())


@given(even_functions(), rationals)
def test_transform_is_linear(f, c):
    g = EvenFunction(f.r, tuple(reversed(f.values)))
    assert tr.dft(f * c + g) == tr.dft(f) * c + tr.dft(g)


@given(even_functions())
def test_periodic_round_trip(f):
    assert from_periodic(f.expand()) == f


@given(even_functions())
def test_coefficients_resum(f):
    coeffs = fourier_coefficients(f)
    assert coeffs.expand() == f


@settings(max_examples=30)
@given(even_pairs())
def test_cauchy_exchanges_with_product(pair):
    f, h = pair
    assert tr.dft(cauchy_convolve(f, h)) == tr.dft(f) * tr.dft(h)


@given(even_functions())
def test_json_round_trip(f):
    assert EvenFunction.from_json(f.to_json()) == f


@given(st.integers(min_value=1, max_value=30), st.integers(min_value=1, max_value=3), st.integers(min_value=-50, max_value=50))
def test_congruence_count_matches_enumeration(r, k, n):
    assert tr.count_congruence_solutions(r, k, n) == tr.congruence_bruteforce(r, k, n)


@given(even_functions(), st.fractions(min_value=1, max_value=5000, max_denominator=50))
def test_remainder_bound(f, x):
    from evenfourier.analytic import partial_sum_dft

    rep = partial_sum_dft(f, x)
    assert abs(rep.remainder) <= rep.bound
    assert rep.exact_sum == f(f.r) * Fraction(x) + rep.remainder
