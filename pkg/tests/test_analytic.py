import math
from fractions import Fraction

import pytest

from evenfourier import analytic
from evenfourier.arith import EPSILON, ONE, TAU, euler_phi, ramanujan_sum, sigma
from evenfourier.errors import PreconditionError
from evenfourier.even import completely_even, constant_even, make_even, rho


def test_partial_sum_examples():
    rep = analytic.partial_sum_dft(rho(6), 6)
    assert rep.exact_sum == sum(ramanujan_sum(6, n) for n in range(1, 7)) == 0
    assert rep.remainder == 0
    rep = analytic.partial_sum_dft(constant_even(6), 6)
    assert rep.exact_sum == 6 == rep.main_term
    rep = analytic.partial_sum_dft(completely_even(TAU, 4), 8)
    assert rep.exact_sum == sum(sigma(math.gcd(n, 4)) for n in range(1, 9)) == 24
    assert rep.main_term == 24


def test_partial_sum_fractional_x():
    f = make_even(12, [1, Fraction(1, 2), -3, 0, 2, 5])
    rep = analytic.partial_sum_dft(f, Fraction(101, 7))
    assert rep.within_bound
    assert rep.bound == analytic.variation_bound(f)
    assert analytic.partial_sum_dft(f, "14.5").exact_sum == analytic.partial_sum_dft(f, 14).exact_sum
    with pytest.raises(ValueError):
        analytic.partial_sum_dft(f, Fraction(1, 2))


def test_mean_value_examples():
    for r in (2, 6, 30):
        assert analytic.mean_value(rho(r))[1] == 0
        assert analytic.mean_value(rho(r))[0] == Fraction(euler_phi(r), r)
    assert analytic.mean_value(constant_even(7)) == (1, 1)
    m_f, _ = analytic.mean_value(completely_even(TAU, 6))
    brute = Fraction(sum(TAU(math.gcd(n, 6)) for n in range(1, 7)), 6)
    assert m_f == brute == 2


def test_harmonic_examples():
    rep = analytic.harmonic_sum_dft(rho(5), 10**5)
    assert rep.limit == pytest.approx(-math.log(5))
    assert abs(rep.partial_sum - rep.limit) < 1e-3
    rep = analytic.harmonic_sum_dft(rho(4), 10**5)
    assert rep.limit == pytest.approx(-math.log(2))
    rep = analytic.harmonic_sum_dft(rho(6), 10**5)
    assert rep.limit == 0
    assert abs(rep.partial_sum) < 1e-3


def test_harmonic_series_residual():
    rep = analytic.harmonic_sum_dft(constant_even(1), 1000)
    assert rep.limit is None
    assert rep.exact_sum == sum(Fraction(1, n) for n in range(1, 1001))
    assert abs(rep.residual) < 1 / 1000


def test_harmonic_decay_is_decreasing():
    decay = analytic.harmonic_decay(rho(12))
    assert all(x % 12 == 0 for x, _ in decay)
    assert all(b < a for (_, a), (_, b) in zip(decay, decay[1:]))


def test_zeta_values():
    value, err = analytic.zeta(2.0, 10**4)
    assert abs(value - math.pi**2 / 6) <= err + 1e-12
    value, _ = analytic.zeta(4.0, 10**3)
    assert value == pytest.approx(math.pi**4 / 90, rel=1e-12)


def test_series_examples():
    reports = analytic.dirichlet_series_check(EPSILON, 0.0, 1, 1, 2.0, 2.0, 10**5)
    over_r, over_n, double = reports
    assert over_r.rhs_closed_form == pytest.approx(6 / math.pi**2, rel=1e-4)
    assert over_n.lhs_partial == pytest.approx(math.pi**2 / 6, abs=1e-4)
    assert over_n.rhs_closed_form == pytest.approx(math.pi**2 / 6, rel=1e-8)
    assert all(rep.passed for rep in reports)
    reports = analytic.dirichlet_series_check(TAU, 1.0, 3, 1, 2.0, 3.0, 10**5)
    assert reports[1].rhs_closed_form == pytest.approx(math.pi**2 / 6, rel=1e-8)
    assert all(rep.passed for rep in reports)


def test_series_row_shape():
    row = analytic.dirichlet_series_check(ONE, 1.0, 2, 3, 3.0, 3.0, 1000)[2].as_row()
    assert {"identity", "lhs_partial", "rhs_closed_form", "discrepancy", "tail_estimate"} <= set(row)


@pytest.mark.parametrize("s,t", [(1.0, 2.0), (2.0, 0.5), (1.2, 2.0)])
def test_series_preconditions(s, t):
    with pytest.raises(PreconditionError):
        analytic.dirichlet_series_check(TAU, 1.2, 1, 1, s, t, 1000)


def test_series_truncation_too_small():
    with pytest.raises(PreconditionError):
        analytic.dirichlet_series_check(EPSILON, 0.0, 1, 1, 2.0, 2.0, 10)
