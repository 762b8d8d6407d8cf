"""Named identity sweeps used by ``evenfourier verify`` and the test-suite.

Each suite takes ``(rmax, seed)`` and returns rows. A row summarises one
modulus (``n`` is None) or records a failing witness. Rows are sorted by
(suite, r, n) so that output never depends on evaluation order.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import analytic, arith, even, transform as dftm
from .arith import (
    EPSILON,
    IDENTITY,
    MOBIUS,
    ONE,
    TAU,
    TWO_OMEGA,
    divisor_tuple,
    euler_phi,
    mobius,
    ramanujan_sum,
)
from .errors import EvenFourierError, NotEvenError
from .even import EvenFunction, PeriodicTable


@dataclass(frozen=True)
class Row:
    suite: str
    r: int
    n: Optional[int]
    checked: int
    lhs: str
    rhs: str
    passed: bool

    def sort_key(self):
        return (self.suite, self.r, -1 if self.n is None else self.n)


class Tally:
    """Collect per-modulus counts and failing witnesses for one suite."""

    def __init__(self, suite: str):
        self.suite = suite
        self.counts: dict = {}
        self.failed: dict = {}
        self.rows: list = []

    def check(self, r: int, n, lhs, rhs, ok: Optional[bool] = None) -> bool:
        if ok is None:
            ok = lhs == rhs
        self.counts[r] = self.counts.get(r, 0) + 1
        if not ok:
            self.failed[r] = self.failed.get(r, 0) + 1
            self.rows.append(Row(self.suite, r, n, 1, _fmt(lhs), _fmt(rhs), False))
        return ok

    def fail(self, r: int, n, message: str) -> None:
        self.counts[r] = self.counts.get(r, 0) + 1
        self.failed[r] = self.failed.get(r, 0) + 1
        self.rows.append(Row(self.suite, r, n, 1, message, "", False))

    def finish(self) -> list:
        out = list(self.rows)
        for r, c in self.counts.items():
            out.append(Row(self.suite, r, None, c, "", "", r not in self.failed))
        return sorted(out, key=Row.sort_key)


def _fmt(x) -> str:
    if isinstance(x, (int, Fraction)):
        return even.rational_str(x)
    if isinstance(x, float):
        return repr(x)
    return str(x)


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 6))


def random_even(rng: random.Random, r: int, integer: bool = False) -> EvenFunction:
    divs = divisor_tuple(r)
    if integer:
        return EvenFunction(r, tuple(rng.randint(-9, 9) for _ in divs))
    return EvenFunction(r, tuple(random_rational(rng) for _ in divs))


# -- arith-core ------------------------------------------------------------------


def ramanujan_oracles(rmax=200, seed=0):
    t = Tally("ramanujan-oracles")
    for q in range(1, rmax + 1):
        for n in range(0, rmax + 1):
            a = ramanujan_sum(q, n)
            b = arith.ramanujan_sum_holder(q, n)
            try:
                c = arith.ramanujan_sum_exponential(q, n)
            except EvenFourierError as exc:
                t.fail(q, n, str(exc))
                continue
            t.check(q, n, (a, b), (b, c), a == b == c)
    return t.finish()


def ramanujan_multiplicative(rmax=60, seed=0):
    t = Tally("ramanujan-multiplicative")
    for q in range(1, rmax + 1):
        for s in range(1, rmax + 1):
            if math.gcd(q, s) != 1:
                continue
            for n in range(1, rmax + 1):
                t.check(q * s, n, ramanujan_sum(q * s, n), ramanujan_sum(q, n) * ramanujan_sum(s, n))
    return t.finish()


def ramanujan_semi_multiplicative(rmax=60, seed=0):
    t = Tally("semi-multiplicative")
    for n in range(1, rmax + 1):
        cache: dict = {}

        def c(q):
            if q not in cache:
                cache[q] = ramanujan_sum(q, n)
            return cache[q]

        bad = dftm.semi_multiplicative_violations(c, rmax)
        t.check(n, None, len(bad), 0)
    return t.finish()


def ramanujan_divisor_sum(rmax=100, seed=0):
    t = Tally("ramanujan-divisor-sum")
    for r in range(1, rmax + 1):
        for n in range(1, rmax + 1):
            lhs = sum(ramanujan_sum(d, n) for d in divisor_tuple(r))
            t.check(r, n, lhs, r if n % r == 0 else 0)
    return t.finish()


def mobius_ramanujan(rmax=100, seed=0):
    t = Tally("mobius-ramanujan")
    for r in range(1, rmax + 1):
        for n in range(1, rmax + 1):
            lhs = sum(ramanujan_sum(r, d) * mobius(n // d) for d in divisor_tuple(n))
            t.check(r, n, lhs, n * mobius(r // n) if r % n == 0 else 0)
    return t.finish()


def square_detector(rmax=400, seed=0):
    t = Tally("square-detector")
    for r in range(1, rmax + 1):
        lhs = sum(ramanujan_sum(r // d, d) for d in divisor_tuple(r))
        root = math.isqrt(r)
        t.check(r, None, lhs, root if root * root == r else 0)
    return t.finish()


def ramanujan_parseval(rmax=200, seed=0):
    t = Tally("ramanujan-parseval")
    for r in range(1, rmax + 1):
        lhs = sum(ramanujan_sum(r, n) ** 2 for n in range(1, r + 1))
        t.check(r, None, lhs, r * euler_phi(r))
    return t.finish()


def convolution_basics(rmax=1000, seed=0):
    t = Tally("convolution-basics")
    for n in range(1, rmax + 1):
        t.check(n, 0, arith.dirichlet_convolve(MOBIUS, ONE, n), EPSILON(n))
        t.check(n, 1, arith.dirichlet_convolve(MOBIUS, IDENTITY, n), euler_phi(n))
    return t.finish()


# -- even-core -------------------------------------------------------------------


def round_trip(rmax=200, seed=0):
    rng = random.Random(seed)
    t = Tally("round-trip")
    for r in range(1, rmax + 1):
        f = random_even(rng, r)
        t.check(r, None, even.from_periodic(f.expand()), f)
    return t.finish()


def characterization(rmax=100, seed=0):
    rng = random.Random(seed)
    t = Tally("characterization")
    for r in range(1, rmax + 1):
        core = [random_rational(rng) for _ in divisor_tuple(r)]
        divs = divisor_tuple(r)
        # f(n) = sum over d | gcd(n, r) of core(d), tabulated on residues
        table = []
        for n in range(1, r + 1):
            g = math.gcd(n, r)
            table.append(sum((c for d, c in zip(divs, core) if g % d == 0), Fraction(0)))
        f = even.from_periodic(PeriodicTable(r, tuple(table)))
        t.check(r, None, list(even.mobius_core(f)), core)
    return t.finish()


def counterexample(rmax=100, seed=0):
    rng = random.Random(seed)
    t = Tally("counterexample")
    for r in range(3, rmax + 1):
        divs = set(divisor_tuple(r))
        core = {d: random_rational(rng) for d in divs}
        m = rng.choice([k for k in range(2, r) if k not in divs])
        core[m] = Fraction(rng.choice([-3, -2, -1, 1, 2, 3]))
        table = tuple(sum((c for d, c in core.items() if n % d == 0), Fraction(0)) for n in range(1, r + 1))
        try:
            even.from_periodic(PeriodicTable(r, table))
        except NotEvenError as exc:
            t.check(r, m, exc.residue, m)
        else:
            t.fail(r, m, "accepted a table whose core leaves the divisors of r")
    return t.finish()


def fourier_reconstruction(rmax=200, seed=0):
    rng = random.Random(seed)
    t = Tally("fourier-reconstruction")
    for r in range(1, rmax + 1):
        f = random_even(rng, r)
        t.check(r, None, even.expand_from_coefficients(even.fourier_coefficients(f)), f)
    return t.finish()


def _cauchy_residues(f: EvenFunction, h: EvenFunction) -> tuple:
    r = f.r
    return tuple(sum((f(a) * h(n - a) for a in range(1, r + 1)), Fraction(0)) for n in range(1, r + 1))


def cauchy_coefficients(rmax=60, seed=0):
    rng = random.Random(seed)
    t = Tally("cauchy-coefficients")
    for r in range(1, rmax + 1):
        f, h = random_even(rng, r), random_even(rng, r)
        try:
            out = even.cauchy_convolve(f, h)
        except EvenFourierError as exc:
            t.fail(r, None, str(exc))
            continue
        # full residue table must be r-even and agree with the divisor form
        full = even.from_periodic(PeriodicTable(r, _cauchy_residues(f, h)))
        t.check(r, None, full, out)
        af, ah, ao = (even.fourier_coefficients(x).alpha for x in (f, h, out))
        for d, x, y, z in zip(divisor_tuple(r), af, ah, ao):
            t.check(r, d, z, r * x * y)
    return t.finish()


def non_completely_even(rmax=5, seed=0):
    t = Tally("non-completely-even")
    for p in (q for q in range(2, max(rmax, 5) + 1) if arith.is_prime(q)):
        a, b = ramanujan_sum(p, p), ramanujan_sum(p * p, p)
        t.check(p, p, (a, b), (p - 1, -p))
        t.check(p, p, a != b, True)
    return t.finish()


# -- dft-engine -------------------------------------------------------------------


def automorphism(rmax=200, seed=0):
    rng = random.Random(seed)
    t = Tally("automorphism")
    for r in range(1, rmax + 1):
        f = random_even(rng, r)
        t.check(r, None, dftm.dft(dftm.dft(f)), f * r)
        t.check(r, None, dftm.idft(dftm.dft(f)), f)
    return t.finish()


def naive_oracle(rmax=500, seed=0):
    rng = random.Random(seed)
    t = Tally("naive-oracle")
    for r in range(1, rmax + 1):
        f = random_even(rng, r)
        fast = dftm.dft(f).expand().residues
        slow = dftm.dft_naive(f.expand()).residues
        tol = 1e-9 * float(f.norm1())
        err = max(abs(complex(a) - b) for a, b in zip(fast, slow))
        t.check(r, None, err, tol, err <= tol)
    return t.finish()


def core_equivalence(rmax=500, seed=0):
    rng = random.Random(seed)
    t = Tally("core-equivalence")
    for r in range(1, rmax + 1):
        f = random_even(rng, r)
        t.check(r, None, dftm.dft(f), dftm.dft_via_core(f))
    return t.finish()


def special_values(rmax=200, seed=0):
    rng = random.Random(seed)
    t = Tally("special-values")
    for r in range(1, rmax + 1):
        f = random_even(rng, r)
        fhat = dftm.dft(f)
        pairs = list(zip(f.divisors, f.values))
        t.check(r, r, fhat(r), sum((v * euler_phi(r // d) for d, v in pairs), Fraction(0)))
        t.check(r, 1, fhat(1), sum((v * mobius(r // d) for d, v in pairs), Fraction(0)))
    return t.finish()


def integrality(rmax=200, seed=0):
    rng = random.Random(seed)
    t = Tally("integrality")
    for r in range(1, rmax + 1):
        fhat = dftm.dft(random_even(rng, r, integer=True))
        t.check(r, None, all(v.denominator == 1 for v in fhat.values), True)
    return t.finish()


def convolution_exchange(rmax=100, seed=0):
    rng = random.Random(seed)
    t = Tally("convolution-exchange")
    for r in range(1, rmax + 1):
        f, h = random_even(rng, r), random_even(rng, r)
        t.check(r, None, dftm.dft(even.cauchy_convolve(f, h)), dftm.dft(f) * dftm.dft(h))
    return t.finish()


def dual_ramanujan(rmax=100, seed=0):
    t = Tally("dual-ramanujan")
    for r in range(1, rmax + 1):
        for n in range(1, r + 1):
            lhs = sum(ramanujan_sum(r, r // d) * ramanujan_sum(d, n) for d in divisor_tuple(r))
            t.check(r, n, lhs, r if math.gcd(n, r) == 1 else 0)
    return t.finish()


def alternating(rmax=200, seed=0):
    t = Tally("alternating")
    for r in range(2, rmax + 1, 2):
        try:
            fhat = dftm.alternating_dft(r)
        except EvenFourierError as exc:
            t.fail(r, None, str(exc))
            continue
        for n in range(1, r + 1):
            lhs = sum((-1) ** d * ramanujan_sum(r // d, n) for d in divisor_tuple(r))
            expected = r if n % r == r // 2 else 0
            t.check(r, n, lhs, expected)
            t.check(r, n, fhat(n), expected)
    return t.finish()


def congruence(rmax=30, seed=0, kmax=4):
    t = Tally("congruence")
    for r in range(1, rmax + 1):
        for k in range(1, kmax + 1):
            for n in range(r):
                try:
                    fast = dftm.count_congruence_solutions(r, k, n)
                except EvenFourierError as exc:
                    t.fail(r, n, str(exc))
                    continue
                t.check(r, n, fast, dftm.congruence_bruteforce(r, k, n))
    return t.finish()


def parseval(rmax=200, seed=0):
    rng = random.Random(seed)
    t = Tally("parseval")
    for r in range(1, rmax + 1):
        f = random_even(rng, r)
        lhs = sum(v * v for v in dftm.dft(f).expand().residues)
        rhs = r * sum((v * v * euler_phi(r // d) for d, v in zip(f.divisors, f.values)), Fraction(0))
        t.check(r, None, lhs, rhs)
    return t.finish()


HOLDER_FUNCTIONS = (EPSILON, ONE, TWO_OMEGA)
HOLDER_PRIME_POWERS = (2, 4, 8, 3, 9, 27, 5, 25)


def holder(rmax=200, seed=0):
    t = Tally("holder")
    for F in HOLDER_FUNCTIONS:
        for r in range(1, rmax + 1):
            fhat = dftm.dft(even.completely_even(F, r))
            for n in range(0, rmax + 1):
                try:
                    value = dftm.holder_closed_form(F, r, n)
                except EvenFourierError as exc:
                    t.fail(r, n, f"{F.name}: {exc}")
                    continue
                t.check(r, n, value, fhat(n))
        for q in HOLDER_PRIME_POWERS:
            (p, a), = arith.factorize(q).factors
            fhat = dftm.dft(even.completely_even(F, q))
            for n in range(0, 2 * q + 1):
                t.check(q, n, dftm.holder_prime_power(F, p, a, n), fhat(n))
    return t.finish()


def holder_semi_multiplicative(rmax=60, seed=0):
    t = Tally("holder-semi-multiplicative")
    for F in HOLDER_FUNCTIONS:
        spec = dftm.SequenceSpec(F=F)
        for n in range(0, rmax + 1):
            bad = dftm.semi_multiplicative_violations(lambda q: spec.hat(n, q), rmax)
            t.check(n, None, len(bad), 0)
    return t.finish()


def sequence_multiplicativity(rmax=10, seed=0):
    t = Tally("sequence-multiplicativity")
    for i, F in enumerate((EPSILON, TAU, ONE, TWO_OMEGA)):
        rep = dftm.check_sequence_multiplicativity(dftm.SequenceSpec(F=F), rmax)
        for name, bad in sorted(rep.violations.items()):
            t.check(i, None, f"{F.name}/{name}: {bad[:3]}", "", not bad)
    return t.finish()


def divisor_sums(rmax=100, seed=0):
    t = Tally("divisor-sum-identities")
    specs = [dftm.SequenceSpec(F=F) for F in (EPSILON, TAU)]
    for r in range(1, rmax + 1):
        for n in range(1, rmax + 1):
            for spec in specs:
                try:
                    rows = dftm.divisor_sum_identities(spec, n, r)
                except EvenFourierError as exc:
                    t.fail(r, n, f"{spec.name}: {exc}")
                    continue
                t.check(r, n, all(row.status == "pass" for row in rows), True)
        # the Ramanujan-sum specialisation of the double sum
        lhs = [sum(ramanujan_sum(e, d) for d in divisor_tuple(n) for e in divisor_tuple(r)) for n in range(1, rmax + 1)]
        for n, v in enumerate(lhs, start=1):
            t.check(r, n, v, r * arith.tau(n // r) if n % r == 0 else 0)
    return t.finish()


def classification(rmax=100, seed=0):
    t = Tally("classification")
    for i, (F, expect) in enumerate(((TAU, 1), (TAU.scaled(3), 3), (EPSILON, None))):
        verdict = dftm.classify_completely_even_dft(F, rmax)
        t.check(i, None, (verdict.completely_even, verdict.constant), (expect is not None, expect))
        if expect is None:
            t.check(i, None, verdict.witness is not None, True)
    return t.finish()


# -- analytic ----------------------------------------------------------------------


def partial_sums(rmax=100, seed=0, xmax=2000):
    rng = random.Random(seed)
    t = Tally("partial-sums")
    for r in range(1, rmax + 1):
        f = random_even(rng, r)
        fhat = dftm.dft(f)
        core = even.mobius_core(f)
        idx = {d: i for i, d in enumerate(f.divisors)}
        weights = [(d, d * core[idx[r // d]]) for d in f.divisors]
        running = Fraction(0)
        for x in range(1, xmax + 1):
            running += fhat(x)
            t.check(r, x, running, sum((w * (x // d) for d, w in weights), Fraction(0)))
    return t.finish()


def remainder_bound(rmax=100, seed=0, cases=1000):
    rng = random.Random(seed)
    t = Tally("remainder-bound")
    for _ in range(cases):
        r = rng.randint(1, rmax)
        f = random_even(rng, r)
        kind = rng.random()
        if kind < 0.3:
            x = Fraction(r * rng.randint(1, 50))
        elif kind < 0.6:
            x = Fraction(rng.randint(1, 5000))
        else:
            x = Fraction(rng.randint(100, 500000), rng.randint(1, 97))
        rep = analytic.partial_sum_dft(f, max(x, Fraction(1)))
        t.check(r, None, abs(rep.remainder), rep.bound, rep.within_bound)
        if rep.x.denominator == 1 and rep.x.numerator % r == 0:
            t.check(r, None, rep.remainder, 0)
    return t.finish()


HARMONIC_MODULI = (2, 3, 4, 5, 6, 8, 9, 12)


def harmonic(rmax=12, seed=0):
    t = Tally("harmonic")
    for r in (m for m in HARMONIC_MODULI if m <= rmax):
        f = even.rho(r)
        rep = analytic.harmonic_sum_dft(f, 10**5)
        t.check(r, 10**5, abs(rep.partial_sum - rep.limit), 1e-2, abs(rep.partial_sum - rep.limit) <= 1e-2)
        t.check(r, None, float(arith.von_mangoldt(r)), -rep.limit, math.isclose(float(arith.von_mangoldt(r)), -rep.limit))
        decay = analytic.harmonic_decay(f)
        ok = all(b < a for (_, a), (_, b) in zip(decay, decay[1:]))
        t.check(r, None, [e for _, e in decay], "decreasing", ok)
    return t.finish()


SERIES_FUNCTIONS = ((EPSILON, 0.0), (ONE, 1.0), (TAU, 1.0))
SERIES_POINTS = (1.5, 2.0, 3.0)


def dirichlet_series(rmax=12, seed=0, truncation=10**5):
    t = Tally("dirichlet-series")
    for F, a_F in SERIES_FUNCTIONS:
        for s in SERIES_POINTS:
            for tt in SERIES_POINTS:
                for r in range(1, rmax + 1):
                    for n in range(1, rmax + 1):
                        for rep in analytic.dirichlet_series_check(F, a_F, n, r, s, tt, truncation):
                            t.check(r, n, rep.discrepancy, rep.tail_estimate + rep.tolerance, rep.passed)
    return t.finish()


SUITES: dict = {
    "ramanujan-oracles": (ramanujan_oracles, 200),
    "ramanujan-multiplicative": (ramanujan_multiplicative, 60),
    "semi-multiplicative": (ramanujan_semi_multiplicative, 60),
    "ramanujan-divisor-sum": (ramanujan_divisor_sum, 100),
    "mobius-ramanujan": (mobius_ramanujan, 100),
    "square-detector": (square_detector, 400),
    "ramanujan-parseval": (ramanujan_parseval, 200),
    "convolution-basics": (convolution_basics, 1000),
    "round-trip": (round_trip, 200),
    "characterization": (characterization, 100),
    "counterexample": (counterexample, 100),
    "fourier-reconstruction": (fourier_reconstruction, 200),
    "cauchy-coefficients": (cauchy_coefficients, 60),
    "non-completely-even": (non_completely_even, 5),
    "automorphism": (automorphism, 200),
    "naive-oracle": (naive_oracle, 500),
    "core-equivalence": (core_equivalence, 500),
    "special-values": (special_values, 200),
    "integrality": (integrality, 200),
    "convolution-exchange": (convolution_exchange, 100),
    "dual-ramanujan": (dual_ramanujan, 100),
    "alternating": (alternating, 200),
    "congruence": (congruence, 30),
    "parseval": (parseval, 200),
    "holder": (holder, 200),
    "holder-semi-multiplicative": (holder_semi_multiplicative, 60),
    "sequence-multiplicativity": (sequence_multiplicativity, 10),
    "divisor-sum-identities": (divisor_sums, 100),
    "classification": (classification, 100),
    "partial-sums": (partial_sums, 100),
    "remainder-bound": (remainder_bound, 100),
    "harmonic": (harmonic, 12),
    "dirichlet-series": (dirichlet_series, 12),
}


def run_suite(name: str, rmax: Optional[int] = None, seed: int = 0) -> list:
    if name not in SUITES:
        raise KeyError(name)
    func, default = SUITES[name]
    return func(rmax=default if rmax is None else rmax, seed=seed)


def all_passed(rows) -> bool:
    return all(row.passed for row in rows)
