"""Discrete Fourier transform of r-even functions and the identities built on it.

The structured transform works on the tau(r) divisor values through the
cached table c_{r/d}(d') (see :func:`evenfourier.arith.ramanujan_table`);
:func:`dft_naive` is the O(r**2) residue-basis oracle.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product
from operator import mul
from typing import Callable, Optional

import numpy as np

from .arith import (
    ArithFunction,
    EPSILON,
    _factor_tuple,
    divisor_tuple,
    euler_phi,
    mobius,
    ramanujan_sum,
    ramanujan_table,
    sigma,
    tau,
)
from .errors import BoundError, IdentityViolation, ImplementationBug, PreconditionError
from .even import (
    EvenFunction,
    PeriodicTable,
    _divisor_index,
    completely_even,
    mobius_core,
)

NAIVE_BOUND = 5000
CONGRUENCE_ORACLE_BOUND = 30
STRONG_SPOT_BOUND = 10**4


@lru_cache(maxsize=128)
def _columns(r: int) -> tuple:
    return tuple(zip(*ramanujan_table(r)))


def _apply_table(r: int, values: tuple) -> list:
    """out[j] = sum_i values[i] * c_{r/d_i}(d_j), exact, on a common denominator."""
    den = math.lcm(*(v.denominator for v in values)) if values else 1
    ints = [v.numerator * (den // v.denominator) for v in values]
    return [Fraction(sum(map(mul, ints, col)), den) for col in _columns(r)]


def dft(f: EvenFunction) -> EvenFunction:
    """fhat(n) = sum over d | r of f(d) c_{r/d}(n), on the divisors of r."""
    return EvenFunction(f.r, tuple(_apply_table(f.r, f.values)))


def idft(g: EvenFunction) -> EvenFunction:
    """Inverse transform: f(n) = (1/r) sum over d | r of g(d) c_{r/d}(n)."""
    return EvenFunction(g.r, tuple(v / g.r for v in _apply_table(g.r, g.values)))


def dft_via_core(f: EvenFunction) -> EvenFunction:
    """fhat(n) = sum over d | gcd(n, r) of d * f'(r/d)."""
    r = f.r
    divs = f.divisors
    idx = _divisor_index(r)
    core = mobius_core(f)
    # weight[d] = d * f'(r/d)
    weight = [d * core[idx[r // d]] for d in divs]
    vals = []
    for i, n in enumerate(divs):
        vals.append(sum((weight[j] for j in range(i + 1) if n % divs[j] == 0), Fraction(0)))
    return EvenFunction(r, tuple(vals))


def dft_core(f: EvenFunction) -> tuple:
    """Moebius core of fhat: (fhat)'(n) = n * f'(r/n) for n | r (zero off the divisors)."""
    r = f.r
    idx = _divisor_index(r)
    core = mobius_core(f)
    return tuple(n * core[idx[r // n]] for n in f.divisors)


def dft_naive(t: PeriodicTable, bound: int = NAIVE_BOUND) -> PeriodicTable:
    """fhat(n) = sum over k mod r of f(k) exp(-2 pi i k n / r), in complex floats."""
    r = t.r
    if r > bound:
        raise BoundError(f"naive DFT limited to r <= {bound}, got {r}")
    x = np.array([complex(v) for v in t.residues])
    k = np.arange(1, r + 1, dtype=np.int64)
    out = np.empty(r, dtype=complex)
    chunk = max(1, 2_000_000 // r)
    for start in range(1, r + 1, chunk):
        n = np.arange(start, min(r, start + chunk - 1) + 1, dtype=np.int64)
        phase = np.outer(n, k) % r
        out[start - 1 : start - 1 + len(n)] = np.exp(-2j * np.pi * phase / r) @ x
    return PeriodicTable(r, tuple(complex(v) for v in out))


def alternating_dft(r: int) -> EvenFunction:
    """Transform of n -> (-1)**n for even r: r on n = r/2 (mod r), else 0."""
    if r < 1 or r % 2:
        raise ValueError(f"(-1)**n is only r-even for even r, got {r}")
    f = EvenFunction(r, tuple((-1) ** d for d in divisor_tuple(r)))
    out = dft(f)
    expected = EvenFunction(r, tuple(r if d == r // 2 else 0 for d in divisor_tuple(r)))
    if out != expected:
        raise ImplementationBug(f"alternating transform disagrees with closed form at r={r}")
    return out


# -- restricted congruences ----------------------------------------------------


def count_congruence_solutions(r: int, k: int, n: int, oracle: bool = False) -> int:
    """Number of (x_1..x_k) mod r with all gcd(x_i, r) = 1 and sum = n (mod r).

    Uses the Rademacher-Brauer sum (1/r) sum_{d | r} c_r(r/d)**k c_d(n);
    ``oracle=True`` enumerates tuples instead (r <= 30 only).
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if oracle:
        return congruence_bruteforce(r, k, n)
    total = sum(ramanujan_sum(r, r // d) ** k * ramanujan_sum(d, n) for d in divisor_tuple(r))
    value = Fraction(total, r)
    if value.denominator != 1 or value < 0:
        raise ImplementationBug(f"N_{r}({n},{k}) formula gave {value}")
    return int(value)


@lru_cache(maxsize=512)
def _congruence_histogram(r: int, k: int) -> Counter:
    units = [x for x in range(r) if math.gcd(x, r) == 1]
    return Counter(sum(xs) % r for xs in product(units, repeat=k))


def congruence_bruteforce(r: int, k: int, n: int, bound: int = CONGRUENCE_ORACLE_BOUND) -> int:
    if r > bound:
        raise BoundError(f"brute-force congruence count limited to r <= {bound}, got {r}")
    return _congruence_histogram(r, k)[n % r]


# -- Anderson-Apostol sums, Cohen inversion ------------------------------------


@dataclass(frozen=True)
class SghSpec:
    """S_{g,h}(n) = sum over d | gcd(n, r) of g(d) h(r/d)."""

    g: Callable
    h: Callable
    r: int


def anderson_apostol(spec: SghSpec):
    """Return (S_{g,h}, its transform), the latter checked against
    sum over d | gcd(n, r) of d g(r/d) h(d)."""
    r = spec.r
    divs = divisor_tuple(r)
    g = [Fraction(spec.g(d)) for d in divs]
    h = [Fraction(spec.h(d)) for d in divs]
    idx = _divisor_index(r)
    s_vals, closed = [], []
    for n in divs:
        sub = [d for d in divs if n % d == 0]
        s_vals.append(sum((g[idx[d]] * h[idx[r // d]] for d in sub), Fraction(0)))
        closed.append(sum((d * g[idx[r // d]] * h[idx[d]] for d in sub), Fraction(0)))
    s = EvenFunction(r, tuple(s_vals))
    shat = dft(s)
    if list(shat.values) != closed:
        raise ImplementationBug(f"S_gh transform paths disagree at r={r}")
    return s, shat


def cohen_invert(g: EvenFunction) -> EvenFunction:
    """Build f = sum_{d|r} g(d) c_d and recover g through Cohen's inversion.

    g(m) = (1/r) sum_{d | r} f(r/d) c_d(n) with m = r / gcd(n, r); the
    recovered function must equal the input.
    """
    r = g.r
    divs = g.divisors
    f = {n: sum((gv * ramanujan_sum(d, n) for d, gv in zip(divs, g.values)), Fraction(0)) for n in divs}
    recovered = []
    for m in divs:
        n = r // m
        recovered.append(sum((f[r // d] * ramanujan_sum(d, n) for d in divs), Fraction(0)) / r)
    out = EvenFunction(r, tuple(recovered))
    if out != g:
        raise ImplementationBug(f"Cohen inversion failed to round-trip at r={r}")
    return out


# -- Hoelder-type closed form --------------------------------------------------


def _check_strongly_multiplicative(F: ArithFunction, primes, spot_bound: int) -> None:
    if getattr(F, "strongly_multiplicative", None) is not True:
        raise PreconditionError(f"{getattr(F, 'name', F)} is not declared strongly multiplicative")
    if F(1) != 1:
        raise PreconditionError(f"{F.name}(1) = {F(1)} != 1")
    for p in primes:
        fp = F(p)
        q = p * p
        while q <= spot_bound:
            if F(q) != fp:
                raise PreconditionError(f"{F.name}({q}) = {F(q)} differs from {F.name}({p}) = {fp}; prime {p}")
            q *= p
        if fp == 1 - p:
            raise PreconditionError(f"{F.name}({p}) = 1 - {p}, excluded for prime {p}")


def holder_prime_power(F: Callable, p: int, a: int, n: int) -> Fraction:
    """Three-branch value of fhat_{p^a}(n) for strongly multiplicative F."""
    fp = Fraction(F(p))
    g = math.gcd(n, p**a)
    if g == p**a:
        return p ** (a - 1) * (p + fp - 1)
    if g == p ** (a - 1):
        return p ** (a - 1) * (fp - 1)
    return Fraction(0)


@lru_cache(maxsize=2048)
def _holder_setup(F: ArithFunction, r: int, spot_bound: int):
    fac = _factor_tuple(r)
    _check_strongly_multiplicative(F, [p for p, _ in fac], spot_bound)
    divs = divisor_tuple(r)
    Fd = {d: F(d) for d in divs}

    def conv(func, x):
        return sum((Fd[d] * func(x // d) for d in divisor_tuple(x)), Fraction(0))

    f_mu = {m: conv(mobius, m) for m in divs}
    f_phi = {m: conv(euler_phi, m) for m in divs}
    return fac, f_mu, f_phi, dft_via_core(completely_even(F, r))


def holder_closed_form(F: ArithFunction, r: int, n: int, spot_bound: int = STRONG_SPOT_BOUND) -> Fraction:
    """fhat_r(n) = (F*mu)(m) (F*phi)(r) / (F*phi)(m), m = r / gcd(n, r).

    Requires F strongly multiplicative (declared, spot-checked on prime powers
    up to ``spot_bound``) and F(p) != 1 - p for the primes p dividing r.
    The value is checked against the transform of F(gcd(., r)) and, for prime
    power r, against the three-branch formula.
    """
    fac, f_mu, f_phi, fhat = _holder_setup(F, r, spot_bound)
    m = r // math.gcd(n, r)
    value = f_mu[m] * f_phi[r] / f_phi[m]
    direct = fhat(n)
    if value != direct:
        raise ImplementationBug(f"Hoelder form {value} != transform {direct} at r={r}, n={n}")
    if len(fac) == 1:
        p, a = fac[0]
        branch = holder_prime_power(F, p, a, n)
        if branch != value:
            raise ImplementationBug(f"prime-power branch {branch} != {value} at r={r}, n={n}")
    return value


# -- sequences of even functions -----------------------------------------------


class SequenceSpec:
    """A sequence (f_r) of r-even functions.

    Either completely even (``F`` given, f_r(n) = F(gcd(n, r))) or ``custom``,
    a callable r -> EvenFunction.
    """

    def __init__(self, F: Optional[Callable] = None, custom: Optional[Callable] = None,
                 multiplicative: Optional[bool] = None, name: str = ""):
        if (F is None) == (custom is None):
            raise ValueError("give exactly one of F or custom")
        self.F = F
        self.custom = custom
        self.multiplicative = multiplicative
        self.name = name or getattr(F, "name", "custom")
        self._members: dict = {}
        self._transforms: dict = {}

    @property
    def completely_even(self) -> bool:
        return self.F is not None

    def member(self, r: int) -> EvenFunction:
        f = self._members.get(r)
        if f is None:
            f = completely_even(self.F, r) if self.F is not None else self.custom(r)
            if f.r != r:
                raise ValueError(f"rule returned modulus {f.r} for r={r}")
            self._members[r] = f
        return f

    def transform(self, r: int) -> EvenFunction:
        g = self._transforms.get(r)
        if g is None:
            g = self._transforms[r] = dft(self.member(r))
        return g

    def __call__(self, n: int, r: int) -> Fraction:
        return self.member(r)(n)

    def hat(self, n: int, r: int) -> Fraction:
        return self.transform(r)(n)


@dataclass
class MultiplicativityReport:
    bound: int
    checked: dict = field(default_factory=dict)
    violations: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not any(self.violations.values())

    def _record(self, name, ok, witness):
        self.checked[name] = self.checked.get(name, 0) + 1
        self.violations.setdefault(name, [])
        if not ok:
            self.violations[name].append(witness)


def _coprime_divisor_pairs(r):
    divs = divisor_tuple(r)
    return [(a, b) for a in divs for b in divs if math.gcd(a, b) == 1 and r % (a * b) == 0]


def check_sequence_multiplicativity(spec: SequenceSpec, bound: int) -> MultiplicativityReport:
    """Check the multiplicativity conclusions for (f_r) and (fhat_r) on 1..bound.

    Covers: r -> f_r(n) multiplicative; f and fhat multiplicative as functions
    of two variables; f_r(m) f_r(n) = f_r(1) f_r(mn) and
    fhat_r(m) fhat_r(n) = f'_r(r) fhat_r(mn) for coprime m, n; and the
    criterion "n -> fhat_r(n) multiplicative iff f'_r(r) = 1".
    """
    rep = MultiplicativityReport(bound)
    rng = range(1, bound + 1)
    for n in rng:
        rep._record("r-multiplicative", spec(n, 1) == 1, ("r=1", n))
        for r in rng:
            for s in rng:
                if r < s and math.gcd(r, s) == 1:
                    ok = spec(n, r * s) == spec(n, r) * spec(n, s)
                    rep._record("r-multiplicative", ok, (n, r, s))
    for m, n, r, s in product(rng, repeat=4):
        if math.gcd(m * r, n * s) != 1:
            continue
        rep._record("two-variable f", spec(m * n, r * s) == spec(m, r) * spec(n, s), (m, n, r, s))
        rep._record("two-variable fhat", spec.hat(m * n, r * s) == spec.hat(m, r) * spec.hat(n, s), (m, n, r, s))
    for r in rng:
        top = mobius_core(spec.member(r))[-1]
        for m in rng:
            for n in rng:
                if m <= n and math.gcd(m, n) == 1:
                    ok = spec(m, r) * spec(n, r) == spec(1, r) * spec(m * n, r)
                    rep._record("quasi-multiplicative f", ok, (m, n, r))
                    ok = spec.hat(m, r) * spec.hat(n, r) == top * spec.hat(m * n, r)
                    rep._record("quasi-multiplicative fhat", ok, (m, n, r))
        fhat = spec.transform(r)
        mult = fhat(1) == 1 and all(fhat(a * b) == fhat(a) * fhat(b) for a, b in _coprime_divisor_pairs(r))
        rep._record("n-multiplicativity criterion", mult == (top == 1), (r, mult, top))
    return rep


def semi_multiplicative_violations(func: Callable[[int], Fraction], bound: int) -> list:
    """Pairs (q, s) <= bound with f(q) f(s) != f(gcd) f(lcm)."""
    bad = []
    for q in range(1, bound + 1):
        for s in range(q, bound + 1):
            g = math.gcd(q, s)
            if func(q) * func(s) != func(g) * func(q * s // g):
                bad.append((q, s))
    return bad


# -- divisor-sum identities ----------------------------------------------------


@dataclass
class IdentityRow:
    name: str
    lhs: object
    rhs: object
    status: str  # "pass", "skip"
    note: str = ""


def divisor_sum_identities(spec: SequenceSpec, n: int, r: int) -> list:
    """Evaluate both sides of the divisor-sum identities for f_r and the sequence.

    Rows: the sum of fhat over divisors of n; the sum of fhat_d(n) over d | r;
    the double sum over d | n, e | r; and the square-detector sum
    sum_{d|r} fhat_{r/d}(d) = sum_{e^2 k = r} e F(k). The last three only hold
    for completely even sequences and are skipped for custom rules.
    Raises :class:`IdentityViolation` on the first mismatch.
    """
    if n < 1:
        raise ValueError("n must be positive for divisor sums over d | n")
    f = spec.member(r)
    idx = _divisor_index(r)
    core = mobius_core(f)
    g = math.gcd(n, r)
    rows = []

    lhs = sum((spec.hat(d, r) for d in divisor_tuple(n)), Fraction(0))
    rhs = sum((d * core[idx[r // d]] * tau(n // d) for d in divisor_tuple(g)), Fraction(0))
    rows.append(_row("divisor sum of fhat", lhs, rhs, n=n, r=r))

    if not spec.completely_even:
        note = "needs a completely even sequence"
        for name in ("sum over moduli", "double divisor sum", "square detector"):
            rows.append(IdentityRow(name, None, None, "skip", note))
        return rows

    lhs = sum((spec.hat(n, d) for d in divisor_tuple(r)), Fraction(0))
    rhs = sum((d * f.at_divisor(r // d) for d in divisor_tuple(g)), Fraction(0))
    rows.append(_row("sum over moduli", lhs, rhs, n=n, r=r))

    lhs = sum((spec.hat(d, e) for d in divisor_tuple(n) for e in divisor_tuple(r)), Fraction(0))
    rhs = sum((d * f.at_divisor(r // d) * tau(n // d) for d in divisor_tuple(g)), Fraction(0))
    rows.append(_row("double divisor sum", lhs, rhs, n=n, r=r))

    lhs = sum((spec.hat(d, r // d) for d in divisor_tuple(r)), Fraction(0))
    rhs = Fraction(0)
    for e in range(1, math.isqrt(r) + 1):
        if r % (e * e) == 0:
            rhs += e * Fraction(spec.F(r // (e * e)))
    rows.append(_row("square detector", lhs, rhs, r=r))
    return rows


def _row(name, lhs, rhs, **params):
    if lhs != rhs:
        raise IdentityViolation(name, lhs, rhs, **params)
    return IdentityRow(name, lhs, rhs, "pass")


# -- completely-even classification --------------------------------------------


@dataclass
class Classification:
    """Range-bounded verdict on whether (fhat_r) is completely even."""

    completely_even: bool
    bound: int
    constant: Optional[Fraction] = None
    witness: Optional[tuple] = None  # (n, r, fhat_r(n), G(gcd(n, r)))
    closed_form: str = ""


def classify_completely_even_dft(F: Callable, bound: int) -> Classification:
    """Test fhat_r(n) = G(gcd(n, r)) for r <= bound with the forced G = id * F'.

    When it holds on the range, F must equal c * tau with c = F(1) and
    fhat_r = c * sigma(gcd(n, r)); both are confirmed on the range.
    """
    Fv = {k: Fraction(F(k)) for k in range(1, bound + 1)}

    def Fprime(k):
        return sum((mobius(k // d) * Fv[d] for d in divisor_tuple(k)), Fraction(0))

    Fp = {k: Fprime(k) for k in range(1, bound + 1)}
    G = {k: sum((d * Fp[k // d] for d in divisor_tuple(k)), Fraction(0)) for k in range(1, bound + 1)}
    for r in range(1, bound + 1):
        fhat = dft(completely_even(lambda d: Fv[d], r))
        for d, v in zip(fhat.divisors, fhat.values):
            if v != G[d]:
                return Classification(False, bound, witness=(d, r, v, G[d]))
    c = Fv[1]
    if any(Fv[k] != c * tau(k) for k in Fv):
        raise ImplementationBug("transform sequence is completely even but F is not c*tau on the range")
    for r in range(1, bound + 1):
        fhat = dft(completely_even(lambda d: Fv[d], r))
        if any(v != c * sigma(d) for d, v in zip(fhat.divisors, fhat.values)):
            raise ImplementationBug(f"closed form c*sigma(gcd) fails at r={r}")
    return Classification(True, bound, constant=c, closed_form=f"fhat_r(n) = {c} * sigma(gcd(n, r))")


def rho_sequence() -> SequenceSpec:
    """Ramanujan sums as the transform sequence of rho_r."""
    return SequenceSpec(F=EPSILON, multiplicative=True, name="eps")

