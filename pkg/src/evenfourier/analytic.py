"""Mean values, partial sums and truncated Dirichlet-series checks.

Partial sums of fhat are exact rationals. Harmonic-type sums and the
Dirichlet series are compared in floating point, each truncated series
carrying an explicit tail estimate.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass, replace
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional

import numpy as np

from .arith import LogCombination, divisor_tuple, euler_phi, mobius, von_mangoldt
from .transform import dft_via_core
from .errors import ImplementationBug, PreconditionError
from .even import EvenFunction, _divisor_index, completely_even, fourier_coefficients, gcd_index, mobius_core

EULER_GAMMA = 0.5772156649015329
TERMWISE_LIMIT = 10**4
EXACT_HARMONIC_LIMIT = 10**4
SERIES_TOLERANCE = 1e-6


def _floor_div(x: Fraction, d: int) -> int:
    return math.floor(x / d)


@dataclass(frozen=True)
class PartialSumReport:
    x: Fraction
    exact_sum: Fraction
    main_term: Fraction
    remainder: Fraction
    bound: Fraction

    @property
    def within_bound(self) -> bool:
        return abs(self.remainder) <= self.bound


def _weights(f: EvenFunction) -> list:
    """Pairs (d, f'(r/d)) for d | r."""
    r = f.r
    idx = _divisor_index(r)
    core = mobius_core(f)
    return [(d, core[idx[r // d]]) for d in f.divisors]


def variation_bound(f: EvenFunction) -> Fraction:
    """sum over d | r of d |f'(r/d)|."""
    return sum((d * abs(c) for d, c in _weights(f)), Fraction(0))


def partial_sum_dft(f: EvenFunction, x) -> PartialSumReport:
    """sum_{n <= x} fhat(n) = f(r) x + T_f(x) with |T_f(x)| <= sum_d d |f'(r/d)|.

    The sum uses sum_{d | r} d f'(r/d) floor(x/d); for x <= 10**4 it is
    re-added term by term from the transform. ``x`` may be int, Fraction,
    float or a decimal string and is converted exactly.
    """
    X = Fraction(x)
    if X < 1:
        raise ValueError("x must be at least 1")
    weights = _weights(f)
    total = sum((d * c * _floor_div(X, d) for d, c in weights), Fraction(0))
    if X <= TERMWISE_LIMIT:
        fhat = dft_via_core(f)
        gi = gcd_index(f.r)
        termwise = sum((fhat.values[gi[n % f.r]] for n in range(1, math.floor(X) + 1)), Fraction(0))
        if termwise != total:
            raise ImplementationBug(f"partial sum closed form {total} != termwise {termwise}")
    main = f(f.r) * X
    remainder = total - main
    bound = sum((d * abs(c) for d, c in weights), Fraction(0))
    if abs(remainder) > bound:
        raise ImplementationBug(f"remainder {remainder} exceeds bound {bound} at x={X}")
    if X.denominator == 1 and X.numerator % f.r == 0 and remainder != 0:
        raise ImplementationBug(f"remainder {remainder} should vanish for r | x")
    return PartialSumReport(X, total, main, remainder, bound)


def mean_value(f: EvenFunction):
    """Return (m(f), m(fhat)) = ((f*phi)(r)/r, f(r))."""
    r = f.r
    m_f = sum((v * euler_phi(r // d) for d, v in zip(f.divisors, f.values)), Fraction(0)) / r
    if m_f != fourier_coefficients(f).alpha[0]:
        raise ImplementationBug(f"mean value {m_f} differs from alpha_f(1) at r={r}")
    return m_f, f(r)


def convolve_von_mangoldt(f: EvenFunction) -> LogCombination:
    """(f * Lambda)(r), kept as a combination of logs of primes."""
    r = f.r
    out = LogCombination()
    for d, v in zip(f.divisors, f.values):
        if v:
            out = out + von_mangoldt(r // d).scale(v)
    return out


@lru_cache(maxsize=8)
def _harmonic_prefix(n: int) -> np.ndarray:
    # H[m] for m = 0..n; pairwise cumsum is accurate to ~1e-13 at n = 1e5
    h = np.zeros(n + 1)
    h[1:] = np.cumsum(1.0 / np.arange(1, n + 1))
    return h


def _exact_harmonic(m: int) -> Fraction:
    def split(a, b):
        if b - a == 1:
            return 1, a
        mid = (a + b) // 2
        p1, q1 = split(a, mid)
        p2, q2 = split(mid, b)
        return p1 * q2 + p2 * q1, q1 * q2

    if m == 0:
        return Fraction(0)
    p, q = split(1, m + 1)
    return Fraction(p, q)


@dataclass(frozen=True)
class HarmonicReport:
    x: float
    partial_sum: float
    exact_sum: Optional[Fraction]
    f_at_r: Fraction
    f_lambda: LogCombination
    predicted: float
    residual: float
    error_scale: float

    @property
    def limit(self) -> Optional[float]:
        """-(f*Lambda)(r) when f(r) = 0 (the series converges), else None."""
        return -float(self.f_lambda) if self.f_at_r == 0 else None


def harmonic_sum_dft(f: EvenFunction, x) -> HarmonicReport:
    """Compare sum_{n <= x} fhat(n)/n with f(r)(log x + C) - (f*Lambda)(r).

    The partial sum is sum_{d | r} f'(r/d) H(floor(x/d)). It is exact (and
    checked term by term) for x <= 10**4; above that it is a float.
    ``error_scale`` is V_f(x)/x, the size of the expected residual.
    """
    X = Fraction(x)
    if X < 1:
        raise ValueError("x must be at least 1")
    r = f.r
    weights = [(d, c) for d, c in _weights(f) if c]
    exact = None
    if X <= EXACT_HARMONIC_LIMIT:
        exact = sum((c * _exact_harmonic(_floor_div(X, d)) for d, c in weights), Fraction(0))
        fhat = dft_via_core(f)
        termwise = sum((fhat(n) / n for n in range(1, math.floor(X) + 1)), Fraction(0))
        if termwise != exact:
            raise ImplementationBug(f"harmonic sum closed form disagrees at x={X}")
        partial = float(exact)
    else:
        H = _harmonic_prefix(math.floor(X))
        partial = math.fsum(float(c) * H[_floor_div(X, d)] for d, c in weights)
    f_lambda = convolve_von_mangoldt(f)
    f_r = f(r)
    predicted = float(f_r) * (math.log(X) + EULER_GAMMA) - float(f_lambda)
    scale = float(sum((d * abs(c) for d, c in weights), Fraction(0)) / X)
    return HarmonicReport(float(X), partial, exact, f_r, f_lambda, predicted, partial - predicted, scale)


def harmonic_schedule(r: int, x_start: int = 10**3, x_end: int = 10**5) -> list:
    """Doubling schedule of multiples of r from about x_start up to x_end."""
    x = r * -(-x_start // r)
    out = []
    while x <= x_end:
        out.append(x)
        x *= 2
    return out


def harmonic_decay(f: EvenFunction, x_start: int = 10**3, x_end: int = 10**5) -> list:
    """(x, |residual|) along :func:`harmonic_schedule`."""
    return [(x, abs(harmonic_sum_dft(f, x).residual)) for x in harmonic_schedule(f.r, x_start, x_end)]


# -- Dirichlet series ----------------------------------------------------------


@lru_cache(maxsize=64)
def _neg_powers(s: float, N: int) -> np.ndarray:
    """k**-s for k = 0..N with a 0 placeholder at index 0."""
    out = np.zeros(N + 1)
    out[1:] = np.arange(1, N + 1, dtype=float) ** -s
    out.flags.writeable = False
    return out


@lru_cache(maxsize=64)
def zeta(s: float, N: int):
    """(value, error) of zeta(s), s > 1, from N terms plus an Euler-Maclaurin tail."""
    head = float(np.sum(_neg_powers(s, N)))
    value = head + N ** (1 - s) / (s - 1) - 0.5 * N**-s
    err = s * N ** (-s - 1) / 12
    return value, err


def _tail(M: float, N: int, s: float) -> float:
    """Estimate of sum_{k > N} |a_k| k^-s for |a_k| <= M."""
    return M * N ** (1 - s) / (s - 1)


@lru_cache(maxsize=1)
def _mobius_array(N: int) -> np.ndarray:
    mu = np.ones(N + 1, dtype=np.int64)
    mu[0] = 0
    is_comp = np.zeros(N + 1, dtype=bool)
    for p in range(2, N + 1):
        if not is_comp[p]:
            is_comp[2 * p :: p] = True
            mu[p::p] *= -1
            mu[p * p :: p * p] = 0
    return mu


@lru_cache(maxsize=16)
def _function_arrays(F: Callable, N: int):
    """Float arrays F[k] and F'[k] = (mu*F)(k) for k = 0..N (index 0 unused)."""
    Fa = np.zeros(N + 1)
    Fa[1:] = [float(F(k)) for k in range(1, N + 1)]
    mu = _mobius_array(N)
    Fp = np.zeros(N + 1)
    for d in range(1, N + 1):
        if Fa[d]:
            Fp[d::d] += Fa[d] * mu[1 : N // d + 1]
    return Fa, Fp


def _tail_max(a: np.ndarray, N: int) -> float:
    return float(np.max(np.abs(a[N // 2 + 1 : N + 1]))) if N >= 2 else float(abs(a[N]))


@dataclass(frozen=True)
class SeriesReport:
    identity: str
    F: str
    n: int
    r: int
    s: float
    t: Optional[float]
    truncation: int
    lhs_partial: float
    rhs_closed_form: float
    discrepancy: float
    tail_estimate: float
    tolerance: float = SERIES_TOLERANCE

    @property
    def passed(self) -> bool:
        return self.discrepancy <= self.tail_estimate + self.tolerance

    def as_row(self) -> dict:
        row = asdict(self)
        row["verdict"] = "pass" if self.passed else "fail"
        return row


@lru_cache(maxsize=512)
def _series_sum_over_moduli(F, name, n, s, N):
    Fa, Fp = _function_arrays(F, N)
    ks = _neg_powers(s, N)
    fhat = np.zeros(N + 1)
    for d in divisor_tuple(n):
        fhat[d::d] += d * Fp[1 : N // d + 1]
    lhs = float(np.dot(fhat, ks))
    z, zerr = zeta(s, N)
    coef = math.fsum(d ** (s - 1) for d in divisor_tuple(n)) / n ** (s - 1)
    dir_F = float(np.dot(Fa, ks))
    F_tail = _tail(_tail_max(Fa, N), N, s)
    rhs = coef * dir_F / z
    tail = _tail(_tail_max(fhat, N), N, s) + coef * F_tail / z + coef * abs(dir_F) * zerr / z**2
    return SeriesReport("sum-over-r", name, n, 0, s, None, N, lhs, rhs, abs(lhs - rhs), tail)


@lru_cache(maxsize=512)
def _series_sum_over_n(F, name, r, s, N):
    fhat = dft_via_core(completely_even(F, r))
    vals = np.array([float(v) for v in fhat.values])
    gi = np.array(gcd_index(r))
    n = np.arange(1, N + 1)
    a = vals[gi[n % r]]
    lhs = float(np.dot(a, _neg_powers(s, N)[1:]))
    z, zerr = zeta(s, N)
    conv = 0.0
    for d in divisor_tuple(r):
        m = r // d
        phi = math.fsum(e ** (1 - s) * mobius(m // e) for e in divisor_tuple(m))
        conv += float(F(d)) * phi
    rhs = z * conv
    tail = _tail(float(np.max(np.abs(vals))), N, s) + abs(conv) * zerr
    return SeriesReport("sum-over-n", name, 0, r, s, None, N, lhs, rhs, abs(lhs - rhs), tail)


@lru_cache(maxsize=64)
def _series_double(F, name, s, t, N):
    Fa, Fp = _function_arrays(F, N)
    kt = _neg_powers(t, N)
    Zs = np.cumsum(_neg_powers(s, N))
    Wt = np.cumsum(Fp * kt)
    Wabs = np.cumsum(np.abs(Fp) * kt)
    q = N // np.arange(1, N + 1)
    dw = _neg_powers(s + t - 1, N)[1:]
    # truncated double sum over n, r <= N regrouped by the common divisor d
    lhs = float(np.sum(dw * Zs[q] * Wt[q]))
    zs, zs_err = zeta(s, N)
    zt, zt_err = zeta(t, N)
    zst, zst_err = zeta(s + t - 1, N)
    dir_F = float(np.dot(Fa, kt))
    pref = zs * zst / zt
    rhs = pref * dir_F
    wabs_inf = Wabs[N] + _tail(_tail_max(Fp, N), N, t)
    abs_full = (zs + zs_err) * (zst + zst_err) * wabs_inf
    abs_trunc = float(np.sum(dw * Zs[q] * Wabs[q]))
    tail = max(abs_full - abs_trunc, 0.0)
    tail += abs(pref) * _tail(_tail_max(Fa, N), N, t)
    tail += abs(dir_F) * abs(pref) * (zs_err / zs + zst_err / zst + zt_err / zt)
    return SeriesReport("double", name, 0, 0, s, t, N, lhs, rhs, abs(lhs - rhs), tail)


def dirichlet_series_check(
    F: Callable,
    a_F_declared: float,
    n: int,
    r: int,
    s: float,
    t: float,
    truncation: int = 10**5,
):
    """Truncated checks of the three Dirichlet-series identities for f_r(n) = F(gcd(n, r)).

    Returns SeriesReports for: the series over moduli at fixed n, the series
    over n at fixed modulus r, and the double series. ``a_F_declared`` is the
    caller's absolute convergence abscissa of sum F(k) k^-s.
    """
    lo = max(1.0, float(a_F_declared))
    if not s > lo:
        raise PreconditionError(f"need s > max(1, a_F) = {lo}, got s={s}")
    if not t > lo:
        raise PreconditionError(f"need t > max(1, a_F) = {lo}, got t={t}")
    if truncation < 100:
        raise PreconditionError("truncation must be at least 100")
    if n < 1 or r < 1:
        raise ValueError("n and r must be positive")
    name = getattr(F, "name", "F")
    s, t = float(s), float(t)
    reports = (
        _series_sum_over_moduli(F, name, n, s, truncation),
        _series_sum_over_n(F, name, r, s, truncation),
        _series_double(F, name, s, t, truncation),
    )
    return tuple(replace(rep, n=n, r=r) for rep in reports)
