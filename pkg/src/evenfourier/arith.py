"""Exact integer arithmetic: factorization, divisors, classical functions,
Dirichlet convolution and three independent ways to compute Ramanujan sums.

Everything returns Python ints or :class:`fractions.Fraction`; floating point
only appears inside :func:`ramanujan_sum_exponential`.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Callable, Iterable, Optional

import numpy as np

from .errors import BoundError, ImplementationBug, NumericInstabilityError, PreconditionError

FACTOR_BOUND = 10**12
SIEVE_LIMIT = 10**6
EXPONENTIAL_ORACLE_BOUND = 10**4

_sieve_lock = threading.Lock()
_prime_flags: Optional[np.ndarray] = None
_prime_list: Optional[tuple] = None


def _sieve():
    global _prime_flags, _prime_list
    if _prime_list is None:
        with _sieve_lock:
            if _prime_list is None:
                flags = np.ones(SIEVE_LIMIT + 1, dtype=bool)
                flags[:2] = False
                for p in range(2, math.isqrt(SIEVE_LIMIT) + 1):
                    if flags[p]:
                        flags[p * p :: p] = False
                _prime_flags = flags
                _prime_list = tuple(int(p) for p in np.flatnonzero(flags))
    return _prime_flags, _prime_list


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    flags, primes = _sieve()
    if n <= SIEVE_LIMIT:
        return bool(flags[n])
    root = math.isqrt(n)
    for p in primes:
        if p > root:
            return True
        if n % p == 0:
            return False
    if root <= SIEVE_LIMIT:
        # every prime up to root has been tried
        return True
    raise BoundError(f"{n} too large for the trial-division primality check")


@dataclass(frozen=True)
class Factorization:
    """Canonical factorization ``n = prod p**a`` with strictly increasing primes."""

    n: int
    factors: tuple

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("Factorization requires n >= 1")
        prod_ = 1
        last = 1
        for p, a in self.factors:
            if p <= last or a < 1 or not is_prime(p):
                raise ValueError(f"invalid factor ({p}, {a}) in factorization of {self.n}")
            last = p
            prod_ *= p**a
        if prod_ != self.n:
            raise ValueError(f"factors multiply to {prod_}, not {self.n}")

    @property
    def primes(self):
        return tuple(p for p, _ in self.factors)

    def __iter__(self):
        return iter(self.factors)

    def __len__(self):
        return len(self.factors)


def _check_bound(n: int, bound: int = FACTOR_BOUND) -> None:
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise TypeError(f"expected a positive integer, got {n!r}")
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")
    if n > bound:
        raise BoundError(f"{n} exceeds the factorization bound {bound}")


@lru_cache(maxsize=1 << 16)
def _factor_tuple(n: int) -> tuple:
    _, primes = _sieve()
    out = []
    m = n
    for p in primes:
        if p * p > m:
            break
        if m % p == 0:
            a = 0
            while m % p == 0:
                m //= p
                a += 1
            out.append((p, a))
    if m > 1:
        out.append((m, 1))
    return tuple(out)


def factorize(n: int, bound: int = FACTOR_BOUND) -> Factorization:
    """Factor ``n`` by trial division over the cached prime sieve.

    >>> factorize(12).factors
    ((2, 2), (3, 1))
    """
    _check_bound(n, bound)
    return Factorization(int(n), _factor_tuple(int(n)))


@lru_cache(maxsize=1 << 14)
def _divisor_tuple(n: int) -> tuple:
    divs = [1]
    for p, a in _factor_tuple(n):
        divs = [d * p**e for d in divs for e in range(a + 1)]
    return tuple(sorted(divs))


def divisors(n: int) -> list:
    """All positive divisors of ``n`` in ascending order."""
    _check_bound(n)
    return list(_divisor_tuple(int(n)))


def divisor_tuple(n: int) -> tuple:
    """Cached immutable variant of :func:`divisors`."""
    _check_bound(n)
    return _divisor_tuple(int(n))


# -- classical multiplicative functions ------------------------------------


def mobius(n: int) -> int:
    _check_bound(n)
    fac = _factor_tuple(int(n))
    if any(a > 1 for _, a in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def euler_phi(n: int) -> int:
    _check_bound(n)
    out = 1
    for p, a in _factor_tuple(int(n)):
        out *= (p - 1) * p ** (a - 1)
    return out


def tau(n: int) -> int:
    _check_bound(n)
    out = 1
    for _, a in _factor_tuple(int(n)):
        out *= a + 1
    return out


def _power(d: int, k: int):
    return d**k if k >= 0 else Fraction(1, d ** (-k))


def sigma(n: int, k: int = 1):
    """Sum of k-th powers of divisors; a Fraction when k < 0."""
    _check_bound(n)
    out = 1
    for p, a in _factor_tuple(int(n)):
        out *= sum(_power(p**e, k) for e in range(a + 1))
    return out


def phi_k(n: int, k: int):
    """Generalized Euler function: sum over d | n of d**k * mu(n/d)."""
    _check_bound(n)
    out = 1
    for p, a in _factor_tuple(int(n)):
        # only the top two exponents survive the Moebius factor
        out *= _power(p**a, k) - _power(p ** (a - 1), k)
    return out


def omega(n: int) -> int:
    """Number of distinct prime factors."""
    _check_bound(n)
    return len(_factor_tuple(int(n)))


@dataclass(frozen=True)
class LogCombination:
    """A finite sum ``sum coeff * log(arg)`` kept exact until :meth:`__float__`.

    Terms are stored with distinct integer arguments > 1, ascending.
    """

    terms: tuple = ()

    @classmethod
    def of(cls, pairs: Iterable) -> "LogCombination":
        acc: dict = {}
        for arg, coeff in pairs:
            if arg == 1 or coeff == 0:
                continue
            acc[arg] = acc.get(arg, 0) + Fraction(coeff)
        return cls(tuple(sorted((a, c) for a, c in acc.items() if c != 0)))

    def __add__(self, other: "LogCombination") -> "LogCombination":
        return LogCombination.of(self.terms + other.terms)

    def scale(self, c) -> "LogCombination":
        return LogCombination.of((a, coeff * c) for a, coeff in self.terms)

    def __neg__(self):
        return self.scale(-1)

    def __float__(self) -> float:
        return math.fsum(float(c) * math.log(a) for a, c in self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __str__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*log({a})" for a, c in self.terms)


def von_mangoldt(n: int) -> LogCombination:
    """Lambda(n) as ``1*log(p)`` for prime powers p**a, else the empty combination."""
    _check_bound(n)
    fac = _factor_tuple(int(n))
    if len(fac) == 1:
        return LogCombination(((fac[0][0], Fraction(1)),))
    return LogCombination()


_CLASSICAL = {
    "mobius": lambda n, k: mobius(n),
    "euler_phi": lambda n, k: euler_phi(n),
    "tau": lambda n, k: tau(n),
    "sigma_k": lambda n, k: sigma(n, k),
    "phi_k": lambda n, k: phi_k(n, k),
}


def classical(kind: str, n: int, k: Optional[int] = None):
    """Evaluate a named classical function exactly.

    ``kind`` is one of mobius, euler_phi, tau, sigma_k, phi_k, von_mangoldt.
    sigma_k and phi_k take an integer ``k`` (may be negative). von_mangoldt is
    returned as a :class:`LogCombination`.
    """
    if kind == "von_mangoldt":
        return von_mangoldt(n)
    if kind not in _CLASSICAL:
        raise ValueError(f"unknown classical function {kind!r}")
    if kind in ("sigma_k", "phi_k") and k is None:
        raise ValueError(f"{kind} needs an integer k")
    return Fraction(_CLASSICAL[kind](n, k))


# -- arithmetic functions ----------------------------------------------------


class ArithFunction:
    """An arithmetic function n -> exact rational.

    ``multiplicative`` / ``strongly_multiplicative`` are declarations
    (True, False or None for unknown). A multiplicative declaration is checked
    against f(1) = 1 at construction.
    """

    def __init__(
        self,
        func: Callable[[int], object],
        name: str = "f",
        multiplicative: Optional[bool] = None,
        strongly_multiplicative: Optional[bool] = None,
    ):
        self._func = func
        self.name = name
        if strongly_multiplicative:
            multiplicative = True
        self.multiplicative = multiplicative
        self.strongly_multiplicative = strongly_multiplicative
        if multiplicative and self(1) != 1:
            raise PreconditionError(f"{name} declared multiplicative but {name}(1) = {self(1)}")

    def __call__(self, n: int) -> Fraction:
        return Fraction(self._func(n))

    def scaled(self, c) -> "ArithFunction":
        c = Fraction(c)
        mult = self.multiplicative if c == 1 else (False if self.multiplicative else None)
        return ArithFunction(lambda n: c * self(n), name=f"{c}*{self.name}", multiplicative=mult)

    def __repr__(self):
        return f"ArithFunction({self.name})"


def constant(c) -> ArithFunction:
    c = Fraction(c)
    return ArithFunction(lambda n: c, name=f"const({c})", multiplicative=(c == 1) or None)


EPSILON = ArithFunction(lambda n: 1 if n == 1 else 0, "eps", strongly_multiplicative=True)
ONE = ArithFunction(lambda n: 1, "one", strongly_multiplicative=True)
IDENTITY = ArithFunction(lambda n: n, "id", multiplicative=True, strongly_multiplicative=False)
TAU = ArithFunction(tau, "tau", multiplicative=True, strongly_multiplicative=False)
SIGMA = ArithFunction(sigma, "sigma", multiplicative=True, strongly_multiplicative=False)
MOBIUS = ArithFunction(mobius, "mobius", multiplicative=True, strongly_multiplicative=False)
PHI = ArithFunction(euler_phi, "phi", multiplicative=True, strongly_multiplicative=False)
TWO_OMEGA = ArithFunction(lambda n: 2 ** omega(n), "two-omega", strongly_multiplicative=True)


def dirichlet_convolve(f: Callable, g: Callable, n: int) -> Fraction:
    """(f * g)(n) = sum over d | n of f(d) g(n/d)."""
    return sum((Fraction(f(d)) * g(n // d) for d in divisor_tuple(n)), Fraction(0))


def mobius_transform(f: Callable, n: int) -> Fraction:
    """f'(n) = (mu * f)(n)."""
    return sum((mobius(d) * Fraction(f(n // d)) for d in divisor_tuple(n)), Fraction(0))


# -- Ramanujan sums ------------------------------------------------------------


def _check_modulus(q: int) -> None:
    if isinstance(q, bool) or not isinstance(q, (int, np.integer)) or q < 1:
        raise ValueError(f"modulus must be a positive integer, got {q!r}")


def ramanujan_sum(q: int, n: int) -> int:
    """c_q(n) as the divisor sum over d | gcd(n, q) of d * mu(q/d).

    gcd(0, q) = q, so c_q(0) = phi(q); negative n reduce the same way.
    """
    _check_modulus(q)
    g = math.gcd(n, q)
    return sum(d * mobius(q // d) for d in divisor_tuple(g))


def ramanujan_sum_holder(q: int, n: int) -> int:
    """c_q(n) = mu(m) phi(q) / phi(m) with m = q / gcd(n, q)."""
    _check_modulus(q)
    m = q // math.gcd(n, q)
    value = Fraction(mobius(m) * euler_phi(q), euler_phi(m))
    if value.denominator != 1:
        raise ImplementationBug(f"Hoelder quotient for c_{q}({n}) is not integral: {value}")
    return int(value)


def ramanujan_sum_exponential(
    q: int, n: int, tol: Optional[float] = None, bound: int = EXPONENTIAL_ORACLE_BOUND
) -> int:
    """c_q(n) from the exponential sum over reduced residues, rounded.

    Raises :class:`NumericInstabilityError` when the float sum is further
    than ``tol`` (default ``1e-6 * q``) from the nearest integer.
    """
    _check_modulus(q)
    if q > bound:
        raise BoundError(f"exponential oracle limited to q <= {bound}, got {q}")
    if tol is None:
        tol = 1e-6 * q
    k = np.arange(1, q + 1, dtype=np.int64)
    k = k[np.gcd(k, q) == 1]
    # reduce k*n mod q before scaling so the angle stays accurate for large n
    phase = (k * (n % q)) % q
    total = np.exp(2j * np.pi * phase / q).sum()
    nearest = round(total.real)
    err = abs(total - nearest)
    if err > tol:
        raise NumericInstabilityError(
            f"exponential sum for c_{q}({n}) = {total} is {err:.3g} from an integer (tol {tol:.3g})"
        )
    return int(nearest)


@lru_cache(maxsize=128)
def ramanujan_table(r: int) -> tuple:
    """Matrix ``T[i][j] = c_{r/d_i}(d_j)`` over the ascending divisors of r.

    Built prime by prime from the closed form of c_{p^e} on prime powers,
    so the cost is tau(r)**2 small-int products.
    """
    _check_bound(r)
    fac = _factor_tuple(int(r))
    divs = _divisor_tuple(int(r))
    index = {d: i for i, d in enumerate(divs)}
    local = []
    for p, a in fac:
        # c_{p^e}(p^j): phi(p^e) if j >= e, -p^(e-1) if j == e-1, else 0
        rows = []
        for i in range(a + 1):
            e = a - i
            row = []
            for j in range(a + 1):
                if e == 0:
                    row.append(1)
                elif j >= e:
                    row.append(p**e - p ** (e - 1))
                elif j == e - 1:
                    row.append(-(p ** (e - 1)))
                else:
                    row.append(0)
            rows.append(row)
        local.append((p, rows))
    n = len(divs)
    table = [[0] * n for _ in range(n)]
    exps = list(product(*(range(a + 1) for _, a in fac)))
    values = [math.prod(p**e for (p, _), e in zip(fac, ex)) for ex in exps]
    for ei, di in zip(exps, values):
        row = table[index[di]]
        for ej, dj in zip(exps, values):
            v = 1
            for (_, rows), x, y in zip(local, ei, ej):
                v *= rows[x][y]
                if not v:
                    break
            row[index[dj]] = v
    return tuple(tuple(row) for row in table)

