"""r-even functions stored by their values on the divisors of r.

An r-even function satisfies f(n) = f(gcd(n, r)), so the tau(r) values
f(d), d | r (ascending), determine it. :class:`PeriodicTable` is the plain
residue-indexed form used by the naive oracles.
"""

from __future__ import annotations

import cmath
import json
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Sequence

from .arith import divisor_tuple, euler_phi, mobius, ramanujan_sum, ramanujan_table
from .errors import ImplementationBug, ModulusMismatchError, NotEvenError


def rational_str(x, human: bool = False) -> str:
    """Canonical ``p/q`` text for an exact rational (q > 0, lowest terms).

    With ``human=True`` integers drop the ``/1``.
    """
    x = Fraction(x)
    if human and x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@lru_cache(maxsize=256)
def _divisor_index(r: int) -> dict:
    return {d: i for i, d in enumerate(divisor_tuple(r))}


@lru_cache(maxsize=64)
def gcd_index(r: int) -> tuple:
    """``gcd_index(r)[n % r]`` is the position of gcd(n, r) among the divisors."""
    idx = _divisor_index(r)
    return tuple(idx[math.gcd(n, r)] for n in range(r))


@dataclass(frozen=True)
class EvenFunction:
    """An r-even function; ``values[i]`` is f(d_i) for the i-th divisor of r."""

    r: int
    values: tuple

    def __post_init__(self):
        divs = divisor_tuple(self.r)
        vals = tuple(Fraction(v) for v in self.values)
        if len(vals) != len(divs):
            raise ValueError(
                f"{self.r} has {len(divs)} divisors but {len(vals)} values were given"
            )
        object.__setattr__(self, "values", vals)

    @property
    def divisors(self) -> tuple:
        return divisor_tuple(self.r)

    def __call__(self, n: int) -> Fraction:
        return self.values[_divisor_index(self.r)[math.gcd(n, self.r)]]

    def at_divisor(self, d: int) -> Fraction:
        return self.values[_divisor_index(self.r)[d]]

    def as_dict(self) -> dict:
        return dict(zip(self.divisors, self.values))

    def expand(self) -> "PeriodicTable":
        """Tabulate over residues 1..r."""
        gi = gcd_index(self.r)
        return PeriodicTable(self.r, tuple(self.values[gi[n % self.r]] for n in range(1, self.r + 1)))

    def _check_same(self, other: "EvenFunction") -> None:
        if other.r != self.r:
            raise ModulusMismatchError(f"moduli differ: {self.r} vs {other.r}")

    def __add__(self, other):
        self._check_same(other)
        return EvenFunction(self.r, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        self._check_same(other)
        return EvenFunction(self.r, tuple(a - b for a, b in zip(self.values, other.values)))

    def __mul__(self, other):
        if isinstance(other, EvenFunction):
            self._check_same(other)
            return EvenFunction(self.r, tuple(a * b for a, b in zip(self.values, other.values)))
        c = Fraction(other)
        return EvenFunction(self.r, tuple(c * a for a in self.values))

    __rmul__ = __mul__

    def norm1(self) -> Fraction:
        """Sum of |f(n)| over one period."""
        phis = _phi_of_cofactors(self.r)
        return sum((abs(v) * w for v, w in zip(self.values, phis)), Fraction(0))

    def to_json(self) -> str:
        return json.dumps(
            {
                "r": self.r,
                "divisors": list(self.divisors),
                "values": [rational_str(v) for v in self.values],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "EvenFunction":
        data = json.loads(text)
        r = int(data["r"])
        if "divisors" in data and list(data["divisors"]) != list(divisor_tuple(r)):
            raise ValueError(f"divisor list does not match r={r}")
        return cls(r, tuple(Fraction(v) for v in data["values"]))


@lru_cache(maxsize=256)
def _phi_of_cofactors(r: int) -> tuple:
    # number of residues n in 1..r with gcd(n, r) = d is phi(r/d)
    return tuple(euler_phi(r // d) for d in divisor_tuple(r))


@dataclass(frozen=True)
class PeriodicTable:
    """An r-periodic function given on n = 1..r (n = r is the zero class)."""

    r: int
    residues: tuple

    def __post_init__(self):
        if self.r < 1:
            raise ValueError("modulus must be positive")
        if len(self.residues) != self.r:
            raise ValueError(f"expected {self.r} residues, got {len(self.residues)}")
        object.__setattr__(self, "residues", tuple(self.residues))

    def __call__(self, n: int):
        return self.residues[(n - 1) % self.r]

    @property
    def is_exact(self) -> bool:
        return all(isinstance(v, (int, Fraction)) for v in self.residues)

    @classmethod
    def delta(cls, r: int, k: int) -> "PeriodicTable":
        """Standard basis element: 1 on the class of k, 0 elsewhere."""
        return cls(r, tuple(Fraction(int((n - k) % r == 0)) for n in range(1, r + 1)))

    @classmethod
    def additive_character(cls, r: int, k: int) -> "PeriodicTable":
        return cls(r, tuple(cmath.exp(2j * math.pi * ((k * n) % r) / r) for n in range(1, r + 1)))

    @classmethod
    def epsilon(cls, r: int) -> "PeriodicTable":
        return cls.delta(r, r)

    @classmethod
    def eta(cls, r: int) -> "PeriodicTable":
        return cls(r, tuple(Fraction(r if n == r else 0) for n in range(1, r + 1)))


# -- constructors --------------------------------------------------------------


def make_even(r: int, divisor_values: Sequence) -> EvenFunction:
    return EvenFunction(r, tuple(divisor_values))


def evaluate(f: EvenFunction, n: int) -> Fraction:
    return f(n)


def constant_even(r: int, c=1) -> EvenFunction:
    return EvenFunction(r, (Fraction(c),) * len(divisor_tuple(r)))


def basis_g(r: int, d: int) -> EvenFunction:
    """g_d: indicator of gcd(n, r) = d."""
    if r % d:
        raise ValueError(f"{d} does not divide {r}")
    return EvenFunction(r, tuple(int(e == d) for e in divisor_tuple(r)))


def rho(r: int) -> EvenFunction:
    """Principal character indicator: 1 iff gcd(n, r) = 1."""
    return basis_g(r, 1)


def epsilon_even(r: int) -> EvenFunction:
    """epsilon_r: indicator of r | n, the unit of Cauchy convolution."""
    return basis_g(r, r)


def eta_even(r: int) -> EvenFunction:
    """eta_r(n) = r if r | n else 0."""
    return basis_g(r, r) * r


def ramanujan_even(r: int, q: int | None = None) -> EvenFunction:
    """c_q as an r-even function (q | r, default q = r)."""
    q = r if q is None else q
    if r % q:
        raise ValueError(f"c_{q} is only {r}-even when {q} divides {r}")
    return EvenFunction(r, tuple(ramanujan_sum(q, d) for d in divisor_tuple(r)))


def completely_even(F: Callable, r: int) -> EvenFunction:
    """The member f_r(n) = F(gcd(n, r)) of a completely even sequence."""
    return EvenFunction(r, tuple(F(d) for d in divisor_tuple(r)))


def from_periodic(t: PeriodicTable) -> EvenFunction:
    """Compress an exact r-periodic table, checking t(n) = t(gcd(n, r)) for every n."""
    r = t.r
    if not t.is_exact:
        raise TypeError("from_periodic needs exact rational residues")
    for n in range(1, r + 1):
        g = math.gcd(n, r)
        if t(n) != t(g):
            raise NotEvenError(r, n, t(n), t(g))
    return EvenFunction(r, tuple(t(d) for d in divisor_tuple(r)))


def mobius_core(f: EvenFunction) -> tuple:
    """f'(d) = sum over e | d of mu(d/e) f(e), for each d | r."""
    divs = f.divisors
    out = []
    for i, d in enumerate(divs):
        acc = Fraction(0)
        for j in range(i + 1):
            e = divs[j]
            if d % e == 0:
                m = mobius(d // e)
                if m:
                    acc += m * f.values[j]
        out.append(acc)
    return tuple(out)


def from_core(r: int, core: Sequence) -> EvenFunction:
    """Resum a divisor-supported core: f(d) = sum over e | d of core(e)."""
    divs = divisor_tuple(r)
    core = [Fraction(c) for c in core]
    vals = []
    for i, d in enumerate(divs):
        vals.append(sum((core[j] for j in range(i + 1) if d % divs[j] == 0), Fraction(0)))
    return EvenFunction(r, tuple(vals))


# -- Ramanujan-Fourier coefficients --------------------------------------------


@dataclass(frozen=True)
class FourierCoefficients:
    """alpha[i] is the coefficient of c_{d_i} in the expansion of f."""

    r: int
    alpha: tuple

    def __post_init__(self):
        object.__setattr__(self, "alpha", tuple(Fraction(a) for a in self.alpha))

    def as_dict(self) -> dict:
        return dict(zip(divisor_tuple(self.r), self.alpha))

    def expand(self) -> EvenFunction:
        return expand_from_coefficients(self)


def expand_from_coefficients(coeffs: FourierCoefficients) -> EvenFunction:
    """f(n) = sum over d | r of alpha(d) c_d(n), evaluated on the divisors of r."""
    divs = divisor_tuple(coeffs.r)
    vals = []
    for n in divs:
        vals.append(
            sum((a * ramanujan_sum(d, n) for d, a in zip(divs, coeffs.alpha) if a), Fraction(0))
        )
    return EvenFunction(coeffs.r, tuple(vals))


def fourier_coefficients(f: EvenFunction) -> FourierCoefficients:
    """Coefficients alpha_f(d) of f in the Ramanujan-sum basis.

    Computed as (1/r) sum_e f(e) c_{r/e}(r/d) and cross-checked against
    alpha_f(d) = fhat(r/d) / r with fhat taken from the Moebius-core transform.
    """
    from .transform import dft_via_core

    r = f.r
    divs = f.divisors
    table = ramanujan_table(r)
    idx = _divisor_index(r)
    direct = []
    for d in divs:
        col = idx[r // d]
        direct.append(
            sum((v * table[i][col] for i, v in enumerate(f.values) if v), Fraction(0)) / r
        )
    fhat = dft_via_core(f)
    via_dft = [fhat.at_divisor(r // d) / r for d in divs]
    if direct != via_dft:
        raise ImplementationBug(f"coefficient paths disagree for r={r}: {direct} vs {via_dft}")
    return FourierCoefficients(r, tuple(direct))


def cauchy_convolve(f: EvenFunction, h: EvenFunction) -> EvenFunction:
    """(f (x) h)(n) = sum over a mod r of f(a) h(n - a), from the definition.

    The result's coefficients are checked against alpha = r * alpha_f * alpha_h.
    """
    if f.r != h.r:
        raise ModulusMismatchError(f"Cauchy convolution needs equal moduli, got {f.r} and {h.r}")
    r = f.r
    gi = gcd_index(r)
    vals = []
    for n in f.divisors:
        acc = Fraction(0)
        for a in range(r):
            fa = f.values[gi[a]]
            if fa:
                acc += fa * h.values[gi[(n - a) % r]]
        vals.append(acc)
    out = EvenFunction(r, tuple(vals))
    af = fourier_coefficients(f).alpha
    ah = fourier_coefficients(h).alpha
    ao = fourier_coefficients(out).alpha
    if any(o != r * x * y for o, x, y in zip(ao, af, ah)):
        raise ImplementationBug(f"Cauchy coefficient law fails for r={r}")
    return out
