"""Exception hierarchy shared by every module."""


class EvenFourierError(Exception):
    """Base class for all library errors."""


class BoundError(EvenFourierError, ValueError):
    """An input exceeds a configured resource bound."""


class NumericInstabilityError(EvenFourierError, ArithmeticError):
    """A floating-point oracle drifted too far from an integer."""


class NotEvenError(EvenFourierError, ValueError):
    """A periodic table is not r-even.

    ``residue`` is the first n in 1..r with t(n) != t(gcd(n, r)).
    """

    def __init__(self, r, residue, value, expected):
        self.r = r
        self.residue = residue
        super().__init__(
            f"table is not {r}-even: t({residue}) = {value} "
            f"but t(gcd({residue}, {r})) = {expected}"
        )


class ModulusMismatchError(EvenFourierError, ValueError):
    """Two even functions with different moduli were combined."""


class PreconditionError(EvenFourierError, ValueError):
    """A documented precondition of an identity does not hold."""


class IdentityViolation(EvenFourierError, AssertionError):
    """Two sides of an identity disagree. Carries both sides."""

    def __init__(self, name, lhs, rhs, **params):
        self.name = name
        self.lhs = lhs
        self.rhs = rhs
        self.params = params
        detail = ", ".join(f"{k}={v}" for k, v in params.items())
        super().__init__(f"{name} violated ({detail}): lhs={lhs} rhs={rhs}")


class ImplementationBug(EvenFourierError, AssertionError):
    """Two computation paths that must agree did not."""
