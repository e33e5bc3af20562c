"""

The `arithmetic` module holds the exact field operations and the number theory of base 60.

A positive integer is *regular* when its only prime factors are 2, 3 and 5, the prime factors of 60. Exactly those integers have reciprocals with a finite base-60 expansion, which is why the reciprocal tables of the scribes list only regular numbers.

All functions are pure and operate on `SexRational` values (`fractions.Fraction`), so every result is reduced and exact.
"""
import typing
from fractions import Fraction

from susa.sexagesimal.numerals import SexRational

__all__ = (
    "add",
    "sub",
    "mul",
    "div",
    "reciprocal",
    "is_regular",
    "is_finite_sexagesimal",
    "regular_factors",
    "RegularFactors",
)

SEXAGESIMAL_PRIMES = (2, 3, 5)


def add(q1: SexRational, q2: SexRational) -> SexRational:
    return Fraction(q1) + Fraction(q2)


def sub(q1: SexRational, q2: SexRational) -> SexRational:
    return Fraction(q1) - Fraction(q2)


def mul(q1: SexRational, q2: SexRational) -> SexRational:
    return Fraction(q1) * Fraction(q2)


def div(q1: SexRational, q2: SexRational) -> SexRational:
    """
    Divides exactly.

    Raises:
        ZeroDivisionError:
             If `q2` is zero.

    """
    q2 = Fraction(q2)
    if q2 == 0:
        raise ZeroDivisionError(f"Cannot divide {Fraction(q1)} by zero")
    return Fraction(q1) / q2


def reciprocal(q: SexRational) -> SexRational:
    """
    Makes the reciprocal of a value, the scribes' `igi` operation.

    Args:
        q (SexRational):
             A nonzero value.

    Returns:
        SexRational:
             The exact value of 1/q. `reciprocal(12)` is 0;5 and `reciprocal(9)` is 0;6,40.

    Raises:
        ZeroDivisionError:
             If `q` is zero.

    """
    q = Fraction(q)
    if q == 0:
        raise ZeroDivisionError("Zero has no reciprocal")
    return 1 / q


class RegularFactors(typing.NamedTuple):
    """The exponents of 2, 3 and 5 in an integer and the cofactor left over."""

    twos: int
    threes: int
    fives: int
    residue: int

    @property
    def regular(self) -> bool:
        return self.residue == 1

    def __str__(self):
        factors = [
            f"{prime}^{power}" if power > 1 else str(prime)
            for prime, power in zip(SEXAGESIMAL_PRIMES, self[:3])
            if power
        ]
        return "·".join(factors) or "1"


def regular_factors(n: int) -> RegularFactors:
    """
    Factors 2, 3 and 5 out of a positive integer.

    Args:
        n (int):
             A positive integer.

    Returns:
        RegularFactors:
             The exponents of 2, 3 and 5 and the remaining cofactor.

    Raises:
        ValueError:
             If `n` is not positive.

    """
    if n < 1:
        raise ValueError(f"Regularity is defined for positive integers, got {n}")
    exponents = []
    for prime in SEXAGESIMAL_PRIMES:
        power = 0
        while n % prime == 0:
            n //= prime
            power += 1
        exponents.append(power)
    return RegularFactors(*exponents, residue=n)


def is_regular(n: int) -> bool:
    """Returns True when `n` is of the form 2^a·3^b·5^c."""
    return regular_factors(n).regular


def is_finite_sexagesimal(q: SexRational) -> bool:
    """Returns True when the base-60 expansion of `q` terminates."""
    return is_regular(Fraction(q).denominator)
