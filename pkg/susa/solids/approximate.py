"""

The `approximate` module evaluates the rules that involve π or radicals. Expressions are built symbolically with sympy from the exact parameters and evaluated to a requested number of significant digits (`DEFAULT_PRECISION` = 50). When sympy simplifies an expression to a rational, the exact `Fraction` is returned instead; the square frustum (`n = 4`, `cot(π/4) = 1`) therefore stays exact.
"""
import typing
from fractions import Fraction

import sympy

from susa.sexagesimal import SexRational
from susa.solids.elements import NgonFrustum, RotationKind, RotationSolid, Slope

__all__ = (
    "DEFAULT_PRECISION",
    "volume_frustum_ngon",
    "slope_angle",
    "volume_rotation",
    "to_sympy",
    "settle",
)

DEFAULT_PRECISION = 50

Approximate = typing.Union[SexRational, sympy.Float]


def to_sympy(q: SexRational) -> sympy.Rational:
    q = Fraction(q)
    return sympy.Rational(q.numerator, q.denominator)


def settle(expression: sympy.Expr, precision: int = DEFAULT_PRECISION) -> Approximate:
    """
    Returns an exact `Fraction` for rational expressions and a sympy `Float` otherwise.

    Args:
        expression (sympy.Expr):
             The expression to evaluate.
        precision (int):
             Significant decimal digits for irrational results.

    Returns:
        Fraction | sympy.Float:
             The value.

    """
    if expression.is_Rational:
        return Fraction(int(expression.p), int(expression.q))
    return sympy.N(expression, precision)


def volume_frustum_ngon(f: NgonFrustum, precision: int = DEFAULT_PRECISION) -> Approximate:
    """
    The frustum of a regular `n`-gon pyramid, `(nh/12)·cot(π/n)·(a² + ab + b²)`.

    Args:
        f (NgonFrustum):
             The frustum.
        precision (int):
             Significant digits for irrational results.

    Returns:
        Fraction | sympy.Float:
             Exact for `n = 4`, where the rule reduces to the Egyptian one; approximate otherwise.

    """
    a, b, h = to_sympy(f.a), to_sympy(f.b), to_sympy(f.h)
    expression = (
        sympy.Integer(f.n) * h / 12 * sympy.cot(sympy.pi / f.n) * (a**2 + a * b + b**2)
    )
    return settle(expression, precision)


def slope_angle(s: Slope, precision: int = DEFAULT_PRECISION) -> Approximate:
    """
    The angle of a face that "ate `x` kùš" per kùš, in degrees: `arctan(1/x)`.

    A slope of 1 is 45°.
    """
    expression = sympy.deg(sympy.atan(1 / to_sympy(s.x)))
    return settle(expression, precision)


def volume_rotation(s: RotationSolid, precision: int = DEFAULT_PRECISION) -> sympy.Float:
    """
    Sphere `4πr³/3`, cylinder `πr²h` and cone `πr²h/3`.

    Args:
        s (RotationSolid):
             The solid; `h` is ignored for a sphere.
        precision (int):
             Significant digits.

    Returns:
        sympy.Float:
             The volume.

    """
    r, h = to_sympy(s.r), to_sympy(s.h)
    match s.kind:
        case RotationKind.sphere:
            expression = sympy.Rational(4, 3) * sympy.pi * r**3
        case RotationKind.cylinder:
            expression = sympy.pi * r**2 * h
        case RotationKind.cone:
            expression = sympy.pi * r**2 * h / 3
    return sympy.N(expression, precision)
