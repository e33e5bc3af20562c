"""

The `functional` module collects the closed-form volume rules that stay inside exact rational arithmetic, together with the grain-heap solver the scribe of SMT No. 14 worked through.

### Rules

- `volume_cuboid`: `abc`.
- `volume_prism`: area of base times height.
- `volume_pyramid`: one third of height times the area of base.
- `volume_frustum_egyptian`: `(h/3)(a² + ab + b²)`.
- `volume_frustum_babylonian`: `[((a+b)/2)² + (1/3)((a−b)/2)²]·h`, the procedure of BM 85194. It equals the Egyptian rule identically.
- `frustum_apex_extension`: the height `h′ = bh/(a−b)` of the pyramid cut away from a frustum.
- `volume_truncated_prism`: `(2zyh + xyh)/6`, a middle triangular prism plus two end pyramids.
- `grain_heap_dims`, `volume_grain_heap` and `solve_grain_heap_top`: the SMT No. 14 heap, `y = 2h`, `z = x + 2h` and `V = xh² + 2(1 − 0;20)h³`.

Lengths are plain exact values in one unit (nindan by convention); `solve_grain_heap_top` also accepts `Quantity` arguments and converts them to nindan and nindan³.
"""
import typing
from fractions import Fraction

from susa.log import create_logger
from susa.metrology import NINDAN, NINDAN3, Quantity, convert
from susa.sexagesimal import SexRational, as_sex, format_sex
from susa.solids.elements import (
    Cuboid,
    GrainHeap,
    NgonFrustum,
    PrismSpec,
    PyramidSpec,
    Slope,
    SquareFrustum,
    TruncatedTriangularPrism,
)

__all__ = (
    "InfeasibleHeapError",
    "UnsupportedSlopeError",
    "volume_cuboid",
    "volume_prism",
    "volume_pyramid",
    "volume_square_pyramid",
    "volume_wing",
    "volume_frustum_egyptian",
    "volume_frustum_babylonian",
    "frustum_apex_extension",
    "frustum_top_from_slope",
    "volume_truncated_prism",
    "grain_heap_dims",
    "grain_heap_as_truncated_prism",
    "grain_heap_parts",
    "volume_grain_heap",
    "solve_grain_heap_top",
)

logger = create_logger("Solids")

ONE_THIRD = Fraction(1, 3)


class InfeasibleHeapError(ValueError):
    """Raised when a volume is too small for a heap of the given height."""


class UnsupportedSlopeError(ValueError):
    """Raised when a slope-1 rule is applied to a heap of another slope."""


def volume_cuboid(c: Cuboid) -> SexRational:
    return c.a * c.b * c.c


def volume_prism(p: typing.Union[PrismSpec, PyramidSpec]) -> SexRational:
    return p.h * p.base_area


def volume_pyramid(p: typing.Union[PyramidSpec, PrismSpec]) -> SexRational:
    """
    One third of height times the area of base.

    A prism splits into three pyramids of equal volume, so this is `volume_prism` of the same base and height divided by 3.
    """
    return ONE_THIRD * p.h * p.base_area


def volume_square_pyramid(h: SexRational) -> SexRational:
    """The pyramid whose length, width and height all equal `h`: `h³/3`."""
    h = as_sex(h)
    return volume_pyramid(PyramidSpec(h * h, h))


def volume_wing(h: SexRational) -> SexRational:
    """
    One wing of the grain heap, a rectangular pyramid of length `h`, width `2h` and height `h`.

    Three `h³/3` pyramids fill a cube of side `h` and two of them form the wing, so its volume is `(1 − 0;20)·h³`.
    """
    h = as_sex(h)
    return (1 - ONE_THIRD) * h**3


def volume_frustum_egyptian(f: SquareFrustum) -> SexRational:
    return f.h / 3 * (f.a**2 + f.a * f.b + f.b**2)


def volume_frustum_babylonian(f: SquareFrustum) -> SexRational:
    """
    The frustum rule followed by BM 85194: the square of the mean side plus a third of the square of half the difference, times the height.

    Args:
        f (SquareFrustum):
             The frustum.

    Returns:
        SexRational:
             The exact volume. With `a` = 10, `b` = 7 nindan and `h` = 18 kùš, the area term is 1,12;15 + 0;45 = 1,13 and the volume 21,54 volume-sar.

    """
    mean = (f.a + f.b) / 2
    half_difference = (f.a - f.b) / 2
    return (mean**2 + ONE_THIRD * half_difference**2) * f.h


def frustum_apex_extension(f: typing.Union[SquareFrustum, NgonFrustum]) -> SexRational:
    """
    The height of the pyramid that completes a frustum to its apex, `bh/(a − b)`.

    Raises:
        ValueError:
             If `a == b`, which describes a prism without an apex.

    """
    if f.a == f.b:
        raise ValueError("A frustum with equal sides is a prism and has no apex")
    return f.b * f.h / (f.a - f.b)


def frustum_top_from_slope(
    a: SexRational, h: SexRational, slope: Slope = Slope(1)
) -> SexRational:
    """
    The top side of a square hole dug with sloping walls, as BM 85194 computes it.

    Each wall runs `slope.x` units inward per unit of depth, so the top side shrinks by `2·h·x`. The tablet adds 0;5 and 0;5 (two kùš in nindan), multiplies by the depth 18 and subtracts 3 from 10 to get 7.

    Args:
        a (SexRational):
             The side of the upper surface.
        h (SexRational):
             The depth, in the same unit as `a`.
        slope (Slope):
             The inclination. Defaults to 1 kùš per kùš.

    Returns:
        SexRational:
             The side of the base surface.

    Raises:
        ValueError:
             If the walls would meet before reaching the depth.

    """
    a, h = as_sex(a), as_sex(h)
    b = a - 2 * h * slope.x
    if b <= 0:
        raise ValueError(
            f"Walls of slope {format_sex(slope.x)} meet before depth {format_sex(h)} under a side of {format_sex(a)}"
        )
    return b


def volume_truncated_prism(t: TruncatedTriangularPrism) -> SexRational:
    """
    The volume `(2zyh + xyh)/6`.

    This is the middle prism `xyh/2` plus the two end pyramids `x1·y·h/3` and `x2·y·h/3`.
    """
    return (2 * t.z * t.y * t.h + t.x * t.y * t.h) / 6


def grain_heap_dims(g: GrainHeap) -> tuple[SexRational, SexRational]:
    """
    The base width and base length of a grain heap.

    Args:
        g (GrainHeap):
             The heap.

    Returns:
        tuple[SexRational, SexRational]:
             `(y, z)` with `y = 2h/slope` and `z = x + 2h/slope`. For the tablet's heap, `x` = 4 and `h` = 3, this is `(6, 10)`.

    """
    run = g.h / g.slope_x
    return 2 * run, g.x + 2 * run


def grain_heap_as_truncated_prism(g: GrainHeap) -> TruncatedTriangularPrism:
    """Describes a heap of any slope as the truncated prism `(x, h/s, h/s, 2h/s, h)`."""
    run = g.h / g.slope_x
    return TruncatedTriangularPrism(x=g.x, x1=run, x2=run, y=2 * run, h=g.h)


def _require_unit_slope(g: GrainHeap) -> None:
    if g.slope_x != 1:
        raise UnsupportedSlopeError(
            f"The grain-heap rule assumes slope 1, got {format_sex(g.slope_x)}; use volume_truncated_prism(grain_heap_as_truncated_prism(heap))"
        )


def grain_heap_parts(g: GrainHeap) -> tuple[SexRational, SexRational, SexRational]:
    """
    Splits a slope-1 heap into its middle prism and two wings.

    Returns:
        tuple[SexRational, SexRational, SexRational]:
             `(h²x, wing, wing)` where each wing is `(1 − 0;20)·h³`.

    """
    _require_unit_slope(g)
    wing = volume_wing(g.h)
    return g.h**2 * g.x, wing, wing


def volume_grain_heap(g: GrainHeap) -> SexRational:
    """
    The scribe's rule `V = xh² + 2(1 − 0;20)h³`.

    Raises:
        UnsupportedSlopeError:
             If the heap's slope is not 1.

    """
    _require_unit_slope(g)
    return g.x * g.h**2 + 2 * (1 - ONE_THIRD) * g.h**3


def _magnitude(value: typing.Union[Quantity, SexRational, int, str], unit) -> SexRational:
    if isinstance(value, Quantity):
        return convert(value, unit).value
    return as_sex(value)


def solve_grain_heap_top(
    V: typing.Union[Quantity, SexRational], h: typing.Union[Quantity, SexRational]
) -> SexRational:
    """
    Recovers the top length of a slope-1 heap from its volume and height.

    This is the chain of SMT No. 14: take 1,12 nindan³, subtract the two wings `1;20 × 27 = 36`, and divide the remaining 36 by the square of the height.

    Args:
        V (Quantity | SexRational):
             The volume; plain values are read as nindan³.
        h (Quantity | SexRational):
             The height; plain values are read as nindan.

    Returns:
        SexRational:
             The top length `x` in nindan. 14,24 volume-sar at height 3 nindan gives 4.

    Raises:
        ValueError:
             If the height is not positive.
        InfeasibleHeapError:
             If the volume is below that of the two wings alone.

    """
    volume = _magnitude(V, NINDAN3)
    height = _magnitude(h, NINDAN)
    if height <= 0:
        raise ValueError(f"Heap height must be positive, got {format_sex(height)}")
    wings = 2 * volume_wing(height)
    if volume < wings:
        raise InfeasibleHeapError(
            f"A heap of height {format_sex(height)} holds at least {format_sex(wings)} nindan³, got {format_sex(volume)}"
        )
    x = (volume - wings) / height**2
    logger.debug(f"Heap top for V={format_sex(volume)} h={format_sex(height)} is {format_sex(x)}")
    return x
