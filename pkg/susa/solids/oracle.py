"""

The `oracle` module checks closed-form volumes numerically with Cavalieri's principle: a solid's volume is the integral of its horizontal cross-section areas over its height.

`slab_volume_oracle` samples an area profile at the boundaries of an even number of slabs and integrates it with the composite Simpson rule from `scipy.integrate`. Simpson's rule is exact for polynomials of degree three or less, which covers every straight-sided solid here (their profiles are at most quadratic) and the sphere and cone as well.

`cross_section_profile` builds the profile of any solid descriptor, with height measured upward from the base.
"""
import functools
import math
import typing

import numpy as np
from scipy import integrate

from susa.sexagesimal import SexRational
from susa.solids.elements import (
    Cuboid,
    GrainHeap,
    NgonFrustum,
    PrismSpec,
    PyramidSpec,
    RotationKind,
    RotationSolid,
    Solid,
    SquareFrustum,
    TruncatedTriangularPrism,
)
from susa.solids.functional import grain_heap_as_truncated_prism

__all__ = ("Profile", "slab_volume_oracle", "cross_section_profile", "height_of")

Profile = typing.Callable[[float], float]


def slab_volume_oracle(
    area_profile: Profile, h: typing.Union[float, SexRational], slabs: int
) -> float:
    """
    Integrates a cross-section area profile over `[0, h]` with the composite Simpson rule.

    Args:
        area_profile (Callable[[float], float]):
             Cross-section area as a function of height. It is called once per sample and must be re-entrant.
        h (float | SexRational):
             The extent of the solid.
        slabs (int):
             The number of slabs, even and at least 2.

    Returns:
        float:
             The approximate volume.

    Raises:
        ValueError:
             If the slab count is odd or below 2, or the extent is not positive.

    """
    if slabs < 2 or slabs % 2:
        raise ValueError(f"Simpson integration needs an even number of slabs >= 2, got {slabs}")
    extent = float(h)
    if extent <= 0:
        raise ValueError(f"Profile extent must be positive, got {h}")
    heights = np.linspace(0.0, extent, slabs + 1)
    areas = np.fromiter((area_profile(float(t)) for t in heights), dtype=float, count=slabs + 1)
    return float(integrate.simpson(areas, x=heights))


@functools.singledispatch
def cross_section_profile(solid) -> Profile:
    """
    Returns the horizontal cross-section area of a solid as a function of height above its base.

    Raises:
        TypeError:
             For objects that are not solid descriptors.

    """
    raise TypeError(f"No cross-section profile for {type(solid).__name__}")


@cross_section_profile.register
def _(solid: Cuboid) -> Profile:
    area = float(solid.a * solid.b)
    return lambda t: area


@cross_section_profile.register
def _(solid: PrismSpec) -> Profile:
    area = float(solid.base_area)
    return lambda t: area


@cross_section_profile.register
def _(solid: PyramidSpec) -> Profile:
    area, h = float(solid.base_area), float(solid.h)
    return lambda t: area * ((h - t) / h) ** 2


@cross_section_profile.register
def _(solid: SquareFrustum) -> Profile:
    a, b, h = float(solid.a), float(solid.b), float(solid.h)
    return lambda t: (a - (a - b) * t / h) ** 2


@cross_section_profile.register
def _(solid: NgonFrustum) -> Profile:
    a, b, h, n = float(solid.a), float(solid.b), float(solid.h), solid.n
    scale = n / (4 * math.tan(math.pi / n))
    return lambda t: scale * (a - (a - b) * t / h) ** 2


@cross_section_profile.register
def _(solid: TruncatedTriangularPrism) -> Profile:
    x, ends, y, h = float(solid.x), float(solid.x1 + solid.x2), float(solid.y), float(solid.h)

    def area(t: float) -> float:
        shrink = (h - t) / h
        return y * shrink * (x + ends * shrink)

    return area


@cross_section_profile.register
def _(solid: GrainHeap) -> Profile:
    return cross_section_profile(grain_heap_as_truncated_prism(solid))


@cross_section_profile.register
def _(solid: RotationSolid) -> Profile:
    r, h = float(solid.r), float(solid.h)
    match solid.kind:
        case RotationKind.sphere:
            return lambda t: math.pi * max(r * r - (t - r) ** 2, 0.0)
        case RotationKind.cylinder:
            return lambda t: math.pi * r * r
        case RotationKind.cone:
            return lambda t: math.pi * (r * (h - t) / h) ** 2


def height_of(solid: Solid) -> SexRational:
    """The extent a profile is integrated over; a sphere's is its diameter."""
    if isinstance(solid, Cuboid):
        return solid.c
    if isinstance(solid, RotationSolid) and solid.kind is RotationKind.sphere:
        return 2 * solid.r
    return solid.h
