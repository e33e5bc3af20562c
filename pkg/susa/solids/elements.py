"""

The `elements` module defines the parameter records of every solid the toolkit measures. Each record is a frozen dataclass that coerces its parameters to exact `SexRational` values and checks its invariants on construction, raising `ValueError` for degenerate input.

### Descriptors

- `Cuboid`: edges `a`, `b`, `c`.
- `PrismSpec` / `PyramidSpec`: base area `base_area` and height `h`.
- `SquareFrustum`: square base side `a`, square top side `b` and height `h`, with `a > b`. A frustum with `a == b` is a prism and is rejected.
- `NgonFrustum`: the same for regular `n`-gons, `n >= 3`.
- `TruncatedTriangularPrism`: ridge `x`, end lengths `x1` and `x2`, width `y` and height `h`. The base length `z = x + x1 + x2` is derived.
- `GrainHeap`: the SMT No. 14 heap, a truncated prism given by its top length `x`, height `h` and slope.
- `RotationSolid`: sphere, cylinder or cone of radius `r` and height `h`.
- `Slope`: the "it ate x kùš" inclination, `x` kùš of horizontal run per kùš of depth.

Polyhedral meshes live in the `mesh` module.
"""
import dataclasses
import typing
from enum import Enum
from fractions import Fraction

from susa.sexagesimal import SexRational, as_sex

__all__ = (
    "Cuboid",
    "PrismSpec",
    "PyramidSpec",
    "SquareFrustum",
    "NgonFrustum",
    "TruncatedTriangularPrism",
    "GrainHeap",
    "RotationKind",
    "RotationSolid",
    "Slope",
    "Solid",
)

Number = typing.Union[int, str, Fraction]


def _coerce(instance, *names: str) -> None:
    for name in names:
        object.__setattr__(instance, name, as_sex(getattr(instance, name)))


def _require_positive(instance, *names: str) -> None:
    for name in names:
        if getattr(instance, name) <= 0:
            raise ValueError(
                f"{type(instance).__name__}.{name} must be positive, got {getattr(instance, name)}"
            )


def _require_nonnegative(instance, *names: str) -> None:
    for name in names:
        if getattr(instance, name) < 0:
            raise ValueError(
                f"{type(instance).__name__}.{name} must not be negative, got {getattr(instance, name)}"
            )


@dataclasses.dataclass(frozen=True)
class Cuboid:
    a: SexRational
    b: SexRational
    c: SexRational

    def __post_init__(self):
        _coerce(self, "a", "b", "c")
        _require_positive(self, "a", "b", "c")


@dataclasses.dataclass(frozen=True)
class PrismSpec:
    """A right prism of any base, given by the base area and the height."""

    base_area: SexRational
    h: SexRational

    def __post_init__(self):
        _coerce(self, "base_area", "h")
        _require_positive(self, "base_area", "h")


@dataclasses.dataclass(frozen=True)
class PyramidSpec:
    """A pyramid of any base, given by the base area and the height."""

    base_area: SexRational
    h: SexRational

    def __post_init__(self):
        _coerce(self, "base_area", "h")
        _require_positive(self, "base_area", "h")


@dataclasses.dataclass(frozen=True)
class SquareFrustum:
    """
    A square pyramid cut parallel to its base.

    Attributes:
        a (SexRational):
             The side of the square base.
        b (SexRational):
             The side of the square top, strictly smaller than `a`.
        h (SexRational):
             The height.

    """

    a: SexRational
    b: SexRational
    h: SexRational

    def __post_init__(self):
        _coerce(self, "a", "b", "h")
        _require_positive(self, "a", "b", "h")
        if self.a <= self.b:
            raise ValueError(
                f"Frustum base side {self.a} must exceed its top side {self.b}; equal sides describe a prism"
            )


@dataclasses.dataclass(frozen=True)
class NgonFrustum:
    n: int
    a: SexRational
    b: SexRational
    h: SexRational

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 3:
            raise ValueError(f"A regular polygon needs at least 3 sides, got {self.n}")
        _coerce(self, "a", "b", "h")
        _require_positive(self, "a", "b", "h")
        if self.a <= self.b:
            raise ValueError(
                f"Frustum base side {self.a} must exceed its top side {self.b}; equal sides describe a prism"
            )


@dataclasses.dataclass(frozen=True)
class TruncatedTriangularPrism:
    """
    A triangular prism of ridge `x` flanked by two rectangular pyramids of lengths `x1` and `x2`.

    Attributes:
        x (SexRational):
             The ridge (top) length.
        x1 (SexRational):
             The length of the first end pyramid.
        x2 (SexRational):
             The length of the second end pyramid.
        y (SexRational):
             The width of the base.
        h (SexRational):
             The height.

    """

    x: SexRational
    x1: SexRational
    x2: SexRational
    y: SexRational
    h: SexRational

    def __post_init__(self):
        _coerce(self, "x", "x1", "x2", "y", "h")
        _require_nonnegative(self, "x", "x1", "x2")
        _require_positive(self, "y", "h")
        if self.z == 0:
            raise ValueError("TruncatedTriangularPrism must have a positive base length")

    @property
    def z(self) -> SexRational:
        return self.x + self.x1 + self.x2


@dataclasses.dataclass(frozen=True)
class GrainHeap:
    """
    The grain heap of SMT No. 14.

    Attributes:
        x (SexRational):
             The top (ridge) length.
        h (SexRational):
             The height.
        slope_x (SexRational):
             The drop per unit of horizontal run. The tablet's heap has slope 1, a 45° face.

    """

    x: SexRational
    h: SexRational
    slope_x: SexRational = Fraction(1)

    def __post_init__(self):
        _coerce(self, "x", "h", "slope_x")
        _require_nonnegative(self, "x")
        _require_positive(self, "h")
        if self.slope_x <= 0:
            raise ValueError(f"GrainHeap.slope_x must be positive, got {self.slope_x}")


class RotationKind(str, Enum):
    sphere = "sphere"
    cylinder = "cylinder"
    cone = "cone"


@dataclasses.dataclass(frozen=True)
class RotationSolid:
    """A solid of rotation. The height is ignored for a sphere."""

    kind: RotationKind
    r: SexRational
    h: SexRational = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "kind", RotationKind(self.kind))
        _coerce(self, "r", "h")
        _require_positive(self, "r", "h")


@dataclasses.dataclass(frozen=True)
class Slope:
    """An inclination of `x` kùš run per kùš of depth; `tan α = 1/x`."""

    x: SexRational

    def __post_init__(self):
        _coerce(self, "x")
        _require_positive(self, "x")


Solid = typing.Union[
    Cuboid,
    PrismSpec,
    PyramidSpec,
    SquareFrustum,
    NgonFrustum,
    TruncatedTriangularPrism,
    GrainHeap,
    RotationSolid,
]
