"""

The `codec` module moves solid descriptors to and from their canonical JSON shape, `{"kind": ..., <param>: <numeral>, ...}`, where every exact parameter is an absolute sexagesimal numeral string, or a `p/q` fraction when its base-60 expansion does not terminate. It also hosts `volume_of`, which dispatches a descriptor to its volume rule.

| kind              | descriptor                 | parameters            |
|-------------------|----------------------------|-----------------------|
| `cuboid`          | `Cuboid`                   | a, b, c               |
| `prism`           | `PrismSpec`                | base_area, h          |
| `pyramid`         | `PyramidSpec`              | base_area, h          |
| `frustum`         | `SquareFrustum`            | a, b, h               |
| `ngon-frustum`    | `NgonFrustum`              | n (integer), a, b, h  |
| `truncated-prism` | `TruncatedTriangularPrism` | x, x1, x2, y, h       |
| `grainheap`       | `GrainHeap`                | x, h, slope_x         |
| `rotation`        | `RotationSolid`            | solid, r, h           |
"""
import dataclasses
import typing
from enum import Enum
from fractions import Fraction

from susa.sexagesimal import format_sex, is_finite_sexagesimal, parse_sex
from susa.solids import approximate, functional
from susa.solids.elements import (
    Cuboid,
    GrainHeap,
    NgonFrustum,
    PrismSpec,
    PyramidSpec,
    RotationSolid,
    Solid,
    SquareFrustum,
    TruncatedTriangularPrism,
)

__all__ = ("FrustumFormula", "SOLID_KINDS", "solid_to_json", "solid_from_json", "volume_of")

SOLID_KINDS: dict[str, type] = {
    "cuboid": Cuboid,
    "prism": PrismSpec,
    "pyramid": PyramidSpec,
    "frustum": SquareFrustum,
    "ngon-frustum": NgonFrustum,
    "truncated-prism": TruncatedTriangularPrism,
    "grainheap": GrainHeap,
    "rotation": RotationSolid,
}

KIND_OF: dict[type, str] = {solid_type: kind for kind, solid_type in SOLID_KINDS.items()}


class FrustumFormula(str, Enum):
    babylonian = "babylonian"
    egyptian = "egyptian"


def solid_to_json(solid: Solid) -> dict[str, typing.Any]:
    data: dict[str, typing.Any] = {"kind": KIND_OF[type(solid)]}
    for field in dataclasses.fields(solid):
        value = getattr(solid, field.name)
        if field.name == "kind":
            data["solid"] = value.value
        elif field.name == "n":
            data["n"] = value
        else:
            data[field.name] = _encode_exact(value)
    return data


def _encode_exact(value: Fraction) -> str:
    if is_finite_sexagesimal(value):
        return format_sex(value)
    return str(value)


def _decode_exact(kind: str, name: str, value: typing.Any) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise ValueError(
            f"{kind}.{name} must be a numeral string or an integer, got {type(value).__name__} {value!r}"
        )
    if isinstance(value, int):
        return Fraction(value)
    if "/" in value:
        try:
            return Fraction(value)
        except (ValueError, ZeroDivisionError) as error:
            raise ValueError(f"{kind}.{name}: {value!r} is not an exact fraction") from error
    return parse_sex(value)


def solid_from_json(data: typing.Mapping[str, typing.Any]) -> Solid:
    """
    Builds a descriptor from its JSON shape.

    Raises:
        ValueError:
             If the kind is unknown, a parameter is missing or unexpected, or the descriptor is invalid.

    """
    kind = data.get("kind")
    if kind not in SOLID_KINDS:
        raise ValueError(f"Unknown solid kind {kind!r}; expected one of {', '.join(SOLID_KINDS)}")
    solid_type = SOLID_KINDS[kind]
    names = {field.name for field in dataclasses.fields(solid_type)}
    params = {key: value for key, value in data.items() if key != "kind"}
    if "solid" in params:
        params["kind"] = params.pop("solid")
    unexpected = set(params) - names
    if unexpected:
        raise ValueError(f"Unexpected parameters for {kind}: {', '.join(sorted(unexpected))}")
    arguments = {}
    for name, value in params.items():
        if name == "n":
            arguments[name] = int(value)
        elif name == "kind":
            arguments[name] = value
        else:
            arguments[name] = _decode_exact(kind, name, value)
    try:
        return solid_type(**arguments)
    except TypeError as error:
        raise ValueError(f"Incomplete {kind} descriptor: {error}") from error


def volume_of(
    solid: Solid,
    formula: typing.Union[FrustumFormula, str] = FrustumFormula.babylonian,
    precision: int = approximate.DEFAULT_PRECISION,
):
    """
    Evaluates the volume rule for a descriptor.

    Args:
        solid (Solid):
             The descriptor.
        formula (FrustumFormula):
             Which rule to apply to a `SquareFrustum`; both give the same exact value.
        precision (int):
             Significant digits for rules involving π or radicals.

    Returns:
        SexRational | sympy.Float:
             Exact for rational rules, approximate otherwise.

    """
    match solid:
        case Cuboid():
            return functional.volume_cuboid(solid)
        case PrismSpec():
            return functional.volume_prism(solid)
        case PyramidSpec():
            return functional.volume_pyramid(solid)
        case SquareFrustum():
            if FrustumFormula(formula) is FrustumFormula.egyptian:
                return functional.volume_frustum_egyptian(solid)
            return functional.volume_frustum_babylonian(solid)
        case NgonFrustum():
            return approximate.volume_frustum_ngon(solid, precision)
        case TruncatedTriangularPrism():
            return functional.volume_truncated_prism(solid)
        case GrainHeap():
            if solid.slope_x == 1:
                return functional.volume_grain_heap(solid)
            return functional.volume_truncated_prism(
                functional.grain_heap_as_truncated_prism(solid)
            )
        case RotationSolid():
            return approximate.volume_rotation(solid, precision)
    raise TypeError(f"{type(solid).__name__} is not a solid descriptor")
