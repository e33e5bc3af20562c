"""

The `quantity` module attaches catalog units to exact values and converts between them.

### Conversions

`convert` scales a value by the quotient of the two unit ratios, so 14,24 volume-sar is 14,24 × 0;5 = 1,12 nindan³ and 1 nindan is 12 kùš. Conversions never leave a dimension.

### Capacity

Grain volume becomes capacity through a *storage constant*, sìla per volume-sar. The canonical constant is 5,0,0, but SMT No. 14 uses 8,0,0; both are exposed, and the tablet's is the default because the bundled replays depend on it. `decompose_capacity` then splits sìla greedily into gur₇, gur and sìla, so 1,55,12,0,0 sìla is 23 gur₇ and 2,24 gur.

### Notation

`format_clumsy` reproduces the editorial reading of lengths, e.g. `3 (nindan, that is, 6) gi`.
"""
import typing
from fractions import Fraction

from susa.log import create_logger
from susa.metrology.units import (
    GUR,
    GUR7,
    NINDAN,
    SILA,
    VOLUME_SAR,
    Dimension,
    Unit,
    unit_of,
)
from susa.sexagesimal import SexRational, as_sex, format_sex, parse_sex

__all__ = (
    "Quantity",
    "CapacityBreakdown",
    "DimensionError",
    "TABLET_STORAGE_CONSTANT",
    "CANONICAL_STORAGE_CONSTANT",
    "convert",
    "capacity_from_volume",
    "decompose_capacity",
    "recompose_capacity",
    "format_quantity",
    "format_breakdown",
    "format_clumsy",
    "parse_quantity",
    "quantity_to_json",
    "quantity_from_json",
    "breakdown_to_json",
)

logger = create_logger("Metrology")

TABLET_STORAGE_CONSTANT: SexRational = Fraction(28_800)
CANONICAL_STORAGE_CONSTANT: SexRational = Fraction(18_000)


class DimensionError(ValueError):
    """Raised when units of different dimensions are mixed."""


class Quantity(typing.NamedTuple):
    """
    An exact value tagged with a catalog unit.

    Attributes:
        value (SexRational):
             The magnitude.
        unit (Unit):
             The unit the magnitude is counted in.

    """

    value: SexRational
    unit: Unit

    @classmethod
    def of(cls, value: typing.Union[int, str, SexRational], unit: typing.Union[str, Unit]) -> "Quantity":
        return cls(as_sex(value), unit_of(unit))

    @property
    def dimension(self) -> Dimension:
        return self.unit.dimension

    def __str__(self):
        return format_quantity(self)


class CapacityBreakdown(typing.NamedTuple):
    """
    A capacity split into gur₇, gur and sìla.

    Attributes:
        gur7 (int):
             Whole gur₇.
        gur (int):
             Whole gur below one gur₇, so fewer than 3600.
        sila (SexRational):
             The remaining sìla, fewer than 300.

    """

    gur7: int
    gur: int
    sila: SexRational

    def __str__(self):
        return format_breakdown(self)


def convert(q: Quantity, target: typing.Union[str, Unit]) -> Quantity:
    """
    Converts a quantity to another unit of the same dimension.

    Args:
        q (Quantity):
             The quantity to convert.
        target (str | Unit):
             The unit to convert to.

    Returns:
        Quantity:
             The exact converted quantity.

    Raises:
        DimensionError:
             If the units measure different things.

    """
    target = unit_of(target)
    if q.unit.dimension is not target.dimension:
        raise DimensionError(
            f"Cannot convert {q.unit.symbol} ({q.unit.dimension.value}) to {target.symbol} ({target.dimension.value})"
        )
    return Quantity(q.value * q.unit.ratio_to_base / target.ratio_to_base, target)


def capacity_from_volume(
    v: Quantity, storage_constant: SexRational = TABLET_STORAGE_CONSTANT
) -> Quantity:
    """
    Converts a grain volume to sìla with a storage constant.

    Args:
        v (Quantity):
             A volume in any volume unit.
        storage_constant (SexRational):
             sìla per volume-sar. Defaults to the 8,0,0 of SMT No. 14.

    Returns:
        Quantity:
             The capacity in sìla.

    Raises:
        ValueError:
             If the storage constant is not positive.
        DimensionError:
             If `v` is not a volume.

    """
    storage_constant = as_sex(storage_constant)
    if storage_constant <= 0:
        raise ValueError(f"Storage constant must be positive, got {storage_constant}")
    volume_sar = convert(v, VOLUME_SAR).value
    if storage_constant != CANONICAL_STORAGE_CONSTANT:
        logger.debug(
            f"Storing {format_sex(volume_sar)} volume-sar at {format_sex(storage_constant)} sìla per volume-sar, not the canonical {format_sex(CANONICAL_STORAGE_CONSTANT)}"
        )
    return Quantity(volume_sar * storage_constant, SILA)


def decompose_capacity(q: Quantity) -> CapacityBreakdown:
    """
    Splits a capacity greedily, largest unit first.

    Args:
        q (Quantity):
             A nonnegative capacity.

    Returns:
        CapacityBreakdown:
             Its gur₇, gur and sìla parts.

    Raises:
        ValueError:
             If the capacity is negative.
        DimensionError:
             If `q` is not a capacity.

    """
    sila = convert(q, SILA).value
    if sila < 0:
        raise ValueError(f"Cannot decompose a negative capacity ({format_sex(sila)} sìla)")
    gur7, remainder = divmod(sila, GUR7.ratio_to_base)
    gur, remainder = divmod(remainder, GUR.ratio_to_base)
    return CapacityBreakdown(int(gur7), int(gur), Fraction(remainder))


def recompose_capacity(b: CapacityBreakdown) -> Quantity:
    return Quantity(
        b.gur7 * GUR7.ratio_to_base + b.gur * GUR.ratio_to_base + b.sila, SILA
    )


def format_quantity(q: Quantity) -> str:
    return f"{format_sex(q.value)} {q.unit.symbol}"


def format_breakdown(b: CapacityBreakdown) -> str:
    parts = [
        f"{format_sex(value)} {unit.symbol}"
        for value, unit in ((b.gur7, GUR7), (b.gur, GUR), (b.sila, SILA))
        if value
    ]
    return " ".join(parts) or f"0 {SILA.symbol}"


def format_clumsy(q: Quantity, subunit: typing.Union[str, Unit]) -> str:
    """
    Renders a length the way the translations read it, e.g. `3 (nindan, that is, 6) gi`.

    Args:
        q (Quantity):
             A length.
        subunit (str | Unit):
             `gi` or `kus`.

    Returns:
        str:
             The annotated length.

    Raises:
        DimensionError:
             If `q` is not a length or the subunit is not a subunit of the nindan.

    """
    subunit = unit_of(subunit)
    if subunit.dimension is not Dimension.length or subunit.ratio_to_base >= 1:
        raise DimensionError(f"{subunit.symbol} is not a length subunit of the nindan")
    nindan = convert(q, NINDAN)
    counted = convert(q, subunit)
    return f"{format_sex(nindan.value)} (nindan, that is, {format_sex(counted.value)}) {subunit.symbol}"


def parse_quantity(
    text: str, default_unit: typing.Optional[typing.Union[str, Unit]] = None
) -> Quantity:
    """
    Parses text such as `14,24 sar` or `1 nindan` into a quantity.

    Args:
        text (str):
             A numeral optionally followed by a unit name.
        default_unit (str | Unit, optional):
             The unit to use when the text carries none.

    Returns:
        Quantity:
             The parsed quantity.

    Raises:
        ValueError:
             If no unit is given and there is no default.

    """
    numeral, _, name = text.strip().partition(" ")
    name = name.strip()
    if not name:
        if default_unit is None:
            raise ValueError(f"Quantity {text!r} has no unit")
        return Quantity(parse_sex(numeral), unit_of(default_unit))
    return Quantity(parse_sex(numeral), unit_of(name))


def _numeral_pair(value: SexRational) -> dict[str, str]:
    return {"value": format_sex(value), "decimal": str(Fraction(value))}


def quantity_to_json(q: Quantity) -> dict[str, str]:
    return {**_numeral_pair(q.value), "unit": q.unit.name}


def quantity_from_json(data: dict[str, str]) -> Quantity:
    """Rebuilds a quantity, preferring the exact `decimal` field over the possibly truncated numeral."""
    if "decimal" in data:
        return Quantity(Fraction(data["decimal"]), unit_of(data["unit"]))
    return Quantity(parse_sex(data["value"]), unit_of(data["unit"]))


def breakdown_to_json(b: CapacityBreakdown) -> dict[str, typing.Any]:
    return {
        "gur7": b.gur7,
        "gur": b.gur,
        "sila": _numeral_pair(b.sila),
        "total": quantity_to_json(recompose_capacity(b)),
    }
