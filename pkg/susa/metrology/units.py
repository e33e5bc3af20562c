"""

The `units` module defines the closed catalog of Old Babylonian units that the tablets use.

| name      | symbol      | dimension | ratio to base |
|-----------|-------------|-----------|---------------|
| `nindan`  | nindan      | length    | 1             |
| `gi`      | gi          | length    | 0;30          |
| `kus`     | kùš         | length    | 0;5           |
| `nindan3` | nindan³     | volume    | 1             |
| `sar`     | volume-sar  | volume    | 0;5           |
| `sila`    | sìla        | capacity  | 1             |
| `gur`     | gur         | capacity  | 5,0           |
| `gur7`    | gur₇        | capacity  | 5,0,0,0       |

A volume-sar is a slab of 1 nindan² by 1 kùš, hence 1/12 nindan³. Modern equivalents (a nindan is about 6 m, a kùš about 50 cm, a sìla about a litre) are documentation only and never enter a computation.
"""
import typing
from enum import Enum
from fractions import Fraction

from susa.sexagesimal import SexRational

__all__ = (
    "Dimension",
    "Unit",
    "UnknownUnitError",
    "CATALOG",
    "NINDAN",
    "GI",
    "KUS",
    "NINDAN3",
    "VOLUME_SAR",
    "SILA",
    "GUR",
    "GUR7",
    "unit_of",
    "units_of",
    "base_unit_of",
)


class Dimension(str, Enum):
    length = "length"
    volume = "volume"
    capacity = "capacity"


class UnknownUnitError(KeyError, ValueError):
    """Raised when a name is not in the unit catalog."""

    def __str__(self):
        return str(self.args[0]) if self.args else ""


class Unit(typing.NamedTuple):
    """
    A catalog unit.

    Attributes:
        name (str):
             The ASCII name accepted on input, e.g. `kus`.
        symbol (str):
             The transliterated form used on output, e.g. `kùš`.
        dimension (Dimension):
             What the unit measures.
        ratio_to_base (SexRational):
             How many base units (nindan, nindan³ or sìla) one unit holds.

    """

    name: str
    symbol: str
    dimension: Dimension
    ratio_to_base: SexRational

    def __str__(self):
        return self.symbol


NINDAN = Unit("nindan", "nindan", Dimension.length, Fraction(1))
GI = Unit("gi", "gi", Dimension.length, Fraction(1, 2))
KUS = Unit("kus", "kùš", Dimension.length, Fraction(1, 12))
NINDAN3 = Unit("nindan3", "nindan³", Dimension.volume, Fraction(1))
VOLUME_SAR = Unit("sar", "volume-sar", Dimension.volume, Fraction(1, 12))
SILA = Unit("sila", "sìla", Dimension.capacity, Fraction(1))
GUR = Unit("gur", "gur", Dimension.capacity, Fraction(300))
GUR7 = Unit("gur7", "gur₇", Dimension.capacity, Fraction(1_080_000))

CATALOG: dict[str, Unit] = {
    unit.name: unit for unit in (NINDAN, GI, KUS, NINDAN3, VOLUME_SAR, SILA, GUR, GUR7)
}

ALIASES: dict[str, Unit] = {
    **CATALOG,
    **{unit.symbol: unit for unit in CATALOG.values()},
    "kuš": KUS,
    "volume_sar": VOLUME_SAR,
    "gur₇": GUR7,
}


def unit_of(name: typing.Union[str, Unit]) -> Unit:
    """
    Looks a unit up by its ASCII name or its printed symbol.

    Args:
        name (str | Unit):
             A name such as `kus`, `kùš`, `nindan3` or `sar`. A `Unit` is returned unchanged.

    Returns:
        Unit:
             The catalog unit.

    Raises:
        UnknownUnitError:
             If the name is not in the catalog.

    """
    if isinstance(name, Unit):
        return name
    try:
        return ALIASES[name.strip()]
    except KeyError:
        raise UnknownUnitError(
            f"Unknown unit {name!r}; expected one of {', '.join(CATALOG)}"
        ) from None


def is_unit_name(name: str) -> bool:
    return name in ALIASES


def units_of(dimension: Dimension) -> tuple[Unit, ...]:
    return tuple(unit for unit in CATALOG.values() if unit.dimension is dimension)


def base_unit_of(dimension: Dimension) -> Unit:
    return next(unit for unit in units_of(dimension) if unit.ratio_to_base == 1)
