"""

The `numerals` module reads and writes base-60 numerals in the notation used by modern editions of cuneiform mathematics: comma separated digit words with a `;` standing in for the sexagesimal point, e.g. `1,12;15` for 1·60 + 12 + 15/60.

### Types

- `SexRational`: the exact value behind every numeral. It is `fractions.Fraction`, which is always stored reduced with a positive denominator and arbitrary precision integers.
- `SexDigits`: the digit expansion of a value, produced by base-60 long division.
- `FormatMode`: `absolute` keeps the point, `floating` drops it the way the tablets do.

### Functions

- `parse_sex`: text to `SexRational`, raising `NumeralSyntaxError` with the 1-based column of the first offending character.
- `to_digits`: long division of a value into integer and fraction places.
- `format_sex`: a value to text. Expansions that do not terminate within `max_fraction_places` are cut and marked with a trailing `…`.

Floating text is never parsed; a point-free numeral is ambiguous up to a power of 60 and callers are expected to supply the point.
"""
import re
import typing
from enum import Enum
from fractions import Fraction

__all__ = (
    "SexRational",
    "SexDigits",
    "FormatMode",
    "NumeralSyntaxError",
    "parse_sex",
    "to_digits",
    "format_sex",
    "as_sex",
    "BASE",
    "DEFAULT_FRACTION_PLACES",
    "TRUNCATION_MARKER",
)

SexRational = Fraction

BASE = 60
DEFAULT_FRACTION_PLACES = 20
TRUNCATION_MARKER = "…"

DIGIT_PATTERN = re.compile(r"[0-9]+")


class NumeralSyntaxError(ValueError):
    """
    Raised when a sexagesimal numeral cannot be read.

    Attributes:
        text (str):
             The text that was being parsed.
        column (int):
             The 1-based column of the offending character.

    """

    def __init__(self, message: str, text: str, column: int):
        super().__init__(f"{message} at column {column}: {text!r}")
        self.text = text
        self.column = column


class FormatMode(str, Enum):
    absolute = "absolute"
    floating = "floating"


class SexDigits(typing.NamedTuple):
    """
    The base-60 expansion of a rational value.

    Attributes:
        sign (int):
             1 or -1. Zero has sign 1.
        integer_places (tuple[int, ...]):
             Integer digits, most significant first. A zero integer part is the single place `(0,)`.
        fraction_places (tuple[int, ...]):
             Fraction digits without trailing zero places.
        exact (bool):
             False when the expansion was cut short.

    """

    sign: int
    integer_places: tuple[int, ...]
    fraction_places: tuple[int, ...]
    exact: bool = True


def as_sex(value: typing.Union[int, str, Fraction]) -> SexRational:
    """Coerces an int, a `Fraction` or a numeral string to a `SexRational`."""
    if isinstance(value, str):
        return parse_sex(value)
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"Cannot use {value!r} as an exact sexagesimal value")


def _parse_group(text: str, start: int, end: int, source: str) -> list[int]:
    if start == end:
        raise NumeralSyntaxError("Missing digits", source, start + 1)
    digits = []
    position = start
    for word in text[start:end].split(","):
        match = DIGIT_PATTERN.fullmatch(word)
        if match is None:
            offset = next(
                (i for i, char in enumerate(word) if char not in "0123456789"), 0
            )
            if not word:
                raise NumeralSyntaxError("Empty digit word", source, position + 1)
            raise NumeralSyntaxError(
                f"Unexpected character {word[offset]!r}", source, position + offset + 1
            )
        digit = int(word)
        if digit >= BASE:
            raise NumeralSyntaxError(
                f"Digit word {digit} is not below {BASE}", source, position + 1
            )
        digits.append(digit)
        position += len(word) + 1
    return digits


def parse_sex(text: str) -> SexRational:
    """
    Parses a numeral such as `14,24`, `0;6,40` or `-1,12;15` into an exact value.

    Args:
        text (str):
             The numeral. Leading and trailing whitespace is ignored.

    Returns:
        SexRational:
             The exact value. Text without `;` is an integer.

    Raises:
        NumeralSyntaxError:
             If the text is empty, malformed or has a digit word of 60 or more.

    """
    stripped = text.strip()
    if not stripped:
        raise NumeralSyntaxError("Empty numeral", text, 1)
    lead = len(text) - len(text.lstrip())
    body = stripped
    sign = 1
    if body.startswith("-"):
        sign = -1
        body = body[1:]
        lead += 1
    source = " " * lead + body
    point = body.find(";")
    if body.count(";") > 1:
        raise NumeralSyntaxError(
            "More than one sexagesimal point", text, lead + body.rfind(";") + 1
        )
    integer_end = point if point >= 0 else len(body)
    integer_places = _parse_group(source, lead, lead + integer_end, text)
    fraction_places = (
        _parse_group(source, lead + point + 1, lead + len(body), text)
        if point >= 0
        else []
    )
    value = 0
    for digit in integer_places:
        value = value * BASE + digit
    fraction = Fraction(0)
    scale = Fraction(1)
    for digit in fraction_places:
        scale /= BASE
        fraction += digit * scale
    return sign * (value + fraction)


def to_digits(
    q: SexRational, max_fraction_places: int = DEFAULT_FRACTION_PLACES
) -> SexDigits:
    """
    Expands a value into base-60 places by long division.

    Args:
        q (SexRational):
             The value to expand.
        max_fraction_places (int):
             The most fraction places to produce before cutting the expansion.

    Returns:
        SexDigits:
             The expansion; `exact` is False if the remainder was not exhausted.

    """
    if max_fraction_places < 1:
        raise ValueError(f"max_fraction_places must be positive, got {max_fraction_places}")
    q = Fraction(q)
    sign = -1 if q < 0 else 1
    numerator, denominator = abs(q.numerator), q.denominator
    whole, remainder = divmod(numerator, denominator)
    integer_places = []
    while whole:
        whole, digit = divmod(whole, BASE)
        integer_places.append(digit)
    integer_places = tuple(reversed(integer_places)) or (0,)
    fraction_places = []
    while remainder and len(fraction_places) < max_fraction_places:
        digit, remainder = divmod(remainder * BASE, denominator)
        fraction_places.append(digit)
    while fraction_places and fraction_places[-1] == 0:
        fraction_places.pop()
    return SexDigits(sign, integer_places, tuple(fraction_places), remainder == 0)


def _words(places: typing.Iterable[int]) -> str:
    return ",".join(str(place) for place in places)


def format_sex(
    q: SexRational,
    mode: typing.Union[FormatMode, str] = FormatMode.absolute,
    max_fraction_places: int = DEFAULT_FRACTION_PLACES,
) -> str:
    """
    Renders a value as a sexagesimal numeral.

    In `absolute` mode the point is written as `;` (72 renders `1,12`, 289/4 renders `1,12;15`).
    In `floating` mode the point is dropped together with leading and terminal zero words, so 1/9 renders `6,40` and 24,883,200 renders `1,55,12`.

    Args:
        q (SexRational):
             The value to render.
        mode (FormatMode):
             `absolute` or `floating`.
        max_fraction_places (int):
             Cut-off for non-terminating expansions.

    Returns:
        str:
             The numeral, ending in `…` when the expansion was cut.

    """
    mode = FormatMode(mode)
    digits = to_digits(q, max_fraction_places)
    sign = "-" if digits.sign < 0 else ""
    marker = "" if digits.exact else TRUNCATION_MARKER
    if mode is FormatMode.absolute:
        text = _words(digits.integer_places)
        if digits.fraction_places:
            text = f"{text};{_words(digits.fraction_places)}"
        return f"{sign}{text}{marker}"
    places = list(digits.integer_places + digits.fraction_places)
    while places and places[0] == 0:
        places.pop(0)
    while places and places[-1] == 0:
        places.pop()
    if not places:
        return f"0{marker}"
    return f"{sign}{_words(places)}{marker}"
