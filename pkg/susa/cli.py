"""

The `cli` module is the `susa` command.

```
susa sexa eval "14,24 * 0;5"                 # 1,12
susa sexa recip 9                            # 0;6,40
susa sexa regular 7                          # irregular (7)
susa convert "14,24 sar" nindan3             # 1,12 nindan³
susa convert "1,55,12,0,0 sila" --breakdown  # 23 gur₇ 2,24 gur
susa volume grainheap --x 4 --h 3 --unit sar # 14,24 volume-sar
susa replay SMT14-P1                         # trace, exit 0 with a warning banner
susa catalog platonic
```

Every subcommand accepts `--json`. Exit codes: 0 on success, including a replay whose only deviations are annotated scribal errors; 1 on a mismatch, an annotated error under `--strict` or an oracle disagreement; 2 on usage or input errors.
"""
import argparse
import json
import logging
import sys
import typing
from fractions import Fraction

import sympy

from susa.log import create_logger, set_level
from susa.metrology import (
    CATALOG,
    NINDAN,
    NINDAN3,
    TABLET_STORAGE_CONSTANT,
    Dimension,
    base_unit_of,
    breakdown_to_json,
    capacity_from_volume,
    convert,
    decompose_capacity,
    format_breakdown,
    format_quantity,
    parse_quantity,
    quantity_to_json,
    unit_of,
)
from susa.sexagesimal import (
    FormatMode,
    evaluate,
    format_sex,
    parse_sex,
    reciprocal,
    regular_factors,
)
from susa.solids import (
    PLATONIC_SOLIDS,
    SOLID_KINDS,
    FrustumFormula,
    cross_section_profile,
    euler_characteristic,
    height_of,
    platonic,
    slab_volume_oracle,
    solid_from_json,
    solid_to_json,
    volume_of,
)
from susa.solids.approximate import DEFAULT_PRECISION
from susa.tablet_vm import (
    Cursor,
    ScriptRuntimeError,
    list_bundled,
    load_script,
    run,
    verify,
)

__all__ = ("create_parser", "main")

logger = create_logger("CLI")

DEFAULT_SLABS = 1000
DEFAULT_TOLERANCE = 1e-9

LENGTH_PARAMETERS = ("a", "b", "c", "h", "x", "x1", "x2", "y", "r")

PARAMETERS: dict[str, tuple[str, ...]] = {
    "cuboid": ("a", "b", "c"),
    "prism": ("base_area", "h"),
    "pyramid": ("base_area", "h"),
    "frustum": ("a", "b", "h"),
    "ngon-frustum": ("n", "a", "b", "h"),
    "truncated-prism": ("x", "x1", "x2", "y", "h"),
    "grainheap": ("x", "h", "slope_x"),
    "rotation": ("kind", "r", "h"),
}

FLAGS = {"base_area": "--base-area", "slope_x": "--slope", "kind": "--solid"}


def _emit(data: typing.Any) -> None:
    print(json.dumps(data, indent=2, ensure_ascii=False))


def _numeral_json(value) -> dict[str, str]:
    return {
        "absolute": format_sex(value),
        "floating": format_sex(value, FormatMode.floating),
        "decimal": str(Fraction(value)),
    }


def _add_json_flag(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--json", action="store_true", help="Print JSON instead of text")


def _setup_sexa_parser(subparsers) -> None:
    sexa_parser = subparsers.add_parser("sexa", help="Sexagesimal arithmetic")
    actions = sexa_parser.add_subparsers(dest="action", required=True)
    eval_parser = actions.add_parser("eval", help="Evaluate an expression such as '14,24 * 0;5'")
    eval_parser.add_argument("expression")
    recip_parser = actions.add_parser("recip", help="Make the reciprocal of a numeral")
    recip_parser.add_argument("numeral")
    regular_parser = actions.add_parser("regular", help="Test whether an integer is regular")
    regular_parser.add_argument("numeral")
    for action_parser in (eval_parser, recip_parser, regular_parser):
        _add_json_flag(action_parser)


def _setup_convert_parser(subparsers) -> None:
    convert_parser = subparsers.add_parser("convert", help="Convert a quantity between units")
    convert_parser.add_argument("value", help="A numeral and a unit, e.g. '14,24 sar'")
    convert_parser.add_argument("target", nargs="?", help="The unit to convert to")
    convert_parser.add_argument(
        "--breakdown", action="store_true", help="Split a capacity into gur₇, gur and sìla"
    )
    convert_parser.add_argument(
        "--storage",
        default=format_sex(TABLET_STORAGE_CONSTANT),
        help="sìla per volume-sar used when a volume is broken down (default: %(default)s)",
    )
    _add_json_flag(convert_parser)


def _setup_volume_parser(subparsers) -> None:
    volume_parser = subparsers.add_parser("volume", help="Evaluate a volume rule")
    volume_parser.add_argument("kind", nargs="?", choices=tuple(SOLID_KINDS), help="The solid")
    volume_parser.add_argument(
        "--descriptor", help="A JSON descriptor such as '{\"kind\": \"cuboid\", \"a\": \"1\", ...}'"
    )
    for name in LENGTH_PARAMETERS:
        volume_parser.add_argument(f"--{name}", help="A length; nindan unless a unit is given")
    volume_parser.add_argument("--base-area", dest="base_area", help="Base area in square nindan")
    volume_parser.add_argument("--n", type=int, help="Number of sides of an ngon frustum")
    volume_parser.add_argument("--slope", dest="slope_x", help="Heap face drop per unit of horizontal run; 1 is a 45° face")
    volume_parser.add_argument(
        "--solid", dest="solid_kind", choices=("sphere", "cylinder", "cone"), help="Rotation solid"
    )
    volume_parser.add_argument(
        "--formula",
        choices=tuple(formula.value for formula in FrustumFormula),
        default=FrustumFormula.babylonian.value,
        help="Frustum rule (default: %(default)s)",
    )
    volume_parser.add_argument("--unit", default=NINDAN3.name, help="Volume unit (default: %(default)s)")
    volume_parser.add_argument(
        "--precision", type=int, default=DEFAULT_PRECISION, help="Digits for rules involving π"
    )
    volume_parser.add_argument("--oracle", action="store_true", help="Cross-check by slab integration")
    volume_parser.add_argument("--slabs", type=int, default=DEFAULT_SLABS)
    volume_parser.add_argument("--tolerance", type=float, default=DEFAULT_TOLERANCE)
    _add_json_flag(volume_parser)


def _setup_replay_parser(subparsers) -> None:
    replay_parser = subparsers.add_parser("replay", help="Replay a tablet procedure")
    replay_parser.add_argument("script", help="A bundled script name or a script file")
    replay_parser.add_argument(
        "--strict", action="store_true", help="Exit 1 on annotated scribal errors as well"
    )
    _add_json_flag(replay_parser)


def _setup_catalog_parser(subparsers) -> None:
    catalog_parser = subparsers.add_parser("catalog", help="Print a reference table")
    catalog_parser.add_argument("catalog", choices=("platonic", "units", "scripts"))
    _add_json_flag(catalog_parser)


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="susa",
        description="Exact sexagesimal arithmetic, Old Babylonian metrology, solid volumes and tablet replay",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="Log more (-v info, -vv debug)"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    _setup_sexa_parser(subparsers)
    _setup_convert_parser(subparsers)
    _setup_volume_parser(subparsers)
    _setup_replay_parser(subparsers)
    _setup_catalog_parser(subparsers)
    return parser


def cmd_sexa(args: argparse.Namespace) -> int:
    if args.action == "regular":
        value = parse_sex(args.numeral)
        if value.denominator != 1 or value < 1:
            raise ValueError(f"Regularity is defined for positive integers, got {args.numeral}")
        factors = regular_factors(int(value))
        if factors.regular:
            verdict = f"regular ({factors})"
        else:
            shown = [str(factors)] if str(factors) != "1" else []
            verdict = f"irregular ({'·'.join(shown + [str(factors.residue)])})"
        if args.json:
            _emit(
                {
                    **_numeral_json(value),
                    "regular": factors.regular,
                    "factors": {"2": factors.twos, "3": factors.threes, "5": factors.fives},
                    "residue": factors.residue,
                }
            )
        else:
            print(verdict)
        return 0
    if args.action == "recip":
        result = reciprocal(parse_sex(args.numeral))
    else:
        result = evaluate(args.expression)
    if args.json:
        _emit(_numeral_json(result))
    else:
        print(format_sex(result))
        print(f"floating: {format_sex(result, FormatMode.floating)}")
        print(f"decimal: {Fraction(result)}")
    return 0


def cmd_convert(args: argparse.Namespace) -> int:
    quantity = parse_quantity(args.value)
    if args.breakdown:
        if quantity.dimension is Dimension.volume:
            quantity = capacity_from_volume(quantity, parse_sex(args.storage))
        breakdown = decompose_capacity(quantity)
        if args.json:
            _emit({"input": quantity_to_json(quantity), "breakdown": breakdown_to_json(breakdown)})
        else:
            print(format_breakdown(breakdown))
        return 0
    if args.target is None:
        raise ValueError("convert needs a target unit or --breakdown")
    result = convert(quantity, args.target)
    if args.json:
        _emit({"input": quantity_to_json(quantity), "result": quantity_to_json(result)})
    else:
        print(format_quantity(result))
        print(f"decimal: {Fraction(result.value)} {result.unit.symbol}")
    return 0


def _flag(name: str) -> str:
    return FLAGS.get(name, f"--{name}")


def _length(text: str):
    return convert(parse_quantity(text, default_unit=NINDAN), NINDAN).value


def _solid_from_flags(args: argparse.Namespace):
    if args.descriptor is not None:
        if args.kind is not None:
            raise ValueError("Give either a solid kind or --descriptor, not both")
        return solid_from_json(json.loads(args.descriptor))
    if args.kind is None:
        raise ValueError("volume needs a solid kind or --descriptor")
    wanted = PARAMETERS[args.kind]
    given = {
        name
        for name in (*LENGTH_PARAMETERS, "base_area", "n", "slope_x")
        if getattr(args, name) is not None
    }
    if args.solid_kind is not None:
        given.add("kind")
    unexpected = given - set(wanted)
    if unexpected:
        flags = ", ".join(_flag(name) for name in sorted(unexpected))
        raise ValueError(f"{args.kind} does not take {flags}")
    arguments: dict[str, typing.Any] = {}
    for name in wanted:
        value = args.solid_kind if name == "kind" else getattr(args, name)
        if value is None:
            if name == "slope_x" or (name == "h" and args.solid_kind == "sphere"):
                continue
            raise ValueError(f"{args.kind} needs {_flag(name)}")
        if name in LENGTH_PARAMETERS:
            value = _length(value)
        elif name in ("base_area", "slope_x"):
            value = parse_sex(value)
        arguments[name] = value
    return SOLID_KINDS[args.kind](**arguments)


def _scale(value, unit) -> typing.Any:
    ratio = NINDAN3.ratio_to_base / unit.ratio_to_base
    if isinstance(value, Fraction):
        return value * ratio
    return value * sympy.Rational(ratio.numerator, ratio.denominator)


def cmd_volume(args: argparse.Namespace) -> int:
    solid = _solid_from_flags(args)
    unit = unit_of(args.unit)
    if unit.dimension is not Dimension.volume:
        raise ValueError(f"{unit.symbol} is not a volume unit")
    closed = volume_of(solid, args.formula, args.precision)
    shown = _scale(closed, unit)
    exact = isinstance(shown, Fraction)
    line = f"{format_sex(shown) if exact else shown} {unit.symbol}"
    data: dict[str, typing.Any] = {
        "solid": solid_to_json(solid),
        "unit": unit.name,
        "exact": exact,
        "volume": _numeral_json(shown) if exact else {"approximate": str(shown)},
    }
    status = 0
    oracle_line = None
    if args.oracle:
        estimate = slab_volume_oracle(cross_section_profile(solid), height_of(solid), args.slabs)
        reference = float(closed)
        agrees = abs(estimate - reference) <= args.tolerance * max(1.0, abs(reference))
        estimate_shown = float(_scale(Fraction(estimate), unit))
        data["oracle"] = {
            "estimate": estimate_shown,
            "slabs": args.slabs,
            "tolerance": args.tolerance,
            "agrees": agrees,
        }
        verdict = "agrees" if agrees else "DISAGREES"
        oracle_line = f"oracle: {estimate_shown!r} {unit.symbol} over {args.slabs} slabs {verdict} within {args.tolerance:g}"
        if not agrees:
            logger.error(f"Slab integration gives {estimate}, the closed form {reference}")
            status = 1
    if args.json:
        _emit(data)
    else:
        print(line)
        if oracle_line:
            print(oracle_line)
    return status


def cmd_replay(args: argparse.Namespace) -> int:
    report = verify(run(load_script(args.script)))
    if args.json:
        _emit(report.to_json())
    else:
        print(report.to_text())
    return report.exit_code(args.strict)


def cmd_catalog(args: argparse.Namespace) -> int:
    cursor = Cursor()
    if args.catalog == "platonic":
        rows = []
        for name in PLATONIC_SOLIDS:
            mesh = platonic(name)
            v, e, f = mesh.counts
            rows.append({"name": name, "v": v, "e": e, "f": f, "euler": euler_characteristic(mesh)})
        header = ["name", "V", "E", "F", "V-E+F"]
        keys = ["name", "v", "e", "f", "euler"]
    elif args.catalog == "units":
        rows = [
            {
                "name": unit.name,
                "symbol": unit.symbol,
                "dimension": unit.dimension.value,
                "ratio": f"{unit.ratio_to_base} {base_unit_of(unit.dimension).symbol}",
            }
            for unit in CATALOG.values()
        ]
        header = ["name", "symbol", "dimension", "ratio"]
        keys = header
    else:
        rows = [bundled._asdict() for bundled in list_bundled()]
        for row in rows:
            row["citations"] = list(row["citations"])
        header = ["name", "tablet", "lines", "description"]
        keys = header
    if args.json:
        _emit(rows)
        return 0
    cursor.table([header] + [[str(row[key]) for key in keys] for row in rows])
    print(cursor)
    return 0


COMMANDS: dict[str, typing.Callable[[argparse.Namespace], int]] = {
    "sexa": cmd_sexa,
    "convert": cmd_convert,
    "volume": cmd_volume,
    "replay": cmd_replay,
    "catalog": cmd_catalog,
}


def main(argv: typing.Optional[list[str]] = None) -> int:
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as error:
        code = error.code
        return code if isinstance(code, int) else (0 if code is None else 2)
    if args.verbose:
        set_level(logging.DEBUG if args.verbose > 1 else logging.INFO)
    try:
        return COMMANDS[args.command](args)
    except (ValueError, KeyError, ZeroDivisionError, ScriptRuntimeError, OSError) as error:
        print(f"error: {error}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
