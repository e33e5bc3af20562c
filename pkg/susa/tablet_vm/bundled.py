"""

The `bundled` module ships the tablet procedures that come with the package:

| name          | tablet     | lines            |
|---------------|------------|------------------|
| `SMT14-P1`    | SMT No. 14 | Obv. L1-L17      |
| `SMT14-P2`    | SMT No. 14 | Rev. L2-L7       |
| `BM85194-R41` | BM 85194   | Rev. II L41-L49  |

Scripts are stored as `.tab` files next to this module and read with `importlib.resources`.
"""
import functools
import importlib.resources
import pathlib
import typing

from susa.tablet_vm.elements import Script
from susa.tablet_vm.parser import parse_script

__all__ = ("BundledScript", "list_bundled", "load_bundled", "load_script")

SCRIPT_SUFFIX = ".tab"


class BundledScript(typing.NamedTuple):
    """
    A bundled procedure and its provenance.

    Attributes:
        name (str):
             The name scripts are looked up by.
        tablet (str):
             The tablet the procedure comes from.
        lines (str):
             The range of tablet lines it covers.
        description (str):
             What the procedure computes.
        citations (tuple[str, ...]):
             The source line of every step, in order.

    """

    name: str
    tablet: str
    lines: str
    description: str
    citations: tuple[str, ...]


def _resources() -> list:
    folder = importlib.resources.files("susa.tablet_vm") / "scripts"
    return sorted(
        (entry for entry in folder.iterdir() if entry.name.endswith(SCRIPT_SUFFIX)),
        key=lambda entry: entry.name,
    )


@functools.cache
def _bundled() -> dict[str, Script]:
    scripts = {}
    for resource in _resources():
        script = parse_script(resource.read_text(encoding="utf-8"), name=resource.name[: -len(SCRIPT_SUFFIX)])
        scripts[script.name.upper()] = script
    return scripts


def list_bundled() -> list[BundledScript]:
    """Lists the bundled procedures with their provenance."""
    return [
        BundledScript(
            name=script.name,
            tablet=script.metadata.get("tablet", ""),
            lines=script.metadata.get("lines", ""),
            description=script.metadata.get("description", ""),
            citations=tuple(step.source_line for step in script.steps),
        )
        for script in _bundled().values()
    ]


def load_bundled(name: str) -> Script:
    """
    Loads a bundled procedure by name, ignoring case.

    Raises:
        KeyError:
             If no bundled procedure has that name.

    """
    try:
        return _bundled()[name.upper()]
    except KeyError:
        known = ", ".join(script.name for script in _bundled().values())
        raise KeyError(f"No bundled script named {name!r}; bundled scripts are {known}") from None


def load_script(source: typing.Union[str, pathlib.Path]) -> Script:
    """
    Loads a procedure from a bundled name or a file path.

    A name that matches a bundled procedure wins over a file of the same name.

    Raises:
        FileNotFoundError:
             If `source` is neither a bundled name nor a readable file.
        ScriptSyntaxError:
             If the file does not parse.

    """
    if str(source).upper() in _bundled():
        return _bundled()[str(source).upper()]
    path = pathlib.Path(source)
    if not path.is_file():
        raise FileNotFoundError(f"{source} is neither a bundled script nor a file")
    return parse_script(path.read_text(encoding="utf-8"), name=path.stem)
