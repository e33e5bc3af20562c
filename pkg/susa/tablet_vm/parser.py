"""

The `parser` module reads and writes the procedure language.

One step per line::

    <register> := <OPCODE> <operand> [<operand>] [=> <claim> [! error-for <corrected>]]  [# citation]

An operand is a register name or a numeral literal, optionally followed by a unit name (`14,24 sar`, `3 nindan`). The second operand of `CONVERT` and `DECOMPOSE` is a bare unit name. Text after `#` on a step line is the step's citation. A line starting with `#@ key: value` sets script metadata, and the keys `name` and `outputs` are understood by the parser; any other line starting with `#` is a comment.

Example:
    ```python
    from susa.tablet_vm import parse_script

    script = parse_script(
        '''
        #@ name: reciprocal
        t1 := RECIP 12 => 0;5  # Obv. L2-4
        '''
    )
    script.steps[0].tablet_claim  # Fraction(1, 12)
    ```
"""
import re
import typing

from susa.log import create_logger
from susa.metrology import is_unit_name, unit_of
from susa.sexagesimal import NumeralSyntaxError, format_sex, parse_sex
from susa.tablet_vm.elements import (
    Opcode,
    Operand,
    OperandKind,
    OutputSpec,
    Script,
    ScriptSyntaxError,
    Step,
)
from susa.tablet_vm.validator import validate_script

__all__ = ("parse_script", "format_script")

logger = create_logger("TabletVM")

REGISTER_PATTERN = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
NUMERAL_PATTERN = re.compile(r"-?[0-9][0-9,;]*")
METADATA_PATTERN = re.compile(r"#@\s*(?P<key>[A-Za-z_]+)\s*:\s*(?P<value>.*)")
CORRECTION_KEYWORD = "error-for"


def _numeral(text: str, line: int, what: str):
    try:
        return parse_sex(text)
    except NumeralSyntaxError as error:
        raise ScriptSyntaxError(f"invalid {what} {text!r}: {error}", line) from error


def _operands(opcode: Opcode, tokens: list[str], line: int) -> tuple[Operand, ...]:
    operands: list[Operand] = []
    for token in tokens:
        if NUMERAL_PATTERN.fullmatch(token):
            operands.append(Operand.of_literal(_numeral(token, line, "numeral")))
            continue
        previous = operands[-1] if operands else None
        if (
            previous is not None
            and previous.kind is OperandKind.literal
            and previous.unit is None
            and is_unit_name(token)
            and len(operands) - 1 != opcode.unit_position
        ):
            operands[-1] = Operand.of_literal(previous.value, unit_of(token))
        elif len(operands) == opcode.unit_position:
            if not is_unit_name(token):
                raise ScriptSyntaxError(f"{opcode.value} expects a unit name, got {token!r}", line)
            operands.append(Operand.of_unit(unit_of(token)))
        elif REGISTER_PATTERN.fullmatch(token):
            operands.append(Operand.of_register(token))
        else:
            raise ScriptSyntaxError(f"unexpected operand {token!r}", line)
    return tuple(operands)


def _claims(text: str, line: int) -> tuple[typing.Any, typing.Any]:
    claim_text, bang, correction_text = text.partition("!")
    claim_text = claim_text.strip()
    if not claim_text:
        raise ScriptSyntaxError("'=>' must be followed by the tablet's value", line)
    claim = _numeral(claim_text, line, "claim")
    if not bang:
        return claim, None
    keyword, _, corrected_text = correction_text.strip().partition(" ")
    if keyword != CORRECTION_KEYWORD or not corrected_text.strip():
        raise ScriptSyntaxError(f"expected '! {CORRECTION_KEYWORD} <numeral>' after the claim", line)
    return claim, _numeral(corrected_text.strip(), line, "correction")


def _step(text: str, line: int) -> Step:
    body, _, citation = text.partition("#")
    body, arrow, claim_text = body.partition("=>")
    target, assign, expression = body.partition(":=")
    target = target.strip()
    if not assign:
        raise ScriptSyntaxError("expected '<register> := <OPCODE> ...'", line)
    if not REGISTER_PATTERN.fullmatch(target):
        raise ScriptSyntaxError(f"invalid register name {target!r}", line)
    tokens = expression.split()
    if not tokens:
        raise ScriptSyntaxError("missing opcode", line)
    try:
        opcode = Opcode(tokens[0].upper())
    except ValueError:
        raise ScriptSyntaxError(
            f"unknown opcode {tokens[0]!r}; expected one of {', '.join(Opcode)}", line
        ) from None
    claim, corrected = _claims(claim_text, line) if arrow else (None, None)
    return Step(
        target=target,
        opcode=opcode,
        operands=_operands(opcode, tokens[1:], line),
        tablet_claim=claim,
        corrected=corrected,
        source_line=citation.strip(),
        line=line,
    )


def _outputs(text: str, line: int) -> tuple[OutputSpec, ...]:
    outputs = []
    for entry in text.split():
        register, _, unit_name = entry.partition(":")
        if not REGISTER_PATTERN.fullmatch(register):
            raise ScriptSyntaxError(f"invalid output register {register!r}", line)
        if unit_name and not is_unit_name(unit_name):
            raise ScriptSyntaxError(f"unknown unit {unit_name!r} for output {register}", line)
        outputs.append(OutputSpec(register, unit_of(unit_name) if unit_name else None))
    return tuple(outputs)


def parse_script(text: str, name: str = "") -> Script:
    """
    Parses procedure text into a validated `Script`.

    Args:
        text (str):
             The procedure text. Empty text is an empty, valid script.
        name (str):
             The script name to use when the text has no `#@ name:` line.

    Returns:
        Script:
             The parsed script.

    Raises:
        ScriptSyntaxError:
             On a malformed line, an unknown opcode or unit, an arity mismatch, an undefined or duplicate register, or a claim on a full `DECOMPOSE`.

    """
    steps: list[Step] = []
    outputs: tuple[OutputSpec, ...] = ()
    metadata: dict[str, str] = {}
    outputs_line = 0
    for line, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            match = METADATA_PATTERN.fullmatch(stripped)
            if match is None:
                continue
            key, value = match.group("key").lower(), match.group("value").strip()
            if key == "name":
                name = value
            elif key == "outputs":
                outputs, outputs_line = _outputs(value, line), line
            else:
                metadata[key] = value
            continue
        steps.append(_step(stripped, line))
    script = Script(name=name, steps=tuple(steps), outputs=outputs, metadata=metadata)
    validate_script(script, outputs_line)
    logger.debug(f"Parsed {script.name or 'script'} with {len(script.steps)} steps")
    return script


def _format_step(step: Step) -> str:
    text = f"{step.target} := {step.opcode.value}"
    if step.operands:
        text += " " + " ".join(str(operand) for operand in step.operands)
    if step.tablet_claim is not None:
        text += f" => {format_sex(step.tablet_claim)}"
        if step.corrected is not None:
            text += f" ! {CORRECTION_KEYWORD} {format_sex(step.corrected)}"
    if step.source_line:
        text += f"  # {step.source_line}"
    return text


def format_script(script: Script) -> str:
    """Renders a script as procedure text that `parse_script` reads back to an equal script."""
    lines = []
    if script.name:
        lines.append(f"#@ name: {script.name}")
    lines.extend(f"#@ {key}: {value}" for key, value in script.metadata.items())
    if script.outputs:
        lines.append(f"#@ outputs: {' '.join(str(output) for output in script.outputs)}")
    lines.extend(_format_step(step) for step in script.steps)
    return "\n".join(lines) + "\n" if lines else ""
