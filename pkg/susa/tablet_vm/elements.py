"""

The `elements` module defines the data a tablet procedure is made of and what replaying it produces.

### Procedures

- `Opcode`: the verbs of the procedure language. Each maps one-to-one to a verb of the translations: `RECIP` is "make the reciprocal", `DOUBLE` and `HALVE` are "double" and "halve", `THIRD` takes one third, and so on. An opcode knows its arity and its *lineage*, the chain of method suffixes a `Visitor` tries when dispatching a step (for example `mul`, then `binary`, then `step`).
- `Operand`: a register, a numeral literal optionally carrying a unit, or a bare unit name.
- `Step`: one line, `target := OPCODE operands => claim ! error-for corrected  # citation`.
- `Script`: the ordered steps, the declared outputs and the provenance metadata.

### Replays

- `Verdict`: `ok` when the computed value equals the tablet's claim, `annotated-error` when it equals the modern correction instead, `mismatch` for any other disagreement and `unclaimed` when the tablet states nothing.
- `StepResult` and `Trace`: the per-step outcome and the full record of a run.

### Errors

`ScriptSyntaxError` carries the 1-based line of the offending step; `ScriptRuntimeError` carries the step index and citation.
"""
import dataclasses
import typing
from collections import Counter
from enum import Enum
from fractions import Fraction

from susa.metrology import CapacityBreakdown, Quantity, Unit
from susa.sexagesimal import SexRational, format_sex

__all__ = (
    "Opcode",
    "OperandKind",
    "Operand",
    "Step",
    "OutputSpec",
    "Script",
    "Verdict",
    "StepResult",
    "Trace",
    "Value",
    "ScriptSyntaxError",
    "ScriptRuntimeError",
    "magnitude_of",
)

Value = typing.Union[SexRational, Quantity, CapacityBreakdown]


class ScriptSyntaxError(ValueError):
    """
    Raised when a procedure text cannot be turned into a valid `Script`.

    Attributes:
        line (int):
             The 1-based line of the offending text, 0 when the error concerns the whole script.

    """

    def __init__(self, message: str, line: int = 0):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


class ScriptRuntimeError(RuntimeError):
    """
    Raised when a step cannot be executed.

    Attributes:
        index (int):
             The 1-based index of the failing step.
        source_line (str):
             The step's citation.

    """

    def __init__(self, message: str, index: int, source_line: str = ""):
        citation = f" ({source_line})" if source_line else ""
        super().__init__(f"step {index}{citation}: {message}")
        self.index = index
        self.source_line = source_line


class Opcode(str, Enum):
    LIT = "LIT"
    RECIP = "RECIP"
    MUL = "MUL"
    ADD = "ADD"
    SUB = "SUB"
    SQUARE = "SQUARE"
    DOUBLE = "DOUBLE"
    HALVE = "HALVE"
    THIRD = "THIRD"
    CONVERT = "CONVERT"
    STORAGE = "STORAGE"
    DECOMPOSE = "DECOMPOSE"

    @property
    def arity(self) -> tuple[int, int]:
        """The least and greatest number of operands."""
        return ARITY[self]

    @property
    def family(self) -> str:
        return FAMILY[self]

    @property
    def lineage(self) -> tuple[str, ...]:
        return self.value.lower(), self.family, "step"

    @property
    def unit_position(self) -> typing.Optional[int]:
        """The 0-based operand position that names a unit, if the opcode has one."""
        return UNIT_POSITION.get(self)


ARITY: dict[Opcode, tuple[int, int]] = {
    Opcode.LIT: (1, 1),
    Opcode.RECIP: (1, 1),
    Opcode.MUL: (2, 2),
    Opcode.ADD: (2, 2),
    Opcode.SUB: (2, 2),
    Opcode.SQUARE: (1, 1),
    Opcode.DOUBLE: (1, 1),
    Opcode.HALVE: (1, 1),
    Opcode.THIRD: (1, 1),
    Opcode.CONVERT: (2, 2),
    Opcode.STORAGE: (2, 2),
    Opcode.DECOMPOSE: (1, 2),
}

FAMILY: dict[Opcode, str] = {
    Opcode.LIT: "literal",
    Opcode.RECIP: "unary",
    Opcode.SQUARE: "unary",
    Opcode.DOUBLE: "unary",
    Opcode.HALVE: "unary",
    Opcode.THIRD: "unary",
    Opcode.MUL: "binary",
    Opcode.ADD: "binary",
    Opcode.SUB: "binary",
    Opcode.CONVERT: "metrological",
    Opcode.STORAGE: "metrological",
    Opcode.DECOMPOSE: "metrological",
}

UNIT_POSITION: dict[Opcode, int] = {Opcode.CONVERT: 1, Opcode.DECOMPOSE: 1}


class OperandKind(str, Enum):
    register = "register"
    literal = "literal"
    unit = "unit"


@dataclasses.dataclass(frozen=True)
class Operand:
    kind: OperandKind
    register: typing.Optional[str] = None
    value: typing.Optional[SexRational] = None
    unit: typing.Optional[Unit] = None

    @classmethod
    def of_register(cls, name: str) -> "Operand":
        return cls(OperandKind.register, register=name)

    @classmethod
    def of_literal(cls, value: SexRational, unit: typing.Optional[Unit] = None) -> "Operand":
        return cls(OperandKind.literal, value=Fraction(value), unit=unit)

    @classmethod
    def of_unit(cls, unit: Unit) -> "Operand":
        return cls(OperandKind.unit, unit=unit)

    def __str__(self):
        match self.kind:
            case OperandKind.register:
                return self.register
            case OperandKind.unit:
                return self.unit.name
        text = format_sex(self.value)
        return f"{text} {self.unit.name}" if self.unit else text


@dataclasses.dataclass(frozen=True)
class Step:
    """
    One line of a procedure.

    Attributes:
        target (str):
             The register the step defines.
        opcode (Opcode):
             The operation.
        operands (tuple[Operand, ...]):
             The inputs.
        tablet_claim (SexRational, optional):
             The value the tablet states ("you see N").
        corrected (SexRational, optional):
             The modern correction where the tablet errs.
        source_line (str):
             The citation of the tablet line, e.g. `Obv. L9-10`.
        line (int):
             The line of the procedure text the step was read from. Not part of equality.

    """

    target: str
    opcode: Opcode
    operands: tuple[Operand, ...]
    tablet_claim: typing.Optional[SexRational] = None
    corrected: typing.Optional[SexRational] = None
    source_line: str = ""
    line: int = dataclasses.field(default=0, compare=False)

    @property
    def registers_read(self) -> tuple[str, ...]:
        return tuple(
            operand.register for operand in self.operands if operand.kind is OperandKind.register
        )


class OutputSpec(typing.NamedTuple):
    """A declared output register and the unit it is displayed in, if any."""

    register: str
    unit: typing.Optional[Unit] = None

    def __str__(self):
        return f"{self.register}:{self.unit.name}" if self.unit else self.register


@dataclasses.dataclass(frozen=True)
class Script:
    """
    A parsed procedure.

    Attributes:
        name (str):
             The procedure name, e.g. `SMT14-P1`.
        steps (tuple[Step, ...]):
             The steps in execution order.
        outputs (tuple[OutputSpec, ...]):
             The registers reported at the end of a replay.
        metadata (dict[str, str]):
             Provenance such as `tablet`, `lines` and `description`.

    """

    name: str = ""
    steps: tuple[Step, ...] = ()
    outputs: tuple[OutputSpec, ...] = ()
    metadata: dict[str, str] = dataclasses.field(default_factory=dict)


class Verdict(str, Enum):
    ok = "ok"
    annotated_error = "annotated-error"
    mismatch = "mismatch"
    unclaimed = "unclaimed"

    @classmethod
    def judge(
        cls,
        computed: SexRational,
        claim: typing.Optional[SexRational],
        corrected: typing.Optional[SexRational],
    ) -> "Verdict":
        """Compares a computed value exactly against a claim and its correction."""
        if claim is None:
            return cls.unclaimed
        if computed == claim:
            return cls.ok
        if corrected is not None and computed == corrected:
            return cls.annotated_error
        return cls.mismatch


def magnitude_of(value: Value) -> SexRational:
    """The bare number of a register value; breakdowns have none."""
    if isinstance(value, Quantity):
        return value.value
    if isinstance(value, CapacityBreakdown):
        raise TypeError("A capacity breakdown has no single magnitude")
    return value


@dataclasses.dataclass(frozen=True)
class StepResult:
    index: int
    step: Step
    computed: Value
    verdict: Verdict


@dataclasses.dataclass(frozen=True)
class Trace:
    """
    The record of a run.

    Attributes:
        script (Script):
             The script that ran.
        results (tuple[StepResult, ...]):
             One result per step, in order.
        registers (dict[str, Value]):
             The register environment after the last step.

    """

    script: Script
    results: tuple[StepResult, ...]
    registers: dict[str, Value] = dataclasses.field(default_factory=dict)

    @property
    def summary(self) -> dict[Verdict, int]:
        counts = Counter(result.verdict for result in self.results)
        return {verdict: counts.get(verdict, 0) for verdict in Verdict}

    def outputs(self) -> list[tuple[OutputSpec, Value]]:
        return [(output, self.registers[output.register]) for output in self.script.outputs]

    def flagged(self, verdict: Verdict) -> list[StepResult]:
        return [result for result in self.results if result.verdict is verdict]
