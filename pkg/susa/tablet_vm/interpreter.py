"""

The `interpreter` module replays a script step by step with exact arithmetic and judges every tablet claim.

Arithmetic opcodes work on bare numbers: a unit-bearing operand contributes its magnitude and the result carries no unit, as on the tablets. `LIT` with a unit, `CONVERT`, `STORAGE` and `DECOMPOSE` produce unit-bearing values. `STORAGE` reads a bare number as volume-sar and `DECOMPOSE` reads a bare number as sìla.

After a step whose claim is an annotated scribal error, the register holds the computed value, since the tablets carry on from the correct number.
"""
import typing

from susa.log import create_logger
from susa.metrology import (
    SILA,
    VOLUME_SAR,
    CapacityBreakdown,
    Quantity,
    capacity_from_volume,
    convert,
    decompose_capacity,
)
from susa.sexagesimal import SexRational, add, format_sex, mul, reciprocal, sub
from susa.tablet_vm.elements import (
    Opcode,
    Operand,
    OperandKind,
    Script,
    ScriptRuntimeError,
    Step,
    StepResult,
    Trace,
    Value,
    Verdict,
    magnitude_of,
)
from susa.tablet_vm.visitor import Visitor

__all__ = ("TabletInterpreter", "run")

logger = create_logger("TabletVM")

UNARY: dict[Opcode, typing.Callable[[SexRational], SexRational]] = {
    Opcode.RECIP: reciprocal,
    Opcode.SQUARE: lambda q: mul(q, q),
    Opcode.DOUBLE: lambda q: mul(q, 2),
    Opcode.HALVE: lambda q: mul(q, SexRational(1, 2)),
    Opcode.THIRD: lambda q: mul(q, SexRational(1, 3)),
}

BINARY: dict[Opcode, typing.Callable[[SexRational, SexRational], SexRational]] = {
    Opcode.MUL: mul,
    Opcode.ADD: add,
    Opcode.SUB: sub,
}


class TabletInterpreter(Visitor, visit_method_prefix="execute"):
    """
    Executes one script at a time in its own register environment.

    Attributes:
        registers (dict[str, Value]):
             The values defined so far.
        results (list[StepResult]):
             The results of the steps executed so far.

    """

    def __init__(self):
        super().__init__()
        self.registers: dict[str, Value] = {}
        self.results: list[StepResult] = []

    def run(self, script: Script) -> Trace:
        self.registers, self.results = {}, []
        self.execute(script)
        trace = Trace(script=script, results=tuple(self.results), registers=dict(self.registers))
        summary = ", ".join(
            f"{count} {verdict.value}" for verdict, count in trace.summary.items() if count
        )
        logger.debug(f"Replayed {script.name or 'script'}: {summary or 'no steps'}")
        return trace

    def fail(self, step: Step, message: str) -> typing.NoReturn:
        raise ScriptRuntimeError(message, self.index, step.source_line)

    def value_of(self, step: Step, operand: Operand) -> Value:
        if operand.kind is OperandKind.register:
            return self.registers[operand.register]
        if operand.unit is not None:
            return Quantity(operand.value, operand.unit)
        return operand.value

    def magnitude(self, step: Step, operand: Operand) -> SexRational:
        try:
            return magnitude_of(self.value_of(step, operand))
        except TypeError as error:
            self.fail(step, f"{operand}: {error}")

    def record(self, step: Step, computed: Value):
        claimed = computed if isinstance(computed, CapacityBreakdown) else magnitude_of(computed)
        verdict = (
            Verdict.unclaimed
            if step.tablet_claim is None
            else Verdict.judge(claimed, step.tablet_claim, step.corrected)
        )
        logger.debug(f"Step {self.index} {step.target} := {step.opcode.value}: {computed}")
        if verdict is Verdict.annotated_error:
            logger.info(
                f"Step {self.index} ({step.source_line or step.target}): tablet wrote {format_sex(step.tablet_claim)} for {format_sex(claimed)}"
            )
        elif verdict is Verdict.mismatch:
            logger.warning(
                f"Step {self.index} ({step.source_line or step.target}): tablet wrote {format_sex(step.tablet_claim)}, computed {format_sex(claimed)}"
            )
        self.registers[step.target] = computed
        self.results.append(StepResult(self.index, step, computed, verdict))

    def execute_literal(self, step: Step):
        self.record(step, self.value_of(step, step.operands[0]))

    def execute_unary(self, step: Step):
        operand = self.magnitude(step, step.operands[0])
        try:
            self.record(step, UNARY[step.opcode](operand))
        except ZeroDivisionError:
            self.fail(step, "0 has no reciprocal")

    def execute_binary(self, step: Step):
        left, right = (self.magnitude(step, operand) for operand in step.operands)
        self.record(step, BINARY[step.opcode](left, right))

    def execute_convert(self, step: Step):
        value = self.value_of(step, step.operands[0])
        if not isinstance(value, Quantity):
            self.fail(step, f"{step.operands[0]} carries no unit to convert from")
        try:
            self.record(step, convert(value, step.operands[1].unit))
        except ValueError as error:
            self.fail(step, str(error))

    def execute_storage(self, step: Step):
        value = self.value_of(step, step.operands[0])
        if isinstance(value, CapacityBreakdown):
            self.fail(step, f"{step.operands[0]} is a capacity breakdown, not a volume")
        if not isinstance(value, Quantity):
            value = Quantity(value, VOLUME_SAR)
        try:
            self.record(step, capacity_from_volume(value, step.operands[1].value))
        except ValueError as error:
            self.fail(step, str(error))

    def execute_decompose(self, step: Step):
        value = self.value_of(step, step.operands[0])
        if isinstance(value, CapacityBreakdown):
            breakdown = value
        else:
            if not isinstance(value, Quantity):
                value = Quantity(value, SILA)
            try:
                breakdown = decompose_capacity(value)
            except ValueError as error:
                self.fail(step, str(error))
        if len(step.operands) == 1:
            self.record(step, breakdown)
            return
        unit = step.operands[1].unit
        self.record(step, Quantity(SexRational(getattr(breakdown, unit.name)), unit))


def run(script: Script) -> Trace:
    """
    Replays a script in a fresh interpreter.

    Args:
        script (Script):
             A validated script.

    Returns:
        Trace:
             One result per step and the final registers.

    Raises:
        ScriptRuntimeError:
             On division by zero, a unit mismatch in `CONVERT` or an infeasible `DECOMPOSE`.

    """
    return TabletInterpreter().run(script)
