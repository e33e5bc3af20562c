"""

The `validator` module checks the structure of a script before it runs: operand arity and kinds, that every register is defined by an earlier step and never redefined, and that claims are well formed.
"""
from susa.log import create_logger
from susa.metrology import Dimension, is_unit_name
from susa.tablet_vm.elements import Opcode, OperandKind, Script, ScriptSyntaxError, Step
from susa.tablet_vm.visitor import Visitor

__all__ = ("ScriptValidator", "validate_script")

logger = create_logger("TabletVM")


class ScriptValidator(Visitor, visit_method_prefix="validate"):
    """
    Walks a script and raises `ScriptSyntaxError` at the first structural fault.

    Attributes:
        defined (dict[str, int]):
             The registers defined so far and the step index defining each.
        read (set[str]):
             The registers read by some step.

    """

    def __init__(self):
        super().__init__()
        self.defined: dict[str, int] = {}
        self.read: set[str] = set()

    def validate_step(self, step: Step):
        least, most = step.opcode.arity
        count = len(step.operands)
        if not least <= count <= most:
            expected = str(least) if least == most else f"{least} or {most}"
            raise ScriptSyntaxError(
                f"{step.opcode.value} takes {expected} operand(s), got {count}", step.line
            )
        for position, operand in enumerate(step.operands):
            if position == step.opcode.unit_position:
                continue
            if operand.kind is OperandKind.unit:
                raise ScriptSyntaxError(
                    f"unit {operand.unit.name!r} where {step.opcode.value} expects a value",
                    step.line,
                )
            if operand.kind is OperandKind.register and operand.register not in self.defined:
                raise ScriptSyntaxError(f"undefined register {operand.register!r}", step.line)
        if is_unit_name(step.target):
            raise ScriptSyntaxError(f"unit name {step.target!r} cannot name a register", step.line)
        if step.target in self.defined:
            raise ScriptSyntaxError(
                f"register {step.target!r} already defined by step {self.defined[step.target]}",
                step.line,
            )
        if step.corrected is not None:
            if step.tablet_claim is None:
                raise ScriptSyntaxError("a correction needs a tablet claim", step.line)
            if step.corrected == step.tablet_claim:
                raise ScriptSyntaxError("the correction repeats the tablet claim", step.line)
        self.read.update(step.registers_read)
        self.defined[step.target] = self.index

    def validate_literal(self, step: Step):
        if step.operands and step.operands[0].kind is not OperandKind.literal:
            raise ScriptSyntaxError("LIT takes a numeral literal", step.line)
        self.validate_step(step)

    def validate_convert(self, step: Step):
        self._expect_unit(step)
        self.validate_step(step)

    def validate_storage(self, step: Step):
        if len(step.operands) == 2:
            constant = step.operands[1]
            if constant.kind is not OperandKind.literal or constant.unit is not None:
                raise ScriptSyntaxError("STORAGE takes a constant numeral without a unit", step.line)
            if constant.value <= 0:
                raise ScriptSyntaxError("the storage constant must be positive", step.line)
        self.validate_step(step)

    def validate_decompose(self, step: Step):
        if len(step.operands) == 2:
            unit = self._expect_unit(step)
            if unit.dimension is not Dimension.capacity:
                raise ScriptSyntaxError(f"{unit.name} is not a capacity unit", step.line)
        elif step.tablet_claim is not None:
            raise ScriptSyntaxError(
                "a full DECOMPOSE has no single value to claim; select a unit", step.line
            )
        self.validate_step(step)

    def _expect_unit(self, step: Step):
        if len(step.operands) < 2 or step.operands[1].kind is not OperandKind.unit:
            raise ScriptSyntaxError(f"{step.opcode.value} expects a unit name", step.line)
        return step.operands[1].unit


def validate_script(script: Script, outputs_line: int = 0) -> Script:
    """
    Validates a script and logs registers nothing uses.

    Raises:
        ScriptSyntaxError:
             At the first structural fault.

    """
    validator = ScriptValidator()
    validator.validate(script)
    for output in script.outputs:
        if output.register not in validator.defined:
            raise ScriptSyntaxError(f"undefined output register {output.register!r}", outputs_line)
    reported = {output.register for output in script.outputs}
    unused = [
        step.target
        for step in script.steps
        if step.target not in validator.read and step.target not in reported
        and step.opcode is not Opcode.DECOMPOSE
    ]
    if unused:
        logger.warning(f"{script.name or 'script'}: registers never used: {', '.join(unused)}")
    return script
