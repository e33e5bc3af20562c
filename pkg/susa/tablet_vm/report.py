"""

The `report` module turns a `Trace` into a verdict on the whole replay, as text for people and as JSON for tools.

A report's status is `all-ok` when no claim disagrees with the computation, `annotated-errors-only` when every disagreement is a known scribal error and `mismatch` otherwise. `Report.exit_code` maps the status to a process exit code, with `strict` making annotated errors fail as well.

The last line of the text report reads like the end of the tablet, e.g.::

    x = 4 nindan, y = 6, z = 10; 1 annotated scribal error
"""
import dataclasses
import typing
from enum import Enum
from fractions import Fraction

from susa.metrology import (
    CapacityBreakdown,
    Quantity,
    Unit,
    breakdown_to_json,
    convert,
    format_breakdown,
    quantity_to_json,
)
from susa.sexagesimal import format_sex
from susa.tablet_vm.cursor import Cursor
from susa.tablet_vm.elements import OutputSpec, StepResult, Trace, Value, Verdict

__all__ = ("ReportStatus", "Report", "verify", "render_value", "value_to_json")


class ReportStatus(str, Enum):
    all_ok = "all-ok"
    annotated_errors_only = "annotated-errors-only"
    mismatch = "mismatch"


def _plural(count: int, noun: str, plural: typing.Optional[str] = None) -> str:
    return f"{count} {noun if count == 1 else plural or noun + 's'}"


def _displayed(value: Value, unit: typing.Optional[Unit]) -> Value:
    if unit is None or isinstance(value, CapacityBreakdown):
        return value
    if isinstance(value, Quantity):
        return convert(value, unit) if value.unit.dimension is unit.dimension else value
    return Quantity(value, unit)


def render_value(value: Value, unit: typing.Optional[Unit] = None) -> str:
    """Renders a register value, shown in `unit` when it has one of that dimension or is a bare number."""
    value = _displayed(value, unit)
    if isinstance(value, CapacityBreakdown):
        return format_breakdown(value)
    if isinstance(value, Quantity):
        return f"{format_sex(value.value)} {value.unit.symbol}"
    return format_sex(value)


def value_to_json(value: Value) -> dict[str, typing.Any]:
    if isinstance(value, CapacityBreakdown):
        return {"breakdown": breakdown_to_json(value)}
    if isinstance(value, Quantity):
        return quantity_to_json(value)
    return {"value": format_sex(value), "decimal": str(Fraction(value))}


def _kind(value: Value) -> str:
    if isinstance(value, CapacityBreakdown):
        return "breakdown"
    if isinstance(value, Quantity):
        return value.unit.dimension.value
    return "number"


@dataclasses.dataclass(frozen=True)
class Report:
    """
    The verdict on a replay.

    Attributes:
        trace (Trace):
             The replay being judged.
        status (ReportStatus):
             The overall status.

    """

    trace: Trace
    status: ReportStatus

    @property
    def claims_checked(self) -> int:
        return sum(result.verdict is not Verdict.unclaimed for result in self.trace.results)

    def exit_code(self, strict: bool = False) -> int:
        if self.status is ReportStatus.mismatch:
            return 1
        if strict and self.status is ReportStatus.annotated_errors_only:
            return 1
        return 0

    def result_line(self) -> str:
        """
        Summarizes the declared outputs and the deviations on one line.

        Outputs of the same kind are listed together and named when the kind repeats; an output whose step the tablet got wrong is followed by what the tablet wrote.
        """
        trace = self.trace
        defining = {result.step.target: result for result in trace.results}
        shown = [(output, _displayed(value, output.unit)) for output, value in trace.outputs()]
        kinds = [_kind(value) for _, value in shown]
        groups: list[list[str]] = []
        previous_kind, previous_symbol = None, None
        for (output, value), kind in zip(shown, kinds):
            labelled = kinds.count(kind) > 1
            text = render_value(value)
            symbol = value.unit.symbol if isinstance(value, Quantity) else None
            if labelled and kind == previous_kind and symbol is not None and symbol == previous_symbol:
                text = format_sex(value.value)
            if labelled:
                text = f"{output.register} = {text}"
            result = defining[output.register]
            if result.verdict is Verdict.annotated_error:
                text += f"; tablet wrote {format_sex(result.step.tablet_claim)}"
            if kind == previous_kind and labelled:
                groups[-1].append(text)
            else:
                groups.append([text])
            previous_kind, previous_symbol = kind, symbol
        parts = [", ".join(group) for group in groups]
        summary = trace.summary
        if summary[Verdict.annotated_error]:
            parts.append(_plural(summary[Verdict.annotated_error], "annotated scribal error"))
        if summary[Verdict.mismatch]:
            parts.append(_plural(summary[Verdict.mismatch], "mismatch", "mismatches"))
        return "; ".join(parts)

    def _step_row(self, result: StepResult) -> list[str]:
        step = result.step
        operands = " ".join(str(operand) for operand in step.operands)
        claim = "-"
        if step.tablet_claim is not None:
            claim = format_sex(step.tablet_claim)
            if step.corrected is not None:
                claim += f" (error for {format_sex(step.corrected)})"
        return [
            str(result.index),
            f"{step.target} := {step.opcode.value} {operands}".rstrip(),
            render_value(result.computed),
            claim,
            result.verdict.value,
            step.source_line,
        ]

    def to_text(self) -> str:
        trace = self.trace
        script = trace.script
        provenance = ", ".join(
            value for value in (script.metadata.get("tablet"), script.metadata.get("lines")) if value
        )
        cursor = Cursor(f"{script.name or 'script'}{': ' + provenance if provenance else ''}")
        with cursor.auto_indent() as table:
            table.table(
                [["idx", "step", "computed", "claim", "verdict", "source"]]
                + [self._step_row(result) for result in trace.results]
            )
        counts = ", ".join(f"{count} {verdict.value}" for verdict, count in trace.summary.items())
        cursor.append(f"summary: {counts} ({_plural(self.claims_checked, 'claim')} checked)")
        cursor.append(f"status: {self.status.value}")
        flagged = trace.flagged(Verdict.annotated_error)
        if flagged:
            cursor.append(
                f"warning: {_plural(len(flagged), 'annotated scribal error')}; the replay continues with the computed value"
            )
            with cursor.auto_indent() as notes:
                for result in flagged:
                    notes.append(
                        f"step {result.index} {result.step.target}{self._citation(result)}: tablet wrote {format_sex(result.step.tablet_claim)} for {format_sex(result.step.corrected)}"
                    )
        mismatched = trace.flagged(Verdict.mismatch)
        if mismatched:
            cursor.append(f"error: {_plural(len(mismatched), 'mismatch', 'mismatches')}")
            with cursor.auto_indent() as notes:
                for result in mismatched:
                    notes.append(
                        f"step {result.index} {result.step.target}{self._citation(result)}: tablet wrote {format_sex(result.step.tablet_claim)}, computed {render_value(result.computed)}"
                    )
        line = self.result_line()
        if line:
            cursor.append(line)
        return str(cursor)

    @staticmethod
    def _citation(result: StepResult) -> str:
        return f" ({result.step.source_line})" if result.step.source_line else ""

    def to_json(self) -> dict[str, typing.Any]:
        trace = self.trace
        steps = []
        for result in trace.results:
            step = result.step
            steps.append(
                {
                    "idx": result.index,
                    "target": step.target,
                    "opcode": step.opcode.value,
                    "operands": [str(operand) for operand in step.operands],
                    "computed": render_value(result.computed),
                    "value": value_to_json(result.computed),
                    "claim": None if step.tablet_claim is None else format_sex(step.tablet_claim),
                    "corrected": None if step.corrected is None else format_sex(step.corrected),
                    "verdict": result.verdict.value,
                    "source_line": step.source_line,
                }
            )
        return {
            "script": trace.script.name,
            "metadata": dict(trace.script.metadata),
            "steps": steps,
            "summary": {verdict.value: count for verdict, count in trace.summary.items()},
            "status": self.status.value,
            "outputs": [self._output_json(output, value) for output, value in trace.outputs()],
        }

    @staticmethod
    def _output_json(output: OutputSpec, value: Value) -> dict[str, typing.Any]:
        return {
            "register": output.register,
            "display": render_value(value, output.unit),
            **value_to_json(_displayed(value, output.unit)),
        }


def verify(trace: Trace) -> Report:
    """
    Judges a completed trace.

    Args:
        trace (Trace):
             The replay to judge.

    Returns:
        Report:
             `mismatch` if any claim disagrees without a matching correction, `annotated-errors-only` if every disagreement is annotated, otherwise `all-ok`.

    """
    summary = trace.summary
    if summary[Verdict.mismatch]:
        status = ReportStatus.mismatch
    elif summary[Verdict.annotated_error]:
        status = ReportStatus.annotated_errors_only
    else:
        status = ReportStatus.all_ok
    return Report(trace, status)
