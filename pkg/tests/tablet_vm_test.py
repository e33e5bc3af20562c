from fractions import Fraction

import pytest

import susa as sa
from susa.tablet_vm import (
    Opcode,
    ReportStatus,
    ScriptRuntimeError,
    ScriptSyntaxError,
    Verdict,
    format_script,
    list_bundled,
    load_bundled,
    load_script,
    parse_script,
    run,
    verify,
)


def replay(text: str):
    return verify(run(parse_script(text)))


def test_parse_step():
    script = parse_script(
        """
        #@ name: reciprocal
        #@ tablet: SMT No. 14
        t1 := recip 12 => 0;5  # Obv. L2-4
        """
    )
    assert script.name == "reciprocal"
    assert script.metadata == {"tablet": "SMT No. 14"}
    step = script.steps[0]
    assert step.target == "t1"
    assert step.opcode is Opcode.RECIP
    assert step.operands == (sa.Operand.of_literal(12),)
    assert step.tablet_claim == Fraction(1, 12)
    assert step.corrected is None
    assert step.source_line == "Obv. L2-4"
    assert step.line == 4


def test_parse_units_and_corrections():
    script = parse_script(
        """
        V := LIT 14,24 sar
        k := CONVERT V nindan3 => 1,12
        w := DOUBLE k => 2;20 ! error-for 2,24
        """
    )
    assert script.steps[0].operands[0] == sa.Operand.of_literal(864, sa.VOLUME_SAR)
    assert script.steps[1].operands[1] == sa.Operand.of_unit(sa.NINDAN3)
    assert script.steps[2].tablet_claim == Fraction(7, 3)
    assert script.steps[2].corrected == 144


def test_empty_script():
    script = parse_script("")
    assert script.steps == ()
    trace = run(script)
    assert trace.results == ()
    assert verify(trace).status is ReportStatus.all_ok
    assert format_script(script) == ""


@pytest.mark.parametrize(
    "text, line",
    [
        ("a := LIT 1\nb := FROB a", 2),
        ("a := LIT 1\n\nb := MUL a", 3),
        ("a := MUL b 2", 1),
        ("a := LIT 1\na := LIT 2", 2),
        ("a := LIT 1 => ", 1),
        ("a := LIT 1 => 1 ! error-for", 1),
        ("a := LIT 1 => 1 ! error-for 1", 1),
        ("a := LIT 1 => 1;60", 1),
        ("a LIT 1", 1),
        ("1a := LIT 1", 1),
        ("a := LIT 1\nb := CONVERT a 3", 2),
        ("a := LIT 1 cubits", 1),
        ("a := LIT 1 sila\nb := DECOMPOSE a => 1", 2),
        ("a := LIT 1 sila\nb := DECOMPOSE a nindan", 2),
        ("a := LIT 1 sar\nb := STORAGE a 0", 2),
        ("a := LIT 1 sar\nb := STORAGE a a", 2),
        ("a := LIT 1\nb := ADD a nindan", 2),
        ("gi := LIT 3\nb := MUL 2 gi => 6", 1),
        ("a := LIT 1\nsar := DOUBLE a", 2),
    ],
)
def test_syntax_errors_report_their_line(text, line):
    with pytest.raises(ScriptSyntaxError) as error:
        parse_script(text)
    assert error.value.line == line
    assert str(error.value).startswith(f"line {line}: ")


def test_undefined_output():
    with pytest.raises(ScriptSyntaxError) as error:
        parse_script("a := LIT 1\n#@ outputs: b")
    assert error.value.line == 2


def test_runtime_errors():
    with pytest.raises(ScriptRuntimeError) as error:
        run(parse_script("z := SUB 1 1\nr := RECIP z  # Obv. L3"))
    assert error.value.index == 2
    assert error.value.source_line == "Obv. L3"
    assert "step 2 (Obv. L3)" in str(error.value)
    with pytest.raises(ScriptRuntimeError):
        run(parse_script("a := LIT 1 nindan\nb := CONVERT a sila"))
    with pytest.raises(ScriptRuntimeError):
        run(parse_script("a := LIT 1\nb := CONVERT a nindan"))
    with pytest.raises(ScriptRuntimeError):
        run(parse_script("a := SUB 0 5\nb := DECOMPOSE a gur"))


def test_replay_of_the_grain_heap_top():
    trace = run(load_bundled("SMT14-P1"))
    claimed = [result.computed for result in trace.results if result.step.tablet_claim is not None]
    assert claimed == [
        Fraction(1, 12), 72, 9, 27, Fraction(2, 3), Fraction(4, 3), 36, 36, 9, Fraction(1, 9), 4, 6, 10
    ]
    # the scribe squares the height a second time before taking its reciprocal
    without_repeat = [value for index, value in enumerate(claimed) if index != 8]
    assert without_repeat == [
        Fraction(1, 12), 72, 9, 27, Fraction(2, 3), Fraction(4, 3), 36, 36, Fraction(1, 9), 4, 6, 10
    ]
    assert trace.summary[Verdict.annotated_error] == 1
    assert trace.summary[Verdict.mismatch] == 0
    (flagged,) = trace.flagged(Verdict.annotated_error)
    assert flagged.step.target == "w2"
    assert flagged.step.source_line == "Obv. L9-10"
    assert flagged.step.tablet_claim == Fraction(7, 3)


def test_grain_heap_replay_matches_the_closed_form():
    trace = run(load_bundled("SMT14-P1"))
    x = sa.solve_grain_heap_top(sa.Quantity.of("14,24", "sar"), 3)
    y, z = sa.grain_heap_dims(sa.GrainHeap(x, 3))
    assert (trace.registers["x"], trace.registers["y"], trace.registers["z"]) == (x, y, z)


def test_replay_of_the_grain_heap_capacity():
    trace = run(load_bundled("smt14-p2"))
    assert trace.registers["c"] == sa.Quantity(Fraction(24_883_200), sa.SILA)
    assert trace.registers["bd"] == sa.CapacityBreakdown(23, 144, Fraction(0))
    assert trace.registers["g7"] == sa.Quantity(Fraction(23), sa.GUR7)
    (flagged,) = trace.flagged(Verdict.annotated_error)
    assert flagged.step.target == "g7"
    assert flagged.step.tablet_claim == Fraction(1230)
    assert verify(trace).status is ReportStatus.annotated_errors_only


def test_replay_of_the_frustum_hole():
    trace = run(load_bundled("BM85194-R41"))
    frustum = sa.SquareFrustum(10, 7, Fraction(3, 2))
    volume = sa.Quantity(sa.volume_frustum_babylonian(frustum), sa.NINDAN3)
    assert trace.registers["v"] == sa.convert(volume, "sar").value == 1314
    assert trace.registers["b"] == sa.frustum_top_from_slope(10, Fraction(3, 2))
    shown = [sa.format_sex(trace.registers[name]) for name in ("b", "s", "m", "q", "t", "area")]
    assert shown == ["7", "17", "8;30", "1,12;15", "0;45", "1,13"]
    (flagged,) = trace.flagged(Verdict.annotated_error)
    assert flagged.step.target == "v"
    assert flagged.step.tablet_claim == Fraction(1350)


@pytest.mark.parametrize(
    "name, line",
    [
        ("SMT14-P1", "x = 4 nindan, y = 6, z = 10; 1 annotated scribal error"),
        ("SMT14-P2", "1,55,12,0,0 sìla; 23 gur₇ 2,24 gur; 1 annotated scribal error"),
        ("BM85194-R41", "21,54 volume-sar; tablet wrote 22,30; 1 annotated scribal error"),
    ],
)
def test_result_lines(name, line):
    report = verify(run(load_bundled(name)))
    assert report.status is ReportStatus.annotated_errors_only
    assert report.result_line() == line
    assert report.to_text().splitlines()[-1] == line


def test_negative_control():
    script = load_bundled("SMT14-P1")
    script = parse_script(format_script(script).replace("=> 36  # Obv. L11", "=> 37  # Obv. L11"))
    report = verify(run(script))
    assert report.status is ReportStatus.mismatch
    assert report.exit_code() == 1
    (result,) = report.trace.flagged(Verdict.mismatch)
    assert result.step.target == "r"
    assert report.result_line().endswith("; 1 mismatch")
    assert "error: 1 mismatch" in report.to_text()


def test_unclaimed_script_is_all_ok():
    report = replay("a := LIT 3\nb := SQUARE a\n#@ outputs: b")
    assert report.status is ReportStatus.all_ok
    assert report.claims_checked == 0
    assert report.trace.summary[Verdict.unclaimed] == 2
    assert report.result_line() == "9"


def test_exit_codes():
    report = verify(run(load_bundled("SMT14-P1")))
    assert report.exit_code() == 0
    assert report.exit_code(strict=True) == 1
    clean = replay("a := HALVE 1 => 0;30")
    assert clean.exit_code(strict=True) == 0


def test_register_keeps_the_computed_value_after_an_annotated_error():
    report = replay("a := DOUBLE 2 => 5 ! error-for 4\nb := MUL a 10 => 40")
    assert report.trace.registers["a"] == 4
    assert [result.verdict for result in report.trace.results] == [Verdict.annotated_error, Verdict.ok]


def test_arithmetic_drops_units():
    trace = run(parse_script("a := LIT 3 nindan\nb := LIT 12 kus\nc := ADD a b"))
    assert trace.registers["a"] == sa.Quantity(Fraction(3), sa.NINDAN)
    assert trace.registers["c"] == 15


@pytest.mark.parametrize("name", ["SMT14-P1", "SMT14-P2", "BM85194-R41"])
def test_format_script_reads_back(name):
    script = load_bundled(name)
    assert parse_script(format_script(script)) == script


def test_replays_are_deterministic():
    script = load_bundled("SMT14-P2")
    assert verify(run(script)).to_json() == verify(run(script)).to_json()
    assert verify(run(script)).to_text() == verify(run(script)).to_text()


def test_list_bundled():
    bundled = {entry.name: entry for entry in list_bundled()}
    assert set(bundled) == {"SMT14-P1", "SMT14-P2", "BM85194-R41"}
    assert bundled["SMT14-P1"].tablet == "SMT No. 14"
    assert bundled["BM85194-R41"].lines == "Rev. II L41-L49"
    assert all(bundled["SMT14-P1"].citations)
    assert bundled["SMT14-P1"].description


def test_load_bundled_unknown():
    with pytest.raises(KeyError) as error:
        load_bundled("YBC 7289")
    assert "SMT14-P1" in str(error.value)


def test_load_script_from_a_file(tmp_path):
    path = tmp_path / "halves.tab"
    path.write_text("a := HALVE 1 => 0;30\n", encoding="utf-8")
    script = load_script(path)
    assert script.name == "halves"
    assert load_script("bm85194-r41") is load_bundled("BM85194-R41")
    with pytest.raises(FileNotFoundError):
        load_script(tmp_path / "missing.tab")


def test_text_report():
    text = verify(run(load_bundled("SMT14-P1"))).to_text()
    lines = text.splitlines()
    assert lines[0] == "SMT14-P1: SMT No. 14, Obv. L1-L17"
    assert lines[1].split() == ["idx", "step", "computed", "claim", "verdict", "source"]
    assert "2;20 (error for 1;20)" in text
    assert "summary: 12 ok, 1 annotated-error, 0 mismatch, 2 unclaimed (13 claims checked)" in text
    assert "status: annotated-errors-only" in text
    assert "  step 8 w2 (Obv. L9-10): tablet wrote 2;20 for 1;20" in text


def test_json_report():
    data = verify(run(load_bundled("SMT14-P2"))).to_json()
    assert set(data) == {"script", "metadata", "steps", "summary", "status", "outputs"}
    assert data["status"] == "annotated-errors-only"
    assert data["summary"]["annotated-error"] == 1
    step = data["steps"][3]
    assert set(step) == {
        "idx", "target", "opcode", "operands", "computed", "value", "claim", "corrected", "verdict", "source_line"
    }
    assert step["target"] == "c"
    assert step["opcode"] == "STORAGE"
    assert step["computed"] == "1,55,12,0,0 sìla"
    assert step["claim"] == "1,55,12,0,0"
    assert data["outputs"][0]["display"] == "1,55,12,0,0 sìla"
    assert data["outputs"][1]["breakdown"]["gur7"] == 23
