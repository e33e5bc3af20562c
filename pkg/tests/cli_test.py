import json

import pytest

from susa.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.mark.parametrize(
    "argv, first_line",
    [
        (("sexa", "recip", "9"), "0;6,40"),
        (("sexa", "eval", "14,24 * 0;5"), "1,12"),
        (("sexa", "regular", "7"), "irregular (7)"),
        (("sexa", "regular", "14"), "irregular (2·7)"),
        (("sexa", "regular", "12"), "regular (2^2·3)"),
        (("convert", "14,24 sar", "nindan3"), "1,12 nindan³"),
        (("convert", "1 nindan", "kus"), "12 kùš"),
        (("convert", "1,55,12,0,0 sila", "--breakdown"), "23 gur₇ 2,24 gur"),
        (("convert", "14,24 sar", "--breakdown"), "23 gur₇ 2,24 gur"),
        (("volume", "grainheap", "--x", "4", "--h", "3", "--unit", "sar"), "14,24 volume-sar"),
        (("volume", "grainheap", "--x", "4", "--h", "3"), "1,12 nindan³"),
        (("volume", "frustum", "--a", "10", "--b", "7", "--h", "18 kus", "--unit", "sar"), "21,54 volume-sar"),
        (("volume", "frustum", "--a", "10", "--b", "7", "--h", "1;30", "--formula", "egyptian"), "1,49;30 nindan³"),
        (("volume", "cuboid", "--a", "1", "--b", "1", "--c", "1"), "1 nindan³"),
        (("volume", "--descriptor", '{"kind": "cuboid", "a": "1", "b": "2", "c": "3"}'), "6 nindan³"),
    ],
)
def test_commands(capsys, argv, first_line):
    code, out, _ = run_cli(capsys, *argv)
    assert code == 0
    assert out.splitlines()[0] == first_line


def test_sexa_prints_floating_and_decimal_forms(capsys):
    _, out, _ = run_cli(capsys, "sexa", "recip", "9")
    assert out.splitlines()[1:] == ["floating: 6,40", "decimal: 1/9"]


def test_rotation_volume(capsys):
    code, out, _ = run_cli(capsys, "volume", "rotation", "--solid", "sphere", "--r", "1", "--precision", "5")
    assert code == 0
    assert out.startswith("4.1888")


def test_volume_oracle(capsys):
    argv = ("volume", "frustum", "--a", "10", "--b", "7", "--h", "18 kus")
    code, out, _ = run_cli(capsys, *argv, "--oracle")
    assert code == 0
    assert "agrees" in out.splitlines()[1]
    _, plain, _ = run_cli(capsys, *argv)
    assert out.splitlines()[0] == plain.splitlines()[0]


def test_heap_slope_is_drop_per_run(capsys):
    code, out, _ = run_cli(capsys, "volume", "--help")
    assert code == 0
    assert "drop per unit of horizontal run" in " ".join(out.split())
    code, out, _ = run_cli(capsys, "volume", "grainheap", "--x", "4", "--h", "3", "--slope", "2")
    assert code == 0
    assert out.splitlines()[0] == "27 nindan³"


@pytest.mark.parametrize(
    "argv",
    [
        ("volume", "frustum", "--a", "10", "--b", "7"),
        ("volume", "cuboid", "--a", "1", "--b", "1", "--c", "1", "--x", "3"),
        ("volume", "frustum", "--a", "7", "--b", "10", "--h", "1"),
        ("volume", "cuboid", "--a", "1", "--b", "1", "--c", "1", "--unit", "sila"),
        ("volume",),
        ("convert", "14,24 sar"),
        ("convert", "1 nindan", "sila"),
        ("convert", "1 cubit", "nindan"),
        ("sexa", "recip", "0"),
        ("sexa", "regular", "0;30"),
        ("sexa", "eval", "1 +"),
        ("replay", "NO-SUCH-SCRIPT"),
    ],
)
def test_input_errors_exit_with_2(capsys, argv):
    code, _, err = run_cli(capsys, *argv)
    assert code == 2
    assert "error: " in err


@pytest.mark.parametrize("argv", [(), ("catalog", "nonsense"), ("sexa",)])
def test_usage_errors_exit_with_2(capsys, argv):
    code, _, _ = run_cli(capsys, *argv)
    assert code == 2


def test_replay_exit_codes(capsys, tmp_path):
    code, out, _ = run_cli(capsys, "replay", "SMT14-P1")
    assert code == 0
    assert "warning: 1 annotated scribal error" in out
    assert out.splitlines()[-1] == "x = 4 nindan, y = 6, z = 10; 1 annotated scribal error"
    assert run_cli(capsys, "replay", "SMT14-P1", "--strict")[0] == 1
    bad = tmp_path / "bad.tab"
    bad.write_text("a := RECIP 9 => 0;6,30\n", encoding="utf-8")
    code, out, _ = run_cli(capsys, "replay", str(bad))
    assert code == 1
    assert "status: mismatch" in out


def test_replay_of_a_broken_file(capsys, tmp_path):
    broken = tmp_path / "broken.tab"
    broken.write_text("a := RECIP b\n", encoding="utf-8")
    code, _, err = run_cli(capsys, "replay", str(broken))
    assert code == 2
    assert "line 1" in err


def test_catalog_platonic(capsys):
    code, out, _ = run_cli(capsys, "catalog", "platonic")
    assert code == 0
    rows = [line.split() for line in out.splitlines()]
    assert rows[0] == ["name", "V", "E", "F", "V-E+F"]
    assert ["cube", "8", "12", "6", "2"] in rows
    assert ["icosahedron", "12", "30", "20", "2"] in rows


def test_catalog_units(capsys):
    code, out, _ = run_cli(capsys, "catalog", "units")
    assert code == 0
    assert "1/2 nindan" in out
    assert "gur₇" in out


def test_catalog_scripts_json(capsys):
    code, out, _ = run_cli(capsys, "catalog", "scripts", "--json")
    assert code == 0
    names = {row["name"] for row in json.loads(out)}
    assert names == {"SMT14-P1", "SMT14-P2", "BM85194-R41"}


def test_json_outputs(capsys):
    _, out, _ = run_cli(capsys, "sexa", "recip", "9", "--json")
    assert json.loads(out) == {"absolute": "0;6,40", "floating": "6,40", "decimal": "1/9"}
    _, out, _ = run_cli(capsys, "convert", "14,24 sar", "nindan3", "--json")
    assert json.loads(out)["result"]["value"] == "1,12"
    _, out, _ = run_cli(capsys, "volume", "grainheap", "--x", "4", "--h", "3", "--json")
    data = json.loads(out)
    assert data["exact"] is True
    assert data["volume"]["absolute"] == "1,12"
    assert data["solid"]["kind"] == "grainheap"
    code, out, _ = run_cli(capsys, "replay", "BM85194-R41", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["status"] == "annotated-errors-only"
    assert data["outputs"][0]["display"] == "21,54 volume-sar"
