import json
import subprocess
import sys

import pytest

from fusionkit.cli import PROPERTIES, run
from fusionkit.fusion.io import load

from conftest import DATA


def _run(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize("argv,expected", [
    (["check", "constrained", "--catalog", "pgl27", "-p", "2"], "false"),
    (["check", "essential-rank", "--catalog", "d8", "-p", "2"], "0"),
    (["check", "essential-rank", "--catalog", "s4", "-p", "2"], "1"),
    (["check", "sparse", "--catalog", "s4", "-p", "2"], "true"),
    (["check", "sparse", "--catalog", "s4", "-p", "2", "--strict-sparse"], "false"),
    (["check", "extremely-sparse", "--catalog", "s3", "-p", "3"], "true"),
    (["check", "saturated", "--catalog", "a4", "-p", "2"], "true"),
    (["check", "slim", "--catalog", "d16", "-p", "2"], "false"),
])
def test_check_verdicts(capsys, argv, expected):
    code, out, _ = _run(capsys, *argv)
    assert code == 0 and out == expected + "\n"


def test_check_json(capsys):
    code, out, _ = _run(capsys, "check", "sparse", "--catalog", "pgl27", "-p", "2", "--format", "json")
    assert code == 0
    assert json.loads(out) == {"system": "pgl27/p2", "property": "sparse", "value": True, "strict": False}


def test_verify_passes(capsys):
    code, out, _ = _run(capsys, "verify", "--catalog", "s4", "-p", "2")
    report = json.loads(out)
    assert code == 0 and report["failing_theorems"] == []
    assert report["system"] == "s4/p2" and report["essential_rank"] == 1


def test_verify_exit_code_tracks_failures(capsys, monkeypatch):
    import fusionkit.cli as cli
    real = cli.build_report

    def broken(F, system="", include_strict=True):
        r = real(F, system, include_strict=False)
        r["failing_theorems"] = ["T1"]
        return r

    monkeypatch.setattr(cli, "build_report", broken)
    code, _, _ = _run(capsys, "verify", "--catalog", "s3", "-p", "3")
    assert code == 1


@pytest.mark.parametrize("argv", [
    ["check", "sparse", "--catalog", "s4", "-p", "4"],
    ["check", "sparse", "--catalog", "nope", "-p", "2"],
    ["build", "--file", "/nonexistent/g.json", "-p", "2"],
    ["build", "--catalog", "pgl27", "-p", "2", "--max-order", "100"],
    ["graph", "--catalog", "s4", "-p", "2", "--format", "json"],
])
def test_errors_exit_2(capsys, argv):
    code, out, err = _run(capsys, *argv)
    assert code == 2 and out == "" and err.startswith("fusionkit: error:")


def test_argument_errors_exit_2(capsys):
    with pytest.raises(SystemExit) as exc:
        run(["check", "sparse", "--catalog", "s4", "--file", "x.json", "-p", "2"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        run(["check", "nonsense-property", "--catalog", "s4", "-p", "2"])
    assert exc.value.code == 2


def test_bad_file_contents(capsys, tmp_path):
    path = tmp_path / "g.json"
    path.write_text(json.dumps({"degree": 3, "generators": ["(0 1 5)"]}))
    code, _, _ = _run(capsys, "build", "--file", str(path), "-p", "2")
    assert code == 2


def test_catalog_listing(capsys):
    code, out, _ = _run(capsys, "catalog")
    names = out.split()
    assert code == 0 and {"s3", "s4", "a4", "sl23", "d8", "d16", "pgl27"} <= set(names)
    code, out, _ = _run(capsys, "catalog", "--format", "json")
    assert json.loads(out) == names


def test_build_matches_golden_and_is_byte_stable(capsys, tmp_path):
    code, first, _ = _run(capsys, "build", "--catalog", "s4", "-p", "2")
    code2, second, _ = _run(capsys, "build", "--catalog", "s4", "-p", "2")
    assert code == code2 == 0 and first == second
    assert json.loads(first) == json.loads((DATA / "s4_p2_fusion.json").read_text())
    out = tmp_path / "f.json"
    assert run(["build", "--catalog", "s4", "-p", "2", "--out", str(out)]) == 0
    assert out.read_text() == first
    assert load(out).morphism_count() == 28


def test_file_source_in_cycle_notation(capsys, tmp_path):
    path = tmp_path / "s4.json"
    path.write_text(json.dumps({"degree": 4, "generators": ["(0 1 2 3)", "(0 1)"]}))
    code, out, _ = _run(capsys, "check", "essential-rank", "--file", str(path), "-p", "2")
    assert code == 0 and out == "1\n"


def test_graph_output(capsys):
    code, out, _ = _run(capsys, "graph", "--catalog", "s4", "-p", "2")
    assert code == 0 and out.startswith("graph") and out.rstrip().endswith("}")
    # one extra F-class merge: Z(P) with the noncentral involutions of the normal V4
    assert out.count("style=dashed") == 1
    assert "[constraint=false, penwidth=1.5];" in out  # P-conjugacy, solid
    code, again, _ = _run(capsys, "graph", "--catalog", "s4", "-p", "2")
    assert again == out
    # inner fusion has no dashed edges
    _, d8, _ = _run(capsys, "graph", "--catalog", "d8", "-p", "2")
    assert "style=dashed" not in d8


def test_every_property_is_accepted(capsys):
    for prop in PROPERTIES:
        code, _, _ = _run(capsys, "check", prop, "--catalog", "a4", "-p", "2")
        assert code == 0


def test_console_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "fusionkit.cli", "check", "constrained",
                           "--catalog", "pgl27", "-p", "2"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "false\n"
