import json
import subprocess
import sys

import pytest

from abelcurves.cli import main
from abelcurves.equation import load_equation
from abelcurves.report import analyze, dumps, reverify_report, to_text
from test_curves import E2, E4

E2_DOC = {"ring": "poly-rational", "A": "t^5+3*t^3+2*t", "B": "-(2*t^3+5*t)", "C": "t"}
E4_DOC = {"ring": "trig", "A": "25/4*sin(t)+5/2*sin(2t)+1/4*sin(3t)",
          "B": "-(sin(2t)+4*sin(t))", "C": "sin(t)"}


@pytest.fixture
def files(tmp_path):
    out = {}
    for name, doc in (("e2", E2_DOC), ("e4", E4_DOC),
                      ("bad", {"ring": "poly-rational", "A": "t^2 +* 1", "B": "t", "C": "1"}),
                      ("scope", {"ring": "poly-rational", "A": "0", "B": "t", "C": "1"})):
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(doc))
        out[name] = str(path)
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    out["broken"] = str(broken)
    return out


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_analyze_e2(files, capsys):
    code, out = run(capsys, "analyze", files["e2"])
    assert code == 0
    rep = json.loads(out.out)
    assert len(rep["curves"]) == 2
    assert (rep["bound"]["case"], rep["bound"]["value"], rep["bound"]["threshold"]) == ("b21", 11, 10)
    assert rep["bound"]["audit"]["status"] == "pass"
    assert rep["darboux"]["found"] is False
    assert rep["parameterization"][0]["s"] == "t"


def test_classify_e4(files, capsys):
    code, out = run(capsys, "classify", files["e4"])
    assert code == 0
    assert json.loads(out.out)["bound"]["case"] == "b22"
    assert json.loads(out.out)["bound"]["value"] == 12


@pytest.mark.parametrize("name, code", [("bad", 2), ("broken", 2), ("scope", 3)])
def test_exit_codes(files, capsys, name, code):
    got, out = run(capsys, "find", files[name])
    assert got == code and out.err


def test_missing_file(capsys, tmp_path):
    assert run(capsys, "find", str(tmp_path / "nope.json"))[0] == 2


def test_generate_then_find(tmp_path, capsys):
    target = tmp_path / "out.json"
    code, _ = run(capsys, "generate", "--mode", "pair", "--seed", "7", "-o", str(target))
    assert code == 0
    truth = json.loads((tmp_path / "out.truth.json").read_text())
    code, out = run(capsys, "find", str(target))
    found = {c["expr"] for c in json.loads(out.out)["curves"]}
    assert code == 0 and {c["expr"] for c in truth["curves"]} <= found


def test_verify_and_poincare(files, capsys, tmp_path):
    code, out = run(capsys, "verify", files["e4"], "--curve", "cos(t)+2")
    v = json.loads(out.out)["numeric"]["verify"]
    assert code == 0 and v["invariant"] and v["numeric_residual"] < 1e-9
    csv_path = tmp_path / "g.csv"
    code, out = run(capsys, "poincare", files["e4"], "--x0", "0.3333333333333333",
                    "--grid", "-0.2", "0.2", "5", "--csv", str(csv_path))
    p = json.loads(out.out)["numeric"]["poincare"]
    assert code == 0 and abs(p["displacement"]) < 1e-8
    assert len(csv_path.read_text().splitlines()) == 6


def test_text_format_and_report_file(files, capsys, tmp_path):
    rpath = tmp_path / "r.json"
    code, out = run(capsys, "darboux", files["e2"], "--format", "text", "--report", str(rpath))
    assert code == 0 and "darboux: no certificate" in out.out
    assert json.loads(rpath.read_text())["darboux"]["found"] is False


def test_deterministic_output(files, capsys):
    first = run(capsys, "analyze", files["e4"], "--jobs", "3")[1].out
    second = run(capsys, "analyze", files["e4"])[1].out
    assert first == second


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "abelcurves", "classify", files["e2"]],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and '"b21"' in proc.stdout


def test_report_reload_reverify():
    for eq in (E2, E4):
        rep = analyze(eq)
        again, curves = reverify_report(json.loads(dumps(rep)))
        assert again == eq and len(curves) == len(rep["curves"])
        assert "invariant curves: 2" in to_text(rep)


def test_tampered_report_rejected():
    from abelcurves.errors import InternalInconsistency

    rep = json.loads(dumps(analyze(E2, numeric=False)))
    rep["curves"][0]["base"]["coeffs"] = ["3", "0", "1"]
    with pytest.raises(InternalInconsistency):
        reverify_report(rep)
