import json
from importlib import resources

import jsonschema
import pytest

from casolag.cli import main

REMARK = {"alpha": 7, "G": [1, 2, 5],
          "R": {"1": "x-1", "2": "x^2+1", "5": "x^5+x^4+x^3+1"}}
CLOSING = {"alpha": 1, "G": [1, 2, 4],
           "R": {"1": "x+2", "2": "x^2", "4": "x^4+1"}}
KRALL = {"preset": "krall", "alpha": 2, "m": 2, "a": [1, 1]}


@pytest.fixture
def cfg(tmp_path):
    def write(obj, name="family.json"):
        path = tmp_path / name
        path.write_text(json.dumps(obj))
        return str(path)
    return write


def load_schema(name):
    text = resources.files("casolag").joinpath(f"schemas/{name}").read_text()
    return json.loads(text)


def report_schema(command):
    schema = load_schema("reports.json")
    return {"definitions": schema["definitions"],
            "$ref": f"#/definitions/{command}"}


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_family_schema_accepts_both_forms():
    schema = load_schema("family.json")
    jsonschema.validate(REMARK, schema)
    jsonschema.validate(KRALL, schema)
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate({"alpha": 7}, schema)


def test_check_pass(cfg, capsys):
    code, out, _ = run(capsys, "check", "--config", cfg(REMARK))
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, report_schema("check"))
    assert payload["admissible"] is True
    assert payload["omega"] == "-12*x^5+144*x^4-628*x^3+1296*x^2-1280*x+476"


def test_check_fail_exit_code(cfg, capsys):
    bad = {"alpha": "22/7", "G": [2, 3], "R": {"2": "x^2", "3": "x^3"}}
    code, out, _ = run(capsys, "check", "--config", cfg(bad))
    assert code == 2
    payload = json.loads(out)
    assert payload["admissible"] is False
    assert payload["fail_n"] == 1


def test_qpoly(cfg, capsys):
    code, out, _ = run(capsys, "qpoly", "--config", cfg(REMARK), "--nmax", "3")
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, report_schema("qpoly"))
    assert payload["polys"][0]["q"] == "476"
    assert len(payload["polys"]) == 4


def test_qpoly_csv(cfg, capsys):
    code, out, _ = run(capsys, "qpoly", "--config", cfg(REMARK),
                       "--nmax", "2", "--format", "csv")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "n,q"
    assert lines[1] == "0,476"


def test_ortho_variant_selection(cfg, capsys):
    code, out, _ = run(capsys, "ortho", "--config", cfg(REMARK), "--nmax", "5")
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, report_schema("ortho"))
    assert payload["variant"] == "generic"
    code, out, _ = run(capsys, "ortho", "--config", cfg(CLOSING), "--nmax", "5")
    payload = json.loads(out)
    assert payload["variant"] == "xi"
    assert payload["passed"] is True


def test_ortho_rejects_unusable_alpha(cfg, capsys):
    bad = {"alpha": -1, "G": [1], "R": {"1": "x+3"}}
    code, out, err = run(capsys, "ortho", "--config", cfg(bad))
    assert code == 1
    assert out == ""
    assert "error" in json.loads(err)


def test_recur(cfg, capsys):
    code, out, _ = run(capsys, "recur", "--config", cfg(REMARK),
                       "--Q", "x^4+16*x^3", "--nmax", "8")
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, report_schema("recur"))
    assert payload["band"] == 4
    assert payload["band_ok"] is True


def test_recur_band_override_fails(cfg, capsys):
    code, out, _ = run(capsys, "recur", "--config", cfg(REMARK),
                       "--Q", "x^4+16*x^3", "--nmax", "8", "--band", "3")
    assert code == 2
    assert json.loads(out)["band_ok"] is False


def test_recur_requires_q(cfg, capsys):
    code, _, err = run(capsys, "recur", "--config", cfg(REMARK))
    assert code == 1
    assert "Q" in json.loads(err)["error"]["message"]


def test_three_term(cfg, capsys):
    code, out, _ = run(capsys, "three-term", "--config", cfg(KRALL),
                       "--nmax", "10")
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, report_schema("three-term"))
    assert payload["passed"] is True
    code, out, _ = run(capsys, "three-term", "--config", cfg(REMARK),
                       "--nmax", "10")
    assert code == 2


def test_probe(cfg, capsys):
    code, out, _ = run(capsys, "probe", "--config", cfg(CLOSING), "--deg", "3")
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, report_schema("probe"))
    assert payload["basis"] == ["1", "x^3+6/7*x^2"]
    assert payload["reverified"] is True


def test_preset_expansion(cfg, capsys):
    code, out, _ = run(capsys, "preset", "--config", cfg(KRALL))
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, report_schema("preset"))
    assert payload["family"]["R"]["2"] == "1/2*x^2+3/2*x+2"


def test_output_deterministic(cfg, capsys):
    path = cfg(REMARK)
    _, out1, _ = run(capsys, "qpoly", "--config", path, "--nmax", "6")
    _, out2, _ = run(capsys, "qpoly", "--config", path, "--nmax", "6")
    assert out1 == out2


def test_out_flag_writes_file(cfg, capsys, tmp_path):
    dest = tmp_path / "report.json"
    code, out, _ = run(capsys, "check", "--config", cfg(REMARK),
                       "--out", str(dest))
    assert code == 0
    assert out == ""
    assert json.loads(dest.read_text())["admissible"] is True


def test_latex_emitter_structure(cfg, capsys):
    code, out, _ = run(capsys, "three-term", "--config", cfg(KRALL),
                       "--nmax", "4", "--format", "latex")
    assert code == 0
    assert out.startswith("\\documentclass")
    assert out.rstrip().endswith("\\end{document}")
    assert out.count("\\begin{tabular}") == 1


def test_missing_config(capsys):
    code, out, err = run(capsys, "check", "--config", "/nope/missing.json")
    assert code == 1
    assert json.loads(err)["error"]["kind"] == "config"


def test_malformed_config(cfg, capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, _, err = run(capsys, "check", "--config", str(path))
    assert code == 1
    assert json.loads(err)["error"]["kind"] == "config"


def test_bad_polynomial_in_config(cfg, capsys):
    bad = {"alpha": 7, "G": [1], "R": {"1": "x/2"}}
    code, _, err = run(capsys, "check", "--config", cfg(bad))
    assert code == 1


def test_bad_q_flag(cfg, capsys):
    code, _, err = run(capsys, "recur", "--config", cfg(REMARK), "--Q", "x^^2")
    assert code == 1
    assert "Q" in json.loads(err)["error"]["message"]


def test_unknown_command_usage_error(capsys):
    code = main(["frobnicate"])
    capsys.readouterr()
    assert code == 1
