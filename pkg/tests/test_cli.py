import json

import pytest

from m2c.cli import EXIT_INPUT, EXIT_PASS, EXIT_VIOLATIONS, main


def _run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_strict_fixture_passes(capsys, instances_dir):
    code, out, _ = _run(capsys, "check", str(instances_dir / "strict.json"), "--suite", "all")
    assert code == EXIT_PASS
    assert out.rstrip().endswith("PASS")


def test_cocycle_fixture_passes_the_axioms(capsys, instances_dir):
    code, out, _ = _run(capsys, "check", str(instances_dir / "cocycle_abcd.json"), "--suite", "axioms",
                        "--model", "scalar")
    assert code == EXIT_PASS
    assert "stasheff (1, 1, 1, 1, 1) PASS" in out


def test_perturbed_fixture_reports_violations(capsys, instances_dir):
    code, out, _ = _run(capsys, "check", str(instances_dir / "perturbed.json"))
    assert code == EXIT_VIOLATIONS
    assert " FAIL  lhs=" in out
    assert out.splitlines()[-1].startswith("FAIL ")


def test_permutation_fixtures(capsys, instances_dir):
    code, out, _ = _run(capsys, "check", str(instances_dir / "permutations.json"), "--suite", "all")
    assert code == EXIT_PASS
    code, out, _ = _run(capsys, "check", str(instances_dir / "permutations_lf.json"), "--suite", "unitor")
    assert code == EXIT_VIOLATIONS
    assert "unitor_nat_f_left (flip) FAIL" in out


def test_reports_are_byte_identical(capsys, instances_dir):
    path = str(instances_dir / "perturbed.json")
    _, first, _ = _run(capsys, "check", path, "--threads", "1")
    _, second, _ = _run(capsys, "check", path, "--threads", "4")
    assert first == second


def test_json_report(capsys, instances_dir, tmp_path):
    out = tmp_path / "report.json"
    code, _, _ = _run(capsys, "check", str(instances_dir / "perturbed.json"), "--report", "json", "--out", str(out))
    assert code == EXIT_VIOLATIONS
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["summary"]["failed"] > 0
    assert data["summary"]["total"] == len(data["reports"])


def test_model_flag_must_match(capsys, instances_dir):
    code, _, err = _run(capsys, "check", str(instances_dir / "strict.json"), "--model", "scalar")
    assert code == EXIT_INPUT
    assert err.startswith("error: model")


@pytest.mark.parametrize("text", ['{"model": "scalar", ', '{"model": "scalar", "group": "Z2", "shape": 1}'])
def test_bad_input_exits_with_input_error(capsys, tmp_path, text):
    path = tmp_path / "bad.json"
    path.write_text(text, encoding="utf-8")
    code, out, err = _run(capsys, "check", str(path))
    assert code == EXIT_INPUT
    assert out == ""
    assert err.startswith("error: ")


def _malformedStrict(instances_dir, shape):
    doc = json.loads((instances_dir / "strict.json").read_text(encoding="utf-8"))
    if shape == "list-in-row":
        doc["vcomp"][0] = [["0"], "0", "0"]
    elif shape == "int-object":
        doc["objects"][1] = 7
    elif shape == "int-one-cell-end":
        doc["one_cells"]["f_a_b"] = ["a", 3]
    elif shape == "list-in-monoidal-key":
        doc["monoidal"] = {"a": [{"key": [["a"], "a", "a"], "path": "id(a)"}]}
    return json.dumps(doc)


@pytest.mark.parametrize("shape", ["list-in-row", "int-object", "int-one-cell-end", "list-in-monoidal-key"])
def test_malformed_tables_exit_with_input_error(capsys, tmp_path, instances_dir, shape):
    path = tmp_path / "bad.json"
    path.write_text(_malformedStrict(instances_dir, shape), encoding="utf-8")
    code, out, err = _run(capsys, "check", str(path))
    assert code == EXIT_INPUT
    assert out == ""
    assert err.startswith("error: ")


def test_undecodable_bytes_exit_with_input_error(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_bytes(b'{"model": "tabulated", "name": "\xff\xfe"}')
    code, _, err = _run(capsys, "check", str(path))
    assert code == EXIT_INPUT
    assert "UTF-8" in err


def test_unknown_suite(capsys, instances_dir):
    code, _, _ = _run(capsys, "check", str(instances_dir / "strict.json"), "--suite", "pentagon")
    assert code == EXIT_INPUT


def test_usage_error(capsys):
    code, _, _ = _run(capsys, "check")
    assert code == 2


#region Cocycles

@pytest.mark.parametrize("name", ["zero.json", "abcd.json", "cocycle_abcd.json"])
def test_verify_cocycles(capsys, instances_dir, name):
    code, out, _ = _run(capsys, "cocycle", "--group", "Z2", "--coefficients", "Z2", "--verify",
                        str(instances_dir / name))
    assert code == EXIT_PASS
    assert out == "cocycle: true\n"


def test_verify_rejects_a_flipped_cochain(capsys, instances_dir, tmp_path):
    doc = json.loads((instances_dir / "abcd.json").read_text(encoding="utf-8"))
    doc["omega"][0] = 1
    path = tmp_path / "flip.json"
    path.write_text(json.dumps(doc), encoding="utf-8")
    code, out, _ = _run(capsys, "cocycle", "--group", "Z2", "--coefficients", "Z2", "--verify", str(path))
    assert code == EXIT_VIOLATIONS
    assert out.startswith("cocycle: false\nfailing 5-tuples: ")


def test_verify_checks_the_group(capsys, instances_dir):
    code, _, _ = _run(capsys, "cocycle", "--group", "Z3", "--coefficients", "Z2", "--verify",
                      str(instances_dir / "zero.json"))
    assert code == EXIT_INPUT


def test_enumerate_agrees_with_stasheff(capsys):
    code, out, _ = _run(capsys, "cocycle", "--group", "Z2", "--coefficients", "Z2", "--enumerate", "--threads", "2")
    assert code == EXIT_PASS
    lines = out.splitlines()
    count = int(lines[-2].split(": ")[1])
    assert lines[-1] == f"stasheff passes: {count}"
    assert len(lines) == count + 2
    assert lines[0] == " ".join(["0"] * 16)


def test_enumeration_too_large(capsys):
    code, _, err = _run(capsys, "cocycle", "--group", "Z3", "--coefficients", "Z3", "--enumerate")
    assert code == EXIT_INPUT
    assert "limit" in err

#endregion


#region Diagrams

def test_export_diagram(capsys, instances_dir):
    code, out, _ = _run(capsys, "export-diagram", str(instances_dir / "strict.json"), "--condition", "stasheff",
                        "--indices", "a,b,I,a,b")
    assert code == EXIT_PASS
    assert out.startswith('digraph "stasheff(a,b,I,a,b)" {')
    assert '"hemisphere lhs"' in out and '"hemisphere rhs"' in out
    assert "lhs = 0" in out and "rhs = 0" in out


def test_export_diagram_draws_faces_as_edges(capsys, instances_dir):
    _, out, _ = _run(capsys, "export-diagram", str(instances_dir / "strict.json"), "--condition", "stasheff",
                     "--indices", "a,b,I,a,b")
    edges = [line for line in out.splitlines() if " -> " in line]
    assert sum("style=solid" in e for e in edges) == 4
    assert sum("style=dashed" in e for e in edges) == 5
    assert any("lhs2 π(A,B,CD,E) = 0" in e for e in edges)
    assert any("rhs2 A " in e and "π(B,C,D,E) = 0" in e for e in edges)
    vertices = [line.strip() for line in out.splitlines() if line.strip().endswith('";')]
    assert vertices
    assert all(" -> " not in v and "hemisphere" not in v for v in vertices)


def test_export_diagram_values_match_the_failing_witness(capsys, instances_dir):
    _, report, _ = _run(capsys, "check", str(instances_dir / "perturbed.json"), "--report", "json")
    failed = next(r for r in json.loads(report)["reports"]
                  if r["status"] == "FAIL" and r["witness"]["lhs"] != "error")
    code, out, _ = _run(capsys, "export-diagram", str(instances_dir / "perturbed.json"),
                        "--condition", failed["condition"], "--indices", " ".join(failed["indices"]))
    assert code == EXIT_PASS
    assert f"lhs = {failed['witness']['lhs']}" in out
    assert f"rhs = {failed['witness']['rhs']}" in out


def test_export_diagram_bad_indices(capsys, instances_dir):
    code, _, _ = _run(capsys, "export-diagram", str(instances_dir / "strict.json"), "--condition", "stasheff",
                      "--indices", "a,b")
    assert code == EXIT_INPUT

#endregion
