"""
Command-line front door
"""
import json

import pytest

from app.cli import EXIT_INPUT, EXIT_LIMIT, EXIT_OK, main
from app.services.oracle_service import CompareStatus


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_fc_human_report(capsys):
    code, out, _ = run(capsys, "fc", "g5", "--node", "a")
    assert code == EXIT_OK
    assert "FC(r_a): Visible (case C)" in out
    assert "J = {b, a}" in out


def test_fc_machine_report(capsys):
    code, out, _ = run(capsys, "fc", "g5", "--node", "c", "--report", "machine")
    assert code == EXIT_OK
    result = json.loads(out)
    assert result["kind"] == "NotVisible"
    assert result["case"] == "C"
    assert result["witness"] == ["a", "b"]
    assert result["J"] is None


def test_trivial_continuation_is_marked(capsys):
    _, out, _ = run(capsys, "fc", "affine_c2", "--node", "b")
    assert "(FC is <r_b>)" in out


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "g5", "--subset", "b, a, c", "--report", "machine")
    assert code == EXIT_OK
    response = json.loads(out)
    assert response["spherical"] is True
    assert response["minus_one_type"] is True
    assert [(c["type"], c["order"]) for c in response["components"]] == [("B3", 48)]

    _, out, _ = run(capsys, "classify", "g5", "--subset", "c,d")
    assert "not spherical" in out
    assert "NotFinite" in out


def test_rigidity(capsys):
    code, out, _ = run(capsys, "rigidity", "affine_a3", "--report", "machine")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["verdict"] == "ReflectionsDetermined"
    assert report["fc_trivial"] == {"a": True, "b": True, "c": True, "d": True}

    _, out, _ = run(capsys, "rigidity", "g6")
    assert "Rigidity verdict: NotApplicable" in out
    assert "some label is infinite" in out


def test_analyze(capsys):
    code, out, _ = run(capsys, "analyze", "g7", "--report", "machine")
    assert code == EXIT_OK
    report = json.loads(out)
    assert report["graph"]["nodes"] == ["a2", "a", "c", "b"]
    assert [c["case"] for c in report["odd_components"]] == ["B", "B"]
    assert report["odd_components"][0]["c3_neighbours"] == ["b"]
    assert report["oracle"] is None
    assert {r["node"]: r["kind"] for r in report["results"]}["c"] == "NotVisible"


def test_analyze_human_with_oracle(capsys):
    code, out, _ = run(capsys, "analyze", "i2_6", "--with-oracle", "--max-length", "8")
    assert code == EXIT_OK
    assert "Odd components" in out
    assert "Oracle comparison" in out
    assert out.count("MATCH") == 2


def test_oracle_fc(capsys):
    code, out, _ = run(capsys, "oracle-fc", "affine_a2", "--node", "a", "--max-length", "6", "--report", "machine")
    assert code == EXIT_OK
    row = json.loads(out)
    assert row["status"] == "MATCH"
    assert row["elements"] == ["1", "r_a"]
    assert row["predicted_size"] == 2


def test_oracle_fc_element_cap(capsys):
    code, out, err = run(
        capsys, "oracle-fc", "affine_a2", "--node", "a",
        "--max-length", "10", "--element-cap", "30", "--report", "machine",
    )
    assert code == EXIT_LIMIT
    row = json.loads(out)
    assert row["status"] == CompareStatus.PARTIAL.value
    assert row["partial"] is True
    assert "limit:" in err


def test_export_dot(capsys):
    code, out, _ = run(capsys, "export-dot", "g5")
    assert code == EXIT_OK
    assert out.startswith("graph coxeter {")
    assert '"b" -- "a" [label="4", style=dashed];' in out
    assert '"a" -- "c" [label="3", style=solid];' in out
    assert '"c" -- "d" [label="inf", style=bold];' in out


def test_invalid_graph_file(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text(json.dumps({"nodes": ["a"], "edges": [{"u": "a", "v": "z", "m": 3}]}))
    code, _, err = run(capsys, "fc", str(path), "--node", "a")
    assert code == EXIT_INPUT
    assert "unknown node 'z'" in err


def test_graph_file_that_is_not_utf8(capsys, tmp_path):
    path = tmp_path / "latin1.json"
    path.write_bytes(b'{"nodes": ["\xe9"], "edges": []}')
    code, _, err = run(capsys, "fc", str(path), "--node", "a")
    assert code == EXIT_INPUT
    assert "not UTF-8" in err


def test_unsupported_label_for_oracle(capsys, tmp_path):
    path = tmp_path / "i2_7.json"
    path.write_text(json.dumps({"nodes": ["a", "b"], "edges": [{"u": "a", "v": "b", "m": 7}]}))
    code, _, err = run(capsys, "oracle-fc", str(path), "--node", "a")
    assert code == EXIT_INPUT
    assert "Label 7 is not supported" in err
    assert "a-b" in err

    # the classifier itself accepts any label
    code, out, _ = run(capsys, "fc", str(path), "--node", "a")
    assert code == EXIT_OK
    assert "case A" in out


@pytest.mark.parametrize(
    "argv, message",
    [
        (["fc", "g5", "--node", "z"], "Unknown node 'z'"),
        (["fc", "no_such_graph", "--node", "a"], "not found"),
    ],
)
def test_input_errors(capsys, argv, message):
    code, _, err = run(capsys, *argv)
    assert code == EXIT_INPUT
    assert message in err


def test_missing_subcommand():
    with pytest.raises(SystemExit):
        main([])
