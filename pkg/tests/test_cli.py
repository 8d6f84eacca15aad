"""End-to-end command-line behavior: outputs, JSON stability, exit codes."""

from __future__ import annotations

import json
import subprocess
import sys

import pytest

from helpers import spider
from subtrees import cli
from subtrees.cli import main


def run(capsys, *argv: str) -> tuple[int, str, str]:
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


@pytest.fixture
def p4_file(tmp_path):
    f = tmp_path / "p4.txt"
    f.write_text("4\n0 1\n1 2\n2 3\n")
    return str(f)


def test_count_human(capsys, p4_file):
    code, out, _ = run(capsys, "count", p4_file)
    assert code == 0
    assert "phi: 10" in out
    assert "f: 4 6 6 4" in out
    assert "argmax: 1 2" in out


def test_count_json_shape_and_stability(capsys, p4_file):
    code, out1, _ = run(capsys, "count", p4_file, "--json")
    assert code == 0
    code, out2, _ = run(capsys, "count", p4_file, "--json")
    assert out1 == out2
    report = json.loads(out1)
    assert report["command"] == "count"
    assert report["outputs"]["phi"] == "10"
    assert report["outputs"]["f"] == ["4", "6", "6", "4"]
    assert report["outputs"]["argmax"] == [1, 2]
    assert report["timing"] is None
    assert report["version"]


def test_count_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "count", str(tmp_path / "absent.txt"))
    assert code == 2 and "error" in err


def test_count_malformed_file(capsys, tmp_path):
    f = tmp_path / "bad.txt"
    f.write_text("4\n0 1\nnope\n2 3\n")
    code, _, err = run(capsys, "count", str(f))
    assert code == 2 and "error" in err


def test_count_non_ascii_file(capsys, tmp_path):
    f = tmp_path / "weird.txt"
    f.write_bytes("4\n0 1\n1 2\n2 3 é\n".encode())
    code, _, _ = run(capsys, "count", str(f))
    assert code == 2


def test_count_structurally_invalid_file(capsys, tmp_path):
    f = tmp_path / "cycle.txt"
    f.write_text("4\n0 1\n1 2\n0 2\n")
    code, _, err = run(capsys, "count", str(f))
    assert code == 3 and "error" in err


def test_build_human(capsys):
    code, out, _ = run(capsys, "build", "--pi", "3,2,2,1,1,1")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "6"
    assert "layer_sizes: 1,3,2" in out
    assert "phi: 25" in out


def test_build_json(capsys):
    code, out, _ = run(capsys, "build", "--pi", "2,2,1,1", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["outputs"]["edges"] == [[0, 1], [0, 2], [1, 3]]
    assert report["outputs"]["phi"] == "10"


def test_build_bad_sequences(capsys):
    assert run(capsys, "build", "--pi", "2,2")[0] == 3
    assert run(capsys, "build", "--pi", "abc")[0] == 3
    assert run(capsys, "build", "--pi", "")[0] == 3


def test_verify_single_sequence(capsys):
    code, out, _ = run(capsys, "verify", "--pi", "3,2,2,1,1,1")
    assert code == 0 and "PASS" in out
    code, out, _ = run(capsys, "verify", "--pi", "3,2,2,1,1,1", "--json")
    report = json.loads(out)
    assert report["outputs"]["pass"] is True
    assert report["outputs"]["iso_classes"] == 2
    assert report["outputs"]["maximizer_count"] == 1
    assert report["outputs"]["max_phi"] == "25"


def test_verify_detects_violation(capsys, monkeypatch):
    # Substitute a non-optimal realization for the greedy construction; the
    # exhaustive check must notice and exit 4.
    monkeypatch.setattr(cli, "build_greedy_bfs", lambda pi: (spider(1, 1, 3), None))
    code, out, _ = run(capsys, "verify", "--pi", "3,2,2,1,1,1")
    assert code == 4 and "FAIL" in out


def test_verify_all_n(capsys):
    code, out, _ = run(capsys, "verify", "--all-n", "6")
    assert code == 0
    assert out.count("pi=") == 5
    assert "PASS" in out
    code, out, _ = run(capsys, "verify", "--all-n", "6", "--json")
    report = json.loads(out)
    assert report["outputs"]["pass"] is True
    assert report["outputs"]["monotonic_ok"] is True
    assert len(report["outputs"]["sequences"]) == 5


def test_verify_all_n_jobs_agree(capsys):
    _, serial, _ = run(capsys, "verify", "--all-n", "7", "--json")
    _, parallel, _ = run(capsys, "verify", "--all-n", "7", "--jobs", "2", "--json")
    assert json.loads(serial)["outputs"]["sequences"] == (
        json.loads(parallel)["outputs"]["sequences"]
    )


def test_verify_limits(capsys):
    assert run(capsys, "verify", "--all-n", "11")[0] == 5
    assert run(capsys, "verify", "--all-n", "0")[0] == 3
    eleven_path = ",".join(["2"] * 9 + ["1", "1"])
    assert run(capsys, "verify", "--pi", eleven_path)[0] == 5


def test_order_comparable(capsys):
    code, out, _ = run(capsys, "order", "--a", "2,2,2,1,1", "--b", "4,1,1,1,1", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["outputs"]["relation"] == "less"
    assert report["outputs"]["chain"] == [
        [2, 2, 2, 1, 1],
        [3, 2, 1, 1, 1],
        [4, 1, 1, 1, 1],
    ]
    assert report["outputs"]["phi_star"] == ["15", "17", "20"]


def test_order_incomparable(capsys):
    code, out, _ = run(
        capsys, "order", "--a", "4,4,1,1,1,1,1,1", "--b", "5,2,2,1,1,1,1,1", "--json"
    )
    assert code == 0
    report = json.loads(out)
    assert report["outputs"]["relation"] == "incomparable"
    assert "chain" not in report["outputs"]


def test_order_mismatches(capsys):
    assert run(capsys, "order", "--a", "2,1,1", "--b", "1,1")[0] == 3
    assert run(capsys, "order", "--a", "2,2,1,1", "--b", "2,1,1,1")[0] == 3


def test_class_maxdeg(capsys):
    code, out, _ = run(capsys, "class", "--type", "maxdeg", "--n", "7", "--k", "3")
    assert code == 0
    assert "phi: 40" in out
    assert "printed_formula" not in out
    assert "discrepancy: false" in out


def test_class_leaves_flags_published_value(capsys):
    code, out, _ = run(capsys, "class", "--type", "leaves", "--n", "7", "--k", "3", "--json")
    assert code == 0
    report = json.loads(out)
    assert report["outputs"]["phi"] == "36"
    assert report["outputs"]["printed_formula_value"] == "244"
    assert report["outputs"]["discrepancy_flag"] is True
    assert report["outputs"]["details"] == {"closed_form": 36, "q": 2, "t": 0}


def test_class_alpha_beta(capsys):
    code, out, _ = run(capsys, "class", "--type", "alpha", "--n", "5", "--k", "3")
    assert code == 0 and "phi: 17" in out and "discrepancy: false" in out
    code, out, _ = run(capsys, "class", "--type", "beta", "--n", "5", "--k", "2")
    assert code == 0 and "phi: 17" in out and "discrepancy: true" in out


def test_class_infeasible(capsys):
    assert run(capsys, "class", "--type", "maxdeg", "--n", "5", "--k", "1")[0] == 3
    assert run(capsys, "class", "--type", "leaves", "--n", "5", "--k", "9")[0] == 3


def test_class_unknown_type_rejected_by_parser(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["class", "--type", "girth", "--n", "5", "--k", "2"])
    assert exc.value.code == 2


def test_version_flag():
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "subtrees.cli", "build", "--pi", "2,1,1"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "phi: 6" in proc.stdout
