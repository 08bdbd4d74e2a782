import json

import numpy as np
import pytest

from pinchgt import (
    chain_trace,
    construct_hermitian,
    load_matrix,
    matrix_digest,
    random_pd,
    write_matrix,
)
from pinchgt.cli import main


@pytest.fixture
def pair(tmp_path):
    a = construct_hermitian(np.diag([1.0, 2.0]))
    b = construct_hermitian(np.array([[2.0, 1.0], [1.0, 2.0]]))
    pa, pb = tmp_path / "a.json", tmp_path / "b.json"
    write_matrix(pa, a)
    write_matrix(pb, b)
    return str(pa), str(pb), a, b


def test_roundtrip_matrix_files(tmp_path):
    a = random_pd(4, 3)
    p = tmp_path / "m.json"
    write_matrix(p, a)
    back = load_matrix(p)
    np.testing.assert_allclose(back.mat, a.mat, atol=1e-15)


def test_check_passes(pair, capsys):
    pa, pb, _, _ = pair
    assert main(["check", pa, pb]) == 0
    cert = json.loads(capsys.readouterr().out)
    assert cert["verdict"] == "pass"
    assert cert["inputs"]["matrix_a"]["dim"] == 2
    assert cert["inputs"]["matrix_a"]["sha256"] == matrix_digest(pa)
    assert cert["inputs"]["policy"]["herm_tol"] == 1e-10
    names = [c["name"] for c in cert["checks"]]
    assert names == [
        "golden_thompson_gap",
        "pinch_commutes_with_base",
        "pinch_preserves_weighted_trace",
        "pinch_dominates_scaled_operand",
        "pinch_equals_dephasing_mixture",
        "finite_power_certificate",
    ]
    assert all(c["passed"] for c in cert["checks"])
    for c in cert["checks"]:
        assert c["residual"] <= c["tolerance"]
    assert cert["golden_thompson"]["gap"] >= 0.0


def test_check_commuting_pair_adds_equality_check(pair, capsys):
    pa, _, _, _ = pair
    assert main(["check", pa, pa]) == 0
    cert = json.loads(capsys.readouterr().out)
    names = [c["name"] for c in cert["checks"]]
    assert "commuting_equality" in names
    assert cert["golden_thompson"]["commuting"] is True


def test_check_out_file(pair, tmp_path, capsys):
    pa, pb, _, _ = pair
    out = tmp_path / "cert.json"
    assert main(["check", pa, pb, "--out", str(out)]) == 0
    assert capsys.readouterr().out == ""
    cert = json.loads(out.read_text())
    assert cert["verdict"] == "pass"


def test_chain_csv(pair, capsys):
    pa, pb, a, b = pair
    assert main(["chain", pa, pb, "--m", "1,2,3"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0] == "m,s0,s0_tensorized,t_pinched,target,bound,gap_bound"
    assert len(lines) == 4
    ct = chain_trace(a, b, 2)
    cells = lines[2].split(",")
    assert cells[0] == "2"
    assert cells[1] == format(ct.s0, ".12g")
    assert cells[3] == format(ct.t_pinched, ".12g")
    assert cells[5] == format(ct.bound, ".12g")


def test_chain_cap_leaves_columns_empty(pair, capsys):
    pa, pb, _, _ = pair
    assert main(["chain", pa, pb, "--m", "1,2,3", "--cap", "4"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    row3 = lines[3].split(",")
    assert row3[0] == "3"
    assert row3[1] != "" and row3[4] != ""  # combinatorial columns always present
    assert row3[2] == "" and row3[3] == ""  # materialized columns skipped


def test_chain_out_file(pair, tmp_path):
    pa, pb, _, _ = pair
    out = tmp_path / "rows.csv"
    assert main(["chain", pa, pb, "--m", "1,2", "--out", str(out)]) == 0
    assert out.read_text().startswith("m,s0,")


def test_chain_violation_exits_1(tmp_path, capsys):
    """A deliberately coarse cluster tolerance merges distinct eigenvalues,
    which breaks the pinched-collapse identity and must be reported."""
    pa, pb = tmp_path / "ga.json", tmp_path / "gb.json"
    write_matrix(pa, random_pd(3, 101))
    write_matrix(pb, random_pd(3, 202))
    code = main(["chain", str(pa), str(pb), "--m", "1,2", "--tol-cluster", "0.05"])
    captured = capsys.readouterr()
    assert code == 1
    assert "violation:" in captured.err
    assert captured.out.startswith("m,s0,")  # the CSV is still emitted


def test_random_suite_deterministic(capsys):
    args = ["random-suite", "--dims", "2..4", "--trials", "4", "--seed", "11"]
    assert main(args) == 0
    first = capsys.readouterr().out
    assert main(args) == 0
    assert capsys.readouterr().out == first
    lines = first.strip().splitlines()
    assert lines[0] == "dim 2: 4 trials, 0 violations"
    assert lines[-1] == "total: 12 trials, 0 violations"


def test_random_suite_dim_list(capsys):
    assert main(["random-suite", "--dims", "2,5", "--trials", "2", "--seed", "3"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert lines[0].startswith("dim 2:") and lines[1].startswith("dim 5:")


def test_non_hermitian_input_exits_2(tmp_path, pair, capsys):
    _, pb, _, _ = pair
    bad = tmp_path / "nh.json"
    bad.write_text(json.dumps({"dim": 2, "re": [[1.0, 1.0], [0.0, 2.0]]}))
    assert main(["check", str(bad), pb]) == 2
    assert "not Hermitian" in capsys.readouterr().err
    assert main(["chain", str(bad), pb, "--m", "1"]) == 2


def test_loose_hermiticity_tolerance_admits(tmp_path, pair):
    _, pb, _, _ = pair
    near = tmp_path / "near.json"
    near.write_text(json.dumps({"dim": 2, "re": [[1.0, 0.5 + 1e-9], [0.5, 2.0]]}))
    assert main(["check", str(near), pb, "--out", str(tmp_path / "c.json")]) == 2
    assert main(
        ["check", str(near), pb, "--tol-herm", "1e-6", "--out", str(tmp_path / "c.json")]
    ) == 0


def test_not_positive_definite_chain_exits_2(tmp_path, pair, capsys):
    _, pb, _, _ = pair
    ind = tmp_path / "ind.json"
    write_matrix(ind, construct_hermitian(np.diag([1.0, -1.0])))
    assert main(["chain", str(ind), pb, "--m", "1"]) == 2
    assert "not positive definite" in capsys.readouterr().err


def test_bad_inputs_exit_2(tmp_path, pair, capsys):
    pa, pb, _, _ = pair
    assert main(["check", str(tmp_path / "missing.json"), pb]) == 2
    garbled = tmp_path / "garbled.json"
    garbled.write_text("{not json")
    assert main(["check", str(garbled), pb]) == 2
    noim = tmp_path / "shape.json"
    noim.write_text(json.dumps({"dim": 2, "re": [[1.0, 0.0]]}))
    assert main(["check", str(noim), pb]) == 2
    assert main(["chain", pa, pb, "--m", "3,2"]) == 2
    assert main(["chain", pa, pb, "--m", "1,x"]) == 2
    assert main(["chain", pa, pb, "--m", "0"]) == 2
    assert main(["random-suite", "--trials", "0"]) == 2
    assert main(["random-suite", "--dims", "5..2"]) == 2
    assert main(["random-suite", "--dims", "a..b"]) == 2
    capsys.readouterr()


def test_argparse_failures_exit_2(capsys):
    assert main(["no-such-command"]) == 2
    assert main([]) == 2
    capsys.readouterr()


def test_gt_violation_plumbing(pair, capsys, monkeypatch):
    """Exit code 1 is wired to failing checks (forced via a stubbed report)."""
    import pinchgt.cli as cli

    class FakeReport:
        lhs, rhs, gap, holds, commuting = 2.0, 1.0, -1.0, False, False

    monkeypatch.setattr(cli, "gt_check", lambda a, b, policy: FakeReport())
    pa, pb, _, _ = pair
    assert main(["check", pa, pb]) == 1
    cert = json.loads(capsys.readouterr().out)
    assert cert["verdict"] == "violation"
    assert not cert["checks"][0]["passed"]
