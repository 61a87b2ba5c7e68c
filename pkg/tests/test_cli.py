import json
import subprocess
import sys

import pytest

from gbgrank.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_rank(capsys):
    code, out, _ = run(capsys, "rank", "--t", "3", "--partition", "[10,7,4,3]")
    assert code == 0
    assert "(8,8,8)" in out and "integer k=0" in out and "(4,1,2)" in out


def test_rank_json_omega_class(capsys):
    code, out, _ = run(capsys, "rank", "--t", "3", "--partition", "[3,1]", "--json")
    data = json.loads(out)
    assert data["r"] == [1, 1, 2] and data["canon"] == [-1, -1]
    assert data["integer"] is None and data["k_omega_j"] == [1, 2]


def test_rank_rejects_composite(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["rank", "--t", "4", "--partition", "[1]"])
    assert exc.value.code == 2
    assert "prime" in capsys.readouterr().err


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "--t", "3", "--partition", "[10,7,4,3]", "--json")
    assert code == 0
    data = json.loads(out)
    assert data["core"] == "[]"
    assert data["quotient"] == ["[1,1,1,1]", "[1]", "[2,1]"]
    assert data["norm_identity"] is True


def test_decompose_text(capsys):
    code, out, _ = run(capsys, "decompose", "--t", "2", "--partition", "[5,3,1]")
    assert code == 0 and "ok" in out


def test_core(capsys):
    code, out, _ = run(capsys, "core", "--t", "2", "--partition", "[3,1,1]")
    assert code == 0 and out.strip() == "[1]"


def test_genfun(capsys):
    code, out, _ = run(capsys, "genfun", "--theorem", "2.1", "--t", "2", "--N", "1", "--nu", "0", "--k", "0", "--order", "6", "--json")
    assert code == 0
    assert json.loads(out) == {"order": 6, "coeffs": [1, 0, 2, 0, 3, 0, 4]}
    code, out, _ = run(capsys, "genfun", "--theorem", "2.2", "--t", "2", "--N", "1", "--nu", "0", "--k", "0", "--order", "8")
    assert out.strip() == "1 + q^4 + O(q^9)"


def test_verify_single_cell(capsys, tmp_path):
    code, out, err = run(capsys, "verify", "--theorem", "2.1", "--t", "3", "--N", "2", "--nu", "1", "--k", "-1",
                         "--order", "30", "--csv", str(tmp_path / "r.csv"))
    assert code == 0
    assert out.strip().endswith("ok")
    assert "1/1 cells matched" in err
    assert (tmp_path / "r.csv").read_text().splitlines()[0].startswith("formula,")


def test_verify_config_with_plots(capsys, tmp_path):
    cfg = tmp_path / "grid.json"
    cfg.write_text(json.dumps({"order": 15, "grids": [
        {"formula": "2.3", "t": 3, "N": [0, 1], "nu": "all", "k": "-1..1"},
        {"formula": "4.1", "t": 3, "N": 1, "nu": 1, "k": 1, "j": "all"},
    ]}))
    plots = tmp_path / "plots"
    code, out, _ = run(capsys, "verify", "--config", str(cfg), "--json", "--jsonl", str(tmp_path / "r.jsonl"),
                       "--plot-dir", str(plots))
    assert code == 0
    lines = [json.loads(x) for x in out.splitlines()]
    assert len(lines) == 2 * 3 * 3 + 2 and all(x["matched"] for x in lines)
    assert (plots / "grid_status.png").stat().st_size > 0
    assert len(list(plots.glob("coeffs_*.png"))) == 1


def test_verify_needs_cell_or_config():
    with pytest.raises(SystemExit):
        main(["verify", "--theorem", "2.1"])


def test_verify_empty_config(capsys, tmp_path):
    cfg = tmp_path / "empty.json"
    cfg.write_text("{}")
    code, out, _ = run(capsys, "verify", "--config", str(cfg))
    assert code == 0 and out == ""


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "gbgrank", "core", "--t", "3", "--partition", "[2,1]"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == "[]"
