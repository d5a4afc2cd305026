import json
import subprocess
import sys

import pytest

from hivebr import cli, gthive
from hivebr.branching import BranchingInstance, branching_map
from hivebr.tableaux import make_skew_tableau


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def final_file(tmp_path, final_T):
    p = tmp_path / "T.json"
    p.write_text(json.dumps(final_T.to_json()))
    return str(p)


def test_lr_count(capsys):
    code, out, _ = run(capsys, "lr-count", "--nu", "5,3,1", "--mu", "3,1", "--lambda", "3,1,1")
    assert code == 0 and out.strip() == "tableaux=1 hives=1"
    code, out, _ = run(capsys, "lr-count", "--nu", "3,2,1", "--mu", "2,1",
                       "--lambda", "2,1", "--json")
    assert code == 0 and json.loads(out)["tableaux"] == json.loads(out)["hives"] == 2


def test_lr_count_missing_argument(capsys):
    code, _, err = run(capsys, "lr-count", "--nu", "2")
    assert code == 2 and "--mu" in err


def test_branch(capsys):
    code, out, _ = run(capsys, "branch", "--n", "2", "--nu", "1,1", "--mu", "")
    assert code == 0
    assert out.strip() == "sundaram=1 kwon=1 flagged_hive=1 character=1"
    code, out, _ = run(capsys, "branch", "--n", "2", "--nu", "2,1", "--mu", "1",
                       "--model", "kwon", "--json")
    assert code == 0 and json.loads(out)["models"] == {"kwon": 1}


def test_branch_invalid_instance(capsys):
    code, _, err = run(capsys, "branch", "--n", "1", "--nu", "1,1", "--mu", "")
    assert code == 2 and "nu" in err


def test_bad_partition_text():
    with pytest.raises(SystemExit) as exc:
        cli.main(["branch", "--n", "2", "--nu", "1,2", "--mu", ""])
    assert exc.value.code == 2


def test_map_golden(capsys, final_file):
    args = ["map", "--n", "3", "--nu", "5,4,3,3", "--mu", "2,1,1", "--lambda", "4,4,2,1",
            "--input", final_file]
    code, out, _ = run(capsys, *args, "--json")
    assert code == 0 and json.loads(out) == {"output": {"inner": [], "rows": [[1, 4], [3], [4]]}}
    code, out, _ = run(capsys, *args, "--trace", "--json")
    js = json.loads(out)
    assert js["hive"]["rows_bottom_up"][3] == [4, 8, 11, 12]
    assert js["ne_pattern"]["rows_top_down"][-1] == [2, 1, 1, 0, 0, 0]
    code, out, _ = run(capsys, *args, "--trace")
    assert code == 0 and "companion:" in out and "P-hat:" in out


def test_map_json_matches_library(capsys, final_file, final_T):
    code, out, _ = run(capsys, "map", "--n", "3", "--nu", "5,4,3,3", "--mu", "2,1,1",
                       "--lambda", "4,4,2,1", "--input", final_file, "--trace", "--json")
    tr = branching_map(BranchingInstance(3, (5, 4, 3, 3), (2, 1, 1)), (4, 4, 2, 1), final_T)
    assert json.loads(out) == json.loads(json.dumps(tr.to_json()))


def test_map_not_in_domain(capsys, tmp_path):
    bad = make_skew_tableau([5, 3, 2, 1], [3, 1, 1], [[1, 1], [1, 2], [3], [1]])
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(bad.to_json()))
    code, _, err = run(capsys, "map", "--n", "3", "--nu", "5,3,2,1", "--mu", "3,1,1",
                       "--lambda", "4,1,1", "--input", str(p))
    assert code == 2 and "Sundaram" in err


def test_map_unreadable_input(capsys, tmp_path):
    code, _, err = run(capsys, "map", "--n", "2", "--nu", "1", "--mu", "", "--lambda", "1",
                       "--input", str(tmp_path / "missing.json"))
    assert code == 2 and "cannot read" in err


def test_verify_single_and_sweep(capsys):
    code, out, _ = run(capsys, "verify", "--n", "3", "--nu", "5,4,3,3", "--mu", "2,1,1")
    assert code == 0 and "bijection_ok=True" in out
    code, out, _ = run(capsys, "verify", "--n", "2", "--max-weight", "5")
    assert code == 0 and out.strip().endswith("PASS")
    code, out, _ = run(capsys, "verify", "--n", "2", "--max-weight", "6", "--sample", "10",
                       "--seed", "3", "--json")
    assert code == 0 and json.loads(out)["instances"] == 10


def test_verify_is_deterministic(capsys):
    outs = [run(capsys, "verify", "--n", "2", "--max-weight", "6", "--sample", "12",
                "--seed", "7", "--json")[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_verify_parallel(capsys):
    code, out, _ = run(capsys, "verify", "--n", "2", "--max-weight", "6", "--jobs", "2", "--json")
    serial = run(capsys, "verify", "--n", "2", "--max-weight", "6", "--json")[1]
    assert code == 0 and json.loads(out)["reports"] == json.loads(serial)["reports"]


def test_render(capsys, tmp_path, final_hive_rows):
    p = tmp_path / "h.json"
    p.write_text(json.dumps({"m": 6, "rows_bottom_up": final_hive_rows}))
    code, out, _ = run(capsys, "render", "--input", str(p))
    assert code == 0 and out.splitlines()[0].strip() == "0"
    code, out, _ = run(capsys, "render", "--input", str(p), "--format", "latex")
    assert code == 0 and out.startswith("\\begin{tikzpicture}")
    q = tmp_path / "x.json"
    q.write_text(json.dumps({"foo": 1}))
    code, _, err = run(capsys, "render", "--input", str(q))
    assert code == 2 and "kind" in err


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "--no-sweep")
    assert code == 0 and "FAIL" not in out
    code, out, _ = run(capsys, "selftest", "--json")
    assert code == 0 and json.loads(out)["ok"]


def test_selftest_catches_mutation(capsys, monkeypatch):
    real = gthive.hive_embed

    def broken(R, lam, m):
        h = real(R, lam, m)
        rows = [list(r) for r in h.rows_bottom_up]
        rows[1][1] += 1
        return gthive.Hive(m, tuple(map(tuple, rows)))

    monkeypatch.setattr(gthive, "hive_embed", broken)
    code, out, err = run(capsys, "selftest", "--no-sweep")
    assert code == 3 and "first failure: phi hive" in err


def test_selftest_catches_flag_mutation(capsys, monkeypatch):
    monkeypatch.setattr(gthive, "is_flagged", lambda h, f: False)
    code, _, err = run(capsys, "selftest", "--no-sweep")
    assert code == 3 and "final hive flagged" in err


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "hivebr", "lr-count", "--nu", "2,1",
                          "--mu", "1", "--lambda", "1,1"], capture_output=True, text=True)
    assert out.returncode == 0 and out.stdout.strip() == "tableaux=1 hives=1"


def test_log_env(capsys, monkeypatch):
    monkeypatch.setenv("HIVEBR_LOG", "debug")
    code, _, _ = run(capsys, "verify", "--n", "2", "--max-weight", "2")
    assert code == 0
