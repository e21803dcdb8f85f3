import json

import pytest

from spinbranch.cli import main
from spinbranch.partitions import Char, enumerate_rpp


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate_plain(capsys):
    code, out, _ = run(capsys, "enumerate", "--p", "3", "--n", "5")
    assert code == 0
    assert out.splitlines() == ["4,1", "3,2"]


def test_enumerate_json_roundtrip(capsys):
    code, out, _ = run(capsys, "enumerate", "--p", "5", "--n", "9", "--json")
    rows = [json.loads(line) for line in out.splitlines()]
    assert [r["partition"] for r in rows] == [str(lam) for lam in enumerate_rpp(Char(5), 9)]
    assert all(r["p"] == "5" and r["n"] == "9" for r in rows)


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--p", "5", "--lambda", "3,2,1")
    data = json.loads(out)
    assert code == 0
    assert data["js"] == "JS(0)" and data["eps"] == [1, 0, 0]
    assert data["labels"] == ["beta"]
    assert data["type"] == "Q"
    assert data["dim_lower_bound"] == "8"


def test_classify_not_restricted(capsys):
    code, _, err = run(capsys, "classify", "--p", "5", "--lambda", "7")
    assert code == 2 and "restricted" in err


def test_dims(capsys):
    code, out, _ = run(capsys, "dims", "--p", "5", "--from", "12", "--to", "13")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(rows) == 2
    assert rows[0]["fstar_n"] == "1280"


def test_schur(capsys):
    code, out, _ = run(capsys, "schur", "--lambda", "11,2")
    data = json.loads(out)
    assert data["schur_dim"] == "1728" and data["super_dim"] == "3456"


def test_dimlb(capsys):
    code, out, _ = run(capsys, "dimlb", "--p", "0", "--lambda", "11,2")
    assert json.loads(out)["dim_lower_bound"] == "3456"


def test_crystal_dot(capsys, tmp_path):
    path = tmp_path / "g.dot"
    code, out, _ = run(capsys, "crystal", "--p", "3", "--nmax", "5", "--dot", str(path))
    assert code == 0
    assert json.loads(out)["level_sizes"] == ["1", "1", "1", "1", "1", "2"]
    assert path.read_text().startswith("digraph")


def test_verify_pass_and_fail(capsys):
    code, out, _ = run(capsys, "verify", "TStem", "--p", "3", "--from", "1", "--to", "12")
    assert code == 0 and out.startswith("PASS")
    code, out, _ = run(capsys, "verify", "LPhillips3_14", "--p", "5", "--from", "5", "--to", "12", "--json")
    assert code == 1 and json.loads(out)["pass"] is False


def test_verify_unknown(capsys):
    code, _, err = run(capsys, "verify", "Nope", "--p", "3", "--from", "1", "--to", "5")
    assert code == 2 and "unknown" in err


def test_check_main(capsys):
    code, out, _ = run(capsys, "check-main", "--from", "12", "--to", "16", "--threads", "2")
    assert code == 0 and json.loads(out)["pass"] is True


def test_list_lemmas(capsys):
    code, out, _ = run(capsys, "list-lemmas")
    assert code == 0 and out.split()[0] == "TStem" and "MainThm_char0" in out.split()


@pytest.mark.parametrize("argv", [
    ["enumerate", "--p", "2", "--n", "5"],
    ["enumerate", "--p", "9", "--n", "5"],
    ["classify", "--p", "5", "--lambda", "1,2"],
    ["enumerate", "--p", "5", "--n", "-1"],
    ["verify", "TStem", "--p", "5", "--from", "1", "--to", "5", "--threads", "0"],
])
def test_usage_errors_exit_two(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2
