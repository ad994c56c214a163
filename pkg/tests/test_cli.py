import csv
import io
import json

import pytest

from weingarten import cli
from weingarten.coeffring import parse


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv("WG_CACHE_DIR", str(tmp_path / "cache"))
    yield


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_table_orthogonal_n2_symbolic_json(capsys):
    code, out, _ = run_cli(
        capsys, "table", "--group", "orthogonal", "--n", "2", "--tau", "symbolic",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["group"] == "orthogonal"
    assert payload["weingarten"][0][1] == "(-1)/(t^3 + t^2 - 2*t)"
    assert payload["gram"][0][0] == "t^2"
    assert payload["excluded"] == []


def test_wgfn_trivial(capsys):
    code, out, _ = run_cli(
        capsys, "wgfn", "--group", "unitary", "--cycle-type", "[1]", "--tau", "5"
    )
    assert code == 0
    assert out.strip() == "1/5"


def test_wgfn_symbolic(capsys):
    code, out, _ = run_cli(
        capsys, "wgfn", "--group", "unitary", "--cycle-type", "[2]", "--tau", "symbolic"
    )
    assert code == 0
    assert out.strip() == "(-1)/(t^3 - t)"


def test_csv_and_json_encode_same_matrix(capsys):
    code, json_out, _ = run_cli(
        capsys, "table", "--group", "unitary", "--n", "3", "--tau", "symbolic",
        "--format", "json",
    )
    assert code == 0
    code, csv_out, _ = run_cli(
        capsys, "table", "--group", "unitary", "--n", "3", "--tau", "symbolic",
        "--format", "csv",
    )
    assert code == 0
    payload = json.loads(json_out)
    rows = list(csv.reader(io.StringIO(csv_out)))
    assert rows[0][1:] == payload["basis"]
    for row, json_row in zip(rows[1:], payload["weingarten"]):
        assert [parse(x) for x in row[1:]] == [parse(x) for x in json_row]


def test_gram_csv(capsys):
    code, out, _ = run_cli(
        capsys, "gram", "--group", "orthogonal", "--n", "2", "--tau", "3",
        "--format", "csv",
    )
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][1:] == ["(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)"]
    assert rows[1][1:] == ["9", "3", "3"]


def test_identical_invocations_byte_identical(capsys):
    argv = ["table", "--group", "orthogonal", "--n", "2", "--tau", "5/2"]
    _, first, _ = run_cli(capsys, *argv)
    _, second, _ = run_cli(capsys, *argv)
    assert first == second


def test_out_file(tmp_path, capsys):
    target = tmp_path / "table.json"
    code, out, _ = run_cli(
        capsys, "table", "--group", "unitary", "--n", "2", "--tau", "7",
        "--out", str(target),
    )
    assert code == 0
    assert out == ""
    assert json.loads(target.read_text())["n"] == 2


def test_characters_writes_cache(tmp_path, capsys, monkeypatch):
    cache = tmp_path / "chars"
    monkeypatch.setenv("WG_CACHE_DIR", str(cache))
    code, out, _ = run_cli(capsys, "characters", "--n", "4")
    assert code == 0
    payload = json.loads(out)
    assert payload["schema"].startswith("weingarten/character-table/")
    assert (cache / "characters-n4.json").exists()


def test_verify_all_n2_passes(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "all", "--n", "2")
    assert code == 0
    assert "FAIL" not in out
    assert "jucys identity n=2" in out


def test_verify_single_suite(capsys):
    code, out, _ = run_cli(capsys, "verify", "--suite", "keyid", "--n", "3")
    assert code == 0
    assert out.count("ok  ") == 3


def test_verify_all_n3_passes(capsys):
    # the full desk-scale suite; slowest CLI test (dominated by 2n=6 doubling)
    code, out, _ = run_cli(capsys, "verify", "--suite", "all", "--n", "3")
    assert code == 0
    assert "FAIL" not in out


def test_verify_exit_code_reflects_injected_failure(capsys, monkeypatch):
    from weingarten.unitary import WeingartenTableU, weingarten_unitary

    def corrupted(n, tau):
        table = weingarten_unitary(n, tau)
        bad = [row[:] for row in table.weingarten]
        bad[0][0] = bad[0][0] + 1  # no longer a pseudo-inverse
        return WeingartenTableU(
            n=table.n, tau=table.tau, basis=table.basis,
            gram=table.gram, weingarten=bad, excluded=table.excluded,
        )

    monkeypatch.setattr(cli, "weingarten_unitary", corrupted)
    code, out, _ = run_cli(capsys, "verify", "--suite", "pseudoinverse", "--n", "1")
    assert code == 1
    assert "FAIL" in out


def test_usage_errors_exit_2(capsys):
    # out-of-cap without --force, message names the flag
    code, _, err = run_cli(capsys, "table", "--group", "orthogonal", "--n", "9",
                           "--tau", "symbolic")
    assert code == 2
    assert "--force" in err and "--n" in err or "cap" in err
    # malformed rational
    with pytest.raises(SystemExit) as exc:
        run_cli(capsys, "table", "--group", "unitary", "--n", "2", "--tau", "x/y")
    assert exc.value.code == 2
    # unknown flag
    with pytest.raises(SystemExit) as exc:
        run_cli(capsys, "table", "--group", "unitary", "--n", "2", "--frobnicate")
    assert exc.value.code == 2


def test_domain_error_exits_3(capsys):
    code, _, err = run_cli(capsys, "verify", "--suite", "commute", "--n", "2",
                           "--tau", "3", "--tau2", "3")
    assert code == 3
    assert "domain error" in err


def test_mc_single_moment(capsys):
    code, out, _ = run_cli(
        capsys, "mc", "--group", "orthogonal", "--n", "1", "--tau", "4",
        "--samples", "5000", "--seed", "2", "--indices", "1,1;1,1",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["exact"] == "1/4"
    assert abs(payload["z"]) <= 4


def test_mc_unitary_indices(capsys):
    code, out, _ = run_cli(
        capsys, "mc", "--group", "unitary", "--n", "1", "--tau", "3",
        "--samples", "5000", "--seed", "2", "--indices", "1;1;1;1",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["exact"] == "1/3"


def test_mc_grid_small(capsys):
    code, out, _ = run_cli(
        capsys, "mc", "--group", "unitary", "--n", "1", "--tau", "2",
        "--samples", "20000", "--seed", "4",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["moments"] == 16
    assert payload["failures"] == []


def test_mc_grid_cap(capsys):
    code, _, err = run_cli(
        capsys, "mc", "--group", "unitary", "--n", "3", "--tau", "2",
        "--samples", "1000", "--seed", "1",
    )
    assert code == 2
    assert "--force" in err


def test_mc_bad_indices(capsys):
    code, _, err = run_cli(
        capsys, "mc", "--group", "orthogonal", "--n", "1", "--tau", "4",
        "--samples", "1000", "--seed", "1", "--indices", "1,1",
    )
    assert code == 3
    assert "semicolon" in err
