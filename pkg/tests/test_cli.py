import json

import pytest

from gkcodes.cli import main


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def test_gamma_lines(capsys):
    status, out, _ = run(capsys, "gamma", "--n", "2")
    lines = out.split()
    assert status == 0 and len(lines) == 10
    assert lines[0] == "1,19" and lines == sorted(lines, key=lambda s: tuple(map(int, s.split(","))))


def test_box_grid(capsys):
    _, out, _ = run(capsys, "box", "--n", "2", "--bound", "20")
    rows = [r.split(",") for r in out.split()]
    assert len(rows) == 21 and all(len(r) == 21 for r in rows)
    assert rows[0][:7] == ["1", "0", "0", "0", "0", "0", "1"]
    _, again, _ = run(capsys, "semigroup-box", "--n", "2", "--bound", "20")
    assert again == out


def test_ell_both_spellings(capsys):
    assert run(capsys, "ell", "--n", "2", "--a1", "22", "--a2", "11")[1].strip() == "24"
    assert run(capsys, "ell", "--n", "2", "22", "11")[1].strip() == "24"


def test_points_csv(capsys):
    _, out, _ = run(capsys, "points", "--n", "2")
    lines = out.splitlines()
    assert lines[0] == "kind,a,b,c" and lines[1] == "infinity,,,"
    assert len(lines) == 226


def test_code_export_and_certificate(capsys, tmp_path):
    path = tmp_path / "g.txt"
    status, out, _ = run(capsys, "code", "--n", "2", "--a1", "22", "--a2", "11", "--dual", "--export", str(path))
    assert status == 0 and out.strip() == "[223, 199, >=15] (goppa)"
    assert path.read_text().splitlines()[0] == "64 223 199"
    _, out, _ = run(capsys, "code", "--n", "2", "--a1", "22", "--a2", "11", "--dual",
                    "--ma1", "13", "--ma2", "3", "--mb1", "10", "--mb2", "9", "--shorten", "13")
    assert out.strip() == "[210, 186, >=16] (inherited)"


def test_code_hypothesis_failure_exit(capsys):
    status, _, err = run(capsys, "code", "--n", "2", "--a1", "21", "--a2", "11", "--dual",
                         "--ma1", "12", "--ma2", "3", "--mb1", "10", "--mb2", "9")
    assert status == 1 and "HypothesisFailed" in err


def test_search_json_file(capsys, tmp_path):
    path = tmp_path / "out.json"
    status, _, _ = run(capsys, "search", "--n", "2", "--deg-min", "33", "--deg-max", "34",
                       "--shorten", "13", "--json", str(path))
    data = json.loads(path.read_text())
    assert status == 0
    assert set(data[0]) == {"n", "k", "d_bound", "kind", "a1", "b1", "a2", "b2", "s"}
    assert sum(1 for r in data if r["s"] == 0) * 14 == len(data)
    first = path.read_text()
    run(capsys, "search", "--n", "2", "--deg-min", "33", "--deg-max", "34", "--shorten", "13", "--json", str(path))
    assert path.read_text() == first


def test_json_envelope(capsys):
    _, out, _ = run(capsys, "--json", "ell", "--n", "2", "--a1", "22", "--a2", "11")
    env = json.loads(out)
    assert env == {"command": "ell", "params": {"a1": 22, "a2": 11, "n": 2, "threads": 1}, "result": 24}


def test_verify_n2(capsys):
    status, out, _ = run(capsys, "verify", "--n", "2")
    assert status == 0 and out.strip().endswith("OVERALL PASS")


def test_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        main(["verify", "--n", "5"])
    assert info.value.code != 0
    with pytest.raises(SystemExit):
        main(["ell", "--n", "2", "--a1", "3"])
    with pytest.raises(SystemExit):
        main(["code", "--n", "2", "--a1", "22", "--a2", "11", "--ma1", "1"])
    assert main(["ell", "--n", "6", "1", "1"]) == 1
