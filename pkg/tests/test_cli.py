import csv
import io
import json

import pytest

from comppairs.cli import run
from comppairs.counting import count_comparable
from comppairs.constructions import tower_of_cubes
from comppairs.io import render_family


def call(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_construct_then_count(capsys, tmp_path, monkeypatch):
    code, out, _ = call(capsys, "construct", "tower", "--n", "4", "--k", "2")
    assert code == 0 and out == render_family(tower_of_cubes(4, 2))
    monkeypatch.setattr("sys.stdin", io.StringIO(out))
    code, out, _ = call(capsys, "count", "/dev/stdin")
    rec = json.loads(out)
    assert code == 0 and rec["comparable"] == "19"
    assert rec == {**count_comparable(tower_of_cubes(4, 2)).as_record(), "m": "7"}


def test_construct_out_and_count_chains(capsys, tmp_path):
    path = str(tmp_path / "c.txt")
    assert call(capsys, "construct", "chain", "--n", "5", "--m", "6", "--out", path)[0] == 0
    code, out, _ = call(capsys, "count", path, "--chains", "3", "--engine", "naive")
    assert json.loads(out)["chains"]["count"] == "20"


def test_construct_variants(capsys):
    for argv in (["subcube", "--n", "4", "--lo", "-", "--hi", "1,2"],
                 ["alon-frankl", "--n", "4", "--d", "0", "--block", "1"],
                 ["h", "--n", "4", "--k", "0"],
                 ["f-star", "--n", "4", "--k", "1", "--m", "4"],
                 ["middle-levels", "--n", "4"],
                 ["full-cube", "--n", "3"]):
        assert call(capsys, "construct", *argv)[0] == 0


def test_cross(capsys, tmp_path):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    a.write_text("n=2\n-\n")
    b.write_text("n=2\n-\n1\n2\n1,2\n")
    code, out, _ = call(capsys, "cross", str(a), str(b))
    assert code == 0 and json.loads(out)["cross"] == "3"


def test_verify_csv(capsys, tmp_path):
    code, out, _ = call(capsys, "verify", "binom-tail", "--grid", "quick")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and rows and all(r["holds"] == "true" for r in rows)
    path = tmp_path / "v.csv"
    code, out, _ = call(capsys, "verify", "entropy", "--grid", "quick", "--seed", "5",
                        "--csv", str(path))
    assert code == 0 and out == "" and path.read_text().startswith("name,inputs")


def test_verify_seeded_reproducible(capsys):
    first = call(capsys, "verify", "afconj", "--grid", "quick", "--seed", "9", "--trials", "5")
    second = call(capsys, "verify", "afconj", "--grid", "quick", "--seed", "9", "--trials", "5")
    assert first == second and first[0] == 0


def test_verify_failure_exit_1(capsys, monkeypatch):
    from comppairs import verify
    from comppairs.bounds import BoundReport

    def broken(**_):
        yield BoundReport("broken", {"x": 1}, 0, 1, False, -1)

    monkeypatch.setitem(verify.CHECKS, "broken", broken)
    code, _, err = call(capsys, "verify", "broken")
    assert code == 1 and "broken,x=1,0,1,-1,false" in err


@pytest.mark.parametrize("argv,needle", [
    (["verify", "entropy"], "--seed"),
    (["verify", "nope"], "unknown check"),
    (["verify", "all", "--seed", "-1"], "--seed"),
    (["construct", "tower", "--n", "4"], "--k"),
    (["solve", "max", "--n", "3", "--m", "4", "--budget", "bad=1"], "--budget"),
    (["solve", "two-layer", "--n", "4"], "--k1"),
    (["frobnicate"], "invalid choice"),
])
def test_usage_errors(capsys, argv, needle):
    code, _, err = call(capsys, *argv)
    assert code == 2 and needle in err


def test_input_errors(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("n=3\n2\n1\n")
    code, _, err = call(capsys, "count", str(bad))
    assert code == 2 and f"{bad}:3" in err
    code, _, err = call(capsys, "count", str(tmp_path / "missing.txt"))
    assert code == 2 and "missing.txt" in err
    code, _, err = call(capsys, "construct", "chain", "--n", "3", "--m", "5")
    assert code == 2


def test_compress(capsys, tmp_path):
    path = tmp_path / "f.txt"
    path.write_text("n=3\n1\n2\n")
    code, out, _ = call(capsys, "compress", str(path), "--kinds", "up:3")
    assert out == "n=3\n1,3\n2,3\n"
    code, out, _ = call(capsys, "compress", str(path), "--kinds", "down-all", "--fixpoint")
    assert out == "n=3\n-\n2\n"  # {2} is blocked once {1} has moved to the empty set
    code, _, err = call(capsys, "compress", str(path), "--kinds", "left:1")
    assert code == 2 and "--kinds" in err


def test_solve_and_report(capsys, tmp_path):
    cache = str(tmp_path / "cache")
    code, out, _ = call(capsys, "solve", "max", "--n", "3", "--m", "4", "--cache", cache)
    rec = json.loads(out)
    assert code == 0 and rec["optimum"] == "6" and rec["witness"] == ["0", "1", "3", "7"]
    code, again, _ = call(capsys, "solve", "max", "--n", "3", "--m", "4", "--cache", cache)
    assert again == out  # served from the cache
    call(capsys, "solve", "two-layer", "--n", "4", "--k1", "1", "--k2", "3", "--a", "2",
         "--b", "2", "--cache", cache)
    call(capsys, "solve", "min", "--n", "2", "--m", "3", "--cache", cache, "--no-symmetry")
    code, out, _ = call(capsys, "report", cache)
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0 and [r["objective"] for r in rows] == ["max_c", "min_c", "two_layer_max"]
    code, out, _ = call(capsys, "report", cache, "--format", "json")
    assert len(out.splitlines()) == 3
