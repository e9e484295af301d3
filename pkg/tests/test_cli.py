"""Command line behavior: payloads, formats, exit codes, cache wiring."""

import csv
import io
import json
import os
import subprocess
import sys

import pytest

from circlesort import cli
from circlesort.adjsort import diameter_bound


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv)
    return code, json.loads(out)


def test_sort_reversal(capsys):
    code, data = run_json(capsys, "sort", "--perm", "5 4 3 2 1")
    assert code == 0
    assert data["command"] == "sort"
    assert data["version"]
    assert data["input"] == {"perm": "5 4 3 2 1"}
    assert data["n"] == 5
    assert data["bound"] == 4
    assert data["length"] == 4 == len(data["moves"])
    assert data["reached_sorted_class"] is True
    assert all(0 <= p < 5 for p in data["moves"])


def test_sort_trivial_is_empty(capsys):
    code, data = run_json(capsys, "sort", "--perm", "1 2 3 4")
    assert code == 0
    assert data["length"] == 0
    assert data["moves"] == []
    assert data["result"] == "1 2 3 4"


def test_sort_respects_bound_everywhere(capsys):
    code, data = run_json(capsys, "sort", "--perm", "1 7 4 2 6 3 5")
    assert code == 0
    assert data["length"] <= diameter_bound(7)


def test_dist_adjacent(capsys):
    code, data = run_json(capsys, "dist", "--perm", "1 3 2")
    assert code == 0
    assert data["distance"] == 1
    assert data["method"] == "search"


def test_dist_allswap_bfs_cross_check(capsys):
    code, data = run_json(
        capsys, "dist", "--perm", "1 5 4 3 2 6", "--mode", "allswap", "--bfs"
    )
    assert code == 0
    assert data["method"] == "coset-formula"
    assert data["bfs_check"]["match"] is True
    assert data["bfs_check"]["distance"] == data["distance"]


def test_diam_adjacent(capsys):
    code, data = run_json(capsys, "diam", "--n", "7")
    assert code == 0
    assert data["diameter"] == 9
    assert data["formula"] == 9
    assert data["match"] is True
    code, data = run_json(capsys, "diam", "--n", "8", "--mode", "adjacent")
    assert code == 0 and data["diameter"] == 12


def test_diam_allswap(capsys):
    code, data = run_json(capsys, "diam", "--n", "4", "--mode", "allswap")
    assert code == 0
    assert data["diameter"] == 1
    assert data["upper"] == 2
    assert data["attains_upper"] is False


def test_table_json(capsys):
    code, data = run_json(capsys, "table", "--max-n", "5")
    assert code == 0
    rows = data["rows"]
    assert [r["n"] for r in rows] == [1, 2, 3, 4, 5]
    assert rows[4]["diameter"] == 4
    assert rows[4]["histogram"] == {"0": 1, "1": 5, "2": 10, "3": 7, "4": 1}


def test_table_csv(capsys):
    code, out = run_cli(capsys, "table", "--max-n", "5", "--csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["n", "diameter", "distance", "count"]
    assert len(rows) == 1 + 1 + 1 + 2 + 3 + 5
    counts = [int(r[3]) for r in rows[1:] if r[0] == "5"]
    assert sum(counts) == 24


def test_tvalues(capsys):
    code, data = run_json(capsys, "tvalues", "--max-n", "6")
    assert code == 0
    rows = data["rows"]
    assert [r["sort_time"] for r in rows] == [0, 1, 1, 3, 3]
    assert [r["attains_n_minus_2"] for r in rows] == [True, True, False, True, False]
    assert all("general" in r["lower_bounds"] for r in rows)
    assert rows[2]["witness"].split()[0] == "0"


def test_tvalues_attainment_through_eleven(capsys):
    code, data = run_json(capsys, "tvalues", "--max-n", "11")
    assert code == 0
    attained = {r["n"] for r in data["rows"] if r["attains_n_minus_2"]}
    assert attained == {2, 3, 5, 7, 11}
    assert data["rows"][-1]["sort_time"] == 9


def test_tvalues_csv(capsys):
    code, out = run_cli(capsys, "tvalues", "--max-n", "5", "--csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][0] == "n"
    assert len(rows) == 5
    assert rows[4][1] == "3"


def test_bounds(capsys):
    code, data = run_json(capsys, "bounds", "--n", "18")
    assert code == 0
    assert data["lower_bounds"]["two_pk"] == 12
    assert data["adjacent_worst"] == diameter_bound(18)
    code, data = run_json(capsys, "bounds", "--n", "8")
    assert data["lower_bounds"]["two_power"] == 3
    assert data["allswap_upper"] == 6


def test_verify_suite(capsys):
    code, data = run_json(capsys, "verify", "--suite", "lower")
    assert code == 0
    assert data["passed"] is True
    assert data["checks"] and all(c["passed"] for c in data["checks"])


def test_invalid_inputs(capsys):
    assert cli.main(["sort", "--perm", "1 2 5"]) == 2
    assert cli.main(["dist", "--perm", "zebra"]) == 2
    assert cli.main(["bounds", "--n", "1"]) == 2
    capsys.readouterr()


def test_budget_exit(capsys):
    code = cli.main(["diam", "--n", "9", "--mode", "affine", "--max-states", "1000"])
    assert code == 3
    code = cli.main(["tvalues", "--max-n", "12"])
    assert code == 3
    capsys.readouterr()


def test_argparse_failures():
    with pytest.raises(SystemExit) as err:
        cli.main(["verify", "--suite", "nonsense"])
    assert err.value.code == 2
    with pytest.raises(SystemExit):
        cli.main(["frobnicate"])


def test_version_flag(capsys):
    with pytest.raises(SystemExit) as err:
        cli.main(["--version"])
    assert err.value.code == 0
    assert "circlesort" in capsys.readouterr().out


def test_entry_point_with_cache_env(tmp_path):
    env = dict(os.environ, CIRCLESORT_CACHE=str(tmp_path))
    first = subprocess.run(
        [sys.executable, "-m", "circlesort.cli", "diam", "--n", "6"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert first.returncode == 0
    cached = tmp_path / "adjacent_6.csrt"
    assert cached.exists()
    second = subprocess.run(
        [sys.executable, "-m", "circlesort.cli", "diam", "--n", "6"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert second.returncode == 0
    assert json.loads(second.stdout) == json.loads(first.stdout)
    # a damaged cache fails loudly instead of silently recomputing
    cached.write_bytes(b"junk" + cached.read_bytes())
    broken = subprocess.run(
        [sys.executable, "-m", "circlesort.cli", "diam", "--n", "6"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert broken.returncode == 2
