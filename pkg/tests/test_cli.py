import json
import subprocess
import sys

import pytest

from arborlat import cli
from arborlat.arbor import arbor_to_json, octopus
from arborlat.polyalg import Poly


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run_cli(capsys, *argv)
    return code, json.loads(out)


def test_ehrhart_qndk(capsys):
    code, out = run_cli(capsys, "ehrhart", "--qndk", "2,2,1")
    assert code == 0 and out == '{"ehrhart": ["1", "5/2", "3/2"]}\n'


def test_ehrhart_octopus_serializes_integers_as_strings(capsys):
    code, out = run_cli(capsys, "ehrhart", "--octopus", "1,0")
    assert code == 0 and json.loads(out) == {"ehrhart": ["1", "1"]}


def test_ehrhart_both_matches(capsys):
    code, payload = run_json(capsys, "ehrhart", "--qndk", "3,2,0", "--method", "both")
    assert code == 0 and payload["match"] is True


def test_ehrhart_mismatch_exits_4(capsys, monkeypatch):
    monkeypatch.setattr(cli, "ehrhart_Qndk", lambda n, d, k: Poly([1, 1, 1]))
    code, payload = run_json(capsys, "ehrhart", "--qndk", "2,2,1", "--method", "both")
    assert code == 4 and payload["match"] is False


def test_hstar_and_gamma_and_magic(capsys):
    code, payload = run_json(capsys, "hstar", "--octopus", "2,1")
    assert code == 0 and payload == {"hstar": [1, 2]}
    code, payload = run_json(capsys, "gamma", "--octopus", "4,1")
    assert code == 0 and payload["gamma"] == [1, 9, 3] and payload["palindromic"]
    code, payload = run_json(capsys, "magic", "--qndk", "3,2,0")
    assert code == 0 and payload == {"c": [6, 4, -2, 0], "magic_positive": False}
    code, payload = run_json(capsys, "magic", "--octopus", "3,1")
    assert code == 0 and payload["magic_positive"] is True


def test_gamma_not_palindromic(capsys):
    # d < n breaks the symmetry of the nonzero-coordinate counts
    code, payload = run_json(capsys, "gamma", "--qndk", "3,2,0")
    assert code == 0 and payload["palindromic"] is False and payload["gamma"] is None


def test_hvector_with_points(capsys):
    code, payload = run_json(capsys, "hvector", "--octopus", "2,1", "--points")
    assert code == 0 and payload["h"] == [1, 3, 1]
    assert payload["points"] == [[0, 0], [0, 1], [0, 2], [1, 0], [1, 1]]


def test_hvector_points_cap(capsys, monkeypatch):
    monkeypatch.setenv("ARBORLAT_MAX_POINTS", "3")
    code, _ = run_cli(capsys, "hvector", "--octopus", "2,1", "--points")
    assert code == 2


def test_park(capsys):
    code, payload = run_json(capsys, "park", "--word", "3,5,3,4,1", "--spaces", "5")
    assert code == 0
    assert payload == {"spots": [3, 5, 4, 2, 1],
                       "lucky": [True, True, False, False, True], "unlucky": 2}
    code, payload = run_json(capsys, "park", "--word", "1,2", "--spaces", "2")
    assert code == 0 and payload["unlucky"] == 0
    code, payload = run_json(capsys, "park", "--word", "3,1", "--spaces", "2",
                             "--alphabet", "3")
    assert code == 0 and payload["unlucky"] == 1


def test_park_rejects_out_of_range(capsys):
    code, _ = run_cli(capsys, "park", "--word", "3,1", "--spaces", "2")
    assert code == 2
    code, _ = run_cli(capsys, "park", "--word", "1,2,3", "--spaces", "2")
    assert code == 2


def test_arbor_file_source(tmp_path, capsys):
    f = tmp_path / "oct.json"
    f.write_text(arbor_to_json(octopus(2, 1)))
    code, payload = run_json(capsys, "hstar", "--arbor", str(f))
    assert code == 0 and payload == {"hstar": [1, 2]}
    code, _ = run_cli(capsys, "ehrhart", "--arbor", str(f), "--method", "closed")
    assert code == 2  # closed form needs explicit parameters


def test_invalid_arbor_file_exits_3(tmp_path, capsys):
    f = tmp_path / "bad.json"
    f.write_text('{"n": 2, "blocks": [[1], [1, 2]], "parent": [-1, 0]}')
    code, _ = run_cli(capsys, "hstar", "--arbor", str(f))
    assert code == 3
    f.write_text("not json at all")
    code, _ = run_cli(capsys, "gamma", "--arbor", str(f))
    assert code == 3


def test_bad_arguments_exit_2(capsys):
    assert run_cli(capsys, "ehrhart")[0] == 2  # missing source
    assert run_cli(capsys, "ehrhart", "--octopus", "3,3")[0] == 2
    assert run_cli(capsys, "ehrhart", "--octopus", "3")[0] == 2
    assert run_cli(capsys, "nonsense")[0] == 2


def test_check_sweep(capsys):
    code, payload = run_json(capsys, "check", "--conjecture", "roots", "--size", "3")
    assert code == 0
    assert payload["pass"] and payload["total"] == 16 and payload["passed"] == 16
    code, _ = run_cli(capsys, "check", "--conjecture", "hstar", "--size", "6")
    assert code == 2  # over the cap without --force


def test_check_arbor_file(capsys, tmp_path):
    f = tmp_path / "oct.json"
    f.write_text(arbor_to_json(octopus(2, 1)))
    code, payload = run_json(capsys, "check", "--conjecture", "hstar", "--arbor", str(f))
    assert code == 0 and payload["pass"] is True
    assert payload["reports"][0]["lhs"] == [1, 2]


def test_table1_text(capsys):
    code, out = run_cli(capsys, "table1")
    assert code == 0
    assert "2t^2+11t+6" in out and "24t^3+104t^2+104t+24" in out and "36t+24" in out


def test_table1_json(capsys):
    code, payload = run_json(capsys, "table1", "--json")
    assert code == 0 and len(payload["entries"]) == 14
    by_key = {(e["n"], e["k"]): e["f"] for e in payload["entries"]}
    assert by_key[(3, 1)] == "2t^2+11t+6"
    assert by_key[(4, 4)] == "24"
    assert by_key[(1, 0)] == "1"


def test_output_is_deterministic(capsys):
    _, first = run_cli(capsys, "hstar", "--octopus", "3,2")
    _, second = run_cli(capsys, "hstar", "--octopus", "3,2")
    assert first == second


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "arborlat", "hstar", "--octopus", "2,1"],
        capture_output=True, text=True,
    )
    assert out.returncode == 0 and json.loads(out.stdout) == {"hstar": [1, 2]}
