import json

import pytest

from khsplit import catalog, io
from khsplit.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_jones_json(capsys):
    code, out, _ = run(capsys, "jones", "trefoil", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["outputs"]["jones_q"] == {"2": 1, "6": 1, "8": -1}
    assert data["ok"] is True


def test_jones_t_variable(capsys):
    code, out, _ = run(capsys, "jones", "trefoil", "--t-variable")
    assert code == 0 and "t" in out


def test_kh_matches_catalog(capsys):
    code, out, _ = run(capsys, "kh", "solomon")
    assert code == 0
    assert "V{1} + k{2}[1] + k{6}[2] + V{9}[4]" in out
    assert "PASS" in out


@pytest.mark.parametrize("cmd", ["split", "dc", "ss"])
def test_cut_commands_pass(capsys, cmd):
    code, out, _ = run(capsys, cmd, "solomon_cut")
    assert code == 0, out
    assert "PASS" in out


def test_ss_single_page(capsys):
    code, out, _ = run(capsys, "ss", "solomon_cut", "--page", "2")
    assert code == 0 and "E_2" in out
    code, _, err = run(capsys, "ss", "solomon_cut", "--page", "0")
    assert code == 2 and "--page" in err


def test_split_closure_rule_at_small_n(capsys):
    code, _, _ = run(capsys, "split", "solomon_cut", "--rule", "closure")
    assert code == 0


def test_nc_matrix(capsys):
    code, out, _ = run(capsys, "nc", "--n", "2", "--matrix", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["inputs"]["n"] == 2


def test_dc_regauge_note(capsys):
    code, out, _ = run(capsys, "dc", "mirror_trefoil_hopf_cut")
    assert code == 0
    assert "regauge" in out


def test_surgeries_written_and_reloadable(capsys, tmp_path):
    code, _, _ = run(capsys, "surgeries", "solomon_cut", "--out", str(tmp_path))
    assert code == 0
    files = sorted(tmp_path.glob("*.json"))
    assert len(files) == 4
    code, out, _ = run(capsys, "kh", str(files[0]))
    assert code == 0 and "Kh(" in out


def test_cut_file_round_trip(capsys, tmp_path):
    p = tmp_path / "cut.json"
    p.write_text(io.dumps(catalog.get("half_solomon_cut").obj))
    code, _, _ = run(capsys, "split", str(p))
    assert code == 0


@pytest.mark.parametrize("argv", [["kh", "no_such_thing"], ["split", "trefoil"], ["nc", "--n", "-1"]])
def test_bad_input_exit_two(capsys, argv):
    assert main(argv) == 2
    capsys.readouterr()


def test_bad_command_exit_two(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["bogus"])
    assert exc.value.code == 2
    capsys.readouterr()


def test_kh_of_cut_uses_glued_link(capsys):
    code, out, _ = run(capsys, "kh", "solomon_cut")
    assert code == 0 and "V{1} + k{2}[1] + k{6}[2] + V{9}[4]" in out


def test_unknown_name_lists_catalog(capsys):
    _, _, err = run(capsys, "kh", "no_such_thing")
    assert "solomon_cut" in err


def test_malformed_file(capsys, tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"kind": "diagram", "crossings": [[1, 1, 1, 2]], "edges": {}}')
    code, _, err = run(capsys, "kh", str(p))
    assert code == 2 and err


def test_selftest_reports_each_criterion(capsys):
    code, out, _ = run(capsys, "selftest")
    lines = [ln for ln in out.splitlines() if ln.startswith(("[PASS]", "[FAIL]"))]
    assert len(lines) == 9
    # the closure-count criterion is known to fail at n = 4
    assert code == 1
    assert sum(ln.startswith("[FAIL]") for ln in lines) == 1
