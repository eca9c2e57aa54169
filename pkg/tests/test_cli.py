import json
import subprocess
import sys

import pytest

from skeinrt import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--json")
    assert code == 0, err
    return json.loads(out)


def error_line(err):
    lines = err.strip().splitlines()
    assert len(lines) == 1
    return json.loads(lines[0])


TREFOIL = "braid 2 : s1 s1 s1"


class TestVerbs:
    def test_bracket_text(self, capsys):
        code, out, _ = run(capsys, "bracket", TREFOIL)
        assert code == 0 and out.strip() == "A^7 + A^3 + A^-1 - A^-9"

    @pytest.mark.parametrize("method", ["statesum", "functor", "auto"])
    def test_bracket_methods_agree(self, capsys, method):
        data = run_json(capsys, "bracket", "X(1,4,2,3) X(3,2,4,1)", "--method", method)
        assert data["bracket"] == "A^6 + A^2 + A^-2 + A^-6"

    def test_bracket_auto_switches(self, capsys):
        data = run_json(capsys, "bracket", TREFOIL, "--max-cost", "4")
        assert data["method"] == "functor"

    def test_bracket_file_and_stdin(self, capsys, tmp_path, monkeypatch):
        f = tmp_path / "k.pd"
        f.write_text("X(1,1,2,2)\n")
        assert run_json(capsys, "bracket", str(f))["bracket"] == "A^5 + A"
        import io
        monkeypatch.setattr(sys, "stdin", io.StringIO("O O\n"))
        assert run_json(capsys, "bracket", "-")["bracket"] == "A^4 + 2 + A^-4"

    def test_jones(self, capsys):
        code, out, _ = run(capsys, "jones", TREFOIL, "--divided")
        assert code == 0 and out.strip() == "-t^4 + t^3 + t"
        data = run_json(capsys, "jones", TREFOIL)
        assert data["divided"] is False

    def test_colored(self, capsys):
        data = run_json(capsys, "colored", "X(1,4,2,3) X(3,2,4,1)", "--labels", "2,3",
                        "--framings", "0,0")
        assert data["value"] == "s^10 + s^6 + s^2 + s^-2 + s^-6 + s^-10"
        data = run_json(capsys, "colored", "O", "--labels", "2", "--l", "3")
        assert data["root"] == {"order": 12, "exponent": 1}

    def test_rt(self, capsys, tmp_path):
        f = tmp_path / "lens.srg"
        f.write_text("# L(2,1)\nO\nframings: [2]\n")
        data = run_json(capsys, "rt", str(f), "--l", "4")
        assert data["signature"] == 1 and data["components"] == 1
        data = run_json(capsys, "rt", "O", "--framings", "0", "--l", "5")
        assert data["components"] == 1 and data["signature"] == 0

    def test_rt_text(self, capsys):
        code, out, _ = run(capsys, "rt", "O", "--framings", "0", "--l", "5")
        assert code == 0 and "corrected = 1" in out

    def test_tqft_dim(self, capsys):
        assert run(capsys, "tqft-dim", "--l", "3", "--genus", "2")[1].strip() == "4"
        data = run_json(capsys, "tqft-dim", "--l", "5", "--genus", "3", "--spine", "k4")
        assert data["dim"] == run_json(capsys, "tqft-dim", "--l", "5", "--genus", "3")["dim"]

    def test_modular_data(self, capsys):
        data = run_json(capsys, "modular-data", "--l", "4")
        assert data["labels"] == [1, 2, 3]
        code, out, _ = run(capsys, "modular-data", "--l", "4", "--root-exp", "3")
        assert code == 0 and "zeta_16^3" in out

    def test_checks_pass(self, capsys):
        assert run_json(capsys, "check", "dual-alg", "--count", "20")["passed"]
        assert run_json(capsys, "check", "relations", "--max-label", "2")["passed"]
        assert run_json(capsys, "check", "kirby", "--l", "3")["passed"]


class TestExitCodes:
    def test_parse_error(self, capsys):
        code, out, err = run(capsys, "bracket", "X(1,2")
        assert code == 1 and not out
        assert error_line(err)["error"] == "parse"

    def test_surgery_without_framings(self, capsys):
        code, _, err = run(capsys, "rt", "O", "--l", "3")
        assert code == 1 and "framings" in error_line(err)["reason"]

    def test_missing_file_is_parse_error(self, capsys, tmp_path):
        code, _, err = run(capsys, "bracket", str(tmp_path / "missing.pd"))
        assert code in (1, 2) and error_line(err)["exit"] == code

    @pytest.mark.parametrize("argv", [
        ["bracket"],
        ["bracket", "X(1,1,2,3)"],
        ["colored", "O", "--labels", "0"],
        ["colored", "O", "--labels", "4", "--l", "3"],
        ["rt", "O", "--framings", "1", "--l", "5", "--root-exp", "2"],
        ["modular-data", "--l", "5", "--root-order", "10"],
        ["tqft-dim", "--l", "3", "--genus", "2", "--spine", "k4"],
        ["bracket", "O", "--max-cost", "0"],
        ["nonsense"],
    ])
    def test_validation(self, capsys, argv):
        code, _, err = run(capsys, *argv)
        assert code == 2
        assert error_line(err)["exit"] == 2

    def test_framings_twice(self, capsys):
        code, _, err = run(capsys, "rt", "O\nframings: [1]", "--framings", "1", "--l", "3")
        assert code == 2 and "framings" in error_line(err)["reason"]

    def test_cost(self, capsys):
        code, _, err = run(capsys, "rt", "X(1,4,2,3) X(3,2,4,1)", "--framings", "0,0", "--l", "5",
                           "--max-cost", "10")
        assert code == 3 and error_line(err)["error"] == "cost"
        code, _, _ = run(capsys, "bracket", TREFOIL, "--method", "statesum", "--max-cost", "4")
        assert code == 3

    def test_failed_check(self, capsys, monkeypatch):
        from skeinrt.coeff import Laurent
        monkeypatch.setattr(cli, "bracket_functor", lambda d: Laurent({99: 1}, "A"))
        code, out, _ = run(capsys, "check", "dual-alg", "--count", "3", "--json")
        assert code == 4 and json.loads(out)["passed"] is False


class TestDeterminism:
    def test_threads_do_not_change_output(self, capsys):
        argv = ["rt", "braid 3 : s1 s1 s2 s2", "--framings", "1,0,-2", "--l", "5", "--json"]
        outs = set()
        for t in ("1", "2"):
            code, out, _ = run(capsys, *argv, "--threads", t)
            assert code == 0
            outs.add(out)
        assert len(outs) == 1

    def test_env_threads(self, capsys, monkeypatch):
        monkeypatch.setenv("SKEINRT_THREADS", "2")
        a = run(capsys, "bracket", TREFOIL, "--json")[1]
        monkeypatch.setenv("SKEINRT_THREADS", "1")
        assert run(capsys, "bracket", TREFOIL, "--json")[1] == a


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "skeinrt", "bracket", "O"], capture_output=True,
                       text=True, timeout=120)
    assert r.returncode == 0 and r.stdout.strip() == "-A^2 - A^-2"
