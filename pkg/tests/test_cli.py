import json
import subprocess
import sys

import pytest

from kreweras import cli, words


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count(capsys):
    assert run(capsys, "count", "--n", "3") == (0, "192\n", "")
    code, out, _ = run(capsys, "count", "--n", "2", "--json")
    assert json.loads(out) == {"n": 2, "kreweras": 16, "connected": 4, "connected_webs": 2}


def test_promote(capsys):
    code, out, _ = run(capsys, "promote", "--word", "AABBCACCB", "--steps", "9")
    assert (code, out.strip()) == (0, "AACCBABBC")
    code, out, _ = run(capsys, "promote", "--word", "ACB", "--steps", "-1")
    assert out.strip() == "ABC"


def test_evacuate_and_orbit(capsys):
    assert run(capsys, "evacuate", "--word", "AABBCACCB")[1].strip() == "ABACACCBB"
    code, out, _ = run(capsys, "orbit", "--word", "ABC", "--json")
    assert json.loads(out)["orbit"] == ["ABC", "ACB"]


def test_gen(capsys):
    assert run(capsys, "gen", "--n", "1")[1].split() == ["ABC", "ACB"]
    code, out, _ = run(capsys, "gen", "--n", "3", "--samples", "5", "--seed", "2", "--json")
    ws = json.loads(out)
    assert len(ws) == 5 and all(words.is_kreweras(w) for w in ws)
    assert run(capsys, "gen", "--n", "3", "--samples", "5", "--seed", "2", "--json")[1] == out


def test_usage_errors(capsys):
    assert run(capsys, "promote", "--word", "ABB")[0] == 2
    assert run(capsys, "promote")[0] == 2
    assert run(capsys, "verify", "nope")[0] == 2
    assert run(capsys)[0] == 2
    assert run(capsys, "bump", "--word", "")[0] == 2


def test_bump(capsys, tmp_path):
    svg = tmp_path / "b.svg"
    code, out, _ = run(capsys, "bump", "--word", "AABBCACCB", "--json", "--svg", str(svg))
    data = json.loads(out)
    assert data["sigma"] == [4, 3, 8, 5, 2, 7, 1, 9, 6]
    assert svg.read_text().startswith("<?xml")


def test_growth(capsys):
    code, out, _ = run(capsys, "growth", "--word", "ABC", "--steps", "2")
    assert code == 0 and "111" in out
    code, out, _ = run(capsys, "growth", "--word", "ABC", "--json")
    assert json.loads(out)["rows"] == 3


def test_web_recover_pipeline(capsys, tmp_path, monkeypatch):
    svg = tmp_path / "w.svg"
    code, out, _ = run(capsys, "web", "--word", "AABBCACCB", "--json", "--svg", str(svg), "--seed", "4")
    assert code == 0
    first = svg.read_text()
    run(capsys, "web", "--word", "AABBCACCB", "--svg", str(svg), "--seed", "4")
    assert svg.read_text() == first
    path = tmp_path / "web.json"
    path.write_text(out)
    code, rec, _ = run(capsys, "recover", "--input", str(path), "--json")
    assert set(json.loads(rec)["words"]) == {"AABBCACCB", "AACCBABBC"}


def test_recover_from_stdin(capsys, monkeypatch):
    import io

    code, out, _ = run(capsys, "web", "--word", "ABCABC", "--json")
    monkeypatch.setattr(sys, "stdin", io.StringIO(out))
    code, rec, _ = run(capsys, "recover")
    assert code == 0 and "ABCABC" in rec.split()
    monkeypatch.setattr(sys, "stdin", io.StringIO("not json"))
    assert run(capsys, "recover")[0] == 2


def test_enumeration_commands(capsys):
    code, out, _ = run(capsys, "csp", "--n", "1")
    assert code == 0 and "1 + 1·q^3" in out
    code, out, _ = run(capsys, "evac-fixed", "--n", "2", "--json")
    assert json.loads(out)["passed"]
    code, out, _ = run(capsys, "order-poly", "--n", "1", "--m", "1", "--json")
    assert json.loads(out)["values"][1] == {"m": 1, "formula": 5, "count": 5}


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "all", "--max-n", "2", "--samples", "20")
    assert code == 0
    assert out.count("[PASS]") == 7


def test_verify_failure_exit_code(capsys, monkeypatch):
    from kreweras import verify

    def broken(max_n=3, samples=200, seed=0):
        res = verify.SuiteResult("promotion")
        res.add("forced", False)
        return res

    monkeypatch.setitem(verify.SUITES, "promotion", broken)
    assert run(capsys, "verify", "promotion")[0] == 1


@pytest.mark.slow
def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "kreweras.cli", "count", "--n", "4"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "2816"
