import io
import json

import pytest

from eulerian_words.cli import main


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out=out)
    return code, out.getvalue()


def test_stat_text():
    code, out = run("stat", "21221")
    assert code == 0
    lines = dict(line.split("=", 1) for line in out.splitlines())
    assert (lines["des"], lines["maj"], lines["inv"], lines["exc"]) == ("2", "5", "4", "1")
    assert lines["lambda"] == "(3,1)"


def test_stat_empty_word():
    code, out = run("stat", "", "--format", "json")
    rep = json.loads(out)
    assert code == 0
    assert all(rep[k] == 0 for k in ("des", "maj", "inv", "exc", "length"))


def test_stat_paper_word():
    rep = json.loads(run("stat", "132232131", "--format", "json")[1])
    assert rep["des"] == 4 and rep["standardization"] == "174586293"
    assert "block_form" not in rep


@pytest.mark.parametrize("name, src, dst", [
    ("gamma", "132232131", "123323121"),
    ("stein", "174586293", "169748253"),
    ("psi", "12122", "21122"),
    ("std", "21221", "31452"),
    ("phi1inv", "21221", "22121"),
    ("gamma", "10 2 3", "10 3 2"),
    ("gamma", "2 1 2", "2 1 2"),
])
def test_map(name, src, dst):
    assert run("map", name, src) == (0, dst + "\n")


def test_map_domain_errors():
    assert run("map", "phi2", "123")[0] == 2
    assert run("map", "stein", "1224")[0] == 2
    assert run("map", "nope", "12")[0] == 2
    assert run("stat", "1a2")[0] == 2


def test_enum():
    assert run("enum", "fib", "3") == (0, "121\n122\n212\n221\n222\n")
    rep = json.loads(run("enum", "fib1", "3", "--format", "json")[1])
    assert rep == {"family": "fib1", "n": 3, "count": 2, "words": ["121", "221"]}
    assert run("enum", "fib", "30")[0] == 2


def test_dist_formats():
    assert run("dist", "fib", "3", "des") == (0, "0 2\n1 3\n")
    code, out = run("dist", "phi2(fib)", "2", "exc,inv", "--format", "csv")
    assert out == "exc,inv,count\n0,0,2\n1,1,1\n"
    rep = json.loads(run("dist", "r", "3", "exc", "--format", "json")[1])
    assert rep["coeffs"] == [[0, 2], [1, 3]] and rep["total"] == 5


def test_image_and_preimage(capsys):
    code, out = run("image", "gamma", "fib", "3")
    assert out.splitlines()[:4] == ["121", "122", "212", "222"]
    assert "5 words" in out.splitlines()[-1]
    code, out = run("preimage", "gamma", "binary", "4", "2121")
    assert (code, out) == (0, "")
    assert "no preimage" in capsys.readouterr().err


def test_pair_exit_codes():
    assert run("pair", "eulerian", "fib", "r", "5")[0] == 0
    assert run("pair", "eulerian", "fib", "binary", "3")[0] == 1


def test_verify_json_schema():
    code, out = run("verify", "thm3.4", "1..6", "--format", "json")
    rep = json.loads(out)
    assert code == 0
    assert set(rep) == {"theorem", "range", "results", "elapsed_ms"}
    assert rep["range"] == [1, 6] and rep["elapsed_ms"] == 0
    assert rep["results"][0]["status"] == "documented-exception"
    assert rep["results"][0]["counterexample"] == "1"
    assert {r["status"] for r in rep["results"][1:]} == {"pass"}


def test_verify_text_and_errors():
    code, out = run("verify", "thm3.4", "1..12")
    assert code == 0 and "documented-exception" in out
    assert run("verify", "thm2.1", "1..25")[0] == 2
    assert run("verify", "thm2.1", "x..y")[0] == 2
    assert run("verify", "thm9")[0] == 2


def test_verify_all_lists_every_theorem_and_is_repeatable():
    args = ("verify", "all", "1..5", "--format", "json")
    code, first = run(*args)
    assert code == 0
    assert first == run(*args)[1]
    ids = [r["theorem"] for r in json.loads(first)]
    from eulerian_words.theorems import THEOREM_IDS
    assert ids == list(THEOREM_IDS)


def test_verify_timing_flag():
    rep = json.loads(run("verify", "eq8", "8..10", "--format", "json", "--timing")[1])
    assert isinstance(rep["elapsed_ms"], int)
