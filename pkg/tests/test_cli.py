import json
import subprocess
import sys
from pathlib import Path

import pytest

from semisep.cli import main
from semisep.core import parse_semigroups

TBL = str(Path(__file__).parent / "data" / "example.tbl")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "subset, expected",
    [("{a}", "{1}"), ("{}", "{0,a,b,1}"), ("{0,a,b,1}", "{0,a,b,1}"), ("{1}", "{1}"), ("{0,a,b}", "{1}")],
)
def test_sep(capsys, subset, expected):
    code, out, _ = run(capsys, "sep", "--table", TBL, "--subset", subset)
    assert code == 0 and out.strip() == expected


def test_sep_json(capsys):
    code, out, _ = run(capsys, "sep", "--table", TBL, "--subset", "{a,1}", "--json")
    d = json.loads(out)
    assert code == 0 and d["result"] == {"subset": "{a,1}", "mask": 0b1010}


def test_declared_names_win_over_indices(capsys):
    # "1" names the identity (index 3), so {1,3} is {1}
    code, out, _ = run(capsys, "sep", "--table", TBL, "--subset", "{1,3}", "--json")
    assert json.loads(out)["input"] == {"subset": "{1}", "mask": 0b1000}


def test_idealizer_classify_fixed_points(capsys):
    assert run(capsys, "idealizer", "--table", TBL, "--subset", "{a}")[1].strip() == "{a,1}"
    assert run(capsys, "classify", "--table", TBL, "--subset", "{a}")[1].strip() == "Excluding"
    code, out, _ = run(capsys, "fixed-points", "--table", TBL)
    assert out.split() == ["{1}", "{a,1}", "{b,1}", "{0,a,b,1}"]


def test_ideals_and_unitary(capsys):
    code, out, _ = run(capsys, "ideals", "prime", "--table", TBL)
    assert code == 0 and out.split("\n")[0].startswith("{0,a}")
    assert len(out.strip().splitlines()) == 3
    code, out, _ = run(capsys, "ideals", "maximal", "--table", TBL, "--json")
    rows = json.loads(out)
    assert [r["subset"] for r in rows] == ["{0,a,b}"] and rows[0]["flags"]["prime"]
    assert run(capsys, "unitary", "--table", TBL, "--subset", "{a,1}")[1].strip() == "true"


def test_names_require_declaration(tmp_path, capsys):
    p = tmp_path / "plain.tbl"
    p.write_text("2\n0 0\n1 1\n")
    assert run(capsys, "sep", "--table", str(p), "--subset", "{0}")[0] == 0
    code, _, err = run(capsys, "sep", "--table", str(p), "--subset", "{a}")
    assert code == 2 and err


def test_bad_input_exit_2(tmp_path, capsys):
    p = tmp_path / "bad.tbl"
    p.write_text("2\n1 0\n0 0\n")
    code, out, err = run(capsys, "validate", str(p))
    assert code == 2 and "associative" in err.lower()
    assert run(capsys, "validate", str(tmp_path / "missing.tbl"))[0] == 2
    assert run(capsys, "nonsense")[0] == 2
    assert run(capsys, "free", "factorize", "--gens", "a")[0] == 2


def test_enumerate_validate_round_trip(tmp_path, capsys):
    code, out, _ = run(capsys, "enumerate", "--order", "2")
    assert code == 0 and len(parse_semigroups(out)) == 8
    p = tmp_path / "o2.tbl"
    p.write_text(out)
    code, out, _ = run(capsys, "validate", str(p))
    assert code == 0 and out.strip() == "ok: 8 tables"
    code, out, _ = run(capsys, "enumerate", "--order", "2", "--dedupe", "iso-anti", "--json")
    assert len(json.loads(out)) == 4


def test_verify(tmp_path, capsys):
    out_json = tmp_path / "r.json"
    code, out, _ = run(capsys, "verify", "--order", "3", "--order-only", "--props", "P-T8",
                       "--json", str(out_json), "--jobs", "1")
    assert code == 0 and "semigroups=113" in out
    [rep] = json.loads(out_json.read_text())
    assert rep["property_id"] == "P-T8" and rep["corpus_spec"]["size"] == 113
    assert rep["status"] == "pass" and rep["violations"] == []
    assert run(capsys, "verify", "--order", "2", "--props", "P-XX")[0] == 2


def test_verify_reports_violation_exit_1(tmp_path, capsys, monkeypatch):
    from semisep import separators

    monkeypatch.setattr(separators, "separator_table", lambda S: (0,) * (1 << S.order))
    code, out, _ = run(capsys, "verify", "--table", TBL, "--props", "P-R2", "--jobs", "1")
    assert code == 1 and "FAIL" in out


def test_verify_output_deterministic(capsys):
    outs = [run(capsys, "verify", "--order", "2", "--jobs", str(j))[1] for j in (1, 2)]
    assert outs[0] == outs[1]


def test_hom(capsys):
    code, out, _ = run(capsys, "hom", "list", "--table", TBL, "--surjective")
    assert out.splitlines() == ["0 1 2 3", "0 2 1 3"]
    code, out, _ = run(capsys, "hom", "verify-th4", "--order", "2")
    assert code == 0 and out.startswith("P-T4 pass")
    code, out, _ = run(capsys, "hom", "remark5-search", "--order", "3", "--json")
    w = json.loads(out)["witness"]
    assert set(w) >= {"semigroup", "A", "B", "map", "lhs", "rhs"}
    code, out, _ = run(capsys, "hom", "remark5-search", "--order", "3", "--separators", "restricted")
    assert out.startswith("no witness")


def test_free(capsys):
    code, out, _ = run(capsys, "free", "factorize", "ababa", "--gens", "ab,ba,aba")
    assert out.splitlines() == ["2", "ab·aba", "aba·ba"]
    code, out, _ = run(capsys, "free", "is-code", "--gens", "ab,ba,aba", "--json")
    assert json.loads(out)["witness"] == "ababa"
    assert run(capsys, "free", "is-free", "--gens", "a,ab,b")[1].strip() == "true"
    code, out, _ = run(capsys, "free", "sep-bounded", "--gens", "aa", "--alphabet", "2",
                       "--max-len", "4", "--depth", "6", "--json")
    assert [c["word"] for c in json.loads(out)["candidates"]] == ["aa", "aaaa"]
    assert run(capsys, "free", "check-th13", "--gens", "aa", "--alphabet", "2", "--bound", "8")[:2] == (0, "pass\n")
    code, out, _ = run(capsys, "free", "check-th14", "--gens", "ab,ba,aba", "--bound", "5")
    assert code == 0 and "consistent=True" in out
    code, _, err = run(capsys, "free", "check-th13", "--gens", "ab,ba,aba")
    assert code == 2 and err


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "semisep", "sep", "--table", TBL, "--subset", "{a}"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.strip() == "{1}"
