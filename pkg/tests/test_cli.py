import json

from vknotoid.cli import main
from vknotoid.data import data_dir, corpus_dir

BIQ = data_dir() / "biquandles"
BRK = data_dir() / "brackets"


def run(args):
    return main([str(a) for a in args])


def test_biquandle_check_ok(capsys):
    assert run(["biquandle", "check", BIQ / "z3_coloring.biq"]) == 0
    assert "all axioms hold" in capsys.readouterr().out


def test_biquandle_check_violations(tmp_path, capsys):
    bad = tmp_path / "bad.biq"
    bad.write_text("3\n1 2 1 3 3 3\n2 1 3 1 1 1\n1 3 2 2 2 2\n")
    assert run(["biquandle", "check", bad]) == 1
    assert "violation" in capsys.readouterr().out


def test_biquandle_check_parse_error(tmp_path):
    empty = tmp_path / "empty.biq"
    empty.write_text("")
    assert run(["biquandle", "check", empty]) == 2
    assert run(["biquandle", "check", tmp_path / "missing.biq"]) == 2


def test_biquandle_alexander_emits_table(tmp_path, capsys):
    out = tmp_path / "a.biq"
    assert run(["biquandle", "alexander", 5, 2, 4, "--out", out]) == 0
    assert run(["biquandle", "check", out]) == 0
    assert run(["biquandle", "alexander", 4, 2, 1]) == 2


def test_invariants_text(capsys):
    rc = run(["invariants", corpus_dir() / "2.1.1.knd",
              "--biquandle", BIQ / "z3_involution.biq",
              "--bracket", BRK / "z5_involution.bvb"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "colorings: 3" in out
    assert "2u^3+u^2" in out


def test_invariants_json_round_trip(tmp_path):
    out = tmp_path / "res.json"
    rc = run(["invariants", corpus_dir() / "2.1.1.knd",
              "--biquandle", BIQ / "z3_involution.biq",
              "--bracket", BRK / "z5_involution.bvb",
              "--format", "json", "--out", out])
    assert rc == 0
    payload = json.loads(out.read_text())
    assert payload == json.loads(json.dumps(payload))
    rec = payload["results"][0]
    assert rec["counting_invariant"] == 3
    assert rec["bracket_polynomial"] == "2u^3+u^2"
    assert payload["manifest"]["command"] == "invariants"
    assert payload["manifest"]["version"]


def test_invariants_rejects_invalid_bracket(capsys):
    rc = run(["invariants", corpus_dir() / "2.1.1.knd",
              "--biquandle", BIQ / "z3_shift.biq",
              "--bracket", BRK / "z37_shift.bvb"])
    assert rc == 1
    rc = run(["invariants", corpus_dir() / "2.1.1.knd",
              "--biquandle", BIQ / "z3_shift.biq",
              "--bracket", BRK / "z37_shift.bvb", "--no-verify"])
    assert rc == 0


def test_invariants_size_mismatch():
    rc = run(["invariants", corpus_dir() / "2.1.1.knd",
              "--biquandle", BIQ / "z5_alexander.biq",
              "--bracket", BRK / "z5_involution.bvb"])
    assert rc == 2


def test_corpus_json(tmp_path):
    out = tmp_path / "table.json"
    rc = run(["corpus", "--dir", corpus_dir(),
              "--biquandle", BIQ / "z3_shift.biq",
              "--bracket", BRK / "z37_shift.bvb", "--no-verify",
              "--out", out])
    assert rc == 0
    payload = json.loads(out.read_text())
    rows = {r["name"]: r for r in payload["results"]}
    assert len(rows) == 32
    assert rows["2.1.1"]["status"] == "verified"
    mb = rows["2.1.1"]["bracket_matrix"]
    assert [mb[i][i] for i in range(3)] == ["u^19", "u^34", "u^27"]
    assert payload["errors"] == []


def test_corpus_csv(tmp_path, capsys):
    rc = run(["corpus", "--dir", corpus_dir(),
              "--biquandle", BIQ / "z3_coloring.biq", "--format", "csv"])
    assert rc == 0
    out = capsys.readouterr().out
    header = out.splitlines()[0]
    assert header.startswith("name,")
    assert "M_1_1" in header
    assert len(out.strip().splitlines()) == 33


def test_corpus_empty_dir(tmp_path):
    rc = run(["corpus", "--dir", tmp_path,
              "--biquandle", BIQ / "z3_coloring.biq"])
    assert rc == 0


def test_corpus_reports_bad_file_and_continues(tmp_path, capsys):
    (tmp_path / "good.knd").write_text("name good\ncode O+1,U+1\n")
    (tmp_path / "bad.knd").write_text("name bad\ncode O+1,U-1\n")
    rc = run(["corpus", "--dir", tmp_path,
              "--biquandle", BIQ / "z3_coloring.biq"])
    assert rc == 0
    err = capsys.readouterr().err
    assert "bad.knd" in err


def test_selftest_pass(capsys):
    rc = run(["selftest", corpus_dir() / "2.1.1.knd",
              "--biquandle", BIQ / "z3_involution.biq",
              "--bracket", BRK / "z5_involution.bvb",
              "--trials", 25, "--seed", 3])
    assert rc == 0
    assert "ok: 25 random move insertions" in capsys.readouterr().out


def test_selftest_trivial(capsys):
    rc = run(["selftest", corpus_dir() / "2.1.1.knd",
              "--biquandle", BIQ / "z3_coloring.biq",
              "--trials", 10, "--seed", 1])
    assert rc == 0


def test_search_cli(tmp_path, capsys):
    outdir = tmp_path / "found"
    rc = run(["search", "--biquandle", BIQ / "z3_involution.biq",
              "--modulus", 5, "--ansatz", "diagonal", "--seed", 1,
              "--out-dir", outdir])
    assert rc == 0
    files = list(outdir.glob("bracket_*.bvb"))
    assert files
    for f in files:
        assert run(["bracket", "check", f,
                    "--biquandle", BIQ / "z3_involution.biq"]) == 0


def test_search_rejects_composite_modulus():
    assert run(["search", "--biquandle", BIQ / "z3_involution.biq",
                "--modulus", 4]) == 2


def test_search_budget_exhausted(tmp_path):
    rc = run(["search", "--biquandle", BIQ / "z3_involution.biq",
              "--modulus", 5, "--budget", 10, "--out-dir", tmp_path])
    assert rc == 3


def test_moves_insert(tmp_path, capsys):
    out = tmp_path / "moved.knd"
    rc = run(["moves", "insert", corpus_dir() / "2.1.1.knd",
              "--move", "R2", "--gap", 0, "--gap2", 3, "--out", out])
    assert rc == 0
    text = out.read_text()
    assert text.startswith("name 2.1.1")
    rc = run(["moves", "insert", corpus_dir() / "2.1.1.knd",
              "--move", "R2", "--gap", 99])
    assert rc == 2


def test_bracket_check(capsys):
    rc = run(["bracket", "check", BRK / "z5_involution.bvb",
              "--biquandle", BIQ / "z3_involution.biq"])
    assert rc == 0
    rc = run(["bracket", "check", BRK / "z37_shift.bvb",
              "--biquandle", BIQ / "z3_shift.biq"])
    assert rc == 1
    out = capsys.readouterr().out
    assert "fails" in out


def test_bracket_fundamental(capsys):
    rc = run(["bracket", "fundamental", corpus_dir() / "2.1.1.knd"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "states: 9" in out
    assert "C[a4,a1]" in out
