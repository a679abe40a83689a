import csv
import json

import pytest

from misiurewicz.cli import main, parse_range


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen(capsys):
    assert run(capsys, "gen", "G", "2", "1")[:2] == (0, "c+2\n")
    assert run(capsys, "gen", "P", "2", "2")[:2] == (0, "x^2-8x+32\n")
    code, out, _ = run(capsys, "gen", "G", "3", "2", "--format", "json")
    assert json.loads(out)["coeffs"] == [1, -1, 1, 1]


def test_gen_usage_error(capsys):
    code, _, err = run(capsys, "gen", "G", "1", "1")
    assert code == 2 and "m must be at least 2" in err.replace("preperiod ", "")


def test_argparse_usage_exit():
    with pytest.raises(SystemExit) as info:
        main(["gen", "Q", "2", "1"])
    assert info.value.code == 2


def test_gen_cache(tmp_path, capsys):
    d = str(tmp_path / "cache")
    assert run(capsys, "gen", "P", "3", "2", "--cache-dir", d)[1] == "x^3-8x^2+128\n"
    assert run(capsys, "gen", "P", "3", "2", "--cache-dir", d)[1] == "x^3-8x^2+128\n"
    code, out, _ = run(capsys, "cache", "list", "--cache-dir", d)
    assert "P (3,2) full" in out


def test_vtable_csv_and_plot(tmp_path, capsys):
    out = tmp_path / "t.csv"
    code, _, err = run(capsys, "vtable", "--m", "3-7", "--p", "2-23", "--format", "csv",
                       "--out", str(out), "--threads", "2")
    assert code == 0
    rows = {(int(r["m"]), int(r["p"])): r for r in csv.DictReader(out.open())}
    assert rows[(3, 2)]["v2_trace"] == "3"
    assert rows[(7, 23)]["v2_trace"] == "31" and rows[(7, 23)]["exceeds"] == "yes"
    assert rows[(6, 23)]["exceeds"] == "yes" and rows[(6, 19)]["exceeds"] == "no"
    png = tmp_path / "t.png"
    assert png.exists() and png.read_bytes()[:4] == b"\x89PNG"


def test_vtable_deterministic(tmp_path, capsys):
    a = run(capsys, "vtable", "--m", "8", "--p", "89", "--format", "json")[1]
    b = run(capsys, "vtable", "--m", "8", "--p", "89", "--format", "json", "--threads", "3")[1]
    assert a == b and json.loads(a)["rows"][0]["v2_trace"] == 96


def test_vtable_needs_ranges(capsys):
    assert run(capsys, "vtable")[0] == 2


def test_trace(capsys):
    code, out, _ = run(capsys, "trace", "2", "3", "--format", "json")
    assert json.loads(out)["trace"] == "48"
    code, out, _ = run(capsys, "trace", "6", "23", "--mode", "truncated")
    assert "v2 = 30" in out


def test_check_special(capsys):
    code, out, _ = run(capsys, "check-special", "5", "1")
    assert code == 0 and "proven" in out
    code, out, _ = run(capsys, "check-special", "9", "5", "--inductive", "--format", "json")
    assert code == 0 and json.loads(out)["verdict"] == "proven"
    assert run(capsys, "check-special", "6", "11", "--budget", "1000")[0] == 3


def test_res_check(capsys):
    code, out, _ = run(capsys, "res-check", "2", "2", "--ell-max", "2", "--format", "csv")
    assert code == 0 and out.splitlines()[1:] == ["1,25,0", "2,41,0"]


def test_certify(tmp_path, capsys):
    path = tmp_path / "cert.json"
    code, out, _ = run(capsys, "certify", "2", "6", "3", "--out", str(path))
    assert code == 0 and "not an algebraic unit" in out
    assert run(capsys, "certify", "--replay", str(path))[0] == 0
    assert run(capsys, "certify", "3", "3", "3")[0] == 2
    assert run(capsys, "certify", "4", "10", "3")[0] == 2


def test_certify_large_prime(capsys):
    code, out, _ = run(capsys, "certify", "4", "2056", "257")
    assert code == 0 and json.loads(out)["verdict"] == "proven"


def test_verify_paper_scope(capsys):
    code, out, _ = run(capsys, "verify-paper", "--scope", "lemmas", "--format", "json")
    doc = json.loads(out)
    assert code == 0 and doc["summary"]["fail"] == 0
    assert run(capsys, "verify-paper", "--scope", "bogus")[0] == 2


def test_parse_range():
    assert parse_range("2-4,7") == [2, 3, 4, 7]
