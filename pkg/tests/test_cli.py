import csv
import io
import json
import subprocess
import sys

import pytest

from qrsync.cli import CodeRecord, main, sqrt_bound
from qrsync.cyclic import new_cyclic
from qrsync.poly2 import parse


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_qr_json(capsys):
    code, out, _ = run(capsys, "qr", "--p", "31")
    assert code == 0
    doc = json.loads(out)
    assert doc["field"] == {"t": 5, "modulus": "x^5+x^2+1"}
    gens = {c["label"]: c["generator"]["text"] for c in doc["codes"]}
    assert {gens["R"], gens["NR"]} == {
        "x^15+x^12+x^7+x^6+x^2+x+1", "x^15+x^14+x^13+x^9+x^8+x^3+1"}
    assert all(c["k"] in (15, 16) for c in doc["codes"])


def test_qr_lemma2_and_distance(capsys):
    code, out, _ = run(capsys, "qr", "--p", "23", "--verify-lemma2", "--min-distance")
    assert code == 0
    doc = json.loads(out)
    assert doc["lemma2"]["ok"] is True
    r = next(c for c in doc["codes"] if c["label"] == "R")
    assert r["min_distance"] == {"value": 7, "exact": True}


def test_qr_distance_falls_back_to_bound(capsys):
    code, out, _ = run(capsys, "qr", "--p", "47", "--min-distance", "--cap-k", "10",
                       "--format", "csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    r = next(x for x in rows if x["label"] == "R")
    assert r["min_distance"] == str(sqrt_bound(47)) and r["exact"] == "false"


def test_qr_bad_inputs(capsys):
    code, _, err = run(capsys, "qr", "--p", "17", "--verify-lemma2")
    assert code == 2 and "error" in err
    assert run(capsys, "qr", "--p", "15")[0] == 2


def test_qr_text(capsys):
    code, out, _ = run(capsys, "qr", "--p", "7", "--format", "text", "--verify-lemma2")
    assert code == 0 and "lemma2: ok" in out


def test_chain(capsys):
    code, out, _ = run(capsys, "chain", "--l", "5")
    doc = json.loads(out)
    assert code == 0 and doc["dims"] == [16, 21, 26] and doc["z_bound"] == 2
    assert [r["dim_q"] for r in doc["theorem2"]] == [1, 11, 21]
    code, out, _ = run(capsys, "chain", "--l", "7", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0] == ["rep", "degree", "factor", "factor_hex"] and len(rows) == 10
    assert all(r[1] == "7" for r in rows[1:])
    assert run(capsys, "chain", "--l", "4")[0] == 2


def test_params(capsys):
    code, out, _ = run(capsys, "params", "--p", "31", "--cl", "3", "--cr", "2", "--format", "text")
    assert code == 0 and out.startswith("(3,2)-[[36,1]]")
    code, out, _ = run(capsys, "params", "--p", "31", "--z", "1", "--cl", "15", "--cr", "15")
    doc = json.loads(out)
    assert doc["dim_q"] == 11 and doc["ord_f"] == 31
    assert run(capsys, "params", "--p", "31", "--cl", "16", "--cr", "15")[0] == 2
    code, out, _ = run(capsys, "params", "--p", "127", "--no-distance", "--format", "csv")
    assert code == 0 and "dim_q" in out.splitlines()[0]


def test_simulate(capsys):
    code, out, _ = run(capsys, "simulate", "--p", "31", "--cl", "15", "--cr", "15",
                       "--trials", "300", "--max-errors", "2", "--seed", "7")
    doc = json.loads(out)
    assert code == 0 and doc["successes"] == 300 and doc["failures"] == []
    assert run(capsys, "simulate", "--p", "31", "--max-errors", "3")[0] == 2
    code, out, _ = run(capsys, "simulate", "--p", "31", "--cl", "3", "--cr", "3", "--trials",
                       "200", "--max-errors", "6", "--stress", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows[0][0] == "trial_index" and len(rows) > 1


def test_mindist(capsys):
    code, out, _ = run(capsys, "mindist", "--n", "7", "--g", "x^3+x+1")
    assert code == 0 and json.loads(out)["min_distance"]["value"] == 3
    code, out, _ = run(capsys, "mindist", "--n", "7", "--g", "0xb", "--format", "text")
    assert out == "[7,4] d = 3 exact=True\n"
    assert run(capsys, "mindist", "--n", "7", "--g", "x^2+1")[0] == 2
    assert run(capsys, "mindist")[0] == 2


def test_output_file_is_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert main(["simulate", "--p", "31", "--cl", "4", "--cr", "4", "--trials", "100",
                     "--max-errors", "5", "--stress", "--seed", "11", "--output", str(path)]) == 0
    assert a.read_bytes() == b.read_bytes()
    assert capsys.readouterr().out == ""


def test_code_record_round_trip():
    rec = CodeRecord.from_code("x", new_cyclic(7, parse("x^3+x+1")), distance=True)
    assert CodeRecord.from_dict(json.loads(json.dumps(rec.to_dict()))) == rec
    d = rec.to_dict()
    d["generator"]["hex"] = "f"
    with pytest.raises(ValueError):
        CodeRecord.from_dict(d)


def test_sqrt_bound():
    assert sqrt_bound(31) == 6 and sqrt_bound(23) == 6 and sqrt_bound(17) == 5


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "qrsync", "chain", "--l", "3", "--format", "text"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and "z=0: [[7+c_l+c_r, 1]]" in r.stdout
