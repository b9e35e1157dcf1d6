import json
import math

import numpy as np
import pytest

from zetabounds import cli
from zetabounds import zeros as zr


def run(argv):
    return cli.main(argv)


def test_constants_flag(capsys):
    assert run(["--paper-constants"]) == 0
    out = capsys.readouterr().out
    assert "C1" in out and "0.168938" in out


def test_zeros_roundtrip(tmp_path, capsys):
    zfile = tmp_path / "z.txt"
    sfile = tmp_path / "s.json"
    rc = run(["zeros", "--t-max", "100", "--out", str(zfile),
              "--stats-out", str(sfile)])
    assert rc == 0
    stats = json.loads(sfile.read_text())
    assert stats["count"] == 29
    zl = zr.load_zeros(str(zfile))
    assert len(zl) == 29


def test_zeros_empty_valid_file(tmp_path):
    zfile = tmp_path / "z5.txt"
    assert run(["zeros", "--t-max", "5", "--out", str(zfile)]) == 0
    assert len(zr.load_zeros(str(zfile))) == 0


def test_zeros_corrupt_load(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("13.0\n")
    rc = run(["zeros", "--load", str(bad), "--t-max", "5"])
    assert rc != 0
    err = json.loads(capsys.readouterr().out)
    assert err["error"] == "ZeroFileError"


def test_psi_bound_pipeline(tmp_path, zl_med):
    zfile = tmp_path / "z.txt"
    zr.save_zeros(zl_med, str(zfile))
    out = tmp_path / "rep.json"
    rc = run(["psi-bound", "--t-max", "1000", "--zero-file", str(zfile),
              "--x", "1e5,1e6", "--sigma", "0", "--out", str(out)])
    assert rc == 0
    rows = json.loads(out.read_text())
    assert len(rows) == 2
    assert all(r["sieve_inside"] for r in rows)
    lo = float(rows[0]["total_lower"])
    hi = float(rows[0]["total_upper"])
    assert lo <= float(rows[0]["sieve_value"]) <= hi


def test_psi_bound_sigma_one_branch(tmp_path, zl_med):
    zfile = tmp_path / "z.txt"
    zr.save_zeros(zl_med, str(zfile))
    out = tmp_path / "rep.json"
    rc = run(["psi-bound", "--t-max", "1000", "--zero-file", str(zfile),
              "--x", "1e5", "--sigma", "1", "--out", str(out)])
    assert rc == 0
    rows = json.loads(out.read_text())
    want = math.log(1e5) - 0.5772156649015328606
    assert abs(float(rows[0]["main_term"]) - want) < 1e-12


def test_psi_bound_usage_error(tmp_path, zl_med, capsys):
    zfile = tmp_path / "z.txt"
    zr.save_zeros(zl_med, str(zfile))
    rc = run(["psi-bound", "--t-max", "1000", "--zero-file", str(zfile),
              "--x", "100"])
    assert rc != 0
    assert "must exceed" in json.loads(capsys.readouterr().out)["message"]


def test_psi_bound_byte_identical(tmp_path, zl_med):
    zfile = tmp_path / "z.txt"
    zr.save_zeros(zl_med, str(zfile))
    o1, o2 = tmp_path / "a.json", tmp_path / "b.json"
    for o in (o1, o2):
        assert run(["psi-bound", "--t-max", "1000", "--zero-file",
                    str(zfile), "--x", "1e5", "--out", str(o)]) == 0
    assert o1.read_bytes() == o2.read_bytes()


def test_counterexample_table(tmp_path):
    out = tmp_path / "c.csv"
    rc = run(["counterexample", "--K", "60", "--T", "1", "--delta", "0.1",
              "--N", "1,2", "--out", str(out)])
    assert rc == 0
    lines = out.read_text().strip().split("\n")
    assert lines[0] == "N,x,empirical_mean,predicted,allowance"
    assert len(lines) == 3


def test_sieve_extrema_csv(capsys):
    rc = run(["sieve", "--x-max", "1e6", "--statistic", "lambda-over-n"])
    assert rc == 0
    out = capsys.readouterr().out
    assert "1,min,1423,1," in out


def test_sieve_checkpoint_csv(capsys):
    rc = run(["sieve", "--x-max", "1000", "--checkpoints", "10,100"])
    assert rc == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "x,psi,delta"


def test_verify_suite(tmp_path, capsys):
    out = tmp_path / "v.json"
    rc = run(["verify", "--suite", "appendix-c", "--out", str(out)])
    assert rc == 0
    rows = json.loads(out.read_text())
    assert rows and all(r["pass"] for r in rows)


def test_verify_deterministic(tmp_path):
    o1, o2 = tmp_path / "a.json", tmp_path / "b.json"
    for o in (o1, o2):
        assert run(["verify", "--suite", "appendix-c", "--out",
                    str(o)]) == 0
    assert o1.read_bytes() == o2.read_bytes()
