import json
import subprocess
import sys
from pathlib import Path

import pytest

from domtile import cli
from domtile.region import region_to_json
from domtile.families import aztec

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_count(capsys):
    assert run(capsys, "count", "aztec:4")[:2] == (0, "1024\n")
    assert run(capsys, "count", "rect:2,3")[:2] == (0, "3\n")


def test_count_files(capsys, tmp_path):
    odd = tmp_path / "odd.txt"
    odd.write_text("###\n.#.\n")
    assert run(capsys, "count", str(odd))[:2] == (0, "0\n")
    js = tmp_path / "az.json"
    js.write_text(region_to_json(aztec(3)))
    assert run(capsys, "count", str(js))[:2] == (0, "64\n")


def test_parse_errors_exit_2(capsys, tmp_path):
    bad = tmp_path / "bad.txt"
    bad.write_text("#.#\n")
    assert run(capsys, "count", str(bad))[0] == 2
    assert run(capsys, "count", "hexagon:3")[0] == 2
    assert run(capsys, "count", str(tmp_path / "missing.txt"))[0] == 2
    assert run(capsys, "residue", "rect:2,2", "--mod", "3", "--method", "reduce")[0] == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["table", "--family", "Q", "--variant", "a"])
    assert exc.value.code == 2


def test_frontier_exit_3(capsys):
    assert run(capsys, "count", "rect:10,10", "--max-frontier", "4")[0] == 3


def test_residue(capsys, tmp_path):
    code, out, err = run(capsys, "residue", "rect:5,10", "--mod", "4", "--method", "both")
    assert (code, out) == (0, "1\n")
    assert "trace" in err
    assert run(capsys, "residue", "aztec:3", "--mod", "4", "--method", "reduce")[:2] == (0, "0\n")
    assert run(capsys, "residue", "rect:1,1", "--mod", "4")[:2] == (0, "0\n")
    assert run(capsys, "residue", "rect:4,9", "--mod", "2", "--method", "both")[0] == 0
    trace = tmp_path / "trace.json"
    run(capsys, "residue", "rect:4,8", "--method", "reduce", "--trace", str(trace))
    steps = json.loads(trace.read_text())
    assert steps[-1]["cells"] == 32


def test_disagreement_exit_4(capsys, monkeypatch):
    monkeypatch.setattr(cli.ReductionEngine, "residue4", lambda self, r: (3, 0))
    assert run(capsys, "residue", "rect:2,2", "--method", "both")[0] == 4


def test_corners_and_axes(capsys):
    code, out, _ = run(capsys, "corners", "rect:2,3", "--pmax", "1")
    rows = [json.loads(line) for line in out.splitlines()]
    assert code == 0 and len(rows) == 4
    code, out, _ = run(capsys, "axes", "aztec:2")
    assert len(out.splitlines()) == 4
    code, out, _ = run(capsys, "axes", "rect:4,8", "--pairs", "-k", "4", "--pmax", "1")
    vertical = [json.loads(x) for x in out.splitlines() if x.startswith('{"axis": "vertical')]
    assert len(vertical[0]["pairs"]) == 2


def test_gen(capsys):
    code, out, _ = run(capsys, "gen", "T:2,5,4")
    assert out.splitlines()[0] == "...#####..."
    code, out, _ = run(capsys, "gen", "rect:1,2", "--format", "json")
    assert json.loads(out) == {"cells": [[0, 0], [1, 0]]}


def test_table_golden(capsys, tmp_path):
    out = tmp_path / "t.csv"
    assert run(capsys, "table", "--family", "D", "--variant", "b", "--out", str(out))[0] == 0
    assert out.read_bytes() == (GOLDEN / "table_D_b.csv").read_bytes()


def test_table_rows(capsys):
    _, out, _ = run(capsys, "table", "--family", "D", "--variant", "b", "--kmax", "10",
                    "--pmax", "2")
    rows = [line.split(",") for line in out.splitlines()[2:]]
    odd = [r[5] for r in rows if r[3] == "1"]
    even = [r[5] for r in rows if r[3] == "2"]
    assert ",".join(odd) == "1,3,3,3,3,1,1,1,1,3"
    assert ",".join(even) == "1,1,1,3,3,3,3,1,1,1"
    assert all(r[-1] == "pass" for r in rows)


def test_table_T_b_all_one(capsys):
    code, out, _ = run(capsys, "table", "--family", "T", "--variant", "b", "--kmax", "5",
                       "--pmax", "3")
    assert code == 0
    assert {line.split(",")[5] for line in out.splitlines()[2:]} == {"1"}


def test_table_mismatch_exit_5(capsys):
    code, out, _ = run(capsys, "table", "--family", "D", "--variant", "c", "--kmax", "6",
                       "--pmax", "1")
    assert code == 5
    assert "D,c,6,1,8,3,1,FAIL" in out


def test_verify_golden(capsys, tmp_path):
    out = tmp_path / "v.csv"
    assert run(capsys, "verify", "--theorem", "doublewall", "--suite", "families",
               "--out", str(out))[0] == 0
    assert out.read_bytes() == (GOLDEN / "verify_doublewall_families.csv").read_bytes()
    regions = {line.split(",")[0] for line in out.read_text().splitlines()[2:]}
    assert {"aztec:2", "aztec:3", "aztec:4", "aztec:5"} <= regions
    out2 = tmp_path / "f.csv"
    run(capsys, "verify", "--theorem", "k2kk", "--suite", "fuzz", "--count", "40",
        "--seed", "3", "--max-cells", "24", "--out", str(out2))
    assert out2.read_bytes() == (GOLDEN / "verify_k2kk_fuzz.csv").read_bytes()


def test_verify_fuzz_2open(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "2open", "--suite", "fuzz", "--seed", "7",
                       "--max-cells", "30", "--count", "200")
    assert code == 0
    assert out.startswith("# domtile-verify v1\n")
    assert "FAIL" not in out


def test_verify_failure_exit_5(capsys, monkeypatch):
    from domtile import verify
    real = verify.instances

    def broken(*args, **kw):
        for inst in real(*args, **kw):
            yield verify.Instance(**{**inst.__dict__, "rhs": (inst.rhs + 1) % inst.modulus})

    monkeypatch.setattr(verify, "instances", broken)
    code, out, _ = run(capsys, "verify", "--theorem", "4wall", "--suite", "families",
                       "--max-cells", "20")
    assert code == 5 and "FAIL" in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "domtile", "count", "rect:2,4"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "5\n"
