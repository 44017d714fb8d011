import subprocess
import sys

import numpy as np
import pytest

from hypcodes.cli import main
from hypcodes.codes import code_build, encode, format_word
from hypcodes.field import gf
from hypcodes.io import format_code_spec, parse_code_spec
from hypcodes.lattice import build_hyp_set


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_params_families(capsys):
    code, out, _ = run(capsys, "params", "--family", "cube", "--q", "32", "--m", "2", "--s", "24")
    assert code == 0 and "n=1024" in out and "k=625" in out and "delta=64" in out
    code, out, _ = run(capsys, "params", "--family", "hyp", "--q", "9", "--m", "2", "--d", "27")
    assert code == 0 and "k=32" in out
    code, out, _ = run(capsys, "params", "--family", "rm", "--q", "11", "--m", "2", "--s", "10")
    assert "delta=11" in out
    code, out, _ = run(capsys, "params", "--family", "hyp", "--q", "4", "--m", "2", "--d", "9")
    assert "delta=9 (exhaustive)" in out and "t=4" in out


def test_params_from_spec_file(capsys, tmp_path):
    F = gf(8)
    spec = tmp_path / "code.txt"
    spec.write_text(format_code_spec(F, build_hyp_set(8, 2, 20)))
    assert parse_code_spec(spec.read_text())[1] == build_hyp_set(8, 2, 20)
    code, out, _ = run(capsys, "params", "--in", str(spec))
    assert code == 0 and "n=64" in out


def test_params_with_p_and_k(capsys):
    code, out, _ = run(capsys, "params", "--family", "rm", "--p", "2", "--k", "3", "--m", "1", "--s", "2")
    assert code == 0 and "n=8" in out and "k=3" in out


def test_bounds(capsys):
    code, out, _ = run(capsys, "bounds", "--q", "9", "--m", "2", "--d", "27")
    assert code == 0
    assert "largest_rm_inside=6" in out and "smallest_rm_containing=7" in out


def test_lattice_export(capsys, tmp_path):
    path = tmp_path / "h.txt"
    code, _, _ = run(capsys, "lattice-export", "--family", "hyp", "--q", "9", "--m", "2", "--d", "27", "--out", str(path))
    lines = path.read_text().splitlines()
    assert code == 0 and lines[0].startswith("SET q=9 m=2") and len(lines) == 33


def test_repro_all(capsys):
    code, out, _ = run(capsys, "repro", "--all")
    assert code == 0
    assert "0 failed" in out and "FAIL " not in out


def test_repro_list_and_unknown(capsys):
    code, out, _ = run(capsys, "repro", "--list")
    assert code == 0 and "q16-list" in out
    code, _, err = run(capsys, "repro", "nope")
    assert code == 2 and "unknown" in err


def _sample(capsys, tmp_path, *extra):
    y = tmp_path / "y.txt"
    sent = tmp_path / "c.txt"
    code, _, _ = run(capsys, "sample", "--out", str(y), "--sent", str(sent), *extra)
    assert code == 0
    return y, sent.read_text().strip()


@pytest.mark.parametrize(
    "via,q,d,t",
    [("supercode", 9, 9, 2), ("coset", 4, 9, 4), ("intermediate", 5, 8, 2), ("cube", 32, 225, 15), ("nearest", 4, 9, 4)],
)
def test_decode_round_trip(capsys, tmp_path, via, q, d, t):
    y, sent = _sample(capsys, tmp_path, "--family", "hyp", "--q", str(q), "--m", "2", "--d", str(d),
                      "--t", str(t), "--seed", "3")
    code, out, _ = run(capsys, "decode", "--via", via, "--q", str(q), "--m", "2", "--d", str(d), "--in", str(y))
    assert code == 0, via
    lines = out.splitlines()
    assert lines[0] == sent and lines[2] == f"errors={t}"


def test_decode_failure_exit_code(capsys, tmp_path):
    # a word of RM_4(2,2) outside Hyp_4(9,2): the supercode step must reject it
    from hypcodes.lattice import build_rm_set

    y = tmp_path / "y.txt"
    y.write_text(format_word(encode(code_build(gf(4), build_rm_set(4, 2, 2)), {(2, 0): 1})) + "\n")
    code, out, err = run(capsys, "decode", "--via", "supercode", "--q", "4", "--m", "2", "--d", "9", "--in", str(y))
    assert code == 1 and out == "" and "failure" in err


def test_usage_errors(capsys, tmp_path):
    assert run(capsys, "params", "--family", "hyp", "--q", "6", "--m", "2", "--d", "3")[0] == 2
    assert run(capsys, "params", "--family", "hyp", "--q", "4", "--m", "2")[0] == 2
    y = tmp_path / "short.txt"
    y.write_text("1,2,3\n")
    assert run(capsys, "decode", "--via", "nearest", "--q", "4", "--m", "2", "--d", "9", "--in", str(y))[0] == 2
    assert run(capsys, "decode", "--via", "nearest", "--q", "4", "--m", "2", "--d", "9", "--in", str(tmp_path / "missing"))[0] == 2
    assert run(capsys, "list-decode", "--q", "4", "--m", "2", "--d", "9", "--r", "5", "--in", str(y))[0] == 2


def test_list_decode(capsys, tmp_path):
    y, sent = _sample(capsys, tmp_path, "--family", "hyp", "--q", "16", "--m", "2", "--d", "81", "--t", "8", "--seed", "5")
    code, out, _ = run(capsys, "list-decode", "--q", "16", "--m", "2", "--d", "81", "--r", "8", "--in", str(y))
    lines = out.splitlines()
    assert code == 0
    assert lines[0] == "plan r=8 t=1 mode=strict levels=236,36 unknowns=272 n=256"
    assert lines[1].split()[1] == sent


def test_output_is_deterministic(capsys, tmp_path):
    outs = []
    for _ in range(2):
        _, out, _ = run(capsys, "sample", "--family", "rm", "--q", "7", "--m", "2", "--s", "4", "--t", "3", "--seed", "11")
        outs.append(out)
    assert outs[0] == outs[1]


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "hypcodes.cli", "params", "--family", "rm", "--q", "3", "--m", "1", "--s", "1"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "k=2" in res.stdout
