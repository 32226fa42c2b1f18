import io
import sys

import numpy as np
import pytest

from cqft.algebra import PAPER_AXIS
from cqft.cli import format_axis, main, parse_axis
from cqft.signalfile import read_signal
from cqft.transform import DEGENERATE_I, TransformSpec, cqdft, cqfft, cqfft2

from conftest import rel_err

MU = "1,0,1,1,1,-1"


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.StringIO(stdin))
    try:
        code = main(list(argv))
    except SystemExit as exc:
        code = exc.code
    out, err = capsys.readouterr()
    return code, out, err


def parse(text):
    return read_signal(io.StringIO(text))


def test_parse_axis():
    assert parse_axis(MU) == PAPER_AXIS
    assert parse_axis("I") is DEGENERATE_I
    assert parse_axis(format_axis(PAPER_AXIS)) == PAPER_AXIS


@pytest.mark.parametrize(
    "axis, code, expect",
    [(MU, 0, "PASS"), ("1,0,0,0,0,0", 0, "PASS"), ("1,0,0,1,0,0", 2, "FAIL")],
)
def test_validate_axis(capsys, axis, code, expect):
    rc, out, err = run(capsys, "validate-axis", axis)
    assert rc == code
    assert expect in out
    assert err == ""


def test_validate_axis_report(capsys):
    _, out, _ = run(capsys, "validate-axis", "--axis", MU)
    assert "seminorm: 1+0I" in out
    _, out, _ = run(capsys, "validate-axis", "1,0,0,1,0,0")
    assert "|Re|^2-|Im|^2: 0" in out


@pytest.mark.parametrize("axis", ["1,2,3", "a,b,c,d,e,f", "1,0,0,0,0,inf"])
def test_validate_axis_parse_error(capsys, axis):
    rc, out, err = run(capsys, "validate-axis", axis)
    assert rc == 1 and out == "" and "error" in err


def test_gen_delta(capsys):
    rc, out, _ = run(capsys, "gen", "delta", "4")
    assert rc == 0
    rows = [l for l in out.splitlines() if not l.startswith("#")]
    assert rows == ["1,0,0,0,0,0,0,0"] + ["0,0,0,0,0,0,0,0"] * 3


def test_gen_random_deterministic(capsys):
    _, a, _ = run(capsys, "gen", "random", "8", "--seed", "42")
    _, b, _ = run(capsys, "gen", "random", "8", "--seed", "42")
    _, c, _ = run(capsys, "gen", "random", "8", "--seed", "43")
    assert a == b != c


def test_gen_errors(capsys):
    assert run(capsys, "gen", "random", "8")[0] == 1
    assert run(capsys, "gen", "delta", "0")[0] == 1
    assert run(capsys, "gen", "delta")[0] == 1
    assert run(capsys, "gen", "sine", "4")[0] == 1
    assert run(capsys, "gen", "expwave", "4", "--axis", "1,0,0,1,0,0")[0] == 2


def test_expwave_concentrates_in_one_bin(capsys, tmp_path):
    _, out, _ = run(capsys, "gen", "expwave", "8", "--axis", MU, "--freq", "1")
    path = tmp_path / "wave.csv"
    path.write_text(out)
    rc, out, _ = run(capsys, "transform", str(path), "--axis", MU)
    assert rc == 0
    F = parse(out)
    expected = np.zeros((8, 4), dtype=complex)
    expected[1, 0] = 8
    np.testing.assert_allclose(F, expected, atol=1e-12)


def test_gen_2d(capsys):
    _, out, _ = run(capsys, "gen", "constant", "--dims", "2", "3")
    f = parse(out)
    assert f.shape == (2, 3, 4)
    assert np.all(f[..., 0] == 1)


@pytest.fixture
def random_file(capsys, tmp_path):
    def make(n=64, seed=1):
        _, out, _ = run(capsys, "gen", "random", str(n), "--seed", str(seed))
        path = tmp_path / f"random{n}_{seed}.csv"
        path.write_text(out)
        return path
    return make


def test_transform_round_trip(capsys, tmp_path, random_file):
    src = random_file()
    spectrum = tmp_path / "spectrum.csv"
    assert run(capsys, "transform", str(src), "--axis", MU, "--side", "right", "-o", str(spectrum))[0] == 0
    rc, out, err = run(capsys, "transform", str(spectrum), "--axis", MU, "--side", "right", "--direction", "inverse")
    assert rc == 0
    assert "input:" in err
    assert rel_err(parse(out), read_signal(open(src))) <= 1e-9


def test_engines_agree(capsys, random_file):
    src = random_file(64)
    _, fast, _ = run(capsys, "transform", str(src), "--axis", MU, "--engine", "fast")
    _, direct, _ = run(capsys, "transform", str(src), "--axis", MU, "--engine", "direct")
    assert rel_err(parse(fast), parse(direct)) <= 1e-9


def test_delta_file(capsys, tmp_path):
    _, out, _ = run(capsys, "gen", "delta", "5")
    path = tmp_path / "d.csv"
    path.write_text(out)
    _, out, _ = run(capsys, "transform", str(path), "--axis", MU)
    F = parse(out)
    np.testing.assert_allclose(F, np.tile(F[0], (5, 1)), atol=1e-15)
    np.testing.assert_allclose(F[0], [1, 0, 0, 0], atol=1e-15)


def test_cli_matches_library(capsys, random_file):
    src = random_file(30)
    f = read_signal(open(src))
    for engine, fn in (("fast", cqfft), ("direct", cqdft)):
        _, out, _ = run(capsys, "transform", str(src), "--axis", MU, "--engine", engine, "--direction", "inverse")
        expected = fn(f, TransformSpec(PAPER_AXIS, direction="inverse"))
        np.testing.assert_array_equal(parse(out), expected)


def test_stdin_input(capsys, monkeypatch, random_file):
    src = random_file(8)
    rc, out, _ = run(capsys, "transform", "-", "--axis", MU, stdin=src.read_text(), monkeypatch=monkeypatch)
    assert rc == 0
    np.testing.assert_array_equal(parse(out), cqfft(read_signal(open(src)), TransformSpec(PAPER_AXIS)))


def test_transform_2d(capsys, tmp_path):
    _, out, _ = run(capsys, "gen", "random", "--dims", "4", "6", "--seed", "3")
    path = tmp_path / "img.csv"
    path.write_text(out)
    f = parse(out)
    _, out, _ = run(capsys, "transform", str(path), "--axis", MU)
    assert "# dims: 4 6" in out
    np.testing.assert_array_equal(parse(out), cqfft2(f, TransformSpec(PAPER_AXIS)))


def test_transform_exit_codes(capsys, tmp_path, random_file):
    src = random_file(8)
    bad = tmp_path / "bad.csv"
    bad.write_text("1,2,3\n")
    assert run(capsys, "transform", str(bad), "--axis", MU)[0] == 1
    assert run(capsys, "transform", str(tmp_path / "missing.csv"), "--axis", MU)[0] == 1
    assert run(capsys, "transform", str(src))[0] == 1
    assert run(capsys, "transform", str(src), "--axis", "1,0,0,1,0,0")[0] == 2
    rc, out, err = run(capsys, "transform", str(src), "--axis", "I")
    assert rc == 3 and out == "" and "degenerate" in err


def test_degenerate_axis_on_scalar_file(capsys, tmp_path):
    _, out, _ = run(capsys, "gen", "expwave", "8", "--axis", "I", "--freq", "3")
    path = tmp_path / "scalar.csv"
    path.write_text(out)
    rc, out, _ = run(capsys, "transform", str(path), "--axis", "I")
    assert rc == 0
    F = parse(out)
    assert abs(F[3, 0] - 8) < 1e-12
    assert np.max(np.abs(np.delete(F, 3, axis=0))) < 1e-12


def test_streams_separated(capsys, random_file):
    src = random_file(16)
    rc, out, err = run(capsys, "transform", str(src), "--axis", MU)
    assert rc == 0
    parse(out)
    assert all(line.startswith(("input:", "output:")) for line in err.splitlines())
    assert "null" not in out


def test_null_diagnostics_reported(capsys, tmp_path):
    path = tmp_path / "null.csv"
    path.write_text("1,0,0,1,0,0,0,0\n0,0,0,0,0,0,0,0\n2,0,0,0,0,0,0,0\n")
    _, _, err = run(capsys, "transform", str(path), "--axis", MU)
    assert "input: 3 samples, 1 null, 1 zero" in err


def test_bench(capsys):
    rc, out, err = run(capsys, "bench", "--sizes", "8", "16", "--reps", "1", "--csv")
    assert rc == 0 and err == ""
    lines = out.splitlines()
    assert lines[0] == "n,direct_s,fast_s,ratio,max_rel_err"
    assert [l.split(",")[0] for l in lines[1:]] == ["8", "16"]
    assert all(float(l.split(",")[4]) <= 1e-9 for l in lines[1:])
    rc, out, _ = run(capsys, "bench", "--sizes", "8", "--reps", "1")
    assert rc == 0 and "fast/direct" in out
    assert run(capsys, "bench", "--sizes", "0")[0] == 1


def test_explore_null(capsys):
    assert run(capsys, "explore-null", "--trials", "0")[0] == 1
    rc, a, err = run(capsys, "explore-null", "--trials", "5", "--n", "16", "--seed", "9")
    assert rc == 0 and err == ""
    _, b, _ = run(capsys, "explore-null", "--trials", "5", "--n", "16", "--seed", "9")
    assert a == b
    assert "min |seminorm|" in a


def test_explore_null_hits_are_rechecked(capsys):
    # A huge tolerance flags everything; each hit is re-verified with the direct engine.
    rc, out, _ = run(capsys, "explore-null", "--trials", "2", "--n", "4", "--seed", "1", "--tol", "1e6")
    assert rc == 0
    hits = [l for l in out.splitlines() if l.strip().startswith("trial ")]
    assert len(hits) == 8
    assert all("direct engine confirms" in l for l in hits)


def test_module_entry_point():
    import subprocess

    proc = subprocess.run([sys.executable, "-m", "cqft", "validate-axis", MU], capture_output=True, text=True)
    assert proc.returncode == 0 and "PASS" in proc.stdout
