import json
import subprocess
import sys

import numpy as np
import pytest

from bohr_radii.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, fmt, main


def run(*args):
    proc = subprocess.run([sys.executable, "-m", "bohr_radii", *args], capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def radius_of(capsys, *args):
    assert main(["radius", *args]) == EXIT_OK
    return json.loads(capsys.readouterr().out)


def test_radius_cesaro(capsys):
    rec = radius_of(capsys, "--operator", "cesaro")
    assert list(rec) == ["equation_id", "radius", "residual", "bracket", "iterations", "tol"]
    assert rec["radius"] == pytest.approx(0.533589, abs=1e-5)


def test_radius_dft_and_beta_cesaro(capsys):
    assert abs(radius_of(capsys, "--operator", "dft")["radius"] - 1 / 3) <= 1e-12
    assert abs(radius_of(capsys, "--operator", "beta-cesaro", "--beta", "2")["radius"] - 0.5) <= 1e-10


def test_radius_csv(capsys):
    assert main(["radius", "--operator", "dft", "--format", "csv"]) == EXIT_OK
    header, row = capsys.readouterr().out.splitlines()
    assert header.startswith("equation_id,radius,residual")
    assert row.split(",")[1] == fmt(1 / 3)


def test_subprocess_radius():
    code, out, _ = run("radius", "--operator", "bernardi", "--beta", "1")
    assert code == 0
    assert json.loads(out)["radius"] == pytest.approx(0.5828116438658114, abs=1e-12)


def _csv(text):
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    return lines[0].split(","), [ln.split(",") for ln in lines[1:]]


def test_sweep_beta_cesaro(capsys):
    assert main(["sweep", "--operator", "beta-cesaro", "--betas", "0.5,1,2"]) == EXIT_OK
    header, rows = _csv(capsys.readouterr().out)
    assert header == ["beta", "radius", "residual"]
    radii = [float(r[1]) for r in rows]
    assert radii[0] == pytest.approx(5 / 9, abs=1e-10)
    assert radii[1] == pytest.approx(0.533589, abs=1e-5)
    assert radii[2] == pytest.approx(0.5, abs=1e-10)


def test_sweep_range_to_large_beta(capsys):
    args = ["sweep", "--operator", "bernardi", "--beta-from", "1", "--beta-to", "1e6", "--steps", "4"]
    assert main(args) == EXIT_OK
    _, rows = _csv(capsys.readouterr().out)
    assert len(rows) == 4
    assert float(rows[-1][0]) == 1e6
    assert abs(float(rows[-1][1]) - 1 / 3) <= 1e-4


def test_sweep_single_step(capsys):
    assert main(["sweep", "--operator", "bernardi", "--beta-from", "2", "--beta-to", "9", "--steps", "1"]) == EXIT_OK
    _, rows = _csv(capsys.readouterr().out)
    assert len(rows) == 1 and float(rows[0][0]) == 2.0


def test_sweep_failed_row(capsys):
    code = main(["sweep", "--operator", "bernardi", "--m", "1", "--betas", "1,-5,2"])
    assert code == EXIT_OK
    header, rows = _csv(capsys.readouterr().out)
    assert header == ["beta", "radius", "residual", "note"]
    assert rows[1][1] == "nan" and rows[1][3]
    assert rows[0][3] == "" and float(rows[2][1]) > 0


@pytest.mark.parametrize("suite", ["identities", "monotonicity", "schwarz-pick"])
def test_verify_suites(capsys, suite):
    assert main(["verify", "--suite", suite]) == EXIT_OK
    out = capsys.readouterr().out.splitlines()
    assert all(ln.startswith("PASS") for ln in out[:-1])
    assert json.loads(out[-1])["failed"] == 0


def test_verify_sharpness_dft(capsys):
    assert main(["verify", "--suite", "sharpness", "--operator", "dft"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "holds at r=R-0.01" in out and "violated at r=R+0.01" in out


def test_verify_failure_exit(capsys):
    # with a negative offset both scans sit on the wrong side of the radius
    code = main(["verify", "--suite", "sharpness", "--operator", "dft", "--offset", "-0.01"])
    assert code == EXIT_FAIL
    summary = json.loads(capsys.readouterr().out.splitlines()[-1])
    assert summary["failed"] == 2 and len(summary["failures"]) == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["radius", "--operator", "bernardi"],
        ["radius", "--operator", "dft", "--beta", "2"],
        ["radius", "--operator", "cesaro", "--m", "2"],
        ["radius", "--operator", "beta-cesaro", "--beta", "-1"],
        ["radius", "--operator", "dft", "--tol", "0.5"],
        ["sweep", "--operator", "dft", "--betas", "1"],
        ["sweep", "--operator", "bernardi", "--beta-from", "1", "--beta-to", "2", "--steps", "0"],
        ["plot", "--samples", "1"],
    ],
)
def test_usage_errors(argv, capsys):
    assert main(argv) == EXIT_USAGE


def test_usage_errors_from_argparse():
    for args in (("radius", "--operator", "hilbert"), ("verify", "--suite", "nope"), ()):
        assert run(*args)[0] == 1


def test_plot(capsys):
    assert main(["plot", "--samples", "1000"]) == EXIT_OK
    text = capsys.readouterr().out
    first = text.splitlines()[0]
    root = float(first.split("=")[1])
    header, rows = _csv(text)
    assert header == ["r", "g1"]
    r = np.array([float(a) for a, _ in rows])
    g = np.array([float(b) for _, b in rows])
    assert len(r) == 1000 and r[0] == 0.0005 and r[-1] == 0.9995
    (idx,) = np.nonzero(np.sign(g[:-1]) != np.sign(g[1:]))
    assert len(idx) == 1
    assert abs(r[idx[0]] - root) <= 1e-3
    assert g[np.argmin(abs(r - 0.1))] > 0 and g[np.argmin(abs(r - 0.9))] < 0


def test_plot_other_operator(capsys):
    assert main(["plot", "--operator", "dft", "--samples", "10"]) == EXIT_OK
    assert _csv(capsys.readouterr().out)[0] == ["r", "phi"]


def test_byte_determinism_and_out(tmp_path):
    args = ("sweep", "--operator", "bernardi", "--betas", "0.5,1,3")
    first, second = run(*args), run(*args)
    assert first == second and first[0] == 0
    target = tmp_path / "t.csv"
    assert run(*args, "--out", str(target))[1] == ""
    assert target.read_bytes() == first[1].encode()
    assert b"\r\n" not in target.read_bytes()


def test_fmt():
    assert fmt(1 / 3) == "0.333333333333333"
    assert fmt(float("nan")) == "nan"
