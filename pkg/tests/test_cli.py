import json

import pytest

from gapwave import io
from gapwave.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_phase(capsys):
    assert run(capsys, "phase", "--be", "0") == (0, "0.000°\n", "")
    code, out, _ = run(capsys, "phase", "--be", "0.55", "--freq", "70")
    assert code == 0 and out == "106.814°\n"


def test_usage_errors(capsys):
    assert run(capsys, "phase")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "sweep", "--band", "75:64")[0] == 2
    assert run(capsys, "calibrate", "--npoints", "1")[0] == 2


def test_domain_errors(capsys):
    code, out, err = run(capsys, "phase", "--be", "2.0", "--freq", "64")
    assert code == 1 and out == ""
    assert err.count("\n") == 1 and "error" in err


def test_bad_config(tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"guide": {"broad_wall_width_mm": 3.76,
                                         "band_ghz": {"f_low": 64, "f_high": 75}},
                               "a_e_mm": -1}))
    code, _, err = run(capsys, "phase", "--be", "0", "--config", str(cfg))
    assert code == 1 and "a_e > 0" in err


def test_config_is_used(tmp_path, capsys):
    cfg = tmp_path / "c.json"
    cfg.write_text(json.dumps({"guide": {"broad_wall_width_mm": 3.76,
                                         "band_ghz": {"f_low": 64, "f_high": 75}},
                               "a_e_mm": 22}))
    _, out, _ = run(capsys, "phase", "--be", "0.55", "--freq", "70", "--config", str(cfg))
    assert out == "213.628°\n"


def test_calibrate(capsys):
    code, out, _ = run(capsys, "calibrate", "--npoints", "5")
    lines = out.splitlines()
    assert code == 0 and lines[0] == "turns,be_mm,phase_deg" and lines[1] == "0,0,0"
    assert len(lines) == 6


def test_sweep_to_file(tmp_path, capsys):
    out = tmp_path / "s.csv"
    assert run(capsys, "sweep", "--be", "0,0.55", "--nfreq", "5", "--out", str(out))[0] == 0
    sweep = io.read_phase_sweep_csv(out)
    assert sweep.phase_shift_deg.shape == (2, 5)


def test_sparams(tmp_path, capsys):
    out = tmp_path / "p.s2p"
    code, _, _ = run(capsys, "sparams", "--be", "0.55", "--band", "64:75", "--nfreq", "221",
                     "--nsections", "64", "--out", str(out))
    assert code == 0
    assert len(io.read_touchstone(out)) == 221


def test_design_infeasible(capsys):
    code, out, _ = run(capsys, "design", "--min-phase", "720", "--max-length", "10",
                       "--band", "64:76")
    report = json.loads(out)
    assert code == 0 and report["feasible"] is False
    assert report["achieved_phase_deg"] == pytest.approx(225.643, abs=0.01)


def test_compare(tmp_path, capsys):
    code, out, _ = run(capsys, "sweep", "--be", "0.55", "--nfreq", "12")
    rows = [line.split(",") for line in out.splitlines()[1:]]
    measured = tmp_path / "m.csv"
    measured.write_text("freq_ghz,value\n" + "".join(
        f"{r[0]},{float(r[2]) + 5}\n" for r in rows))
    code, out, _ = run(capsys, "compare", "--measured", str(measured), "--be", "0.55",
                       "--nfreq", "12")
    report = json.loads(out)
    assert code == 0
    assert report["mean_error"] == pytest.approx(5.0, abs=1e-9)
    assert report["max_abs_error"] == pytest.approx(5.0, abs=1e-9)


def test_compare_s11(tmp_path, capsys):
    measured = tmp_path / "m.csv"
    measured.write_text("freq_ghz,value\n64,-12\n70,-14\n75,-13\n")
    code, out, _ = run(capsys, "compare", "--measured", str(measured), "--be", "0.55",
                       "--kind", "s11_db", "--nsections", "64")
    assert code == 0 and json.loads(out)["kind"] == "s11_db"


def test_compare_malformed(tmp_path, capsys):
    measured = tmp_path / "m.csv"
    measured.write_text("freq_ghz,value\n64\n")
    code, _, err = run(capsys, "compare", "--measured", str(measured), "--be", "0.55")
    assert code == 1 and "line 2" in err


def test_byte_stable(capsys, monkeypatch):
    outs = []
    for threads in ("1", "4", "0"):
        monkeypatch.setenv("GAPWAVE_THREADS", threads)
        outs.append(run(capsys, "sweep", "--be", "0,0.3,0.9", "--nfreq", "9")[1])
    assert outs[0] == outs[1] == outs[2]
