import json

import numpy as np
import pytest

import tfu
from tfu import cli


def write_config(tmp_path, text):
    path = tmp_path / "config.ini"
    path.write_text(text, encoding="utf-8")
    return str(path)


def read_json(path):
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)


# ---------------------------------------------------------------------------
# function spec grammar


def test_parse_gaussian_defaults_to_unit_norm():
    fn = cli.parse_function_spec("gaussian:a=2")
    assert fn.kind == "gaussian" and fn.width == 2.0
    assert fn.amplitude == pytest.approx(4**0.25)


def test_parse_gaussian_explicit_amplitude_and_shifts():
    fn = cli.parse_function_spec("gaussian:a=1:amp=1:z=1:w=-2")
    assert fn.amplitude == 1.0 and fn.translation == 1.0 and fn.modulation == -2.0


def test_parse_hermite():
    fn = cli.parse_function_spec("hermite:n=2")
    assert fn.kind == "hermite" and fn.order == 2


@pytest.mark.parametrize("bad", ["", "splines:k=3", "gaussian:a", "gaussian:q=1"])
def test_parse_rejects_malformed_specs(bad):
    with pytest.raises(cli.ConfigError):
        cli.parse_function_spec(bad)


# ---------------------------------------------------------------------------
# run command


def test_run_isometry_scenario(tmp_path, capsys):
    config = write_config(
        tmp_path,
        "[gauss-pair]\nf = gaussian:a=1\ng = gaussian:a=1\nchecks = isometry\n",
    )
    out = tmp_path / "out"
    rc = cli.main(["run", config, "--out", str(out), "--no-timestamp"])
    assert rc == 0
    report = read_json(out / "gauss-pair.json")
    assert report["passed"]
    assert report["checks"]["isometry"]["defect"] < 1e-9
    assert "timestamp" not in report


def test_run_rejects_out_of_range_support_p(tmp_path, capsys):
    config = write_config(
        tmp_path,
        "[bad]\nchecks = support\nsupport = lp_vs_l1p p=2 eps=0\n",
    )
    rc = cli.main(["run", config, "--out", str(tmp_path / "out")])
    assert rc == 1
    assert "p out of range" in capsys.readouterr().err


def test_run_rejects_unknown_key(tmp_path, capsys):
    config = write_config(tmp_path, "[s]\nchecks = isometry\nfrequency = 3\n")
    rc = cli.main(["run", config, "--out", str(tmp_path / "out")])
    assert rc == 1
    assert "unknown key 'frequency' in [s]" in capsys.readouterr().err


def test_run_rejects_unknown_check(tmp_path, capsys):
    config = write_config(tmp_path, "[s]\nchecks = vibes\n")
    rc = cli.main(["run", config, "--out", str(tmp_path / "out")])
    assert rc == 1
    assert "unknown check 'vibes'" in capsys.readouterr().err


def test_run_assertion_failure_exits_two_with_partial_results(tmp_path):
    config = write_config(
        tmp_path,
        "[impossible]\nchecks = isometry\nisometry_tol = 1e-30\n"
        "[fine]\nchecks = isometry\n",
    )
    out = tmp_path / "out"
    rc = cli.main(["run", config, "--out", str(out), "--no-timestamp"])
    assert rc == 2
    assert not read_json(out / "impossible.json")["passed"]
    assert read_json(out / "fine.json")["passed"]
    summary = read_json(out / "summary.json")
    assert not summary["passed"]


def test_run_scenario_filter(tmp_path):
    config = write_config(
        tmp_path,
        "[one]\nchecks = isometry\n[two]\nchecks = isometry\n",
    )
    out = tmp_path / "out"
    rc = cli.main(["run", config, "--out", str(out), "--no-timestamp", "--scenario", "two"])
    assert rc == 0
    assert not (out / "one.json").exists()
    assert (out / "two.json").exists()


def test_run_missing_config(tmp_path, capsys):
    rc = cli.main(["run", str(tmp_path / "nope.ini"), "--out", str(tmp_path / "out")])
    assert rc == 1
    assert "config not found" in capsys.readouterr().err


def test_run_small_config_byte_identical(tmp_path, monkeypatch):
    config = write_config(
        tmp_path,
        "[pair]\nf = gaussian:a=1\ng = hermite:n=1\nchecks = isometry, lieb\nlieb_p = 1.5, 2, 3\n",
    )
    outs = []
    for sub, threads in (("a", "1"), ("b", "2")):
        out = tmp_path / sub
        monkeypatch.setenv("TFU_THREADS", threads)
        assert cli.main(["run", config, "--out", str(out), "--no-timestamp"]) == 0
        outs.append(out)
    for name in ("pair.json", "pair__lieb.csv", "summary.json"):
        assert (outs[0] / name).read_bytes() == (outs[1] / name).read_bytes()


def test_run_timestamp_present_by_default(tmp_path):
    config = write_config(tmp_path, "[s]\nchecks = isometry\n")
    out = tmp_path / "out"
    assert cli.main(["run", config, "--out", str(out)]) == 0
    assert "timestamp" in read_json(out / "s.json")


# ---------------------------------------------------------------------------
# export


def test_export_small_array_layout(tmp_path):
    grid = tfu.TFGrid(x_step=0.5, xi_step=0.5, x_count=2, xi_count=2)
    values = np.array([[1 + 2j, 0.25], [-1.5j, 3.0]], dtype=complex)
    path = tmp_path / "small.csv"
    cli.export_tfarray(tfu.TFArray(grid=grid, values=values), path)
    lines = path.read_text().splitlines()
    assert lines[0] == "x,xi,re,im,abs"
    assert len(lines) == 5
    assert lines[1].startswith("-0.5,-0.5,1,2,")


def test_export_roundtrip_bit_exact(tmp_path, layout, grid):
    f = tfu.sample(tfu.unit_gaussian(), layout)
    v = tfu.compute_stft(f, f, grid)
    path = tmp_path / "stft.csv"
    cli.export_tfarray(v, path)
    back = cli.import_tfarray(path)
    assert np.array_equal(back.values, v.values)
    assert back.grid.shape == v.grid.shape


def test_export_stft_command_peak_at_origin(tmp_path):
    path = tmp_path / "v.csv"
    rc = cli.main(
        ["export-stft", "--f", "gaussian:a=1", "--g", "gaussian:a=1", "--out", str(path)]
    )
    assert rc == 0
    lines = path.read_text().splitlines()
    assert len(lines) == 256 * 256 + 1
    best = max(lines[1:], key=lambda ln: float(ln.rsplit(",", 1)[1]))
    x, xi, re, im, mag = best.split(",")
    assert (x, xi) == ("0", "0")
    assert float(mag) == pytest.approx(1.0, abs=1e-10)


# ---------------------------------------------------------------------------
# bounds


def test_bounds_command(capsys):
    rc = cli.main(["bounds", "--mode", "l1_fraction", "--p", "4", "--eps", "0.1", "--d", "1"])
    assert rc == 0
    printed = float(capsys.readouterr().out.strip())
    expected = tfu.lower_bound(
        tfu.SupportMode(tfu.SupportVariant.L1_FRACTION, p=4.0, epsilon=0.1), d=1
    )
    assert printed == expected


def test_bounds_command_rejects_bad_p(capsys):
    rc = cli.main(["bounds", "--mode", "lp_vs_l1p", "--p", "2", "--eps", "0"])
    assert rc == 1
    assert "p out of range" in capsys.readouterr().err


def test_bounds_command_rejects_bad_mode(capsys):
    rc = cli.main(["bounds", "--mode", "nope", "--p", "2"])
    assert rc == 1


def test_usage_error_exits_one():
    with pytest.raises(SystemExit) as exc:
        cli.main(["run"])  # missing --out
    assert exc.value.code == 1
