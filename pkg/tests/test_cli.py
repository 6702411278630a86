import json

import numpy as np
import pytest

from cpnot.cli import main
from cpnot.sequences import load_sequence


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_list_catalog(capsys):
    code, out, _ = run(capsys, "list")
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0].startswith("name")
    assert len(lines) >= 19
    assert any(line.startswith("f1 ") for line in lines)
    assert any(line.startswith("asbo9-omega") for line in lines)


def test_show_f1(capsys):
    code, out, _ = run(capsys, "show", "f1", "--deg")
    assert code == 0
    assert "phases: 313.4 104.5 0.0 255.5 46.6" in out
    assert "symmetry: antisymmetric" in out
    assert "net phase: 0.0" in out
    assert "toggling (pulse-strength):" in out


def test_show_sequence_file(capsys, tmp_path):
    path = tmp_path / "seq.json"
    path.write_text(
        json.dumps(
            {
                "name": "custom",
                "pulses": [
                    {"theta_deg": 180.0, "phi_deg": 60.0},
                    {"theta_deg": 180.0, "phi_deg": 120.0},
                    {"theta_deg": 180.0, "phi_deg": 60.0},
                ],
                "meta": {},
            }
        )
    )
    code, out, _ = run(capsys, "show", str(path))
    assert code == 0
    assert "name: custom" in out


def test_show_unknown_selector(capsys):
    code, _, err = run(capsys, "show", "not-a-pulse")
    assert code == 1
    assert "error" in err


def test_certify_single_pi(capsys):
    code, out, _ = run(capsys, "certify", "single-pi")
    assert code == 0
    assert "epsilon axis: infidelity order 2" in out
    assert "f axis: infidelity order 2" in out


def test_coeffs(capsys):
    code, out, _ = run(capsys, "coeffs", "scrofulous3-pse", "--axis", "epsilon")
    assert code == 0
    assert "leading order: 4" in out
    code, _, _ = run(capsys, "coeffs", "scrofulous3-pse", "--axis", "f")
    assert code == 0


def test_coeffs_requires_axis(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["coeffs", "f1"])
    assert exc.value.code == 2


class TestScan:
    def test_csv_grid(self, capsys, tmp_path):
        out_path = tmp_path / "grid.csv"
        code, out, _ = run(
            capsys,
            "scan", "knill",
            "--emin", "-0.5", "--emax", "0.5",
            "--fmin", "-0.5", "--fmax", "0.5",
            "--ne", "11", "--nf", "7",
            "--out", str(out_path),
        )
        assert code == 0
        lines = out_path.read_text().strip().split("\n")
        assert lines[0] == "epsilon,f,fidelity"
        assert len(lines) == 1 + 11 * 7
        centre = [ln for ln in lines[1:] if ln.startswith("0,0,")]
        assert len(centre) == 1
        assert float(centre[0].split(",")[2]) == pytest.approx(1.0, abs=1e-9)

    def test_deterministic_output(self, capsys, tmp_path):
        a, b = tmp_path / "a.csv", tmp_path / "b.csv"
        for path in (a, b):
            code, _, _ = run(
                capsys, "scan", "f1", "--ne", "9", "--nf", "9", "--out", str(path)
            )
            assert code == 0
        assert a.read_bytes() == b.read_bytes()

    def test_gnuplot_script(self, capsys, tmp_path):
        out_path = tmp_path / "grid.csv"
        code, _, _ = run(
            capsys,
            "scan", "sym9", "--ne", "5", "--nf", "5",
            "--out", str(out_path), "--format", "gnuplot", "--kmax", "5",
        )
        assert code == 0
        script = (tmp_path / "grid.gp").read_text()
        assert "0.900000" in script and "0.999000" in script
        assert "0.999990" in script  # 1 - 10^-5
        assert "grid.csv" in script
        assert "set contour" in script

    def test_count_bounds(self, capsys, tmp_path):
        code, _, err = run(
            capsys, "scan", "f1", "--ne", "1", "--nf", "5",
            "--out", str(tmp_path / "x.csv"),
        )
        assert code == 1
        assert "--ne" in err

    def test_bad_flag_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            main(["scan", "f1", "--resolution", "3"])
        assert exc.value.code == 2


class TestDesign:
    def test_triangle(self, capsys, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        code, out, _ = run(capsys, "design", "triangle3")
        assert code == 0
        assert "240.0 120.0 240.0" in out
        seq = load_sequence(tmp_path / "triangle3.json")
        assert len(seq) == 3

    def test_sym9_writes_table_row(self, capsys, tmp_path):
        out_path = tmp_path / "nine.json"
        code, out, _ = run(capsys, "design", "sym9", "--out", str(out_path))
        assert code == 0
        assert "282.1" in out
        seq = load_sequence(out_path)
        assert np.allclose(
            np.degrees(seq.phis[:5]), (282.09, 339.37, 339.37, 159.37, 114.56), atol=0.01
        )

    def test_family5_with_target(self, capsys, tmp_path):
        out_path = tmp_path / "fam.json"
        code, out, _ = run(
            capsys, "design", "family5", "--target", "ore", "--out", str(out_path)
        )
        assert code == 0
        assert "residual" in out
        assert out_path.exists()

    def test_unknown_problem_exits_2(self):
        with pytest.raises(SystemExit) as exc:
            main(["design", "dodeca12"])
        assert exc.value.code == 2

    def test_bad_target_exit_code(self, capsys, tmp_path, monkeypatch):
        monkeypatch.chdir(tmp_path)
        code, _, err = run(capsys, "design", "family5", "--target", "sideways")
        assert code == 2
        assert "target" in err


def test_version_flag():
    with pytest.raises(SystemExit) as exc:
        main(["--version"])
    assert exc.value.code == 0
