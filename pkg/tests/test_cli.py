"""End-to-end command-line behavior: formats, determinism, exit codes."""

from __future__ import annotations

import json

import pytest

from weavekit import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_jones_text_single(capsys):
    code, out, _ = run(capsys, "jones", "-n", "4", "--format", "text")
    assert code == 0
    assert out == "t^4 - 4t^3 + 6t^2 - 7t + 9 - 7t^-1 + 6t^-2 - 4t^-3 + t^-4\n"


def test_stats_csv_reference_row(capsys):
    code, out, _ = run(capsys, "stats", "-n", "10", "--format", "csv")
    assert code == 0
    assert out.splitlines() == [
        "n,total_dim,dim_h01,sigma,l2,l1",
        "10,7563,970,2.64088,0.040510,0.134828",
    ]


def test_stats_json_exact_totals(capsys):
    code, out, _ = run(capsys, "stats", "-n", "11", "--format", "json")
    assert code == 0
    (row,) = json.loads(out)
    assert row["total_dim"] == "19801"
    assert row["dim_h01"] == "2431"
    assert abs(row["sigma"] - 2.749031276) < 1e-6


def test_range_filtering_is_reported(capsys):
    code, out, err = run(capsys, "stats", "--range", "10..13", "--format", "csv")
    assert code == 0
    assert "skipping n=12" in err
    assert [line.split(",")[0] for line in out.splitlines()[1:]] == ["10", "11", "13"]


def test_jobs_do_not_change_bytes(capsys):
    _, serial, _ = run(capsys, "jones", "--range", "4..8", "--format", "csv")
    _, parallel, _ = run(capsys, "jones", "--range", "4..8", "--format", "csv",
                         "--jobs", "3")
    assert serial == parallel


def test_hecke_oracle_match(capsys):
    code, out, _ = run(capsys, "hecke", "-n", "3", "--oracle")
    assert code == 0
    assert "oracle: match" in out


def test_hecke_oracle_mismatch_is_exit_1(capsys, monkeypatch):
    from weavekit.hecke import HeckeCoeffs
    from weavekit.laurent import laurent

    wrong = HeckeCoeffs(n=3, c0=laurent(0, [1]), c1=laurent(0, [1]),
                        c2=laurent(0, [1]), c12=laurent(0, [1]),
                        c21=laurent(0, [1]))
    monkeypatch.setattr(cli, "oracle_matrix_power", lambda n: wrong)
    code, out, _ = run(capsys, "hecke", "-n", "3", "--oracle")
    assert code == 1
    assert "MISMATCH" in out


def test_jones_bracket_oracle_flag(capsys):
    code, out, _ = run(capsys, "jones", "-n", "5", "--oracle")
    assert code == 0
    assert out.splitlines()[-1] == "n=5 oracle: match"


def test_twist_conjectural_quarantine(capsys):
    code, out, _ = run(capsys, "twist", "-n", "10")
    assert code == 0
    assert "T3=260" in out and "T4" not in out
    code, out, _ = run(capsys, "twist", "-n", "10", "--conjectural")
    assert code == 0
    assert "T4=580 [conjectural]" in out


def test_integral_khovanov_text(capsys):
    code, out, _ = run(capsys, "integral-khovanov", "-n", "2")
    assert code == 0
    assert "i=-1 j=-3: Z/2" in out
    assert "i=2 j=3: Z/2" in out


def test_homfly_csv(capsys):
    code, out, _ = run(capsys, "homfly", "-n", "4", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "n,a_exp,z_exp,coefficient"
    assert "4,0,6,-1" in out.splitlines()


def test_bounds_with_volumes(capsys, tmp_path):
    vols = tmp_path / "v.csv"
    vols.write_text("n,volume\n7,9.8\n8,12.1\n10,17.2\n", encoding="utf-8")
    code, out, _ = run(capsys, "bounds", "--range", "7..10",
                       "--volumes", str(vols), "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "n,lower,upper,curve_k2,curve_k3,curve_k4,vol_rel"
    assert len(lines) == 5                       # n = 7..10 inclusive
    assert lines[1].startswith("7,") and lines[1].endswith("0.7")
    assert lines[3].split(",")[-1] == ""         # n=9 has no ingested volume


def test_correlate_text_and_csv(capsys, tmp_path):
    vols = tmp_path / "v.csv"
    vols.write_text("n,volume\n5,20.5\n7,42.5\n8,56.5\n", encoding="utf-8")
    code, out, _ = run(capsys, "correlate", "--volumes", str(vols), "--k", "2")
    assert code == 0
    assert out.splitlines()[0] == "pearson_r = 1"
    code, out, _ = run(capsys, "correlate", "--volumes", str(vols),
                       "--format", "csv")
    assert out.splitlines()[0] == "n,T2,volume"


def test_svg_writes_figure_and_companion(capsys, tmp_path):
    out_path = tmp_path / "fig.svg"
    code, out, _ = run(capsys, "stats", "-n", "10", "--format", "svg",
                       "--out", str(out_path))
    assert code == 0
    svg_first = out_path.read_bytes()
    assert svg_first.lstrip().startswith(b"<?xml")
    companion = tmp_path / "fig.csv"
    assert companion.read_text(encoding="utf-8").splitlines()[1] == \
        "10,7563,970,2.64088,0.040510,0.134828"
    run(capsys, "stats", "-n", "10", "--format", "svg", "--out", str(out_path))
    assert out_path.read_bytes() == svg_first    # byte-identical rerun


def test_svg_requires_out(capsys):
    code, _, err = run(capsys, "stats", "-n", "10", "--format", "svg")
    assert code == 2
    assert "requires --out" in err


def test_exit_codes(capsys, tmp_path):
    code, _, _ = run(capsys, "stats", "-n", "12")           # link
    assert code == 2
    code, _, _ = run(capsys, "correlate", "--volumes", str(tmp_path / "no.csv"))
    assert code == 3
    short = tmp_path / "short.csv"
    short.write_text("n,volume\n5,6.7\n", encoding="utf-8")
    code, _, _ = run(capsys, "correlate", "--volumes", str(short))
    assert code == 3
    code, _, _ = run(capsys, "bounds", "--range", "2..5")   # all filtered out
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["jones"])                                 # no selection
    assert exc.value.code == 2
    capsys.readouterr()


def test_precision_env_affects_text_only(capsys, monkeypatch):
    monkeypatch.setenv("WEAVEKIT_PRECISION_DIGITS", "3")
    code, out, _ = run(capsys, "stats", "-n", "10")
    assert code == 0
    assert "sigma=2.64 " in out + " "
    code, out, _ = run(capsys, "stats", "-n", "10", "--format", "csv")
    assert "2.64088" in out                      # csv contract is fixed


def test_large_total_scientific_in_text(capsys):
    code, out, _ = run(capsys, "stats", "-n", "100")
    assert code == 0
    assert "total=3.13688e41" in out
    assert "dim_h01=1.31840e40" in out
    assert "sigma=7.86506" in out


def test_verify_all_passes(capsys):
    code, out, _ = run(capsys, "verify-all", "--max-n", "12")
    assert code == 0
    assert out.splitlines()[-1] == "all checks passed"


def test_verify_all_csv(capsys):
    code, out, _ = run(capsys, "verify-all", "--max-n", "6", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "check,cases,ok"
    assert all(line.endswith(",True") for line in out.splitlines()[1:])


def test_out_path_for_text(capsys, tmp_path):
    target = tmp_path / "report.txt"
    code, out, _ = run(capsys, "alexander", "-n", "4", "--out", str(target))
    assert code == 0
    assert out == ""
    assert target.read_text(encoding="utf-8") == \
        "-t^3 + 5t^2 - 10t + 13 - 10t^-1 + 5t^-2 - t^-3\n"
