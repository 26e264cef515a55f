"""Command-line surface: exit codes, deterministic output, file output,
format switches, and the gamma-table round trip."""

import json
import shutil
import subprocess

import pytest

from dltransfer import cli


def run(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_rootdatum_report(capsys):
    code, out, err = run(capsys, "rootdatum", "--name", "GL2")
    assert code == 0 and err == ""
    report = json.loads(out)
    assert report["name"] == "GL(2)"
    assert report["rank"] == 2
    assert report["weyl_order"] == 2
    assert report["lengths"] == [0, 1]


def test_rootdatum_unknown_name_is_input_error(capsys):
    code, out, err = run(capsys, "rootdatum", "--name", "E8")
    assert code == 1 and out == ""
    assert err.startswith("error:")


def test_missing_subcommand_is_input_error(capsys):
    assert cli.main([]) == 1
    capsys.readouterr()


def test_morphism_preset_report(capsys):
    code, out, _ = run(capsys, "morphism", "--preset", "diag-gl1-gl2")
    assert code == 0
    report = json.loads(out)
    assert report["valid"] is True
    assert report["w_l_order"] == 2
    assert report["w_l_two_routes_agree"] is True
    assert report["levi_roots"] == [[1, -1], [-1, 1]]
    (lifts,) = report["lifts"].values()
    assert len(lifts) == 2


def test_morphism_unknown_preset(capsys):
    code, _, err = run(capsys, "morphism", "--preset", "nope")
    assert code == 1 and "unknown preset" in err


def test_morphism_requires_preset_or_file(capsys):
    code, _, err = run(capsys, "morphism")
    assert code == 1 and "provide --preset or --file" in err


def test_morphism_from_file_matches_preset(capsys, tmp_path):
    spec = {"source": "GL2", "target": "GL1", "matrix": [[1, 1]]}
    path = tmp_path / "m.json"
    path.write_text(json.dumps(spec))
    code1, out1, _ = run(capsys, "morphism", "--file", str(path))
    code2, out2, _ = run(capsys, "morphism", "--preset", "diag-gl1-gl2")
    assert code1 == code2 == 0
    assert out1 == out2


def test_classes_report(capsys):
    code, out, _ = run(capsys, "classes", "--group", "GL2", "--q", "3")
    assert code == 0
    report = json.loads(out)
    assert report["count"] == 6
    assert report["rational_pair_count"] == 8
    assert len(report["classes"]) == 6


def test_classes_unknown_group(capsys):
    code, _, err = run(capsys, "classes", "--group", "F4", "--q", "3")
    assert code == 1 and err.startswith("error:")


def test_tame_stabilizer_orders(capsys):
    code, out, _ = run(capsys, "tame", "--group", "SL2", "--q", "3", "--point", "[1/2]")
    report = json.loads(out)
    assert code == 0
    assert report["stabilizer_order"] == 2
    assert report["reflection_stabilizer_order"] == 1
    code, out, _ = run(capsys, "tame", "--group", "PGL2", "--q", "3", "--point", "[1/2]")
    report = json.loads(out)
    assert code == 0
    assert report["stabilizer_order"] == 2
    assert report["reflection_stabilizer_order"] == 2


def test_tame_rejects_wild_point(capsys):
    code, _, err = run(capsys, "tame", "--group", "SL2", "--q", "3", "--point", "[1/3]")
    assert code == 1 and err.startswith("error:")


def test_transfer_delta_csv(capsys):
    code, out, _ = run(
        capsys,
        "transfer", "--preset", "diag-gl1-gl2", "--q", "3", "--format", "csv",
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "class_label,gamma"
    assert len(lines) == 3  # two target classes
    assert all(line.endswith(",1") for line in lines[1:])


def test_transfer_random_requires_seed(capsys):
    code, _, err = run(capsys, "transfer", "--preset", "power-2-gl1", "--q", "3", "--random")
    assert code == 1 and "--seed is required" in err


def test_transfer_is_byte_deterministic(capsys):
    argv = ["transfer", "--preset", "diag-gl1-gl2", "--q", "3", "--random", "--seed", "42"]
    code1, out1, _ = run(capsys, *argv)
    code2, out2, _ = run(capsys, *argv)
    assert code1 == code2 == 0
    assert out1 == out2


def test_transfer_out_file_matches_stdout(capsys, tmp_path):
    argv = ["transfer", "--preset", "power-3-gl1", "--q", "5", "--random", "--seed", "9"]
    code, out, _ = run(capsys, *argv)
    path = tmp_path / "report.json"
    code2 = cli.main(argv + ["--out", str(path)])
    captured = capsys.readouterr()
    assert code == code2 == 0
    assert captured.out == ""
    assert path.read_text() == out


def test_gamma_table_round_trip(capsys, tmp_path):
    """A transferred gamma table re-ingests into the same stable function."""
    code, out, _ = run(
        capsys, "transfer", "--preset", "diag-gl1-gl2", "--q", "3", "--random", "--seed", "7"
    )
    assert code == 0
    report = json.loads(out)
    obj = {"datum": report["datum"], "q": report["q"], "gamma": report["gamma"]}
    f = cli.ingest_gamma_table(obj)
    assert cli.gamma_table_obj(f) == obj
    # and it can be fed back in as a source table on the target group
    path = tmp_path / "gamma.json"
    path.write_text(json.dumps(obj))
    code2, out2, _ = run(
        capsys,
        "transfer", "--preset", "power-2-gl1", "--q", "3", "--gamma-file", str(path),
    )
    assert code2 == 0
    assert json.loads(out2)["input_gamma"]["gamma"] == obj["gamma"]


def test_gamma_table_context_mismatch(capsys, tmp_path):
    code, out, _ = run(capsys, "transfer", "--preset", "diag-gl1-gl2", "--q", "3")
    obj = {"datum": json.loads(out)["datum"], "q": 3, "gamma": json.loads(out)["gamma"]}
    path = tmp_path / "gamma.json"
    path.write_text(json.dumps(obj))
    code2, _, err = run(
        capsys,
        "transfer", "--preset", "diag-gl1-gl2", "--q", "3", "--gamma-file", str(path),
    )
    assert code2 == 1 and "does not match" in err


def test_verify_delta_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "delta", "--group", "GL2", "--q", "3")
    report = json.loads(out)
    assert code == 0
    assert report["verified"] is True
    assert report["degree"] == "1"
    code, _, _ = run(capsys, "verify", "delta", "--group", "SL2", "--q", "3")
    assert code == 0
    code, _, err = run(capsys, "verify", "delta", "--group", "PGL2", "--q", "3")
    assert code == 1 and "supports GL2 and SL2" in err


def test_verify_formula_seeded(capsys):
    code, out, _ = run(
        capsys,
        "verify", "formula", "--preset", "diag-gl1-gl2", "--q", "3",
        "--trials", "3", "--seed", "5",
    )
    report = json.loads(out)
    assert code == 0
    assert report["verified"] is True and report["mismatch_count"] == 0
    assert report["trials"] == 3 and report["seed"] == 5


def test_verify_formula_requires_seed(capsys):
    code, _, err = run(
        capsys, "verify", "formula", "--preset", "power-2-gl1", "--q", "3"
    )
    assert code == 1 and "--seed is required" in err


def test_gauss_table(capsys):
    code, out, _ = run(capsys, "gauss", "--q", "5", "--format", "text")
    assert code == 0
    assert "norm_checks_pass: True" in out
    assert "k | gauss_sum | norm" in out
    code, _, err = run(capsys, "gauss", "--q", "6")
    assert code == 1 and "prime power" in err


def test_text_format_skips_table_key(capsys):
    code, out, _ = run(capsys, "classes", "--group", "GL1", "--q", "3", "--format", "text")
    assert code == 0
    assert "count: 2" in out
    assert '"rows"' not in out


def test_console_script_is_installed():
    exe = shutil.which("dltransfer")
    if exe is None:
        pytest.skip("console script not on PATH in this environment")
    proc = subprocess.run(
        [exe, "gauss", "--q", "3"], capture_output=True, text=True, timeout=120
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["norm_checks_pass"] is True
