import json

import pytest

import symq
from symq.cli import main
from symq.report import emit_report, to_json
from symq.tableio import write_table


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


# -- group commands ----------------------------------------------------------------


def test_group_build_writes_table(capsys):
    code, out, _ = run(capsys, "group", "build", "--group", "cyclic:3")
    assert code == 0
    assert out == "3\n0 1 2\n1 2 0\n2 0 1\n"


def test_group_build_to_file(tmp_path, capsys):
    path = tmp_path / "k4.txt"
    code, out, _ = run(
        capsys, "group", "build", "--group", "product:cyclic:2,cyclic:2",
        "--out", str(path),
    )
    assert code == 0 and out == ""
    assert path.read_text().startswith("4\n")


def test_group_check(capsys):
    report = run_json(capsys, "group", "check", "--group", "dihedral:3")
    assert report["order"] == 6
    assert report["abelian"] is False
    assert report["valid"] is True


def test_group_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "group", "build", "--group", "cyclic:-1")
    assert code == 1
    assert "offset" in err


# -- quandle commands ---------------------------------------------------------------


def test_quandle_galex_table(capsys):
    code, out, _ = run(
        capsys, "quandle", "galex", "--group", "cyclic:3", "--aut", "inv"
    )
    assert code == 0
    assert out == "3\n0 2 1\n2 1 0\n1 0 2\n"


def test_quandle_check_roundtrip(tmp_path, capsys):
    path = tmp_path / "r3.txt"
    code, out, _ = run(
        capsys, "quandle", "galex", "--group", "cyclic:3", "--aut", "inv",
        "--out", str(path),
    )
    assert code == 0
    report = run_json(capsys, "quandle", "check", "--table", str(path))
    assert report["is_kei"] is True
    assert report["is_connected"] is True
    assert report["good_involutions"] is None


def test_quandle_check_rejects_broken_table(tmp_path, capsys):
    path = tmp_path / "broken.txt"
    path.write_text("3\n0 0 1\n2 1 0\n1 0 2\n")  # column 1 repeats an entry
    code, _, err = run(capsys, "quandle", "check", "--table", str(path))
    assert code == 1
    assert "column" in err


# -- sq commands ----------------------------------------------------------------------


def test_sq_enumerate_r4(capsys):
    report = run_json(
        capsys, "sq", "enumerate", "--group", "cyclic:4", "--aut", "inv"
    )
    assert len(report["good_involutions"]) == 4
    assert report["fixed_two_torsion"] == [0, 2]
    assert report["is_kei"] is True
    assert report["is_connected"] is False


def test_sq_enumerate_from_table(tmp_path, capsys):
    q = symq.galex(
        symq.cyclic_group(3),
        symq.inversion_automorphism(symq.cyclic_group(3)),
    )
    path = tmp_path / "r3.txt"
    write_table(path, q.op)
    report = run_json(capsys, "sq", "enumerate", "--table", str(path))
    assert report["good_involutions"] == [[0, 1, 2]]
    assert report["group_spec"] is None
    assert report["fixed_two_torsion"] is None


def test_sq_enumerate_closed_form_hypothesis_exit(capsys):
    code, _, err = run(
        capsys, "sq", "enumerate", "--group", "cyclic:4", "--aut", "inv",
        "--closed-form",
    )
    assert code == 2
    assert "connected" in err


def test_sq_enumerate_closed_form_ok(capsys):
    code, out, _ = run(
        capsys, "sq", "enumerate", "--group", "cyclic:7", "--aut", "inv",
        "--closed-form",
    )
    assert code == 0
    assert json.loads(out)["good_involutions"] == [[0, 1, 2, 3, 4, 5, 6]]


def test_sq_classify_brute(capsys):
    report = run_json(
        capsys, "sq", "classify", "--group", "cyclic:4", "--aut", "inv"
    )
    assert report["sq_classes_bruteforce"] == 3
    assert report["sq_classes_theorem"] is None


def test_sq_classify_theorem_exit_code(capsys):
    code, _, _ = run(
        capsys, "sq", "classify", "--group", "cyclic:4", "--aut", "inv",
        "--theorem",
    )
    assert code == 2


def test_sq_crosscheck_agreement(capsys):
    report = run_json(
        capsys, "sq", "crosscheck", "--group", "cyclic:9", "--aut", "inv"
    )
    assert report["agreement"] is True
    assert report["sq_classes_bruteforce"] == 1
    assert report["sq_classes_theorem"] == 1


def test_sq_usage_errors(capsys):
    code, _, _ = run(capsys, "sq", "enumerate", "--group", "cyclic:3")
    assert code == 1
    code, _, _ = run(
        capsys, "sq", "enumerate", "--group", "cyclic:3", "--aut", "inv",
        "--table", "x.txt",
    )
    assert code == 1


def test_sq_budget_flag_beats_env(capsys, monkeypatch):
    monkeypatch.setenv("SYMQ_BUDGET", "1")
    code, _, _ = run(
        capsys, "sq", "enumerate", "--group", "cyclic:4", "--aut", "inv",
        "--budget", "100000",
    )
    assert code == 0


def test_sq_env_budget_applies(capsys, monkeypatch):
    monkeypatch.setenv("SYMQ_BUDGET", "1")
    code, _, err = run(
        capsys, "sq", "enumerate", "--group", "cyclic:4", "--aut", "inv"
    )
    assert code == 1
    assert "budget" in err


# -- catalog ---------------------------------------------------------------------------


def test_catalog_small_run(tmp_path, capsys):
    path = tmp_path / "cat.jsonl"
    code, _, err = run(
        capsys, "catalog", "--max-order", "4", "--out", str(path)
    )
    assert code == 0
    assert "0 agreement failures" in err
    lines = path.read_text().splitlines()
    reports = [json.loads(line) for line in lines]
    specs = {r["group_spec"] for r in reports}
    assert specs == {"cyclic:1", "cyclic:2", "cyclic:3", "cyclic:4",
                     "product:cyclic:2,cyclic:2"}
    # one entry per automorphism: 1 + 1 + 2 + 2 + 6
    assert len(reports) == 12
    assert all(r["elapsed_ms"] is None for r in reports)


def test_catalog_includes_family_at_six(capsys):
    code, out, _ = run(capsys, "catalog", "--max-order", "6")
    assert code == 0
    specs = [json.loads(line)["group_spec"] for line in out.splitlines()]
    for expected in ("cyclic:5", "cyclic:6", "dihedral:3", "symmetric:3"):
        assert expected in specs


def test_catalog_determinism(tmp_path, capsys):
    a = tmp_path / "a.jsonl"
    b = tmp_path / "b.jsonl"
    assert run(capsys, "catalog", "--max-order", "5", "--out", str(a))[0] == 0
    assert run(capsys, "catalog", "--max-order", "5", "--out", str(b))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_catalog_extras_degrade_gracefully(capsys):
    # the two heavyweight extra groups join the family and their oversized
    # entries abort into notes instead of failing the sweep
    code, out, err = run(
        capsys, "catalog", "--max-order", "12", "--extras",
        "--budget", "20000", "--pairwise-limit", "8",
    )
    assert code == 0
    specs = {json.loads(line)["group_spec"] for line in out.splitlines()}
    assert {"alternating:4", "symmetric:4"} <= specs
    assert "budget notes" in err


def test_catalog_pairwise_limit_note(capsys):
    code, out, _ = run(
        capsys, "catalog", "--max-order", "3", "--pairwise-limit", "2"
    )
    assert code == 0
    reports = [json.loads(line) for line in out.splitlines()]
    big = [r for r in reports if r["order"] > 2]
    assert big
    assert all(r["sq_classes_bruteforce"] is None for r in big)
    assert all(any("pairwise" in n for n in r["notes"]) for r in big)


# -- torus ------------------------------------------------------------------------------


def test_torus_cli(capsys):
    report = run_json(capsys, "torus", "--n", "3")
    assert report["two_torsion_size"] == 8
    assert report["class_count"] == 2


def test_torus_degenerate_note(capsys):
    report = run_json(capsys, "torus", "--n", "1")
    assert report["class_count"] == 2
    assert report["notes"]


def test_torus_dimension_error(capsys):
    code, _, _ = run(capsys, "torus", "--n", "0")
    assert code == 1


# -- output plumbing ---------------------------------------------------------------------


def test_text_format(capsys):
    code, out, _ = run(
        capsys, "sq", "enumerate", "--group", "cyclic:4", "--aut", "inv",
        "--format", "text",
    )
    assert code == 0
    assert "fixed_two_torsion: [0, 2]" in out
    assert "\n  0 1 2 3\n" in out  # involutions printed one per line


def test_json_reports_round_trip():
    report = symq.quandle_report(
        group_spec="cyclic:3",
        order=3,
        automorphism=[0, 2, 1],
        is_kei=True,
        kei_witness=None,
        is_connected=True,
        orbit_count=1,
        good_involutions=[[0, 1, 2]],
        fixed_two_torsion=[0],
        sq_classes_bruteforce=1,
        sq_classes_theorem=1,
        agreement=True,
        notes=[],
        elapsed_ms=7,
    )
    emitted = to_json(report)
    assert to_json(json.loads(emitted)) == emitted


def test_catalog_stream_round_trips_byte_identical(capsys):
    code, out, _ = run(capsys, "catalog", "--max-order", "4")
    assert code == 0
    for line in out.splitlines():
        assert to_json(json.loads(line)) == line + "\n"


def test_unknown_format_rejected():
    with pytest.raises(ValueError):
        emit_report({"a": 1}, "yaml")


def test_usage_error_is_exit_one(capsys):
    assert run(capsys, "nonsense")[0] == 1
    assert run(capsys, "sq", "enumerate", "--group")[0] == 1


def test_exit_code_mapping_for_internal_failure(monkeypatch, capsys):
    import symq.cli as cli
    from symq.errors import InternalConsistencyError

    def boom(args):
        raise InternalConsistencyError("routes disagree")

    monkeypatch.setattr(cli, "cmd_torus", boom)
    assert cli.main(["torus", "--n", "1"]) == 3
    assert "internal consistency" in capsys.readouterr().err
