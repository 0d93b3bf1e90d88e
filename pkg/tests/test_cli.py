"""Command-line behavior: outputs, exit codes, file handling, determinism."""

import json

import pytest

from conjlab.cli import EXIT_ERROR, EXIT_OK, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


# ----- analyze -----------------------------------------------------------------


def test_analyze_text(capsys):
    code, out, err = run(capsys, "analyze", "symmetric:4")
    assert code == EXIT_OK
    assert "order 24" in out
    assert "separated  True" in out
    assert "pattern mixed" in out


def test_analyze_json(capsys):
    code, out, _ = run(capsys, "analyze", "symmetric:4", "--json")
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["order"] == 24
    assert data["n_of_g"]["sizes"] == [1, 3, 6, 8]
    assert data["gamma_components"] == [[3, 6], [8]]
    assert data["p_part_patterns"]["2"]["kind"] == "mixed"


def test_analyze_grp_file(tmp_path, capsys):
    path = tmp_path / "pent.grp"
    path.write_text("degree 5\nname pent\n(0 1 2 3 4)\n(1 4)(2 3)\n")
    code, out, _ = run(capsys, "analyze", str(path))
    assert code == EXIT_OK and "order 10" in out


def test_analyze_bad_spec(capsys):
    code, _, err = run(capsys, "analyze", "martian:9")
    assert code == EXIT_ERROR
    assert "error:" in err


# ----- verify ------------------------------------------------------------------


def test_verify_negative_exit_zero(capsys):
    code, out, _ = run(capsys, "verify", "symmetric:4", "--no-lemmas")
    assert code == EXIT_OK
    assert "verdict HypothesisNotMet" in out


def test_verify_positive_json(capsys, tmp_path):
    out_path = tmp_path / "report.json"
    code, out, _ = run(
        capsys,
        "verify",
        "direct:frobenius:5,4+heisenberg:3",
        "--json",
        "--out",
        str(out_path),
        "--lemma-samples",
        "100",
    )
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["verdict"] == "VerifiedDecomposition"
    assert data["decompositions"][0]["a_order"] == 20
    assert json.loads(out_path.read_text()) == data
    assert all(r["status"] == "pass" for r in data["lemma_results"].values())


def test_verify_no_lemmas_empty_results(capsys):
    code, out, _ = run(capsys, "verify", "cyclic:9", "--json", "--no-lemmas")
    data = json.loads(out)
    assert code == EXIT_OK and data["lemma_results"] == {}


def test_verify_budget_exit(capsys):
    code, _, err = run(
        capsys,
        "verify",
        "direct:frobenius:5,4+heisenberg:3",
        "--normal-budget",
        "3",
        "--no-lemmas",
    )
    assert code == EXIT_ERROR and "budget" in err.lower()


def test_verify_cap_flag_and_env(capsys, monkeypatch):
    monkeypatch.setenv("CONJLAB_CAP", "10")
    code, _, err = run(capsys, "verify", "symmetric:4", "--no-lemmas")
    assert code == EXIT_ERROR
    code, out, _ = run(
        capsys, "verify", "symmetric:4", "--no-lemmas", "--cap", "100"
    )
    assert code == EXIT_OK
    monkeypatch.setenv("CONJLAB_CAP", "banana")
    code, _, err = run(capsys, "verify", "symmetric:4", "--no-lemmas")
    assert code == EXIT_ERROR


# ----- gamma -------------------------------------------------------------------


def test_gamma_components(capsys):
    code, out, _ = run(capsys, "gamma", "--set", "3,6,8")
    assert code == EXIT_OK and out == "components: 2\n"


def test_gamma_json_and_dot(tmp_path, capsys):
    dot = tmp_path / "g.dot"
    code, out, _ = run(capsys, "gamma", "--set", "12,15,20", "--json", "--dot", str(dot))
    assert code == EXIT_OK
    data = json.loads(out)
    assert data["count"] == 3 and data["edges"] == []
    text = dot.read_text()
    assert text.startswith("digraph gamma {") and "12" in text


def test_gamma_rejects_garbage(capsys):
    code, _, err = run(capsys, "gamma", "--set", "3,six,8")
    assert code == EXIT_ERROR and "error:" in err


# ----- scan --------------------------------------------------------------------


def write_dir_corpus(tmp_path):
    (tmp_path / "b_dihedral.grp").write_text(
        "degree 5\nname pentagon\n(0 1 2 3 4)\n(1 4)(2 3)\n"
    )
    (tmp_path / "a_cyclic.grp").write_text("degree 6\nname hexagon\n(0 1 2 3 4 5)\n")
    return tmp_path


def test_scan_directory_corpus(tmp_path, capsys):
    corpus = write_dir_corpus(tmp_path)
    out_path = tmp_path / "scan.jsonl"
    code, out, _ = run(
        capsys,
        "scan",
        "--corpus",
        str(corpus),
        "--out",
        str(out_path),
        "--lemma-samples",
        "50",
    )
    assert code == EXIT_OK
    assert "scanned 2 groups" in out
    lines = out_path.read_text().strip().splitlines()
    assert len(lines) == 2
    records = [json.loads(line) for line in lines]
    # sorted by spec string: a_cyclic before b_dihedral
    assert records[0]["spec"].endswith("a_cyclic.grp")
    assert all(r["report"]["verdict"] == "HypothesisNotMet" for r in records)
    assert all(r["timestamp"] == "1970-01-01T00:00:00Z" for r in records)
    assert all(r["report"]["timings"] == {} for r in records)


def test_scan_jobs_agree(tmp_path, capsys):
    corpus = write_dir_corpus(tmp_path)
    one = tmp_path / "one.jsonl"
    two = tmp_path / "two.jsonl"
    for out_path, jobs in [(one, "1"), (two, "2")]:
        code, _, _ = run(
            capsys,
            "scan",
            "--corpus",
            str(corpus),
            "--out",
            str(out_path),
            "--jobs",
            jobs,
            "--seed",
            "5",
            "--lemma-samples",
            "50",
        )
        assert code == EXIT_OK
    assert one.read_bytes() == two.read_bytes()


def test_scan_records_per_group_errors(tmp_path, capsys):
    corpus = write_dir_corpus(tmp_path)
    (corpus / "c_big.grp").write_text("degree 5\nname whole\n(0 1)\n(0 1 2 3 4)\n")
    out_path = tmp_path / "scan.jsonl"
    code, out, _ = run(
        capsys,
        "scan",
        "--corpus",
        str(corpus),
        "--out",
        str(out_path),
        "--cap",
        "30",
        "--no-lemmas",
    )
    assert code == EXIT_OK  # scan itself succeeds; the failure is recorded
    records = [json.loads(line) for line in out_path.read_text().splitlines()]
    bad = next(r for r in records if r["spec"].endswith("c_big.grp"))
    assert bad["report"] is None and "CapExceeded" in bad["error"]
    assert "error=1" in out


def test_scan_rejects_bad_corpus(tmp_path, capsys):
    code, _, err = run(capsys, "scan", "--corpus", str(tmp_path / "nowhere"))
    assert code == EXIT_ERROR and "error:" in err


def test_scan_rejects_bad_jobs(tmp_path, capsys):
    corpus = write_dir_corpus(tmp_path)
    code, _, err = run(capsys, "scan", "--corpus", str(corpus), "--jobs", "0")
    assert code == EXIT_ERROR


def test_scan_unwritable_out(tmp_path, capsys):
    corpus = write_dir_corpus(tmp_path)
    code, _, err = run(
        capsys,
        "scan",
        "--corpus",
        str(corpus),
        "--out",
        str(tmp_path / "missing" / "deep.jsonl"),
        "--no-lemmas",
    )
    assert code == EXIT_ERROR and "error:" in err


# ----- top level ----------------------------------------------------------------


def test_usage_errors(capsys):
    assert main([]) == EXIT_ERROR
    assert main(["analyze"]) == EXIT_ERROR
    assert main(["frobnicate"]) == EXIT_ERROR
    capsys.readouterr()


def test_help_exits_zero(capsys):
    assert main(["--help"]) == EXIT_OK
    capsys.readouterr()
