"""CLI behavior: subcommands, exit codes, file outputs."""

import json

import pytest

from wsngen.cli import EXIT_ERROR, EXIT_OK, EXIT_REJECTED, main


def test_deploy_writes_default_csv(tmp_path, monkeypatch, capsys):
    monkeypatch.chdir(tmp_path)
    assert main(["deploy", "--seed", "43", "--mode", "grid"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "deploy: seed=43" in out
    assert "mode=grid" in out
    lines = (tmp_path / "deployment.csv").read_text().splitlines()
    assert lines[0] == "node_id,x,y"
    assert len(lines) == 101
    assert lines[1].startswith("1,46.37725900000001,")


def test_deploy_repeated_runs_byte_identical(tmp_path):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    for out in (a, b):
        assert main(["deploy", "--seed", "7", "--out", str(out)]) == EXIT_OK
    assert a.read_bytes() == b.read_bytes()


def test_deploy_json_format(tmp_path):
    out = tmp_path / "dep.json"
    assert main(["deploy", "--seed", "0", "--format", "json",
                 "--out", str(out)]) == EXIT_OK
    doc = json.loads(out.read_text())
    assert doc["meta"]["kind"] == "deployment"
    assert len(doc["points"]) == 100


def test_deploy_zero_nodes_errors(tmp_path, capsys):
    out = tmp_path / "dep.csv"
    assert main(["deploy", "--nodes", "0", "--out", str(out)]) == EXIT_ERROR
    assert "error" in capsys.readouterr().err
    assert not out.exists()


def test_traffic_default_output(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    assert main(["traffic"]) == EXIT_OK
    lines = (tmp_path / "traffic.csv").read_text().splitlines()
    assert lines[0] == "node_id,t1,t2,t3,t4,t5"
    assert len(lines) == 81
    assert lines[1].startswith("1,7.345565623696594,")


def test_traffic_inverted_bounds_error(tmp_path):
    out = tmp_path / "t.csv"
    assert main(["traffic", "--pmin", "10", "--pmax", "2",
                 "--out", str(out)]) == EXIT_ERROR


def test_validate_generated_seed_0_satisfied(capsys):
    assert main(["validate", "--seed", "0"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "KS-Test" in out
    assert "Rejected" not in out


def test_validate_generated_seed_3_rejected(capsys):
    assert main(["validate", "--seed", "3"]) == EXIT_REJECTED
    assert "Rejected" in capsys.readouterr().out


def test_validate_json_format(capsys):
    assert main(["validate", "--seed", "0", "--format", "json"]) == EXIT_OK
    docs = json.loads(capsys.readouterr().out)
    assert isinstance(docs, list)
    assert {d["test_name"] for d in docs} == {"ks", "chi2", "autocorrelation", "circular"}


def test_validate_writes_report_file(tmp_path, capsys):
    out = tmp_path / "report.txt"
    code = main(["validate", "--seed", "0", "--out", str(out)])
    assert code == EXIT_OK
    assert "KS-Test" in out.read_text()
    capsys.readouterr()


def test_validate_deployment_csv_round_trip(tmp_path, capsys):
    dep_file = tmp_path / "dep.csv"
    assert main(["deploy", "--seed", "0", "--out", str(dep_file)]) == EXIT_OK
    code = main(["validate", "--in", str(dep_file)])
    assert code == EXIT_OK
    capsys.readouterr()


def test_validate_traffic_json_input(tmp_path, capsys):
    t_file = tmp_path / "traffic.json"
    assert main(["traffic", "--format", "json", "--out", str(t_file)]) == EXIT_OK
    code = main(["validate", "--in", str(t_file)])
    assert code in (EXIT_OK, EXIT_REJECTED)
    assert "Chi2Test" in capsys.readouterr().out


def test_validate_truncated_csv_errors(tmp_path, capsys):
    bad = tmp_path / "bad.csv"
    bad.write_text("node_id,x,y\n1,5.0\n")
    assert main(["validate", "--in", str(bad)]) == EXIT_ERROR
    assert "error" in capsys.readouterr().err


def test_validate_unknown_json_kind_errors(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"meta": {"kind": "mystery"}}')
    assert main(["validate", "--in", str(bad)]) == EXIT_ERROR
    assert "unrecognized" in capsys.readouterr().err


def test_analyze_summary_frozen(capsys):
    assert main(["analyze", "--seed", "0", "--tr", "10"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "edges=163" in out
    assert "isolated=6" in out


def test_analyze_edge_list_output(tmp_path, capsys):
    out = tmp_path / "edges.csv"
    assert main(["analyze", "--seed", "0", "--tr", "10",
                 "--out", str(out)]) == EXIT_OK
    lines = out.read_text().splitlines()
    assert lines[0] == "u,v,distance"
    assert len(lines) == 164
    capsys.readouterr()


def test_analyze_from_file_matches_generated(tmp_path, capsys):
    dep_file = tmp_path / "dep.csv"
    assert main(["deploy", "--seed", "5", "--out", str(dep_file)]) == EXIT_OK
    capsys.readouterr()
    assert main(["analyze", "--in", str(dep_file), "--tr", "15"]) == EXIT_OK
    from_file = capsys.readouterr().out
    assert main(["analyze", "--seed", "5", "--tr", "15"]) == EXIT_OK
    generated = capsys.readouterr().out
    assert from_file == generated


def test_report_single_seed(capsys):
    assert main(["report", "--seeds", "5", "--tr", "10"]) == EXIT_OK
    out = capsys.readouterr().out
    lines = out.splitlines()
    assert "X[0]" in lines[1]
    data = [ln for ln in lines[3:] if ln.strip()]
    assert len(data) == 1
    assert data[0].split()[0] == "5"
    assert "2.584982" in data[0]


def test_report_deterministic(capsys):
    assert main(["report", "--seeds", "0,3", "--tr", "10,15"]) == EXIT_OK
    first = capsys.readouterr().out
    assert main(["report", "--seeds", "0,3", "--tr", "10,15"]) == EXIT_OK
    assert capsys.readouterr().out == first


def test_report_agreement_json(capsys):
    assert main(["report", "--kind", "agreement", "--format", "json"]) == EXIT_OK
    doc = json.loads(capsys.readouterr().out)
    assert doc["totals"]["constants"]["matched"] == 20
    assert doc["totals"]["autocorrelation_verdicts"]["matched"] == 40


def test_report_packet_diff_text(capsys):
    assert main(["report", "--kind", "packet-diff"]) == EXIT_OK
    out = capsys.readouterr().out
    assert "generator" in out
    assert "reconstructed/uniform" in out


def test_report_to_file(tmp_path, capsys):
    out = tmp_path / "batch.txt"
    assert main(["report", "--seeds", "0", "--tr", "10",
                 "--out", str(out)]) == EXIT_OK
    assert "report: kind=batch" in capsys.readouterr().out
    assert "X[0]" in out.read_text()


def test_constants_file_override(tmp_path, capsys):
    table = tmp_path / "constants.json"
    table.write_text("[1.5, 2.5]")
    out = tmp_path / "dep.csv"
    assert main(["deploy", "--seed", "0", "--constants-file", str(table),
                 "--out", str(out)]) == EXIT_OK
    summary = capsys.readouterr().out
    assert "a=1.500000" in summary
    assert "c=2.500000" in summary


def test_constants_file_invalid(tmp_path, capsys):
    table = tmp_path / "constants.json"
    table.write_text('{"not": "a list"}')
    out = tmp_path / "dep.csv"
    assert main(["deploy", "--constants-file", str(table),
                 "--out", str(out)]) == EXIT_ERROR
    capsys.readouterr()


def test_version_and_help_exit_zero(capsys):
    assert main(["--version"]) == EXIT_OK
    assert "wsngen" in capsys.readouterr().out
    assert main(["--help"]) == EXIT_OK
    assert "deploy" in capsys.readouterr().out


def test_unknown_subcommand_exits_one(capsys):
    assert main(["frobnicate"]) == EXIT_ERROR
    assert main([]) == EXIT_ERROR
    capsys.readouterr()


def test_bad_flag_value_exits_one(capsys):
    assert main(["deploy", "--mode", "hex"]) == EXIT_ERROR
    capsys.readouterr()
