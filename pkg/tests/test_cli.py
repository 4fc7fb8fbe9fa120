import pytest

from spanlab.cli import main

C5 = "5 5\n0 1 1\n1 2 1\n2 3 1\n3 4 1\n0 4 1\n"


def kv(out: str) -> dict[str, str]:
    pairs = [line.partition("=") for line in out.strip().splitlines()]
    return {k: v for k, _, v in pairs}


@pytest.fixture
def c5_file(tmp_path):
    path = tmp_path / "c5.txt"
    path.write_text(C5)
    return str(path)


def test_generate_to_stdout(capsys):
    assert main(["generate", "--family", "incidence_pg2", "--param", "q=2"]) == 0
    captured = capsys.readouterr()
    assert captured.out.startswith("14 21\n")
    assert "declared_h=8" in captured.err


def test_generate_to_file(tmp_path, capsys):
    out = tmp_path / "g.txt"
    code = main(["generate", "--family", "grid", "--param", "rows=3",
                 "--param", "cols=3", "--out", str(out)])
    assert code == 0
    assert out.read_text().startswith("9 12\n")


def test_generate_bad_param_syntax(capsys):
    assert main(["generate", "--family", "grid", "--param", "rows"]) == 1
    assert "key=value" in capsys.readouterr().err


def test_generate_unknown_family_precondition(capsys):
    assert main(["generate", "--family", "mystery"]) == 2
    assert "precondition" in capsys.readouterr().err


def test_usage_error_missing_subcommand(capsys):
    assert main([]) == 1


def test_usage_error_unknown_flag(capsys):
    assert main(["girth", "--bogus"]) == 1


def test_spanner_and_verify_roundtrip(tmp_path, capsys):
    graph = tmp_path / "g.txt"
    spanner = tmp_path / "h.txt"
    assert main(["generate", "--family", "random_weighted", "--param", "n=20",
                 "--param", "p=0.4", "--seed", "3", "--out", str(graph)]) == 0
    assert main(["spanner", str(graph), "--k", "2", "--out", str(spanner)]) == 0
    out = kv(capsys.readouterr().out)
    assert out["t"] == "3"
    assert int(out["edges_kept"]) >= 19
    assert main(["verify", str(graph), str(spanner), "--t", "3.0",
                 "--mode", "all-pairs"]) == 0
    report = kv(capsys.readouterr().out)
    assert report["passed"] == "true"
    assert float(report["max_edge_stretch"]) <= 3.0 + 1e-9


def test_verify_failure_exit_3(tmp_path, capsys, c5_file):
    truncated = tmp_path / "h.txt"
    truncated.write_text("5 4\n0 1 1\n1 2 1\n2 3 1\n3 4 1\n")
    assert main(["verify", c5_file, str(truncated), "--t", "3.0"]) == 3
    captured = capsys.readouterr()
    assert kv(captured.out)["passed"] == "false"
    assert "check failed" in captured.err


def test_verify_foreign_spanner_exit_2(tmp_path, capsys, c5_file):
    foreign = tmp_path / "h.txt"
    foreign.write_text("5 1\n0 2 1\n")
    assert main(["verify", c5_file, str(foreign), "--t", "3.0"]) == 2


def test_parse_error_exit_1(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("this is not a graph\n")
    assert main(["spanner", str(bad), "--k", "2"]) == 1
    assert "parse" in capsys.readouterr().err


def test_missing_file_exit_1(tmp_path):
    assert main(["girth", str(tmp_path / "nope.txt")]) == 1


def test_girth_c5(capsys, c5_file):
    assert main(["girth", c5_file]) == 0
    out = kv(capsys.readouterr().out)
    assert out["girth"] == "5"
    assert out["weighted_girth"] == "5"
    assert sorted(out["girth_witness"].split(",")) == ["0", "1", "2", "3", "4"]


def test_girth_acyclic(tmp_path, capsys):
    path = tmp_path / "tree.txt"
    path.write_text("3 2\n0 1 1\n1 2 1\n")
    assert main(["girth", str(path)]) == 0
    out = kv(capsys.readouterr().out)
    assert out["girth"] == "inf"
    assert out["girth_witness"] == ""


def test_density_probe(tmp_path, capsys):
    graph = tmp_path / "g.txt"
    assert main(["generate", "--family", "disjoint_cliques", "--param", "total_n=12",
                 "--param", "h=5", "--out", str(graph)]) == 0
    assert main(["density", str(graph), "--h", "5"]) == 0
    out = kv(capsys.readouterr().out)
    assert out["subgraph_vertices"] == "4"
    assert out["subgraph_density"] == "3"
    assert out["density_ratio"] == "1"


def test_experiment_runs_and_is_byte_deterministic(tmp_path, capsys):
    config = tmp_path / "sweep.cfg"
    config.write_text("""
[experiment]
k_values = 1, 2

[instance]
family = incidence_pg2
q = 2

[instance]
family = grid
rows = 3
cols = 4
""")
    out1 = tmp_path / "a.csv"
    out2 = tmp_path / "b.csv"
    assert main(["experiment", str(config), "--out", str(out1)]) == 0
    assert main(["experiment", str(config), "--out", str(out2)]) == 0
    assert out1.read_bytes() == out2.read_bytes()
    lines = out1.read_text().splitlines()
    assert lines[0].startswith("family,parameters,seed,")
    assert len(lines) == 5


def test_experiment_output_from_config(tmp_path):
    out = tmp_path / "rows.csv"
    config = tmp_path / "sweep.cfg"
    config.write_text(f"""
[experiment]
k_values = 1
output = {out}

[instance]
family = grid
rows = 2
cols = 3
""")
    assert main(["experiment", str(config)]) == 0
    assert out.exists()


def test_experiment_checks_flag(tmp_path, capsys):
    config = tmp_path / "sweep.cfg"
    config.write_text("[experiment]\nk_values = 1\n\n[instance]\n"
                      "family = grid\nrows = 2\ncols = 3\n")
    assert main(["experiment", str(config), "--checks", "girth,moore"]) == 0
    row = capsys.readouterr().out.splitlines()[1]
    assert row.endswith("girth=pass;moore=pass")


def test_experiment_bad_config_exit_1(tmp_path, capsys):
    config = tmp_path / "bad.cfg"
    config.write_text("[experiment]\n")
    assert main(["experiment", str(config)]) == 1
