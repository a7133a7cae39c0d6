import json

from lplab import cycle_graph, emit_graph6, parse_graph6
from lplab.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_analyze_petersen_table(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--family=petersen")
    assert code == 0
    assert "lambda            3" in out.replace("lambda ", "lambda  ") or "lambda" in out
    lines = dict(
        (ln.split()[0], ln.split()[-1]) for ln in out.splitlines() if ln and "witness" not in ln
    )
    assert lines["lambda"] == "3"
    assert lines["lambda'"] == "4"


def test_analyze_json(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--family=petersen", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["lambda"] == 3 and rep["lambda_prime"] == 4
    assert rep["super_lambda_prime"] is True


def test_analyze_accepts_graph6_positional(capsys):
    code, out, _ = run_cli(capsys, "analyze", emit_graph6(cycle_graph(6)), "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["lambda_prime"] == 2 and rep["super_lambda_prime"] is False


def test_analyze_file_input(tmp_path, capsys):
    path = tmp_path / "g.g6"
    path.write_text(emit_graph6(cycle_graph(4)) + "\n")
    code, out, _ = run_cli(capsys, "analyze", str(path), "--json")
    assert code == 0
    assert json.loads(out)["lambda_prime"] == 2


def test_analyze_no_input_is_usage_error(capsys):
    code, _, err = run_cli(capsys, "analyze")
    assert code == 2
    assert "no input" in err


def test_analyze_infinity_encoding(capsys):
    code, out, _ = run_cli(capsys, "analyze", "--family=K1,3", "--json")
    assert code == 0
    assert json.loads(out)["lambda_prime"] == "infinity"


def test_product_graph6_output(capsys):
    code, out, _ = run_cli(capsys, "product", "--left=C4", "--right=K5")
    assert code == 0
    g = parse_graph6(out.strip())
    # |E(G1 x G2)| = 2 |E1| |E2| for loop-free factors
    assert g.n == 20 and g.size == 80


def test_product_right_total(capsys):
    code, out, _ = run_cli(capsys, "product", "--left=K2", "--right=T3", "--json")
    assert code == 0
    assert json.loads(out)["order"] == 6


def test_gen_family_graph6(capsys):
    code, out, _ = run_cli(capsys, "gen", "--family=cycle", "--n=5")
    assert code == 0
    assert parse_graph6(out.strip()) == cycle_graph(5)


def test_gen_loops_fall_back_to_edge_list(capsys):
    code, out, _ = run_cli(capsys, "gen", "--family=T3")
    assert code == 0
    assert out.splitlines()[0] == "3 6"


def test_gen_json(capsys):
    code, out, _ = run_cli(capsys, "gen", "--family=C4", "--json")
    assert code == 0
    body = json.loads(out)
    assert body["order"] == 4 and "graph6" in body
    code, out, _ = run_cli(capsys, "gen", "--family=T3", "--json")
    assert json.loads(out)["edge_list"].startswith("3 6")


def test_gen_unknown_family(capsys):
    code, _, err = run_cli(capsys, "gen", "--family=noidea")
    assert code == 2
    assert "unknown family" in err


def test_verify_lemma(capsys):
    code, out, err = run_cli(capsys, "verify", "--claim=LEM_2_1", "--n=5")
    assert code == 0
    rec = json.loads(out.strip())
    assert rec["verdict"] == "verified"
    assert "verified=1" in err


def test_verify_requires_corpus_for_graph_claims(capsys):
    code, _, err = run_cli(capsys, "verify", "--claim=THM_1_1", "--n=3")
    assert code == 2
    assert "--corpus" in err


def test_verify_unknown_claim(capsys):
    code, _, err = run_cli(capsys, "verify", "--claim=THM_7_7", "--n=5")
    assert code == 2


def test_verify_with_corpus(capsys):
    code, out, err = run_cli(
        capsys, "verify", "--claim=THM_1_2", "--corpus=order<=3", "--n=3"
    )
    assert code == 0
    records = [json.loads(ln) for ln in out.strip().splitlines()]
    assert len(records) == 4
    verdicts = {r["verdict"] for r in records}
    assert verdicts == {"verified", "hypothesis-not-met"}


def test_sweep_multiple_claims(capsys):
    code, out, _ = run_cli(
        capsys, "sweep", "--claims=LEM_2_3,COR_2_4", "--n=3"
    )
    assert code == 0
    records = [json.loads(ln) for ln in out.strip().splitlines()]
    assert [r["claim"] for r in records] == ["LEM_2_3", "COR_2_4"]


def test_verify_deterministic_output(capsys):
    import lplab

    args = ("verify", "--claim=THM_1_2", "--corpus=order<=3", "--n=3")
    code1, out1, _ = run_cli(capsys, *args)
    lplab.clear_caches()
    code2, out2, _ = run_cli(capsys, *args)
    assert (code1, out1) == (code2, out2)


def test_bad_subcommand(capsys):
    assert main(["frobnicate"]) == 2


def test_missing_command(capsys):
    assert main([]) == 2
