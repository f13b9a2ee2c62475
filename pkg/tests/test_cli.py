import io
import json

import pytest

from hamrel.cli import run
from hamrel.constructions import complement_family
from hamrel.graph import decode_graph6, encode_graph6, format_edge_list


def call(argv):
    out = io.StringIO()
    code = run(argv, stdout=out)
    return code, out.getvalue()


@pytest.fixture
def pair_files(tmp_path):
    a, b = tmp_path / "g1.g6", tmp_path / "g2.g6"
    a.write_text(encode_graph6(complement_family("g1", 6)) + "\n")
    b.write_text(encode_graph6(complement_family("g2", 6)) + "\n")
    return str(a), str(b)


def test_construct_fcg():
    code, out = call(["construct", "fcg", "--n", "16", "--c", "3", "--format", "graph6"])
    assert code == 0
    G = decode_graph6(out.strip())
    assert {(1, 9), (4, 12), (7, 15)} <= G.edge_set() and G.m == 19


def test_verify_table_t3():
    code, out = call(["verify-table", "T3"])
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 6 and all(ln.endswith("MATCH") for ln in lines)


def test_compare_crossing(pair_files):
    code, out = call(["compare", "--a", pair_files[0], "--b", pair_files[1]])
    assert code == 0 and out.startswith("CROSSING") and "1/4" in out


def test_compare_json(pair_files):
    code, out = call(["compare", "--a", pair_files[0], "--b", pair_files[1], "--format", "json"])
    assert json.loads(out)["kind"] == "Crossing"


def test_relpoly_formats(tmp_path):
    f = tmp_path / "k33.txt"
    code, out = call(["construct", "k33", "--format", "text"])
    f.write_text(out)
    code, out = call(["relpoly", str(f), "--format", "csv"])
    assert code == 0 and out.strip() == "1,9,36,78,81"
    code, out = call(["relpoly", str(f), "--format", "json", "--method", "bruteforce"])
    assert json.loads(out)["N"][-1] == "1"


def test_relpoly_multigraph_edge_list(tmp_path):
    f = tmp_path / "multi.txt"
    f.write_text("2 3\n0 1\n0 1\n0 1\n")
    code, out = call(["relpoly", str(f), "--format", "csv"])
    assert code == 0 and out.strip() == "1,3,3"


def test_usage_errors(tmp_path):
    assert call(["frobnicate"])[0] == 1
    assert call(["construct", "dodecahedron"])[0] == 1
    assert call(["construct", "fcg", "--n", "15", "--c", "2"])[0] == 1
    assert call(["relpoly", str(tmp_path / "missing.g6")])[0] == 1
    bad = tmp_path / "bad.g6"
    bad.write_text("C\x10\n")
    assert call(["relpoly", str(bad)])[0] == 1
    assert call(["verify-table", "T7"])[0] == 1
    assert call(["construct", "umr", "--n", "9"])[0] == 1


def test_mismatch_exit_code(tmp_path, monkeypatch):
    from hamrel import analysis

    real = analysis.published_vectors

    def tampered(table):
        rows = real(table)
        n, m, v = rows[0]
        return [(n, m, v[:-1] + [v[-1] + 1])] + rows[1:]

    monkeypatch.setattr(analysis, "published_vectors", tampered)
    code, out = call(["verify-table", "T3", "--rows", "6"])
    assert code == 2 and "MISMATCH" in out


def test_verify_nonexistence_cli():
    code, out = call(["verify-nonexistence", "--n", "6", "7"])
    assert code == 0 and out.count("CERTIFIED") == 2


def test_enumerate_streams_graph6(tmp_path):
    summary = tmp_path / "s.json"
    code, out = call(["enumerate", "hamiltonian", "--n", "11", "--c", "2", "--summary", str(summary)])
    assert code == 0 and len(out.splitlines()) == 56
    assert json.loads(summary.read_text())["count"] == 56


def test_search_umr_cli(tmp_path):
    f = tmp_path / "h.g6"
    call(["enumerate", "hamiltonian", "--n", "8", "--c", "2", "--output", str(f)])
    code, out = call(["search-umr", str(f), "--format", "json"])
    assert code == 0 and json.loads(out)["outcome"] == "UniqueDominant"


def test_plot_data_matches_evaluate(tmp_path):
    from fractions import Fraction

    from hamrel.relpoly import evaluate, reliability

    G = complement_family("g1", 6)
    f = tmp_path / "g.g6"
    f.write_text(encode_graph6(G) + "\n")
    code, out = call(["plot-data", str(f), "--points", "11", "--digits", "8"])
    rows = out.strip().splitlines()[1:]
    assert code == 0 and len(rows) == 11
    P = reliability(G)
    for row in rows:
        p, val = row.split(",")
        exact = evaluate(P, Fraction(p))
        assert abs(Fraction(val) - exact) <= Fraction(1, 2 * 10**8)


def test_output_identical_across_jobs():
    a = call(["verify-table", "T3", "--rows", "8,9", "--jobs", "1"])
    b = call(["verify-table", "T3", "--rows", "8,9", "--jobs", "2"])
    assert a == b


def test_memo_limit_flag_keeps_results(tmp_path):
    f = tmp_path / "k7.txt"
    f.write_text(call(["construct", "k7"])[1])
    a = call(["relpoly", str(f), "--method", "factoring", "--memo-limit", "0"])
    b = call(["relpoly", str(f), "--method", "factoring", "--memo-limit", "50"])
    assert a == b


def test_oracle_subcommand():
    code, out = call(["oracle", "--count", "50", "--seed", "3"])
    assert code == 0 and "discrepancies=0" in out


def test_edge_list_output():
    code, out = call(["construct", "cpath", "--vector", "3,3,3,2"])
    assert code == 0 and out.splitlines()[0] == "11 13"
    G = complement_family("g1", 6)
    assert format_edge_list(G).startswith("6 11")
