"""Front-end round trips, format conformance, sweeps, exit codes."""

import io
import json

import pytest

from matrofan import cli
from matrofan import constructions as cs
from matrofan import db
from matrofan import operations as op


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture()
def u24_file(tmp_path):
    p = tmp_path / "u24.txt"
    p.write_text("4 2\n01 02 03 12 13 23\n")
    return str(p)


def test_charpoly_bases_file(capsys, u24_file):
    code, out, _ = run(capsys, "charpoly", "--format", "bases", "--in", u24_file)
    assert code == 0
    assert out.strip() == "q^2 - 4q + 3"


def test_charpoly_algorithms_agree(capsys, u24_file):
    outs = set()
    for alg in ("whitney", "mobius", "delcon"):
        code, out, _ = run(capsys, "charpoly", "--in", u24_file, "--algorithm", alg)
        assert code == 0
        outs.add(out)
    assert len(outs) == 1


def test_revlex_conformance_line(capsys, tmp_path):
    p = tmp_path / "u24.revlex"
    p.write_text("4 2 6\n******\n")
    code, out, _ = run(capsys, "info", "--format", "revlex", "--in", str(p))
    assert code == 0
    assert "elements: 4" in out and "rank: 2" in out and "bases: 6" in out


def test_stdin_dash(capsys, monkeypatch):
    monkeypatch.setattr("sys.stdin", io.StringIO("4 2 6 ******"))
    code, out, _ = run(capsys, "tutte", "--format", "revlex", "--in", "-")
    assert code == 0
    assert out.strip() == "x^2 + 2x + y^2 + 2y"


def test_matrix_format_inline_slashes(capsys, tmp_path):
    p = tmp_path / "fano.m"
    p.write_text("gf 2 / 3 7 / 1 0 0 1 0 1 1 0 1 0 1 1 0 1 0 0 1 0 1 1 1\n")
    code, out, _ = run(capsys, "charpoly", "--format", "matrix", "--in", str(p))
    assert code == 0
    assert out.strip() == "q^3 - 7q^2 + 14q - 8"


def test_graph_format(capsys, tmp_path):
    p = tmp_path / "k3.g"
    p.write_text("3 3\n0 1\n1 2\n2 0\n")
    code, out, _ = run(capsys, "info", "--format", "graph", "--in", str(p))
    assert code == 0
    assert "rank: 2" in out


def test_named_shortcuts(capsys):
    for name in ("fano", "vamos", "u24", "u_2_4"):
        code, _, _ = run(capsys, "info", "--named", name)
        assert code == 0


def test_bases_serialization_roundtrip(capsys, corpus):
    for m in corpus:
        if m.n_elements > 9 or m.rank == 0:
            continue
        text = cli.serialize_bases(m)
        assert cli.parse_bases(text) == m


def test_dual_roundtrip_through_cli(capsys, u24_file, tmp_path):
    code, out, _ = run(capsys, "dual", "--in", u24_file)
    assert code == 0
    p = tmp_path / "dual.txt"
    p.write_text(out)
    code, out2, _ = run(capsys, "dual", "--in", str(p))
    assert code == 0
    assert cli.parse_bases(out2) == cli.parse_bases(open(u24_file).read())


def test_minor_output(capsys):
    code, out, _ = run(capsys, "minor", "--named", "fano",
                       "--contract", "0", "--delete", "1", "--output", "jsonl")
    assert code == 0
    rec = json.loads(out)
    assert rec["n"] == 5 and rec["rank"] == 2


def test_relax_gives_nonfano(capsys):
    code, out, _ = run(capsys, "relax", "--named", "fano", "--set", "0,1,2")
    assert code == 0
    assert cli.parse_bases(out) == cs.named("nonfano")


def test_extend_variants(capsys):
    code, out, _ = run(capsys, "extend", "--named", "u24")
    assert cli.parse_bases(out) == cs.uniform(2, 5)
    code, out, _ = run(capsys, "extend", "--named", "u24", "--cut", "")
    assert cli.parse_bases(out).rank == 3
    code, out, _ = run(capsys, "extend", "--named", "u24", "--flat", "0")
    m = cli.parse_bases(out)
    assert m.n_elements == 5 and len(m.bases) == 9


def test_greedy_output(capsys, u24_file):
    code, out, _ = run(capsys, "greedy", "--in", u24_file, "--weights", "3,1,4,1")
    assert code == 0
    assert "basis: 0,2" in out and "weight: 7" in out


def test_ingleton_named_vamos_one_line(capsys):
    code, out, _ = run(capsys, "ingleton", "--named", "vamos")
    assert code == 0
    assert out.count("\n") == 1
    assert "4 Ingleton violations" in out
    assert "X1={0,4}" in out


def test_ingleton_clean(capsys):
    code, out, _ = run(capsys, "ingleton", "--named", "fano")
    assert code == 0
    assert "no Ingleton violations" in out


def test_bergman_deg_mu(capsys):
    code, out, _ = run(capsys, "bergman", "deg-mu", "--named", "fano")
    assert code == 0
    assert out.splitlines() == ["mu^0 = 1", "mu^1 = 6", "mu^2 = 8"]


def test_bergman_weight_jsonl(capsys):
    code, out, _ = run(capsys, "bergman", "weight", "--named", "u24",
                       "--output", "jsonl")
    rec = json.loads(out)
    assert rec["dimension"] == 1
    assert [[[0]], 1] in rec["weights"]


def test_bergman_rejects_loops(capsys, tmp_path):
    p = tmp_path / "loopy.txt"
    p.write_text("2 1\n0\n")
    code, _, err = run(capsys, "bergman", "weight", "--in", str(p))
    assert code == 2
    assert "loop" in err


def test_mobius_text(capsys, u24_file):
    code, out, _ = run(capsys, "mobius", "--in", u24_file)
    assert "mu({}) = 1" in out
    assert "mu({0,1,2,3}) = 3" in out


def test_jsonl_records_are_valid_json(capsys, u24_file):
    for cmd in (["info"], ["charpoly"], ["tutte"], ["fvector"], ["mobius"]):
        code, out, _ = run(capsys, *cmd, "--in", u24_file, "--output", "jsonl")
        assert code == 0
        for line in out.strip().splitlines():
            json.loads(line)


def test_parse_errors_exit_2(capsys, tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("4 2\n01 9z\n")
    code, _, err = run(capsys, "charpoly", "--in", str(p))
    assert code == 2
    assert "error:" in err
    code, _, err = run(capsys, "relax", "--named", "fano", "--set", "0,1")
    assert code == 2


def test_missing_input_exit_2(capsys):
    code, _, err = run(capsys, "charpoly")
    assert code == 2
    assert "no input" in err


def test_gendb_and_sweep(capsys, tmp_path):
    dbfile = tmp_path / "n5.revlex"
    code, out, _ = run(capsys, "gendb", "--max-n", "5", "--out", str(dbfile))
    assert code == 0
    assert "ok" in out
    loaded = db.load_database(str(dbfile))
    assert tuple(len(loaded[n]) for n in sorted(loaded)) == (2, 4, 8, 17, 38)

    code, out, _ = run(capsys, "sweep", "--db", str(dbfile),
                       "--check", "logconcave,balancing,mu-identity,identities")
    assert code == 0
    assert "checked 69 matroids" in out
    assert out.count("0 failures") == 4


def test_sweep_jsonl_and_jobs(capsys, tmp_path):
    dbfile = tmp_path / "n4.revlex"
    run(capsys, "gendb", "--max-n", "4", "--out", str(dbfile))
    code, out1, _ = run(capsys, "sweep", "--db", str(dbfile), "--output", "jsonl")
    assert code == 0
    lines = out1.strip().splitlines()
    assert json.loads(lines[-1])["summary"] is True
    assert len(lines) == 32  # 31 matroids + summary
    code, out2, _ = run(capsys, "sweep", "--db", str(dbfile), "--output", "jsonl",
                        "--jobs", "2")
    assert code == 0
    assert out2 == out1  # worker count must not change results


def test_sweep_sample_subset(capsys, tmp_path):
    dbfile = tmp_path / "n5.revlex"
    run(capsys, "gendb", "--max-n", "5", "--out", str(dbfile))
    code, out, _ = run(capsys, "sweep", "--db", str(dbfile), "--sample", "10",
                       "--seed", "5", "--check", "logconcave")
    assert code == 0
    assert "checked 10 matroids" in out
