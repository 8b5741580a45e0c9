import json
import subprocess
import sys

import pytest

from conftest import complete, random_corpus
from twinwidth import Trigraph, greedy_sequence
from twinwidth.cli import run_command
from twinwidth.io import (
    FormatError,
    parse_graph,
    parse_index,
    parse_sequence,
    parse_x_set,
    write_graph,
    write_index,
    write_sequence,
)


def test_parse_graph():
    g = parse_graph("p tww 3 2\n1 2\n2 3\n")
    assert g.black_edges() == [(1, 2), (2, 3)]
    assert parse_graph(b"c hi\np tww 2 0\n").vertices == {1, 2}
    assert parse_graph("p tww 2 1\n2 1\n").black_edges() == [(1, 2)]


@pytest.mark.parametrize(
    "text, message",
    [
        ("p tww 3 2\n1 2\n", "declared 2 edges, found 1"),
        ("p graph 3 0\n", "malformed header"),
        ("p tww x 0\n", "malformed header"),
        ("", "missing"),
        ("p tww 3 1\n1 4\n", "line 2: vertex id out of range"),
        ("p tww 3 2\n1 2\n2 1\n", "line 3: duplicate edge"),
        ("p tww 3 1\n1 1\n", "self-loop"),
        ("p tww 3 1\n1 2 3\n", "line 2: expected"),
    ],
)
def test_parse_graph_errors(text, message):
    with pytest.raises(FormatError, match=message):
        parse_graph(text)


def test_graph_round_trip():
    for n, edges in random_corpus(30, seed=31):
        g = Trigraph.from_edge_list(n, edges)
        text = write_graph(g)
        assert parse_graph(text) == g
        assert write_graph(parse_graph(text)) == text


def test_write_graph_rejects_red_and_gaps():
    with pytest.raises(ValueError):
        write_graph(Trigraph.from_adjacency([1, 2], red_edges=[(1, 2)]))
    with pytest.raises(ValueError):
        write_graph(Trigraph.from_adjacency([1, 3]))


def test_sequence_round_trip():
    g = complete(5)
    seq, _ = greedy_sequence(g)
    text = write_sequence(seq)
    assert parse_sequence(text) == seq
    assert write_sequence(parse_sequence("c comment\n" + text)) == text
    with pytest.raises(FormatError, match="line 1"):
        parse_sequence("1\n")
    with pytest.raises(FormatError):
        parse_sequence("0 1\n")


def test_index_round_trip():
    index = {7: (1, 1, 3, 0), 8: (1, 1, 3, 1)}
    assert parse_index(write_index(index)) == index
    assert write_index(index) == "7 1 1 3 0\n8 1 1 3 1\n"


def test_parse_x_set():
    assert parse_x_set("1,2, 5") == [1, 2, 5]
    assert parse_x_set("1\n2\n") == [1, 2]


@pytest.fixture
def k4(tmp_path):
    path = tmp_path / "k4.gr"
    path.write_text(write_graph(complete(4)))
    return str(path)


def run(capsys, *argv):
    code = run_command(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_gen_lb_and_verify(tmp_path, capsys):
    g, s, idx = (str(tmp_path / f) for f in ("g.gr", "s.cs", "g.idx"))
    code, out, _ = run(capsys, "gen-lb", "--d", "3", "--k", "6", "--out", g, "--seq", s, "--index", idx)
    assert code == 0
    assert open(g).readline().startswith("p tww 12 ")
    assert len(open(s).read().splitlines()) == 11
    assert len(parse_index(open(idx).read())) == 6
    code, out, _ = run(capsys, "verify-seq", "--graph", g, "--seq", s, "--budget", "3")
    assert code == 0
    assert out.strip() == "width=3 valid=true"
    code, out, _ = run(capsys, "verify-seq", "--graph", g, "--seq", s, "--budget", "2")
    assert code == 1
    assert "valid=false" in out and "first_violation" in out


def test_gen_lb_explicit(tmp_path, capsys):
    g, s = str(tmp_path / "g.gr"), str(tmp_path / "s.cs")
    code, out, _ = run(capsys, "gen-lb", "--k", "8", "--A", "2", "--B", "1", "--C", "1",
                       "--out", g, "--seq", s, "--json")
    assert code == 0
    data = json.loads(out)
    assert data["non_x_count"] == 18 and data["n"] == 26
    assert run(capsys, "gen-lb", "--k", "8", "--A", "2", "--out", g, "--seq", s)[0] == 2
    assert run(capsys, "gen-lb", "--d", "3", "--k", "5", "--out", g, "--seq", s)[0] == 2


def test_bound_check(k4, capsys):
    code, out, _ = run(capsys, "bound-check", "--graph", k4, "--x", "1,2,3,4", "--d", "0")
    assert code == 0 and out.strip() == "count=4 bound=16 PASS"
    code, out, _ = run(capsys, "bound-check", "--graph", k4, "--x", "1,2,3,4", "--d", "0", "--json")
    assert json.loads(out) == {"count": 4, "bound": 16, "d": 0, "x_size": 4, "pass": True}


def test_bound_check_failure_exit(tmp_path, capsys):
    # X = {1..5}; vertex 6+s sees subset s, so all 32 traces occur. Claiming d = 0
    # gives bound 20, so the check must report FAIL.
    edges = [(x, 6 + s) for s in range(32) for x in range(1, 6) if s >> (x - 1) & 1]
    path = tmp_path / "cube.gr"
    path.write_text(write_graph(Trigraph.from_edge_list(37, edges)))
    code, out, _ = run(capsys, "bound-check", "--graph", str(path), "--x", "1,2,3,4,5", "--d", "0")
    assert code == 1 and out.strip() == "count=32 bound=20 FAIL"
    code, _, _ = run(capsys, "bound-check", "--graph", str(tmp_path / "missing.gr"), "--x", "1", "--d", "0")
    assert code == 3


def test_complexity_and_x_file(k4, tmp_path, capsys):
    xf = tmp_path / "x.txt"
    xf.write_text("1\n2\n")
    code, out, _ = run(capsys, "complexity", "--graph", k4, "--x-file", str(xf), "--traces")
    assert code == 0
    assert out.splitlines() == ["count=3", "{1}", "{2}", "{1,2}"]
    code, out, _ = run(capsys, "complexity", "--graph", k4, "--x", "1,2", "--json", "--traces")
    assert json.loads(out) == {"count": 3, "x_size": 2, "traces": [[1], [2], [1, 2]]}
    assert run(capsys, "complexity", "--graph", k4)[0] == 2
    assert run(capsys, "complexity", "--graph", k4, "--x", "1,9")[0] == 2


def test_shatter_exact_greedy(k4, tmp_path, capsys):
    code, out, _ = run(capsys, "shatter", "--graph", k4, "--n", "2")
    assert code == 0 and out.strip() == "pi(2)=3"
    assert run(capsys, "shatter", "--graph", k4, "--n", "9")[0] == 2
    w = tmp_path / "w.cs"
    code, out, _ = run(capsys, "exact-tww", "--graph", k4, "--witness", str(w), "--json")
    assert code == 0 and json.loads(out) == {"width": 0, "steps": 3}
    assert len(parse_sequence(w.read_text())) == 3
    code, out, _ = run(capsys, "greedy", "--graph", k4)
    assert code == 0 and out.splitlines()[0] == "width=0"
    assert len(out.splitlines()) == 4


def test_fault_injection(k4, tmp_path, capsys):
    truncated = tmp_path / "t.gr"
    truncated.write_text("p tww 3 2\n1 2\n")
    seq = tmp_path / "s.cs"
    seq.write_text("1 2\n1 3\n1 4\n")
    assert run(capsys, "verify-seq", "--graph", str(truncated), "--seq", str(seq))[0] == 3
    dead = tmp_path / "dead.cs"
    dead.write_text("1 2\n1 2\n1 4\n")
    code, out, _ = run(capsys, "verify-seq", "--graph", k4, "--seq", str(dead))
    assert code == 1 and "not live" in out
    code, out, _ = run(capsys, "verify-seq", "--graph", k4, "--seq", str(dead), "--json")
    data = json.loads(out)
    assert code == 1 and data["valid"] is False and data["error_step"] == 2
    garbage = tmp_path / "g.cs"
    garbage.write_text("1 x\n")
    assert run(capsys, "verify-seq", "--graph", k4, "--seq", str(garbage))[0] == 3
    assert run(capsys, "verify-seq", "--graph", k4, "--seq", str(tmp_path / "nope"))[0] == 3
    assert run(capsys, "no-such-command")[0] == 2
    assert run(capsys, "verify-seq", "--graph", k4)[0] == 2
    assert run(capsys, "bound-check", "--graph", k4, "--x", "1", "--d", "-1")[0] == 2


def test_json_contains_text_fields(k4, tmp_path, capsys):
    seq = tmp_path / "s.cs"
    seq.write_text("1 2\n1 3\n1 4\n")
    _, text, _ = run(capsys, "verify-seq", "--graph", k4, "--seq", str(seq))
    _, js, _ = run(capsys, "verify-seq", "--graph", k4, "--seq", str(seq), "--json")
    data = json.loads(js)
    assert text.strip() == f"width={data['width']} valid={str(data['valid']).lower()}"


def test_module_entry_point(k4):
    proc = subprocess.run(
        [sys.executable, "-m", "twinwidth", "shatter", "--graph", k4, "--n", "1"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "pi(1)=2"
