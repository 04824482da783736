import json
import random
from pathlib import Path

import pytest

from expdq import gallery
from expdq.census import census
from expdq.cli import main
from expdq.graph import emit_graph6

DATA = Path(__file__).parent / "data" / "connected7.g6"


def g6(*graphs):
    return [emit_graph6(g) for g in graphs]


def json_lines(out: str) -> list[dict]:
    return [json.loads(line) for line in out.splitlines() if line.strip()]


# -- census ------------------------------------------------------------------------


def test_census_single_graph():
    report = census(g6(gallery.saltire_pair()[0]))
    assert report.count == 1
    assert all(not classes for classes in report.classes.values())


def test_census_dq_not_d_pair():
    report = census(g6(*gallery.dq_not_d_pair()))
    assert len(report.classes["dq"]) == 1
    assert report.classes["d"] == []


def test_census_saltire_is_a_only():
    report = census(g6(*gallery.saltire_pair()), ["dq", "a"])
    assert report.classes["dq"] == []
    assert len(report.classes["a"]) == 1


def test_census_order_and_jobs_independent():
    lines = DATA.read_text().split()[:300]
    base = census(lines)
    shuffled = lines[:]
    random.Random(0).shuffle(shuffled)
    assert census(shuffled).classes == base.classes
    assert census(lines, jobs=2).classes == base.classes


# -- cli ----------------------------------------------------------------------------


def test_cli_charpoly(capsys):
    assert main(["charpoly", "Bw", "@"]) == 0
    rows = json_lines(capsys.readouterr().out)
    assert rows[0]["charpoly"] == "x^3 - 3*x^2 - 3*q^2*x + 3*x - 2*q^3 + 3*q^2 - 1"
    assert rows[1]["charpoly"] == "x - 1"


def test_cli_charpoly_p4_summary(capsys):
    assert main(["charpoly", "Ch"]) == 0
    (row,) = json_lines(capsys.readouterr().out)
    assert row["summary"]["distance_profile"] == {"1": 3, "2": 2, "3": 1}


def test_cli_compare_specific_q(capsys):
    a, b, _ = gallery.specific_q_pairs()["b"]
    ga, gb = g6(a, b)
    assert main(["compare", ga, gb, "--at-q", "-2"]) == 0
    captured = capsys.readouterr()
    assert json_lines(captured.out)[0]["cospectral"] is True
    assert "cospectral at q=-2" in captured.err
    assert main(["compare", ga, gb]) == 0
    captured = capsys.readouterr()
    row = json_lines(captured.out)[0]
    assert row["cospectral"] is False and "difference" in row
    assert "not cospectral" in captured.err


def test_cli_compare_half_and_cross_q(capsys):
    ga, gb = g6(*gallery.half_q_pair())
    assert main(["compare", ga, gb, "--at-q", "1/2"]) == 0
    assert json_lines(capsys.readouterr().out)[0]["cospectral"] is True
    rook, q1, other, q2 = gallery.cross_q_pair()
    assert main(["compare", *g6(rook, other), "--at-q", q1, "--at-q-b", q2]) == 0
    assert json_lines(capsys.readouterr().out)[0]["cospectral"] is True


def test_cli_compare_self_every_mode(capsys):
    for extra in ([], ["--at-q", "3"], ["--at-q", "2i"], ["--at-q", "-1/3"], ["--at-q=-2i"]):
        assert main(["compare", "Ch", "Ch", *extra]) == 0
        assert json_lines(capsys.readouterr().out)[0]["cospectral"] is True


def test_cli_family(capsys):
    assert main(["family", "complete", "5"]) == 0
    rows = json_lines(capsys.readouterr().out)
    eig = {r["eigenvalue"]: r["multiplicity"] for r in rows if "eigenvalue" in r}
    assert eig == {"4*q + 1": 1, "-q + 1": 4}
    assert rows[-1]["cross_check"] is True

    assert main(["family", "hypercube", "3"]) == 0
    rows = json_lines(capsys.readouterr().out)
    assert sorted(r["multiplicity"] for r in rows if "eigenvalue" in r) == [1, 1, 3, 3]

    assert main(["family", "kneser", "5", "2"]) == 0
    captured = capsys.readouterr()
    rows = json_lines(captured.out)
    assert sorted(r["multiplicity"] for r in rows if "eigenvalue" in r) == [1, 4, 5]
    assert rows[-1]["cross_check"] is True and "cross-check: OK" in captured.err


def test_cli_family_cycle_needs_q(capsys):
    assert main(["family", "cycle", "5", "--q", "1/2"]) == 0
    assert json_lines(capsys.readouterr().out)[-1]["cross_check"] is True
    assert main(["family", "cycle", "5"]) == 2


def test_cli_construct(capsys):
    assert main(["construct", "unicyclic", "0"]) == 0
    (row,) = json_lines(capsys.readouterr().out)
    assert row["separator"] == "NONISOMORPHIC"
    assert main(["construct", "switch", "F~qjW"]) == 0
    rows = json_lines(capsys.readouterr().out)
    assert rows and all(r["construction"] == "switch" for r in rows)
    g, u1, u2 = gallery.cycle_gadget()
    assert main(["construct", "glue", *g6(g), str(u1), *g6(g), str(u2), "Bg", "0"]) == 0
    (row,) = json_lines(capsys.readouterr().out)
    assert row["certified"] is True and row["separator"] == "NONISOMORPHIC"


def test_cli_census_file(capsys, tmp_path):
    f = tmp_path / "pair.g6"
    f.write_text(">>graph6<<" + "\n".join(g6(*gallery.dq_not_d_pair())) + "\n")
    assert main(["census", str(f)]) == 0
    rows = json_lines(capsys.readouterr().out)
    summary = rows[-1]["summary"]
    assert summary["graphs"] == 2 and summary["dq_not_d"] == 1 and summary["d_pairs"] == 0


@pytest.mark.parametrize(
    "argv",
    [
        ["charpoly", "C"],
        ["compare", "Bw", "Bw", "--at-q", "0.5"],
        ["compare", "Bw", "Bx"],
        ["family", "kneser", "4", "2"],
        ["census", "/nonexistent/file.g6"],
        ["census", "--matrices", "dq,laplacian", "/dev/null"],
    ],
)
def test_cli_malformed_input_exits_2(argv, capsys):
    assert main(argv) == 2
    assert "error:" in capsys.readouterr().err


def test_cli_census_bad_line_reports_line_number(capsys, tmp_path):
    f = tmp_path / "bad.g6"
    f.write_text("Bw\nC\n")
    assert main(["census", str(f)]) == 2
    assert "line 2" in capsys.readouterr().err
