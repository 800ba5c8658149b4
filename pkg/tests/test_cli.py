import json

import pytest

from nstl.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out.splitlines()[0])


class TestDimCheck:
    def test_r3(self, capsys):
        code, data = run_json(capsys, "dim-check", "--r", "3")
        assert code == 0
        assert data == {"formula": 10, "oracle": 10, "agree": True}

    def test_u0_override(self, capsys):
        code, data = run_json(
            capsys, "dim-check", "--r", "3", "--u0", "11/5"
        )
        assert code == 0 and data["agree"]

    def test_bad_specialization(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["dim-check", "--r", "3", "--u0", "1"])
        assert exc.value.code == 2


class TestGraphs:
    def test_de_graph_32(self, capsys):
        code, data = run_json(capsys, "de-graph", "--shape", "3,2")
        assert code == 0
        assert len(data["vertices"]) == 5
        assert len(data["edges"]) == 6

    def test_wgraph_32(self, capsys):
        code, data = run_json(capsys, "wgraph", "--shape", "3,2")
        assert code == 0
        assert len(data["mu_edges"]) == 6
        assert all(mu == 1 for _, _, mu in data["mu_edges"])
        assert sorted(map(len, data["lower_descents"])) == [2, 2, 2, 3, 3]


class TestAlgebra:
    def test_kl_basis_r2(self, capsys):
        code, data = run_json(capsys, "kl-basis", "--r", "2")
        assert code == 0
        assert data["elements"]["2,1"] == {"1,2": "u^-1", "2,1": "1"}

    def test_cells_r3(self, capsys):
        code, data = run_json(capsys, "cells", "--r", "3")
        assert code == 0
        assert sorted(map(len, data["cells"])) == [1, 1, 2, 2]

    def test_transition_21(self, capsys):
        code, data = run_json(capsys, "transition", "--shape", "2,1")
        assert code == 0
        assert data["matrix"][0][0] == "1"

    def test_specht_shape(self, capsys):
        code, data = run_json(capsys, "specht", "--shape", "2,1")
        assert code == 0
        assert len(data["tableaux"]) == 2
        assert set(data["action"]) == {"1", "2"}


class TestNonstandard:
    def test_decompose_equal(self, capsys):
        code, data = run_json(
            capsys, "decompose", "--lhs", "3,2", "--rhs", "3,2"
        )
        assert code == 0
        assert data["total"] == data["ambient"] == 25

    def test_decompose_pair(self, capsys):
        code, data = run_json(
            capsys, "decompose", "--lhs", "4,1", "--rhs", "3,2"
        )
        assert code == 0
        assert data["constituents"] == [
            {"label": "4,1:3,2", "dimension": 20}
        ]

    def test_restrict_signed(self, capsys):
        code, data = run_json(capsys, "restrict", "--label", "+3,1")
        assert code == 0
        assert data["restriction"] == {"3:2,1": 1, "+2,1": 1, "eps+": 1}

    def test_restrict_eps_needs_rank(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["restrict", "--label", "eps+"])
        assert exc.value.code == 2

    def test_restrict_eps(self, capsys):
        code, data = run_json(
            capsys, "restrict", "--label", "eps+", "--r", "3"
        )
        assert code == 0
        assert data["restriction"] == {"eps+": 1}

    def test_seminormal_grid(self, capsys):
        code, out = run(
            capsys,
            "seminormal", "--lhs", "2,1", "--rhs", "2,1", "--level", "3",
        )
        assert code == 0
        data = json.loads(out.splitlines()[0])
        assert data["grid"] == [["eps+", "-2,1"], ["+2,1", "+2,1"]]
        assert "eps+" in out.splitlines()[2]


class TestConfig:
    def test_rank_bound(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["kl-basis", "--r", "6"])
        assert exc.value.code == 2

    def test_rank_bound_override(self, capsys):
        code, data = run_json(
            capsys, "--r-bound", "6", "de-graph", "--shape", "3,2,1"
        )
        assert code == 0

    def test_unknown_command(self):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_bad_partition(self):
        with pytest.raises(SystemExit) as exc:
            main(["de-graph", "--shape", "2,x"])
        assert exc.value.code == 2

    def test_output_file_and_determinism(self, tmp_path, capsys):
        p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
        main(["--output", str(p1), "wgraph", "--shape", "3,2"])
        main(["--output", str(p2), "wgraph", "--shape", "3,2"])
        assert p1.read_bytes() == p2.read_bytes()


class TestVerifyAll:
    def test_r3(self, capsys):
        code, out = run(capsys, "verify-all", "--r", "3")
        assert code == 0
        lines = out.splitlines()
        assert sum(1 for l in lines if l.endswith(": PASS")) == 12
