import pytest

from diamkit.main import main

PENTAGON = "p 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n"


@pytest.fixture
def pentagon(tmp_path):
    path = tmp_path / "c5.txt"
    path.write_text(PENTAGON, encoding="utf-8")
    return str(path)


@pytest.fixture
def formula_file(tmp_path):
    path = tmp_path / "sample.cnf"
    path.write_text("p nae 3 3\n1 2 3 0\n-1 -2 -3 0\n1 -2 -3 0\n", encoding="utf-8")
    return str(path)


class TestSolve:

    def test_nearbip_yes(self, pentagon, capsys):
        assert main(["solve", "--problem", "nearbip", "--d", "2", pentagon]) == 0
        assert capsys.readouterr().out == (
            "# answer yes\n# problem nearbip\n# route whole_graph\n# optimum 1\ns 1\nv 5\n"
        )

    def test_star_no(self, pentagon, capsys):
        assert main(["solve", "--problem", "star3col", "--d", "2", pentagon]) == 1
        assert capsys.readouterr().out.startswith("# answer no\n")

    def test_output_file(self, pentagon, tmp_path, capsys):
        target = tmp_path / "answer.txt"
        assert main(["-o", str(target), "solve", "--problem", "threecol", "--d", "2", pentagon]) == 0
        assert capsys.readouterr().out == ""
        text = target.read_text(encoding="utf-8")
        assert text.startswith("# answer yes\n# problem threecol\n")
        assert "c 5\n" in text

    def test_malformed_graph(self, tmp_path, capsys):
        path = tmp_path / "bad.txt"
        path.write_text("p 2 1\nx 1 2\n", encoding="utf-8")
        assert main(["solve", "--problem", "threecol", "--d", "1", str(path)]) == 2
        assert capsys.readouterr().err.strip().splitlines()[-1].startswith("error: format: ")

    def test_missing_problem(self, pentagon, capsys):
        assert main(["solve", "--d", "2", pentagon]) == 2
        assert "error: invalid: " in capsys.readouterr().err

    def test_chair_check(self, tmp_path, capsys):
        path = tmp_path / "chair.txt"
        path.write_text("p 5 4\ne 1 2\ne 1 3\ne 1 4\ne 4 5\n", encoding="utf-8")
        args = ["solve", "--problem", "ifvs", "--d", "3", "--verify-chair-free", str(path)]
        assert main(args) == 2
        assert "error: precondition: " in capsys.readouterr().err


class TestOracleAndCount:

    def test_oracle(self, pentagon, capsys):
        assert main(["oracle", "--problem", "ioct", "--k", "1", pentagon]) == 0
        assert "# optimum 1\n" in capsys.readouterr().out

    def test_cap_overflow(self, pentagon, capsys):
        assert main(["--cap", "oracle_vertices=2", "oracle", "--problem", "threecol", pentagon]) == 3
        assert "error: overflow: " in capsys.readouterr().err

    def test_unknown_cap(self, pentagon, capsys):
        assert main(["--cap", "colours=4", "count", pentagon]) == 2

    def test_count_generated_gd(self, tmp_path, capsys):
        target = tmp_path / "g2.txt"
        assert main(["-o", str(target), "generate", "gd", "--d", "2"]) == 0
        assert main(["count", str(target)]) == 0
        assert capsys.readouterr().out == "48\n"

    def test_tripartite_is_three_colourable(self, tmp_path, capsys):
        target = tmp_path / "tri.txt"
        args = ["-o", str(target), "generate", "tripartite", "--n", "10", "--seed", "2", "--d", "3"]
        assert main(args) == 0
        assert target.read_text(encoding="utf-8").startswith("# tripartite seed 2\n")
        assert main(["solve", "--problem", "threecol", "--d", "3", str(target)]) == 0


class TestVerifyAndClassify:

    def test_verify_colouring(self, pentagon, tmp_path, capsys):
        certificate = tmp_path / "c5.col"
        certificate.write_text("c 5\nv 1 1\nv 2 2\nv 3 1\nv 4 2\nv 5 3\n", encoding="utf-8")
        assert main(["verify", pentagon, str(certificate)]) == 0
        assert capsys.readouterr().out == "valid proper colouring\n"
        assert main(["verify", "--problem", "star3col", pentagon, str(certificate)]) == 1
        assert capsys.readouterr().out == "invalid star colouring\n"

    def test_verify_vertex_set(self, pentagon, tmp_path, capsys):
        certificate = tmp_path / "c5.set"
        certificate.write_text("s 1\nv 5\n", encoding="utf-8")
        assert main(["verify", "--problem", "ioct", "--k", "1", pentagon, str(certificate)]) == 0
        assert capsys.readouterr().out == "valid ioct transversal\n"

    def test_classify(self, pentagon, capsys):
        assert main(["classify", pentagon]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[:4] == ["vertices 5", "edges 5", "connected yes", "diameter 2"]
        assert "chair-free yes" in out
        assert "bipartite no" in out

    def test_classify_pattern(self, pentagon, capsys):
        assert main(["classify", "--pattern", "P4", pentagon]) == 1
        assert "P4-free no" in capsys.readouterr().out.splitlines()


class TestReduce:

    def test_gadget_round_trip(self, formula_file, tmp_path, capsys):
        target = tmp_path / "ioct.txt"
        assert main(["-o", str(target), "reduce", "ioct-gadget", formula_file]) == 0
        assert target.read_text(encoding="utf-8").startswith("# gadget ioct-gadget\n")
        assert main(["check-gadget", str(target)]) == 0
        out = capsys.readouterr().out.splitlines()
        assert out[0] == "gadget ioct-gadget vertices 16"
        assert out[-1] == "result pass"

    def test_variant_a(self, tmp_path, capsys):
        formula = tmp_path / "heavy.cnf"
        formula.write_text("p nae 4 3\n1 2 3 0\n1 3 4 0\n2 3 4 0\n", encoding="utf-8")
        pairs = tmp_path / "pairs.txt"
        assert main(["reduce", "variant-a", str(formula), "--collection-out", str(pairs)]) == 0
        assert capsys.readouterr().out.startswith("p nae ")
        assert pairs.read_text(encoding="utf-8").startswith("pair ")

    def test_rejects_heavy_literal(self, tmp_path, capsys):
        formula = tmp_path / "heavy.cnf"
        formula.write_text("p nae 4 3\n1 2 3 0\n1 3 4 0\n2 3 4 0\n", encoding="utf-8")
        assert main(["reduce", "ioct-gadget", str(formula)]) == 2
        assert "error: invalid: " in capsys.readouterr().err
