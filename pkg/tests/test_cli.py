import json

import pytest

from curvenbhd.cli import QueryConfig, build_parser, main
from curvenbhd.cosmall import cosmall_report
from curvenbhd.rootsys import DynkinType, LiteralError, ParabolicSubset, Root, build


def run(capsys, *argv):
    status = main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


class Test_Cosmall:
    """Test class for the cosmall command"""

    def test_highest_root(self, capsys):
        """Test that the highest root of B2 is P-cosmall"""
        status, out, _ = run(capsys, "cosmall", "--type", "B2", "--root", "1,2",
                             "--parabolic", "")
        assert status == 0
        assert "P-cosmall: true" in out.splitlines()
        assert "witness: none" in out.splitlines()

    def test_witness(self, capsys):
        """Test a negative verdict with its witness"""
        status, out, _ = run(capsys, "cosmall", "--type", "B2", "--root", "1,1")
        assert status == 0
        lines = out.splitlines()
        assert "cosmall: false" in lines
        assert "witness: 1,2" in lines
        assert "delta_set: {2}" in lines

    def test_type_c(self, capsys):
        """Test that 2e_1 is cosmall in C3"""
        status, out, _ = run(capsys, "cosmall", "--type", "C", "--rank", "3",
                             "--root", "2,2,1")
        assert status == 0
        assert "cosmall: true" in out.splitlines()

    def test_json_matches_library(self, capsys):
        """Test that JSON output equals the library report"""
        status, out, _ = run(capsys, "cosmall", "--type", "B2", "--root", "0,1",
                             "--parabolic", "1", "--format", "json")
        assert status == 0
        expected = cosmall_report(build(DynkinType("B", 2)), Root((0, 1)),
                                  ParabolicSubset([1], 2)).to_dict()
        assert json.loads(out) == expected
        assert expected["witness"] == "1,1"

    def test_levi_root(self, capsys):
        """Test a root inside R^+_P"""
        _, out, _ = run(capsys, "cosmall", "--type", "B2", "--root", "1,0",
                        "--parabolic", "1")
        assert "P-cosmall: n/a (root lies in R^+_P)" in out.splitlines()

    def test_bad_input(self, capsys):
        """Test exit status 2 and positional messages on invalid input"""
        status, _, err = run(capsys, "cosmall", "--type", "B2", "--root", "1,x")
        assert status == 2
        assert "error: root: entry 2" in err
        status, _, err = run(capsys, "cosmall", "--type", "B2", "--root", "2,0")
        assert status == 2
        assert "not a root" in err
        status, _, _ = run(capsys, "cosmall", "--type", "B2", "--root", "1,0,0")
        assert status == 2
        status, _, _ = run(capsys, "cosmall", "--type", "D3", "--root", "1,0,0")
        assert status == 2
        status, _, _ = run(capsys, "cosmall", "--type", "B2", "--root=-1,0")
        assert status == 2
        status, _, _ = run(capsys, "cosmall", "--type", "B2", "--root", "1,0",
                           "--parabolic", "3")
        assert status == 2
        status, _, err = run(capsys, "cosmall", "--root", "1,0")
        assert status == 2
        assert "--type is required" in err
        status, _, err = run(capsys, "cosmall", "--type", "B²", "--root", "1,2")
        assert status == 2
        assert err.startswith("error:")


class Test_CurveNbhd:
    """Test class for the curve-nbhd command"""

    def test_b2(self, capsys):
        """Test the B2 degree (2,1) from the base point"""
        status, out, _ = run(capsys, "curve-nbhd", "--type", "B2", "--degree", "2,1",
                             "--format", "json")
        assert status == 0
        data = json.loads(out)
        assert data["greedy"] == ["1,2", "1,0"]
        assert data["z"] == [2, 1, 2, 1]
        assert data["neighborhood"]["dimension"] == 4
        assert data["w"] == []

    def test_degree_zero(self, capsys):
        """Test that degree zero echoes the minimal coset representative"""
        status, out, _ = run(capsys, "curve-nbhd", "--type", "A2", "--word", "2 1 2",
                             "--parabolic", "1", "--format", "json")
        assert status == 0
        data = json.loads(out)
        assert data["greedy"] == []
        assert data["z"] == []
        assert data["neighborhood"]["word"] == [1, 2]

    def test_text(self, capsys):
        """Test the text layout"""
        status, out, _ = run(capsys, "curve-nbhd", "--type", "B2", "--word", "1",
                             "--degree", "1,0")
        assert status == 0
        lines = out.splitlines()
        assert "greedy: (1,0)" in lines
        assert "z: 1 (length 1)" in lines
        assert "neighborhood: 1 (length 1)" in lines

    def test_bad_degree(self, capsys):
        """Test wrong-length and negative degrees"""
        status, _, _ = run(capsys, "curve-nbhd", "--type", "B2", "--degree", "1")
        assert status == 2
        status, _, _ = run(capsys, "curve-nbhd", "--type", "B2", "--degree=-1,0")
        assert status == 2
        status, _, _ = run(capsys, "curve-nbhd", "--type", "B2", "--word", "3")
        assert status == 2


class Test_Greedy:
    """Test class for the greedy command"""

    def test_greedy(self, capsys):
        """Test the greedy decomposition output"""
        status, out, _ = run(capsys, "greedy", "--type", "B2", "--degree", "2,1")
        assert status == 0
        assert out.splitlines() == ["degree: 2,1", "part 1: 1,2", "part 2: 1,0",
                                    "residual: 0,0"]


class Test_Hecke:
    """Test class for the hecke command"""

    def test_product(self, capsys):
        """Test the Hecke product of two words"""
        status, out, _ = run(capsys, "hecke", "--type", "A2", "--word", "1",
                             "--word", "1 2", "--format", "json")
        assert status == 0
        data = json.loads(out)
        assert data["product"] == [1, 2]
        assert data["length"] == 2
        status, out, _ = run(capsys, "hecke", "--type", "A2", "--word", "1",
                             "--word", "1")
        assert "u . v: 1 (length 1)" in out.splitlines()

    def test_word_count(self, capsys):
        """Test that exactly two words are required"""
        status, _, err = run(capsys, "hecke", "--type", "A2", "--word", "1")
        assert status == 2
        assert "expected 2 --word values" in err


class Test_Table:
    """Test class for the table command"""

    def test_text(self, capsys):
        """Test text tables and flagged rows"""
        status, out, _ = run(capsys, "table", "--type", "D4")
        assert status == 0
        assert out.startswith("Type D4 (l = 4)")
        assert sum(line.startswith("! ") for line in out.splitlines()) == 3
        status, out, _ = run(capsys, "table", "--type", "A3")
        assert "! " not in out

    def test_json(self, capsys):
        """Test the JSON table"""
        status, out, _ = run(capsys, "table", "--type", "B2", "--format", "json")
        assert status == 0
        data = json.loads(out)
        assert [r["delta_set"] for r in data["cosmall"]] == [[1], [2], []]

    def test_non_classical(self, capsys):
        """Test that exceptional types are rejected"""
        status, _, err = run(capsys, "table", "--type", "G2")
        assert status == 2
        assert err.startswith("error:")


class Test_Verify:
    """Test class for the verify command"""

    def test_pass(self, capsys):
        """Test a passing suite"""
        status, out, _ = run(capsys, "verify", "--max-rank", "2", "--suite", "counts",
                             "--suite", "duality")
        assert status == 0
        lines = out.splitlines()
        assert lines[0].startswith("counts")
        assert lines[1].startswith("duality")
        assert " ok " in lines[0]

    def test_json(self, capsys):
        """Test JSON summaries and flagged notes"""
        status, out, _ = run(capsys, "verify", "--max-rank", "4", "--suite", "tables",
                             "--format", "json")
        assert status == 0
        (data,) = json.loads(out)
        assert data["suite"] == "tables"
        assert data["counterexamples"] == []
        assert len(data["notes"]) == 3

    def test_bad_rank(self, capsys):
        """Test that the rank bound must be at least 2"""
        status, _, _ = run(capsys, "verify", "--max-rank", "1")
        assert status == 2


class Test_Parser:
    """Test class for argument parsing and configuration"""

    def test_usage_errors(self, capsys):
        """Test that argparse usage errors exit with status 2"""
        with pytest.raises(SystemExit) as info:
            main([])
        assert info.value.code == 2
        with pytest.raises(SystemExit) as info:
            main(["verify", "--suite", "nonsense"])
        assert info.value.code == 2
        with pytest.raises(SystemExit) as info:
            main(["cosmall", "--type", "B2"])
        assert info.value.code == 2

    def test_config(self):
        """Test the frozen configuration built from the namespace"""
        args = build_parser().parse_args(["hecke", "--type", "A2", "--word", "1",
                                          "--word", "2", "-v"])
        config = QueryConfig.from_namespace(args)
        assert config.command == "hecke"
        assert config.words == ("1", "2")
        assert config.dynkin_type() == DynkinType("A", 2)
        with pytest.raises(AttributeError):
            config.command = "table"
        rs = config.root_system()
        u, v = config.weyl_elements(rs, count=2)
        assert u.hecke(v).length() == 2
        with pytest.raises(LiteralError):
            config.weyl_elements(rs, count=3)
