import pytest

from curvenbhd.rootsys import DynkinType, DynkinTypeError, Root
from curvenbhd.tables import (check_table, emit_table, format_delta, format_e,
                              format_simple, published_table_claims, parse_table_json,
                              render_table_json, render_table_text,
                              table_discrepancies)


class Test_Formatting:
    """Test class for table formatting helpers"""

    def test_format(self):
        """Test e_i coordinates, simple-root expansions and Delta sets"""
        assert format_e((1, -1, 0)) == "e1-e2"
        assert format_e((0, 0, 2)) == "2e3"
        assert format_e((1, 1)) == "e1+e2"
        assert format_e((0, 0)) == "0"
        assert format_simple(Root((1, 2))) == "β1+2β2"
        assert format_delta({2, 1}) == "{β1, β2}"
        assert format_delta(()) == "{}"


class Test_EmitTable:
    """Test class for tables computed from first principles"""

    def test_b2(self):
        """Test the B2 table row by row"""
        table = emit_table(DynkinType("B", 2))
        assert table["dynkin"] == "B2"
        assert table["l"] == 2
        assert [(r["coords_e"], r["delta_set"]) for r in table["cosmall"]] == [
            ("e2", [1]), ("e1-e2", [2]), ("e1+e2", [])]
        assert [r["coords_e"] for r in table["long"]] == ["e1-e2", "e1+e2"]
        assert [r["coords_e"] for r in table["short"]] == ["e2", "e1"]
        assert table["discrepancies"] == []

    def test_type_a(self):
        """Test that type A rows are e_i - e_j with Delta = {b_(i-1), b_j}"""
        table = emit_table(DynkinType("A", 3))
        assert table["l"] == 4
        assert table["long"] == [] and table["short"] == []
        rows = {r["coords_e"]: r["delta_set"] for r in table["cosmall"]}
        assert len(rows) == 6
        assert rows["e1-e2"] == [2]
        assert rows["e2-e3"] == [1, 3]
        assert rows["e1-e4"] == []
        assert rows["e3-e4"] == [2]

    def test_type_c(self):
        """Test that 2e_i is cosmall in type C"""
        rows = {r["coords_e"]: r["delta_set"]
                for r in emit_table(DynkinType("C", 3))["cosmall"]}
        assert rows["2e1"] == []
        assert rows["2e2"] == [1]
        assert rows["2e3"] == [2]
        assert "e1+e2" not in rows

    def test_non_classical(self):
        """Test that exceptional types have no table"""
        with pytest.raises(DynkinTypeError):
            emit_table(DynkinType("G", 2))
        with pytest.raises(DynkinTypeError):
            published_table_claims(DynkinType("F", 4))


class Test_PublishedTables:
    """Test class for comparison with the published tables"""

    def test_claims(self):
        """Test instantiation of the symbolic rows"""
        claims = published_table_claims(DynkinType("A", 2))
        assert claims["cosmall"][(1, -1, 0)] == frozenset({2})
        assert claims["cosmall"][(0, 1, -1)] == frozenset({1})
        b3 = published_table_claims(DynkinType("B", 3))
        assert (0, 0, 1) in b3["short"]
        assert b3["cosmall"][(0, 0, 1)] == frozenset({2})

    def test_a_b_c_agree(self):
        """Test that types A, B and C agree with the published rows"""
        for family, ranks in (("A", range(1, 6)), ("B", range(2, 6)),
                              ("C", range(2, 6))):
            for n in ranks:
                assert table_discrepancies(DynkinType(family, n)) == []

    def test_d4(self):
        """Test the flagged D4 rows"""
        rows = {r["root"]: r for r in table_discrepancies(DynkinType("D", 4))}
        assert set(rows) == {"1,1,0,0", "0,1,0,0", "0,0,0,1"}
        assert rows["0,1,0,0"]["coords_e"] == "e2-e3"
        assert rows["0,1,0,0"]["computed"] == [1, 3, 4]
        assert rows["0,1,0,0"]["published"] == [1, 3]
        assert rows["0,0,0,1"]["coords_e"] == "e3+e4"
        assert rows["0,0,0,1"]["computed"] == [2]
        assert rows["0,0,0,1"]["published"] == [2, 3]

    def test_d5(self):
        """Test the flagged D5 rows"""
        rows = table_discrepancies(DynkinType("D", 5))
        assert {r["coords_e"] for r in rows} == {"e1-e4", "e2-e4", "e3-e4", "e4+e5"}
        assert table_discrepancies(DynkinType("D", 5)) == rows

    def test_discrepancies_in_table(self):
        """Test that emitted tables carry their discrepancies"""
        table = emit_table(DynkinType("D", 4))
        assert len(table["discrepancies"]) == 3
        text = render_table_text(table)
        assert sum(line.startswith("! ") for line in text.splitlines()) == 3


class Test_Rendering:
    """Test class for JSON and text rendering"""

    def test_json(self):
        """Test that JSON output parses back to the same table"""
        for name in ["A3", "B3", "C3", "D4"]:
            table = emit_table(DynkinType.parse(name))
            text = render_table_json(table)
            assert parse_table_json(text) == table
        assert "β1" in render_table_json(emit_table(DynkinType("B", 2)))

    def test_text(self):
        """Test the aligned text layout"""
        text = render_table_text(emit_table(DynkinType("B", 2)))
        lines = text.splitlines()
        assert lines[0] == "Type B2 (l = 2)"
        assert lines[1] == "Simple   β1, β2"
        assert any(line.startswith("Cosmall  e2") for line in lines)
        assert any("Δ(α) = {β2}" in line for line in lines)
        assert text.endswith("\n")
        assert "!" not in text


class Test_CheckTable:
    """Test class for checking a parsed table against first principles"""

    def test_consistent(self):
        """Test that emitted tables check clean"""
        for name in ["A2", "B3", "C3", "D4", "D5"]:
            table = parse_table_json(render_table_json(emit_table(DynkinType.parse(name))))
            assert check_table(table) == []

    def test_tampered(self):
        """Test that edited rows are reported"""
        table = emit_table(DynkinType("B", 2))
        table["cosmall"][0]["delta_set"] = [2]
        assert len(check_table(table)) == 1
        table = emit_table(DynkinType("B", 2))
        del table["cosmall"][-1]
        assert check_table(table) == ["cosmall root 1,2 missing"]
        table = emit_table(DynkinType("B", 2))
        table["cosmall"].append({"root": "1,1", "coords_e": "e1",
                                 "coords_simple": "β1+β2", "delta_set": [2]})
        assert check_table(table) == ["1,1 listed but not cosmall"]
