import json
import os
from fractions import Fraction
from pathlib import Path

import pytest

import complements as cx

FIXTURES = Path(os.environ.get("COMPLEMENTS_DATA_DIR", Path(__file__).parents[2] / "data")) / "fixtures"


def test_coefficients():
    assert cx.is_member("6/7")
    assert not cx.is_member(Fraction(5, 8))
    assert cx.is_member("9/10", "Mm2")
    assert cx.rounding_lemma_holds("2/3", 3)
    assert not cx.rounding_lemma_holds("51/100", 2)
    assert cx.complement_coeff("4/5", 6) == 5
    assert cx.complement_coeff(1, 5) == 5
    with pytest.raises(cx.DomainError):
        cx.is_member("3/2")
    with pytest.raises(cx.ParseError):
        cx.is_member("1/2", "[1/2")


def test_coeffwise():
    d = {"P1": 1, "P2": "51/100", "P3": "49/100"}
    assert cx.is_n_complement_coeffwise(d, {"P1": 1, "P2": "1/2", "P3": "1/2"}, 2)
    assert not cx.is_n_complement_coeffwise({"P": "2/3"}, {"P": "2/3"}, 2)


def test_curve():
    r = cx.curve_compl([Fraction(1, 2), Fraction(2, 3), Fraction(4, 5)])
    assert r["n"] == 6
    assert sum(r["witness"].values()) == 2
    assert cx.curve_is_exceptional(["1/2", "2/3", "2/3"])
    assert not cx.curve_has_n_complement(["1/2", "2/3", "4/5"], 5)
    assert len(cx.enumerate_exceptional_standard(4)) == 7
    with pytest.raises(cx.DomainError):
        cx.curve_compl(["1/2", "2/3", "6/7"])


def test_arrangement():
    assert cx.arrangement_compl(2, ["1/2", "2/3", "4/5", "6/7"])["n"] == 6
    assert not cx.arrangement_has_n_complement(2, ["1/2", "2/3", "4/5", "6/7"], 5)
    collections, const = cx.enumerate_candidate_exceptional(2)
    assert (len(collections), const) == (126, 42)
    assert cx.candidate_exceptional(1, ["1/2", "2/3", "2/3"])


def test_different():
    assert cx.different_coefficient(2, [("2/3", 1)]) == Fraction(5, 6)
    with pytest.raises(cx.DomainError):
        cx.different_coefficient(5, [("1/2", 3)])


def test_graphs_and_tables():
    e8 = json.loads((FIXTURES / "E8.json").read_text())
    r = cx.duval(e8)
    assert (r["type"], list(r["collection"]), r["compl"]) == ("E8", [2, 3, 5], 6)
    assert set(cx.discrepancies(e8).values()) == {0}
    t = cx.lct_table((FIXTURES / "lct_two_piece.json").read_text())
    assert t["alpha0"] == Fraction(1, 3)
    assert t["active_at_alpha0"] == ["S", "E"]


def test_run():
    code, out = cx.run(["compl", "curve", "--points", "2,3,5"])
    assert code == 0
    assert json.loads(out)["n"] == 6
    code, _ = cx.run(["nonsense"])
    assert code == 2
