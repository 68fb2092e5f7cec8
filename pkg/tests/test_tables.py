from fractions import Fraction

from hodgerep.rootdata import SimpleType
from hodgerep.tables import ClaimRow, appendix_rows, grading_rows, stored_gradings


def test_appendix_coverage():
    rows = appendix_rows(8)
    assert len(rows) >= 30
    sections = {r.section for r in rows}
    assert len(sections) >= 10
    c4 = [r for r in rows if r.type == SimpleType("C", 4) and r.kind == "eval" and r.grading == (0, 0, 0, 1)]
    assert {r.weight.index(1) + 1: r.computed for r in c4 if sum(r.weight) == 1} == {
        i: Fraction(i, 2) for i in range(1, 5)
    }


def test_claim_relations():
    base = dict(section="x", type=SimpleType("A", 1), weight=(1,), grading=(1,), kind="eval", params=())
    assert ClaimRow(relation="=", claimed=Fraction(1, 2), computed=Fraction(1, 2), **base).holds
    assert ClaimRow(relation="mod2", claimed=Fraction(1), computed=Fraction(3), **base).holds
    assert not ClaimRow(relation="mod2", claimed=Fraction(1), computed=Fraction(2), **base).holds
    assert ClaimRow(relation=">=", claimed=Fraction(2), computed=Fraction(3), **base).holds
    row = ClaimRow(relation="mod2", claimed=Fraction(1), computed=Fraction(3), **base)
    assert row.label() == "A1: (w1)(A^1) = (mod 2) 1"


def test_grading_rows_carry_names():
    rows = {(str(r.type), r.e): r for r in grading_rows("contact", 4)}
    g2 = rows[("G2", (0, 1))]
    assert g2.adjoint_grading == (1, 4, 4, 4, 1) and g2.compact_dim == 6 and g2.real_form == "G"


def test_d4_triality_names_meet():
    stored = stored_gradings("hermitian", 4)
    d4 = SimpleType("D", 4)
    assert stored[(d4, (1, 0, 0, 0))] == {"so(2,6)"}
    assert stored[(d4, (0, 0, 0, 1))] == {"so*(8)"}
