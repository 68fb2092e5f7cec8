"""Pins the engine at the stored evaluation claims it does not reproduce.

Expected values come from orthonormal (epsilon) coordinates, a route that
never touches the Cartan matrix or its inverse.
"""

from fractions import Fraction

import pytest

from hodgerep.repdata import graded_character, weyl_dimension
from hodgerep.rootdata import SimpleType, build_root_datum, eval_on_grading, parity_element_eval
from hodgerep.tables import appendix_rows


def dot(x, y):
    return sum(Fraction(a) * b for a, b in zip(x, y))


def sl_weight(r, i):
    n = r + 1
    return [Fraction(int(k < i)) - Fraction(i, n) for k in range(n)]


def sl_coweight(r, j):
    n = r + 1
    return [Fraction(n - j, n) if k < j else Fraction(-j, n) for k in range(n)]


def so_even_coweight(r, j):
    if j <= r - 2:
        return [Fraction(int(k < j)) for k in range(r)]
    half = [Fraction(1, 2)] * r
    if j == r - 1:
        half[-1] = Fraction(-1, 2)
    return half


so_even_spin = so_even_coweight  # w_{r-1}, w_r coincide with the last two coweights


def node(r, *nodes):
    return tuple(int(k + 1 in nodes) for k in range(r))


@pytest.mark.parametrize("r", [3, 5, 7])
def test_sl_contact_parity_is_odd_for_odd_nodes(r):
    datum = build_root_datum(SimpleType("A", r))
    e = node(r, 1, r)
    for i in range(1, r + 1):
        ungraded = range(2, r)
        expected = 2 * sum(dot(sl_weight(r, i), sl_coweight(r, j)) for j in ungraded)
        assert expected == i * (r + 1 - i) - 2
        assert parity_element_eval(datum, node(r, i), e) == expected
        assert expected % 2 == i % 2


@pytest.mark.parametrize("r", [5, 7])
def test_so_even_spin_parity_under_second_node(r):
    datum = build_root_datum(SimpleType("D", r))
    e = node(r, 2)
    for i in (r - 1, r):
        expected = 2 * sum(dot(so_even_spin(r, i), so_even_coweight(r, j)) for j in range(1, r + 1) if j != 2)
        assert expected == Fraction(r * (r - 1), 2) - 2
        assert parity_element_eval(datum, node(r, i), e) == expected
        # differs in parity from r(r+1)/2 for odd r
        assert (expected - r * (r + 1) // 2) % 2 == 1


def test_f4_fourth_weight_on_first_coweight():
    # Bourbaki: a1 = e2-e3, a2 = e3-e4, a3 = e4, a4 = (e1-e2-e3-e4)/2
    simple = [(0, 1, -1, 0), (0, 0, 1, -1), (0, 0, 0, 1), tuple(Fraction(x, 2) for x in (1, -1, -1, -1))]
    coweight = (1, 1, 0, 0)
    assert [dot(a, coweight) for a in simple] == [1, 0, 0, 0]
    w4 = (1, 0, 0, 0)
    datum = build_root_datum(SimpleType("F", 4))
    assert eval_on_grading(datum, node(4, 4), node(4, 1)) == dot(w4, coweight) == 1


def test_exactly_these_claims_fail():
    failing = {(str(r.type), r.weight, r.grading) for r in appendix_rows(8) if not r.holds}
    expected = set()
    for r in (5, 7):
        for i in range(1, r + 1, 2):
            expected.add((f"A{r}", node(r, i), node(r, 1, r)))
        for i in (r - 1, r):
            expected.add((f"D{r}", node(r, i), node(r, 2)))
    expected.add(("F4", node(4, 4), node(4, 1)))
    assert failing == expected


def test_d4_third_fundamental_under_fourth_node():
    datum = build_root_datum(SimpleType("D", 4))
    e = node(4, 4)
    assert weyl_dimension(datum, node(4, 3)) == 8
    assert graded_character(datum, node(4, 3), e).dims == (4, 4)
    # the other three entries of the same list are reproduced
    assert graded_character(datum, (1, 0, 1, 0), e).dims == (15, 26, 15)
    assert graded_character(datum, (0, 0, 2, 0), e).dims == (10, 15, 10)
    assert graded_character(datum, node(4, 4), e).dims == (1, 6, 1)
    # U is quaternionic, so V = U + U has eigenspaces (8, 8)
    assert parity_element_eval(datum, node(4, 3), e) % 2 == 1
