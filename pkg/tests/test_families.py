from fractions import Fraction

import pytest

from hodgerep.enumerator import enumerate_tuples, tuple_key
from hodgerep.errors import UsageError
from hodgerep.families import evaluate, family_report, fixture_names, integer, load_data, load_fixture, parameter_grid
from hodgerep.hodgecore import HodgeTuple, hodge_numbers
from hodgerep.rootdata import SimpleType


def test_evaluate():
    env = {"r": 4, "i": 2}
    assert evaluate("i/(r+1) - 1/2", env) == Fraction(-1, 10)
    assert evaluate("binom(r, i)", env) == 6
    assert evaluate("(r+1)//2", env) == 2
    assert evaluate("-r**2", env) == -16
    assert evaluate("r >= 4 and i < 2 or r == 4", env) is True
    assert evaluate("max(r, 2*i+1)", env) == 5
    assert evaluate(7, {}) == 7


@pytest.mark.parametrize("expr", ["__import__('os')", "r.real", "s", "1 +", "[1]", "1 if r else 2"])
def test_evaluate_rejects(expr):
    with pytest.raises(UsageError):
        evaluate(expr, {"r": 1})


def test_integer():
    assert integer("r/2", {"r": 4}) == 2
    with pytest.raises(UsageError):
        integer("r/2", {"r": 3})


def test_parameter_grid():
    grid = list(parameter_grid({"r": {"min": 2, "max": 3}, "i": {"max": "r"}}, 8))
    assert grid == [{"r": 2, "i": 1}, {"r": 2, "i": 2}, {"r": 3, "i": 1}, {"r": 3, "i": 2}, {"r": 3, "i": 3}]
    assert len(list(parameter_grid({"r": {}}, 3))) == 4


def test_names():
    names = fixture_names()
    assert "k3_type" in names and "cy3_horizontal" in names
    assert "gradings" not in names and "appendix_values" not in names
    with pytest.raises(UsageError):
        load_fixture("gradings")
    with pytest.raises(UsageError):
        load_data("no_such_fixture")


@pytest.mark.parametrize("name", fixture_names())
def test_stored_hodge_numbers_agree_with_engine(name):
    fx = load_fixture(name)
    checked = 0
    for x in fx.expected(max_rank=6):
        if x.hodge_numbers is not None:
            assert hodge_numbers(x.tuple).hodge_numbers == x.hodge_numbers, (x.family, x.params)
            checked += 1
    assert checked


def test_family_report_groups_instances():
    t = HodgeTuple.simple(SimpleType.parse("B3"), (1, 0, 0), (1, 0, 0))
    lines = family_report([t], [load_fixture("weight2_h1_horizontal")], max_rank=4)
    assert len(lines) == 1 and lines[0].endswith("1 instance(s)")
    odd = HodgeTuple.simple(SimpleType.parse("E8"), (0,) * 7 + (1,), (0,) * 7 + (1,))
    assert family_report([odd], [load_fixture("k3_type")], max_rank=4) == [f"unmatched: {odd}"]


def test_weight_one_fixture_reproduced():
    fx = load_fixture("weight1")
    found = set()
    for c in fx.constraints(max_rank=6, max_dim_v=2000):
        found |= {tuple_key(x.tuple) for x in enumerate_tuples(c)}
    assert found == fx.expected_keys(6)
