from fractions import Fraction

import pytest

from hodgerep.enumerator import (
    SearchConstraints,
    canonicalize,
    classify_gradings,
    classify_tuple,
    enumerate_tuples,
    format_pattern,
    parse_pattern,
    tuple_key,
)
from hodgerep.errors import UsageError
from hodgerep.hodgecore import AlgebraFactor, HodgeTuple, describe
from hodgerep.rootdata import SimpleType


def node(r, *nodes):
    return tuple(int(j + 1 in nodes) for j in range(r))


def tup(name, e_nodes, mu, c=0):
    t = SimpleType.parse(name)
    return HodgeTuple.simple(t, node(t.rank, *e_nodes), mu, c)


def keys(results):
    return {tuple_key(x.tuple) for x in results}


def test_parse_pattern():
    assert parse_pattern("1,*,1") == (1, None, 1)
    assert parse_pattern("(2, *, 2)") == (2, None, 2)
    assert format_pattern((2, None, 2)) == "2,*,2"
    for bad in ("1,x,1", "1,-1,1"):
        with pytest.raises(UsageError):
            parse_pattern(bad)


@pytest.mark.parametrize("kwargs", [
    dict(weight_n=2, hodge_pattern=(1, None)),
    dict(weight_n=2, hodge_pattern=(1, None, 2), max_dim_v=10),
    dict(weight_n=2, hodge_pattern=(1, None, 1)),
    dict(weight_n=0, hodge_pattern=(1,)),
    dict(weight_n=2, hodge_pattern=(1, 2, 1), require={"bogus"}),
    dict(weight_n=2, hodge_pattern=(1, 2, 1), require={"horizontal", "non-horizontal"}),
    dict(weight_n=2, hodge_pattern=(1, 2, 1), max_rank=0),
])
def test_bad_constraints(kwargs):
    with pytest.raises(UsageError):
        SearchConstraints(**kwargs)


def test_unbounded_search_names_missing_bound():
    with pytest.raises(UsageError, match="max_dim_v"):
        SearchConstraints(weight_n=2, hodge_pattern=(1, None, 1))


def test_fully_fixed_pattern_bounds_dimension():
    c = SearchConstraints(weight_n=2, hodge_pattern=(1, 5, 1))
    assert c.dim_bound == 7
    c = SearchConstraints(weight_n=2, hodge_pattern=(1, 5, 1), max_dim_v=3)
    assert c.dim_bound == 3


def test_caps_limit_search(fresh_caps):
    fresh_caps.set_active_caps(fresh_caps.Caps(max_rank=4))
    with pytest.raises(UsageError):
        enumerate_tuples(SearchConstraints(weight_n=2, hodge_pattern=(1, 3, 1), max_rank=5))


# canonical forms -------------------------------------------------------------------


@pytest.mark.parametrize("r", range(2, 7))
def test_flip_moves_grading_to_first_node(r):
    w1 = node(r, 1)
    wr = node(r, r)
    c = Fraction(-1, r + 1)
    flipped = canonicalize(tup(f"A{r}", [r], w1, c))
    assert flipped == canonicalize(tup(f"A{r}", [1], wr, c))
    assert flipped.factors[0].e == node(r, 1)


def test_triality_brings_spin_weight_to_first_node():
    canon = canonicalize(tup("D4", [4], node(4, 4)))
    assert canon.factors[0].mu == (1, 0, 0, 0)
    assert canon.factors[0].e == (1, 0, 0, 0)


def test_duality_pairs_share_canonical_form():
    t = tup("A4", [2], (1, 0, 0, 0), Fraction(2, 5))
    assert canonicalize(t) == canonicalize(t.dual())


def test_factor_order_is_irrelevant():
    a = AlgebraFactor(SimpleType.parse("A1"), (1,), (1,))
    b = AlgebraFactor(SimpleType.parse("B2"), (1, 0), (0, 1))
    assert canonicalize(HodgeTuple((a, b))) == canonicalize(HodgeTuple((b, a)))
    assert canonicalize(HodgeTuple((b, a))).factors[0] == a


def test_canonicalize_idempotent_examples():
    for t in [tup("E6", [6], node(6, 1)), tup("D5", [4], node(5, 5), Fraction(1, 4)), tup("A3", [1, 3], (1, 1, 0), 0)]:
        once = canonicalize(t)
        assert canonicalize(once) == once


# search ------------------------------------------------------------------------------


def test_period_domain_search_small():
    c = SearchConstraints(weight_n=2, hodge_pattern=(1, None, 1), require={"period-domain"}, max_rank=4, max_dim_v=20)
    found = [str(x.tuple) for x in enumerate_tuples(c)]
    assert "(B4; e=1,0,0,0; mu=1,0,0,0); c=0" in found
    assert all(x.descriptor.period_domain for x in enumerate_tuples(c))


def test_output_is_sorted_canonical_and_sound():
    c = SearchConstraints(weight_n=2, hodge_pattern=(2, None, 2), max_rank=4, max_factors=2, max_dim_v=64)
    results = enumerate_tuples(c)
    assert results
    ks = [tuple_key(x.tuple) for x in results]
    assert ks == sorted(ks) and len(set(ks)) == len(ks)
    for x in results:
        assert canonicalize(x.tuple) == x.tuple
        assert describe(x.tuple) == x.descriptor
        assert x.descriptor.hodge_numbers[0] == 2 and x.descriptor.level == 2


def test_monotone_in_rank_and_factors():
    base = dict(weight_n=2, hodge_pattern=(1, None, 1), max_dim_v=40)
    small = keys(enumerate_tuples(SearchConstraints(max_rank=3, max_factors=1, **base)))
    wider = keys(enumerate_tuples(SearchConstraints(max_rank=5, max_factors=1, **base)))
    more = keys(enumerate_tuples(SearchConstraints(max_rank=3, max_factors=2, **base)))
    assert small <= wider and small <= more
    assert small != wider and small != more


def test_directly_built_tuples_are_found():
    c = SearchConstraints(weight_n=3, hodge_pattern=(1, None, None, 1), require={"cy"}, max_rank=4, max_dim_v=40)
    found = keys(enumerate_tuples(c))
    for t in [tup("C3", [3], (0, 0, 1)), tup("A1", [1], (3,)), tup("B3", [1], (1, 0, 0), Fraction(1, 2))]:
        assert tuple_key(canonicalize(t)) in found


def test_require_nonzero_middle_drops_empty_middle():
    base = dict(weight_n=4, hodge_pattern=(1, None, None, None, 1), max_rank=1, max_dim_v=4)
    loose = enumerate_tuples(SearchConstraints(**base))
    strict = enumerate_tuples(SearchConstraints(require_nonzero_middle=True, **base))
    assert any(0 in x.descriptor.hodge_numbers for x in loose)
    assert all(all(x.descriptor.hodge_numbers) for x in strict)
    assert "(A1; e=1; mu=1); c=-3/2" in [str(x.tuple) for x in loose]


def test_min_factors():
    c = SearchConstraints(weight_n=2, hodge_pattern=(1, None, 1), max_rank=2, max_dim_v=8, min_factors=2, max_factors=2)
    assert all(len(x.tuple.factors) == 2 for x in enumerate_tuples(c))


def test_classify_tuple_notes():
    x = classify_tuple(tup("B2", [1], (0, 1)))
    assert any("sp(4)" in n for n in x.notes)
    assert x.descriptor.period_domain


# grading classification ---------------------------------------------------------------


def test_g2_has_no_hermitian_grading():
    assert not [g for g in classify_gradings("hermitian", 2) if g[0].family == "G"]
    assert (SimpleType("G", 2), (0, 1)) in classify_gradings("contact", 2)


def test_hermitian_rank_three():
    got = {(str(t), e) for t, e in classify_gradings("hermitian", 3)}
    assert got == {
        ("A1", (1,)),
        ("A2", (1, 0)), ("A2", (0, 1)),
        ("B2", (1, 0)),
        ("A3", (1, 0, 0)), ("A3", (0, 1, 0)), ("A3", (0, 0, 1)),
        ("B3", (1, 0, 0)),
        ("C3", (0, 0, 1)),
    }


def test_bad_kind():
    with pytest.raises(UsageError):
        classify_gradings("kaehler", 3)
