from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from zagreb.graph import GraphError, build_graph, complete, complete_bipartite, cycle, disjoint_union, star
from zagreb.intervals import (
    IntervalSpec,
    StructureCase,
    classify_equality_structure,
    find_harmonic_collisions,
    find_product_collisions,
    harmonic_discriminant,
    is_good_interval,
    predicted_harmonic_collisions,
    predicted_product_collisions,
    product_sum_order_violations,
    scan_f_sign,
    threshold,
)
from zagreb.invariants import Verdict, compare, f


def brute_collisions(a, p, same):
    """Reference scan over every ordered pair of pairs, no grouping tricks."""
    pairs = [(x, y) for x in range(a, a + p + 1) for y in range(x, a + p + 1)]
    return sorted((x, y, u, v) for (x, y), (u, v) in product(pairs, pairs) if (x, y) < (u, v) and same(x, y, u, v))


def brute_f_witness(s):
    s = sorted(set(s))
    pairs = [(i, j) for i in s for j in s if i <= j]
    quads = sorted((i, j, k, l) for (i, j), (k, l) in product(pairs, pairs) if f(i, j, k, l) < 0)
    return quads[0] if quads else None


def test_goodness_examples():
    assert is_good_interval(3, 3)
    assert is_good_interval(1, 3)
    assert not is_good_interval(2, 3)
    assert is_good_interval(1, 0) and is_good_interval(1, 2)
    assert not is_good_interval(1, 4)
    with pytest.raises(ValueError):
        is_good_interval(0, 2)


def test_interval_spec():
    iv = IntervalSpec(3, 3)
    assert iv.hi == 6 and 4 in iv and 7 not in iv and str(iv) == "[3,6]"
    with pytest.raises(ValueError):
        IntervalSpec(0, 1)


def test_f_sign_examples():
    assert scan_f_sign({3, 4, 5, 6}) is None
    assert scan_f_sign({2, 3, 5}) == (2, 5, 3, 3)
    assert f(2, 5, 3, 3) == Fraction(-1, 30)
    assert scan_f_sign({7}) is None


@given(st.sets(st.integers(1, 12), min_size=1, max_size=6))
def test_f_sign_matches_brute_force(s):
    assert scan_f_sign(s) == brute_f_witness(s)


def test_product_examples():
    assert not find_product_collisions(3, 3)
    assert find_product_collisions(1, 3).tuples == ((1, 4, 2, 2),)
    assert (1, 6, 2, 3) in find_product_collisions(1, 5).tuples


def test_harmonic_examples():
    assert harmonic_discriminant(3, 6, 4, 4) == 0
    assert harmonic_discriminant(2, 5, 3, 3) == -3
    assert harmonic_discriminant(4, 9, 4, 9) == 0
    assert find_harmonic_collisions(3, 3).tuples == ((3, 6, 4, 4),)
    assert find_harmonic_collisions(10, 5).tuples == ((10, 15, 12, 12),)
    assert not find_harmonic_collisions(6, 4)
    assert not find_harmonic_collisions(4, 3)


@given(st.integers(1, 25), st.integers(0, 10))
def test_collisions_match_brute_force(a, p):
    assert list(find_product_collisions(a, p).tuples) == brute_collisions(a, p, lambda x, y, u, v: x * y == u * v)
    assert list(find_harmonic_collisions(a, p).tuples) == brute_collisions(
        a, p, lambda x, y, u, v: harmonic_discriminant(x, y, u, v) == 0)


@pytest.mark.parametrize("p", range(0, 16))
def test_predictions_hold_near_threshold(p):
    for a in range(max(1, threshold(p)), threshold(p) + 8):
        assert find_product_collisions(a, p).tuples == predicted_product_collisions(a, p)
        assert find_harmonic_collisions(a, p).tuples == predicted_harmonic_collisions(a, p)


def test_predictions_silent_on_bad_intervals():
    assert predicted_product_collisions(2, 3) is None
    assert predicted_harmonic_collisions(2, 3) is None


@pytest.mark.parametrize("p", range(1, 16))
def test_product_sum_order(p):
    assert product_sum_order_violations(p) == []


@pytest.mark.parametrize("a,p", [(1, 3), (3, 3), (6, 4), (10, 5), (4, 2), (1, 1)])
def test_f_zero_census(a, p):
    """Distinct-pair zeros of f inside a good interval are exactly the collision tuples."""
    pairs = [(x, y) for x in range(a, a + p + 1) for y in range(x, a + p + 1)]
    zeros = sorted((*s, *t) for s, t in product(pairs, pairs) if s < t and f(*s, *t) == 0)
    expected = sorted(find_product_collisions(a, p).tuples + find_harmonic_collisions(a, p).tuples)
    assert zeros == expected


def test_structure_examples():
    mixed = disjoint_union(complete(5), complete_bipartite(3, 6))
    assert classify_equality_structure(mixed, IntervalSpec(3, 3)).verdict is StructureCase.MIXED_REGULAR_BIREGULAR

    sc = disjoint_union(star(4), cycle(7))
    rep = compare(sc)
    assert (rep.m1, rep.n, rep.m2, rep.m) == (48, 12, 44, 11)
    assert rep.ratio1 == rep.ratio2 == 4
    assert classify_equality_structure(sc, IntervalSpec(1, 3)).verdict is StructureCase.STARS_AND_CYCLES

    assert classify_equality_structure(cycle(5), IntervalSpec(1, 3)).verdict is StructureCase.REGULAR
    k34 = complete_bipartite(3, 4)
    assert classify_equality_structure(k34, IntervalSpec(3, 1)).verdict is StructureCase.BIREGULAR_CLASS1

    # connected, three degrees inside [3,6]: never equality
    g = build_graph(7, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4), (4, 5), (5, 6), (6, 4), (1, 5), (2, 6), (0, 5)])
    assert len(set(g.degrees())) >= 3
    st_ = classify_equality_structure(g, IntervalSpec(3, 3))
    assert st_.verdict is StructureCase.NOT_EQUALITY
    assert compare(g).verdict is Verdict.STRICTLY_LESS


def test_structure_preconditions():
    with pytest.raises(GraphError):
        classify_equality_structure(cycle(5), IntervalSpec(2, 3))
    with pytest.raises(GraphError):
        classify_equality_structure(star(5), IntervalSpec(1, 3))
    with pytest.raises(GraphError):
        classify_equality_structure(build_graph(3, [(0, 1)]), IntervalSpec(1, 3))
