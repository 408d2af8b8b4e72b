from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nilcone.partitions import (
    InadmissiblePartition,
    Partition,
    centralizer_dim_formula,
    classify,
    cor3_sides,
    dominance_leq,
    dual_partition,
    enumerate_partitions,
    iter_partitions,
    lemma3_sides,
    n_of,
)

P = Partition


def partitions(max_total=25):
    return st.lists(st.integers(1, 8), max_size=max_total // 2).map(
        lambda xs: Partition(sorted(xs, reverse=True))
    )


def test_partition_validation():
    with pytest.raises(ValueError):
        P((1, 2))
    with pytest.raises(ValueError):
        P((2, 0))
    assert P((3, 1)).total == 4 and len(P((3, 1))) == 2


@pytest.mark.parametrize(
    "mu, dual",
    [((2, 2, 1), (3, 2)), ((1, 1, 1, 1), (4,)), ((5,), (1, 1, 1, 1, 1)), ((), ())],
)
def test_dual_examples(mu, dual):
    assert dual_partition(P(mu)) == P(dual)


def test_n_of_examples():
    mu = P((2, 2, 1))
    assert n_of(mu, 2) == 1 and n_of(mu, 4) == 2
    assert n_of(P((1, 1, 1)), 3) == 3
    assert n_of(P((4,)), 4) == 1
    for j in (0, 6):
        with pytest.raises(ValueError):
            n_of(mu, j)


def test_classify_examples():
    assert classify(P((2, 2)))["symplectic"]
    assert classify(P((2, 2, 1)))["orthogonal"]
    assert not classify(P((3, 1)))["symplectic"]
    assert not classify(P((2, 1)))["orthogonal"]


def test_centralizer_formula_examples():
    assert centralizer_dim_formula(P((2, 2)), "sp") == 4
    assert centralizer_dim_formula(P((2, 2, 1)), "so") == 6
    assert centralizer_dim_formula(P((2,)), "sp") == 1
    assert centralizer_dim_formula(P((1, 1, 1)), "gl") == 9
    assert centralizer_dim_formula(P((3,)), "sl") == 2


def test_centralizer_formula_rejects_inadmissible():
    with pytest.raises(InadmissiblePartition):
        centralizer_dim_formula(P((3, 1)), "sp")
    with pytest.raises(InadmissiblePartition):
        centralizer_dim_formula(P((2, 1)), "so")


@pytest.mark.parametrize("mu, sides", [((1,), (1, 1)), ((2, 2, 1), (9, 9)), ((3,), (3, 3))])
def test_lemma3_examples(mu, sides):
    assert lemma3_sides(P(mu)) == sides


@pytest.mark.parametrize("mu, value", [((2, 2), 3), ((2,), 1), ((1, 1), 2)])
def test_cor3_examples(mu, value):
    assert cor3_sides(P(mu)) == (Fraction(value), Fraction(value))


def test_cor3_rejects_inadmissible():
    with pytest.raises(InadmissiblePartition):
        cor3_sides(P((3, 1)))


def test_dominance_examples():
    assert dominance_leq(P((1, 1)), P((2,)))
    assert dominance_leq(P((2, 2)), P((4,)))
    assert not dominance_leq(P((3, 1)), P((2, 2)))
    with pytest.raises(ValueError):
        dominance_leq(P((2,)), P((3,)))


def test_enumeration_examples():
    assert enumerate_partitions(4) == [P((4,)), P((3, 1)), P((2, 2)), P((2, 1, 1)), P((1, 1, 1, 1))]
    assert enumerate_partitions(4, "symplectic") == [P((4,)), P((2, 2)), P((2, 1, 1)), P((1, 1, 1, 1))]
    assert enumerate_partitions(0) == [P(())]


def test_enumeration_counts():
    # p(m) for m = 0..15
    counts = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176]
    for m, c in enumerate(counts):
        got = enumerate_partitions(m)
        assert len(got) == c
        assert len(set(got)) == c
        assert got == sorted(got, reverse=True)


def test_enumeration_size_forty():
    assert sum(1 for _ in iter_partitions(40)) == 37338


@settings(max_examples=300)
@given(partitions())
def test_dual_is_involution(mu):
    d = dual_partition(mu)
    assert d.total == mu.total
    assert dual_partition(d) == mu


@settings(max_examples=300)
@given(partitions())
def test_lemma3_property(mu):
    lhs, rhs = lemma3_sides(mu)
    assert lhs == rhs


@settings(max_examples=300)
@given(partitions().filter(lambda mu: mu.total > 0))
def test_n_of_last_index_is_length(mu):
    assert n_of(mu, mu.total) == len(mu)


@settings(max_examples=200)
@given(partitions())
def test_parse_roundtrip(mu):
    assert Partition.parse(str(mu)) == mu


@pytest.mark.parametrize("text", ["a", "2,,1", "1,2", "0", "-1", "2;1"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        Partition.parse(text)


def test_monotonicity_under_dominance():
    for m in range(1, 13):
        parts = enumerate_partitions(m)
        for mu in parts:
            for lam in parts:
                if dominance_leq(mu, lam):
                    assert all(n_of(mu, j) >= n_of(lam, j) for j in range(1, m + 1))
