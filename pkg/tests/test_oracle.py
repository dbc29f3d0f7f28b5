import pytest

from dproj.abelian_group import AbelianGroup
from dproj.errors import InvalidInputError
from dproj.localization import DiophantineSystem
from dproj.oracle import (
    UNKNOWN,
    SearchBudget,
    brute_contains,
    brute_degree_zero,
    brute_minimal_solutions,
    brute_order_counts,
    brute_relevance,
    brute_subgroup_index,
)

from helpers import load

DOUBLE = load("double_origin")


def test_brute_degree_zero_examples():
    xy = DOUBLE.monomial(x=1, y=1)
    assert ((0, 0, 1), 1) in brute_degree_zero(DOUBLE, xy, SearchBudget(exponent_bound=3))
    x = DOUBLE.monomial(x=1)
    assert brute_degree_zero(DOUBLE, x, SearchBudget(exponent_bound=3)) == [((k, 0, 0), k) for k in range(4)]
    assert brute_degree_zero(DOUBLE, xy, SearchBudget(exponent_bound=0)) == [((0, 0, 0), 0)]


def test_brute_subgroup_index_examples():
    Z2 = AbelianGroup(2)
    assert brute_subgroup_index(Z2, [Z2.element([1, 0]), Z2.element([1, 1])]) == 1
    D = AbelianGroup(1, (2,))
    assert brute_subgroup_index(D, [D.element([1, 0])]) == 2
    assert brute_subgroup_index(Z2, [Z2.element([1, 0])], SearchBudget(coset_bound=50)) is UNKNOWN
    assert brute_subgroup_index(AbelianGroup(0, (6,)), []) == 6


def test_brute_minimal_solutions_examples():
    b4 = SearchBudget(exponent_bound=4)
    assert brute_minimal_solutions(DiophantineSystem(2, ((1, -1),)), b4) == [(1, 1)]
    assert brute_minimal_solutions(DiophantineSystem(3, ((1, 1, -2),)), b4) == [(0, 2, 1), (1, 1, 1), (2, 0, 1)]
    assert brute_minimal_solutions(DiophantineSystem(1), SearchBudget(exponent_bound=2)) == [(1,)]


def test_brute_contains():
    Z2 = AbelianGroup(2)
    gens = [Z2.element([2, 0]), Z2.element([0, 1])]
    assert brute_contains(gens, Z2.element([4, 7]), 8)
    assert not brute_contains(gens, Z2.element([1, 0]), 8)
    assert brute_contains([], Z2.zero(), 1)


def test_brute_relevance():
    assert brute_relevance(DOUBLE, DOUBLE.monomial(x=1, y=1)) is True
    assert brute_relevance(DOUBLE, DOUBLE.monomial(x=2)) is False
    torsion = load("torsion")
    assert brute_relevance(torsion, torsion.monomial(y=1)) is False
    assert brute_relevance(torsion, torsion.monomial(x=1)) is True


def test_brute_order_counts():
    assert brute_order_counts([4, 6]) == brute_order_counts([2, 12])
    assert brute_order_counts([2, 2]) != brute_order_counts([4])


def test_budget_validation():
    with pytest.raises(InvalidInputError):
        SearchBudget(exponent_bound=-1)
    with pytest.raises(InvalidInputError):
        SearchBudget(coset_bound=0)
