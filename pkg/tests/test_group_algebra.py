import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dproj._linalg import rank
from dproj.abelian_group import AbelianGroup, canonicalize
from dproj.errors import InvalidInputError
from dproj.group_algebra import (
    GroupAlgebraElement,
    ga_antipode,
    ga_comultiply,
    ga_counit,
    ga_multiply,
    ga_unit,
    is_group_like,
    tensor_square,
)
from dproj.parsing import parse_group_algebra_element

chi = GroupAlgebraElement.chi
Z2 = AbelianGroup(2)
C2 = AbelianGroup(0, (2,))


def test_multiply_examples():
    d, e = Z2.element([1, 0]), Z2.element([0, 3])
    assert ga_multiply(chi(d), chi(e)) == chi(d + e)
    s = chi(d) + chi(e)
    assert s * ga_unit(Z2) == s
    one = C2.element([1])
    assert chi(one) * chi(one) == chi(C2.zero())


def test_comultiply_examples():
    d, e = Z2.element([1, 0]), Z2.element([0, 1])
    assert ga_comultiply(chi(d)) == {(d, d): 1}
    assert ga_comultiply(chi(d, 2)) == {(d, d): 2}
    assert ga_comultiply(chi(d) + chi(e)) == {(d, d): 1, (e, e): 1}


def test_group_like_examples():
    d, e = Z2.element([1, 0]), Z2.element([0, 1])
    assert is_group_like(chi(d))
    assert not is_group_like(chi(d, 2))
    assert not is_group_like(chi(d) + chi(e))
    assert not is_group_like(GroupAlgebraElement(Z2))


def test_group_mismatch():
    with pytest.raises(InvalidInputError):
        chi(Z2.element([1, 0])) * chi(C2.element([1]))


def test_rendering_round_trips():
    a = chi(Z2.element([1, 0]), Fraction(-1, 2)) + chi(Z2.element([0, 1]), 3) + chi(Z2.zero())
    assert parse_group_algebra_element(Z2, str(a)) == a


def elements(D, max_terms=4):
    coords = st.lists(st.integers(-3, 3), min_size=D.ngens, max_size=D.ngens).map(D.element)
    coeffs = st.fractions(min_value=-3, max_value=3, max_denominator=3)
    return st.dictionaries(coords, coeffs, max_size=max_terms).map(lambda m: GroupAlgebraElement(D, m))


GROUPS = [Z2, C2, AbelianGroup(1, (2,)), canonicalize(0, [2, 3])]


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(GROUPS).flatmap(elements))
def test_hopf_axioms(a):
    delta = ga_comultiply(a)
    # coassociativity: both sides send chi^d to chi^d (x) chi^d (x) chi^d
    left = {(d, e, e2): c for (d, e), c in delta.items() for e2 in [e]}
    right = {(d, d2, e): c for (d, e), c in delta.items() for d2 in [d]}
    assert left == right
    # counit law: (eps (x) id) Delta = id
    back = GroupAlgebraElement(a.group, {e: c * ga_counit(chi(d)) for (d, e), c in delta.items()})
    assert back == a
    for d in a.coefficients:
        assert chi(d) * ga_antipode(chi(d)) == ga_unit(a.group)
    assert is_group_like(a) == (not a.is_zero() and ga_comultiply(a) == tensor_square(a))


def test_group_like_exhaustive():
    for D in (AbelianGroup(0, (2,)), AbelianGroup(0, (3,)), AbelianGroup(1, (2,))):
        support = [D.element([a] + [b]) for a in range(-1, 2) for b in range(D.invariant_factors[0])] \
            if D.rank else [D.element([b]) for b in range(D.invariant_factors[0])]
        for k in range(1, 4):
            for ds in itertools.combinations(support, k):
                for cs in itertools.product((-1, 0, 1, 2), repeat=k):
                    a = GroupAlgebraElement(D, dict(zip(ds, cs)))
                    basis = len(a.coefficients) == 1 and list(a.coefficients.values()) == [1]
                    assert is_group_like(a) == basis
                    assert is_group_like(a) == (not a.is_zero() and ga_comultiply(a) == tensor_square(a))


def test_basis_elements_are_independent():
    D = AbelianGroup(1, (2,))
    basis = [D.element([a, b]) for a in range(-2, 3) for b in range(2)]
    vectors = [[int(d == e) for e in basis] for d in basis]
    assert rank(vectors) == len(basis)
