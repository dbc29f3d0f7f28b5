import random
from math import comb

import pytest
from hypothesis import given, settings, strategies as st

from dproj.abelian_group import INFINITE, contains
from dproj.errors import InvalidInputError, PreconditionError
from dproj.graded_ring import Monomial
from dproj.oracle import SearchBudget, brute_relevance
from dproj.parsing import parse_expression
from dproj.relevance import (
    in_irrelevant_ideal,
    is_relevant,
    is_relevant_polynomial,
    monomic_generators,
    relevance_report,
    support_group,
    support_rank,
)

from helpers import load, random_monomial, random_ring, ring

DOUBLE = load("double_origin")
TORSION = load("torsion")


def names(R, ms):
    return [R.format_monomial(m) for m in ms]


def test_support_group_examples():
    D = DOUBLE.group
    assert support_group(DOUBLE, DOUBLE.monomial(x=1, y=1)).lattice == ((1, 0), (0, 1))
    assert support_group(DOUBLE, DOUBLE.monomial(x=1)).lattice == ((1, 0),)
    assert support_group(DOUBLE, DOUBLE.monomial(x=1, z=1)).lattice == ((1, 0), (0, 1))
    assert support_group(DOUBLE, Monomial.unit(3)).lattice == ()
    assert contains(support_group(DOUBLE, DOUBLE.monomial(x=1)), D.element([3, 0]))


def test_relevance_report_examples():
    rep = relevance_report(DOUBLE, DOUBLE.monomial(x=1, y=1))
    assert rep.relevant and rep.index == 1 and rep.strongly_relevant
    rep = relevance_report(DOUBLE, DOUBLE.monomial(x=1))
    assert not rep.relevant and rep.cone.dim == 1 and rep.index == INFINITE
    rep = relevance_report(TORSION, TORSION.monomial(y=1))
    assert not rep.relevant and rep.index == INFINITE
    rep = relevance_report(TORSION, TORSION.monomial(x=1))
    assert rep.relevant and rep.index == 2 and not rep.strongly_relevant


def test_non_effective_ring_is_rejected():
    R = ring(2, [], [(1, 0), (1, 0)], ["x", "y"])
    with pytest.raises(PreconditionError, match="effectivize"):
        relevance_report(R, R.monomial(x=1))
    with pytest.raises(PreconditionError):
        monomic_generators(R)


def test_is_relevant_polynomial_examples():
    assert is_relevant_polynomial(DOUBLE, parse_expression(DOUBLE, "x*(x*y + z)"))
    assert not is_relevant_polynomial(DOUBLE, parse_expression(DOUBLE, "x*y + z"))
    assert is_relevant_polynomial(DOUBLE, parse_expression(DOUBLE, "x*y"))
    with pytest.raises(InvalidInputError, match=r"\(1,0\)"):
        is_relevant_polynomial(DOUBLE, parse_expression(DOUBLE, "x + y"))


def test_monomic_generators_examples():
    assert names(DOUBLE, monomic_generators(DOUBLE)) == ["x*y", "x*z", "y*z"]
    four = load("four_var")
    assert set(names(four, monomic_generators(four))) == {"x*w", "y*w", "z*w", "x*z", "y*z"}
    assert names(TORSION, monomic_generators(TORSION)) == ["x", "z"]
    for n in range(1, 5):
        P = ring(1, [], [(1,)] * (n + 1))
        assert names(P, monomic_generators(P)) == [f"x{i}" for i in range(n + 1)]


def test_finite_grading_has_unit_generator():
    R = ring(0, [3], [(1,), (2,)])
    assert monomic_generators(R) == [Monomial.unit(2)]
    assert in_irrelevant_ideal(R, Monomial.unit(2))


def test_in_irrelevant_ideal_examples():
    assert in_irrelevant_ideal(DOUBLE, DOUBLE.monomial(x=2, y=1, z=1))
    assert not in_irrelevant_ideal(DOUBLE, DOUBLE.monomial(x=3))
    assert not in_irrelevant_ideal(DOUBLE, Monomial.unit(3))


def random_pairs(seed, count):
    rng = random.Random(seed)
    for _ in range(count):
        R = random_ring(rng)
        yield R, random_monomial(rng, R.n, 3), random_monomial(rng, R.n, 3)


def test_criteria_agree_on_random_rings():
    # relevance_report asserts internally that the three criteria agree
    for R, f, _ in random_pairs(11, 200):
        rep = relevance_report(R, f)
        assert rep.relevant == (support_rank(R, f) == R.r)
        assert not rep.strongly_relevant or rep.relevant


def test_closure_and_monotonicity():
    for R, f, h in random_pairs(12, 150):
        if not is_relevant(R, f):
            continue
        assert is_relevant(R, f * h)
        big = support_group(R, f * h)
        assert all(contains(big, d) for d in relevance_report(R, f).support_degrees)
        for g in monomic_generators(R):
            assert is_relevant(R, f * g)


def test_generator_count_and_relevance():
    rng = random.Random(13)
    for _ in range(100):
        R = random_ring(rng)
        gens = monomic_generators(R)
        assert len(gens) <= comb(R.n, R.r)
        assert all(relevance_report(R, g).relevant for g in gens)
        m = random_monomial(rng, R.n, 3)
        if not in_irrelevant_ideal(R, m):
            assert not is_relevant(R, m)


def test_oracle_agreement():
    budget = SearchBudget(exponent_bound=4, step_bound=200_000)
    checked = 0
    for R, f, _ in random_pairs(14, 100):
        verdict = brute_relevance(R, f, budget)
        if verdict is not None:
            checked += 1
            assert verdict == is_relevant(R, f)
    assert checked >= 80
