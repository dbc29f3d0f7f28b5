"""Relevant elements and the monomic generators of the irrelevant ideal."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import _linalg
from .abelian_group import (
    INFINITE,
    GroupElement,
    Subgroup,
    subgroup_from_generators,
    subgroup_index,
)
from .errors import InvalidInputError, PreconditionError
from .graded_ring import (
    Cone,
    GradedRing,
    Monomial,
    Polynomial,
    degree_of_monomial,
    grlex_key,
    homogeneous_components,
)


def require_effective(ring: GradedRing):
    if not ring.effective:
        raise PreconditionError(
            f"the grading by {ring.group} is not effective (degrees generate a proper subgroup); "
            "re-grade with is_effective(ring)[1] or pass --effectivize"
        )


def _check_monomial(ring: GradedRing, m: Monomial):
    if len(m) != ring.n:
        raise InvalidInputError(f"monomial has {len(m)} exponents, ring has {ring.n} variables")


@dataclass(frozen=True)
class RelevanceReport:
    monomial: Monomial
    support_degrees: tuple[GroupElement, ...]
    support_group: Subgroup
    index: int | float
    cone: Cone
    cone_full_dim: bool
    deg_in_interior: bool
    relevant: bool
    strongly_relevant: bool


def support_group(ring: GradedRing, m: Monomial) -> Subgroup:
    """``D^f`` for a monomial: generated by the degrees of the variables dividing it."""
    _check_monomial(ring, m)
    return subgroup_from_generators(ring.group, [ring.degrees[i] for i in m.support])


def relevance_report(ring: GradedRing, m: Monomial) -> RelevanceReport:
    """Evaluate the finite-index, full-cone and interior-degree criteria separately.

    Raises ``AssertionError`` if they disagree, which would indicate a bug.
    """
    require_effective(ring)
    _check_monomial(ring, m)
    degs = tuple(ring.degrees[i] for i in m.support)
    H = support_group(ring, m)
    index = subgroup_index(ring.group, H)
    cone = Cone.from_vectors(ring.r, (d.free for d in degs))
    full = cone.is_full_dimensional()
    interior = cone.interior_contains(degree_of_monomial(ring, m).free)
    finite = index != INFINITE
    assert finite == full == interior, (
        f"relevance criteria disagree for {ring.format_monomial(m)}: "
        f"finite index {finite}, full cone {full}, interior degree {interior}"
    )
    return RelevanceReport(
        monomial=m,
        support_degrees=degs,
        support_group=H,
        index=index,
        cone=cone,
        cone_full_dim=full,
        deg_in_interior=interior,
        relevant=finite,
        strongly_relevant=index == 1,
    )


def is_relevant(ring: GradedRing, m: Monomial) -> bool:
    return relevance_report(ring, m).relevant


def support_rank(ring: GradedRing, m: Monomial) -> int:
    return _linalg.rank([ring.degrees[i].free for i in m.support])


def is_relevant_polynomial(ring: GradedRing, p: Polynomial) -> bool:
    """Relevance of a homogeneous polynomial via its terms.

    In a polynomial ring (rank ``r < n``, ``1`` not relevant) a homogeneous
    element is relevant iff every term has a factorization of length ``>= r``,
    i.e. the degrees of its support variables have rank ``r``.
    """
    require_effective(ring)
    if p.nvars != ring.n:
        raise InvalidInputError("polynomial does not belong to this ring")
    comps = homogeneous_components(ring, p)
    if not comps:
        raise InvalidInputError("the zero polynomial is not homogeneous of any degree")
    if len(comps) > 1:
        degs = ", ".join(str(d) for d in comps)
        raise InvalidInputError(f"polynomial is not homogeneous; it has components in degrees {degs}")
    r = ring.r
    if r == 0:
        # finite grading group: every nonzero homogeneous element is relevant
        return True
    if r >= ring.n:
        if len(p) != 1:
            raise PreconditionError("term criterion needs rank < number of variables")
        (m,) = p.terms
        return is_relevant(ring, m)
    return all(support_rank(ring, m) == r for m in p.terms)


def monomic_generators(ring: GradedRing) -> list[Monomial]:
    """Squarefree products of ``r`` variables whose degrees have rank ``r``, grlex sorted."""
    require_effective(ring)
    r = ring.r
    if r == 0:
        return [Monomial.unit(ring.n)]
    gens = []
    for subset in combinations(range(ring.n), r):
        if _linalg.rank([ring.degrees[i].free for i in subset]) == r:
            gens.append(Monomial(tuple(int(i in subset) for i in range(ring.n))))
    return sorted(gens, key=grlex_key)


def in_irrelevant_ideal(ring: GradedRing, m: Monomial) -> bool:
    _check_monomial(ring, m)
    return any(g.divides(m) for g in monomic_generators(ring))
