"""Chart atlas of the multigraded Proj and per-chart quotient diagnostics."""
from __future__ import annotations

from dataclasses import dataclass

from .abelian_group import (
    GroupSchemeDecomposition,
    Subgroup,
    group_scheme_decomposition,
    subgroup_equals_ambient,
)
from .errors import DomainError, ResourceLimitError
from .graded_ring import GradedRing, Monomial
from .localization import (
    DEFAULT_STEP_BUDGET,
    ReducedFraction,
    degree_zero_solutions,
    dimension_from_solutions,
    fractions_from_solutions,
)
from .relevance import monomic_generators, relevance_report, require_effective


@dataclass(frozen=True)
class Chart:
    """One affine chart ``Spec(S_(f))``.

    ``gf_torsor`` and ``geometric_quotient`` hold for every relevant monomial
    of a polynomial ring over a field; ``pseudo_g_torsor`` needs ``D^f = D``.
    """

    f: Monomial
    generators: tuple[ReducedFraction, ...]
    support_group: Subgroup
    index: int
    strongly_relevant: bool
    pseudo_g_torsor: bool
    gf_torsor: bool
    geometric_quotient: bool
    dimension: int


@dataclass(frozen=True)
class ProjAtlas:
    ring: GradedRing
    charts: tuple[Chart, ...]
    duplicate_groups: tuple[tuple[int, ...], ...]
    is_trivial: bool
    group_report: GroupSchemeDecomposition


def torsor_diagnostics(ring: GradedRing, f: Monomial, max_steps: int = DEFAULT_STEP_BUDGET) -> Chart:
    report = relevance_report(ring, f)
    if not report.relevant:
        raise DomainError(
            f"{ring.format_monomial(f)} is not relevant: [D:D^f] is infinite and its weight cone "
            f"has dimension {report.cone.dim} < {ring.r}"
        )
    try:
        sols = degree_zero_solutions(ring, f, max_steps)
    except ResourceLimitError as exc:
        raise ResourceLimitError(f"chart {ring.format_monomial(f)}: {exc}") from exc
    gens = fractions_from_solutions(f, sols)
    dim = dimension_from_solutions(f, sols)
    assert dim == ring.n - ring.r, f"chart {ring.format_monomial(f)} has dimension {dim}, expected {ring.n - ring.r}"
    # S is an integral polynomial ring, so the torsor criterion reduces to D^f = D
    pseudo = subgroup_equals_ambient(report.support_group)
    return Chart(
        f=f,
        generators=tuple(gens),
        support_group=report.support_group,
        index=int(report.index),
        strongly_relevant=report.strongly_relevant,
        pseudo_g_torsor=pseudo,
        gf_torsor=True,
        geometric_quotient=True,
        dimension=dim,
    )


def build_atlas(ring: GradedRing, max_steps: int = DEFAULT_STEP_BUDGET) -> ProjAtlas:
    require_effective(ring)
    charts = tuple(torsor_diagnostics(ring, f, max_steps) for f in monomic_generators(ring))
    groups: dict[frozenset, list[int]] = {}
    for i, chart in enumerate(charts):
        groups.setdefault(frozenset(chart.generators), []).append(i)
    duplicates = tuple(tuple(idx) for idx in groups.values() if len(idx) > 1)
    trivial = len(charts) == 1 and charts[0].dimension == 0
    return ProjAtlas(ring, charts, duplicates, trivial, group_scheme_decomposition(ring.group))


def dplus_charts(ring: GradedRing, h: Monomial) -> list[Monomial]:
    """Monomic charts covering ``D+(h)``: those divisible by the squarefree part of ``h``."""
    sq = h.squarefree_part()
    return [f for f in monomic_generators(ring) if sq.divides(f)]
