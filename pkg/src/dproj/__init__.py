"""Multigraded Proj: relevance, affine charts and torsor diagnostics for polynomial rings graded by finitely generated abelian groups."""
from .abelian_group import (
    INFINITE,
    AbelianGroup,
    GroupElement,
    GroupSchemeDecomposition,
    Subgroup,
    contains,
    group_scheme_decomposition,
    integrality_exponent,
    quotient_coordinates,
    subgroup_from_generators,
    subgroup_index,
)
from .errors import DomainError, DProjError, InvalidInputError, PreconditionError, ResourceLimitError
from .graded_ring import Cone, GradedRing, Monomial, Polynomial, is_effective, is_homogeneous, weight_cone
from .group_algebra import GroupAlgebraElement, ga_antipode, ga_comultiply, ga_counit, ga_multiply, is_group_like
from .localization import (
    DiophantineSystem,
    ReducedFraction,
    chart_dimension,
    degree_zero_generators,
    hilbert_basis,
    veronese_generators,
)
from .parsing import parse_expression, parse_monomial, parse_ring_spec, render_ring_spec
from .proj import Chart, ProjAtlas, build_atlas, dplus_charts, torsor_diagnostics
from .relevance import (
    in_irrelevant_ideal,
    is_relevant,
    is_relevant_polynomial,
    monomic_generators,
    relevance_report,
)
