"""Polynomial rings ``Q[T_1..T_n]`` graded by a finitely generated abelian group."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from . import _linalg
from .abelian_group import (
    AbelianGroup,
    GroupElement,
    Subgroup,
    quotient_coordinates,
    subgroup_equals_ambient,
    subgroup_from_generators,
)
from .errors import InvalidInputError


@dataclass(frozen=True, order=False)
class Monomial:
    exponents: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exponents", tuple(int(e) for e in self.exponents))
        if any(e < 0 for e in self.exponents):
            raise InvalidInputError(f"negative exponent in {self.exponents}")

    @classmethod
    def unit(cls, n: int) -> Monomial:
        return cls((0,) * n)

    def __len__(self):
        return len(self.exponents)

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents, strict=True)))

    def divides(self, other: Monomial) -> bool:
        return all(a <= b for a, b in zip(self.exponents, other.exponents, strict=True))

    def __truediv__(self, other: Monomial) -> Monomial:
        if not other.divides(self):
            raise InvalidInputError("monomial division is not exact")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(i for i, e in enumerate(self.exponents) if e)

    @property
    def total_degree(self) -> int:
        return sum(self.exponents)

    def is_unit(self) -> bool:
        return not any(self.exponents)

    def squarefree_part(self) -> Monomial:
        return Monomial(tuple(int(e > 0) for e in self.exponents))

    def gcd(self, other: Monomial) -> Monomial:
        return Monomial(tuple(map(min, self.exponents, other.exponents)))


def grlex_key(m: Monomial):
    """Sort key: lower total degree first, then lexicographically descending."""
    return (m.total_degree, tuple(-e for e in m.exponents))


class Polynomial:
    """Finitely supported map from monomials to nonzero rationals."""

    __slots__ = ("_terms", "nvars")

    def __init__(self, terms: Mapping[Monomial, object] | Iterable = (), nvars: int | None = None):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Fraction] = {}
        for m, c in items:
            acc[m] = acc.get(m, Fraction(0)) + Fraction(c)
        self._terms = {m: c for m, c in acc.items() if c != 0}
        lengths = {len(m) for m in self._terms}
        if nvars is None:
            if len(lengths) != 1:
                raise InvalidInputError("cannot infer the number of variables")
            nvars = lengths.pop()
        elif lengths - {nvars}:
            raise InvalidInputError("monomial lengths do not match the ring")
        self.nvars = nvars

    @classmethod
    def from_monomial(cls, m: Monomial, coeff=1) -> Polynomial:
        return cls({m: coeff}, len(m))

    @classmethod
    def constant(cls, c, nvars: int) -> Polynomial:
        return cls({Monomial.unit(nvars): c}, nvars)

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in display order: graded lexicographic, leading term first."""
        return sorted(self._terms.items(), key=lambda t: (-t[0].total_degree, tuple(-e for e in t[0].exponents)))

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self._terms.items())))

    def __add__(self, other: Polynomial) -> Polynomial:
        return Polynomial(list(self._terms.items()) + list(other._terms.items()), self.nvars)

    def __neg__(self) -> Polynomial:
        return Polynomial({m: -c for m, c in self._terms.items()}, self.nvars)

    def __sub__(self, other: Polynomial) -> Polynomial:
        return self + (-other)

    def __mul__(self, other: Polynomial) -> Polynomial:
        return Polynomial(
            [(m1 * m2, c1 * c2) for m1, c1 in self._terms.items() for m2, c2 in other._terms.items()],
            self.nvars,
        )

    def __pow__(self, k: int) -> Polynomial:
        out = Polynomial.constant(1, self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def __repr__(self):
        return f"Polynomial({self.sorted_terms()!r})"


@dataclass(frozen=True)
class Cone:
    """Rational polyhedral cone in ``Q^r`` given by generators."""

    ambient_dim: int
    generators: tuple[tuple[Fraction, ...], ...]

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors: Iterable[Sequence]) -> Cone:
        gens = []
        for v in vectors:
            v = tuple(Fraction(a) for a in v)
            if any(v) and v not in gens:
                gens.append(v)
        return cls(ambient_dim, tuple(gens))

    @cached_property
    def dim(self) -> int:
        return _linalg.rank(self.generators)

    def is_full_dimensional(self) -> bool:
        return self.dim == self.ambient_dim

    def contains(self, point: Sequence) -> bool:
        """Membership by exact LP: ``point = sum(mu_i * g_i)``, ``mu >= 0``."""
        A = [[g[i] for g in self.generators] for i in range(self.ambient_dim)]
        if not self.generators:
            return not any(point)
        return _linalg.lp_feasible(A, list(point))

    def interior_contains(self, point: Sequence) -> bool:
        """Whether ``point`` lies in the topological interior of the cone in ``R^r``.

        Checked without any rank computation: ``p`` is interior iff for every
        coordinate direction ``+-e_j`` some ``t*p +- e_j`` lies in the cone,
        i.e. the LP ``sum(mu_i g_i) - t p = +-e_j`` with ``mu, t >= 0`` is
        feasible.  Convexity then puts a small cross-polytope around ``p``
        inside the cone.
        """
        r = self.ambient_dim
        p = [Fraction(a) for a in point]
        for j in range(r):
            for sign in (1, -1):
                A = [[g[i] for g in self.generators] + [-p[i]] for i in range(r)]
                rhs = [sign * int(i == j) for i in range(r)]
                if not _linalg.lp_feasible(A, rhs):
                    return False
        return True


@dataclass(frozen=True)
class GradedRing:
    group: AbelianGroup
    var_names: tuple[str, ...]
    degrees: tuple[GroupElement, ...]

    def __post_init__(self):
        object.__setattr__(self, "var_names", tuple(self.var_names))
        object.__setattr__(self, "degrees", tuple(self.degrees))
        if not self.var_names:
            raise InvalidInputError("a graded ring needs at least one variable")
        if len(set(self.var_names)) != len(self.var_names):
            dup = sorted({v for v in self.var_names if self.var_names.count(v) > 1})
            raise InvalidInputError(f"duplicate variable names: {', '.join(dup)}")
        for name in self.var_names:
            if not name.isidentifier():
                raise InvalidInputError(f"{name!r} is not a valid variable name")
        if len(self.degrees) != len(self.var_names):
            raise InvalidInputError("need exactly one degree per variable")
        for name, d in zip(self.var_names, self.degrees):
            if not isinstance(d, GroupElement) or d.group != self.group:
                raise InvalidInputError(f"degree of {name} is not an element of {self.group}")

    @classmethod
    def build(cls, rank: int, torsion: Sequence[int], variables: Mapping[str, Sequence[int]]) -> GradedRing:
        """Convenience constructor from raw coordinate vectors (torsion already canonical)."""
        D = AbelianGroup(rank, tuple(torsion))
        return cls(D, tuple(variables), tuple(D.element(v) for v in variables.values()))

    @property
    def n(self) -> int:
        return len(self.var_names)

    @property
    def r(self) -> int:
        return self.group.rank

    def monomial(self, **exponents: int) -> Monomial:
        unknown = set(exponents) - set(self.var_names)
        if unknown:
            raise InvalidInputError(f"unknown variables: {sorted(unknown)}")
        return Monomial(tuple(exponents.get(v, 0) for v in self.var_names))

    def variable(self, i: int) -> Monomial:
        return Monomial(tuple(int(j == i) for j in range(self.n)))

    @cached_property
    def degree_subgroup(self) -> Subgroup:
        return subgroup_from_generators(self.group, self.degrees)

    @cached_property
    def effective(self) -> bool:
        return subgroup_equals_ambient(self.degree_subgroup)

    def format_monomial(self, m: Monomial) -> str:
        factors = [
            name if e == 1 else f"{name}^{e}"
            for name, e in zip(self.var_names, m.exponents)
            if e
        ]
        return "*".join(factors) if factors else "1"

    def format_polynomial(self, p: Polynomial) -> str:
        if p.is_zero():
            return "0"
        out = []
        for m, c in p.sorted_terms():
            sign = "-" if c < 0 else "+"
            c = abs(c)
            if m.is_unit():
                body = str(c)
            elif c == 1:
                body = self.format_monomial(m)
            else:
                body = f"{c}*{self.format_monomial(m)}"
            out.append((sign, body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text


def degree_of_monomial(ring: GradedRing, m: Monomial) -> GroupElement:
    if len(m) != ring.n:
        raise InvalidInputError(f"monomial has {len(m)} exponents, ring has {ring.n} variables")
    coords = [0] * ring.group.ngens
    for e, d in zip(m.exponents, ring.degrees):
        if e:
            coords = [a + e * b for a, b in zip(coords, d.lift())]
    return ring.group.element(coords)


def homogeneous_components(ring: GradedRing, p: Polynomial) -> dict[GroupElement, Polynomial]:
    buckets: dict[GroupElement, dict[Monomial, Fraction]] = {}
    for m, c in p.sorted_terms():
        buckets.setdefault(degree_of_monomial(ring, m), {})[m] = c
    return {d: Polynomial(terms, ring.n) for d, terms in buckets.items()}


def is_homogeneous(ring: GradedRing, p: Polynomial) -> bool:
    return len(homogeneous_components(ring, p)) <= 1


def is_effective(ring: GradedRing) -> tuple[bool, GradedRing]:
    """Effectiveness flag and the ring re-graded by the subgroup its degrees generate.

    The new coordinates come from a Smith normal form of that subgroup; each
    free coordinate is sign-normalised so its first nonzero degree entry is
    positive.
    """
    if ring.effective:
        return True, ring
    G, to_G = quotient_coordinates(ring.group, ring.degree_subgroup)
    coords = [list(to_G(d).lift()) for d in ring.degrees]
    for j in range(G.rank):
        first = next((c[j] for c in coords if c[j]), 0)
        if first < 0:
            for c in coords:
                c[j] = -c[j]
    new = GradedRing(G, ring.var_names, tuple(G.element(c) for c in coords))
    return False, new


def weight_cone(ring: GradedRing) -> Cone:
    return Cone.from_vectors(ring.r, (d.free for d in ring.degrees))
