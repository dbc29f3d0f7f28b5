"""Finitely generated abelian groups ``Z^r + Z/n_1 + ... + Z/n_t``.

Every subgroup question is answered on the lifted lattice in ``Z^(r+t)``:
a subgroup ``H`` is represented by the lattice spanned by lifts of its
generators together with the relation rows ``n_j * e_(r+j)``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Iterable, Sequence

from . import _linalg
from .errors import InvalidInputError

INFINITE = math.inf


@dataclass(frozen=True)
class AbelianGroup:
    rank: int
    invariant_factors: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "invariant_factors", tuple(int(n) for n in self.invariant_factors))
        if self.rank < 0:
            raise InvalidInputError(f"rank must be non-negative, got {self.rank}")
        for n in self.invariant_factors:
            if n < 2:
                raise InvalidInputError(f"invariant factors must be >= 2, got {n}")
        for a, b in zip(self.invariant_factors, self.invariant_factors[1:]):
            if b % a:
                raise InvalidInputError(
                    f"invariant factors {list(self.invariant_factors)} are not a divisibility chain; "
                    "use canonicalize()"
                )

    @property
    def ngens(self) -> int:
        """Number of coordinates of the lift, ``r + t``."""
        return self.rank + len(self.invariant_factors)

    @property
    def torsion_order(self) -> int:
        return math.prod(self.invariant_factors)

    @property
    def is_finite(self) -> bool:
        return self.rank == 0

    def element(self, coords: Sequence[int]) -> GroupElement:
        """Element from a flat coordinate vector (free part, then torsion)."""
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.ngens:
            raise InvalidInputError(
                f"element needs {self.ngens} coordinates for {self}, got {len(coords)}"
            )
        return GroupElement(self, coords[: self.rank], coords[self.rank:])

    def zero(self) -> GroupElement:
        return self.element([0] * self.ngens)

    def basis(self) -> list[GroupElement]:
        """The standard generators ``e_1, ..., e_(r+t)``."""
        return [self.element([int(i == j) for j in range(self.ngens)]) for i in range(self.ngens)]

    @cached_property
    def relation_rows(self) -> tuple[tuple[int, ...], ...]:
        r = self.rank
        return tuple(
            tuple(n if j == r + i else 0 for j in range(self.ngens))
            for i, n in enumerate(self.invariant_factors)
        )

    def __str__(self):
        parts = []
        if self.rank:
            parts.append("Z" if self.rank == 1 else f"Z^{self.rank}")
        parts += [f"Z/{n}" for n in self.invariant_factors]
        return " x ".join(parts) if parts else "0"


@dataclass(frozen=True)
class GroupElement:
    group: AbelianGroup = field(repr=False)
    free: tuple[int, ...]
    torsion: tuple[int, ...]

    def __post_init__(self):
        g = self.group
        if len(self.free) != g.rank or len(self.torsion) != len(g.invariant_factors):
            raise InvalidInputError(f"coordinate lengths do not match {g}")
        object.__setattr__(self, "free", tuple(int(a) for a in self.free))
        object.__setattr__(
            self, "torsion", tuple(int(a) % n for a, n in zip(self.torsion, g.invariant_factors))
        )

    def lift(self) -> tuple[int, ...]:
        return self.free + self.torsion

    def _check(self, other: GroupElement):
        if not isinstance(other, GroupElement) or other.group != self.group:
            raise InvalidInputError("elements belong to different groups")

    def __add__(self, other: GroupElement) -> GroupElement:
        self._check(other)
        return self.group.element([a + b for a, b in zip(self.lift(), other.lift())])

    def __sub__(self, other: GroupElement) -> GroupElement:
        self._check(other)
        return self.group.element([a - b for a, b in zip(self.lift(), other.lift())])

    def __neg__(self) -> GroupElement:
        return self.group.element([-a for a in self.lift()])

    def __mul__(self, k: int) -> GroupElement:
        return self.group.element([k * a for a in self.lift()])

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.lift())

    def __str__(self):
        free = ",".join(map(str, self.free))
        if not self.torsion:
            return f"({free})"
        return f"({free};{','.join(map(str, self.torsion))})"


@dataclass(frozen=True)
class Subgroup:
    ambient: AbelianGroup
    lattice: tuple[tuple[int, ...], ...]
    generators: tuple[GroupElement, ...] = field(default=(), compare=False, repr=False)

    @cached_property
    def _smith(self):
        k = len(self.lattice)
        s, _, Q = _linalg.smith(self.lattice, k, self.ambient.ngens)
        return s, Q

    def smith_coordinates(self, v: Sequence[int]) -> list[int]:
        """Coordinates ``v @ Q`` in which membership reads off the invariant factors."""
        _, Q = self._smith
        return [sum(a * q for a, q in zip(v, col)) for col in zip(*Q)] if Q else []

    @property
    def smith_factors(self) -> list[int]:
        return self._smith[0]

    def __str__(self):
        elems = [self.ambient.element(r) for r in self.lattice]
        gens = ", ".join(str(e) for e in elems if not e.is_zero()) or "0"
        return f"<{gens}> in {self.ambient}"


def _torsion_snf(orders: Sequence[int]):
    t = len(orders)
    diag = [[orders[i] if i == j else 0 for j in range(t)] for i in range(t)]
    s, _, Q = _linalg.smith(diag, t, t)
    return s, Q


def canonicalize(rank: int, torsion_orders: Sequence[int]) -> AbelianGroup:
    """Return the isomorphic group whose torsion orders form a divisibility chain."""
    return canonical_coordinates(rank, torsion_orders)[0]


def canonical_coordinates(rank: int, torsion_orders: Sequence[int]):
    """Canonical group plus a map taking raw coordinate vectors to its elements."""
    for n in torsion_orders:
        if int(n) <= 1:
            raise InvalidInputError(f"torsion orders must be >= 2, got {n}")
    orders = [int(n) for n in torsion_orders]
    s, Q = _torsion_snf(orders)
    keep = [i for i, f in enumerate(s) if f > 1]
    group = AbelianGroup(rank, tuple(s[i] for i in keep))

    def convert(coords: Sequence[int]) -> GroupElement:
        coords = [int(c) for c in coords]
        if len(coords) != rank + len(orders):
            raise InvalidInputError(
                f"degree vector needs {rank + len(orders)} entries, got {len(coords)}"
            )
        tors = coords[rank:]
        w = [sum(a * q for a, q in zip(tors, col)) for col in zip(*Q)] if Q else []
        return group.element(coords[:rank] + [w[i] for i in keep])

    return group, convert


def _check_elements(D: AbelianGroup, elems: Iterable[GroupElement]):
    for d in elems:
        if not isinstance(d, GroupElement) or d.group != D:
            raise InvalidInputError(f"{d} is not an element of {D}")


def subgroup_from_generators(D: AbelianGroup, gens: Sequence[GroupElement]) -> Subgroup:
    _check_elements(D, gens)
    rows = [d.lift() for d in gens] + list(D.relation_rows)
    return Subgroup(D, _linalg.hnf(rows, D.ngens), tuple(gens))


def subgroup_index(D: AbelianGroup, H: Subgroup) -> int | float:
    """``[D:H]``, or ``INFINITE``; equals ``[Z^(r+t) : L]`` for the lifted lattice."""
    if H.ambient != D:
        raise InvalidInputError("subgroup lives in a different group")
    if len(H.lattice) < D.ngens:
        return INFINITE
    return math.prod(row[_linalg.pivot(row)] for row in H.lattice)


def contains(H: Subgroup, d: GroupElement) -> bool:
    _check_elements(H.ambient, [d])
    rem, _ = _linalg.reduce_by_hnf(d.lift(), H.lattice)
    return not any(rem)


def subgroup_equals_ambient(H: Subgroup) -> bool:
    return subgroup_index(H.ambient, H) == 1


def integrality_exponent(D: AbelianGroup, H: Subgroup, d: GroupElement) -> int | float:
    """Smallest ``N >= 1`` with ``N*d`` in ``H`` (the order of ``d`` in ``D/H``)."""
    _check_elements(D, [d])
    w = H.smith_coordinates(d.lift())
    s = H.smith_factors
    if any(w[len(s):]):
        return INFINITE
    return reduce(math.lcm, (f // math.gcd(f, a) for f, a in zip(s, w)), 1)


@dataclass(frozen=True)
class GroupSchemeDecomposition:
    gm_count: int
    mu_orders: tuple[int, ...]

    @property
    def connected(self) -> bool:
        return not self.mu_orders

    def __str__(self):
        parts = []
        if self.gm_count:
            parts.append("G_m" if self.gm_count == 1 else f"G_m^{self.gm_count}")
        parts += [f"mu_{n}" for n in self.mu_orders]
        return " x ".join(parts) if parts else "trivial group"


def group_scheme_decomposition(D: AbelianGroup) -> GroupSchemeDecomposition:
    """Split ``Spec(Q[D])`` into tori ``G_m`` and roots of unity ``mu_n``."""
    return GroupSchemeDecomposition(D.rank, D.invariant_factors)


def quotient_coordinates(D: AbelianGroup, H: Subgroup):
    """Present ``H`` abstractly: an isomorphic canonical group and a coordinate map.

    Returns ``(G, to_G)`` where ``to_G`` sends elements of ``H`` (given as
    elements of ``D``) to their image under a fixed isomorphism ``H -> G``.
    """
    B = [list(r) for r in H.lattice]
    k = len(B)
    # relation rows expressed in the basis of the lifted lattice
    R = []
    for rel in D.relation_rows:
        rem, coeffs = _linalg.reduce_by_hnf(rel, B)
        assert not any(rem)
        R.append(coeffs)
    s, _, Q = _linalg.smith(R, len(R), k) if R else ([], None, _linalg.identity(k))
    nrel = len(s)
    free_idx = list(range(nrel, k))
    tors_idx = [i for i in range(nrel) if s[i] > 1]
    G = AbelianGroup(len(free_idx), tuple(s[i] for i in tors_idx))

    def to_G(d: GroupElement) -> GroupElement:
        rem, y = _linalg.reduce_by_hnf(d.lift(), B)
        if any(rem):
            raise InvalidInputError(f"{d} is not in the subgroup")
        w = [sum(a * q for a, q in zip(y, col)) for col in zip(*Q)]
        return G.element([w[i] for i in free_idx] + [w[i] for i in tors_idx])

    return G, to_G
