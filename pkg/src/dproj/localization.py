"""Degree-zero localizations and Veronese subrings via Hilbert bases.

The solution monoid ``{x in N^m : A x = 0, row.x = 0 mod n_j}`` has two
completion procedures:

``"cone"`` (default)
    Extreme rays of the cone ``{x >= 0 : A x = 0}`` come from minimal
    supports.  Every irreducible solution is a ray generator or a lattice point
    in the half-open parallelepiped of some simplicial subcone, so those points
    are enumerated and the componentwise-minimal ones kept.

``"contejean-devie"``
    The breadth-first completion with frontier pruning.  Each congruence
    becomes an equation with one signed slack ``s+ - s-``; the slacks are
    projected away at the end and the projected generators are re-minimised.
    Simple, but the frontier grows quickly once solutions need large entries.
"""
from __future__ import annotations

import itertools
import logging
import warnings
from dataclasses import dataclass
from typing import Sequence

from . import _linalg
from .abelian_group import Subgroup
from .errors import InvalidInputError, PreconditionError, ResourceLimitError
from .graded_ring import GradedRing, Monomial, degree_of_monomial, grlex_key
from .relevance import is_relevant, require_effective

log = logging.getLogger(__name__)

DEFAULT_STEP_BUDGET = 10**6


class IrrelevantChartWarning(UserWarning):
    """Degree-zero generators requested for an element that is not relevant."""


@dataclass(frozen=True)
class DiophantineSystem:
    num_vars: int
    equations: tuple[tuple[int, ...], ...] = ()
    congruences: tuple[tuple[tuple[int, ...], int], ...] = ()

    def __post_init__(self):
        eqs = tuple(tuple(int(a) for a in row) for row in self.equations)
        cong = tuple((tuple(int(a) for a in row), int(n)) for row, n in self.congruences)
        object.__setattr__(self, "equations", eqs)
        object.__setattr__(self, "congruences", cong)
        if self.num_vars < 1:
            raise InvalidInputError("a Diophantine system needs at least one variable")
        for row in eqs + tuple(row for row, _ in cong):
            if len(row) != self.num_vars:
                raise InvalidInputError(f"row {row} does not have {self.num_vars} entries")
        for _, n in cong:
            if n < 2:
                raise InvalidInputError(f"congruence modulus must be >= 2, got {n}")

    def is_solution(self, x: Sequence[int]) -> bool:
        if any(sum(a * b for a, b in zip(row, x)) for row in self.equations):
            return False
        return all(sum(a * b for a, b in zip(row, x)) % n == 0 for row, n in self.congruences)


def _contejean_devie(A: list[list[int]], m: int, max_steps: int) -> list[tuple[int, ...]]:
    """Minimal nonzero solutions of ``A x = 0`` over ``N^m``.

    Breadth-first over total degree: a non-solution ``x`` is only extended by
    ``e_j`` when ``<A x, A e_j> < 0`` (the step points back toward zero), and
    candidates dominated by an already found solution are pruned.  Solutions
    found at a level are minimal because anything below them has smaller
    total degree.
    """
    cols = [tuple(row[j] for row in A) for j in range(m)]
    frontier: dict[tuple[int, ...], tuple[int, ...]] = {}
    for j in range(m):
        x = tuple(int(i == j) for i in range(m))
        frontier[x] = cols[j]
    basis: list[tuple[int, ...]] = []
    steps = 0
    while frontier:
        pending = []
        for x, ax in frontier.items():
            if any(ax):
                pending.append((x, ax))
            else:
                basis.append(x)
        nxt: dict[tuple[int, ...], tuple[int, ...]] = {}
        for x, ax in pending:
            for j in range(m):
                if sum(a * b for a, b in zip(ax, cols[j])) >= 0:
                    continue
                y = x[:j] + (x[j] + 1,) + x[j + 1:]
                if y in nxt:
                    continue
                if any(all(b <= c for b, c in zip(sol, y)) for sol in basis):
                    continue
                steps += 1
                if steps > max_steps:
                    raise ResourceLimitError(
                        f"Hilbert basis completion exceeded {max_steps} steps"
                    )
                nxt[y] = tuple(a + b for a, b in zip(ax, cols[j]))
        frontier = nxt
    return basis


def _extreme_rays(A: Sequence[Sequence[int]], m: int) -> list[tuple[int, ...]]:
    """Primitive extreme rays of ``{x >= 0 : A x = 0}``.

    ``x`` spans an extreme ray iff the columns of ``A`` on its support have a
    one-dimensional kernel.
    """
    rays = []
    for size in range(1, m + 1):
        for S in itertools.combinations(range(m), size):
            if any(set(S) >= set(i for i, a in enumerate(r) if a) for r in rays):
                continue
            sub = [[row[j] for j in S] for row in A]
            ker = _linalg.nullspace(sub, size)
            if len(ker) != 1:
                continue
            (v,) = ker
            if all(a > 0 for a in v) or all(a < 0 for a in v):
                x = [0] * m
                for j, a in zip(S, v):
                    x[j] = abs(a)
                rays.append(tuple(x))
    return rays


def _lattice_basis(sys: DiophantineSystem, extra: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Integer basis of ``{x in Z^m : A x = 0, extra x = 0, congruences}``."""
    m, c = sys.num_vars, len(sys.congruences)
    rows = [list(r) + [0] * c for r in list(sys.equations) + list(extra)]
    for j, (row, n) in enumerate(sys.congruences):
        rows.append(list(row) + [-n * (i == j) for i in range(c)])
    s, _, Q = _linalg.smith(rows, len(rows), m + c)
    # the slack of a solution is determined by x, so projecting keeps a basis
    return [tuple(Q[i][j] for i in range(m)) for j in range(len(s), m + c)]


def _cone_hilbert_basis(sys: DiophantineSystem, max_steps: int) -> list[tuple[int, ...]]:
    m = sys.num_vars
    rays = _extreme_rays(sys.equations, m)
    if not rays:
        return []
    d = _linalg.rank(rays)
    B = _lattice_basis(sys, _linalg.nullspace(rays, m))
    assert len(B) == d
    # coordinates with respect to B through d independent columns
    cols: list[int] = []
    for j in range(m):
        if _linalg.rank([[b[i] for i in cols + [j]] for b in B]) > len(cols):
            cols.append(j)
    Binv = _linalg.inverse([[b[j] for j in cols] for b in B])

    def coords(x):
        return [sum(x[cols[i]] * Binv[i][k] for i in range(d)) for k in range(d)]

    def point(t):
        return tuple(sum(t[k] * B[k][j] for k in range(d)) for j in range(m))

    ray_coords = [_linalg.primitive(coords(r)) for r in rays]
    candidates = {point(t) for t in ray_coords}
    steps = 0
    for subset in itertools.combinations(ray_coords, d):
        T = [list(t) for t in subset]
        if _linalg.rank(T) < d:
            continue
        H = _linalg.hnf(T, d)
        # lam = w T^-1 = (w adj) / det, kept in integers
        det = 1
        for j in range(d):
            det *= H[j][j]
        adj = [[int(a * det) for a in row] for row in _linalg.inverse(T)]
        box = [range(H[j][j]) for j in range(d)]
        steps += det
        if steps > max_steps:
            raise ResourceLimitError(f"Hilbert basis completion exceeded {max_steps} steps")
        for w in itertools.product(*box):
            num = [sum(w[i] * adj[i][k] for i in range(d)) % det for k in range(d)]
            if not any(num):
                continue
            t = [sum(num[i] * T[i][k] for i in range(d)) // det for k in range(d)]
            candidates.add(point(t))
    minimal: list[tuple[int, ...]] = []
    for x in sorted(candidates, key=lambda v: (sum(v), v)):
        # every irreducible solution is a candidate, so comparing with those found suffices
        if not any(all(a <= b for a, b in zip(y, x)) for y in minimal):
            minimal.append(x)
    return sorted(minimal)


HILBERT_METHODS = ("cone", "contejean-devie")


def hilbert_basis(
    sys: DiophantineSystem, max_steps: int = DEFAULT_STEP_BUDGET, method: str = "cone"
) -> list[tuple[int, ...]]:
    """Hilbert basis of the solution monoid of ``sys``, sorted lexicographically.

    ``max_steps`` bounds the number of enumerated candidates (``"cone"``) or
    frontier vectors (``"contejean-devie"``); exceeding it raises
    ``ResourceLimitError``.
    """
    if method == "cone":
        return _cone_hilbert_basis(sys, max_steps)
    if method != "contejean-devie":
        raise InvalidInputError(f"unknown Hilbert basis method {method!r}; use one of {HILBERT_METHODS}")
    m = sys.num_vars
    c = len(sys.congruences)
    A = [list(row) + [0] * (2 * c) for row in sys.equations]
    for j, (row, n) in enumerate(sys.congruences):
        slack = [0] * (2 * c)
        slack[2 * j] = -n
        slack[2 * j + 1] = n
        A.append(list(row) + slack)
    raw = _contejean_devie(A, m + 2 * c, max_steps)
    if not c:
        return sorted(raw)
    projected = sorted({x[:m] for x in raw if any(x[:m])})
    minimal = []
    for x in projected:
        reducible = any(
            y != x and all(a <= b for a, b in zip(y, x)) and sys.is_solution([b - a for a, b in zip(y, x)])
            for y in projected
        )
        if not reducible:
            minimal.append(x)
    return minimal


@dataclass(frozen=True)
class ReducedFraction:
    numerator: Monomial
    denominator: Monomial

    def __post_init__(self):
        if any(a and b for a, b in zip(self.numerator.exponents, self.denominator.exponents)):
            raise InvalidInputError("numerator and denominator share a variable")

    @classmethod
    def reduce(cls, numerator: Monomial, denominator: Monomial) -> ReducedFraction:
        g = numerator.gcd(denominator)
        return cls(numerator / g, denominator / g)

    def is_unit(self) -> bool:
        return self.numerator.is_unit() and self.denominator.is_unit()

    def exponent_vector(self) -> tuple[int, ...]:
        return tuple(a - b for a, b in zip(self.numerator.exponents, self.denominator.exponents))

    def format(self, ring: GradedRing) -> str:
        def wrap(m: Monomial) -> str:
            text = ring.format_monomial(m)
            return f"({text})" if "*" in text else text

        if self.denominator.is_unit():
            return ring.format_monomial(self.numerator)
        return f"{wrap(self.numerator)}/{wrap(self.denominator)}"


def fraction_key(q: ReducedFraction):
    return (grlex_key(q.numerator), grlex_key(q.denominator))


def degree_zero_system(ring: GradedRing, f: Monomial) -> DiophantineSystem:
    """Encode ``deg(x^a) = k deg(f)`` over ``(a, k) in N^(n+1)``."""
    D = ring.group
    df = degree_of_monomial(ring, f)
    cols = [d.lift() for d in ring.degrees] + [tuple(-c for c in df.lift())]
    r = D.rank
    eqs = tuple(tuple(col[i] for col in cols) for i in range(r))
    cong = tuple(
        (tuple(col[r + j] % n for col in cols), n) for j, n in enumerate(D.invariant_factors)
    )
    return DiophantineSystem(ring.n + 1, eqs, cong)


def degree_zero_solutions(ring: GradedRing, f: Monomial, max_steps: int = DEFAULT_STEP_BUDGET):
    return hilbert_basis(degree_zero_system(ring, f), max_steps)


def fractions_from_solutions(f: Monomial, solutions) -> list[ReducedFraction]:
    """Map solutions ``(a, k)`` to reduced fractions, dropping units and duplicates."""
    seen: dict[ReducedFraction, tuple[int, ...]] = {}
    for sol in solutions:
        a, k = Monomial(sol[:-1]), sol[-1]
        q = ReducedFraction.reduce(a, Monomial(tuple(k * e for e in f.exponents)))
        if q.is_unit():
            continue
        if q in seen:
            log.debug("solutions %s and %s reduce to the same fraction", seen[q], sol)
            continue
        seen[q] = sol
    return sorted(seen, key=fraction_key)


def dimension_from_solutions(f: Monomial, solutions) -> int:
    vecs = [[a - sol[-1] * e for a, e in zip(sol[:-1], f.exponents)] for sol in solutions]
    return _linalg.rank(vecs)


def degree_zero_generators(
    ring: GradedRing, f: Monomial, max_steps: int = DEFAULT_STEP_BUDGET
) -> list[ReducedFraction]:
    """Monoid-algebra generators ``x^a / f^k`` of ``S_(f)``, reduced and sorted."""
    if len(f) != ring.n:
        raise InvalidInputError(f"monomial has {len(f)} exponents, ring has {ring.n} variables")
    if not is_relevant(ring, f):
        warnings.warn(
            f"{ring.format_monomial(f)} is not relevant; its degree-zero localization is degenerate",
            IrrelevantChartWarning,
            stacklevel=2,
        )
    return fractions_from_solutions(f, degree_zero_solutions(ring, f, max_steps))


def subgroup_membership_system(ring: GradedRing, H: Subgroup) -> DiophantineSystem:
    """``{a in N^n : deg(x^a) in H}`` as equations plus congruences."""
    if H.ambient != ring.group:
        raise InvalidInputError("subgroup lives in a different group")
    k = len(H.lattice)
    s = H.smith_factors
    W = [H.smith_coordinates(d.lift()) for d in ring.degrees]
    eqs, cong = [], []
    for i in range(ring.group.ngens):
        col = tuple(w[i] for w in W)
        if i >= k:
            eqs.append(col)
        elif s[i] > 1:
            cong.append((tuple(c % s[i] for c in col), s[i]))
    return DiophantineSystem(ring.n, tuple(eqs), tuple(cong))


def veronese_generators(
    ring: GradedRing, H: Subgroup, max_steps: int = DEFAULT_STEP_BUDGET
) -> list[Monomial]:
    """Minimal monomial algebra generators of the Veronese subring ``S_H``."""
    sols = hilbert_basis(subgroup_membership_system(ring, H), max_steps)
    return sorted((Monomial(s) for s in sols), key=grlex_key)


def chart_dimension(ring: GradedRing, f: Monomial, max_steps: int = DEFAULT_STEP_BUDGET) -> int:
    """Rank of the lattice of Laurent exponents ``a - k e_f`` of degree-zero fractions.

    For relevant ``f`` under an effective grading this equals ``n - r``.
    """
    require_effective(ring)
    if not is_relevant(ring, f):
        raise PreconditionError(f"{ring.format_monomial(f)} is not relevant")
    dim = dimension_from_solutions(f, degree_zero_solutions(ring, f, max_steps))
    assert dim == ring.n - ring.r, (
        f"chart {ring.format_monomial(f)} has dimension {dim}, expected {ring.n - ring.r}"
    )
    return dim
