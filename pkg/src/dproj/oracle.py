"""Brute-force verifiers, deliberately independent of the normal-form code paths.

Nothing here calls Hermite/Smith normal forms or the Hilbert basis solver.
Everything is exponential and only meant for small instances.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from math import gcd
from typing import Sequence

import numpy as np

from .abelian_group import AbelianGroup, GroupElement, Subgroup
from .errors import InvalidInputError
from .graded_ring import GradedRing, Monomial, degree_of_monomial
from .localization import DiophantineSystem

UNKNOWN = None


@dataclass(frozen=True)
class SearchBudget:
    exponent_bound: int = 6
    coset_bound: int = 5000
    step_bound: int = 2_000_000

    def __post_init__(self):
        if self.exponent_bound < 0 or min(self.coset_bound, self.step_bound) < 1:
            raise InvalidInputError("search budget needs exponent_bound >= 0 and positive coset/step bounds")


def brute_degree_zero(ring: GradedRing, f: Monomial, budget: SearchBudget = SearchBudget()):
    """All ``(a, k)`` with entries ``<= exponent_bound`` and ``deg(x^a) = k deg(f)``."""
    df = degree_of_monomial(ring, f)
    B = budget.exponent_bound
    out = []
    for a in itertools.product(range(B + 1), repeat=ring.n):
        da = degree_of_monomial(ring, Monomial(a))
        for k in range(B + 1):
            if da == k * df:
                out.append((a, k))
    return sorted(out)


class _CosetOverflow(Exception):
    pass


def _todd_coxeter(ngens: int, relators, subgroup_words, bound: int) -> int:
    """Number of cosets, by HLT coset enumeration with coincidence handling.

    Column ``2g`` is generator ``g`` and ``2g+1`` its inverse.
    """
    width = 2 * ngens
    table: list[list[int]] = []
    parent: list[int] = []

    def new_coset() -> int:
        if len(table) >= bound:
            raise _CosetOverflow
        table.append([-1] * width)
        parent.append(len(parent))
        return len(table) - 1

    def find(c: int) -> int:
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def merge(a: int, b: int, queue: list[int]):
        a, b = find(a), find(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        parent[b] = a
        queue.append(b)

    def coincidence(a: int, b: int):
        queue: list[int] = []
        merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            for x in range(width):
                f = table[e][x]
                if f == -1:
                    continue
                if table[f][x ^ 1] == e:
                    table[f][x ^ 1] = -1
                e1, f1 = find(e), find(f)
                if table[e1][x] != -1:
                    merge(f1, table[e1][x], queue)
                elif table[f1][x ^ 1] != -1:
                    merge(e1, table[f1][x ^ 1], queue)
                else:
                    table[e1][x] = f1
                    table[f1][x ^ 1] = e1

    def define(c: int, x: int):
        d = new_coset()
        table[c][x] = d
        table[d][x ^ 1] = c

    def scan_and_fill(c: int, word: Sequence[int]):
        f, b = c, c
        i, j = 0, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] != -1:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != b:
                    coincidence(f, b)
                return
            while j >= i and table[b][word[j] ^ 1] != -1:
                b = table[b][word[j] ^ 1]
                j -= 1
            if j < i:
                coincidence(f, b)
                return
            if i == j:
                table[f][word[i]] = b
                table[b][word[i] ^ 1] = f
                return
            define(f, word[i])

    new_coset()
    for w in subgroup_words:
        scan_and_fill(0, w)
    c = 0
    while c < len(table):
        for rel in relators:
            if parent[c] != c:
                break
            scan_and_fill(c, rel)
        if parent[c] == c:
            for x in range(width):
                if table[c][x] == -1:
                    define(c, x)
        c += 1
    return sum(1 for i in range(len(parent)) if parent[i] == i)


def _word(coords: Sequence[int]) -> list[int]:
    w = []
    for g, c in enumerate(coords):
        w += [2 * g + (c < 0)] * abs(c)
    return w


def brute_subgroup_index(
    D: AbelianGroup, H: Subgroup | Sequence[GroupElement], budget: SearchBudget = SearchBudget()
):
    """Index ``[D:H]`` by coset enumeration from the identity, or ``UNKNOWN``.

    Works from the generators ``H`` was built from, never from its lattice.
    """
    gens = H.generators if isinstance(H, Subgroup) else tuple(H)
    s = D.ngens
    relators = [
        [2 * i, 2 * j, 2 * i + 1, 2 * j + 1] for i in range(s) for j in range(i + 1, s)
    ]
    relators += [[2 * (D.rank + k)] * n for k, n in enumerate(D.invariant_factors)]
    words = [w for w in (_word(h.lift()) for h in gens) if w]
    try:
        return _todd_coxeter(s, relators, words, budget.coset_bound)
    except _CosetOverflow:
        return UNKNOWN


def brute_contains(H: Subgroup | Sequence[GroupElement], d: GroupElement, bound: int) -> bool:
    """Search integer combinations of the generators with coefficients in ``[-bound, bound]``."""
    gens = H.generators if isinstance(H, Subgroup) else tuple(H)
    D = d.group
    target = np.array(d.lift(), dtype=np.int64)
    if not gens:
        return d.is_zero()
    G = np.array([g.lift() for g in gens], dtype=np.int64)
    mods = np.array([1] * D.rank + list(D.invariant_factors), dtype=np.int64)
    is_tors = np.array([False] * D.rank + [True] * len(D.invariant_factors))
    rng = np.arange(-bound, bound + 1, dtype=np.int64)
    # iterate over the first coefficient to bound memory
    if len(gens) > 1:
        rest = np.array(list(itertools.product(rng, repeat=len(gens) - 1)), dtype=np.int64)
        base = rest @ G[1:]
    else:
        base = np.zeros((1, D.ngens), dtype=np.int64)
    for c0 in rng:
        vals = base + c0 * G[0]
        diff = vals - target
        diff = np.where(is_tors, diff % mods, diff)
        if np.any(np.all(diff == 0, axis=1)):
            return True
    return False


def brute_minimal_solutions(sys: DiophantineSystem, budget: SearchBudget = SearchBudget()) -> list[tuple[int, ...]]:
    """Solutions in the box ``[0, exponent_bound]^m`` that are not a sum of two nonzero solutions."""
    B = budget.exponent_bound
    m = sys.num_vars
    pts = np.array(list(itertools.product(range(B + 1), repeat=m)), dtype=np.int64)
    ok = np.ones(len(pts), dtype=bool)
    for row in sys.equations:
        ok &= pts @ np.array(row, dtype=np.int64) == 0
    for row, n in sys.congruences:
        ok &= (pts @ np.array(row, dtype=np.int64)) % n == 0
    sols = [tuple(int(a) for a in p) for p in pts[ok] if p.any()]
    sols.sort(key=lambda x: (sum(x), x))
    minimal: list[tuple[int, ...]] = []
    for x in sols:
        # any nonzero solution below x sits above some minimal one, and x - y is again a solution
        if not any(all(a <= b for a, b in zip(y, x)) for y in minimal):
            minimal.append(x)
    return sorted(minimal)


def brute_relevance(ring: GradedRing, f: Monomial, budget: SearchBudget = SearchBudget()):
    """Relevance of a monomial by searching for certificates, or ``UNKNOWN``.

    Units of ``S_f`` are the Laurent monomials in the support variables.  ``f``
    is relevant iff every free axis ``e_j`` has a multiple ``N e_j`` (``N != 0``)
    occurring as a unit degree; torsion coordinates never matter because
    ``n_j e_(r+j) = 0``.  Found units with exponents in ``[-B, B]`` certify
    relevance.  Conversely a nonzero integer functional (entries in ``[-B, B]``)
    killing every support degree certifies irrelevance.
    """
    r = ring.r
    vecs = sorted({ring.degrees[i].free for i in f.support if any(ring.degrees[i].free)})
    if r == 0:
        return True
    B = budget.exponent_bound
    V = np.array(vecs, dtype=np.int64).reshape(len(vecs), r)
    rng = np.arange(-B, B + 1, dtype=np.int64)
    funcs = np.array(list(itertools.product(rng, repeat=r)), dtype=np.int64)
    funcs = funcs[np.any(funcs != 0, axis=1)]
    if len(vecs) == 0 or np.any(np.all(funcs @ V.T == 0, axis=1)):
        return False
    found = [False] * r
    for bound in range(1, B + 1):
        if (2 * bound + 1) ** len(vecs) > budget.step_bound:
            break
        rb = np.arange(-bound, bound + 1, dtype=np.int64)
        coeffs = np.array(list(itertools.product(rb, repeat=len(vecs))), dtype=np.int64)
        degs = coeffs @ V
        for j in range(r):
            if found[j]:
                continue
            others = np.delete(degs, j, axis=1)
            hit = np.all(others == 0, axis=1) & (degs[:, j] != 0)
            found[j] = bool(np.any(hit))
        if all(found):
            return True
    return UNKNOWN


def brute_order_counts(orders: Sequence[int], max_order: int = 24) -> Counter:
    """How many elements of ``Z/n_1 x ... x Z/n_t`` have each order ``<= max_order``."""
    counts: Counter = Counter()
    for x in itertools.product(*(range(n) for n in orders)):
        order = 1
        for a, n in zip(x, orders):
            k = n // gcd(a, n)
            order = order * k // gcd(order, k)
        if order <= max_order:
            counts[order] += 1
    return counts
