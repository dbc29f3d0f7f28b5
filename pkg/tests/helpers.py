"""Shared builders for tests: fixture loading and random rings/systems."""
from __future__ import annotations

import random
from pathlib import Path

from dproj.graded_ring import GradedRing, Monomial
from dproj.localization import DiophantineSystem
from dproj.parsing import parse_ring_spec, ring_from_spec
from dproj.relevance import monomic_generators

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"
# "criterion N: PASS ..." lines, echoed in the pytest terminal summary
ACCEPTANCE_LINES: list[str] = []

GOLDEN_FIXTURES = ("double_origin", "four_var", "torsion", "projective", "weighted", "p1xp1", "trivial_r_eq_n")


def load(name: str) -> GradedRing:
    return parse_ring_spec((FIXTURES / f"{name}.json").read_text())


def ring(rank: int, torsion, degrees, names=None) -> GradedRing:
    names = names or [f"x{i}" for i in range(len(degrees))]
    return ring_from_spec(
        {"rank": rank, "torsion": list(torsion), "vars": [{"name": a, "deg": list(d)} for a, d in zip(names, degrees)]}
    )


def random_ring(rng: random.Random, max_n=5, max_r=3, max_modulus=4, bound=3, max_factors=2) -> GradedRing:
    """An effective ring with at least one relevant monomial, by rejection sampling."""
    while True:
        r = rng.randint(0, max_r)
        n = rng.randint(max(r, 1), max_n)
        torsion = [rng.randint(2, max_modulus) for _ in range(rng.randint(0, max_factors))]
        if r == 0 and not torsion:
            continue
        degs = [
            [rng.randint(-bound, bound) for _ in range(r)] + [rng.randrange(m) for m in torsion]
            for _ in range(n)
        ]
        R = ring(r, torsion, degs)
        if R.effective and monomic_generators(R):
            return R


def random_monomial(rng: random.Random, n: int, max_exp=2) -> Monomial:
    return Monomial(tuple(rng.randint(0, max_exp) for _ in range(n)))


def random_system(rng: random.Random, max_vars=5, bound=3, max_congruences=2) -> DiophantineSystem:
    m = rng.randint(1, max_vars)
    neq = rng.randint(0, 2)
    eqs = [[rng.randint(-bound, bound) for _ in range(m)] for _ in range(neq)]
    cong = [
        ([rng.randint(-bound, bound) for _ in range(m)], rng.randint(2, 4))
        for _ in range(rng.randint(0, max_congruences))
    ]
    return DiophantineSystem(m, tuple(map(tuple, eqs)), tuple((tuple(a), n) for a, n in cong))
