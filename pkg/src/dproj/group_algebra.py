"""The group Hopf algebra ``Q[D]`` and its group-like elements."""
from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from .abelian_group import AbelianGroup, GroupElement
from .errors import InvalidInputError

Tensor = dict[tuple[GroupElement, ...], Fraction]


class GroupAlgebraElement:
    """Finite sum ``sum(a_d * chi^d)`` with rational coefficients."""

    __slots__ = ("group", "_coeffs")

    def __init__(self, group: AbelianGroup, coefficients: Mapping[GroupElement, object] = ()):
        self.group = group
        acc: dict[GroupElement, Fraction] = {}
        for d, c in dict(coefficients).items():
            if d.group != group:
                raise InvalidInputError(f"{d} is not an element of {group}")
            acc[d] = acc.get(d, Fraction(0)) + Fraction(c)
        self._coeffs = {d: c for d, c in acc.items() if c != 0}

    @classmethod
    def chi(cls, d: GroupElement, coeff=1) -> GroupAlgebraElement:
        return cls(d.group, {d: coeff})

    @property
    def coefficients(self) -> dict[GroupElement, Fraction]:
        return dict(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def __eq__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return NotImplemented
        return self.group == other.group and self._coeffs == other._coeffs

    def __hash__(self):
        return hash((self.group, frozenset(self._coeffs.items())))

    def __add__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        _same_group(self, other)
        acc = dict(self._coeffs)
        for d, c in other._coeffs.items():
            acc[d] = acc.get(d, 0) + c
        return GroupAlgebraElement(self.group, acc)

    def __mul__(self, other: GroupAlgebraElement) -> GroupAlgebraElement:
        return ga_multiply(self, other)

    def __str__(self):
        if not self._coeffs:
            return "0"
        out = ""
        for d, c in sorted(self._coeffs.items(), key=lambda t: t[0].lift()):
            sign = "-" if c < 0 else "+"
            body = f"chi{d}" if abs(c) == 1 else f"{abs(c)}*chi{d}"
            out += f"{'-' if sign == '-' else ''}{body}" if not out else f" {sign} {body}"
        return out

    __repr__ = __str__


def _same_group(a: GroupAlgebraElement, b: GroupAlgebraElement):
    if a.group != b.group:
        raise InvalidInputError("group algebra elements over different groups")


def ga_multiply(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    _same_group(a, b)
    acc: dict[GroupElement, Fraction] = {}
    for d, x in a._coeffs.items():
        for e, y in b._coeffs.items():
            key = d + e
            acc[key] = acc.get(key, Fraction(0)) + x * y
    return GroupAlgebraElement(a.group, acc)


def ga_comultiply(a: GroupAlgebraElement) -> Tensor:
    """``Delta(chi^d) = chi^d (x) chi^d``, extended linearly."""
    return {(d, d): c for d, c in a._coeffs.items()}


def ga_counit(a: GroupAlgebraElement) -> Fraction:
    return sum(a._coeffs.values(), Fraction(0))


def ga_antipode(a: GroupAlgebraElement) -> GroupAlgebraElement:
    return GroupAlgebraElement(a.group, {-d: c for d, c in a._coeffs.items()})


def ga_unit(group: AbelianGroup) -> GroupAlgebraElement:
    return GroupAlgebraElement.chi(group.zero())


def tensor_square(a: GroupAlgebraElement) -> Tensor:
    """``a (x) a`` with zero entries dropped."""
    out: Tensor = {}
    for d, x in a._coeffs.items():
        for e, y in a._coeffs.items():
            if x * y:
                out[(d, e)] = x * y
    return out


def is_group_like(a: GroupAlgebraElement) -> bool:
    """Decide ``Delta(a) = a (x) a`` with ``a != 0`` through the coefficient conditions.

    Comparing coefficients on the basis ``chi^d (x) chi^e`` gives
    ``a_d * a_e = 0`` for ``d != e`` and ``a_d**2 = a_d``.  Over Q (no
    idempotents other than 0 and 1) that leaves exactly one coefficient 1.
    """
    if a.is_zero():
        return False
    coeffs = list(a._coeffs.values())
    for i, x in enumerate(coeffs):
        if x * x != x:
            return False
        if any(x * y != 0 for y in coeffs[i + 1:]):
            return False
    return True
