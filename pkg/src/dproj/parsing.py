"""Ring-spec documents and expression parsing/rendering.

Ring specs are JSON::

    {"rank": 2, "torsion": [], "vars": [{"name": "x", "deg": [1, 0]}, ...]}

Each degree vector lists the free coordinates followed by one residue per
torsion modulus.  Expressions use identifiers, integer or ``p/q`` literals,
``*``, ``^`` (positive integer exponents), ``+``, ``-`` and parentheses.
"""
from __future__ import annotations

import json
import re
from fractions import Fraction

from .abelian_group import AbelianGroup, GroupElement, canonical_coordinates
from .errors import InvalidInputError
from .graded_ring import GradedRing, Monomial, Polynomial
from .group_algebra import GroupAlgebraElement


class SpecSyntaxError(InvalidInputError):
    def __init__(self, msg: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {msg}")
        self.line = line
        self.column = column


class ExpressionSyntaxError(InvalidInputError):
    def __init__(self, msg: str, text: str, pos: int):
        super().__init__(f"{msg} at position {pos}: {text!r}")
        self.pos = pos


def _int_list(value, where: str) -> list[int]:
    if not isinstance(value, list) or not all(isinstance(a, int) and not isinstance(a, bool) for a in value):
        raise InvalidInputError(f"{where}: expected a list of integers, got {json.dumps(value)}")
    return value


def ring_from_spec(doc) -> GradedRing:
    if not isinstance(doc, dict):
        raise InvalidInputError("ring spec must be a JSON object")
    extra = set(doc) - {"rank", "torsion", "vars"}
    if extra:
        raise InvalidInputError(f"unknown ring spec fields: {sorted(extra)}")
    rank = doc.get("rank")
    if not isinstance(rank, int) or isinstance(rank, bool) or rank < 0:
        raise InvalidInputError(f"rank: expected a non-negative integer, got {json.dumps(rank)}")
    torsion = _int_list(doc.get("torsion", []), "torsion")
    for i, n in enumerate(torsion):
        if n < 2:
            raise InvalidInputError(f"torsion[{i}]: modulus must be >= 2, got {n}")
    variables = doc.get("vars")
    if not isinstance(variables, list):
        raise InvalidInputError("vars: expected a list")
    if not variables:
        raise InvalidInputError("vars: a ring needs at least one variable")
    D, convert = canonical_coordinates(rank, torsion)
    names, degs, seen = [], [], {}
    for i, var in enumerate(variables):
        if not isinstance(var, dict) or set(var) != {"name", "deg"}:
            raise InvalidInputError(f'vars[{i}]: expected {{"name": ..., "deg": [...]}}')
        name = var["name"]
        if not isinstance(name, str) or not name.isidentifier():
            raise InvalidInputError(f"vars[{i}]: invalid variable name {json.dumps(name)}")
        if name in seen:
            raise InvalidInputError(f"vars[{i}]: duplicate variable {name!r} (first at vars[{seen[name]}])")
        seen[name] = i
        deg = _int_list(var["deg"], f"vars[{i}].deg")
        if len(deg) != rank + len(torsion):
            raise InvalidInputError(
                f"vars[{i}].deg: expected {rank + len(torsion)} entries (rank {rank} + "
                f"{len(torsion)} torsion), got {len(deg)}"
            )
        names.append(name)
        degs.append(convert(deg))
    return GradedRing(D, tuple(names), tuple(degs))


def parse_ring_spec(text: str) -> GradedRing:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecSyntaxError(exc.msg, exc.lineno, exc.colno) from None
    return ring_from_spec(doc)


def ring_to_spec(ring: GradedRing) -> dict:
    D = ring.group
    return {
        "rank": D.rank,
        "torsion": list(D.invariant_factors),
        "vars": [{"name": n, "deg": list(d.lift())} for n, d in zip(ring.var_names, ring.degrees)],
    }


def render_ring_spec(ring: GradedRing) -> str:
    return json.dumps(ring_to_spec(ring))


_TOKEN = re.compile(r"(\d+)|([A-Za-z_]\w*)|(\S)")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        m = _TOKEN.match(text, pos)
        start = m.start()
        if m.group(1):
            tokens.append(("num", int(m.group(1)), start))
        elif m.group(2):
            tokens.append(("id", m.group(2), start))
        else:
            ch = m.group(3)
            if ch not in "+-*^()/,[];":
                raise ExpressionSyntaxError(f"unexpected character {ch!r}", text, start)
            tokens.append(("op", ch, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        tok = self.take()
        if tok[1] != value or tok[0] == "num":
            self.fail(f"expected {value!r}", tok)
        return tok

    def fail(self, msg, tok=None):
        tok = tok or self.peek()
        raise ExpressionSyntaxError(msg, self.text, tok[2])

    def at(self, *values) -> bool:
        tok = self.peek()
        return tok[0] == "op" and tok[1] in values

    def number(self) -> Fraction:
        tok = self.take()
        if tok[0] != "num":
            self.fail("expected a number", tok)
        value = Fraction(tok[1])
        if self.at("/"):
            self.take()
            den = self.take()
            if den[0] != "num" or den[1] == 0:
                self.fail("expected a nonzero denominator", den)
            value /= den[1]
        return value

    def exponent(self) -> int:
        tok = self.take()
        if tok[0] != "num":
            self.fail("exponent must be a positive integer", tok)
        if tok[1] < 1:
            self.fail("exponent must be >= 1 (write the unit as 1)", tok)
        return tok[1]

    def finish(self):
        if self.peek()[0] != "end":
            self.fail("unexpected trailing input")


class _PolyParser(_Parser):
    def __init__(self, ring: GradedRing, text: str):
        super().__init__(text)
        self.ring = ring
        self.index = {name: i for i, name in enumerate(ring.var_names)}

    def parse(self) -> Polynomial:
        if self.peek()[0] == "end":
            self.fail("empty expression")
        p = self.expr()
        self.finish()
        return p

    def expr(self) -> Polynomial:
        p = self.signed_term()
        while self.at("+", "-"):
            op = self.take()[1]
            t = self.term()
            p = p + t if op == "+" else p - t
        return p

    def signed_term(self) -> Polynomial:
        if self.at("-"):
            self.take()
            return -self.term()
        if self.at("+"):
            self.take()
        return self.term()

    def term(self) -> Polynomial:
        p = self.factor()
        while self.at("*"):
            self.take()
            p = p * self.factor()
        return p

    def factor(self) -> Polynomial:
        base = self.atom()
        if self.at("^"):
            self.take()
            base = base ** self.exponent()
        return base

    def atom(self) -> Polynomial:
        n = self.ring.n
        tok = self.peek()
        if tok[0] == "num":
            return Polynomial.constant(self.number(), n)
        if tok[0] == "id":
            self.take()
            if tok[1] not in self.index:
                self.fail(f"unknown identifier {tok[1]!r}", tok)
            return Polynomial.from_monomial(self.ring.variable(self.index[tok[1]]))
        if self.at("("):
            self.take()
            p = self.expr()
            self.expect(")")
            return p
        self.fail("expected a variable, number or '('")


def parse_expression(ring: GradedRing, text: str) -> Polynomial:
    return _PolyParser(ring, text).parse()


def parse_monomial(ring: GradedRing, text: str) -> Monomial:
    p = parse_expression(ring, text)
    if len(p) != 1 or next(iter(p.terms.values())) != 1:
        raise InvalidInputError(f"{text!r} is not a monomial")
    return next(iter(p.terms))


class _GroupAlgebraParser(_Parser):
    """``chi(1,0) + 2*chi(0;1) - 1/2*chi(3,1)``; the ``;`` separator is optional."""

    def __init__(self, group: AbelianGroup, text: str):
        super().__init__(text)
        self.group = group

    def parse(self) -> GroupAlgebraElement:
        total = GroupAlgebraElement(self.group)
        sign = 1
        if self.at("-"):
            self.take()
            sign = -1
        while True:
            total = total + self.term(sign)
            if not self.at("+", "-"):
                break
            sign = 1 if self.take()[1] == "+" else -1
        self.finish()
        return total

    def integer(self) -> int:
        neg = False
        if self.at("-"):
            self.take()
            neg = True
        tok = self.take()
        if tok[0] != "num":
            self.fail("expected an integer", tok)
        return -tok[1] if neg else tok[1]

    def term(self, sign: int) -> GroupAlgebraElement:
        coeff = Fraction(sign)
        if self.peek()[0] == "num":
            coeff *= self.number()
            self.expect("*")
        tok = self.take()
        if tok[0] != "id" or tok[1] != "chi":
            self.fail("expected chi(...)", tok)
        self.expect("(")
        coords = []
        if not self.at(")"):
            coords.append(self.integer())
            while self.at(",", ";"):
                self.take()
                coords.append(self.integer())
        self.expect(")")
        return GroupAlgebraElement.chi(self.group.element(coords), coeff)


def parse_group_algebra_element(group: AbelianGroup, text: str) -> GroupAlgebraElement:
    return _GroupAlgebraParser(group, text).parse()


def parse_degree(group: AbelianGroup, text: str) -> GroupElement:
    try:
        coords = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInputError(f"degree {text!r}: {exc.msg}") from None
    return group.element(_int_list(coords, f"degree {text!r}"))
