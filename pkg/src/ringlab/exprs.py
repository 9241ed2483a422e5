"""Parsers for element expressions and subset expressions.

Element grammar: signed integers, matrix literals [[...],[...]], product
literals (a, b, ...), matrix units e(i,j), the identity I, the GF(p^k)
generator x (k >= 2), the FF(2) generator t, and the operators + - * / ^
with parentheses.  Inside a product ring, parentheses always open a
product literal.

Subset grammar: Id | U | N | Z | E | R | [X,Y] | X*Y | pow(X,n) |
elpow(X,n) | add{e,...} | lie{e,...} | ideal{e,...} | annl(X) | annr(X),
plus names bound by the caller (the lattice CLI binds L).
"""

from __future__ import annotations

import re

from . import sets
from .errors import ExprError
from .funcfield import RF_T, RatFunc
from .rings import FuncFieldRing, GFRing, MatrixRing, ProductRing, Ring
from .sets import ElemSet

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m or m.end() == pos:
            raise ExprError(f"cannot tokenize {text!r} at position {pos}")
        pos = m.end()
        num, name, sym = m.groups()
        if num is not None:
            tokens.append(("num", num))
        elif name is not None:
            tokens.append(("name", name))
        elif sym.strip():
            if sym not in "+-*/^()[]{},":
                raise ExprError(f"unexpected character {sym!r} in {text!r}")
            tokens.append(("sym", sym))
    tokens.append(("end", ""))
    return tokens


class _Parser:
    def __init__(self, text: str, ring: Ring, env: dict[str, ElemSet] | None = None):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0
        self.ring = ring
        self.env = env or {}

    # -- token plumbing ------------------------------------------------------

    def peek(self) -> tuple[str, str]:
        return self.tokens[self.pos]

    def next(self) -> tuple[str, str]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, sym: str) -> None:
        kind, val = self.next()
        if kind != "sym" or val != sym:
            raise ExprError(f"expected {sym!r} in {self.text!r}, found {val!r}")

    def at_sym(self, sym: str) -> bool:
        kind, val = self.peek()
        return kind == "sym" and val == sym

    def done(self) -> bool:
        return self.peek()[0] == "end"

    # -- element expressions --------------------------------------------------

    def parse_element_full(self):
        value = self.element_expr(self.ring)
        if not self.done():
            raise ExprError(f"trailing input after element expression in {self.text!r}")
        return value

    def element_expr(self, ring: Ring):
        value = self.element_term(ring)
        while True:
            if self.at_sym("+"):
                self.next()
                value = ring.add(value, self.element_term(ring))
            elif self.at_sym("-"):
                self.next()
                value = ring.sub(value, self.element_term(ring))
            else:
                return value

    def element_term(self, ring: Ring):
        value = self.element_factor(ring)
        while True:
            if self.at_sym("*"):
                self.next()
                value = ring.mul(value, self.element_factor(ring))
            elif self.at_sym("/"):
                self.next()
                divisor = self.element_factor(ring)
                inv = ring.inverse(divisor)
                if inv is None:
                    raise ExprError(
                        f"division by a non-unit {ring.format_elem(divisor)} in {ring.spec_text}"
                    )
                value = ring.mul(value, inv)
            else:
                return value

    def element_factor(self, ring: Ring):
        if self.at_sym("-"):
            self.next()
            return ring.neg(self.element_factor(ring))
        value = self.element_atom(ring)
        while self.at_sym("^"):
            self.next()
            kind, val = self.next()
            if kind != "num":
                raise ExprError(f"exponent must be an integer in {self.text!r}")
            value = ring.pow_elem(value, int(val))
        return value

    def element_atom(self, ring: Ring):
        kind, val = self.peek()
        if kind == "num":
            self.next()
            return ring.int_elem(int(val))
        if kind == "name":
            if val == "I":
                self.next()
                return ring.one
            if val == "e":
                self.next()
                self.expect("(")
                i = self._int()
                self.expect(",")
                j = self._int()
                self.expect(")")
                if not isinstance(ring, MatrixRing):
                    raise ExprError(f"e({i},{j}) only makes sense in a matrix ring")
                return ring.e_unit(i, j)
            if val == "t":
                self.next()
                if not isinstance(ring, FuncFieldRing):
                    raise ExprError("the generator t lives in FF(2) only")
                return RF_T
            if val == "x":
                self.next()
                if not isinstance(ring, GFRing) or ring.k < 2:
                    raise ExprError("the generator x lives in GF(p^k) with k >= 2 only")
                return ring.additive_generators[1]
            raise ExprError(f"unknown element constant {val!r} in {self.text!r}")
        if kind == "sym" and val == "[":
            return self._matrix_literal(ring)
        if kind == "sym" and val == "(":
            self.next()
            if isinstance(ring, ProductRing):
                parts = []
                for idx, factor in enumerate(ring.factors):
                    if idx:
                        self.expect(",")
                    parts.append(self.element_expr(factor))
                self.expect(")")
                return tuple(parts)
            value = self.element_expr(ring)
            self.expect(")")
            return value
        raise ExprError(f"unexpected token {val!r} in element expression {self.text!r}")

    def _int(self) -> int:
        kind, val = self.next()
        if kind != "num":
            raise ExprError(f"expected integer, found {val!r} in {self.text!r}")
        return int(val)

    def _matrix_literal(self, ring: Ring):
        if not isinstance(ring, MatrixRing):
            raise ExprError(f"matrix literal is invalid in {ring.spec_text}")
        n = ring.n
        self.expect("[")
        rows = []
        while True:
            self.expect("[")
            row = [self.element_expr(ring.base)]
            while self.at_sym(","):
                self.next()
                row.append(self.element_expr(ring.base))
            self.expect("]")
            rows.append(row)
            if self.at_sym(","):
                self.next()
                continue
            break
        self.expect("]")
        if len(rows) != n or any(len(r) != n for r in rows):
            raise ExprError(
                f"matrix literal dimension mismatch: expected {n}x{n} in {ring.spec_text}"
            )
        payload = tuple(entry for row in rows for entry in row)
        if not ring.validate_payload(payload):
            raise ExprError(f"literal is not a valid element of {ring.spec_text}")
        return payload

    # -- subset expressions ----------------------------------------------------

    def parse_subset_full(self) -> ElemSet:
        value = self.subset_expr()
        if not self.done():
            raise ExprError(f"trailing input after subset expression in {self.text!r}")
        return value

    def subset_expr(self) -> ElemSet:
        value = self.subset_atom()
        while self.at_sym("*"):
            self.next()
            value = sets.derived_set(self.ring, "product", value, self.subset_atom())
        return value

    def subset_atom(self) -> ElemSet:
        ring = self.ring
        kind, val = self.peek()
        if kind == "sym" and val == "[":
            self.next()
            a = self.subset_expr()
            self.expect(",")
            b = self.subset_expr()
            self.expect("]")
            return sets.bracket_set(ring, a, b)
        if kind != "name":
            raise ExprError(f"unexpected token {val!r} in subset expression {self.text!r}")
        self.next()
        if val == "R":
            return sets.full_set(ring)
        if val in ("Id", "U", "N", "Z", "E"):
            return sets.special_subset(ring, val)
        if val in ("pow", "elpow"):
            self.expect("(")
            a = self.subset_expr()
            self.expect(",")
            n = self._int()
            self.expect(")")
            op = "power_set" if val == "pow" else "elementwise_power"
            return sets.derived_set(ring, op, a, n)
        if val in ("annl", "annr"):
            self.expect("(")
            a = self.subset_expr()
            self.expect(")")
            return sets.annihilator(ring, a, "left" if val == "annl" else "right")
        if val in ("add", "lie", "ideal"):
            self.expect("{")
            elems = [self.element_expr(ring)]
            while self.at_sym(","):
                self.next()
                elems.append(self.element_expr(ring))
            self.expect("}")
            return sets.closure(ring, elems, "additive" if val == "add" else val)
        if val in self.env:
            return self.env[val]
        raise ExprError(f"unknown subset name {val!r} in {self.text!r}")


def parse_element(ring: Ring, text: str):
    return _Parser(text, ring).parse_element_full()


def parse_subset(ring: Ring, text: str, env: dict[str, ElemSet] | None = None) -> ElemSet:
    return _Parser(text, ring, env).parse_subset_full()
