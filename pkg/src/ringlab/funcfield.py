"""Exact arithmetic in GF(2)[t] and its fraction field GF(2)(t).

Polynomials over GF(2) are encoded as nonnegative ints: bit i is the
coefficient of t^i (the zero polynomial is 0).  Addition is xor, which
makes every operation here branch-free and exact.  Rational functions
are kept in canonical reduced form (gcd(num, den) = 1, den != 0; every
nonzero polynomial over GF(2) is already monic).
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import HypothesisError

NEG_INFINITY = float("-inf")


def poly_degree(a: int):
    """Degree of a bit-encoded polynomial; -inf for the zero polynomial."""
    if a == 0:
        return NEG_INFINITY
    return a.bit_length() - 1


def poly_add(a: int, b: int) -> int:
    return a ^ b


def poly_mul(a: int, b: int) -> int:
    res = 0
    while a:
        if a & 1:
            res ^= b
        a >>= 1
        b <<= 1
    return res


def poly_divmod(a: int, b: int) -> tuple[int, int]:
    if b == 0:
        raise ZeroDivisionError("polynomial division by zero")
    db = b.bit_length()
    q = 0
    while a.bit_length() >= db:
        shift = a.bit_length() - db
        q |= 1 << shift
        a ^= b << shift
    return q, a


def poly_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, poly_divmod(a, b)[1]
    return a


def poly_derivative(a: int) -> int:
    # Formal derivative mod 2: only odd-exponent terms survive.
    shifted = a >> 1
    if shifted == 0:
        return 0
    mask = ((1 << (2 * shifted.bit_length())) - 1) // 3  # bits at even positions
    return shifted & mask


def poly_is_square(a: int) -> bool:
    # Over GF(2), a is a square iff every exponent is even (Frobenius).
    return poly_derivative(a) == 0


def poly_sqrt(a: int) -> int:
    if not poly_is_square(a):
        raise ValueError("polynomial is not a square")
    r = 0
    i = 0
    while a:
        if a & 1:
            r |= 1 << i
        a >>= 2
        i += 1
    return r


def poly_pow(a: int, n: int) -> int:
    res = 1
    while n:
        if n & 1:
            res = poly_mul(res, a)
        a = poly_mul(a, a)
        n >>= 1
    return res


def poly_format(a: int) -> str:
    if a == 0:
        return "0"
    terms = []
    for i in range(a.bit_length() - 1, -1, -1):
        if (a >> i) & 1:
            if i == 0:
                terms.append("1")
            elif i == 1:
                terms.append("t")
            else:
                terms.append(f"t^{i}")
    return "+".join(terms)


@functools.total_ordering
@dataclass(frozen=True)
class RatFunc:
    """A reduced fraction num/den of GF(2)[t] polynomials (den monic, nonzero)."""

    num: int
    den: int

    @staticmethod
    def make(num: int, den: int = 1) -> "RatFunc":
        if den == 0:
            raise ZeroDivisionError("rational function with zero denominator")
        if num == 0:
            return RatFunc(0, 1)
        g = poly_gcd(num, den)
        if g != 1:
            num = poly_divmod(num, g)[0]
            den = poly_divmod(den, g)[0]
        return RatFunc(num, den)

    def __bool__(self) -> bool:
        return self.num != 0

    def __add__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc.make(
            poly_add(poly_mul(self.num, other.den), poly_mul(other.num, self.den)),
            poly_mul(self.den, other.den),
        )

    # Characteristic 2: subtraction and negation coincide with addition/identity.
    __sub__ = __add__

    def __neg__(self) -> "RatFunc":
        return self

    def __mul__(self, other: "RatFunc") -> "RatFunc":
        return RatFunc.make(poly_mul(self.num, other.num), poly_mul(self.den, other.den))

    def __truediv__(self, other: "RatFunc") -> "RatFunc":
        if other.num == 0:
            raise ZeroDivisionError("division by the zero rational function")
        return RatFunc.make(poly_mul(self.num, other.den), poly_mul(self.den, other.num))

    def reciprocal(self) -> "RatFunc":
        if self.num == 0:
            raise ZeroDivisionError("zero has no reciprocal")
        return RatFunc(self.den, self.num)

    def __lt__(self, other: "RatFunc") -> bool:
        return (self.den, self.num) < (other.den, other.num)

    def __str__(self) -> str:
        num_s = poly_format(self.num)
        if self.den == 1:
            return num_s
        if "+" in num_s:
            num_s = f"({num_s})"
        den_s = poly_format(self.den)
        if "+" in den_s:
            den_s = f"({den_s})"
        return f"{num_s}/{den_s}"


RF_ZERO = RatFunc(0, 1)
RF_ONE = RatFunc(1, 1)
RF_T = RatFunc(2, 1)


def ratfunc_arith(op: str, f: RatFunc, g: RatFunc) -> RatFunc:
    """Apply a named binary operation; `div` requires g != 0."""
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "div":
        return f / g
    raise ValueError(f"unknown operation {op!r}")


def is_square(f: RatFunc) -> bool:
    """Whether f = g^2 for some rational function g over GF(2)."""
    return poly_is_square(f.num) and poly_is_square(f.den)


def _flatten_2x2(a):
    entries = list(a[0]) + list(a[1]) if len(a) == 2 and not isinstance(a[0], RatFunc) else list(a)
    if len(entries) != 4 or not all(isinstance(e, RatFunc) for e in entries):
        raise HypothesisError("expected a 2x2 matrix of rational functions")
    return entries


def translates_invertible(a) -> str:
    """Decide whether a + b*I is invertible for every scalar b in GF(2)(t).

    `a` is a 2x2 matrix over GF(2)(t), given row-major (flat 4-tuple or
    nested rows).  det(a + b*I) = b^2 + tr(a)*b + det(a) in characteristic 2,
    so for tr(a) = 0 a singular translate exists iff det(a) is a square.
    The tr(a) != 0 case (Artin-Schreier root finding) is reported, not solved.
    """
    a11, a12, a21, a22 = _flatten_2x2(a)
    trace = a11 + a22
    if trace.num != 0:
        return "undecided"
    det = a11 * a22 + a12 * a21
    if det.num == 0:
        return "no"
    return "no" if is_square(det) else "yes"


def exceptional_example_check(case_id: str):
    """Run one of the characteristic-2 example verifications.

    `remark10i` works in the finite ring M(2,GF(2)); `remark10ii` and
    `example4` work criterion-level in M(2,FF(2)).  Returns a CheckResult.
    """
    from . import predicates, rings, sets
    from .result import CheckResult, SubAssertion

    subs: list[SubAssertion] = []

    def check(name: str, ok: bool, witness: str | None = None) -> None:
        subs.append(SubAssertion(name, bool(ok), witness))

    if case_id == "remark10i":
        ring = rings.build_ring("M(2,GF(2))")
        swap = rings.evaluate(ring, "[[0,1],[1,0]]")
        lie_l = sets.closure(ring, [ring.one, swap], "additive")
        flags = sets.set_predicates(ring, lie_l)
        check("L is a Lie ideal", flags.is_lie_ideal)
        check("L is noncentral", not flags.is_central)
        check("[L,L] = 0", sets.bracket_set(ring, lie_l, lie_l).is_zero_set)
        a = rings.evaluate(ring, "[[1,1],[1,1]]")
        check("a != 0", a != ring.zero, "[[1,1],[1,1]]")
        check(
            "aLa = 0",
            all(ring.mul(ring.mul(a, g), a) == ring.zero for g in lie_l.span_gens()),
            "[[1,1],[1,1]]",
        )
        verdict = predicates.x_semiprime(ring, lie_l)
        check("x_semiprime(R,L) fails", not verdict.holds)
        check(
            "canonical witness is a",
            verdict.witness == a,
            ring.format_elem(verdict.witness) if verdict.witness is not None else None,
        )
        check("x_prime(R,L) fails", not predicates.x_prime(ring, lie_l).holds)
        ring_text = "M(2,GF(2))"
    elif case_id in ("remark10ii", "example4"):
        ring = rings.build_ring("M(2,FF(2))")
        one, t = RF_ONE, RF_T
        zero = RF_ZERO
        ident = ring.one
        if case_id == "remark10ii":
            # eta = t; L = F-span{I, s} with s = [[0,1],[t,0]], L = [a,R].
            s = (zero, one, t, zero)
            a = (one, one, t, one)
        else:
            # L keeps the eta-free swap shape; b = [[1,1],[t,1]] drives the derivation.
            s = (zero, one, one, zero)
            a = (one, one, one, one)
        span = (ident, s)
        check(
            "[L,L] = 0 on the spanning set",
            all(ring.bracket(u, v) == ring.zero for u in span for v in span),
        )
        check(
            "L is noncentral",
            any(ring.mul(s, g) != ring.mul(g, s) for g in (ring.e_unit(1, 1),)),
        )
        if case_id == "remark10ii":
            check("spanning set is independent over F", s[0] == zero and s[1] != zero)
            tv = translates_invertible(a)
            check("a + b invertible for all scalars b", tv == "yes", "[[1,1],[t,1]]")
            check(
                "criterion-level conclusion: ring is L-prime",
                tv == "yes",
            )
        else:
            b = (one, one, t, one)
            img_i = ring.bracket(b, ident)
            img_s = ring.bracket(b, s)

            def in_l(m) -> bool:
                return m[0] == m[3] and m[1] == m[2]

            check("d(L) inside L on the spanning set", img_i == ring.zero and in_l(img_s))
            check(
                "aLa = 0 replays",
                all(ring.mul(ring.mul(a, g), a) == ring.zero for g in span),
                "[[1,1],[1,1]]",
            )
            check("a != 0, so d(L)-semiprimeness fails", a != ring.zero, "[[1,1],[1,1]]")
            check(
                "d(R)-semiprimeness criterion holds",
                translates_invertible(b) == "yes",
                "[[1,1],[t,1]]",
            )
        ring_text = "M(2,FF(2))"
    else:
        raise ValueError(f"unknown exceptional example {case_id!r}")

    verdict = "pass" if all(s.ok for s in subs) else "fail"
    return CheckResult(check_id=case_id, ring=ring_text, verdict=verdict, sub_assertions=tuple(subs))
