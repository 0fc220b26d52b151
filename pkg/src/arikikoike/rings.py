"""
Exact coefficient rings.

Two kinds of coefficient domain are used throughout the package:

* ``SymbolicDomain(m)``: the ring Z[q, q^-1, u_1, ..., u_m], elements are
  :class:`LaurentPoly`.  Only powers of ``q`` are ever inverted.
* ``Specialization``: a ring map into an exact field (flint ``fmpq`` for the
  rationals, flint ``nmod`` for a prime field) fixing values of q and the u_i.

Both domains expose the same small surface (``q``, ``qinv``, ``u``, ``one``,
``zero``, ``coerce``, ``format_scalar``, ``parse_scalar``) so the algebra code
can be written once against Python's arithmetic operators.

Text syntax for polynomials: ``-3*q^-2*u1^2*u3 + 1``.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Mapping, Union

import flint

__all__ = [
    "LaurentPoly", "SymbolicDomain", "Specialization",
    "specialize", "parse_poly", "parse_specialization", "generic_specialization",
]


Exponent = tuple  # (e_q, e_u1, ..., e_um)


class LaurentPoly:
    """Integer polynomial in u_1..u_m that is Laurent in q.

    Held as ``q^shift * P`` with P a flint ``fmpz_mpoly`` in (q, u_1, .., u_m)
    not divisible by q, so equal values have equal (shift, P) pairs.
    """

    __slots__ = ("_p", "_s", "num_u", "_hash")

    def __init__(self, terms: Mapping[Exponent, int] | None = None, num_u: int = 0):
        width = num_u + 1
        clean = {}
        for exp, c in (terms or {}).items():
            if len(exp) != width:
                raise ValueError(f"exponent {exp} does not match {num_u} u-variables")
            if any(e < 0 for e in exp[1:]):
                raise ValueError(f"negative u-exponent in {exp}")
            if c:
                clean[tuple(exp)] = clean.get(tuple(exp), 0) + int(c)
        shift = min((e[0] for e in clean), default=0)
        ctx = _mpoly_ctx(num_u)
        p = ctx.from_dict({(e[0] - shift,) + e[1:]: c for e, c in clean.items() if c})
        self._set(p, shift, num_u)

    def _set(self, p, shift: int, num_u: int) -> None:
        if p.is_zero():
            shift = 0
        else:
            k = p.term_content().degrees()[0]
            if k:
                p = p // _mpoly_ctx(num_u).gen(0) ** k
                shift += k
        self._p = p
        self._s = shift
        self.num_u = num_u
        self._hash = None

    @classmethod
    def _make(cls, p, shift: int, num_u: int) -> "LaurentPoly":
        out = cls.__new__(cls)
        out._set(p, shift, num_u)
        return out

    # constructors
    @classmethod
    def const(cls, c: int, num_u: int) -> "LaurentPoly":
        return cls._make(_mpoly_ctx(num_u).constant(int(c)), 0, num_u)

    @classmethod
    def q(cls, num_u: int, k: int = 1) -> "LaurentPoly":
        return cls._make(_mpoly_ctx(num_u).constant(1), k, num_u)

    @classmethod
    def u(cls, i: int, num_u: int) -> "LaurentPoly":
        if not 1 <= i <= num_u:
            raise ValueError(f"u{i} out of range for {num_u} u-variables")
        return cls._make(_mpoly_ctx(num_u).gen(i), 0, num_u)

    @property
    def terms(self) -> dict:
        """Sparse map ``(e_q, e_u1, .., e_um) -> coefficient``."""
        s = self._s
        return {(e[0] + s,) + tuple(e[1:]): int(c) for e, c in self._p.to_dict().items()}

    # coercion helpers
    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.num_u != self.num_u:
                raise ValueError(
                    f"mismatched u-variable counts: {self.num_u} vs {other.num_u}")
            return other
        if isinstance(other, int):
            return LaurentPoly.const(other, self.num_u)
        return NotImplemented

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def __bool__(self):
        return not self._p.is_zero()

    def __eq__(self, other):
        if isinstance(other, int):
            return self._s == 0 and self._p == other
        if isinstance(other, LaurentPoly):
            return (self.num_u == other.num_u and self._s == other._s
                    and self._p == other._p)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.num_u, frozenset(self.terms.items())))
        return self._hash

    def __neg__(self):
        return LaurentPoly._make(-self._p, self._s, self.num_u)

    def __pos__(self):
        return self

    def _aligned(self, other: "LaurentPoly"):
        q = _mpoly_ctx(self.num_u).gen(0)
        s = min(self._s, other._s)
        a = self._p if self._s == s else self._p * q ** (self._s - s)
        b = other._p if other._s == s else other._p * q ** (other._s - s)
        return a, b, s

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other._p.is_zero():
            return self
        if self._p.is_zero():
            return other
        a, b, s = self._aligned(other)
        return LaurentPoly._make(a + b, s, self.num_u)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other._p.is_zero():
            return self
        a, b, s = self._aligned(other)
        return LaurentPoly._make(a - b, s, self.num_u)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly._make(self._p * other, self._s, self.num_u)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        # a product of q-free-content polynomials has no q content
        out = LaurentPoly.__new__(LaurentPoly)
        out._p = self._p * other._p
        out._s = self._s + other._s if not out._p.is_zero() else 0
        out.num_u = self.num_u
        out._hash = None
        return out

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return self.unit_inverse() ** (-k)
        return LaurentPoly._make(self._p ** k, self._s * k, self.num_u)

    def is_unit(self) -> bool:
        """True for +-q^k, the only units of the ring."""
        return self._p == 1 or self._p == -1

    def unit_inverse(self) -> "LaurentPoly":
        if not self.is_unit():
            raise ZeroDivisionError(f"{self} is not a unit of Z[q^(+-1), u]")
        return LaurentPoly._make(self._p, -self._s, self.num_u)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.unit_inverse()

    def degree_q(self) -> tuple[int, int]:
        return self._s, self._s + self._p.degrees()[0]

    # text form
    def _sorted_terms(self):
        return sorted(self.terms.items(),
                      key=lambda t: (-sum(t[0][1:]), tuple(-x for x in t[0][1:]), -t[0][0]))

    def __str__(self):
        if self._p.is_zero():
            return "0"
        pieces = []
        for exp, c in self._sorted_terms():
            factors = []
            if exp[0] == 1:
                factors.append("q")
            elif exp[0]:
                factors.append(f"q^{exp[0]}")
            for i, e in enumerate(exp[1:], start=1):
                if e == 1:
                    factors.append(f"u{i}")
                elif e:
                    factors.append(f"u{i}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"LaurentPoly({str(self)!r}, num_u={self.num_u})"


@lru_cache(maxsize=None)
def _mpoly_ctx(num_u: int):
    names = ("q",) + tuple(f"u{i}" for i in range(1, num_u + 1))
    return flint.fmpz_mpoly_ctx.get(names, "lex")


# ---------------------------------------------------------------- parsing

_TOKEN = re.compile(r"\s*(?:(\d+)|(q)|u(\d+)|(\^)|(\*)|(\+)|(-)|(\()|(\)))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    pos, out = 0, []
    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at {text[pos:]!r}")
        pos = m.end()
        num, q, u, caret, star, plus, minus, lp, rp = m.groups()
        if num is not None:
            out.append(("num", num))
        elif q:
            out.append(("q", q))
        elif u is not None:
            out.append(("u", u))
        else:
            out.append(("op", caret or star or plus or minus or lp or rp))
    return out


class _PolyParser:
    def __init__(self, text: str, num_u: int):
        self.toks = _tokenize(text)
        self.i = 0
        self.num_u = num_u

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, value=None):
        tok = self.peek()
        if value is not None and tok[1] != value:
            raise ValueError(f"expected {value!r}, found {tok[1]!r}")
        self.i += 1
        return tok

    def parse(self) -> LaurentPoly:
        if not self.toks:
            raise ValueError("empty polynomial")
        p = self.expr()
        if self.i != len(self.toks):
            raise ValueError(f"trailing input near token {self.peek()[1]!r}")
        return p

    def expr(self):
        p = self.term()
        while self.peek()[1] in ("+", "-"):
            op = self.take()[1]
            t = self.term()
            p = p + t if op == "+" else p - t
        return p

    def term(self):
        p = self.unary()
        while self.peek()[1] == "*":
            self.take()
            p = p * self.unary()
        return p

    def unary(self):
        if self.peek()[1] == "-":
            self.take()
            return -self.unary()
        if self.peek()[1] == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        base = self.atom()
        if self.peek()[1] == "^":
            self.take()
            sign = 1
            if self.peek()[1] == "-":
                self.take()
                sign = -1
            kind, val = self.take()
            if kind != "num":
                raise ValueError("exponent must be an integer")
            return base ** (sign * int(val))
        return base

    def atom(self):
        kind, val = self.take()
        if kind == "num":
            return LaurentPoly.const(int(val), self.num_u)
        if kind == "q":
            return LaurentPoly.q(self.num_u)
        if kind == "u":
            return LaurentPoly.u(int(val), self.num_u)
        if val == "(":
            p = self.expr()
            self.take(")")
            return p
        raise ValueError(f"unexpected token {val!r}")


def parse_poly(text: str, num_u: int) -> LaurentPoly:
    """Parse ``-3*q^-2*u1^2*u3 + 1`` style text (parentheses allowed)."""
    return _PolyParser(text, num_u).parse()


FieldScalar = Union[flint.fmpq, flint.nmod]


# ---------------------------------------------------------------- domains

class SymbolicDomain:
    """Z[q^(+-1), u_1..u_m] as a coefficient domain."""

    is_field = False

    def __init__(self, m: int):
        if m < 1:
            raise ValueError("need m >= 1")
        self.m = m
        self.one = LaurentPoly.const(1, m)
        self.zero = LaurentPoly.const(0, m)
        self.q = LaurentPoly.q(m)
        self.qinv = LaurentPoly.q(m, -1)
        self.u = tuple(LaurentPoly.u(i, m) for i in range(1, m + 1))

    def coerce(self, x) -> LaurentPoly:
        if isinstance(x, LaurentPoly):
            if x.num_u != self.m:
                raise ValueError("polynomial has the wrong number of u-variables")
            return x
        if isinstance(x, int):
            return LaurentPoly.const(x, self.m)
        if isinstance(x, str):
            return parse_poly(x, self.m)
        raise TypeError(f"cannot coerce {x!r} into the symbolic domain")

    def evaluate(self, p: LaurentPoly) -> LaurentPoly:
        return self.coerce(p)

    def inverse(self, x: LaurentPoly) -> LaurentPoly:
        return x.unit_inverse()

    def format_scalar(self, x) -> str:
        return str(x)

    def parse_scalar(self, text: str) -> LaurentPoly:
        return parse_poly(text, self.m)

    def describe(self) -> str:
        return "symbolic"

    def __eq__(self, other):
        return isinstance(other, SymbolicDomain) and other.m == self.m

    def __hash__(self):
        return hash(("symbolic", self.m))

    def __repr__(self):
        return f"SymbolicDomain(m={self.m})"


def _to_fraction(x) -> Fraction:
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, flint.fmpq):
        return Fraction(int(x.p), int(x.q))
    if isinstance(x, flint.nmod):
        return Fraction(int(x))
    return Fraction(x)


class Specialization:
    """A ring map q -> q_val, u_i -> u_vals[i-1] into Q or GF(prime)."""

    is_field = True

    def __init__(self, q, u: Iterable, prime: int | None = None):
        self.prime = prime
        if prime is not None and (
                prime < 2 or any(prime % d == 0 for d in range(2, math.isqrt(prime) + 1))):
            raise ValueError(f"{prime} is not prime")
        self.q = self._elt(q)
        self.u = tuple(self._elt(x) for x in u)
        if not self.u:
            raise ValueError("need at least one u-value")
        if not self.q:
            raise ValueError("q must be invertible in the target field")
        self.m = len(self.u)
        self.one = self._elt(1)
        self.zero = self._elt(0)
        self.qinv = self.one / self.q

    def _elt(self, x):
        if self.prime is None:
            f = _to_fraction(x)
            return flint.fmpq(f.numerator, f.denominator)
        f = _to_fraction(x)
        if f.denominator % self.prime == 0:
            raise ValueError(f"{x} has no image in GF({self.prime})")
        return flint.nmod(f.numerator, self.prime) / flint.nmod(f.denominator, self.prime)

    @property
    def field(self) -> str:
        return "Q" if self.prime is None else f"Fp:{self.prime}"

    @cached_property
    def e(self) -> float | int:
        """Least l with 1 + q + ... + q^(l-1) = 0, or ``math.inf``."""
        if self.prime is None:
            # over Q the partial sums vanish only for q = -1
            return 2 if self.q == -1 else math.inf
        s, power = self.zero, self.one
        for l in range(1, self.prime + 1):
            s = s + power
            if not s:
                return l
            power = power * self.q
        return math.inf

    def coerce(self, x):
        if isinstance(x, LaurentPoly):
            return self.evaluate(x)
        if isinstance(x, str):
            return self.parse_scalar(x)
        return self._elt(x)

    def evaluate(self, p: LaurentPoly):
        if p.num_u != self.m:
            raise ValueError(
                f"polynomial in {p.num_u} u-variables cannot be specialized with m={self.m}")
        total = self.zero
        for exp, c in p.terms.items():
            term = self._elt(c) * self.q ** exp[0]
            for val, k in zip(self.u, exp[1:]):
                if k:
                    term = term * val ** k
            total = total + term
        return total

    def inverse(self, x):
        return self.one / x

    def format_scalar(self, x) -> str:
        return str(x)

    def parse_scalar(self, text: str):
        return self._elt(text)

    def describe(self) -> str:
        us = ",".join(str(x) for x in self.u)
        out = f"q={self.q},u=[{us}]"
        if self.prime is not None:
            out += f",field=Fp:{self.prime}"
        return out

    def _key(self):
        return (self.prime, str(self.q), tuple(str(x) for x in self.u))

    def __eq__(self, other):
        return isinstance(other, Specialization) and other._key() == self._key()

    def __hash__(self):
        return hash(self._key())

    def __repr__(self):
        return f"Specialization({self.describe()})"


def specialize(p: LaurentPoly, s: Specialization) -> FieldScalar:
    return s.evaluate(p)


_SPEC_RE = re.compile(
    r"^\s*q\s*=\s*(?P<q>[-+]?\d+(?:/\d+)?)\s*,\s*u\s*=\s*\[(?P<u>[^\]]*)\]"
    r"(?:\s*,\s*field\s*=\s*(?P<field>Q|Fp:\d+))?\s*$")


def parse_specialization(text: str) -> Specialization:
    """Parse ``q=<rat>,u=[<rat>,...]`` with an optional ``,field=Fp:<prime>``."""
    m = _SPEC_RE.match(text)
    if not m:
        raise ValueError(f"bad specialization string {text!r}")
    us = [x.strip() for x in m.group("u").split(",") if x.strip()]
    prime = None
    field = m.group("field")
    if field and field.startswith("Fp:"):
        prime = int(field[3:])
    return Specialization(m.group("q"), us, prime=prime)


def _odd_primes():
    n = 3
    while True:
        if all(n % d for d in range(2, math.isqrt(n) + 1)):
            yield n
        n += 2


def generic_specialization(m: int) -> Specialization:
    """Rationals with q = 2 and u_i the i-th prime >= 3."""
    gen = _odd_primes()
    return Specialization(2, [next(gen) for _ in range(m)])
