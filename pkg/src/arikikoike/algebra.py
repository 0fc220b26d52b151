"""
The Ariki-Koike algebra H = H_m^r in the normal-form basis

    L_1^{c_1} ... L_r^{c_r} T_w,   0 <= c_i <= m - 1,  w in S_r.

Elements are sparse maps ``(c, w) -> coefficient`` held in normal form.

Multiplication folds the left factor onto the right one.  Writing the left
factor as ``sum L^c T_w``, the product ``L^c T_w y`` is computed as

1. ``T_w y``: left multiplication by T_{i_l}, ..., T_{i_1} along a reduced word
   of w.  Left multiplication by T_i moves T_i through a monomial f in the L's
   by ``T_i f = s_i(f) T_i + (q - 1) L_{i+1} (f - s_i f) / (L_{i+1} - L_i)``,
   which is the multiplicative closure of the two local rules
   ``T_i L_i = L_{i+1} T_i - (q-1) L_{i+1}`` and
   ``T_i L_{i+1} = L_i T_i + (q-1) L_{i+1}``
   (T_i commutes with the other L_k).  No exponent ever exceeds the largest
   exponent already present, so the result stays in normal form; the T-part is
   then handled with the quadratic relation.
2. ``L^c (L^d T_v)``: exponents add, and an overflowing ``L_j^m`` is replaced
   by its normal form: for j = 1 through the characteristic relation of T_0,
   for j > 1 through
   ``L_j^m = q^-1 T_{j-1} L_{j-1}^m T_{j-1} + (1 - q^-1) sum_c L_j^c L_{j-1}^{m-c} T_{j-1}``.

Termination: step 1 decreases the word length of the pending T-part; in step
2 the rewrite of ``L^e`` at the highest overflowing index j never raises the
total L-degree and strictly lowers e_j while leaving e_{j+1}, .., e_r alone.
Correctness of the resulting product is certified empirically (defining
relations, associativity, regular representation), not by a confluence proof.

All caches live on the :class:`AlgebraContext`; every writer computes the same
value, so a lost race only repeats work.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Mapping

from .rings import LaurentPoly, Specialization, SymbolicDomain
from .symcomb import (
    all_perms, identity, perm_inverse, perm_length, perm_mul, reduced_word, s, young_subgroup,
)

__all__ = [
    "AlgebraContext", "AlgebraElement", "context",
    "generator", "jucys_murphy", "from_word", "iota", "pr",
    "subalgebra_membership", "commutes_with_subalgebra", "hecke_element",
    "T", "T_inverse", "L_monomial",
]


class AlgebraContext:
    """Parameters (m, r) plus a coefficient domain; owns the reduction caches."""

    def __init__(self, m: int, r: int, domain=None):
        if m < 1 or r < 1:
            raise ValueError("need m >= 1 and r >= 1")
        if domain is None:
            domain = SymbolicDomain(m)
        if domain.m != m:
            raise ValueError(f"domain has {domain.m} u-parameters, expected {m}")
        self.m = m
        self.r = r
        self.domain = domain
        self.one = domain.one
        self.q = domain.q
        self.qinv = domain.qinv
        self.qm1 = domain.q - domain.one
        self.id = identity(r)
        self.zero_c = (0,) * r
        self._left_T: dict = {}
        self._hecke: dict = {}
        self._lpow: dict = {}
        self._lpow_T: dict = {}
        self._top: dict = {}
        self._basis = None
        self._index = None

    # -- identity and basis

    def __eq__(self, other):
        return (isinstance(other, AlgebraContext) and other.m == self.m
                and other.r == self.r and other.domain == self.domain)

    def __hash__(self):
        return hash((self.m, self.r, self.domain))

    def __repr__(self):
        return f"AlgebraContext(m={self.m}, r={self.r}, {self.domain.describe()})"

    @property
    def dimension(self) -> int:
        return len(self.basis())

    def basis(self) -> list:
        """Basis keys (c, w) sorted by c lexicographically, then w."""
        if self._basis is None:
            cs = itertools.product(range(self.m), repeat=self.r)
            self._basis = [(c, w) for c in cs for w in sorted(all_perms(self.r))]
            self._index = {k: i for i, k in enumerate(self._basis)}
        return self._basis

    def index(self, key) -> int:
        self.basis()
        return self._index[key]

    def element(self, terms: Mapping | None = None) -> "AlgebraElement":
        return AlgebraElement(self, dict(terms or {}))

    def basis_element(self, key) -> "AlgebraElement":
        c, w = key
        c, w = tuple(c), tuple(w)
        if len(c) != self.r or any(not 0 <= x < self.m for x in c):
            raise ValueError(f"exponent vector {c} out of bounds")
        if sorted(w) != list(range(1, self.r + 1)):
            raise ValueError(f"{w} is not in S_{self.r}")
        return AlgebraElement(self, {(c, w): self.one})

    def scalar(self, x) -> "AlgebraElement":
        x = self.domain.coerce(x)
        return AlgebraElement(self, {(self.zero_c, self.id): x} if x else {})

    def unit(self) -> "AlgebraElement":
        return self.scalar(1)

    def coords(self, x: "AlgebraElement") -> list:
        """Coordinate vector of x in the fixed basis order."""
        self.basis()
        vec = [self.domain.zero] * len(self._basis)
        for k, c in x.terms.items():
            vec[self._index[k]] = c
        return vec

    def from_coords(self, vec) -> "AlgebraElement":
        basis = self.basis()
        return AlgebraElement(self, {basis[i]: c for i, c in enumerate(vec) if c})

    # -- Hecke part: T_u T_v in H(S_r)

    def hecke_mul(self, u: tuple, v: tuple) -> dict:
        key = (u, v)
        hit = self._hecke.get(key)
        if hit is not None:
            return hit
        terms = {u: self.one}
        for i in reduced_word(v):
            terms = self._hecke_right_gen(terms, i)
        self._hecke[key] = terms
        return terms

    def _hecke_right_gen(self, terms: dict, i: int) -> dict:
        out: dict = {}
        q, qm1 = self.q, self.qm1
        for w, c in terms.items():
            ws = list(w)
            # swapping the values i, i+1 gives w s_i
            a, b = ws.index(i), ws.index(i + 1)
            ws[a], ws[b] = i + 1, i
            ws = tuple(ws)
            if a < b:
                _acc(out, ws, c)
            else:
                _acc(out, ws, c * q)
                _acc(out, w, c * qm1)
        return out

    # -- left multiplication of a basis key by T_i

    def left_T_key(self, i: int, key) -> dict:
        cache_key = (i, key)
        hit = self._left_T.get(cache_key)
        if hit is not None:
            return hit
        c, v = key
        out: dict = {}
        a, b = c[i - 1], c[i]
        # s_i(L^c) T_i T_v
        sc = list(c)
        sc[i - 1], sc[i] = b, a
        sc = tuple(sc)
        if v[i - 1] < v[i]:
            svs = list(v)
            svs[i - 1], svs[i] = v[i], v[i - 1]
            out[(sc, tuple(svs))] = self.one
        else:
            svs = list(v)
            svs[i - 1], svs[i] = v[i], v[i - 1]
            out[(sc, tuple(svs))] = self.q
            _acc(out, (sc, v), self.qm1)
        # (q - 1) L_{i+1} (f - s_i f) / (L_{i+1} - L_i)
        if a != b:
            lo, n = min(a, b), abs(a - b)
            sign = -self.qm1 if a > b else self.qm1
            for x in range(n):
                d = list(c)
                d[i - 1], d[i] = lo + x, lo + n - x
                _acc(out, (tuple(d), v), sign)
        out = {k: val for k, val in out.items() if val}
        self._left_T[cache_key] = out
        return out

    def left_T(self, i: int, terms: dict) -> dict:
        out: dict = {}
        for key, c in terms.items():
            for k2, c2 in self.left_T_key(i, key).items():
                _acc(out, k2, c * c2)
        return _prune(out)

    def left_Tw(self, w: tuple, terms: dict) -> dict:
        for i in reversed(reduced_word(w)):
            terms = self.left_T(i, terms)
        return terms

    def right_Tw(self, terms: dict, v: tuple) -> dict:
        if v == self.id:
            return terms
        out: dict = {}
        for (c, w), coeff in terms.items():
            for w2, c2 in self.hecke_mul(w, v).items():
                _acc(out, (c, w2), coeff * c2)
        return _prune(out)

    # -- L-monomials

    def top_power(self, j: int) -> dict:
        """Normal form of L_j^m."""
        hit = self._top.get(j)
        if hit is not None:
            return hit
        m, r = self.m, self.r
        out: dict = {}
        if j == 1:
            # (L_1 - u_1)...(L_1 - u_m) = 0
            poly = [self.one]  # coefficients of prod (x - u_i), lowest degree first
            for ui in self.domain.u:
                new = [self.domain.zero] * (len(poly) + 1)
                for k, cf in enumerate(poly):
                    new[k + 1] = new[k + 1] + cf
                    new[k] = new[k] - cf * ui
                poly = new
            for k in range(m):
                if poly[k]:
                    c = [0] * r
                    c[0] = k
                    _acc(out, (tuple(c), self.id), -poly[k])
        else:
            prev = self.top_power(j - 1)
            conj = self.right_Tw(self.left_T(j - 1, prev), s(j - 1, r))
            for k, val in conj.items():
                _acc(out, k, val * self.qinv)
            coef = self.one - self.qinv
            sj = s(j - 1, r)
            for cc in range(1, m):
                c = [0] * r
                c[j - 1] = cc
                c[j - 2] = m - cc
                _acc(out, (tuple(c), sj), coef)
        out = _prune(out)
        self._top[j] = out
        return out

    def lpow(self, e: tuple) -> dict:
        """Normal form of L^e for an arbitrary non-negative exponent vector."""
        hit = self._lpow.get(e)
        if hit is not None:
            return hit
        m = self.m
        j = max((k for k in range(self.r) if e[k] >= m), default=None)
        if j is None:
            out = {(e, self.id): self.one}
        else:
            base = list(e)
            base[j] -= m
            out = {}
            for (d, v), coeff in self.top_power(j + 1).items():
                e2 = tuple(x + y for x, y in zip(base, d))
                for k, c2 in self.lpow_T(e2, v).items():
                    _acc(out, k, coeff * c2)
            out = _prune(out)
        self._lpow[e] = out
        return out

    def lpow_T(self, e: tuple, v: tuple) -> dict:
        """Normal form of L^e T_v."""
        key = (e, v)
        hit = self._lpow_T.get(key)
        if hit is not None:
            return hit
        if max(e, default=0) < self.m:
            out = {(e, v): self.one}
        else:
            out = self.right_Tw(self.lpow(e), v)
        self._lpow_T[key] = out
        return out

    # -- products

    def mul_terms(self, x: dict, y: dict) -> dict:
        if not x or not y:
            return {}
        by_w: dict = {}
        for (c, w), a in x.items():
            by_w.setdefault(w, []).append((c, a))
        acc: dict = {}
        for w, cs in by_w.items():
            ty = self.left_Tw(w, y) if w != self.id else y
            for (d, v), b in ty.items():
                for c, a in cs:
                    e = tuple(p + t for p, t in zip(c, d))
                    _acc(acc, (e, v), a * b)
        out: dict = {}
        m = self.m
        for (e, v), coeff in acc.items():
            if not coeff:
                continue
            if max(e) < m:
                _acc(out, (e, v), coeff)
            else:
                for k, c2 in self.lpow_T(e, v).items():
                    _acc(out, k, coeff * c2)
        return _prune(out)


def _acc(d: dict, key, val) -> None:
    cur = d.get(key)
    d[key] = val if cur is None else cur + val


def _prune(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


@lru_cache(maxsize=64)
def context(m: int, r: int, domain=None) -> AlgebraContext:
    """Shared context per (m, r, domain), so caches are reused."""
    return AlgebraContext(m, r, domain)


class AlgebraElement:
    """An element of H in normal form, bound to its context."""

    __slots__ = ("ctx", "terms")

    def __init__(self, ctx: AlgebraContext, terms: dict):
        self.ctx = ctx
        self.terms = {k: v for k, v in terms.items() if v}

    def _check(self, other: "AlgebraElement") -> None:
        if other.ctx is not self.ctx and other.ctx != self.ctx:
            raise ValueError(f"context mismatch: {self.ctx} vs {other.ctx}")

    def _wrap(self, other):
        if isinstance(other, AlgebraElement):
            self._check(other)
            return other
        return self.ctx.scalar(other)

    def __add__(self, other):
        other = self._wrap(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            _acc(out, k, v)
        return AlgebraElement(self.ctx, out)

    __radd__ = __add__

    def __neg__(self):
        return AlgebraElement(self.ctx, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._wrap(other))

    def __rsub__(self, other):
        return self._wrap(other) - self

    def scale(self, c) -> "AlgebraElement":
        c = self.ctx.domain.coerce(c)
        return AlgebraElement(self.ctx, {k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            self._check(other)
            return AlgebraElement(self.ctx, self.ctx.mul_terms(self.terms, other.terms))
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, k: int):
        out = self.ctx.unit()
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, AlgebraElement):
            return self.ctx == other.ctx and self.terms == other.terms
        if isinstance(other, int) and other == 0:
            return not self.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def sorted_terms(self) -> list:
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def coeff(self, c, w):
        return self.terms.get((tuple(c), tuple(w)), self.ctx.domain.zero)

    def to_json(self) -> dict:
        fmt = self.ctx.domain.format_scalar
        return {
            "m": self.ctx.m, "r": self.ctx.r,
            "terms": [{"c": list(c), "w": list(w), "coeff": fmt(v)}
                      for (c, w), v in self.sorted_terms()],
        }

    @classmethod
    def from_json(cls, ctx: AlgebraContext, data: Mapping) -> "AlgebraElement":
        if data.get("m", ctx.m) != ctx.m or data.get("r", ctx.r) != ctx.r:
            raise ValueError("element JSON does not match the context (m, r)")
        out = ctx.element()
        for t in data.get("terms", []):
            coeff = ctx.domain.coerce(t["coeff"])
            out = out + ctx.basis_element((t["c"], t["w"])).scale(coeff)
        return out

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (c, w), v in self.sorted_terms():
            mono = [f"L{i}" if e == 1 else f"L{i}^{e}" for i, e in enumerate(c, 1) if e]
            if w != self.ctx.id:
                mono.append("T" + "".join(str(x) for x in w))
            coeff = self.ctx.domain.format_scalar(v)
            if not mono:
                parts.append(f"({coeff})")
            else:
                parts.append(f"({coeff})*" + "*".join(mono))
        return " + ".join(parts)

    def __repr__(self):
        return f"AlgebraElement({self})"


# ---------------------------------------------------------------- named elements

def T(ctx: AlgebraContext, w) -> AlgebraElement:
    """T_w for w in S_n, n <= r (embedded)."""
    w = tuple(w) + tuple(range(len(w) + 1, ctx.r + 1))
    return AlgebraElement(ctx, {(ctx.zero_c, w): ctx.one})


def T_inverse(ctx: AlgebraContext, w) -> AlgebraElement:
    """T_w^{-1} = T_{i_l}^{-1} ... T_{i_1}^{-1} with T_i^{-1} = q^-1 T_i + (q^-1 - 1)."""
    w = tuple(w) + tuple(range(len(w) + 1, ctx.r + 1))
    out = ctx.unit()
    for i in reversed(reduced_word(w)):
        ti = generator(ctx, i)
        out = out * (ti.scale(ctx.qinv) + ctx.scalar(ctx.qinv - ctx.one))
    return out


def L_monomial(ctx: AlgebraContext, e) -> AlgebraElement:
    """Normal form of L_1^{e_1} ... L_r^{e_r} (exponents unrestricted)."""
    e = tuple(e) + (0,) * (ctx.r - len(e))
    return AlgebraElement(ctx, ctx.lpow(e))


def generator(ctx: AlgebraContext, i: int) -> AlgebraElement:
    """T_0 = L_1 or T_i, 1 <= i <= r - 1."""
    if not 0 <= i <= ctx.r - 1:
        raise ValueError(f"generator T_{i} does not exist for r = {ctx.r}")
    if i == 0:
        return L_monomial(ctx, (1,))
    return T(ctx, s(i, ctx.r))


def _jm_from_word(ctx: AlgebraContext, i: int) -> AlgebraElement:
    out = generator(ctx, 0)
    for k in range(2, i + 1):
        t = generator(ctx, k - 1)
        out = (t * out * t).scale(ctx.qinv)
    return out


def jucys_murphy(ctx: AlgebraContext, i: int) -> AlgebraElement:
    """L_i computed from the word q^-1 T_{i-1} L_{i-1} T_{i-1}, and checked against the basis key."""
    if not 1 <= i <= ctx.r:
        raise ValueError(f"L_{i} does not exist for r = {ctx.r}")
    out = _jm_from_word(ctx, i)
    if ctx.m >= 2:
        c = [0] * ctx.r
        c[i - 1] = 1
        expected = {(tuple(c), ctx.id): ctx.one}
        if out.terms != expected:
            raise AssertionError(f"L_{i} reduced to {out}, not a single basis key")
    return out


def from_word(ctx: AlgebraContext, word: Iterable) -> AlgebraElement:
    """Left-to-right product of tokens ``"T<i>"``, ``"L<i>"`` and scalars."""
    out = ctx.unit()
    for tok in word:
        out = out * _token(ctx, tok)
    return out


def _token(ctx: AlgebraContext, tok) -> AlgebraElement:
    if isinstance(tok, AlgebraElement):
        return tok
    if isinstance(tok, str):
        t = tok.strip()
        if len(t) > 1 and t[0] in "TL" and t[1:].lstrip("_").isdigit():
            idx = int(t[1:].lstrip("_"))
            return generator(ctx, idx) if t[0] == "T" else jucys_murphy(ctx, idx)
        try:
            return ctx.scalar(ctx.domain.parse_scalar(t))
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"bad token {tok!r}") from exc
    if isinstance(tok, (int, LaurentPoly)) or not isinstance(tok, (list, tuple, dict)):
        return ctx.scalar(tok)
    raise ValueError(f"bad token {tok!r}")


def iota(x: AlgebraElement) -> AlgebraElement:
    """The anti-automorphism fixing every T_i: L^c T_w -> T_{w^-1} L^c."""
    ctx = x.ctx
    out: dict = {}
    for (c, w), v in x.terms.items():
        for k, c2 in ctx.left_Tw(perm_inverse(w), {(c, ctx.id): ctx.one}).items():
            _acc(out, k, v * c2)
    return AlgebraElement(ctx, out)


def pr(x: AlgebraElement, c) -> AlgebraElement:
    """Component of x in L^c H(S_r)."""
    c = tuple(c)
    if len(c) != x.ctx.r or any(not 0 <= e < x.ctx.m for e in c):
        raise ValueError(f"exponent vector {c} out of bounds")
    return AlgebraElement(x.ctx, {k: v for k, v in x.terms.items() if k[0] == c})


def hecke_element(ctx: AlgebraContext, coeffs: Mapping) -> AlgebraElement:
    """sum_w coeffs[w] T_w."""
    return AlgebraElement(ctx, {(ctx.zero_c, tuple(w)): ctx.domain.coerce(v)
                                for w, v in coeffs.items()})


def subalgebra_membership(x: AlgebraElement, a) -> bool:
    """x lies in H(S_a): no L-part and every w in the Young subgroup of a."""
    ctx = x.ctx
    group = set(young_subgroup(tuple(a), ctx.r))
    return all(c == ctx.zero_c and w in group for (c, w) in x.terms)


def young_generators(a, r: int) -> list:
    """Indices i with s_i in S_a."""
    cuts = set(a[1:])
    return [i for i in range(1, min(a[-1], r)) if i not in cuts]


def commutes_with_subalgebra(x: AlgebraElement, a) -> bool:
    ctx = x.ctx
    for i in young_generators(a, ctx.r):
        t = generator(ctx, i)
        if x * t != t * x:
            return False
    return True


def length(w) -> int:
    return perm_length(tuple(w))
