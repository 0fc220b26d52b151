"""
Decidable criteria: the discriminants f_{m,r,i}, f_{m,r}, d_{S_r}, d_W, and
checks that tie them to computed structure.

* ``f_{m,r,i} = prod_{j != i} prod_{k=1-r}^{r-1} (u_i q^k - u_j)`` decides whether
  z_{r_i'} is invertible;
* ``d_W = f_{m,r} d_{S_r}`` decides semisimplicity.  The independent oracle is
  the trace form of the left-regular representation, which is nondegenerate
  exactly when the algebra is semisimple (characteristic zero only).
"""

from __future__ import annotations

import time
from contextlib import contextmanager
from dataclasses import dataclass, field

from .algebra import AlgebraContext, AlgebraElement, T
from .constructions import (
    NotInvertible, idempotent_e, invert_in_subalgebra, r_comp, span_vectors, v_elem, z_pair,
)
from .linalg import ExactMatrix, rank
from .rings import LaurentPoly, Specialization
from .symcomb import all_perms, enumerate_lambda, perm_length, w_of, young_order, young_subgroup

__all__ = [
    "Check", "CriteriaReport", "f_poly", "poincare_sym", "d_W",
    "check_invertibility_criterion", "idempotent_report", "morita_dimension_report",
    "semisimplicity_check", "left_regular_matrix", "structure_constants", "morita_target",
]


# ---------------------------------------------------------------- reports

@dataclass
class Check:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        out = {"name": self.name, "passed": self.passed}
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class CriteriaReport:
    """Outcome of one verification run at fixed (m, r, specialization)."""

    check: str
    m: int
    r: int
    specialization: str | None = None
    values: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    timings: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, **detail) -> bool:
        self.checks.append(Check(name, bool(passed), detail))
        return bool(passed)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]

    @contextmanager
    def timed(self, label: str):
        t0 = time.perf_counter()
        try:
            yield
        finally:
            self.timings[label] = round(time.perf_counter() - t0, 4)

    def to_json(self, timings: bool = False) -> dict:
        out = {
            "check": self.check, "m": self.m, "r": self.r,
            "specialization": self.specialization,
            "passed": self.passed,
            "values": self.values,
            "checks": [c.to_json() for c in self.checks],
        }
        if timings:
            out["timings"] = self.timings
        return out


def _spec_tag(ctx: AlgebraContext) -> str | None:
    return ctx.domain.describe() if ctx.domain.is_field else None


def _require_rational(ctx: AlgebraContext, what: str) -> Specialization:
    dom = ctx.domain
    if not dom.is_field:
        raise TypeError(f"{what} needs a specialization")
    if dom.prime is not None:
        raise TypeError(f"{what} needs a rational specialization")
    return dom


# ---------------------------------------------------------------- polynomials

def f_poly(m: int, r: int, i: int | None = None) -> LaurentPoly:
    """f_{m,r,i} when i is given, otherwise f_{m,r} = prod_{i<j} prod_k (u_i q^k - u_j)."""
    if m < 1 or r < 1:
        raise ValueError("need m >= 1 and r >= 1")
    if i is not None and not 1 <= i <= m:
        raise ValueError(f"index {i} out of range 1..{m}")
    u = [LaurentPoly.u(j, m) for j in range(1, m + 1)]
    out = LaurentPoly.const(1, m)
    pairs = ([(i, j) for j in range(1, m + 1) if j != i] if i is not None
             else [(a, b) for a in range(1, m + 1) for b in range(a + 1, m + 1)])
    for a, b in pairs:
        for k in range(1 - r, r):
            out = out * (u[a - 1] * LaurentPoly.q(m, k) - u[b - 1])
    return out


def poincare_sym(r: int, num_u: int = 1) -> LaurentPoly:
    """sum_{w in S_r} q^{l(w)}, cross-checked against prod_i (1 + q + .. + q^{i-1})."""
    if r < 1:
        raise ValueError("need r >= 1")
    counts: dict = {}
    for w in all_perms(r):
        l = perm_length(w)
        counts[l] = counts.get(l, 0) + 1
    total = LaurentPoly({(l, *(0,) * num_u): c for l, c in counts.items()}, num_u)
    prod = LaurentPoly.const(1, num_u)
    for i in range(1, r + 1):
        prod = prod * LaurentPoly({(k, *(0,) * num_u): 1 for k in range(i)}, num_u)
    if prod != total:
        raise AssertionError(f"length sum and product form disagree for r = {r}")
    return total


def d_W(m: int, r: int) -> LaurentPoly:
    return f_poly(m, r) * poincare_sym(r, m)


def morita_target(m: int, r: int) -> int:
    """sum over Lambda(m, r) of prod lambda_i!."""
    return sum(young_order(a) for a in enumerate_lambda(m, r))


def _poly_values(ctx: AlgebraContext) -> dict:
    m, r, dom = ctx.m, ctx.r, ctx.domain
    out = {"f": {}, "f_i": {}}
    polys = {"f": f_poly(m, r), "d_S": poincare_sym(r, m), "d_W": d_W(m, r)}
    for name, p in polys.items():
        out[name] = {"symbolic": str(p)}
        if dom.is_field:
            out[name]["value"] = str(dom.evaluate(p))
    for i in range(1, m + 1):
        p = f_poly(m, r, i)
        out["f_i"][str(i)] = {"symbolic": str(p)}
        if dom.is_field:
            out["f_i"][str(i)]["value"] = str(dom.evaluate(p))
    if dom.is_field:
        e = dom.e
        out["e"] = e if isinstance(e, int) else "inf"
    return out


# ---------------------------------------------------------------- invertibility

def check_invertibility_criterion(ctx: AlgebraContext) -> CriteriaReport:
    """z_{r_i'} is invertible in H(S_r) exactly when f_{m,r,i} specializes to a nonzero value."""
    if not ctx.domain.is_field:
        raise TypeError("the invertibility criterion needs a specialization")
    m, r, dom = ctx.m, ctx.r, ctx.domain
    rep = CriteriaReport("prop-4.3", m, r, _spec_tag(ctx))
    nonzero = []
    with rep.timed("total"):
        for i in range(1, m + 1):
            f_val = dom.evaluate(f_poly(m, r, i))
            ri = r_comp(i, m, r)
            zp = z_pair(ctx, ri)
            try:
                invert_in_subalgebra(ctx, zp.z_prime, ri.prime())
                inv = True
            except NotInvertible:
                inv = False
            nonzero.append(bool(f_val))
            rep.add(f"z_(r_{i}') invertible iff f_(m,r,{i}) != 0", inv == bool(f_val),
                    i=i, f_value=str(f_val), invertible=inv)
        f_all = dom.evaluate(f_poly(m, r))
        rep.add("f_(m,r) != 0 iff every f_(m,r,i) != 0", bool(f_all) == all(nonzero),
                f_value=str(f_all))
    rep.values = _poly_values(ctx)
    return rep


def _ideal_square_rank(zp) -> int:
    """rank of span{x y : x, y in v_a H} = span{v_a T_w v_a T_u}."""
    ctx = zp.v.ctx
    perms = all_perms(ctx.r)
    left = [zp.v * T(ctx, w) for w in perms]
    vecs = []
    for x in left:
        vecs.extend(span_vectors(x * zp.v, perms))
    return rank(vecs)


def idempotent_report(ctx: AlgebraContext, lam=None) -> CriteriaReport:
    """Per a: z_a invertible <=> (v_a H)^2 = v_a H, and e_a^2 = e_a whenever e_a is built."""
    if not ctx.domain.is_field:
        raise TypeError("idempotents need a specialization")
    rep = CriteriaReport("idempotents", ctx.m, ctx.r, _spec_tag(ctx))
    lam = enumerate_lambda(ctx.m, ctx.r) if lam is None else lam
    with rep.timed("total"):
        for a in lam:
            zp = z_pair(ctx, a)
            try:
                zinv = invert_in_subalgebra(ctx, zp.z, a)
            except NotInvertible:
                zinv = None
            j_rank = rank(span_vectors(zp.v, all_perms(ctx.r)))
            sq_rank = _ideal_square_rank(zp)
            rep.add(f"a={list(a)}: z_a invertible iff (v_a H)^2 = v_a H",
                    (zinv is not None) == (sq_rank == j_rank),
                    a=list(a), z_invertible=zinv is not None, rank=j_rank, square_rank=sq_rank)
            if zinv is not None:
                e = zp.v * T(ctx, w_of(a.prime())) * zinv
                rep.add(f"a={list(a)}: e_a^2 = e_a", e * e == e, a=list(a))
    return rep


# ---------------------------------------------------------------- Morita dimension

def morita_dimension_report(ctx: AlgebraContext) -> CriteriaReport:
    """e_a H e_b = 0 for a != b, e_a H e_a has rank |S_a|, and rank(eps H eps) = sum prod lambda_i!."""
    if not ctx.domain.is_field:
        raise TypeError("idempotents need a specialization")
    m, r = ctx.m, ctx.r
    rep = CriteriaReport("cor-3.11", m, r, _spec_tag(ctx))
    lam = enumerate_lambda(m, r)
    basis = [ctx.basis_element(k) for k in ctx.basis()]
    with rep.timed("idempotents"):
        es = {a: idempotent_e(ctx, a) for a in lam}
    with rep.timed("pairs"):
        left = {a: [e * b for b in basis] for a, e in es.items()}
        eps_vecs = [ctx.element() for _ in basis]
        for a in lam:
            for b in lam:
                prods = [x * es[b] for x in left[a]]
                for k, p in enumerate(prods):
                    eps_vecs[k] = eps_vecs[k] + p
                if a != b:
                    bad = [list(map(list, ctx.basis()[k])) for k, p in enumerate(prods) if p]
                    rep.add(f"e_{list(a)} H e_{list(b)} = 0", not bad, a=list(a), b=list(b),
                            counterexamples=bad[:3])
                else:
                    vecs = [ctx.coords(p) for p in prods]
                    got = rank(vecs)
                    rep.add(f"rank e_{list(a)} H e_{list(a)} = |S_a|", got == young_order(a),
                            a=list(a), rank=got, expected=young_order(a))
                    # the explicit isomorphism image: v_a T_{w_a'} H(S_a)
                    head = v_elem(ctx, a) * T(ctx, w_of(a.prime()))
                    image = span_vectors(head, young_subgroup(tuple(a), r))
                    same = rank(vecs) == rank(image) == rank(vecs + image)
                    rep.add(f"e_{list(a)} H e_{list(a)} = v_a T_(w_a') H(S_a)", same, a=list(a))
    with rep.timed("epsilon"):
        eps = sum((es[a] for a in lam), ctx.element())
        rep.add("eps^2 = eps", eps * eps == eps)
        got = rank([ctx.coords(x) for x in eps_vecs])
        target = morita_target(m, r)
        rep.add("rank(eps H eps) = sum over Lambda(m,r) of prod lambda_i!", got == target,
                rank=got, expected=target)
    rep.values = {"morita_target": morita_target(m, r)}
    return rep



# ---------------------------------------------------------------- semisimplicity

def left_regular_matrix(x: AlgebraElement) -> ExactMatrix:
    """Matrix of h -> x h in the basis order; column j holds x b_j."""
    ctx = x.ctx
    cols = [ctx.coords(x * ctx.basis_element(k)) for k in ctx.basis()]
    return ExactMatrix.from_columns(cols)


def structure_constants(ctx: AlgebraContext) -> list:
    """table[i][j] = coordinates of b_i b_j."""
    basis = [ctx.basis_element(k) for k in ctx.basis()]
    return [[ctx.coords(x * y) for y in basis] for x in basis]


def trace_form(ctx: AlgebraContext, table: list | None = None) -> ExactMatrix:
    """G_ij = tr(left multiplication by b_i b_j) = sum_k (b_i b_j)[k] tr(b_k)."""
    table = structure_constants(ctx) if table is None else table
    n = len(table)
    zero = ctx.domain.zero
    tau = []
    for k in range(n):
        t = zero
        for l in range(n):
            t = t + table[k][l][l]
        tau.append(t)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            v = zero
            for c, t in zip(table[i][j], tau):
                if c and t:
                    v = v + c * t
            row.append(v)
        rows.append(row)
    return ExactMatrix.from_rows(rows)


def semisimplicity_check(ctx: AlgebraContext) -> CriteriaReport:
    """d_W != 0 against nondegeneracy of the regular trace form (rational targets only)."""
    dom = _require_rational(ctx, "the trace-form oracle")
    m, r = ctx.m, ctx.r
    rep = CriteriaReport("thm-5.2", m, r, _spec_tag(ctx))
    with rep.timed("criterion"):
        dw = dom.evaluate(d_W(m, r))
        criterion = bool(dw)
    with rep.timed("oracle"):
        gram = trace_form(ctx)
        g_rank = gram.rank()
        oracle = g_rank == ctx.dimension
    rep.values = _poly_values(ctx)
    rep.values.update({
        "criterion_semisimple": criterion, "oracle_semisimple": oracle,
        "gram_rank": g_rank, "dimension": ctx.dimension,
        "verdict": "semisimple" if criterion else "not semisimple",
    })
    rep.add("d_W = f_(m,r) d_(S_r) as polynomials",
            d_W(m, r) == f_poly(m, r) * poincare_sym(r, m))
    rep.add("d_W != 0 iff the trace form is nondegenerate", criterion == oracle,
            d_W=str(dw), gram_rank=g_rank, dimension=ctx.dimension)
    return rep
