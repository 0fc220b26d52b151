"""
Quasi-idempotents and idempotents built from cumulative compositions.

For a in Lambda[m, r]:

* ``pi(a; x_1..x_{m-1}) = prod_i prod_{j <= a_i} (L_j - x_i)``, with
  ``pi_a`` taking x = (u_2, .., u_m) and ``pi_tilde`` taking x = (u_{m-1}, .., u_1);
* ``v_a = pi_a T_{w_a} pi_tilde_{a'}``;
* ``v_a T_{w_{a'}} v_a = v_a z_{a'} = z_a v_a`` with z_{a'} in H(S_{a'}), z_a in H(S_a);
* ``e_a = v_a T_{w_{a'}} z_a^{-1}`` when z_a is invertible.

Coordinates in the basis {v_a T_w} are read off the top L-degree component:
``pr_h(v_a) = q^c L^h T_{w_{a'}}^{-1}`` with h = (m-1, .., m-1), so the
coefficients of x in v_a H are ``q^-c T_{w_{a'}} pr_h(x)`` with the L-part
stripped.  Only powers of q are divided by, so this works symbolically.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .algebra import (
    AlgebraContext, AlgebraElement, T, T_inverse, jucys_murphy, subalgebra_membership,
)
from .linalg import rank, row_reduce, solve
from .symcomb import (
    CumComposition, enumerate_lambda, s_ij, w_of, young_subgroup,
)

__all__ = [
    "NotInvertible", "ZPair", "IdealBasis",
    "pi_factor", "pi_general", "pi_a", "pi_tilde", "h_elem", "T_ij",
    "v_elem", "pr_h_unit", "va_coordinates", "z_pair", "z_formula_ri", "r_comp",
    "invert_in_subalgebra", "idempotent_e", "epsilon", "right_ideal", "ideal_vectors",
    "span_vectors",
    "V_generator", "V_tilde_generator",
]


class NotInvertible(ArithmeticError):
    """Raised when an element has no inverse in the requested subalgebra."""


def _comp(a) -> CumComposition:
    return a if isinstance(a, CumComposition) else CumComposition(a)


def _check_m(ctx: AlgebraContext, a: CumComposition) -> None:
    if a.m != ctx.m:
        raise ValueError(f"{list(a)} has {a.m} parts, expected m = {ctx.m}")
    if a.r > ctx.r:
        raise ValueError(f"{list(a)} needs r >= {a.r}, context has r = {ctx.r}")


# ---------------------------------------------------------------- pi elements

def pi_factor(ctx: AlgebraContext, n: int, x) -> AlgebraElement:
    """pi_n(x) = (L_1 - x) ... (L_n - x); pi_0 = 1."""
    x = ctx.domain.coerce(x)
    out = ctx.unit()
    for j in range(1, n + 1):
        out = out * (jucys_murphy(ctx, j) - ctx.scalar(x))
    return out


def pi_general(ctx: AlgebraContext, a, xs) -> AlgebraElement:
    a = _comp(a)
    _check_m(ctx, a)
    xs = list(xs)
    if len(xs) != ctx.m - 1:
        raise ValueError(f"need {ctx.m - 1} parameters, got {len(xs)}")
    out = ctx.unit()
    for ai, x in zip(a[1:ctx.m], xs):
        out = out * pi_factor(ctx, ai, x)
    return out


def pi_a(ctx: AlgebraContext, a) -> AlgebraElement:
    return pi_general(ctx, a, ctx.domain.u[1:])


def pi_tilde(ctx: AlgebraContext, a) -> AlgebraElement:
    return pi_general(ctx, a, ctx.domain.u[-2::-1] if ctx.m > 1 else ())


def h_elem(ctx: AlgebraContext, a) -> AlgebraElement:
    """T_{w_a}, with w_a embedded when a has fewer boxes than r."""
    return T(ctx, w_of(_comp(a)))


def T_ij(ctx: AlgebraContext, i: int, j: int) -> AlgebraElement:
    return T(ctx, s_ij(i, j, ctx.r))


def v_elem(ctx: AlgebraContext, a) -> AlgebraElement:
    """v_a = pi_a T_{w_a} pi_tilde_{a'}."""
    a = _comp(a)
    _check_m(ctx, a)
    return pi_a(ctx, a) * h_elem(ctx, a) * pi_tilde(ctx, a.prime())


# ---------------------------------------------------------------- coordinates in v_a H

def _top(ctx: AlgebraContext) -> tuple:
    return (ctx.m - 1,) * ctx.r


def _strip(x: AlgebraElement, c: tuple) -> AlgebraElement:
    ctx = x.ctx
    return AlgebraElement(ctx, {(ctx.zero_c, w): v for (cc, w), v in x.terms.items() if cc == c})


def pr_h_unit(ctx: AlgebraContext, a, v: AlgebraElement | None = None):
    """The unit q^c with pr_h(v_a) = q^c L^h T_{w_{a'}}^{-1}, read off the computed v_a.

    Raises AssertionError when pr_h(v_a) does not have that shape.
    """
    a = _comp(a)
    if a.r != ctx.r:
        raise ValueError("pr_h shape only applies to a in Lambda[m, r]")
    v = v_elem(ctx, a) if v is None else v
    top = _strip(v, _top(ctx))
    prod = T(ctx, w_of(a.prime())) * top
    keys = list(prod.terms)
    if keys != [(ctx.zero_c, ctx.id)]:
        raise AssertionError(f"pr_h(v_a) for a = {list(a)} is not a multiple of T_(w_a')^-1")
    c = prod.terms[keys[0]]
    if ctx.domain.is_field:
        if not c:
            raise AssertionError("pr_h(v_a) vanishes")
        return c
    if not c.is_unit():
        raise AssertionError(f"pr_h(v_a) for a = {list(a)} has non-unit coefficient {c}")
    return c


def va_coordinates(ctx: AlgebraContext, a, x: AlgebraElement,
                   v: AlgebraElement | None = None, unit=None):
    """{w: c_w} with x = sum c_w v_a T_w, or None when x is not in v_a H."""
    a = _comp(a)
    v = v_elem(ctx, a) if v is None else v
    unit = pr_h_unit(ctx, a, v) if unit is None else unit
    inv = ctx.domain.inverse(unit)
    coeffs = (T(ctx, w_of(a.prime())) * _strip(x, _top(ctx))).scale(inv)
    if any(c != ctx.zero_c for c, _ in coeffs.terms):
        return None
    recon = v * coeffs
    if recon != x:
        return None
    return {w: val for (_, w), val in coeffs.sorted_terms()}


# ---------------------------------------------------------------- z elements

@dataclass
class ZPair:
    a: CumComposition
    v: AlgebraElement
    z_prime: AlgebraElement
    z: AlgebraElement
    unit: object = None


def z_pair(ctx: AlgebraContext, a) -> ZPair:
    """z_{a'} from the coordinates of v_a T_{w_{a'}} v_a, then z_a by conjugation with T_{w_a}."""
    a = _comp(a)
    _check_m(ctx, a)
    if a.r != ctx.r:
        raise ValueError("z_pair needs a in Lambda[m, r]")
    v = v_elem(ctx, a)
    unit = pr_h_unit(ctx, a, v)
    target = v * T(ctx, w_of(a.prime())) * v
    coords = va_coordinates(ctx, a, target, v=v, unit=unit)
    if coords is None:
        raise AssertionError(f"v_a h_a' v_a is not in v_a H for a = {list(a)}")
    ap = a.prime()
    group = set(young_subgroup(tuple(ap), ctx.r))
    outside = [w for w in coords if w not in group]
    if outside:
        raise AssertionError(f"z_a' has terms outside S_a' for a = {list(a)}: {outside}")
    z_prime = AlgebraElement(ctx, {(ctx.zero_c, w): c for w, c in coords.items()})
    wa = w_of(a)
    z = T(ctx, wa) * z_prime * T_inverse(ctx, wa)
    if not subalgebra_membership(z, a):
        raise AssertionError(f"z_a is not in H(S_a) for a = {list(a)}")
    return ZPair(a, v, z_prime, z, unit)


def r_comp(i: int, m: int, r: int) -> CumComposition:
    """r_i = [0, 0 (i-1 times), r, .., r]."""
    if not 1 <= i <= m:
        raise ValueError(f"index {i} out of range 1..{m}")
    return CumComposition([0] * i + [r] * (m - i + 1))


def z_formula_ri(ctx: AlgebraContext, i: int) -> AlgebraElement:
    """prod_{j != i} prod_{k=1}^r (u_i q^{1-k} T_{k,1} T_{1,k} - u_j)."""
    if not 1 <= i <= ctx.m:
        raise ValueError(f"index {i} out of range 1..{ctx.m}")
    dom = ctx.domain
    ui = dom.u[i - 1]
    out = ctx.unit()
    for j in range(1, ctx.m + 1):
        if j == i:
            continue
        for k in range(1, ctx.r + 1):
            jm = T_ij(ctx, k, 1) * T_ij(ctx, 1, k)
            out = out * (jm.scale(ui * dom.qinv ** (k - 1)) - ctx.scalar(dom.u[j - 1]))
    return out


# ---------------------------------------------------------------- inverses and idempotents

def _require_field(ctx: AlgebraContext, what: str) -> None:
    if not ctx.domain.is_field:
        raise TypeError(f"{what} needs a specialization; the symbolic domain has no inverses")


def invert_in_subalgebra(ctx: AlgebraContext, z: AlgebraElement, a) -> AlgebraElement:
    """y in H(S_a) with z y = y z = 1; raises NotInvertible."""
    _require_field(ctx, "invert_in_subalgebra")
    a = _comp(a)
    if not subalgebra_membership(z, a):
        raise ValueError("z is not in H(S_a)")
    group = young_subgroup(tuple(a), ctx.r)
    keys = [(ctx.zero_c, w) for w in group]
    zero = ctx.domain.zero
    cols = []
    for w in group:
        prod = z * T(ctx, w)
        cols.append([prod.terms.get(k, zero) for k in keys])
    target = [ctx.one if k[1] == ctx.id else zero for k in keys]
    sol = solve(cols, target)
    if sol is None:
        raise NotInvertible(f"z is not invertible in H(S_a) for a = {list(a)}")
    y = AlgebraElement(ctx, {k: c for k, c in zip(keys, sol) if c})
    if y * z != ctx.unit():
        raise AssertionError("right inverse is not a left inverse")
    return y


def idempotent_e(ctx: AlgebraContext, a, zp: ZPair | None = None) -> AlgebraElement:
    """e_a = v_a T_{w_{a'}} z_a^{-1}."""
    _require_field(ctx, "idempotent_e")
    a = _comp(a)
    zp = z_pair(ctx, a) if zp is None else zp
    zinv = invert_in_subalgebra(ctx, zp.z, a)
    return zp.v * T(ctx, w_of(a.prime())) * zinv


def epsilon(ctx: AlgebraContext) -> AlgebraElement:
    """Sum of e_a over Lambda[m, r]; NotInvertible names the first failing a."""
    _require_field(ctx, "epsilon")
    out = ctx.element()
    for a in enumerate_lambda(ctx.m, ctx.r):
        try:
            out = out + idempotent_e(ctx, a)
        except NotInvertible as exc:
            raise NotInvertible(f"z_a not invertible for a = {list(a)}") from exc
    return out


# ---------------------------------------------------------------- right ideals

@dataclass
class IdealBasis:
    """Coordinates of x b over the basis b of H, and the rank of their span."""

    generator: AlgebraElement
    vectors: list = field(repr=False)
    rank: int = 0

    def echelon(self) -> list:
        return row_reduce(self.vectors)[0]


def ideal_vectors(x: AlgebraElement) -> list:
    ctx = x.ctx
    seen = {}
    out = []
    for c, w in ctx.basis():
        xc = seen.get(c)
        if xc is None:
            e = AlgebraElement(ctx, {(c, ctx.id): ctx.one})
            xc = seen[c] = (x * e).terms
        out.append(ctx.coords(AlgebraElement(ctx, ctx.right_Tw(xc, w))))
    return out


def right_ideal(x: AlgebraElement, vectors: list | None = None) -> IdealBasis:
    """x H as the span of x L^c T_w over the normal-form basis."""
    _require_field(x.ctx, "right_ideal")
    vecs = ideal_vectors(x) if vectors is None else vectors
    return IdealBasis(x, vecs, rank(vecs))


def span_vectors(x: AlgebraElement, words) -> list:
    """Coordinates of x T_w for the given permutations."""
    ctx = x.ctx
    return [ctx.coords(AlgebraElement(ctx, ctx.right_Tw(x.terms, w))) for w in words]


# ---------------------------------------------------------------- the V_i filtration

def _right_data(ctx: AlgebraContext, a):
    a = _comp(a)
    _check_m(ctx, a)
    if a.r != ctx.r:
        raise ValueError("need a in Lambda[m, r]")
    b = a.right()
    return a, b, a.shifted()


def V_generator(ctx: AlgebraContext, a, i: int) -> AlgebraElement:
    """pi_{a_-|} T_{w_{a_-|}} T_{r, r - b_{i-1}} pi_tilde_{a_i'}, b = a_-|."""
    a, b, shifted = _right_data(ctx, a)
    if not 1 <= i <= ctx.m:
        raise ValueError(f"index {i} out of range 1..{ctx.m}")
    r = ctx.r
    return (pi_a(ctx, b) * h_elem(ctx, b) * T_ij(ctx, r, r - b[i - 1])
            * pi_tilde(ctx, shifted[i - 1].prime()))


def V_tilde_generator(ctx: AlgebraContext, a, i: int) -> AlgebraElement:
    """V_generator(a, i) times prod_{j > i} pi_{r - b_{i-1}}(u_j)."""
    a, b, _ = _right_data(ctx, a)
    n = ctx.r - b[i - 1]
    out = V_generator(ctx, a, i)
    for j in range(i + 1, ctx.m + 1):
        out = out * pi_factor(ctx, n, ctx.domain.u[j - 1])
    return out

