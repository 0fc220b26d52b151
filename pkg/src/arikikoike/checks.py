"""
Verification suites, one per check id.

Each suite takes an :class:`AlgebraContext` (symbolic or specialized) and
returns a :class:`CriteriaReport` listing every assertion it made.  Suites that
need ranks or inverses require a specialization and fall back to the generic
one when handed the symbolic domain.
"""

from __future__ import annotations

import random
from math import factorial

from .algebra import (
    AlgebraContext, AlgebraElement, T, commutes_with_subalgebra, context, generator, iota,
    jucys_murphy, young_generators,
)
from .constructions import (
    V_generator, V_tilde_generator, ideal_vectors, pi_a, pi_factor, pi_general, pi_tilde,
    pr_h_unit, r_comp, span_vectors, v_elem, va_coordinates, z_formula_ri, z_pair,
)
from .criteria import (
    CriteriaReport, check_invertibility_criterion, idempotent_report, left_regular_matrix,
    morita_dimension_report, semisimplicity_check,
)
from .linalg import ExactMatrix, intersection_dim, rank
from .rings import generic_specialization
from .symcomb import (
    CumComposition, all_perms, coset_reps, double_reps, enumerate_lambda,
    perm_inverse, perm_length, perm_mul, poset_leq, reduced_word, s, s_ij, w_block, w_of,
    w_shift, word_to_perm, young_order, young_subgroup, embed,
)

__all__ = ["CHECK_IDS", "SPECIALIZED", "run_check", "regular_representation_report"]


def _report(check: str, ctx: AlgebraContext) -> CriteriaReport:
    return CriteriaReport(check, ctx.m, ctx.r,
                          ctx.domain.describe() if ctx.domain.is_field else None)


def _specialized(ctx: AlgebraContext) -> AlgebraContext:
    if ctx.domain.is_field:
        return ctx
    return context(ctx.m, ctx.r, generic_specialization(ctx.m))


def _eq(rep: CriteriaReport, name: str, lhs: AlgebraElement, rhs, **detail) -> bool:
    diff = lhs - rhs
    if diff:
        detail = dict(detail, difference=str(diff)[:400])
    return rep.add(name, not diff, **detail)


# ---------------------------------------------------------------- presentation

def check_relations(ctx: AlgebraContext, triples: int = 25, seed: int = 0) -> CriteriaReport:
    """The defining relations, commuting L's, and a seeded associativity sample."""
    rep = _report("relations", ctx)
    r, m = ctx.r, ctx.m
    Ts = [generator(ctx, i) for i in range(r)]
    Ls = [None] + [jucys_murphy(ctx, i) for i in range(1, r + 1)]
    with rep.timed("relations"):
        if r >= 2:
            _eq(rep, "T0 T1 T0 T1 = T1 T0 T1 T0", Ts[0] * Ts[1] * Ts[0] * Ts[1],
                Ts[1] * Ts[0] * Ts[1] * Ts[0])
        for i in range(1, r - 1):
            _eq(rep, f"braid at i={i}", Ts[i] * Ts[i + 1] * Ts[i], Ts[i + 1] * Ts[i] * Ts[i + 1])
        for i in range(r):
            for j in range(i + 2, r):
                _eq(rep, f"T{i} T{j} = T{j} T{i}", Ts[i] * Ts[j], Ts[j] * Ts[i])
        for i in range(1, r):
            _eq(rep, f"(T{i} - q)(T{i} + 1) = 0",
                (Ts[i] - ctx.scalar(ctx.q)) * (Ts[i] + ctx.unit()), 0)
        char = ctx.unit()
        for u in ctx.domain.u:
            char = char * (Ts[0] - ctx.scalar(u))
        _eq(rep, "prod (T0 - u_i) = 0", char, 0)
        for i in range(1, r + 1):
            for j in range(i + 1, r + 1):
                _eq(rep, f"L{i} L{j} = L{j} L{i}", Ls[i] * Ls[j], Ls[j] * Ls[i])
    if not triples:
        return rep
    with rep.timed("associativity"):
        rng = random.Random(seed)
        basis = ctx.basis()
        bad = []
        for _ in range(triples):
            x, y, z = (ctx.basis_element(rng.choice(basis)) for _ in range(3))
            if (x * y) * z != x * (y * z):
                bad.append([str(x), str(y), str(z)])
        rep.add(f"(xy)z = x(yz) on {triples} random basis triples", not bad,
                counterexamples=bad[:3])
    return rep


def check_commutators(ctx: AlgebraContext) -> CriteriaReport:
    """Commutation of T_i with L's and products of (L_j - x), and the L_i^k expansion."""
    rep = _report("prop-2.5", ctx)
    r, m = ctx.r, ctx.m
    Ts = [generator(ctx, i) for i in range(r)]
    Ls = [None] + [jucys_murphy(ctx, i) for i in range(1, r + 1)]
    xs = list(ctx.domain.u) + [ctx.q]
    with rep.timed("total"):
        for i in range(1, r):
            for j in range(1, r + 1):
                if j not in (i, i + 1):
                    _eq(rep, f"T{i} L{j} = L{j} T{i}", Ts[i] * Ls[j], Ls[j] * Ts[i])
            prod_l = Ls[i] * Ls[i + 1]
            sum_l = Ls[i] + Ls[i + 1]
            _eq(rep, f"T{i} commutes with L{i} L{i + 1}", Ts[i] * prod_l, prod_l * Ts[i])
            _eq(rep, f"T{i} commutes with L{i} + L{i + 1}", Ts[i] * sum_l, sum_l * Ts[i])
            for k in range(1, r + 1):
                if k == i:
                    continue
                for xi, x in enumerate(xs):
                    p = pi_factor(ctx, k, x)
                    _eq(rep, f"T{i} commutes with pi_{k}(x{xi})", Ts[i] * p, p * Ts[i])
        for i in range(2, r + 1):
            for k in range(1, m + 1):
                rhs = (Ts[i - 1] * Ls[i - 1] ** k * Ts[i - 1]).scale(ctx.qinv)
                for c in range(1, k):
                    rhs = rhs + (Ls[i] ** c * Ls[i - 1] ** (k - c) * Ts[i - 1]).scale(
                        ctx.one - ctx.qinv)
                _eq(rep, f"L{i}^{k} expansion", Ls[i] ** k, rhs)
        for i in range(1, r + 1):
            _eq(rep, f"iota(L{i}) = L{i}", iota(Ls[i]), Ls[i])
    return rep


def check_vanishing(ctx: AlgebraContext) -> CriteriaReport:
    """pi_a T_w pi~_{b'} = 0 and pi~_a T_w pi_{b'} = 0 whenever a is not below b."""
    rep = _report("lemma-2.8", ctx)
    lam = enumerate_lambda(ctx.m, ctx.r)
    perms = all_perms(ctx.r)
    with rep.timed("total"):
        pis = {a: pi_a(ctx, a) for a in lam}
        tildes = {a: pi_tilde(ctx, a) for a in lam}
        for a in lam:
            left_pi = [AlgebraElement(ctx, ctx.right_Tw(pis[a].terms, w)) for w in perms]
            left_tl = [AlgebraElement(ctx, ctx.right_Tw(tildes[a].terms, w)) for w in perms]
            for b in lam:
                if poset_leq(a, b):
                    continue
                bp = b.prime()
                bad = [list(w) for w, x in zip(perms, left_pi) if x * tildes[bp]]
                bad += [list(w) for w, x in zip(perms, left_tl) if x * pis[bp]]
                rep.add(f"a={list(a)}, b={list(b)}", not bad, a=list(a), b=list(b),
                        counterexamples=bad[:3])
    return rep


def regular_representation_report(ctx: AlgebraContext, triples: int = 200,
                                  seed: int = 0) -> CriteriaReport:
    """Left-regular matrices of the generators satisfy the relations, and engine products
    agree with products of matrices built from generator words."""
    ctx = _specialized(ctx)
    rep = _report("regular-representation", ctx)
    r = ctx.r
    with rep.timed("matrices"):
        M = [left_regular_matrix(generator(ctx, i)) for i in range(r)]
        n = ctx.dimension
        one = ctx.domain.one
        zero = ctx.domain.zero
        I = ExactMatrix.from_rows([[one if i == j else zero for j in range(n)] for i in range(n)])
    q = ctx.domain.q
    qI = ExactMatrix.from_rows([[q if i == j else zero for j in range(n)] for i in range(n)])
    with rep.timed("relations"):
        if r >= 2:
            rep.add("M0 M1 M0 M1 = M1 M0 M1 M0", M[0] @ M[1] @ M[0] @ M[1] == M[1] @ M[0] @ M[1] @ M[0])
        for i in range(1, r - 1):
            rep.add(f"matrix braid at i={i}", M[i] @ M[i + 1] @ M[i] == M[i + 1] @ M[i] @ M[i + 1])
        for i in range(r):
            for j in range(i + 2, r):
                rep.add(f"M{i} M{j} = M{j} M{i}", M[i] @ M[j] == M[j] @ M[i])
        for i in range(1, r):
            rep.add(f"(M{i} - q)(M{i} + 1) = 0", ((M[i] - qI) @ (M[i] + I)).is_zero())
        char = I
        for u in ctx.domain.u:
            uI = ExactMatrix.from_rows([[u if i == j else zero for j in range(n)] for i in range(n)])
            char = char @ (M[0] - uI)
        rep.add("prod (M0 - u_i) = 0", char.is_zero())
    # matrices of L_i and T_w from generator words only
    qinv = ctx.domain.qinv
    qinvI = ExactMatrix.from_rows([[qinv if i == j else zero for j in range(n)] for i in range(n)])
    Lm = [None, M[0]]
    for i in range(2, r + 1):
        Lm.append(qinvI @ M[i - 1] @ Lm[i - 1] @ M[i - 1])
    cache: dict = {}

    def mat(key):
        if key not in cache:
            c, w = key
            out = I
            for i, e in enumerate(c, start=1):
                for _ in range(e):
                    out = out @ Lm[i]
            for i in reduced_word(w):
                out = out @ M[i]
            cache[key] = out
        return cache[key]

    with rep.timed("triples"):
        rng = random.Random(seed)
        basis = ctx.basis()
        e1 = ctx.coords(ctx.unit())
        bad = []
        for _ in range(triples):
            keys = [rng.choice(basis) for _ in range(3)]
            x, y, z = (ctx.basis_element(k) for k in keys)
            engine = ctx.coords(x * y * z)
            oracle = (mat(keys[0]) @ mat(keys[1]) @ mat(keys[2])).apply(e1)
            if engine != oracle:
                bad.append([[list(c), list(w)] for c, w in keys])
        rep.add(f"engine products agree with matrix products on {triples} triples", not bad,
                counterexamples=bad[:3])
    return rep


# ---------------------------------------------------------------- the v_a tower

def check_va_structure(ctx: AlgebraContext) -> CriteriaReport:
    """Vanishing off w_a, the T_i intertwining, the L-eigenvalues and closure of v_a H(S_r)."""
    rep = _report("prop-3.1", ctx)
    r = ctx.r
    with rep.timed("total"):
        for a in enumerate_lambda(ctx.m, r):
            ap = a.prime()
            wa = w_of(a)
            pa, pt = pi_a(ctx, a), pi_tilde(ctx, ap)
            bad = [list(d) for d in double_reps(a, ap)
                   if d != wa and AlgebraElement(ctx, ctx.right_Tw(pa.terms, d)) * pt]
            rep.add(f"a={list(a)}: pi_a T_d pi~_a' = 0 for d != w_a", not bad, a=list(a),
                    counterexamples=bad)
            v = v_elem(ctx, a)
            winv = perm_inverse(wa)
            for i in young_generators(ap, r):
                _eq(rep, f"a={list(a)}: v_a T{i} = T{winv[i - 1]} v_a",
                    v * generator(ctx, i), generator(ctx, winv[i - 1]) * v, a=list(a))
            for j in range(1, ctx.m + 1):
                if a[j - 1] < a[j]:
                    i = r - a[j] + 1
                    _eq(rep, f"a={list(a)}: v_a L{i} = u{j} v_a", v * jucys_murphy(ctx, i),
                        v.scale(ctx.domain.u[j - 1]), a=list(a))
            unit = pr_h_unit(ctx, a, v)
            group = set(young_subgroup(tuple(ap), r))
            for i in range(1, r + 1):
                coords = va_coordinates(ctx, a, v * jucys_murphy(ctx, i), v=v, unit=unit)
                ok = coords is not None and all(
                    w in group and all(w[k] == k + 1 for k in range(i, r)) for w in coords)
                rep.add(f"a={list(a)}: v_a L{i} in v_a H(S_{i}) and v_a H(S_a')", ok, a=list(a))
            coords = va_coordinates(ctx, a, v * generator(ctx, 0), v=v, unit=unit)
            rep.add(f"a={list(a)}: v_a T0 in span of v_a T_w", coords is not None, a=list(a))
    return rep


def check_freeness(ctx: AlgebraContext) -> CriteriaReport:
    """pr_h(v_a) = q^c L^h T_{w_a'}^{-1}, and v_a H is free on {v_a T_w} of rank r!."""
    rep = _report("thm-3.4", ctx)
    sym = ctx
    spec = _specialized(ctx)
    rep.specialization = spec.domain.describe()
    units = {}
    with rep.timed("total"):
        for a in enumerate_lambda(ctx.m, ctx.r):
            try:
                unit = pr_h_unit(sym, a)
                units[str(list(a))] = str(unit)
                rep.add(f"a={list(a)}: pr_h(v_a) has the unit-times-T_(w_a')^-1 shape", True,
                        unit=str(unit))
            except AssertionError as exc:
                rep.add(f"a={list(a)}: pr_h(v_a) has the unit-times-T_(w_a')^-1 shape", False,
                        error=str(exc))
            v = v_elem(spec, a)
            got = rank(span_vectors(v, all_perms(ctx.r)))
            rep.add(f"a={list(a)}: rank of v_a T_w is r!", got == factorial(ctx.r),
                    a=list(a), rank=got)
            whole = rank(ideal_vectors(v))
            rep.add(f"a={list(a)}: v_a H = v_a H(S_r)", whole == got, a=list(a), rank=whole)
    rep.values = {"units": units}
    return rep


def check_z_pairs(ctx: AlgebraContext) -> CriteriaReport:
    """v_a h_a' v_a = v_a z_a' = z_a v_a, centrality, the conjugation identity and
    v_a H v_a = v_a z_a' H(S_a')."""
    rep = _report("prop-3.6", ctx)
    spec = _specialized(ctx)
    with rep.timed("symbolic"):
        for a in enumerate_lambda(ctx.m, ctx.r):
            try:
                zp = z_pair(ctx, a)
            except AssertionError as exc:
                rep.add(f"a={list(a)}: z_a' extracted", False, error=str(exc))
                continue
            ap = a.prime()
            ha = T(ctx, w_of(ap))
            lhs = zp.v * ha * zp.v
            _eq(rep, f"a={list(a)}: v_a h_a' v_a = v_a z_a'", lhs, zp.v * zp.z_prime)
            _eq(rep, f"a={list(a)}: v_a h_a' v_a = z_a v_a", lhs, zp.z * zp.v)
            _eq(rep, f"a={list(a)}: T_(w_a) z_a' = z_a T_(w_a)",
                T(ctx, w_of(a)) * zp.z_prime, zp.z * T(ctx, w_of(a)))
            rep.add(f"a={list(a)}: z_a' central in H(S_a')",
                    commutes_with_subalgebra(zp.z_prime, ap), a=list(a))
            rep.add(f"a={list(a)}: z_a central in H(S_a)",
                    commutes_with_subalgebra(zp.z, a), a=list(a))
    with rep.timed("column spaces"):
        for a in enumerate_lambda(ctx.m, ctx.r):
            zp = z_pair(spec, a)
            lhs = [spec.coords(zp.v * spec.basis_element(k) * zp.v) for k in spec.basis()]
            rhs = span_vectors(zp.v * zp.z_prime, young_subgroup(tuple(a.prime()), ctx.r))
            rl, rr, both = rank(lhs), rank(rhs), rank(lhs + rhs)
            rep.add(f"a={list(a)}: v_a H v_a = v_a z_a' H(S_a')", rl == rr == both,
                    a=list(a), ranks=[rl, rr, both])
    return rep


def check_z_formula(ctx: AlgebraContext) -> CriteriaReport:
    """z_{r_i'} equals the closed product for every i."""
    rep = _report("lemma-4.1", ctx)
    with rep.timed("total"):
        for i in range(1, ctx.m + 1):
            zp = z_pair(ctx, r_comp(i, ctx.m, ctx.r))
            _eq(rep, f"z_(r_{i}') = closed product", zp.z_prime, z_formula_ri(ctx, i), i=i)
    return rep


def check_invertibility(ctx: AlgebraContext) -> CriteriaReport:
    """The f_{m,r,i} criterion plus the idempotent equivalences at one specialization."""
    ctx = _specialized(ctx)
    rep = check_invertibility_criterion(ctx)
    rep.checks.extend(idempotent_report(ctx).checks)
    return rep


def check_orthogonality(ctx: AlgebraContext) -> CriteriaReport:
    rep = morita_dimension_report(_specialized(ctx))
    rep.check = "prop-3.10"
    return rep


def check_morita(ctx: AlgebraContext) -> CriteriaReport:
    return morita_dimension_report(_specialized(ctx))


# ---------------------------------------------------------------- section 4 ranks

def check_decomposition(ctx: AlgebraContext) -> CriteriaReport:
    """rank V_i = (m-i+1) r!, V_i = V_(i+1) + V~_i, and v_{a_-|} H splits as the v_{a_i} H."""
    ctx = _specialized(ctx)
    rep = _report("dec-4.15", ctx)
    m, r = ctx.m, ctx.r
    rf = factorial(r)
    with rep.timed("total"):
        for a in enumerate_lambda(m, r):
            a = CumComposition(a)
            b = a.right()
            k = next(j for j in range(1, m + 1) if a[j] == r)
            V = [None] + [ideal_vectors(V_generator(ctx, a, i)) for i in range(1, m + 1)]
            ranks = [None] + [rank(V[i]) for i in range(1, m + 1)]
            for i in range(1, m + 1):
                rep.add(f"a={list(a)}: rank V_{i} = {m - i + 1} r!", ranks[i] == (m - i + 1) * rf,
                        a=list(a), rank=ranks[i])
            for i in range(1, m):
                rep.add(f"a={list(a)}: V_{i + 1} inside V_{i}", rank(V[i] + V[i + 1]) == ranks[i],
                        a=list(a))
            rep.add(f"a={list(a)}: V_1 = v_(a_-|) H",
                    rank(V[1] + ideal_vectors(v_elem(ctx, b))) == ranks[1], a=list(a))
            for i in range(k, m):
                vt = ideal_vectors(V_tilde_generator(ctx, a, i))
                rt = rank(vt)
                inter = intersection_dim(vt, V[i + 1])
                inside = rank(vt + V[i]) == ranks[i]
                rep.add(f"a={list(a)}: V_{i} = V_{i + 1} + V~_{i} directly, rank V~_{i} = r!",
                        rt == rf and inter == 0 and inside and rt + ranks[i + 1] == ranks[i],
                        a=list(a), rank=rt, intersection=inter)
            shifted = a.shifted()
            spaces = [ideal_vectors(v_elem(ctx, ai)) for ai in shifted]
            rks = [rank(sp) for sp in spaces]
            total = rank([v for sp in spaces for v in sp])
            pair_ok = all(intersection_dim(spaces[i], spaces[j]) == 0
                          for i in range(m) for j in range(i + 1, m))
            rep.add(f"a={list(a)}: v_(a_i) H pairwise trivial, ranks sum to rank v_(a_-|) H",
                    pair_ok and total == sum(rks) == ranks[1], a=list(a), ranks=rks,
                    total=total)
    return rep


def _deg(a, j: int) -> int:
    return sum(1 for ai in a[1:-1] if ai >= j)


def check_spanning(ctx: AlgebraContext) -> CriteriaReport:
    """pi(a; x) H is spanned by pi(a; x) L^c T_w with deg_j + c_j <= m - 1, for every
    ordering x of the u's."""
    ctx = _specialized(ctx)
    rep = _report("lemma-4.4", ctx)
    from itertools import permutations
    m, r = ctx.m, ctx.r
    basis = ctx.basis()
    with rep.timed("total"):
        for a in enumerate_lambda(m, r):
            degs = [_deg(a, j) for j in range(1, r + 1)]
            keep = [n for n, (c, _) in enumerate(basis)
                    if all(d + cj <= m - 1 for d, cj in zip(degs, c))]
            for xs in permutations(ctx.domain.u):
                p = pi_general(ctx, a, xs[:m - 1])
                full = ideal_vectors(p)
                small = [full[n] for n in keep]
                rs, rf = rank(small), rank(full)
                rep.add(f"a={list(a)}, x={[str(x) for x in xs]}: B_a spans pi(a) H",
                        rs == rf and rank(small + full) == rs, a=list(a), rank=rf,
                        spanning_set_rank=rs, size=len(keep))
    return rep


def check_semisimplicity(ctx: AlgebraContext) -> CriteriaReport:
    return semisimplicity_check(_specialized(ctx))


# ---------------------------------------------------------------- section 1

def check_combinatorics(ctx_or_mr) -> CriteriaReport:
    """Coset factorizations and w_a identities, exhaustively over Lambda[m, r]."""
    m, r = (ctx_or_mr.m, ctx_or_mr.r) if isinstance(ctx_or_mr, AlgebraContext) else ctx_or_mr
    rep = CriteriaReport("symcomb-1.x", m, r)
    with rep.timed("total"):
        _check_basics(rep, r)
        _check_cosets_sr(rep, r)
        for a in enumerate_lambda(m, r):
            _check_one(rep, CumComposition(a), r)
    return rep


def _check_basics(rep: CriteriaReport, r: int) -> None:
    bad = [w for w in all_perms(r)
           if l_(w) != len(reduced_word(w)) or word_to_perm(reduced_word(w), r) != w]
    rep.add("reduced words multiply back with the inversion-count length", not bad,
            counterexamples=[list(w) for w in bad[:3]])
    bad = [(i, j) for i in range(1, r + 1) for j in range(1, r + 1)
           if perm_inverse(s_ij(i, j, r)) != s_ij(j, i, r)]
    rep.add("s_(i,j)^-1 = s_(j,i)", not bad, counterexamples=bad[:3])
    bad = []
    for k in range(r + 1):
        for i in range(r + 1 - k):
            for j in range(r + 1 - k - i):
                w = w_shift(i, j, r, k)
                if w != w_block(i, j, r, k) or perm_inverse(w) != w_shift(j, i, r, k):
                    bad.append((i, j, k))
    rep.add("w_(i,j)^(k) matches its two-row form and inverts to w_(j,i)^(k)", not bad,
            counterexamples=bad[:3])


def l_(w) -> int:
    return perm_length(tuple(w))


def _check_cosets_sr(rep: CriteriaReport, r: int) -> None:
    seen = []
    additive = True
    for i in range(1, r + 1):
        d = s_ij(i, r, r)
        for y in all_perms(r - 1):
            y = embed(y, r)
            w = perm_mul(d, y)
            seen.append(w)
            additive &= l_(w) == l_(d) + l_(y)
    rep.add("S_r is the disjoint union of s_(i,r) S_(r-1), lengths additive",
            additive and sorted(seen) == sorted(all_perms(r)) and len(set(seen)) == len(seen))


def _check_one(rep: CriteriaReport, a: CumComposition, r: int) -> None:
    tag = f"a={list(a)}"
    ap = a.prime()
    m = a.m
    # companions
    if r >= 1:
        rep.add(f"{tag}: (a_|-)' = (a')_-| and (a_-|)' = (a')_|-",
                a.left().prime() == ap.right() and a.right().prime() == ap.left())
        sh = a.shifted()
        dec = all(poset_leq(sh[i + 1], sh[i]) and sh[i + 1] != sh[i] for i in range(m - 1))
        k = next(j for j in range(1, m + 1) if a[j] == r)
        rep.add(f"{tag}: a_1 > a_2 > .. > a_m and a_k = a", dec and sh[k - 1] == a)
    rep.add(f"{tag}: composition round trip",
            CumComposition.from_composition(a.theta()) == a)
    # cosets
    reps = coset_reps(a)
    group = young_subgroup(tuple(a), r)
    cosets = {}
    for w in all_perms(r):
        minimal = min((perm_mul(y, w) for y in group), key=l_)
        cosets.setdefault(minimal, set()).add(w)
    rep.add(f"{tag}: |D_a| = r!/|S_a| with one minimal representative per coset",
            len(reps) == factorial(r) // young_order(a) and set(reps) == set(cosets))
    # factorization of double coset representatives
    if r >= 2:
        bad = []
        al = a.left()
        for d in double_reps(a, ap):
            found = False
            for j in range(1, m + 1):
                if a[j - 1] >= a[j]:
                    continue
                sj = s_ij(a[j], r, r)
                d1 = perm_mul(perm_inverse(sj), d)
                if d1[-1] != r or l_(d) != l_(sj) + l_(d1):
                    continue
                b = CumComposition(list(a[:j]) + [x - 1 for x in a[j:]])
                if d1[:-1] in double_reps(b, al.prime()):
                    found = True
                    break
            if not found:
                bad.append(list(d))
        rep.add(f"{tag}: every d in D_(a,a') is s_(a_j,r) d_1 with d_1 in D_(b,(a_|-)')",
                not bad, counterexamples=bad[:3])
    # w_a as a product of shifted blocks
    wa = w_of(a)
    prod_w = tuple(range(1, r + 1))
    total = 0
    for t in range(m - 1, 0, -1):
        f = w_shift(a[t], a[t + 1] - a[t], r, a[m] - a[t + 1])
        prod_w = perm_mul(prod_w, f)
        total += l_(f)
    rep.add(f"{tag}: w_a is the product of shifted w-blocks, lengths additive",
            prod_w == wa and total == l_(wa))
    # w_a properties
    winv = perm_inverse(wa)
    rep.add(f"{tag}: w_a^-1 = w_a' and w_a in D_(a,a')",
            winv == w_of(ap) and wa in double_reps(a, ap))
    conj = {perm_mul(perm_mul(winv, y), wa) for y in group}
    rep.add(f"{tag}: w_a^-1 S_a w_a = S_a'", conj == set(young_subgroup(tuple(ap), r)))
    cuts = set(a[1:])
    bad = [j for j in range(1, r) if j not in cuts
           and perm_mul(perm_mul(winv, s(j, r)), wa) != s(wa[j - 1], r)]
    rep.add(f"{tag}: w_a^-1 s_j w_a = s_((j)w_a) off the cut points", not bad,
            counterexamples=bad)
    # relation between w_(a_i) and w_(a_-|)
    if r >= 1:
        b = a.right()
        wb = embed(w_of(b), r)
        bad = []
        for i, ai in enumerate(a.shifted(), start=1):
            x, y = s_ij(b[i] + 1, r, r), s_ij(r, r - b[i - 1], r)
            w = perm_mul(perm_mul(x, wb), y)
            if w != w_of(ai) or l_(w) != l_(x) + l_(wb) + l_(y):
                bad.append(i)
        rep.add(f"{tag}: w_(a_i) = s_(b_i+1,r) w_(a_-|) s_(r,r-b_(i-1)), lengths additive",
                not bad, counterexamples=bad)
        k = next(j for j in range(1, m + 1) if a[j] != 0)
        al = a.left()
        x = s_ij(a[k], r, r)
        wl = embed(w_of(al), r)
        ok_a = wa == perm_mul(x, wl) and l_(wa) == l_(x) + l_(wl)
        y = s_ij(r, a[k], r)
        wlp = embed(w_of(al.prime()), r)
        wap = w_of(ap)
        ok_b = wap == perm_mul(wlp, y) and l_(wap) == l_(wlp) + l_(y)
        rep.add(f"{tag}: w_a = s_(a_k,r) w_(a_|-) and w_a' = w_((a_|-)') s_(r,a_k)", ok_a and ok_b,
                first=ok_a, second=ok_b)


# ---------------------------------------------------------------- dispatch

CHECKS = {
    "relations": check_relations,
    "prop-2.5": check_commutators,
    "lemma-2.8": check_vanishing,
    "prop-3.1": check_va_structure,
    "thm-3.4": check_freeness,
    "prop-3.6": check_z_pairs,
    "lemma-4.1": check_z_formula,
    "prop-4.3": check_invertibility,
    "prop-3.10": check_orthogonality,
    "cor-3.11": check_morita,
    "dec-4.15": check_decomposition,
    "lemma-4.4": check_spanning,
    "thm-5.2": check_semisimplicity,
    "symcomb-1.x": check_combinatorics,
}

CHECK_IDS = tuple(CHECKS)

# suites that only make sense at a specialization
SPECIALIZED = frozenset({"prop-4.3", "prop-3.10", "cor-3.11", "dec-4.15", "lemma-4.4",
                         "thm-5.2"})


def run_check(check_id: str, ctx: AlgebraContext) -> CriteriaReport:
    if check_id not in CHECKS:
        raise KeyError(f"unknown check {check_id!r}; choose from {', '.join(CHECK_IDS)}")
    return CHECKS[check_id](ctx)
