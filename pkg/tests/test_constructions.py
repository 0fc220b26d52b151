"""The elements pi_a, v_a, z_a, e_a and the right ideals they generate."""

from __future__ import annotations

import pytest

from arikikoike import AlgebraElement, Specialization, context, generator, jucys_murphy
from arikikoike.algebra import from_word
from arikikoike.linalg import rank
from arikikoike.constructions import (
    NotInvertible, V_generator, epsilon, idempotent_e, invert_in_subalgebra, pi_a, pi_tilde,
    pr_h_unit, right_ideal, v_elem, va_coordinates, z_formula_ri, z_pair,
)
from arikikoike.symcomb import enumerate_lambda


def el(ctx, terms):
    return AlgebraElement(ctx, {k: ctx.domain.coerce(v) for k, v in terms.items()})


V012 = {
    ((0, 0), (2, 1)): "u1*u2",
    ((0, 1), (1, 2)): "q*u2 - u2",
    ((0, 1), (2, 1)): "-u2",
    ((1, 0), (2, 1)): "-u1",
    ((1, 1), (1, 2)): "-q + 1",
    ((1, 1), (2, 1)): "1",
}


def test_pi_examples():
    ctx = context(2, 2)
    l1, l2 = jucys_murphy(ctx, 1), jucys_murphy(ctx, 2)
    u1, u2 = (ctx.scalar(u) for u in ctx.domain.u)
    assert pi_a(ctx, [0, 1, 2]) == l1 - u2
    assert pi_a(ctx, [0, 2, 2]) == (l1 - u2) * (l2 - u2)
    assert pi_tilde(ctx, [0, 1, 2]) == l1 - u1
    assert pi_a(ctx, [0, 0, 2]) == ctx.unit()


def test_v_frozen_value():
    ctx = context(2, 2)
    v = v_elem(ctx, [0, 1, 2])
    assert v == el(ctx, V012)
    l1 = jucys_murphy(ctx, 1)
    u1, u2 = (ctx.scalar(u) for u in ctx.domain.u)
    assert v == (l1 - u2) * generator(ctx, 1) * (l1 - u1)
    assert v == from_word(ctx, [l1 - u2, "T1", l1 - u1])


def test_unit_of_top_component():
    ctx = context(2, 2)
    units = {str(pr_h_unit(ctx, a)) for a in enumerate_lambda(2, 2)}
    assert units == {"1", "q"}


def test_va_coordinates():
    ctx = context(2, 2)
    a = [0, 1, 2]
    v = v_elem(ctx, a)
    assert va_coordinates(ctx, a, v) == {(1, 2): ctx.one}
    assert va_coordinates(ctx, a, v * generator(ctx, 1)) == {(2, 1): ctx.one}
    assert va_coordinates(ctx, a, generator(ctx, 0)) is None


def test_z_formula_examples():
    ctx = context(2, 1)
    u1, u2 = ctx.domain.u
    assert z_formula_ri(ctx, 1) == ctx.scalar(u1 - u2)
    ctx = context(2, 2)
    assert z_formula_ri(ctx, 2) == el(ctx, {
        ((0, 0), (1, 2)): "u1^2 - 2*u1*u2 + u2^2",
        ((0, 0), (2, 1)): "-u1*u2 + q^-1*u1*u2 + u2^2 - q^-1*u2^2",
    })
    with pytest.raises(ValueError):
        z_formula_ri(ctx, 3)


def test_z_pair_is_in_the_young_subalgebra():
    ctx = context(2, 2)
    zp = z_pair(ctx, [0, 1, 2])
    assert zp.v == v_elem(ctx, [0, 1, 2])
    assert all(c == (0, 0) for c, _ in zp.z.terms)


def test_rank_of_v_a_H():
    ctx = context(2, 2, Specialization(2, [1, 5]))
    assert right_ideal(v_elem(ctx, [0, 1, 2])).rank == 2


def test_invert_in_subalgebra():
    ctx = context(2, 2, Specialization(2, [1, 3]))
    assert invert_in_subalgebra(ctx, ctx.scalar(-2), [0, 2, 2]) == ctx.scalar("-1/2")
    t1 = generator(ctx, 1)
    inv = invert_in_subalgebra(ctx, t1, [0, 2, 2])
    assert inv * t1 == ctx.unit()
    with pytest.raises(NotInvertible):
        invert_in_subalgebra(ctx, ctx.element(), [0, 2, 2])
    with pytest.raises(ValueError):
        invert_in_subalgebra(ctx, generator(ctx, 0), [0, 2, 2])


def test_idempotent_example():
    ctx = context(2, 1, Specialization(2, [1, 3]))
    e = idempotent_e(ctx, [0, 1, 1])
    assert e == ctx.scalar("3/2") - jucys_murphy(ctx, 1).scale("1/2")
    assert e * e == e


def test_epsilon_small_cases():
    ctx = context(2, 1, Specialization(2, [1, 3]))
    assert epsilon(ctx) == ctx.unit()
    one = context(1, 2, Specialization(2, [3]))
    assert epsilon(one) == one.unit()
    assert v_elem(one, [0, 2]) == one.unit()


def test_epsilon_is_idempotent():
    ctx = context(2, 2, Specialization(2, [3, 5]))
    eps = epsilon(ctx)
    assert eps * eps == eps


def test_epsilon_fails_at_a_collision():
    # u1 = u2 makes z_(r_i) vanish
    ctx = context(2, 1, Specialization(2, [3, 3]))
    with pytest.raises(NotInvertible):
        epsilon(ctx)


def test_symbolic_domain_has_no_inverses():
    ctx = context(2, 2)
    with pytest.raises(TypeError):
        idempotent_e(ctx, [0, 1, 2])


def test_V1_is_the_ideal_of_the_right_companion():
    ctx = context(2, 2, Specialization(2, [3, 5]))
    v1 = right_ideal(V_generator(ctx, [0, 1, 2], 1))
    vb = right_ideal(v_elem(ctx, [0, 1, 1]))
    assert v1.rank == vb.rank == 2 * 2
    assert rank(v1.vectors + vb.vectors) == 4


def test_composition_mismatch_raises():
    with pytest.raises(ValueError):
        v_elem(context(2, 2), [0, 1, 1, 2])
