"""Coefficient rings: Laurent polynomials and specializations."""

from __future__ import annotations

import math

import flint
import pytest

from arikikoike import LaurentPoly, Specialization, SymbolicDomain, generic_specialization
from arikikoike import parse_specialization
from arikikoike.rings import parse_poly


def P(text, m=2):
    return parse_poly(text, m)


def test_difference_of_squares():
    assert P("(u1 - u2)*(u1 + u2)") == P("u1^2 - u2^2")


def test_zero_absorbs():
    assert (P("u1 + q") * 0).is_zero()
    assert P("u1 - u1").is_zero()


def test_q_inverse_cancels():
    assert P("q^-1") * P("q") == 1
    assert P("q^-3").unit_inverse() == P("q^3")


def test_units_are_signed_q_powers():
    assert P("-q^-2").is_unit()
    assert not P("2*q").is_unit()
    with pytest.raises(ZeroDivisionError):
        P("u1").unit_inverse()


def test_degree_q_tracks_the_shift():
    assert P("q^-2*u1 + q^3").degree_q() == (-2, 3)


def test_mismatched_variable_counts_raise():
    with pytest.raises(ValueError):
        P("u1", 2) + P("u1", 3)


def test_text_round_trip():
    p = parse_poly("-3*q^-2*u1^2*u3 + 1", 3)
    assert parse_poly(str(p), 3) == p


def test_specialize_examples():
    s = Specialization(1, [1, 3])
    assert s.evaluate(P("u1 - u2")) == -2
    assert Specialization(2, [1, 1]).evaluate(P("q^-1")) == flint.fmpq(1, 2)


def test_specialize_rejects_wrong_m():
    with pytest.raises(ValueError):
        Specialization(2, [1, 2, 3]).evaluate(P("u1"))


def test_quantum_characteristic():
    assert Specialization(-1, [1, 3]).e == 2
    assert Specialization(2, [1, 3]).e == math.inf
    assert Specialization(1, [1, 3]).e == math.inf
    # 1 + 2 + 4 = 7 = 0 in GF(7)
    assert Specialization(2, [1, 3], prime=7).e == 3
    # q = 1 in GF(5): 1 + 1 + 1 + 1 + 1 = 0
    assert Specialization(1, [1, 3], prime=5).e == 5


def test_bad_specializations_raise():
    with pytest.raises(ValueError):
        Specialization(0, [1, 2])
    with pytest.raises(ValueError):
        Specialization(2, [1, 2], prime=6)
    with pytest.raises(ValueError):
        Specialization("1/7", [1, 2], prime=7)
    with pytest.raises(ValueError):
        Specialization(2, [])


def test_parse_specialization():
    s = parse_specialization("q=1/2,u=[3,-5]")
    assert s.q == flint.fmpq(1, 2) and s.u == (3, -5) and s.prime is None
    t = parse_specialization("q=2, u=[1,3], field=Fp:7")
    assert t.prime == 7 and t.describe() == "q=2,u=[1,3],field=Fp:7"
    assert parse_specialization(t.describe()) == t
    with pytest.raises(ValueError):
        parse_specialization("q=2")


def test_generic_specialization_uses_odd_primes():
    assert generic_specialization(3).describe() == "q=2,u=[3,5,7]"


def test_symbolic_domain_coerces_strings():
    d = SymbolicDomain(2)
    assert d.coerce("q*u1") == d.q * d.u[0]
    with pytest.raises(TypeError):
        d.coerce(1.5)
    with pytest.raises(ValueError):
        d.coerce(LaurentPoly.const(1, 3))
