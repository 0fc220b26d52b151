"""The acceptance criteria, each at its stated grid and tolerance (exact)."""

from __future__ import annotations

import time

import pytest

from arikikoike import context, generic_specialization
from arikikoike.checks import (
    check_combinatorics, check_commutators, check_decomposition, check_freeness, check_relations,
    check_vanishing, check_z_formula, check_z_pairs, regular_representation_report,
)
from arikikoike.criteria import (
    check_invertibility_criterion, idempotent_report, morita_dimension_report, morita_target,
    semisimplicity_check,
)
from arikikoike.grid import grid, prime_grid


def _assert_passed(rep):
    failures = [(c.name, c.detail) for c in rep.failures()]
    assert rep.passed, f"{rep.check} m={rep.m} r={rep.r} {rep.specialization}: {failures[:3]}"


@pytest.mark.criterion(1, "defining relations and commutator identities, symbolic (< 2 min)")
def test_presentation_soundness():
    t0 = time.perf_counter()
    for m, r in [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)]:
        ctx = context(m, r)
        _assert_passed(check_relations(ctx, triples=0))
        _assert_passed(check_commutators(ctx))
    assert time.perf_counter() - t0 < 120


@pytest.mark.criterion(2, "left-regular matrices satisfy the relations, 200 triples agree")
@pytest.mark.parametrize("m,r", [(2, 3), (3, 2)])
def test_engine_faithfulness(m, r):
    rep = regular_representation_report(context(m, r, generic_specialization(m)), triples=200)
    _assert_passed(rep)


@pytest.mark.criterion(3, "coset combinatorics exhaustive for m <= 3, r <= 4")
def test_combinatorics():
    for m in (1, 2, 3):
        for r in (1, 2, 3, 4):
            _assert_passed(check_combinatorics((m, r)))


@pytest.mark.criterion(4, "pi_a H pi~_b' = 0 unless a <= b, symbolic (< 5 min)")
def test_vanishing():
    t0 = time.perf_counter()
    for m, r in [(2, 3), (3, 3), (2, 4)]:
        _assert_passed(check_vanishing(context(m, r)))
    assert time.perf_counter() - t0 < 300


@pytest.mark.criterion(5, "v_a H free of rank r!, top component has the unit shape")
@pytest.mark.parametrize("m,r", [(2, 2), (2, 3), (3, 2), (3, 3)])
def test_freeness(m, r):
    rep = check_freeness(context(m, r))
    _assert_passed(rep)
    assert len(rep.values["units"]) > 0


@pytest.mark.criterion(6, "z_a' central, z_(r_i') equals the closed product, m <= 3, r <= 3")
@pytest.mark.parametrize("m", [1, 2, 3])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_z_elements(m, r):
    ctx = context(m, r)
    _assert_passed(check_z_pairs(ctx))
    _assert_passed(check_z_formula(ctx))


def _grid_has_required_points(m):
    pts = grid(m)
    assert len(pts) >= 10
    assert any(p.q == 1 for p in pts) and any(p.q == -1 for p in pts)
    collisions = [p for p in pts
                  if any(p.u[i] == p.q ** k * p.u[j] for i in range(m) for j in range(m)
                         if i != j for k in (-2, -1, 1, 2))]
    assert collisions


@pytest.mark.criterion(7, "z_(r_i') invertible iff f_(m,r,i) != 0 on the grid; e_a idempotent")
@pytest.mark.parametrize("m,r", [(2, 2), (2, 3), (3, 2)])
def test_invertibility_on_grid(m, r):
    _grid_has_required_points(m)
    for spec in grid(m) + prime_grid(m):
        ctx = context(m, r, spec)
        _assert_passed(check_invertibility_criterion(ctx))
        _assert_passed(idempotent_report(ctx))


@pytest.mark.criterion(8, "e_a H e_b = 0 for a != b, rank(eps H eps) = sum prod lambda_i!")
@pytest.mark.parametrize("m,r", [(2, 2), (2, 3), (3, 2)])
def test_morita_dimension(m, r):
    rep = morita_dimension_report(context(m, r, generic_specialization(m)))
    _assert_passed(rep)
    if (m, r) == (2, 2):
        assert morita_target(2, 2) == 5


@pytest.mark.criterion(9, "rank V_i = (m-i+1) r!, v_(a_-|) H splits into the v_(a_i) H")
@pytest.mark.parametrize("m,r", [(2, 2), (2, 3), (3, 2)])
def test_decomposition(m, r):
    _assert_passed(check_decomposition(context(m, r, generic_specialization(m))))


@pytest.mark.criterion(10, "d_W != 0 agrees with the trace-form oracle on the grid (< 10 min)")
def test_semisimplicity_on_grid():
    t0 = time.perf_counter()
    verdicts = set()
    for m, r in [(2, 2), (2, 3), (3, 2)]:
        _grid_has_required_points(m)
        for spec in grid(m):
            rep = semisimplicity_check(context(m, r, spec))
            _assert_passed(rep)
            verdicts.add(rep.values["criterion_semisimple"])
    assert verdicts == {True, False}
    assert time.perf_counter() - t0 < 600
