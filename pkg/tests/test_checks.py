"""Every verification suite runs clean on small cases."""

from __future__ import annotations

import pytest

from arikikoike import context, generic_specialization
from arikikoike.checks import CHECK_IDS, SPECIALIZED, run_check


@pytest.mark.parametrize("check_id", CHECK_IDS)
@pytest.mark.parametrize("m,r", [(1, 2), (2, 2), (3, 2)])
def test_suite_passes(check_id, m, r):
    spec = generic_specialization(m) if check_id in SPECIALIZED else None
    rep = run_check(check_id, context(m, r, spec))
    assert rep.check == check_id
    assert rep.passed, [(c.name, c.detail) for c in rep.failures()][:3]


def test_unknown_check():
    with pytest.raises(KeyError):
        run_check("nope", context(2, 2))


def test_specialized_suites_fall_back_to_generic_values():
    rep = run_check("lemma-4.4", context(2, 2))
    assert rep.passed
    assert rep.specialization == generic_specialization(2).describe()
