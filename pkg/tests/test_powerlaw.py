import math

import mpmath
import pytest

from degreelab.errors import ConvergenceFailure, DomainError, ValidationError
from degreelab.powerlaw import ACLParams, acl_sequence, beta0, zeta


def test_acl_example_ln100():
    seq, meta = acl_sequence(ACLParams(math.log(100), 2.0))
    assert seq.counts == {1: 100, 2: 25, 3: 11, 4: 6, 5: 4, 6: 2, 7: 2, 8: 1, 9: 1, 10: 1}
    assert seq.n == 153
    assert seq.degree_sum == 280
    assert not meta["parity_fixed"]


def test_acl_parity_fix():
    seq, meta = acl_sequence(ACLParams(0.0, 1.0))
    assert seq.counts == {1: 2}
    assert meta["parity_fixed"]


def test_acl_example_ln8():
    seq, meta = acl_sequence(ACLParams(math.log(8), 3.0))
    assert seq.counts == {1: 8, 2: 1}
    assert seq.degree_sum == 10
    assert meta["max_degree"] == 2


def test_acl_counts_nonincreasing_and_bounded():
    params = ACLParams(7.3, 2.4)
    seq, meta = acl_sequence(params)
    degs = sorted(seq.counts)
    for lo, hi in zip(degs, degs[1:]):
        if lo == 1:
            continue  # parity fix may bump degree 1
        assert seq.counts[lo] >= seq.counts[hi]
    assert max(degs) <= meta["max_degree"]


def test_acl_even_after_fix():
    for alpha, beta in [(3.0, 1.7), (5.5, 2.2), (8.0, 3.1), (2.0, 0.9)]:
        seq, _ = acl_sequence(ACLParams(alpha, beta))
        assert seq.degree_sum % 2 == 0


def test_acl_budget_overflow():
    with pytest.raises(OverflowError):
        acl_sequence(ACLParams(30.0, 1.0), vertex_budget=10_000)


def test_acl_parameter_validation():
    with pytest.raises(ValidationError):
        ACLParams(-1.0, 2.0)
    with pytest.raises(ValidationError):
        ACLParams(1.0, 0.0)


def test_zeta_closed_forms():
    assert abs(zeta(2, 1e-10) - math.pi**2 / 6) <= 1e-10
    assert abs(zeta(4, 1e-10) - math.pi**4 / 90) <= 1e-10


def test_zeta_against_mpmath():
    for x, tol in [(1.5, 1e-8), (1.2, 1e-9), (1.9, 1e-10), (2.9, 1e-12), (6.0, 1e-12)]:
        assert abs(zeta(x, tol) - float(mpmath.zeta(x))) <= tol


def test_zeta_frozen_value():
    assert abs(zeta(1.5, 1e-8) - 2.61237535) <= 2e-8


def test_zeta_strictly_decreasing():
    xs = [1.1, 1.3, 1.7, 2.0, 2.5, 3.0, 4.0]
    vals = [zeta(x, 1e-10) for x in xs]
    assert all(a > b for a, b in zip(vals, vals[1:]))


def test_zeta_domain():
    with pytest.raises(DomainError):
        zeta(1.0, 1e-8)
    with pytest.raises(DomainError):
        zeta(0.5, 1e-8)


def test_threshold_sign_checks():
    # f(beta) = zeta(beta-2) - 2*zeta(beta-1) changes sign inside (3.2, 3.5)
    f = lambda b: zeta(b - 2, 1e-10) - 2 * zeta(b - 1, 1e-10)
    assert f(3.5) < 0
    assert f(3.9) < 0
    assert f(3.2) > 0


def test_beta0_value():
    assert abs(beta0(1e-4) - 3.47875) <= 1e-4


def test_beta0_residual():
    b0 = beta0(1e-6)
    gap = zeta(b0 - 2, 1e-12) - 2 * zeta(b0 - 1, 1e-12)
    assert abs(gap) < 1e-4  # |f'| near the root is O(10), so this is ~10*tol


def test_beta0_bad_bracket():
    with pytest.raises(ConvergenceFailure):
        beta0(1e-4, bracket=(3.6, 3.9))


def test_threshold_separates_empirical_sign():
    # large-scale sequences: sum i(i-2) n_i / n positive below the root,
    # nonpositive above it
    from degreelab.degseq import invariants

    alpha = math.log(1e6)
    below, _ = acl_sequence(ACLParams(alpha, 3.3))
    above, _ = acl_sequence(ACLParams(alpha, 3.6))
    assert invariants(below).q_hat > 0
    assert invariants(above).q_hat <= 0
