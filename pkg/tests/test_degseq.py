import random
from fractions import Fraction

import pytest

from degreelab.degseq import (
    DegreeSequence,
    check_claim0,
    classify,
    invariants,
    is_feasible,
    parse_sequence,
    r_lower_bound_check,
)
from degreelab.errors import (
    InfeasibleSequence,
    ParseError,
    PreconditionViolated,
    ValidationError,
)

from conftest import enumerate_realizations


# -- parsing ---------------------------------------------------------------

def test_parse_list_form():
    seq = parse_sequence("3\n3\n3\n3\n")
    assert seq.counts == {3: 4}
    assert seq.n == 4


def test_parse_counts_form():
    seq = parse_sequence("#counts\n1\t900\n3\t100\n")
    assert seq.counts == {1: 900, 3: 100}
    assert seq.n == 1000


def test_parse_zero_degree_rejected():
    with pytest.raises(ValidationError):
        parse_sequence("0\n2\n")


def test_parse_forms_agree():
    list_form = parse_sequence("1\n1\n3\n1\n3\n")
    counts_form = parse_sequence("#counts\n1\t3\n3\t2\n")
    assert list_form == counts_form


def test_parse_malformed_line_number():
    with pytest.raises(ParseError) as err:
        parse_sequence("3\nbanana\n2\n")
    assert err.value.line_no == 2
    with pytest.raises(ParseError) as err:
        parse_sequence("#counts\n3\t2\n4 5\n")
    assert err.value.line_no == 3


def test_parse_empty():
    with pytest.raises(ValidationError):
        parse_sequence("\n\n")


# -- feasibility -----------------------------------------------------------

def test_feasible_examples():
    assert is_feasible(DegreeSequence({3: 4}))        # K4
    assert not is_feasible(DegreeSequence({1: 3}))    # odd sum
    assert not is_feasible(DegreeSequence({4: 1, 1: 2}))


def test_feasible_4_1_2_matches_exhaustive():
    # cross-check the frozen example by exhaustive search on 3 vertices
    assert enumerate_realizations([4, 1, 1]) == []
    assert enumerate_realizations([1, 1, 4]) == []


def test_feasible_matches_enumeration_small():
    rnd = random.Random(20)
    for _ in range(300):
        n = rnd.randint(2, 6)
        degs = sorted(rnd.randint(1, n) for _ in range(n))
        seq = DegreeSequence.from_list(degs)
        expect = bool(enumerate_realizations(degs))
        assert is_feasible(seq) == expect, degs


def test_feasible_matches_havel_hakimi():
    from degreelab.graphgen import havel_hakimi

    rnd = random.Random(21)
    for _ in range(300):
        n = rnd.randint(2, 12)
        degs = [rnd.randint(1, n - 1) for _ in range(n)]
        seq = DegreeSequence.from_list(degs)
        try:
            graph = havel_hakimi(seq)
            built = True
            assert sorted(graph.degrees().tolist()) == sorted(degs)
        except InfeasibleSequence:
            built = False
        assert is_feasible(seq) == built, degs


# -- invariants ------------------------------------------------------------

def test_invariants_k4():
    rep = invariants(DegreeSequence({3: 4}))
    assert (rep.jD, rep.R, rep.M) == (1, 12, 12)
    assert rep.ratio_hat == 1


def test_invariants_all_two():
    rep = invariants(DegreeSequence({2: 5}))
    assert (rep.jD, rep.R, rep.M) == (5, 2, 0)
    assert not rep.well_behaved


def test_invariants_star_plus_matching():
    rep = invariants(DegreeSequence({1: 9800, 198: 1}))
    assert (rep.jD, rep.R, rep.M) == (9801, 198, 9998)
    assert rep.ratio_hat == Fraction(29008, 9998)
    assert abs(float(rep.ratio_hat) - 2.90) < 0.01


def _list_form_invariants(degs):
    """Definition-level recomputation from an explicit sorted list."""
    degs = sorted(degs)
    n = len(degs)
    jD = n
    prefix = 0
    for i, d in enumerate(degs, start=1):
        prefix += d * (d - 2)
        if prefix > 0:
            jD = i
            break
    R = sum(degs[jD - 1 :])
    M = sum(d for d in degs if d != 2)
    return jD, R, M


def test_invariants_match_list_form_definition():
    rnd = random.Random(5)
    for _ in range(500):
        n = rnd.randint(1, 40)
        degs = [rnd.randint(1, 9) for _ in range(n)]
        seq = DegreeSequence.from_list(degs)
        rep = invariants(seq)
        assert (rep.jD, rep.R, rep.M) == _list_form_invariants(degs)


def test_invariants_pi_independence():
    rnd = random.Random(6)
    for _ in range(100):
        degs = [rnd.randint(1, 7) for _ in range(rnd.randint(2, 30))]
        base = invariants(DegreeSequence.from_list(degs))
        for _ in range(5):
            rnd.shuffle(degs)
            rep = invariants(DegreeSequence.from_list(degs))
            assert (rep.jD, rep.R, rep.M, rep.ratio_hat, rep.q_hat) == (
                base.jD,
                base.R,
                base.M,
                base.ratio_hat,
                base.q_hat,
            )


def test_invariants_prefix_sign_structure():
    rnd = random.Random(7)
    for _ in range(200):
        degs = sorted(rnd.randint(1, 8) for _ in range(rnd.randint(1, 25)))
        rep = invariants(DegreeSequence.from_list(degs))
        prefix = [0]
        for d in degs:
            prefix.append(prefix[-1] + d * (d - 2))
        if rep.jD < len(degs):
            assert prefix[rep.jD - 1] <= 0
            assert prefix[rep.jD] > 0


def test_report_json_keys():
    import json

    rep = invariants(DegreeSequence({3: 4}))
    data = json.loads(rep.to_json())
    assert set(data) == {"n", "degree_sum", "M", "R", "jD", "ratio_hat", "q_hat", "well_behaved"}
    assert data["ratio_hat"] == "1/1"


# -- classify --------------------------------------------------------------

def test_classify_examples():
    assert classify(DegreeSequence({3: 1000}), 0.5, 0.01, 30).verdict == "GiantWHP"
    assert classify(DegreeSequence({1: 900, 3: 100}), 0.5, 0.01, 30).verdict == "NoGiantWHP"
    assert classify(DegreeSequence({2: 5000}), 0.5, 0.01, 30).verdict == "NotWellBehaved"


def test_classify_requires_feasible():
    with pytest.raises(InfeasibleSequence):
        classify(DegreeSequence({1: 3}))


def test_classify_parameter_validation():
    with pytest.raises(ValidationError):
        classify(DegreeSequence({3: 1000}), eps=0.01, delta=0.5)


def test_classify_monotone_in_thresholds():
    rnd = random.Random(8)
    rank = {"NoGiantWHP": 0, "Indeterminate": 1, "GiantWHP": 2}
    for _ in range(60):
        degs = [rnd.randint(1, 6) for _ in range(rnd.randint(10, 60))]
        if sum(degs) % 2:
            degs[0] += 1
        seq = DegreeSequence.from_list(degs)
        if not is_feasible(seq):
            continue
        eps_grid = [Fraction(1, 100), Fraction(1, 10), Fraction(1, 2), Fraction(1, 1)]
        prev = None
        for eps in eps_grid:
            verdict = classify(seq, eps, Fraction(1, 200), lambda_thresh=1).verdict
            if prev is not None:
                # growing eps can only move GiantWHP toward NoGiantWHP
                assert rank[verdict] <= rank[prev]
            prev = verdict


# -- small oracles ---------------------------------------------------------

def test_claim0_examples():
    assert check_claim0([3, 3], 0) == {"lhs": 6, "rhs": 2, "holds": True}
    assert check_claim0([1, 3], 0) == {"lhs": 2, "rhs": 2, "holds": True}
    assert check_claim0([], 0) == {"lhs": 0, "rhs": 0, "holds": True}


def test_claim0_validation():
    with pytest.raises(ValueError):
        check_claim0([2, 3], 0)
    with pytest.raises(ValueError):
        check_claim0([0], 0)
    with pytest.raises(PreconditionViolated):
        check_claim0([1, 1, 1], 0)


def test_r_lower_bound_examples():
    assert r_lower_bound_check(DegreeSequence({3: 1000})) == {
        "R": 3000,
        "bound": 1000,
        "holds": True,
    }
    assert r_lower_bound_check(DegreeSequence({2: 100}))["bound"] == 0
    assert r_lower_bound_check(DegreeSequence({1: 900, 3: 100})) == {
        "R": 3,
        "bound": -800,
        "holds": True,
    }
