import random
from collections import Counter

import pytest

from degreelab.degseq import DegreeSequence, is_feasible
from degreelab.errors import EdgeNotPresent, RejectionBudgetExceeded, TooLarge
from degreelab.experiments import trial_seed
from degreelab.graphgen import (
    OrientedEdgePair,
    SimpleGraph,
    count_disconnecting_switch_pairs,
    havel_hakimi,
    read_edge_list,
    sample_configuration_rejection,
    sample_switch_mcmc,
    switch,
    write_edge_list,
)

from conftest import enumerate_realizations

N_UNIFORMITY = 30_000


def c4():
    return SimpleGraph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])


# -- switch ----------------------------------------------------------------

def test_switch_c4_valid():
    out = switch(c4(), OrientedEdgePair((0, 1), (2, 3)))
    assert out.edges == [(0, 2), (0, 3), (1, 2), (1, 3)]


def test_switch_c4_blocked_by_existing_edge():
    assert switch(c4(), OrientedEdgePair((0, 1), (3, 2))) is None


def test_switch_same_edge_rejected():
    with pytest.raises(EdgeNotPresent):
        switch(c4(), OrientedEdgePair((0, 1), (0, 1)))
    with pytest.raises(EdgeNotPresent):
        switch(c4(), OrientedEdgePair((0, 1), (1, 0)))


def test_switch_missing_edge():
    with pytest.raises(EdgeNotPresent):
        switch(c4(), OrientedEdgePair((0, 2), (1, 2)))


def test_switch_preserves_degrees_and_inverts():
    rnd = random.Random(3)
    for trial in range(200):
        seq = DegreeSequence.from_list(
            sorted(rnd.choice([[1, 1, 2, 2, 3, 3], [2, 2, 2, 2, 2, 2], [1, 1, 1, 3, 3, 3], [3, 3, 3, 3]]))
        )
        g = sample_switch_mcmc(seq, trial_seed(1, trial), burn_in=300)
        m = g.m
        e1 = g.edges[rnd.randrange(m)]
        e2 = g.edges[rnd.randrange(m)]
        if e1 == e2:
            continue
        if rnd.random() < 0.5:
            e1 = e1[::-1]
        if rnd.random() < 0.5:
            e2 = e2[::-1]
        out = switch(g, OrientedEdgePair(e1, e2))
        if out is None:
            continue
        assert sorted(out.degrees().tolist()) == sorted(g.degrees().tolist())
        (u, v), (x, y) = e1, e2
        back = switch(out, OrientedEdgePair((u, x), (v, y)))
        assert back == g


# -- samplers: forced realizations ------------------------------------------

def test_rejection_unique_realizations():
    assert sample_configuration_rejection(DegreeSequence({1: 2}), 11).edges == [(0, 1)]
    assert sample_configuration_rejection(DegreeSequence({2: 3}), 11).edges == [
        (0, 1),
        (0, 2),
        (1, 2),
    ]


def test_mcmc_k4_always():
    for seed in range(5):
        g = sample_switch_mcmc(DegreeSequence({3: 4}), seed, burn_in=1000)
        assert g.m == 6  # K4 is the only realization


def test_mcmc_single_call_long_burn_in():
    g = sample_switch_mcmc(DegreeSequence({2: 4}), 17, burn_in=10_000)
    assert sorted(g.degrees().tolist()) == [2, 2, 2, 2]
    assert g.num_components() == 1


def test_sampler_determinism():
    seq = DegreeSequence({1: 4, 3: 2, 2: 3})
    a = sample_configuration_rejection(seq, 123)
    b = sample_configuration_rejection(seq, 123)
    assert a == b
    c = sample_switch_mcmc(seq, 99, burn_in=500)
    d = sample_switch_mcmc(seq, 99, burn_in=500)
    assert c == d


def test_rejection_guard():
    # hub degree 40 on a sum-98 sequence: ratio (40^2+58)/98 > 6
    with pytest.raises(RejectionBudgetExceeded):
        sample_configuration_rejection(DegreeSequence({40: 1, 1: 58}), 0)


def test_sampler_degrees_match():
    rnd = random.Random(14)
    for trial in range(50):
        degs = [rnd.randint(1, 4) for _ in range(rnd.randint(4, 20))]
        if sum(degs) % 2:
            degs[0] += 1
        seq = DegreeSequence.from_list(degs)
        if not is_feasible(seq):
            continue
        g1 = sample_configuration_rejection(seq, trial_seed(5, trial))
        g2 = sample_switch_mcmc(seq, trial_seed(6, trial), burn_in=500)
        want = sorted(seq.to_list().tolist())
        assert sorted(g1.degrees().tolist()) == want
        assert sorted(g2.degrees().tolist()) == want


# -- samplers: uniformity ----------------------------------------------------

@pytest.mark.parametrize(
    "counts,expected_count",
    [({1: 4}, 3), ({2: 4}, 3), ({2: 2, 1: 2}, 2)],
)
def test_uniformity_both_samplers(counts, expected_count, chi2_pvalue):
    seq = DegreeSequence(counts)
    degs = [int(d) for d in seq.to_list()]
    reals = enumerate_realizations(degs)
    assert len(reals) == expected_count
    index = {r: i for i, r in enumerate(reals)}

    for name, draw in [
        ("config", lambda i: sample_configuration_rejection(seq, trial_seed(301, i))),
        ("mcmc", lambda i: sample_switch_mcmc(seq, trial_seed(302, i))),
    ]:
        hits = Counter(index[tuple(draw(i).edges)] for i in range(N_UNIFORMITY))
        observed = [hits[i] for i in range(expected_count)]
        expected = [N_UNIFORMITY / expected_count] * expected_count
        p = chi2_pvalue(observed, expected)
        assert p > 0.01, (name, counts, observed, p)


def test_samplers_indistinguishable(chi2_pvalue):
    # two-sample comparison on every sequence with <= 5 realizations
    from scipy.stats import chi2_contingency

    for counts in [{1: 2}, {2: 3}, {3: 4}, {1: 4}, {2: 4}, {2: 2, 1: 2}]:
        seq = DegreeSequence(counts)
        reals = enumerate_realizations([int(d) for d in seq.to_list()])
        assert 1 <= len(reals) <= 5
        if len(reals) == 1:
            continue  # nothing to compare
        index = {r: i for i, r in enumerate(reals)}
        a = Counter(
            index[tuple(sample_configuration_rejection(seq, trial_seed(401, i)).edges)]
            for i in range(6000)
        )
        b = Counter(
            index[tuple(sample_switch_mcmc(seq, trial_seed(402, i)).edges)]
            for i in range(6000)
        )
        table = [[a[i] + 1 for i in range(len(reals))], [b[i] + 1 for i in range(len(reals))]]
        p = chi2_contingency(table).pvalue
        assert p > 0.01, (counts, table, p)


# -- disconnecting switch pairs ----------------------------------------------

def test_disconnecting_examples():
    tri = SimpleGraph(3, [(0, 1), (1, 2), (0, 2)])
    assert count_disconnecting_switch_pairs(tri) == 0
    two_edges = SimpleGraph(4, [(0, 1), (2, 3)])
    assert count_disconnecting_switch_pairs(two_edges) == 0
    c6 = SimpleGraph(6, [(i, (i + 1) % 6) for i in range(6)])
    n = count_disconnecting_switch_pairs(c6)
    assert 0 < n <= 8 * 36


def test_c6_splits_into_triangles():
    c6 = SimpleGraph(6, [(i, (i + 1) % 6) for i in range(6)])
    out = switch(c6, OrientedEdgePair((0, 1), (4, 3)))
    assert out is not None
    assert out.num_components() == 2


def test_disconnecting_cap():
    with pytest.raises(TooLarge):
        count_disconnecting_switch_pairs(SimpleGraph(20, [(i, i + 1) for i in range(19)]))


def test_disconnecting_bound_random():
    rnd = random.Random(77)
    for trial in range(60):
        n = rnd.randint(4, 10)
        p = rnd.choice([0.2, 0.35, 0.5])
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rnd.random() < p]
        g = SimpleGraph(n, edges)
        assert count_disconnecting_switch_pairs(g) <= 8 * n * n


# -- havel-hakimi -----------------------------------------------------------

def test_havel_hakimi_realizes():
    for counts in [{3: 4}, {1: 6}, {2: 5}, {5: 2, 1: 10}, {3: 2, 2: 2, 1: 2}]:
        seq = DegreeSequence(counts)
        g = havel_hakimi(seq)
        assert sorted(g.degrees().tolist()) == sorted(seq.to_list().tolist())


# -- edge list round trip ----------------------------------------------------

def test_edge_list_roundtrip():
    g = SimpleGraph(5, [(0, 4), (1, 2), (0, 1)])
    text = write_edge_list(g)
    assert text.splitlines()[0] == "n 5"
    assert read_edge_list(text) == g
