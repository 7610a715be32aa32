"""Shared brute-force oracles, kept independent of the library internals."""

from itertools import combinations, permutations

import pytest


def enumerate_realizations(degrees):
    """All labeled simple graphs with the given degree vector, by scanning
    every m-subset of possible edges. Only viable for tiny n."""
    n = len(degrees)
    total = sum(degrees)
    if total % 2:
        return []
    m = total // 2
    slots = list(combinations(range(n), 2))
    found = []
    for edges in combinations(slots, m):
        deg = [0] * n
        for u, v in edges:
            deg[u] += 1
            deg[v] += 1
        if deg == list(degrees):
            found.append(tuple(sorted(edges)))
    return found


def enumerate_two_regular(t):
    """Every labeled 2-regular simple graph on {0..t-1} as a frozenset of
    edges, built by recursively assigning the lowest unplaced vertex a
    cycle. Deduplicated through a set, so double counting would show."""
    results = set()

    def place(remaining, acc):
        if not remaining:
            results.add(frozenset(acc))
            return
        rest = sorted(remaining)
        v = rest[0]
        others = rest[1:]
        for length in range(3, len(rest) + 1):
            for combo in combinations(others, length - 1):
                for perm in permutations(combo):
                    if perm[0] > perm[-1]:
                        continue  # one direction per undirected cycle
                    cyc = (v,) + perm
                    edges = frozenset(
                        (a, b) if a < b else (b, a)
                        for a, b in zip(cyc, cyc[1:] + cyc[:1])
                    )
                    place(set(remaining) - set(cyc), acc | edges)

    if t == 0:
        return [frozenset()]
    place(set(range(t)), frozenset())
    return sorted(results, key=sorted)


@pytest.fixture(scope="session")
def chi2_pvalue():
    from scipy.stats import chisquare

    def run(observed, expected):
        return chisquare(observed, expected).pvalue

    return run
