"""Monte Carlo harness: sample graphs at desk scale, measure components.

Each trial i of an experiment runs on stream i of the master seed, so
reports are byte-identical across runs and trial order. A trial samples
one graph, records the largest component's share of n, the largest
kernel component's share of the kernel mass M, and the number of
vertices living in bare cycles; the aggregate row carries the empirical
giant-component frequency P(largest >= gamma * n) next to the
invariants of the degree sequence, which is the comparison the whole
package exists to make.
"""

from __future__ import annotations

import io
import json
import math
from dataclasses import dataclass, field

from .cyclestats import c_table, longest_cycle_tail, sample_2regular
from .degseq import DegreeSequence, classify, invariants, is_feasible
from .errors import InfeasibleScenario, ValidationError
from .graphgen import sample_graph
from .kernel import build_kernel, component_stats
from .powerlaw import ACLParams, acl_sequence

__all__ = [
    "ExperimentSpec",
    "TrialRow",
    "TrialReport",
    "resolve_scenario",
    "run_experiment",
    "run_all2_experiment",
    "run_powerlaw_sweep",
]


@dataclass(frozen=True)
class ExperimentSpec:
    """Named scenario plus sampling and seeding configuration.

    scenario kinds:
      {"kind": "counts", "counts": {degree: multiplicity}}
      {"kind": "file", "path": <degree file>}
      {"kind": "regular", "degree": d, "n": n}
      {"kind": "mixture", "fractions": {degree: fraction}, "n": n}
      {"kind": "powerlaw", "alpha": a, "beta": b}
      {"kind": "star_counterexample", "k": odd k}  (n = k^2, one hub of
          degree 2k among degree-1 vertices; the realization is forced)
    """

    scenario: dict
    trials: int
    gamma: float
    master_seed: int
    sampler: str = "auto"  # config | mcmc | auto
    burn_in: int | None = None

    def __post_init__(self):
        if self.trials < 1:
            raise ValidationError("trials must be >= 1")
        if not (0 < self.gamma < 1):
            raise ValidationError("gamma must lie in (0, 1)")
        if self.sampler not in ("config", "mcmc", "auto"):
            raise ValidationError(f"unknown sampler {self.sampler!r}")

    def to_json(self) -> str:
        return json.dumps(
            {
                "scenario": self.scenario,
                "trials": self.trials,
                "gamma": self.gamma,
                "master_seed": self.master_seed,
                "sampler": self.sampler,
                "burn_in": self.burn_in,
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "ExperimentSpec":
        raw = json.loads(text)
        return cls(
            scenario=raw["scenario"],
            trials=int(raw["trials"]),
            gamma=float(raw["gamma"]),
            master_seed=int(raw["master_seed"]),
            sampler=raw.get("sampler", "auto"),
            burn_in=raw.get("burn_in"),
        )


def resolve_scenario(scenario: dict) -> DegreeSequence:
    kind = scenario.get("kind")
    if kind == "counts":
        seq = DegreeSequence({int(d): int(m) for d, m in scenario["counts"].items()})
    elif kind == "file":
        from .degseq import parse_sequence

        with open(scenario["path"], encoding="utf-8") as fh:
            seq = parse_sequence(fh.read())
    elif kind == "regular":
        seq = DegreeSequence({int(scenario["degree"]): int(scenario["n"])})
    elif kind == "mixture":
        n = int(scenario["n"])
        counts = {}
        for d, frac in scenario["fractions"].items():
            m = round(float(frac) * n)
            if m > 0:
                counts[int(d)] = m
        seq = DegreeSequence(counts)
    elif kind == "powerlaw":
        seq, _ = acl_sequence(ACLParams(float(scenario["alpha"]), float(scenario["beta"])))
    elif kind == "star_counterexample":
        k = int(scenario["k"])
        if k < 3 or k % 2 == 0:
            raise InfeasibleScenario("star counterexample needs odd k >= 3")
        seq = DegreeSequence({1: k * k - 1, 2 * k: 1})
    else:
        raise ValidationError(f"unknown scenario kind {kind!r}")
    if not is_feasible(seq):
        raise InfeasibleScenario(f"scenario {scenario} yields infeasible {seq!r}")
    return seq


@dataclass(frozen=True)
class TrialRow:
    trial: int
    largest_order: int
    largest_order_frac: float
    largest_hsize: int
    largest_hsize_frac: float
    cyclic_vertices: int
    giant: bool


@dataclass
class TrialReport:
    spec: ExperimentSpec
    seq: DegreeSequence
    rows: list = field(default_factory=list)

    @property
    def p_giant(self) -> float:
        return sum(r.giant for r in self.rows) / len(self.rows)

    @property
    def mean_order_frac(self) -> float:
        return sum(r.largest_order_frac for r in self.rows) / len(self.rows)

    @property
    def mean_hsize_frac(self) -> float:
        return sum(r.largest_hsize_frac for r in self.rows) / len(self.rows)

    def to_csv(self) -> str:
        rep = invariants(self.seq)
        buf = io.StringIO()
        buf.write(
            "trial,largest_order,largest_order_frac,largest_hsize,"
            "largest_hsize_frac,cyclic_vertices,giant\n"
        )
        for r in self.rows:
            buf.write(
                f"{r.trial},{r.largest_order},{r.largest_order_frac:.6f},"
                f"{r.largest_hsize},{r.largest_hsize_frac:.6f},"
                f"{r.cyclic_vertices},{int(r.giant)}\n"
            )
        buf.write(
            f"#aggregate,p_giant={self.p_giant:.6f},"
            f"mean_order_frac={self.mean_order_frac:.6f},"
            f"mean_hsize_frac={self.mean_hsize_frac:.6f},"
            f"M={rep.M},R={rep.R},jD={rep.jD},"
            f"ratio_hat={rep.ratio_hat.numerator}/{rep.ratio_hat.denominator}\n"
        )
        return buf.getvalue()


def trial_seed(master_seed: int, trial: int) -> int:
    """64-bit lane for one trial: drawn from stream `trial` of the master
    Philox key, so trials are independent and order-insensitive."""
    from .rng import rng_stream

    return int(rng_stream(master_seed, trial).integers(0, 2**63 - 1))


def run_experiment(spec: ExperimentSpec) -> TrialReport:
    """Sample spec.trials graphs and report component statistics.

    Trial i uses seed stream i of spec.master_seed; the giant flag is
    largest component order >= gamma * n.
    """
    seq = resolve_scenario(spec.scenario)
    n = seq.n
    report = TrialReport(spec, seq)
    for i in range(spec.trials):
        graph = sample_graph(
            seq, seed=trial_seed(spec.master_seed, i),
            method=spec.sampler, burn_in=spec.burn_in,
        )
        gstats = component_stats(graph)
        kern = build_kernel(graph)
        hstats = component_stats(kern)
        mass = kern.degree_mass
        largest = gstats.largest_order
        hsize = hstats.largest_size
        report.rows.append(
            TrialRow(
                trial=i,
                largest_order=largest,
                largest_order_frac=largest / n,
                largest_hsize=hsize,
                largest_hsize_frac=(hsize / mass) if mass else 0.0,
                cyclic_vertices=sum(len(c) for c in kern.deleted_cycles),
                giant=largest >= spec.gamma * n,
            )
        )
    return report


def run_all2_experiment(n: int, gamma: float, trials: int, seed: int):
    """All-degree-2 scenario: exact tail next to the Monte Carlo estimate.

    Samples uniform 2-regular graphs on n labeled vertices and compares
    the empirical P(some cycle >= gamma*n) with the exact DP value at
    L = ceil(gamma*n). Returns (empirical, exact, successes).
    """
    if n < 3:
        raise ValidationError("n must be >= 3")
    if not (0 < gamma <= 1):
        raise ValidationError("gamma must lie in (0, 1]")
    table = c_table(n, exact_tmax=n)
    L = math.ceil(gamma * n)
    exact = longest_cycle_tail(n, L, table) if L >= 3 else 1
    successes = 0
    for i in range(trials):
        cycles = sample_2regular(n, trial_seed(seed, i), table)
        if max(len(c) for c in cycles) >= L:
            successes += 1
    return successes / trials, exact, successes


def run_powerlaw_sweep(alphas, betas, gamma: float, trials: int, seed: int, eps=0.05, delta=0.01):
    """Invariants, verdicts, and empirical giant frequency per (alpha, beta).

    Returns a list of row dicts; see rows_to_csv for the file format.
    """
    rows = []
    stream = 0
    for alpha in alphas:
        for beta in betas:
            seq, meta = acl_sequence(ACLParams(alpha, beta))
            rep = invariants(seq)
            verdict = classify(seq, eps=eps, delta=delta).verdict
            spec = ExperimentSpec(
                scenario={"kind": "powerlaw", "alpha": alpha, "beta": beta},
                trials=trials,
                gamma=gamma,
                master_seed=seed + stream,
                sampler="auto",
            )
            stream += 1
            result = run_experiment(spec)
            rows.append(
                {
                    "alpha": alpha,
                    "beta": beta,
                    "n": seq.n,
                    "max_degree": meta["max_degree"],
                    "M": rep.M,
                    "R": rep.R,
                    "jD": rep.jD,
                    "ratio_hat": float(rep.ratio_hat),
                    "verdict": verdict,
                    "p_giant": result.p_giant,
                }
            )
    return rows


def rows_to_csv(rows) -> str:
    buf = io.StringIO()
    buf.write("alpha,beta,n,max_degree,M,R,jD,ratio_hat,verdict,p_giant\n")
    for r in rows:
        buf.write(
            f"{r['alpha']:.6f},{r['beta']:.6f},{r['n']},{r['max_degree']},"
            f"{r['M']},{r['R']},{r['jD']},{r['ratio_hat']:.6f},"
            f"{r['verdict']},{r['p_giant']:.6f}\n"
        )
    return buf.getvalue()
