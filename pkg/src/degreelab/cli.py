"""Command-line entry point.

Thin adapters only: every subcommand parses flags, reads files, calls
one library function, and writes its output. Exit codes: 0 for success
(including negative mathematical answers such as "infeasible"), 1 for
invalid input, 2 for internal errors. Diagnostics go to stderr, data to
stdout or the requested file.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import cyclestats, degseq, experiments, explore, graphgen, kernel, powerlaw
from .errors import DegreeLabError

__all__ = ["dispatch", "main"]


class _ArgumentError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _ArgumentError(message)


def _build_parser() -> _Parser:
    p = _Parser(prog="degreelab", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("invariants", help="degree-sequence invariants as JSON")
    sp.add_argument("seqfile")
    sp.add_argument("--lambda-thresh", type=int, default=degseq.DEFAULT_LAMBDA_THRESH)

    sp = sub.add_parser("feasible", help="simple-graph feasibility check")
    sp.add_argument("seqfile")

    sp = sub.add_parser("classify", help="giant/no-giant verdict")
    sp.add_argument("seqfile")
    sp.add_argument("--eps", type=Fraction, default=degseq.DEFAULT_EPS)
    sp.add_argument("--delta", type=Fraction, default=degseq.DEFAULT_DELTA)
    sp.add_argument("--lambda-thresh", type=int, default=degseq.DEFAULT_LAMBDA_THRESH)
    sp.add_argument("--json", action="store_true", help="emit the full JSON record")

    sp = sub.add_parser("sample", help="sample a uniform realization")
    sp.add_argument("seqfile")
    sp.add_argument("--method", choices=["config", "mcmc", "auto"], default="auto")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--burn-in", type=int, default=None)
    sp.add_argument("--out", required=True, help="edge-list output path")

    sp = sub.add_parser("kernel", help="suppress degree-2 vertices, report the kernel")
    sp.add_argument("edgefile")
    sp.add_argument("--out", required=True, help="kernel JSON output path")

    sp = sub.add_parser("explore", help="exploration trace of a kernel")
    sp.add_argument("edgefile")
    sp.add_argument("--s0", default="auto",
                    help="comma-separated 1-indexed vertices, or 'auto' for the priming set")
    sp.add_argument("--omega", type=float, default=explore.DEFAULT_OMEGA)
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--budget", type=int, default=None)
    sp.add_argument("--stop-at-zero", action="store_true")
    sp.add_argument("--csv", required=True, help="trace CSV output path")

    sp = sub.add_parser("cyclestats", help="cycle-count table and tail probabilities")
    sp.add_argument("--t", type=int, required=True)

    sp = sub.add_parser("powerlaw", help="power-law degree sequences / threshold root")
    sp.add_argument("mode", nargs="?", choices=["beta0"], default=None)
    sp.add_argument("--alpha", type=float)
    sp.add_argument("--beta", type=float)
    sp.add_argument("--tol", type=float, default=1e-4)
    sp.add_argument("--out", help="counts-form degree file output path")

    sp = sub.add_parser("experiment", help="run a Monte Carlo experiment spec")
    sp.add_argument("specfile")
    sp.add_argument("--out", required=True, help="report CSV output path")

    return p


def _read(path: str) -> str:
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path: str, text: str):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _cmd_invariants(args) -> int:
    seq = degseq.parse_sequence(_read(args.seqfile))
    print(degseq.invariants(seq, args.lambda_thresh).to_json())
    return 0


def _cmd_feasible(args) -> int:
    seq = degseq.parse_sequence(_read(args.seqfile))
    print("feasible" if degseq.is_feasible(seq) else "infeasible")
    return 0


def _cmd_classify(args) -> int:
    seq = degseq.parse_sequence(_read(args.seqfile))
    result = degseq.classify(seq, args.eps, args.delta, args.lambda_thresh)
    print(result.to_json() if args.json else result.verdict)
    return 0


def _cmd_sample(args) -> int:
    seq = degseq.parse_sequence(_read(args.seqfile))
    graph = graphgen.sample_graph(seq, args.seed, args.method, args.burn_in)
    _write(args.out, graphgen.write_edge_list(graph))
    return 0


def _cmd_kernel(args) -> int:
    graph = graphgen.read_edge_list(_read(args.edgefile))
    _write(args.out, kernel.build_kernel(graph).to_json() + "\n")
    return 0


def _cmd_explore(args) -> int:
    graph = graphgen.read_edge_list(_read(args.edgefile))
    kern = kernel.build_kernel(graph)
    if args.s0 == "auto":
        s0 = explore.priming_set(kern, args.omega)
    else:
        s0 = {int(tok) - 1 for tok in args.s0.split(",")}
    trace = explore.explore(kern, s0, args.seed, args.budget, args.stop_at_zero)
    _write(args.csv, trace.to_csv())
    print(f"steps={len(trace.steps)} stop={trace.stop_reason}", file=sys.stderr)
    return 0


def _cmd_cyclestats(args) -> int:
    t = args.t
    table = cyclestats.c_table(t, exact_tmax=min(t, cyclestats.EXACT_CAP))
    if table.has_exact(t):
        print(f"# C_{t} = {table.c(t)}")
    else:
        print(f"# log C_{t} = {table.logc[t]:.12f}")
    print("ell,p_ell,tail_ge_ell")
    for ell in range(3, t + 1):
        p = float(cyclestats.p_cycle(ell, t, table))
        tail = float(cyclestats.longest_cycle_tail(t, ell, table))
        print(f"{ell},{p:.12g},{tail:.12g}")
    return 0


def _cmd_powerlaw(args) -> int:
    if args.mode == "beta0":
        print(f"{powerlaw.beta0(args.tol):.6f}")
        return 0
    if args.alpha is None or args.beta is None:
        raise DegreeLabError("powerlaw needs --alpha and --beta (or the beta0 mode)")
    seq, meta = powerlaw.acl_sequence(powerlaw.ACLParams(args.alpha, args.beta))
    lines = ["#counts"] + [f"{d}\t{m}" for d, m in sorted(seq.counts.items())]
    text = "\n".join(lines) + "\n"
    if args.out:
        _write(args.out, text)
    else:
        sys.stdout.write(text)
    print(f"n={seq.n} parity_fixed={meta['parity_fixed']}", file=sys.stderr)
    return 0


def _cmd_experiment(args) -> int:
    spec = experiments.ExperimentSpec.from_json(_read(args.specfile))
    report = experiments.run_experiment(spec)
    _write(args.out, report.to_csv())
    print(f"p_giant={report.p_giant:.6f}", file=sys.stderr)
    return 0


_HANDLERS = {
    "invariants": _cmd_invariants,
    "feasible": _cmd_feasible,
    "classify": _cmd_classify,
    "sample": _cmd_sample,
    "kernel": _cmd_kernel,
    "explore": _cmd_explore,
    "cyclestats": _cmd_cyclestats,
    "powerlaw": _cmd_powerlaw,
    "experiment": _cmd_experiment,
}


def dispatch(argv) -> int:
    """Run one subcommand; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except _ArgumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        return _HANDLERS[args.command](args)
    except (DegreeLabError, OSError, json.JSONDecodeError, OverflowError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # internal error
        print(f"internal error: {exc!r}", file=sys.stderr)
        return 2


def main():
    sys.exit(dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
