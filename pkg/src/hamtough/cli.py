"""Command-line front end.

Graphs come in as graph6 text, one per line, from ``--in FILE`` or stdin.
Exit codes are uniform across subcommands:

- 0  queries answered; every verification verdict was PASS or NOT_APPLICABLE
- 2  at least one COUNTEREXAMPLE verdict (or tightness contradiction)
- 1  usage errors, unreadable input, or instances that hit a cap/timeout
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from .closure import t_closure
from .degrees import DegreeProfile, chvatal_condition, predicate_pt
from .graphs import Graph, Graph6Error, encode_graph6, parse_graph6
from .hamilton import find_hamiltonian_cycle
from .harness import (
    COUNTEREXAMPLE,
    ERROR,
    CorpusFile,
    ExhaustiveLabeled,
    Explicit,
    RandomGraphs,
    SweepPlan,
    ToughSampled,
    finding_records,
    read_records,
    replay_record,
    run_rotation_properties,
    run_single_edge_sweep,
    run_tightness_search,
    run_verify_closure,
    run_verify_theorem6,
    write_records,
)
from .limits import ENV_MAX_N, InstanceTimeout, InstanceTooLarge
from .toughness import toughness

LEMMA_TOKENS = ("bc", "l7", "l8", "l9", "l11", "corollary", "theorem6", "rotations")


class _Parser(argparse.ArgumentParser):
    """argparse exits with 2 on usage errors; reserve 2 for counterexamples."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational: {text!r}") from exc


def _read_graphs(path: str | None) -> list[tuple[str, Graph]]:
    """Parse one graph6 line at a time; raise SystemExit(1) on bad input."""
    if path is None:
        source, name = sys.stdin, "<stdin>"
    else:
        try:
            source, name = open(path, "r", encoding="ascii"), path
        except OSError as exc:
            print(f"error: {exc}", file=sys.stderr)
            raise SystemExit(1)
    graphs = []
    try:
        for lineno, line in enumerate(source, start=1):
            if not line.strip():
                continue
            try:
                graphs.append((f"{name}:{lineno}", parse_graph6(line)))
            except Graph6Error as exc:
                print(f"error: {name}:{lineno}: {exc}", file=sys.stderr)
                raise SystemExit(1)
    finally:
        if path is not None:
            source.close()
    if not graphs:
        print(f"error: {name}: no graphs", file=sys.stderr)
        raise SystemExit(1)
    return graphs


def _add_input_arg(p: argparse.ArgumentParser) -> None:
    p.add_argument("--in", dest="infile", metavar="FILE",
                   help="graph6 input file (default: stdin)")


def cmd_toughness(args) -> int:
    for label, g in _read_graphs(args.infile):
        try:
            rep = toughness(g)
        except InstanceTooLarge as exc:
            print(f"error: {label}: {exc} (override with {ENV_MAX_N})",
                  file=sys.stderr)
            return 1
        if rep.is_infinite:
            print(f"{encode_graph6(g)}  toughness=infinite")
        else:
            cut = ",".join(map(str, sorted(rep.witness)))
            print(f"{encode_graph6(g)}  toughness={rep.value}  cutset={{{cut}}}")
    return 0


def cmd_ham(args) -> int:
    for label, g in _read_graphs(args.infile):
        try:
            cert = find_hamiltonian_cycle(g)
        except InstanceTooLarge as exc:
            print(f"error: {label}: {exc} (override with {ENV_MAX_N})",
                  file=sys.stderr)
            return 1
        if cert.is_hamiltonian:
            cyc = ",".join(map(str, cert.cycle.order))
            print(f"{encode_graph6(g)}  hamiltonian  cycle=({cyc})  "
                  f"nodes={cert.nodes_explored}")
        else:
            print(f"{encode_graph6(g)}  not-hamiltonian  "
                  f"nodes={cert.nodes_explored}")
    return 0


def cmd_closure(args) -> int:
    for label, g in _read_graphs(args.infile):
        try:
            res = t_closure(g, args.t)
        except ValueError as exc:
            print(f"error: {label}: {exc}", file=sys.stderr)
            return 1
        print(f"{encode_graph6(g)}  closed={encode_graph6(res.closed)}  "
              f"edges_added={len(res.trace)}")
        if args.trace:
            for u, v, dsum in res.trace:
                print(f"  + ({u},{v})  degree_sum={dsum}")
    return 0


def cmd_pt(args) -> int:
    for _, g in _read_graphs(args.infile):
        holds, i = predicate_pt(DegreeProfile.from_graph(g), args.t)
        if holds:
            print(f"{encode_graph6(g)}  P({args.t})=holds")
        else:
            print(f"{encode_graph6(g)}  P({args.t})=fails  i={i}")
    return 0


def cmd_chvatal(args) -> int:
    for _, g in _read_graphs(args.infile):
        holds, i = chvatal_condition(DegreeProfile.from_graph(g))
        if holds:
            print(f"{encode_graph6(g)}  chvatal=holds")
        else:
            print(f"{encode_graph6(g)}  chvatal=fails  i={i}")
    return 0


def _default_family_toughness(args) -> Fraction:
    if args.lemma in ("l9", "l11"):
        return Fraction(3 * args.t - 1, 2)
    if args.lemma == "l7":
        return Fraction(2)
    if args.lemma == "l8":
        return Fraction(2) + args.epsilon
    if args.lemma == "corollary":
        return args.t_prime
    if args.lemma == "theorem6":
        return Fraction(4)
    raise SystemExit(
        f"error: --tough is required for --family tough with --lemma {args.lemma}"
    )


def _build_family(args):
    n_values = tuple(range(args.n_min, args.n_max + 1))
    if args.family == "exhaustive":
        if args.n is None:
            print("error: --family exhaustive requires --n", file=sys.stderr)
            raise SystemExit(1)
        return ExhaustiveLabeled(args.n)
    if args.family == "random":
        return RandomGraphs(n_values, args.p, args.count, args.seed)
    if args.family == "tough":
        tough = args.tough if args.tough is not None else _default_family_toughness(args)
        return ToughSampled(n_values, tough, args.count, args.seed, args.max_trials)
    if args.infile is not None:
        return CorpusFile(args.infile)
    return Explicit(tuple(g for _, g in _read_graphs(None)))


def cmd_verify(args) -> int:
    family = _build_family(args)
    plan = SweepPlan(family=family, target=f"{args.lemma}")
    kw = dict(
        timeout_s=args.timeout,
        record_all=args.out is not None,
        jsonl_path=args.out,
    )
    try:
        if args.lemma == "bc":
            summary = run_verify_closure(plan, 0, **kw)
        elif args.lemma == "l11":
            summary = run_verify_closure(plan, args.t, **kw)
        elif args.lemma == "theorem6":
            summary = run_verify_theorem6(plan, **kw)
        elif args.lemma == "rotations":
            summary = run_rotation_properties(plan, **kw)
        elif args.lemma == "l7":
            summary = run_single_edge_sweep(plan, "L7", **kw)
        elif args.lemma == "l8":
            summary = run_single_edge_sweep(plan, "L8", epsilon=args.epsilon, **kw)
        elif args.lemma == "l9":
            summary = run_single_edge_sweep(plan, "L9", t=args.t, **kw)
        else:
            summary = run_single_edge_sweep(
                plan, "corollary", t_prime=args.t_prime, **kw
            )
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(summary.format())
    for rec in summary.counterexamples[:5]:
        print(f"counterexample: {rec.instance}  detail={rec.detail}")
    if summary.counts[COUNTEREXAMPLE]:
        return 2
    if summary.counts[ERROR]:
        return 1
    return 0


def cmd_search_tightness(args) -> int:
    report = run_tightness_search(
        args.t,
        args.budget,
        args.seed,
        n_values=tuple(range(args.n_min, args.n_max + 1)),
        keep=args.keep,
        timeout_s=args.timeout,
    )
    print(report.format())
    if args.out:
        write_records(finding_records(report), args.out)
    return 2 if report.contradiction else 0


def cmd_corpus_check(args) -> int:
    try:
        records = read_records(args.records)
    except (OSError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    mismatches = 0
    counterexamples = 0
    for rec in records:
        try:
            verdict, _ = replay_record(rec)
        except (ValueError, InstanceTooLarge, InstanceTimeout) as exc:
            print(f"error: {rec.experiment_id}: {exc}", file=sys.stderr)
            return 1
        if verdict != rec.verdict:
            mismatches += 1
            print(f"mismatch: {rec.experiment_id} {rec.instance}  "
                  f"stored={rec.verdict} replayed={verdict}")
        elif verdict == COUNTEREXAMPLE:
            counterexamples += 1
    print(f"records: {len(records)}  mismatches: {mismatches}  "
          f"counterexamples: {counterexamples}")
    if mismatches:
        return 1
    if counterexamples:
        return 2
    return 0


def build_parser() -> _Parser:
    parser = _Parser(prog="hamtough",
                     description="toughness, closures, and Hamiltonicity checks")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("toughness", help="exact toughness with a witness cutset")
    _add_input_arg(p)
    p.set_defaults(func=cmd_toughness)

    p = sub.add_parser("ham", help="exhaustive Hamiltonian cycle search")
    _add_input_arg(p)
    p.set_defaults(func=cmd_ham)

    p = sub.add_parser("closure", help="t-relaxed degree closure")
    _add_input_arg(p)
    p.add_argument("--t", type=int, default=0, help="degree-sum offset (default 0)")
    p.add_argument("--trace", action="store_true", help="print each added edge")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("pt", help="shifted degree condition P(t)")
    _add_input_arg(p)
    p.add_argument("--t", type=int, required=True)
    p.set_defaults(func=cmd_pt)

    p = sub.add_parser("chvatal", help="classical degree condition")
    _add_input_arg(p)
    p.set_defaults(func=cmd_chvatal)

    p = sub.add_parser("verify", help="verification sweep over a graph family")
    _add_input_arg(p)
    p.add_argument("--lemma", required=True, choices=LEMMA_TOKENS)
    p.add_argument("--family", choices=("corpus", "exhaustive", "random", "tough"),
                   default="corpus")
    p.add_argument("--n", type=int, help="order for --family exhaustive")
    p.add_argument("--n-min", type=int, default=6)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--p", type=_fraction, default=Fraction(1, 2),
                   help="edge probability for --family random")
    p.add_argument("--tough", type=_fraction,
                   help="toughness target for --family tough")
    p.add_argument("--max-trials", type=int, default=400)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--t", type=int, default=2,
                   help="offset for l9/l11 (default 2)")
    p.add_argument("--epsilon", type=_fraction, default=Fraction(1, 2),
                   help="toughness excess for l8 (default 1/2)")
    p.add_argument("--t-prime", type=_fraction, default=Fraction(5, 2),
                   help="toughness for corollary (default 5/2)")
    p.add_argument("--timeout", type=float, default=30.0,
                   help="per-instance seconds (default 30)")
    p.add_argument("--out", metavar="FILE", help="write JSONL records")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("search-tightness",
                       help="randomized search for boundary examples")
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--budget", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-min", type=int, default=6)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--keep", type=int, default=50)
    p.add_argument("--timeout", type=float, default=30.0)
    p.add_argument("--out", metavar="FILE", help="write findings as JSONL")
    p.set_defaults(func=cmd_search_tightness)

    p = sub.add_parser("corpus-check", help="replay stored JSONL records")
    p.add_argument("--records", required=True, metavar="FILE")
    p.set_defaults(func=cmd_corpus_check)

    return parser


def cli_main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InstanceTimeout as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except BrokenPipeError:
        return 1


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
