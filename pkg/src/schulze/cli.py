"""Command-line front end.

Exit codes: 0 = question answered (FOUND and IMPOSSIBLE both count),
1 = usage or input error, 2 = internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .election import (
    Ballot,
    Profile,
    WeightedMajorityGraph,
    build_wmg,
    mcgarvey_profile,
)
from .engine import format_strength_table, strength_matrix, winning_set
from .errors import InternalInvariantError, SchulzeError, ValidationError
from .fileformat import parse_election, serialize_election
from .homogenize import solve_wcm_bounded
from .oracle import InstanceGenerator, brute_ucm, brute_wcm
from .ucm import (
    RuleFiring,
    resolvability_vote,
    solve_ucm_cowinner,
    solve_ucm_unique,
)


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; the contract wants 1.
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def _build_parser() -> _Parser:
    parser = _Parser(prog="schulze", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("winner", help="compute the winning set of an election file")
    p.add_argument("file", type=Path)
    p.add_argument("--strengths", action="store_true", help="also print the strength table")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("manipulate", help="decide and construct a coalitional manipulation")
    _add_manipulation_flags(p)
    p.add_argument("--explain", action="store_true", help="print the preprocessing trace")

    p = sub.add_parser("resolvability", help="single vote promoting a co-winner to unique winner")
    p.add_argument("file", type=Path)
    p.add_argument("--prefer", required=True, metavar="NAME")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("mcgarvey", help="realize a wmg file as an election file")
    p.add_argument("file", type=Path)
    p.add_argument("-o", "--output", type=Path, required=True)

    p = sub.add_parser("gen", help="generate a random election file")
    p.add_argument("--candidates", type=int, required=True, metavar="M")
    p.add_argument("--votes", type=int, required=True, metavar="N")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--wmg", action="store_true", help="emit a majority graph instead of votes")
    p.add_argument("-o", "--output", type=Path)

    p = sub.add_parser("oracle", help="answer by brute force (small instances only)")
    _add_manipulation_flags(p)
    p.add_argument(
        "--search",
        choices=["identical", "independent"],
        default="identical",
        help="common vote for all manipulators, or free per-manipulator votes",
    )

    p = sub.add_parser("explain", help="print the strength table; optionally render a report")
    p.add_argument("file", type=Path)
    p.add_argument("--report-dir", type=Path, metavar="DIR",
                   help="write wmg/strength figures and TSV matrices here")
    p.add_argument("--json", action="store_true")
    return parser


def _add_manipulation_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("file", type=Path)
    p.add_argument("--prefer", required=True, metavar="NAME")
    p.add_argument("--manipulators", type=int, metavar="K")
    p.add_argument("--mode", choices=["co-winner", "unique"], default="co-winner")
    p.add_argument("--weights", metavar="W1,..,WK",
                   help="weighted manipulators; routes to the bounded WCM solver")
    p.add_argument("--json", action="store_true")


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _dispatch(args)
    except InternalInvariantError as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 2
    except SchulzeError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def _dispatch(args: argparse.Namespace) -> int:
    handler = {
        "winner": _cmd_winner,
        "manipulate": _cmd_manipulate,
        "resolvability": _cmd_resolvability,
        "mcgarvey": _cmd_mcgarvey,
        "gen": _cmd_gen,
        "oracle": _cmd_oracle,
        "explain": _cmd_explain,
    }[args.command]
    return handler(args)


def _load(path: Path) -> Profile | WeightedMajorityGraph:
    return parse_election(path.read_text(encoding="utf-8"))


def _load_profile(path: Path) -> Profile:
    parsed = _load(path)
    if isinstance(parsed, WeightedMajorityGraph):
        return mcgarvey_profile(parsed)
    return parsed


def _load_wmg(path: Path) -> WeightedMajorityGraph:
    parsed = _load(path)
    if isinstance(parsed, Profile):
        return build_wmg(parsed)
    return parsed


def _strength_rows(strengths) -> list[list[int | None]]:
    return [list(row) for row in strengths.s]


def _trace_json(trace: tuple[RuleFiring, ...], names) -> list[dict]:
    return [
        {
            "pass": f.pass_index,
            "rule": f.rule,
            "target": names[f.target],
            "old": f.old,
            "new": f.new,
        }
        for f in trace
    ]


def _vote_lines(ballots: tuple[Ballot, ...], names) -> list[str]:
    """Election-file vote lines, merging runs of identical orders."""
    lines: list[str] = []
    run_order: tuple[int, ...] | None = None
    run_weight = 0
    for ballot in ballots + (None,):
        if ballot is not None and ballot.order == run_order:
            run_weight += ballot.weight
            continue
        if run_order is not None:
            order = " > ".join(names[i] for i in run_order)
            lines.append(f"vote: {run_weight}: {order}")
        if ballot is not None:
            run_order, run_weight = ballot.order, ballot.weight
    return lines


def _cmd_winner(args) -> int:
    graph = _load_wmg(args.file)
    strengths = strength_matrix(graph)
    winners = winning_set(graph, strengths).winners
    names = graph.registry.names
    if args.json:
        print(json.dumps({
            "command": "winner",
            "winners": [names[i] for i in winners],
            "strengths": _strength_rows(strengths),
            "outcome": None,
            "lambda": None,
            "trace": [],
        }))
        return 0
    if args.strengths:
        print(format_strength_table(strengths, names))
    print("winners: " + ",".join(names[i] for i in winners))
    return 0


def _parse_weights(raw: str) -> list[int]:
    try:
        return [int(tok) for tok in raw.split(",") if tok.strip() != ""]
    except ValueError:
        raise ValidationError(f"bad --weights value {raw!r}") from None


def _cmd_manipulate(args) -> int:
    profile = _load_profile(args.file)
    names = profile.registry.names
    c = profile.registry.id_of(args.prefer)

    if args.weights is not None:
        weights = _parse_weights(args.weights)
        if args.manipulators is not None and args.manipulators != len(weights):
            raise ValidationError(
                f"--manipulators {args.manipulators} disagrees with "
                f"{len(weights)} weights"
            )
        if args.mode != "co-winner":
            raise ValidationError("weighted manipulation supports co-winner mode only")
        outcome = solve_wcm_bounded(profile, weights, c)
        trace = ()
    else:
        if args.manipulators is None:
            raise ValidationError("--manipulators is required without --weights")
        if args.manipulators < 0:
            raise ValidationError("--manipulators must be >= 0")
        solver = solve_ucm_unique if args.mode == "unique" else solve_ucm_cowinner
        outcome = solver(profile, c, args.manipulators)
        trace = outcome.trace

    verified = None
    if outcome.found:
        final = winning_set(build_wmg(profile.extend(outcome.ballots)))
        verified = (
            final.winners == (c,) if args.mode == "unique" else c in final.winners
        )
        if not verified:
            raise InternalInvariantError("reported manipulation failed the recheck")

    if args.json:
        print(json.dumps({
            "command": "manipulate",
            "winners": None,
            "strengths": None,
            "outcome": "found" if outcome.found else "impossible",
            "lambda": [names[i] for i in outcome.order.order] if outcome.found else None,
            "votes": [
                {"weight": b.weight, "order": [names[i] for i in b.order]}
                for b in outcome.ballots
            ],
            "trace": _trace_json(trace, names),
            "verified": verified,
        }))
        return 0

    if getattr(args, "explain", False):
        graph = build_wmg(profile)
        print(format_strength_table(strength_matrix(graph), names))
        for firing in trace:
            print(firing.render(names))
    if outcome.found:
        print("FOUND")
        print("lambda: " + " > ".join(names[i] for i in outcome.order.order))
        for line in _vote_lines(outcome.ballots, names):
            print(line)
        print("verified: true")
    else:
        print("IMPOSSIBLE")
    return 0


def _cmd_resolvability(args) -> int:
    profile = _load_profile(args.file)
    names = profile.registry.names
    c = profile.registry.id_of(args.prefer)
    vote = resolvability_vote(profile, c)
    final = winning_set(build_wmg(profile.extend((vote,))))
    if final.winners != (c,):
        raise InternalInvariantError("resolvability vote failed the recheck")
    if args.json:
        print(json.dumps({
            "command": "resolvability",
            "winners": [names[c]],
            "strengths": None,
            "outcome": "found",
            "lambda": [names[i] for i in vote.order],
            "trace": [],
        }))
        return 0
    order = " > ".join(names[i] for i in vote.order)
    print(f"vote: 1: {order}")
    print(f"winners: {names[c]}")
    return 0


def _cmd_mcgarvey(args) -> int:
    parsed = _load(args.file)
    if not isinstance(parsed, WeightedMajorityGraph):
        raise ValidationError(f"{args.file} is not a wmg file")
    profile = mcgarvey_profile(parsed)
    args.output.write_text(serialize_election(profile), encoding="utf-8")
    return 0


def _cmd_gen(args) -> int:
    if args.candidates < 1:
        raise ValidationError("--candidates must be >= 1")
    if args.votes < 0:
        raise ValidationError("--votes must be >= 0")
    gen = InstanceGenerator(
        seed=args.seed,
        m_range=(args.candidates, args.candidates),
        n_range=(args.votes, args.votes),
        weight_range=(max(args.votes, 1), max(args.votes, 1)),
    )
    if args.wmg:
        instance = next(iter(gen.wmgs(1, parity=args.votes % 2)))
    else:
        instance = next(iter(gen.profiles(1)))
    text = serialize_election(instance)
    if args.output:
        args.output.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_oracle(args) -> int:
    profile = _load_profile(args.file)
    names = profile.registry.names
    c = profile.registry.id_of(args.prefer)
    if args.weights is not None:
        if args.search != "identical":
            raise ValidationError("weighted oracle search is identical-votes only")
        weights = _parse_weights(args.weights)
        outcome = brute_wcm(profile, weights, c)
        ballots = tuple(
            Ballot(order, weight)
            for order, weight in zip(outcome.votes, weights)
        )
    else:
        if args.manipulators is None:
            raise ValidationError("--manipulators is required without --weights")
        outcome = brute_ucm(
            profile, c, args.manipulators, mode=args.mode, search=args.search
        )
        ballots = tuple(Ballot(order) for order in outcome.votes)

    verified = None
    if outcome.found:
        final = winning_set(build_wmg(profile.extend(ballots)))
        verified = (
            final.winners == (c,)
            if args.weights is None and args.mode == "unique"
            else c in final.winners
        )
        if not verified:
            raise InternalInvariantError("oracle witness failed the engine recheck")

    if args.json:
        print(json.dumps({
            "command": "oracle",
            "winners": None,
            "strengths": None,
            "outcome": "found" if outcome.found else "impossible",
            "lambda": None,
            "votes": [
                {"weight": b.weight, "order": [names[i] for i in b.order]}
                for b in ballots
            ],
            "trace": [],
            "verified": verified,
        }))
        return 0
    if outcome.found:
        print("FOUND")
        for line in _vote_lines(ballots, names):
            print(line)
        print("verified: true")
    else:
        print("IMPOSSIBLE")
    return 0


def _cmd_explain(args) -> int:
    graph = _load_wmg(args.file)
    names = graph.registry.names
    strengths = strength_matrix(graph)
    winners = winning_set(graph, strengths).winners
    written = []
    if args.report_dir is not None:
        from .report import write_report

        written = write_report(graph, strengths, args.report_dir)
    if args.json:
        print(json.dumps({
            "command": "explain",
            "winners": [names[i] for i in winners],
            "strengths": _strength_rows(strengths),
            "outcome": None,
            "lambda": None,
            "trace": [],
            "report": [str(p) for p in written],
        }))
    else:
        print(format_strength_table(strengths, names))
        print("winners: " + ",".join(names[i] for i in winners))
        for path in written:
            print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
