"""Line-oriented election files.

Two bodies share one header line::

    candidates: a,b,c
    vote: 2: a > b > c          # profile body
    wmg: a b 3                  # majority-graph body (mutually exclusive)

'#' starts a comment, blank lines are ignored.  Weights are positive
integers, every vote must be a full permutation, and wmg entries for
unspecified pairs default to 0.  Canonical serialization keeps registry
order, keeps votes in input order, and emits one wmg line per nonzero
pair (x, y) with x-id < y-id, lines sorted lexicographically.
"""

from __future__ import annotations

from .election import Ballot, CandidateRegistry, Profile, WeightedMajorityGraph
from .errors import ParseError, ValidationError


def parse_election(text: str | bytes) -> Profile | WeightedMajorityGraph:
    """Parse an election file; the body determines the returned type.

    A file with no body lines is an empty profile.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")

    registry: CandidateRegistry | None = None
    ballots: list[Ballot] = []
    # (x, y) with x < y -> (weight, line number of first mention)
    wmg_entries: dict[tuple[int, int], tuple[int, int]] = {}
    first_wmg_line = 0

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        key = key.strip()
        if not sep:
            raise ParseError(lineno, f"expected '<keyword>:', got {line!r}")

        if registry is None:
            if key != "candidates":
                raise ParseError(lineno, "first line must declare candidates")
            try:
                registry = CandidateRegistry(
                    tuple(tok.strip() for tok in rest.split(","))
                )
            except ValidationError as exc:
                raise ParseError(lineno, str(exc)) from None
            continue

        if key == "candidates":
            raise ParseError(lineno, "duplicate candidates line")
        if key == "vote":
            if wmg_entries:
                raise ParseError(lineno, "vote line in a wmg file")
            ballots.append(_parse_vote(lineno, rest, registry))
        elif key == "wmg":
            if ballots:
                raise ParseError(lineno, "wmg line in a profile file")
            if not wmg_entries:
                first_wmg_line = lineno
            _parse_wmg_entry(lineno, rest, registry, wmg_entries)
        else:
            raise ParseError(lineno, f"unknown keyword {key!r}")

    if registry is None:
        raise ParseError(0, "missing candidates line")
    if wmg_entries:
        return _assemble_wmg(registry, wmg_entries, first_wmg_line)
    return Profile(registry, tuple(ballots))


def _parse_vote(lineno: int, rest: str, registry: CandidateRegistry) -> Ballot:
    weight_part, sep, order_part = rest.partition(":")
    if not sep:
        raise ParseError(lineno, "vote needs '<weight>: <order>'")
    try:
        weight = int(weight_part.strip())
    except ValueError:
        raise ParseError(lineno, f"bad weight {weight_part.strip()!r}") from None
    if weight < 1:
        raise ParseError(lineno, f"non-positive weight {weight}")
    order: list[int] = []
    for tok in order_part.split(">"):
        name = tok.strip()
        if name not in registry.index:
            raise ParseError(lineno, f"unknown candidate {name!r}")
        order.append(registry.index[name])
    if len(set(order)) != len(order):
        raise ParseError(lineno, "duplicate candidate in vote")
    if len(order) != registry.m:
        raise ParseError(lineno, "vote must rank every candidate")
    return Ballot(tuple(order), weight)


def _parse_wmg_entry(
    lineno: int,
    rest: str,
    registry: CandidateRegistry,
    entries: dict[tuple[int, int], tuple[int, int]],
) -> None:
    parts = rest.split()
    if len(parts) != 3:
        raise ParseError(lineno, "wmg line needs '<x> <y> <weight>'")
    for name in parts[:2]:
        if name not in registry.index:
            raise ParseError(lineno, f"unknown candidate {name!r}")
    x, y = registry.index[parts[0]], registry.index[parts[1]]
    if x == y:
        raise ParseError(lineno, f"self-arc on {parts[0]!r}")
    try:
        value = int(parts[2])
    except ValueError:
        raise ParseError(lineno, f"bad weight {parts[2]!r}") from None
    if x > y:
        x, y, value = y, x, -value
    if (x, y) in entries:
        prev_value, prev_line = entries[(x, y)]
        if prev_value != value:
            raise ParseError(
                lineno,
                f"conflicts with line {prev_line} for the same pair",
            )
    else:
        entries[(x, y)] = (value, lineno)


def _assemble_wmg(
    registry: CandidateRegistry,
    entries: dict[tuple[int, int], tuple[int, int]],
    first_wmg_line: int,
) -> WeightedMajorityGraph:
    m = registry.m
    w = [[0] * m for _ in range(m)]
    parity: int | None = None
    parity_line = first_wmg_line
    for (x, y), (value, lineno) in sorted(entries.items(), key=lambda e: e[1][1]):
        w[x][y] = value
        w[y][x] = -value
        if parity is None:
            parity, parity_line = value & 1, lineno
        elif value & 1 != parity:
            raise ParseError(
                lineno,
                f"parity violation: weight {value} conflicts with line {parity_line}",
            )
    if parity == 1:
        for x in range(m):
            for y in range(x + 1, m):
                if (x, y) not in entries:
                    raise ParseError(
                        first_wmg_line,
                        "parity violation: pair "
                        f"({registry.names[x]},{registry.names[y]}) defaults to 0 "
                        "but the specified weights are odd",
                    )
    return WeightedMajorityGraph(registry, tuple(tuple(row) for row in w))


def serialize_election(value: Profile | WeightedMajorityGraph) -> str:
    """Canonical text form; parse(serialize(x)) == x."""
    names = value.registry.names
    lines = ["candidates: " + ",".join(names)]
    if isinstance(value, Profile):
        for ballot in value.ballots:
            order = " > ".join(names[i] for i in ballot.order)
            lines.append(f"vote: {ballot.weight}: {order}")
    else:
        body = []
        for x in range(value.m):
            for y in range(x + 1, value.m):
                if value.w[x][y] != 0:
                    body.append(f"wmg: {names[x]} {names[y]} {value.w[x][y]}")
        lines.extend(sorted(body))
    return "\n".join(lines) + "\n"
