"""Shared test helpers: compact profile builders and independent checks."""

from schulze import Ballot, CandidateRegistry, Profile, default_registry

DATA_DIR = __import__("pathlib").Path(__file__).parent / "data"


def registry(*names: str) -> CandidateRegistry:
    return CandidateRegistry(tuple(names))


def profile(reg: CandidateRegistry, *votes: str, weights=None) -> Profile:
    """Build a profile from strings like "a>b>c"."""
    ballots = []
    for i, vote in enumerate(votes):
        order = tuple(reg.index[name.strip()] for name in vote.split(">"))
        weight = 1 if weights is None else weights[i]
        ballots.append(Ballot(order, weight))
    return Profile(reg, tuple(ballots))


def cycle3() -> Profile:
    """The 3-cycle profile {a>b>c, b>c>a, c>a>b}."""
    reg = default_registry(3)
    return profile(reg, "a>b>c", "b>c>a", "c>a>b")


def has_cycle(m: int, edges) -> bool:
    """Independent cycle check (iterative DFS, three colors)."""
    succ = {x: [] for x in range(m)}
    for a, b in edges:
        succ[a].append(b)
    color = [0] * m  # 0 white, 1 gray, 2 black
    for start in range(m):
        if color[start]:
            continue
        stack = [(start, iter(succ[start]))]
        color[start] = 1
        while stack:
            node, it = stack[-1]
            advanced = False
            for nxt in it:
                if color[nxt] == 1:
                    return True
                if color[nxt] == 0:
                    color[nxt] = 1
                    stack.append((nxt, iter(succ[nxt])))
                    advanced = True
                    break
            if not advanced:
                color[node] = 2
                stack.pop()
    return False
