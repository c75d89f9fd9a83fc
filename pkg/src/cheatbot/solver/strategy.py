"""Explicit two-cop pincer on C_n, checked against every robber strategy."""

from __future__ import annotations

from dataclasses import dataclass

from ..engine import CHEATING, RobberTurnState, robber_responses
from ..graphcore import cycle


@dataclass
class PincerReport:
    n: int
    captured_always: bool
    max_rounds: int
    max_pushes: int
    worst_line: list  # [(c1, c2, robber), ...] along a longest game


class CycleStrategy:
    """Cop 1 starts on v0 and walks down, cop 2 starts on v1 and walks up.

    A cop steps only if the robber is not on its next vertex, so neither
    ever pushes.  Once the robber's two neighbours are held, cop 1 steps onto
    him and he has no legal reply.
    """

    def __init__(self, n: int):
        if n < 3:
            raise ValueError("cycle strategy needs n >= 3")
        self.n = n
        self.graph = cycle(n)

    def initial(self) -> tuple[int, int]:
        return (0, 1)

    def move(self, cops: tuple[int, int], r: int) -> tuple[int, int]:
        n = self.n
        c1, c2 = cops
        if {(r - 1) % n, (r + 1) % n} <= {c1, c2}:
            return (r, c2) if (c1 - r) % n in (1, n - 1) else (c1, r)
        down = (c1 - 1) % n
        up = (c2 + 1) % n
        return (c1 if down == r else down, c2 if up == r else up)

    def simulate(self) -> PincerReport:
        """Exhaustive robber search: every line must end in capture."""
        g = self.graph
        start = self.initial()
        memo: dict = {}
        on_path: set = set()

        def play(cops, r):
            # returns (captured, rounds, pushes, line)
            key = (cops, r)
            if key in memo:
                return memo[key]
            if key in on_path:
                return (False, 0, 0, [])
            on_path.add(key)
            new = self.move(cops, r)
            pushers = [i for i in (0, 1) if new[i] == r and cops[i] != r]
            forbidden = frozenset(cops[i] for i in pushers)
            opts = sorted(robber_responses(RobberTurnState(tuple(sorted(new)), r, forbidden), g, CHEATING))
            if not opts:
                out = (True, 1, 0, [(cops[0], cops[1], r)])
            else:
                out = None
                for w in opts:
                    ok, rounds, pushes, line = play(new, w)
                    cand = (ok, rounds + 1, pushes + len(pushers), [(cops[0], cops[1], r)] + line)
                    if out is None or (not cand[0], cand[1], cand[2]) > (not out[0], out[1], out[2]):
                        out = cand
            on_path.discard(key)
            memo[key] = out
            return out

        results = [play(start, r) for r in range(self.n) if r not in start]
        worst = max(results, key=lambda x: (not x[0], x[1], x[2]))
        return PincerReport(
            self.n,
            all(x[0] for x in results),
            max(x[1] for x in results),
            max(x[2] for x in results),
            worst[3],
        )


def scripted_cycle_strategy(n: int) -> CycleStrategy:
    return CycleStrategy(n)
