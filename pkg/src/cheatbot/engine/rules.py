from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Game(str, Enum):
    CHEATING_ROBOT = "cheating_robot"
    SURROUNDING = "surrounding"
    BODYGUARD = "bodyguard"


@dataclass(frozen=True)
class Ruleset:
    """Which game is played.

    ``colocation`` and ``guards_first`` only affect the bodyguard game:
    colocation lets the president share a vertex with a guard; with
    guards_first the guards are placed first and the president moves second,
    otherwise the president is placed first and also moves first.
    """

    game: Game
    colocation: bool = True
    guards_first: bool = True

    def __post_init__(self):
        object.__setattr__(self, "game", Game(self.game))
        if self.game is not Game.BODYGUARD and (not self.colocation or not self.guards_first):
            raise ValueError("bodyguard options only apply to the bodyguard game")

    @property
    def key(self) -> str:
        if self.game is Game.BODYGUARD:
            return f"bodyguard[coloc={int(self.colocation)},first={int(self.guards_first)}]"
        return self.game.value


CHEATING = Ruleset(Game.CHEATING_ROBOT)
SURROUNDING = Ruleset(Game.SURROUNDING)
BODYGUARD = Ruleset(Game.BODYGUARD)

BODYGUARD_OPTION_SETS = tuple(
    Ruleset(Game.BODYGUARD, colocation=c, guards_first=f) for c in (True, False) for f in (True, False)
)
