from .rules import BODYGUARD, BODYGUARD_OPTION_SETS, CHEATING, SURROUNDING, Game, Ruleset
from .moves import (
    CopTurnState,
    MoveEvent,
    PushState,
    RobberTurnState,
    after_move,
    canonicalize,
    cop_moves,
    cop_placements,
    initial_states,
    labeled_moves,
    occupied,
    robber_placements,
    robber_responses,
    surround_holds,
    vertex_of,
)
