from .reference import solve_reference
from .solve import (
    DEFAULT_BUDGET,
    BudgetExceeded,
    SolveResult,
    SolverError,
    SolveStats,
    estimate_transitions,
    solve,
)
from .cache import NO_CACHE, SolveCache
from .params import (
    PARAMETERS,
    Certificate,
    ParameterReport,
    bodyguard_number,
    captured_in_one_move,
    cheating_robot_number,
    cop_wins_with,
    one_round_placement,
    parameter_report,
    push_number,
    surrounding_number,
)
from .strategy import CycleStrategy, PincerReport, scripted_cycle_strategy
from .trace import Trace, TraceRound, best_play_trace
