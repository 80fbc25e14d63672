from ._hlpg import (
    ContactViolation,
    Error,
    EvalError,
    Game,
    LimitError,
    Net,
    alarm_system,
    concurrent_machines,
    diagnostics,
    parse,
    self_reconfiguring_robots,
)

__all__ = [
    "ContactViolation",
    "Error",
    "EvalError",
    "Game",
    "LimitError",
    "Net",
    "alarm_system",
    "concurrent_machines",
    "diagnostics",
    "parse",
    "self_reconfiguring_robots",
]
