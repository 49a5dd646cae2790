"""Exception types shared across the package."""
from __future__ import annotations


class RisBeamError(Exception):
    pass


class SpecError(RisBeamError, ValueError):
    """Invalid design input; ``field`` names the offending key when known."""

    def __init__(self, message: str, field: str | None = None, line: int | None = None):
        self.field = field
        self.line = line
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field '{field}'")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class SingularIncidenceError(RisBeamError, ArithmeticError):
    """Incident phase sum vanishes at one or more units, so v = h / s is undefined."""

    def __init__(self, units, epsilon: float):
        self.units = [tuple(int(i) for i in u) for u in units]
        self.epsilon = epsilon
        shown = ", ".join(f"({a},{b})" for a, b in self.units[:20])
        more = "" if len(self.units) <= 20 else f" ... {len(self.units) - 20} more"
        super().__init__(
            f"incident phase sum below {epsilon:g} at {len(self.units)} unit(s): {shown}{more}"
        )
