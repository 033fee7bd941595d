"""Exception types shared across the package."""


class OrbicheckError(Exception):
    """Base class for errors raised by orbicheck."""


class CapExceededError(OrbicheckError):
    """A finite search or closure exceeded its configured size cap."""


class NotNormalError(OrbicheckError):
    def __init__(self, message: str, witness: tuple[int, int]):
        super().__init__(message)
        self.witness = witness


class ShapeError(OrbicheckError):
    """A subchart shape or subgroup is not admissible in its chart."""


class InternalConsistencyError(OrbicheckError):
    """A constructed object failed a check that the deciders guarantee."""


class ScenarioError(OrbicheckError):
    """A scenario document failed to parse or validate."""

    def __init__(self, message: str, path: str | None = None, line: int | None = None,
                 column: int | None = None):
        where = []
        if path:
            where.append(path)
        if line is not None:
            where.append(f"line {line}" + (f", column {column}" if column is not None else ""))
        super().__init__(f"{': '.join(where)}: {message}" if where else message)
        self.path = path
        self.line = line
        self.column = column
