"""Exception types shared across the package."""


class ParseError(ValueError):
    """Malformed text input. ``line`` is 1-based, or None for whole-input errors."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class PreconditionError(ValueError):
    pass


class PremiseViolated(PreconditionError):
    """A caller-asserted structural premise (e.g. planarity) turned out false."""


class BudgetExhausted(RuntimeError):
    """A search hit its node budget before reaching a decision."""

    def __init__(self, nodes):
        self.nodes = nodes
        super().__init__(f"node budget exhausted after {nodes} nodes")


class InternalInvariantError(RuntimeError):
    """A step that is guaranteed to succeed failed.

    ``bundle`` carries everything needed to reproduce the failure.
    """

    def __init__(self, message, bundle=None):
        self.bundle = bundle or {}
        super().__init__(message)
