"""Exception types shared across the package."""


class InputError(ValueError):
    """Caller passed something outside an operation's domain."""


class PreconditionError(InputError):
    """A structural precondition on the graph or partition does not hold."""


class InternalError(RuntimeError):
    """An invariant that the algorithms guarantee was found broken."""
