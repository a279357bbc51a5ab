"""Exception types raised by squeezespec."""


class DomainError(ValueError):
    """Argument outside the mathematical domain of a function."""


class ConvergenceError(ArithmeticError):
    """An iterative evaluation hit its iteration cap.

    The offending inputs and the last partial state are kept on the
    instance so callers can report them.
    """

    def __init__(self, message, **diagnostics):
        super().__init__(message)
        self.diagnostics = diagnostics

    def __str__(self):
        base = super().__str__()
        if not self.diagnostics:
            return base
        extra = ", ".join(f"{k}={v!r}" for k, v in sorted(self.diagnostics.items()))
        return f"{base} ({extra})"
