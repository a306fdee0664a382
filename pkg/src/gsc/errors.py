"""Exception hierarchy shared by all modules."""


class GscError(Exception):
    """Base class for all errors raised by this package."""


class InputError(GscError):
    """Malformed input data (bad schema, unknown vertex, invalid word...).

    Carries an optional JSON-pointer style path locating the offending field.
    """

    def __init__(self, message, path=None):
        self.path = path
        super().__init__(message if path is None else f"{path}: {message}")


class PreconditionError(GscError):
    """An operation refused to run because its stated precondition fails."""


class BudgetExceeded(GscError):
    """A configured resource budget ran out.

    `stage` names how far the computation got before stopping.
    """

    def __init__(self, message, stage=None):
        self.stage = stage
        super().__init__(message if stage is None else f"{message} (stage: {stage})")
