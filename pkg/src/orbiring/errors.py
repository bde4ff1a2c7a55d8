"""Domain errors raised by orbiring computations."""


class OrbiringError(Exception):
    """Base class; the CLI maps these to exit status 3."""


class ClosedFormInapplicable(OrbiringError):
    pass


class DegenerateWeights(OrbiringError):
    pass


class PositivityRequired(OrbiringError):
    pass


class OrderMismatch(OrbiringError):
    pass
