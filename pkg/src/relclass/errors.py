class UnsupportedInput(ValueError):
    """Input is well-formed but outside what the requested routine can handle."""


class InvariantViolation(RuntimeError):
    """A computed value contradicts a proven identity; indicates a bug or a false theorem."""
