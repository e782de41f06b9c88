"""Exception hierarchy shared by every sumdex module."""


class SumdexError(Exception):
    """Base class for all sumdex errors."""


class InputError(SumdexError, ValueError):
    """Invalid parameters or malformed input."""


class LabelingError(InputError):
    """A labeling is not injective or does not cover the graph's vertices."""


class Graph6Error(InputError):
    """Malformed graph6 text; ``offset`` is the index of the offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class ConstructionError(SumdexError, RuntimeError):
    """A construction produced a labeling whose sum count differs from its claim."""
