"""Exception hierarchy shared by every module."""


class OmegaLabError(Exception):
    """Base class for all library errors."""


class FiniteSet(OmegaLabError):
    """An operation needed an infinite set and got a finite one."""


class NotIncreasing(OmegaLabError):
    """A function was required to be (strictly) increasing or monotone."""


class BudgetExceeded(OmegaLabError):
    """A lazy stream ran out of evaluation steps."""


class FiniteIntersection(OmegaLabError):
    def __init__(self, message, indices=()):
        super().__init__(message)
        self.indices = tuple(indices)


class WitnessInvalid(OmegaLabError):
    def __init__(self, message, culprit=None):
        super().__init__(message)
        self.culprit = culprit


class ExhaustedChoice(OmegaLabError):
    """The greedy chooser found fewer than two unused candidates."""


class EmptyTrace(OmegaLabError):
    """A cover has a point that lies in no member."""


class NotGlueable(OmegaLabError):
    """A forced interval function produced only finitely many covering windows."""


class ScheduleMismatch(OmegaLabError):
    """A pick schedule does not fit the requested selection mode."""


class UnknownSuite(OmegaLabError):
    pass


class ParseError(OmegaLabError):
    def __init__(self, message, text="", pos=0):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos}")
