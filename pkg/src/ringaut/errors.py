"""Exception hierarchy shared by every layer of the package."""


class RingAutError(Exception):
    """Base class for all errors raised by ringaut."""


class InvalidSpec(RingAutError, ValueError):
    pass


class NonMonicModulus(InvalidSpec):
    pass


class SizeCapExceeded(RingAutError):
    def __init__(self, size, cap, what="carrier"):
        super().__init__(f"{what} size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class SearchBudgetExceeded(RingAutError):
    def __init__(self, budget):
        super().__init__(f"search budget of {budget} nodes exhausted")
        self.budget = budget


class ParseError(InvalidSpec):
    def __init__(self, message, text, position):
        super().__init__(f"{message} at position {position}: {text!r}")
        self.text = text
        self.position = position


class IndexOutOfRange(RingAutError, IndexError):
    pass


class SubsetParentMismatch(RingAutError, ValueError):
    pass


class CompositionMismatch(RingAutError, ValueError):
    pass


class NotAHomomorphism(RingAutError, ValueError):
    pass


class MonoidRingMismatch(RingAutError, ValueError):
    pass


class EntrySignatureMismatch(RingAutError, ValueError):
    pass


class CentralityViolation(RingAutError, ValueError):
    pass


class ContextMismatch(RingAutError, ValueError):
    pass


class NotAnEndomorphism(RingAutError, ValueError):
    pass


class NotAnInversePair(RingAutError, ValueError):
    pass


class HypothesisViolated(RingAutError):
    """A factor ring is not local (so not a D-ring)."""


class NoIndexFound(RingAutError):
    """No zero-preserving index exists; this can only mean a bug upstream."""


class LemmaViolation(RingAutError):
    """A structural identity that must always hold was observed to fail."""


class MethodDisagreement(RingAutError):
    """The two independent automorphism computations returned different sets."""
