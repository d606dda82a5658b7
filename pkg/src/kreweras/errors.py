"""Exception hierarchy shared by every module of the package."""


class KrewerasError(Exception):
    """Base class for all errors raised by :mod:`kreweras`."""


class InvalidLetter(KrewerasError, ValueError):
    def __init__(self, letter, index):
        super().__init__(f"invalid letter {letter!r} at index {index}")
        self.letter = letter
        self.index = index


class NotBalanced(KrewerasError, ValueError):
    def __init__(self, counts):
        a, b, c = counts
        super().__init__(f"unequal letter counts A={a}, B={b}, C={c}")
        self.counts = counts


class PrefixViolation(KrewerasError, ValueError):
    """The prefix ending at ``index`` (1-based) has fewer A's than B's or C's."""

    def __init__(self, index):
        super().__init__(f"prefix of length {index} violates the ballot condition")
        self.index = index


class EmptyWord(KrewerasError, ValueError):
    def __init__(self, what="operation"):
        super().__init__(f"{what} requires a nonempty word")


class IndexOutOfRange(KrewerasError, IndexError):
    pass


class InvalidReconstruction(KrewerasError, ValueError):
    pass


class TripError(KrewerasError, RuntimeError):
    """A trip revisited a state; the rules of the road were applied inconsistently."""


class MalformedCell(KrewerasError, ValueError):
    pass


class MalformedWeb(KrewerasError, ValueError):
    pass


class MalformedEmbedding(MalformedWeb):
    pass


class NonTerminatingTrip(TripError):
    pass


class RecoveryMismatch(KrewerasError, RuntimeError):
    pass


class DomainError(KrewerasError, ValueError):
    pass


class NotPolynomial(KrewerasError, ArithmeticError):
    pass


class NegativeCoefficient(KrewerasError, ArithmeticError):
    pass


class OrbitSizeError(KrewerasError, RuntimeError):
    pass
