"""Exception hierarchy.

Every error raised by the library derives from :class:`SemigroupError`, which
is itself a :class:`ValueError`, so callers can catch broadly or narrowly.
"""


class SemigroupError(ValueError):
    """Base class for all library errors."""


class SingularBasis(SemigroupError):
    pass


class DimensionMismatch(SemigroupError):
    pass


class ZeroGenerator(SemigroupError):
    pass


class NegativeEntry(SemigroupError):
    pass


class DuplicateGenerator(SemigroupError):
    pass


class RankDeficient(SemigroupError):
    pass


class NotSimplicial(SemigroupError):
    pass


class NotMinimal(SemigroupError):
    """A generator is a sum of the others.

    Attributes:
        generator: the redundant generator.
        witness: pairs ``(other_generator, coefficient)`` with positive
            coefficients summing to ``generator``.
    """

    def __init__(self, generator, witness):
        self.generator = generator
        self.witness = tuple(witness)
        terms = " + ".join(
            f"{c}*{g}" if c != 1 else str(g) for g, c in self.witness
        )
        super().__init__(f"generator {generator} is redundant: {generator} = {terms}")


class NotMember(SemigroupError):
    pass


class OutsideCone(SemigroupError):
    pass


class NoMonomialReduction(SemigroupError):
    pass


class NotCohenMacaulay(SemigroupError):
    pass


class InvalidT(SemigroupError):
    pass


class EmptyT(InvalidT):
    pass


class PreconditionFailed(SemigroupError):
    pass


class NotStabilized(SemigroupError):
    pass


class ParseError(SemigroupError):
    """Malformed generator text. ``position`` is a 0-based character offset."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
