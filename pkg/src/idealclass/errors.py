"""Exception hierarchy shared by every module of the package."""


class SemigroupError(ValueError):
    """Base class for all errors raised by idealclass."""


class NotCoprime(SemigroupError):
    pass


class NotAGapSet(SemigroupError):
    pass


class EmptyForN(SemigroupError):
    """The operation needs at least one gap, but the semigroup is N."""


class EmptyPoset(EmptyForN):
    pass


class ResourceLimit(SemigroupError):
    pass


class NotAPoset(SemigroupError):
    pass


class NotAGapPoset(SemigroupError):
    pass


class NotAnInclusionPoset(SemigroupError):
    pass


class NotMinimalGenerator(SemigroupError):
    pass


class AmbientMismatch(SemigroupError):
    pass


class MalformedTable(SemigroupError):
    pass


class NotIdempotent(SemigroupError):
    pass


class NotNested(SemigroupError):
    pass


class AbstractOnly(SemigroupError):
    pass


class NotAClassMonoid(SemigroupError):
    pass


class ParseError(SemigroupError):
    pass
