"""Exception hierarchy. Every error is a ValueError so callers can catch broadly."""


class HivebrError(ValueError):
    pass


# partitions
class NotWeaklyDecreasing(HivebrError):
    pass


class NegativePart(HivebrError):
    pass


class LengthExceeded(HivebrError):
    pass


# tableaux
class ShapeMismatch(HivebrError):
    pass


class RowNotWeaklyIncreasing(HivebrError):
    pass


class ColumnNotStrictlyIncreasing(HivebrError):
    pass


class NotLittlewoodRichardson(HivebrError):
    pass


class NotDominant(HivebrError):
    pass


class InvalidContent(HivebrError):
    pass


class AlphabetExceeded(HivebrError):
    pass


class ShapeTooLong(HivebrError):
    pass


class ShapeNotContained(HivebrError):
    pass


# gt / hives
class InvalidGT(HivebrError):
    pass


class InvalidFlag(HivebrError):
    pass


# branching
class InstanceInvalid(HivebrError):
    pass


class NotInDomain(HivebrError):
    pass


class NonTermination(RuntimeError):
    """The character peeling did not reach zero: an internal inconsistency."""


class UnknownKind(HivebrError):
    pass
