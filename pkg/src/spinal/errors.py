"""Exception hierarchy shared by all modules."""


class SpinalError(Exception):
    pass


class ZeroInverse(SpinalError, ZeroDivisionError):
    pass


class DimensionMismatch(SpinalError, ValueError):
    pass


class DatumError(SpinalError, ValueError):
    pass


class NotPrime(DatumError):
    pass


class NotOdd(DatumError):
    pass


class PrimeTooLarge(DatumError):
    pass


class BadVectorLength(DatumError):
    pass


class BadEntry(DatumError):
    pass


class DependentVectors(DatumError):
    def __init__(self, l, msg=None):
        self.l = l
        super().__init__(msg or f"vectors of E^({l}) are linearly dependent")


class AllEmpty(DatumError):
    pass


class MalformedDatum(DatumError):
    pass


class UnknownGenerator(SpinalError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class WordSyntaxError(SpinalError, ValueError):
    def __init__(self, msg, text="", pos=0):
        self.text = text
        self.pos = pos
        super().__init__(f"{msg} at position {pos}: {text!r}")


class ExponentZeroElided(UserWarning):
    pass


class BoundExceeded(SpinalError, RuntimeError):
    """Base class for the 'internal bound exceeded' failures."""


class DepthBoundExceeded(BoundExceeded):
    pass


class ClosureBoundExceeded(BoundExceeded):
    pass


class IterationBoundExceeded(BoundExceeded):
    pass


class NoValidConjugator(SpinalError, ValueError):
    pass
