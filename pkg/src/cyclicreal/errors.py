"""Exception types raised across the package."""


class CyclicRealError(Exception):
    pass


class AntisymmetryViolation(CyclicRealError, ValueError):
    pass


class SourceTargetMismatch(CyclicRealError, ValueError):
    pass


class NotTotallyOrderedSource(CyclicRealError, ValueError):
    pass


class NotMonotone(CyclicRealError, ValueError):
    pass


class LevelMismatch(CyclicRealError, ValueError):
    pass


class PosetMismatch(CyclicRealError, ValueError):
    pass


class NonStandardPoset(CyclicRealError, ValueError):
    pass


class InvalidBarycentric(CyclicRealError, ValueError):
    pass


class SizeMismatch(CyclicRealError, ValueError):
    pass


class InvalidStepPoint(CyclicRealError, ValueError):
    pass


class InvalidColimPoint(CyclicRealError, ValueError):
    pass


class UnsupportedExportDimension(CyclicRealError, ValueError):
    pass


class WrongDegree(CyclicRealError, ValueError):
    pass


class NotArchimedean(CyclicRealError, ValueError):
    pass


class NotPositiveArchimedean(CyclicRealError, ValueError):
    pass


class NotOrderPreserving(CyclicRealError, ValueError):
    pass


class SourceNotDegreeOne(CyclicRealError, ValueError):
    pass


class DegreeError(CyclicRealError, ValueError):
    pass


class ResidueOutOfRange(CyclicRealError, ValueError):
    pass


class ObjectMismatch(CyclicRealError, ValueError):
    pass


class PpsetMismatch(CyclicRealError, ValueError):
    pass


class NonStandardPpset(CyclicRealError, ValueError):
    pass


class InvalidCyclicPoint(CyclicRealError, ValueError):
    pass


class UnknownSuite(CyclicRealError, KeyError):
    pass


class ParseError(CyclicRealError, ValueError):
    pass
