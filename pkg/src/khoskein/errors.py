"""Exception hierarchy.

Input problems derive from :class:`InputError`; violations of internal
mathematical consistency (which indicate a bug, never a valid state)
derive from :class:`ConsistencyError`.
"""


class KhoskeinError(Exception):
    pass


class InputError(KhoskeinError, ValueError):
    pass


class ConsistencyError(KhoskeinError, RuntimeError):
    pass


# diagram_core
class MalformedToken(InputError):
    pass


class InconsistentWiring(InputError):
    pass


class OrientationConflict(InputError):
    pass


class LengthMismatch(InputError):
    pass


class IndexOutOfRange(InputError, IndexError):
    pass


# cube_complex
class CubeTooLarge(InputError):
    pass


# linalg_homology
class NotAComplex(ConsistencyError):
    pass


class NotChainMap(ConsistencyError):
    pass


class CoordinateFailure(ConsistencyError):
    pass


# skein_spectral
class ShiftMismatch(ConsistencyError):
    pass


class PageInconsistency(ConsistencyError):
    pass


class SkeinViolation(ConsistencyError):
    pass


# skein_engine
class NonGenericDiagram(InputError):
    pass


class HasMixedCrossings(InputError):
    pass


class NotAMixedCrossing(InputError):
    pass


class EmptyGamma(InputError):
    pass


class EmptyCmix(InputError):
    pass
