"""Exception types raised by the library.

Domain preconditions (accretivity, spectral cuts, parameter ranges) raise
subclasses of :class:`DomainError`; malformed inputs and configs raise
subclasses of :class:`InputError`.  The CLI maps the two families to distinct
exit codes.
"""


class SectorialMeansError(Exception):
    """Base class for all library errors."""


class DomainError(SectorialMeansError):
    """A mathematical precondition on the input values failed."""


class InputError(SectorialMeansError):
    """Malformed file, config, or argument structure."""


class DimensionMismatch(DomainError):
    pass


class SingularMatrix(DomainError):
    pass


class NotHermitian(DomainError):
    pass


class NotAccretive(DomainError):
    pass


class SpectrumOnCut(DomainError):
    """An eigenvalue lies on (or too close to) the closed negative real axis."""


class NoConvergence(SectorialMeansError):
    """An iterative decomposition exhausted its iteration budget."""


class InvalidMu(DomainError):
    pass


class InvalidBounds(DomainError):
    pass


class InvalidAngle(DomainError):
    pass


class InvalidWeights(DomainError):
    pass


class UnknownCheck(InputError):
    pass


class ConfigError(InputError):
    pass


class ParseError(InputError):
    pass
