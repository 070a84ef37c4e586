"""Exception types shared across the package.

The CLI maps these onto its exit-code contract: usage, parameter and
domain problems exit 2, vanishing-denominator problems exit 3.
"""


class MvdopError(Exception):
    """Base class for all package errors."""


class ParameterError(MvdopError):
    """A parameter value is outside its legal range (d <= 0, a = 0, ...)."""


class DomainError(MvdopError):
    """Parameters are legal but the request is outside the operation's domain,
    e.g. a Krawtchouk index not contained in the (N, ..., N) box."""


class PoleError(MvdopError):
    """A shifted-factorial factor in a denominator vanished for a term that
    actually contributes to the sum."""


class SingularArgumentError(MvdopError):
    """A shift-coefficient denominator vanished at the given argument."""


class TableDegreeError(MvdopError):
    """A basis table was queried beyond its built degree; extend it first."""
