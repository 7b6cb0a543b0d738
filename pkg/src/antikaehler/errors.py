"""Exception types shared across the package."""


class AntiKaehlerError(Exception):
    """Base class for all package errors."""


class AlgebraValidationError(AntiKaehlerError):
    """A Lie algebra or symmetric pair failed a construction-time check."""


class DomainExtensionError(AntiKaehlerError):
    """A holomorphic continuation was requested outside its estimated domain."""


class PrecisionError(AntiKaehlerError):
    """A truncation or step size cannot deliver the requested accuracy."""


class SectionHypothesisError(AntiKaehlerError):
    """The trig operators do not preserve the tangent space of a germ."""


class DegenerateFrameError(AntiKaehlerError):
    """The induced metric on a sampled frame is degenerate."""


class NonDiagonalizableError(AntiKaehlerError):
    """Joint diagonalization is unavailable; use the generic zero finder."""


class InternalConsistencyError(AntiKaehlerError):
    """Two code paths that must agree did not (a test signal, not user error)."""


class ConfigError(AntiKaehlerError):
    """Invalid run configuration (CLI exit code 1)."""
