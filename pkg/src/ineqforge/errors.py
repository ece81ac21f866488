"""Exception types shared across the package."""


class IneqForgeError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(IneqForgeError):
    """An argument lies outside the domain a function is defined on."""


class BracketError(IneqForgeError):
    """A root bracket does not enclose a sign change."""


class ConvergenceError(IneqForgeError):
    """An iteration hit its step limit before reaching tolerance."""


class PrecisionError(IneqForgeError):
    """A series was truncated before meeting the requested tolerance."""


class CatalogError(IneqForgeError):
    """A chain, probe, or expression in the catalog is malformed or unknown."""
