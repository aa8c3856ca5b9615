"""Exception hierarchy shared by the library and the CLI."""


class PolyfaceError(Exception):
    """Base class for all errors raised by polyface."""


class InputError(PolyfaceError, ValueError):
    """Malformed matroid, parameter, or file input."""


class NotSplitError(PolyfaceError):
    """A matroid (or component) fails the split inequality.

    ``certificate`` holds the offending pair of cyclic flats as bitmasks.
    """

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class OracleLimitError(PolyfaceError):
    """The brute-force face lattice would exceed its configured limits."""


class FormulaError(PolyfaceError, AssertionError):
    """An internal consistency check on a formula result failed."""
