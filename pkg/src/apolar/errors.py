"""Exception hierarchy shared by the library and the command line."""


class ApolarError(ValueError):
    """Base class for domain errors (bad arguments, undefined quantities)."""


class ArityError(ApolarError):
    """Forms with different variable counts or degrees were combined."""


class ZeroFormError(ApolarError):
    """The operation is undefined on the zero form."""


class FormParseError(ApolarError):
    """Malformed polynomial text.  ``position`` is a 0-based column."""

    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = f"{message} (at column {position})"
        super().__init__(message)


class VerificationError(ApolarError):
    """A deterministic identity failed during family verification."""

    def __init__(self, identity, expected, computed):
        self.identity = identity
        self.expected = expected
        self.computed = computed
        super().__init__(
            f"identity {identity!r} failed: expected {expected}, computed {computed}"
        )
