"""Error types shared across the toolkit."""


class FormatError(ValueError):
    """Malformed textual artifact or malformed table data."""


class CapacityError(RuntimeError):
    """A closure or construction exceeded its configured size cap."""


class PreconditionError(ValueError):
    """An operation was called on input outside its stated domain."""


class CertificationError(RuntimeError):
    """A word pair could not be certified distinct; carries the pair."""

    def __init__(self, u, v, message=None):
        self.pair = (u, v)
        super().__init__(message or f"no witness found for pair {u!r} / {v!r}")
