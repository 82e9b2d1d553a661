"""Exception classes, one per user-facing error class.

All are ValueError subclasses, so callers that only care about "bad input"
can keep catching ValueError.
"""


class StructureError(ValueError):
    """A structure violates its invariants (arity, unknown element, duplicates)."""


class ParseError(StructureError):
    """Malformed instance, decomposition or sequence file."""

    def __init__(self, lineno: int, msg: str):
        self.lineno = lineno
        self.msg = msg
        super().__init__(f"line {lineno}: {msg}")


class NotAHomomorphismError(ValueError):
    """A map that must be a (partial) homomorphism is not one."""


class WidthExceededError(ValueError):
    """A tree-width precondition fails. Not the same thing as a 'no' answer."""

    def __init__(self, k: int, what: str):
        self.k = k
        super().__init__(f"tree width of {what} exceeds {k}")


class InvalidSequenceError(ValueError):
    """An endomorphism sequence or retraction chain breaks one of its conditions."""


class SizeGuardError(ValueError):
    """An exponential-time routine was asked for more than its guard allows."""
