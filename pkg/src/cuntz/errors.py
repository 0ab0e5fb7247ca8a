"""Exception types shared across the package."""


class CuntzError(Exception):
    """Base class for all library errors."""


class IndexRangeError(CuntzError, ValueError):
    """A generator index lies outside {1..d}, or d < 2."""


class AlphabetMismatchError(CuntzError, ValueError):
    """Operands live in Cuntz algebras with different alphabet sizes."""


class ParseError(CuntzError, ValueError):
    """Malformed element text."""


class SchemaError(CuntzError, ValueError):
    """Malformed JSON for an element, vector, system or endomorphism."""


class EndomorphismValidationError(CuntzError):
    """Candidate generator images violate the defining relations."""

    def __init__(self, failures):
        self.failures = list(failures)
        super().__init__("; ".join(self.failures))


class SystemValidationError(CuntzError):
    """A candidate recursive system failed its defining conditions."""

    def __init__(self, report):
        self.report = report
        super().__init__(report.summary())


class ResourceLimitError(CuntzError):
    """An element or coordinate basis outgrew the configured cap."""

    def __init__(self, count, cap, what="terms"):
        self.count = count
        self.cap = cap
        self.what = what
        super().__init__(f"{what} count {count} exceeds cap {cap}")
