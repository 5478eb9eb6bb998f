"""Exception types shared across the package."""


class AugforgeError(Exception):
    """Base class for all augforge errors."""


class DuplicateIdError(AugforgeError):
    pass


class UnknownEntryError(AugforgeError):
    pass


class UnknownMapError(AugforgeError):
    pass


class UnknownLexiconError(AugforgeError):
    pass


class UnknownUnitError(AugforgeError):
    pass


class UnknownCurrencyError(AugforgeError):
    pass


class ParseError(AugforgeError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EmptyRunError(AugforgeError):
    pass


class EmptyCorpusError(AugforgeError):
    pass


class MissingLabelError(AugforgeError):
    pass


class ProviderError(AugforgeError):
    pass


class IncompleteCoverageError(AugforgeError):
    def __init__(self, missing_ids):
        self.missing_ids = tuple(missing_ids)
        super().__init__("predictions missing for ids: " + ", ".join(self.missing_ids))
