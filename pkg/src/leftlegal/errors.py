class LeftLegalError(Exception):
    """Base class for domain errors raised by this package."""


class WordError(LeftLegalError, ValueError):
    pass


class SizeError(LeftLegalError, ValueError):
    """An exhaustive computation was asked to run beyond its size bound."""


class TableError(LeftLegalError, ValueError):
    """A Cayley table is structurally invalid."""


class ParseError(TableError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class NotAssociativeError(LeftLegalError, ValueError):
    def __init__(self, table, triple):
        self.triple = triple
        a, b, c = (table.names[i] for i in triple)
        super().__init__(f"not associative: ({a}*{b})*{c} != {a}*({b}*{c})")


class PreconditionError(LeftLegalError, ValueError):
    pass
