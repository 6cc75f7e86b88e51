"""Exception hierarchy shared by every module of the package."""


class MnesorError(Exception):
    """Base class for all errors raised by mnesor."""


class DomainError(MnesorError, ValueError):
    """An argument lies outside the domain of the operation."""


class IncompatibleCarrierError(MnesorError, ValueError):
    """Two fuzzy sets live on different universes or grids."""


class SetFileError(MnesorError, ValueError):
    """A set-definition file is malformed."""


class UnboundVariableError(MnesorError, NameError):
    def __init__(self, name):
        super().__init__(f"unbound variable {name}")
        self.name = name


class InstanceError(MnesorError):
    """A mnesor instance is unusable by the law checker."""


class ParseError(MnesorError, SyntaxError):
    """Lexical or syntax error in an expression, with its position."""

    def __init__(self, message, line, column, expected=()):
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        text = f"{message} at line {line}, column {column}"
        if self.expected:
            text += f" (expected {', '.join(self.expected)})"
        super().__init__(text)
        # SyntaxError.__str__ would otherwise print only msg
        self.msg = text

    def __str__(self):
        return self.msg
