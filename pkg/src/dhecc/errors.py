class DHError(Exception):
    """Base class for every error raised by dhecc."""


class DisconnectedGraph(DHError):
    pass


class OutOfRange(DHError):
    pass


class BadParameter(DHError):
    pass


class NotDistanceHereditary(DHError):
    pass


class InvalidCenterShape(DHError):
    pass


class EmptyCertificate(DHError):
    pass


class ParseError(DHError):
    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class SelfLoop(ParseError):
    pass


class DuplicateEdge(ParseError):
    pass
