"""Exception hierarchy shared by every module."""


class OmdimError(ValueError):
    """Base class for all input and construction errors."""


class DisconnectedGraph(OmdimError):
    pass


class SelfLoop(OmdimError):
    pass


class VertexOutOfRange(OmdimError):
    pass


class OrderTooSmall(OmdimError):
    pass


class EmptySource(OmdimError):
    pass


class NotABasis(OmdimError):
    pass


class InvalidParams(OmdimError):
    pass


class DisconnectedResult(InvalidParams):
    pass


class OutOfTheoremRange(OmdimError):
    pass


class MalformedGraph6(OmdimError):
    pass


class UnsupportedOrder(OmdimError):
    pass


class OrderOutOfRange(OmdimError):
    pass


class SourceReadError(OmdimError):
    pass
