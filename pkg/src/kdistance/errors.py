"""Exception hierarchy shared by the library and the CLI."""


class KDistanceError(ValueError):
    """Base class for every error raised by this package."""


class IdOutOfRange(KDistanceError):
    pass


class SelfLoop(KDistanceError):
    pass


class DuplicateEdge(KDistanceError):
    pass


class InvalidParameter(KDistanceError):
    pass


class EmptySystem(KDistanceError):
    pass


class DisconnectedSystem(KDistanceError):
    pass


class ProfileMismatch(KDistanceError):
    pass


class UnknownKind(KDistanceError):
    pass


class EdgeListFormatError(KDistanceError):
    pass
