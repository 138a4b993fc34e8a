"""Exception hierarchy.

Every input problem raises a subclass of :class:`ValidationError`; the CLI
maps those to exit code 1 and :class:`IoError` to exit code 2.
"""


class RiskGraphError(Exception):
    """Base class for all errors raised by this package."""

    @property
    def kind(self) -> str:
        return type(self).__name__


class ValidationError(RiskGraphError, ValueError):
    pass


class IoError(RiskGraphError, OSError):
    pass


# graph construction / queries
class DuplicateLabel(ValidationError):
    pass


class UnknownEndpoint(ValidationError):
    pass


class SelfLoop(ValidationError):
    pass


class DuplicateEdge(ValidationError):
    pass


class InvalidVertex(ValidationError):
    pass


# connectivity
class SameVertex(ValidationError):
    pass


class TooSmall(ValidationError):
    pass


# risk model
class InvalidThreat(ValidationError):
    pass


class UnknownVertex(ValidationError):
    pass


class EmptyCluster(ValidationError):
    pass


class OverlappingClusters(ValidationError):
    pass


# clustering
class BadK(ValidationError):
    pass


class TooLarge(ValidationError):
    pass


class InvalidPartition(ValidationError):
    pass


class EmptyCenters(ValidationError):
    pass


class DuplicateCenter(ValidationError):
    pass


# io
class MalformedJson(ValidationError):
    pass
