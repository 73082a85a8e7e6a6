"""Exception hierarchy shared by every module of the package."""


class MetdimError(Exception):
    """Base class for all errors raised by metdim."""


class GraphError(MetdimError, ValueError):
    """Invalid graph input."""


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class IndexOutOfRange(GraphError):
    pass


class Disconnected(GraphError):
    pass


class InvalidOrder(GraphError):
    """A family generator was asked for an order outside its domain."""


class LengthMismatch(MetdimError, ValueError):
    pass


class LandmarkError(MetdimError, ValueError):
    pass


class DuplicateLandmark(LandmarkError):
    pass


class EmptyLandmarks(LandmarkError):
    pass


class SizeCapExceeded(MetdimError):
    """Exact search refused because the graph exceeds the configured cap."""


class UnknownLabel(MetdimError, KeyError):
    def __str__(self) -> str:
        return str(self.args[0]) if self.args else ""


class ParameterOutOfRange(MetdimError, ValueError):
    pass


class MalformedGraphFile(MetdimError, ValueError):
    pass
