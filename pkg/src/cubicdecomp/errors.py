"""Exception hierarchy shared by every module."""


class GraphError(Exception):
    """Base class for all errors raised by this package."""


class LoopEdge(GraphError):
    def __init__(self, u):
        super().__init__(f"loop edge at vertex {u}")
        self.u = u


class DuplicateEdge(GraphError):
    def __init__(self, u, v):
        super().__init__(f"duplicate edge ({u}, {v})")
        self.edge = (u, v)


class VertexOutOfRange(GraphError):
    def __init__(self, v, n):
        super().__init__(f"vertex {v} out of range for n={n}")
        self.v = v


class MalformedGraph6(GraphError):
    pass


class MalformedEdgeList(GraphError):
    pass


class NotConnected(GraphError):
    pass


class NotCubic(GraphError):
    pass


class OddOrder(GraphError):
    pass


class BadSpec(GraphError):
    pass


class IsK4(GraphError):
    pass


class PreconditionFailed(GraphError):
    """Input lies outside the supported class; ``witness`` names the reason."""

    def __init__(self, reason, witness=None):
        msg = reason if witness is None else f"{reason}: {witness}"
        super().__init__(msg)
        self.reason = reason
        self.witness = witness


class InternalError(GraphError):
    """An assertion inside the reduction engine failed."""


class IsTriangleCycle(GraphError):
    pass


class NotInO(GraphError):
    pass


class FrameAssertionFailed(GraphError):
    pass


class NotASpanningTree(GraphError):
    pass


class CounterexampleFound(GraphError):
    """Exhaustive search found no good decomposition where one must exist."""

    def __init__(self, graph):
        super().__init__(f"no good decomposition exists for graph with n={graph.n}, m={graph.m}")
        self.graph = graph
