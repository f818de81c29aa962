from typing import Any, Optional


class TightPathsException(Exception):
    pass


class GraphError(TightPathsException):
    pass


class UnknownVertexError(GraphError):
    def __init__(self, vertex: Any) -> None:
        self.vertex = vertex
        super().__init__(f"unknown vertex {vertex!r}")


class GraphParseError(GraphError):
    def __init__(self, line_number: int, reason: str) -> None:
        self.line_number = line_number
        self.reason = reason
        super().__init__(f"line {line_number}: {reason}")


class GraphValidationError(GraphError):
    def __init__(self, reason: str, line_number: Optional[int] = None) -> None:
        self.reason = reason
        self.line_number = line_number
        if line_number is None:
            super().__init__(reason)
        else:
            super().__init__(f"line {line_number}: {reason}")


class InvalidThreshold(TightPathsException):
    def __init__(self, value: Any, reason: str) -> None:
        self.value = value
        self.reason = reason
        super().__init__(f"invalid threshold {value!r}: {reason}")


class PathCapExceeded(TightPathsException):
    def __init__(self, cap: int) -> None:
        self.cap = cap
        super().__init__(f"more than {cap} bounded paths; raise the cap or lower γ")


class LatticeError(TightPathsException):
    pass


class BenchmarkError(TightPathsException):
    pass


class GeneratorError(TightPathsException):
    pass
