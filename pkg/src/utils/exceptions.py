class GraphError(Exception):
    pass


class InvalidGraphError(GraphError):
    pass


class FamilyRangeError(GraphError):
    pass


class DisconnectedGraphError(GraphError):
    pass


class EmptyGraphError(GraphError):
    pass


class SizeCapExceededError(GraphError):
    def __init__(self, what: str, size: int, cap: int) -> None:
        super().__init__(f"{what}: size {size} exceeds cap {cap}")
        self.size = size
        self.cap = cap


class Graph6ParseError(GraphError):
    def __init__(self, message: str, line_number: int | None = None) -> None:
        prefix = f"line {line_number}: " if line_number is not None else ""
        super().__init__(f"{prefix}{message}")
        self.line_number = line_number


class ClassMismatchError(GraphError):
    pass


class DegenerateOrderError(GraphError):
    pass


class UnknownEntryError(GraphError):
    pass


class UnsatisfiableFilterError(GraphError):
    pass
