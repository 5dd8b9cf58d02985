class TauRankError(Exception):
    pass


class QuiverSyntaxError(TauRankError, ValueError):

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.message = message
        self.line = line
        self.column = column
        if line:
            message = f'line {line}, column {column}: {message}'
        super().__init__(message)


class UnknownArrowError(QuiverSyntaxError):
    pass


class NonComposablePathError(QuiverSyntaxError):
    pass


class NonParallelRelationError(QuiverSyntaxError):
    pass


class NotFiniteDimensionalError(TauRankError):

    def __init__(self, max_len: int):
        self.max_len = max_len
        super().__init__(
            f'not finite-dimensional within max_len={max_len}: '
            'paths of that length survive the relations'
        )


class AlgebraMismatchError(TauRankError, ValueError):
    pass


class ShapeMismatchError(TauRankError, ValueError):
    pass


class RelationViolationError(TauRankError, ValueError):
    pass


class ModuleFileError(TauRankError, ValueError):
    pass


class IdealError(TauRankError, ValueError):
    pass


class NotAnnihilatingError(IdealError):
    pass


class OracleBudgetExceeded(TauRankError):
    pass


class InvariantViolation(TauRankError, AssertionError):
    pass


class HierarchyViolation(InvariantViolation):
    pass
