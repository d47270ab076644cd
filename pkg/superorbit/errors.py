class SuperorbitError(Exception):
    """Base class for every error raised by superorbit."""


class DimensionMismatchError(SuperorbitError):
    def __init__(self, expected: int, actual: int):
        self.expected = expected
        self.actual = actual
        super().__init__(f"dimension mismatch: expected {expected}, got {actual}")


class NotClosedError(SuperorbitError):
    """A subspace that should be a subalgebra is not closed under the bracket."""

    def __init__(self, witness: tuple[int, int]):
        self.witness = witness
        super().__init__(
            f"subspace is not bracket-closed: [s{witness[0]}, s{witness[1]}] leaves it"
        )


class NotAnIdealError(SuperorbitError):
    def __init__(self, basis_name: str, ideal_index: int):
        self.basis_name = basis_name
        self.ideal_index = ideal_index
        super().__init__(
            f"subspace is not an ideal: [{basis_name}, i{ideal_index}] leaves it"
        )


class GradingError(SuperorbitError):
    def __init__(self, message: str, witness: tuple | None = None):
        self.witness = witness
        super().__init__(message)


class InvalidPartitionError(SuperorbitError):
    pass


class ConstructionError(SuperorbitError):
    """A builder produced something that is not a valid Lie superalgebra."""


class BracketSolveError(SuperorbitError):
    def __init__(self, message: str, defect: list | None = None):
        self.defect = defect or []
        super().__init__(message)


class UnknownOrbitError(SuperorbitError):
    def __init__(self, label: str, known: list[str]):
        self.label = label
        self.known = known
        super().__init__(
            f"unknown orbit label '{label}', expected one of: {', '.join(known)}"
        )
