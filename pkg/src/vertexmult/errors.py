"""Exception hierarchy.

Every error carries a stable ``code`` (used in the CLI's error JSON) and an
``exit_code``: 1 for bad input or usage, 2 for a violated mathematical
precondition.
"""


class VertexMultError(Exception):
    code = "Error"
    exit_code = 2

    def __init__(self, detail="", indices=()):
        super().__init__(detail)
        self.detail = detail
        self.indices = [int(i) for i in indices]

    def to_dict(self):
        return {"error": self.code, "detail": self.detail, "indices": self.indices}


class InputError(VertexMultError):
    exit_code = 1


class MathError(VertexMultError):
    exit_code = 2


class InvalidSize(InputError):
    code = "InvalidSize"


class IndexOutOfRange(InputError):
    code = "IndexOutOfRange"


class DuplicateEdge(InputError):
    code = "DuplicateEdge"


class NonFiniteWeight(InputError):
    code = "NonFiniteWeight"


class UnknownKind(InputError):
    code = "UnknownKind"


class DimensionMismatch(InputError):
    code = "DimensionMismatch"


class InvalidGrid(InputError):
    code = "InvalidGrid"


class ParseError(InputError):
    """Malformed text input; ``line`` is 1-based, ``field`` names the token."""

    code = "ParseError"

    def __init__(self, detail="", line=None, field=None, indices=()):
        loc = []
        if line is not None:
            loc.append(f"line {line}")
        if field is not None:
            loc.append(f"field {field!r}")
        if loc:
            detail = f"{detail} ({', '.join(loc)})"
        super().__init__(detail, indices)
        self.line = line
        self.field = field


class NonDiagonalizable(MathError):
    code = "NonDiagonalizable"


class NumericalFailure(MathError):
    code = "NumericalFailure"


class ZeroModulusEigenvalue(MathError):
    code = "ZeroModulusEigenvalue"


class DegenerateFrequencies(MathError):
    code = "DegenerateFrequencies"


class IllConditioned(MathError):
    code = "IllConditioned"


class DegenerateRange(MathError):
    code = "DegenerateRange"
