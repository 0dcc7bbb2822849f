from typing import Optional


class PentaflipException(Exception):
    def __init__(self, message: str) -> None:
        super().__init__(message)
        self._message = message

    def message(self) -> str:
        return self._message


class ExpressionSyntaxError(PentaflipException):
    def __init__(self, message: str, position: int) -> None:
        super().__init__("%s at position %d" % (message, position))
        self.position = position


class ZeroDivisionRationalError(PentaflipException):
    pass


class UnboundVariableError(PentaflipException):
    def __init__(self, name: str) -> None:
        super().__init__("No value assigned to variable '%s'" % name)
        self.name = name


class SingularEvaluationError(PentaflipException):
    def __init__(self, expression: str) -> None:
        super().__init__("Denominator of '%s' vanishes at the given assignment" % expression)
        self.expression = expression


class InvalidTriangulationError(PentaflipException):
    pass


class NotADiagonalError(PentaflipException):
    pass


class FlipGraphBoundError(PentaflipException):
    pass


class InvalidGeneratorError(PentaflipException):
    pass


class WordSyntaxError(PentaflipException):
    def __init__(self, message: str, position: int) -> None:
        super().__init__("%s at position %d" % (message, position))
        self.position = position


class InapplicableGeneratorError(PentaflipException):
    def __init__(self, generator: str, step: Optional[int] = None) -> None:
        if step is None:
            super().__init__("Generator %s is not applicable" % generator)
        else:
            super().__init__("Generator %s is not applicable at step %d" % (generator, step))
        self.generator = generator
        self.step = step


class InvalidStateError(PentaflipException):
    pass


class SingularMatrixError(PentaflipException):
    pass


class MatrixShapeError(PentaflipException):
    pass


class InvalidVertexError(PentaflipException):
    pass


class RealizationError(PentaflipException):
    pass


class InvalidVariableError(PentaflipException):
    pass


class InvalidConfigError(PentaflipException):
    pass
