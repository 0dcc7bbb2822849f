"""Flip matrices over rational functions of vertex variables z1, z2, ...

A flip of quadrilateral pqrs acts on the areas of the two triangles it
replaces by a 2x2 matrix whose columns sum to 1, so total area is kept.
On the pentagon the three triangle areas form a vector and each flip
becomes a 3x3 matrix with a 1 on the untouched triangle.
"""

from fractions import Fraction
from itertools import permutations
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple
import attr
from pentaflip.errors import InapplicableGeneratorError, InvalidTriangulationError, MatrixShapeError, \
    SingularMatrixError
from pentaflip.gamma import Generator, Word
from pentaflip.polygon import Edge, Triangle, Triangulation, find_quad_diagonal, flip, triangles
from pentaflip.symexpr.parser import parse_expr
from pentaflip.symexpr.polynomial import Number
from pentaflip.symexpr.rational import ONE, ZERO, Operand, RationalFunction, eval_at, substitute


Rows = Tuple[Tuple[RationalFunction, ...], ...]


def _lift(value: Operand) -> RationalFunction:
    if isinstance(value, RationalFunction):
        return value
    return RationalFunction.constant(value)


@attr.s(auto_attribs=True, frozen=True)
class RFMatrix(object):
    rows: Rows

    @staticmethod
    def of(rows: Sequence[Sequence[Operand]]) -> 'RFMatrix':
        if len(rows) == 0 or len(rows[0]) == 0:
            raise MatrixShapeError("A matrix needs at least one row and one column")
        width = len(rows[0])
        for row in rows:
            if len(row) != width:
                raise MatrixShapeError("Ragged matrix: rows of length %d and %d" % (width, len(row)))
        return RFMatrix(tuple(tuple(_lift(entry) for entry in row) for row in rows))

    @staticmethod
    def identity(k: int) -> 'RFMatrix':
        return RFMatrix.of([[ONE if i == j else ZERO for j in range(k)] for i in range(k)])

    @property
    def shape(self) -> Tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    def entry(self, row: int, col: int) -> RationalFunction:
        return self.rows[row][col]

    def __matmul__(self, other: 'RFMatrix') -> 'RFMatrix':
        return matmul(self, other)

    def column_sums(self) -> List[RationalFunction]:
        sums = []
        for j in range(self.shape[1]):
            total = ZERO
            for row in self.rows:
                total = total + row[j]
            sums.append(total)
        return sums

    def determinant(self) -> RationalFunction:
        rows, cols = self.shape
        if rows != cols:
            raise MatrixShapeError("Determinant of a %dx%d matrix" % (rows, cols))
        if rows == 1:
            return self.rows[0][0]
        total = ZERO
        for j in range(cols):
            if self.rows[0][j].is_zero():
                continue
            minor = RFMatrix(tuple(row[:j] + row[j + 1:] for row in self.rows[1:]))
            term = self.rows[0][j] * minor.determinant()
            total = total + term if j % 2 == 0 else total - term
        return total

    def is_identity(self) -> bool:
        rows, cols = self.shape
        return rows == cols and self == RFMatrix.identity(rows)

    def substitute(self, assignment: Mapping[str, Operand]) -> 'RFMatrix':
        return RFMatrix(tuple(tuple(substitute(entry, assignment) for entry in row) for row in self.rows))

    def evaluate(self, assignment: Mapping[str, Number]) -> List[List[Number]]:
        return [[eval_at(entry, assignment) for entry in row] for row in self.rows]

    def to_json(self) -> List[List[str]]:
        return [[entry.to_string() for entry in row] for row in self.rows]

    def to_string(self) -> str:
        return "\n".join("[%s]" % ", ".join(entry.to_string() for entry in row) for row in self.rows)


def matmul(a: RFMatrix, b: RFMatrix) -> RFMatrix:
    if a.shape[1] != b.shape[0]:
        raise MatrixShapeError("Cannot multiply %dx%d by %dx%d" % (a.shape + b.shape))
    rows = []
    for i in range(a.shape[0]):
        row = []
        for j in range(b.shape[1]):
            total = ZERO
            for k in range(a.shape[1]):
                if not a.rows[i][k].is_zero() and not b.rows[k][j].is_zero():
                    total = total + a.rows[i][k] * b.rows[k][j]
            row.append(total)
        rows.append(tuple(row))
    return RFMatrix(tuple(rows))


def product(factors: Sequence[RFMatrix]) -> RFMatrix:
    if len(factors) == 0:
        raise MatrixShapeError("Empty matrix product")
    result = factors[0]
    for factor in factors[1:]:
        result = result @ factor
    return result


@attr.s(auto_attribs=True, frozen=True)
class AreaVector(object):
    components: Tuple[RationalFunction, ...]

    @staticmethod
    def of(components: Sequence[Operand]) -> 'AreaVector':
        return AreaVector(tuple(_lift(c) for c in components))

    def apply(self, m: RFMatrix) -> 'AreaVector':
        if m.shape[1] != len(self.components):
            raise MatrixShapeError("A %dx%d matrix cannot act on %d areas" % (m.shape + (len(self.components),)))
        column = RFMatrix(tuple((c,) for c in self.components))
        return AreaVector(tuple(row[0] for row in (m @ column).rows))

    def total(self) -> RationalFunction:
        result = ZERO
        for c in self.components:
            result = result + c
        return result


def zeta(i: int) -> RationalFunction:
    return RationalFunction.variable("z%d" % i)


def quad_matrix(zi: RationalFunction, zj: RationalFunction, zk: RationalFunction,
                zl: RationalFunction) -> RFMatrix:
    """The flip of diagonal ik to jl in quadrilateral ijkl."""
    if (zl - zj).is_zero():
        raise SingularMatrixError("Coincident variables %s and %s" % (zj.to_string(), zl.to_string()))
    return RFMatrix.of([
        [(zk - zj) / (zl - zj), (zi - zj) / (zl - zj)],
        [(zk - zl) / (zj - zl), (zi - zl) / (zj - zl)],
    ])


def inverse_2x2(m: RFMatrix) -> RFMatrix:
    if m.shape != (2, 2):
        raise MatrixShapeError("Expected a 2x2 matrix, got %dx%d" % m.shape)
    det = m.determinant()
    if det.is_zero():
        raise SingularMatrixError("Matrix has zero determinant")
    (a, b), (c, d) = m.rows
    return RFMatrix.of([[d / det, -b / det], [-c / det, a / det]])


def area_map_check(m: RFMatrix) -> bool:
    if m.shape != (2, 2):
        raise MatrixShapeError("Expected a 2x2 matrix, got %dx%d" % m.shape)
    return all(s == ONE for s in m.column_sums())


_PENTAGON_FACTORS = [
    [["1", "0", "0"],
     ["0", "(z4-z3)/(z5-z3)", "(z1-z3)/(z5-z3)"],
     ["0", "(z4-z5)/(z3-z5)", "(z1-z5)/(z3-z5)"]],
    [["(z3-z2)/(z5-z2)", "(z1-z2)/(z5-z2)", "0"],
     ["(z3-z5)/(z2-z5)", "(z1-z5)/(z2-z5)", "0"],
     ["0", "0", "1"]],
    [["1", "0", "0"],
     ["0", "(z5-z2)/(z4-z2)", "(z3-z2)/(z4-z2)"],
     ["0", "(z4-z5)/(z4-z2)", "(z4-z3)/(z4-z2)"]],
    [["(z5-z1)/(z4-z1)", "0", "(z2-z1)/(z4-z1)"],
     ["0", "1", "0"],
     ["(z4-z5)/(z4-z1)", "0", "(z4-z2)/(z4-z1)"]],
    [["(z4-z1)/(z3-z1)", "(z2-z1)/(z3-z1)", "0"],
     ["(z3-z4)/(z3-z1)", "(z3-z2)/(z3-z1)", "0"],
     ["0", "0", "1"]],
]


def pentagon_matrices() -> List[RFMatrix]:
    """The five 3x3 factors of the matrix pentagon identity, in product order."""
    return [RFMatrix.of([[parse_expr(entry) for entry in row] for row in factor]) for factor in _PENTAGON_FACTORS]


@attr.s(auto_attribs=True, frozen=True)
class MatrixIdentityReport(object):
    identity: bool
    # nonzero entries of product - I
    residual_entries: Tuple[Tuple[int, int, RationalFunction], ...] = ()

    def to_json(self) -> Dict[str, Any]:
        return {
            "identity": self.identity,
            "residual_entries": [{"row": row, "col": col, "value": value.to_string()}
                                 for row, col, value in self.residual_entries],
        }


def identity_report(m: RFMatrix) -> MatrixIdentityReport:
    rows, cols = m.shape
    if rows != cols:
        return MatrixIdentityReport(False, ())
    residual = []
    for i in range(rows):
        for j in range(cols):
            value = m.rows[i][j] - (ONE if i == j else ZERO)
            if not value.is_zero():
                residual.append((i, j, value))
    return MatrixIdentityReport(len(residual) == 0, tuple(residual))


def verify_matrix_pentagon(factors: Optional[Sequence[RFMatrix]] = None) -> MatrixIdentityReport:
    if factors is None:
        factors = pentagon_matrices()
    return identity_report(product(factors))


@attr.s(auto_attribs=True, frozen=True)
class AreaFrame(object):
    """Which triangle each coordinate of the area vector belongs to."""
    slots: Tuple[Triangle, ...]

    @staticmethod
    def default(t: Triangulation) -> 'AreaFrame':
        return AreaFrame(tuple(triangles(t)))

    def slot_of(self, triangle: Triangle) -> int:
        return self.slots.index(triangle)


def _flip_in_frame(g: Generator, t: Triangulation, frame: AreaFrame) -> Tuple[RFMatrix, AreaFrame, Triangulation]:
    if sorted(frame.slots) != triangles(t):
        raise InvalidTriangulationError("Frame %s does not match the triangles of %s" % (frame.slots, t.key()))
    p, q, r, s = g.cyclic_indices()
    old = find_quad_diagonal(t, (p, q, r, s))
    if old is None:
        raise InapplicableGeneratorError(g.to_string())
    following, _ = flip(t, old)
    before = set(triangles(t))
    after = set(triangles(following))
    old_triangles = sorted(before - after)
    new_triangles = sorted(after - before)
    columns = [frame.slot_of(tri) for tri in old_triangles]
    rows = sorted(columns)

    block = quad_matrix(zeta(p), zeta(q), zeta(r), zeta(s))
    if old != Edge.of(p, r):
        block = inverse_2x2(block)

    k = len(frame.slots)
    entries = [[ONE if i == j else ZERO for j in range(k)] for i in range(k)]
    for i in columns:
        entries[i][i] = ZERO
    for a, row in enumerate(rows):
        for b, col in enumerate(columns):
            entries[row][col] = block.rows[a][b]

    slots = list(frame.slots)
    for row, tri in zip(rows, new_triangles):
        slots[row] = tri
    return RFMatrix.of(entries), AreaFrame(tuple(slots)), following


def embed_flip(g: Generator, t: Triangulation, frame: Optional[AreaFrame] = None) -> RFMatrix:
    if frame is None:
        frame = AreaFrame.default(t)
    matrix, _, _ = _flip_in_frame(g, t, frame)
    return matrix


def embed_3x3(g: Generator, t: Triangulation, frame: Optional[AreaFrame] = None) -> RFMatrix:
    if t.n != 5:
        raise InvalidTriangulationError("3x3 flip matrices live on the pentagon, got n=%d" % t.n)
    return embed_flip(g, t, frame)


def advance_frame(g: Generator, t: Triangulation, frame: AreaFrame) -> AreaFrame:
    _, next_frame, _ = _flip_in_frame(g, t, frame)
    return next_frame


def word_matrices(t: Triangulation, word: Word) -> List[RFMatrix]:
    """Flip matrices of the word in the order the flips happen."""
    frame = AreaFrame.default(t)
    result = []
    for letter in word:
        matrix, frame, t = _flip_in_frame(letter.generator, t, frame)
        result.append(matrix)
    return result


@attr.s(auto_attribs=True, frozen=True)
class NonInvolutionWitness(object):
    assignment: Tuple[Tuple[str, Fraction], ...]
    matrix: List[List[Number]]
    square: List[List[Number]]

    def to_json(self) -> Dict[str, Any]:
        return {
            "assignment": {name: str(value) for name, value in self.assignment},
            "matrix": [[str(v) for v in row] for row in self.matrix],
            "square": [[str(v) for v in row] for row in self.square],
        }


def _square(m: List[List[Number]]) -> List[List[Number]]:
    return [[sum((m[i][k] * m[k][j] for k in range(2)), Fraction(0)) for j in range(2)] for i in range(2)]


def non_involution_witness(search_range: int = 6) -> Optional[NonInvolutionWitness]:
    """First distinct integer assignment of z1..z4 whose flip matrix squares to something other than I."""
    symbolic = quad_matrix(zeta(1), zeta(2), zeta(3), zeta(4))
    for values in permutations(range(search_range), 4):
        assignment = {"z%d" % (i + 1): Fraction(v) for i, v in enumerate(values)}
        numeric = symbolic.evaluate(assignment)
        square = _square(numeric)
        if square != [[1, 0], [0, 1]]:
            return NonInvolutionWitness(tuple(sorted(assignment.items())), numeric, square)
    return None
