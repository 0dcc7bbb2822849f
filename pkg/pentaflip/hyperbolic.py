"""Decorated ideal polygons in the upper half-plane.

Finite ideal points carry horocycles given by their Euclidean diameter,
the point at infinity carries a horizontal horocycle given by its height.
"""

import math
from enum import Enum
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple
import attr
import numpy as np
from pentaflip.errors import InvalidVertexError, RealizationError
from pentaflip.gamma import Word, pentagon_cycle_word
from pentaflip.polygon import Edge, Triangle, fan_triangulation, triangles
from pentaflip.ptolemy_action import LabelledTriangulation, apply_word, fresh_labelling, pentagon_fan_state, Policy
from pentaflip.symexpr.polynomial import Number
from pentaflip.symexpr.rational import eval_at


GEOMETRY_TOLERANCE = 1e-9
CROSSCHECK_TOLERANCE = 1e-8

MIN_RANDOM_LENGTH = 0.1
MAX_RANDOM_LENGTH = 10.0


def relative_error(measured: float, expected: float) -> float:
    return abs(measured - expected) / max(abs(expected), 1e-300)


@attr.s(auto_attribs=True, frozen=True)
class IdealVertex(object):
    label: int
    # None is the point at infinity
    position: Optional[float]

    def is_infinite(self) -> bool:
        return self.position is None

    def sort_key(self) -> Tuple[int, float]:
        if self.position is None:
            return (0, 0.0)
        return (1, self.position)


def _positive(instance: Any, attribute: Any, value: float) -> None:
    if not value > 0:
        raise RealizationError("Horocycle parameter must be positive, got %r" % value)


@attr.s(auto_attribs=True, frozen=True)
class Horocycle(object):
    parameter: float = attr.ib(validator=_positive)


@attr.s(auto_attribs=True, frozen=True)
class DecoratedIdealPolygon(object):
    """Vertices in boundary order: infinity first, then finite positions ascending."""
    vertices: Tuple[IdealVertex, ...]
    horocycles: Tuple[Horocycle, ...]

    def __attrs_post_init__(self) -> None:
        if len(self.vertices) != len(self.horocycles):
            raise RealizationError("%d vertices but %d horocycles" % (len(self.vertices), len(self.horocycles)))
        if len(self.vertices) < 3:
            raise RealizationError("An ideal polygon needs at least 3 vertices")
        if len(set(v.label for v in self.vertices)) != len(self.vertices):
            raise RealizationError("Vertex labels are not distinct")
        keys = [v.sort_key() for v in self.vertices]
        for first, second in zip(keys, keys[1:]):
            if not first < second:
                raise RealizationError("Vertices are not in boundary order or coincide")

    @staticmethod
    def of(points: Sequence[Tuple[IdealVertex, Horocycle]]) -> 'DecoratedIdealPolygon':
        ordered = sorted(points, key=lambda point: point[0].sort_key())
        return DecoratedIdealPolygon(tuple(v for v, _ in ordered), tuple(h for _, h in ordered))

    def labels(self) -> List[int]:
        return [v.label for v in self.vertices]

    def index(self, label: int) -> int:
        for i, v in enumerate(self.vertices):
            if v.label == label:
                return i
        raise InvalidVertexError("No vertex labelled %d" % label)

    def vertex(self, label: int) -> IdealVertex:
        return self.vertices[self.index(label)]

    def horocycle(self, label: int) -> Horocycle:
        return self.horocycles[self.index(label)]

    def with_point(self, vertex: IdealVertex, horocycle: Horocycle) -> 'DecoratedIdealPolygon':
        return DecoratedIdealPolygon.of(list(zip(self.vertices, self.horocycles)) + [(vertex, horocycle)])

    def to_json(self) -> Dict[str, Any]:
        return {
            "labels": self.labels(),
            "vertices": ["inf" if v.position is None else v.position for v in self.vertices],
            "horodiameters": [h.parameter for h in self.horocycles],
        }


def lambda_length(polygon: DecoratedIdealPolygon, u: int, v: int) -> float:
    if u == v:
        raise InvalidVertexError("Lambda length of vertex %d with itself" % u)
    first, second = polygon.vertex(u), polygon.vertex(v)
    d_first, d_second = polygon.horocycle(u).parameter, polygon.horocycle(v).parameter
    if first.position is None:
        assert second.position is not None
        return math.sqrt(d_first / d_second)
    if second.position is None:
        return math.sqrt(d_second / d_first)
    return abs(first.position - second.position) / math.sqrt(d_first * d_second)


def signed_horocycle_distance(polygon: DecoratedIdealPolygon, u: int, v: int) -> float:
    """Zero for tangent horocycles, negative when they intersect."""
    return 2.0 * math.log(lambda_length(polygon, u, v))


def vertical_geodesic_length(height: float, diameter: float, samples: int = 20001) -> float:
    """Hyperbolic length of the vertical segment between heights diameter and height, by quadrature."""
    if height <= 0 or diameter <= 0:
        raise RealizationError("Heights must be positive")
    y = np.geomspace(min(height, diameter), max(height, diameter), samples)
    f = 1.0 / y
    length = float(np.sum((f[1:] + f[:-1]) * np.diff(y)) / 2.0)
    return length if height >= diameter else -length


def realize_triangle(a: float, b: float, c: float, labels: Tuple[int, int, int] = (1, 2, 3)) -> DecoratedIdealPolygon:
    """Triangle ABC with lambda lengths a = BC, b = AC, c = AB; A at infinity, B at 0."""
    for value in (a, b, c):
        if not value > 0:
            raise RealizationError("Lambda lengths must be positive, got %r" % value)
    first, second, third = labels
    return DecoratedIdealPolygon.of([
        (IdealVertex(first, None), Horocycle(1.0)),
        (IdealVertex(second, 0.0), Horocycle(1.0 / c ** 2)),
        (IdealVertex(third, a / (b * c)), Horocycle(1.0 / b ** 2)),
    ])


class Arc(Enum):
    # boundary arc running forward from the earlier endpoint to the later one
    INNER = 1
    OUTER = 2


def attach_triangle(polygon: DecoratedIdealPolygon, edge: Tuple[int, int], m: float, n: float, side: Arc,
                    label: int) -> DecoratedIdealPolygon:
    """Add vertex label with lambda(u, label) = m and lambda(v, label) = n."""
    u, v = edge
    if not (m > 0 and n > 0):
        raise RealizationError("Lambda lengths must be positive, got %r, %r" % (m, n))
    if polygon.index(u) > polygon.index(v):
        u, v, m, n = v, u, n, m
    first, second = polygon.vertex(u), polygon.vertex(v)
    d_first, d_second = polygon.horocycle(u).parameter, polygon.horocycle(v).parameter

    if first.position is None:
        assert second.position is not None
        diameter = d_first / m ** 2
        offset = n * math.sqrt(d_second * diameter)
        position = second.position - offset if side == Arc.INNER else second.position + offset
    else:
        assert second.position is not None
        p, q = first.position, second.position
        ratio = m * math.sqrt(d_first) / (n * math.sqrt(d_second))
        if side == Arc.INNER:
            position = (p + ratio * q) / (1 + ratio)
        else:
            if abs(1 - ratio) < GEOMETRY_TOLERANCE:
                raise RealizationError("The attached vertex would sit at infinity")
            position = (p - ratio * q) / (1 - ratio)
        diameter = (position - p) ** 2 / (m ** 2 * d_first)

    result = polygon.with_point(IdealVertex(label, position), Horocycle(diameter))
    labels = result.labels()
    k = len(labels)
    i = labels.index(label)
    if {labels[(i - 1) % k], labels[(i + 1) % k]} != {u, v}:
        raise RealizationError("Attaching %d across %d-%d breaks the embedding" % (label, u, v))
    return result


def _evaluated_lengths(state: LabelledTriangulation, assignment: Mapping[str, Number]) -> Dict[Edge, float]:
    lengths = {}
    for edge, label in state.labels:
        value = float(eval_at(label, assignment))
        if not value > 0:
            raise RealizationError("Edge %s evaluates to the nonpositive length %r" % (edge.key(), value))
        lengths[edge] = value
    return lengths


def realize_labelled_triangulation(state: LabelledTriangulation,
                                   assignment: Mapping[str, Number]) -> DecoratedIdealPolygon:
    lengths = _evaluated_lengths(state, assignment)
    all_triangles = triangles(state.base)
    (root,) = [tri for tri in all_triangles if tri[0] == 1 and tri[1] == 2]
    _, _, k = root
    polygon = realize_triangle(lengths[Edge.of(2, k)], lengths[Edge.of(1, k)], lengths[Edge.of(1, 2)], root)
    pending: List[Triangle] = [tri for tri in all_triangles if tri != root]
    while pending:
        realized = set(polygon.labels())
        # every triangle shares a diagonal with an earlier one, so one of them has two realized corners
        tri = next(t for t in pending if len([x for x in t if x in realized]) == 2)
        pending.remove(tri)
        u, v = [x for x in tri if x in realized]
        (w,) = [x for x in tri if x not in realized]
        low, high = min(u, v), max(u, v)
        side = Arc.INNER if low < w < high else Arc.OUTER
        polygon = attach_triangle(polygon, (u, v), lengths[Edge.of(u, w)], lengths[Edge.of(v, w)], side, w)
    return polygon


def roundtrip_error(polygon: DecoratedIdealPolygon, state: LabelledTriangulation,
                    assignment: Mapping[str, Number]) -> float:
    lengths = _evaluated_lengths(state, assignment)
    return max(relative_error(lambda_length(polygon, e.low, e.high), value) for e, value in lengths.items())


def ptolemy_residual(polygon: DecoratedIdealPolygon, quad: Tuple[int, int, int, int]) -> float:
    if len(set(quad)) != 4:
        raise InvalidVertexError("Vertices %s are not distinct" % (quad,))
    positions = [polygon.index(x) for x in quad]
    start = positions.index(min(positions))
    rotated = positions[start:] + positions[:start]
    if rotated != sorted(rotated):
        raise InvalidVertexError("Vertices %s are not in cyclic boundary order" % (quad,))
    a, b, c, d = quad
    diagonals = lambda_length(polygon, a, c) * lambda_length(polygon, b, d)
    sides = lambda_length(polygon, a, b) * lambda_length(polygon, c, d) + \
        lambda_length(polygon, b, c) * lambda_length(polygon, d, a)
    return abs(sides - diagonals) / diagonals


def max_ptolemy_residual(polygon: DecoratedIdealPolygon) -> float:
    labels = polygon.labels()
    k = len(labels)
    worst = 0.0
    for i in range(k):
        for j in range(i + 1, k):
            for l in range(j + 1, k):
                for m in range(l + 1, k):
                    worst = max(worst, ptolemy_residual(polygon, (labels[i], labels[j], labels[l], labels[m])))
    return worst


def rescale_horocycle(polygon: DecoratedIdealPolygon, label: int, s: float) -> DecoratedIdealPolygon:
    """Multiply the diameter at a finite vertex by s^2, dividing its lambda lengths by s."""
    if not s > 0:
        raise RealizationError("Scale factor must be positive, got %r" % s)
    vertex = polygon.vertex(label)
    if vertex.is_infinite():
        raise InvalidVertexError("Vertex %d is the point at infinity" % label)
    i = polygon.index(label)
    horocycles = list(polygon.horocycles)
    horocycles[i] = Horocycle(horocycles[i].parameter * s ** 2)
    return DecoratedIdealPolygon(polygon.vertices, tuple(horocycles))


def random_lengths(rng: np.random.Generator, k: int) -> List[float]:
    """k lambda lengths drawn log-uniformly."""
    logs = rng.uniform(math.log(MIN_RANDOM_LENGTH), math.log(MAX_RANDOM_LENGTH), size=k)
    return [float(x) for x in np.exp(logs)]


def random_assignment(state: LabelledTriangulation, rng: np.random.Generator) -> Dict[str, float]:
    names = sorted(set(name for _, label in state.labels for name in label.variables()))
    return dict(zip(names, random_lengths(rng, len(names))))


def random_quadrilateral(rng: np.random.Generator) -> DecoratedIdealPolygon:
    state = fresh_labelling(fan_triangulation(4, 1))
    return realize_labelled_triangulation(state, random_assignment(state, rng))


@attr.s(auto_attribs=True, frozen=True)
class CrosscheckStep(object):
    step: int
    edge: Edge
    symbolic: float
    measured: float

    def error(self) -> float:
        return relative_error(self.measured, self.symbolic)

    def to_json(self) -> Dict[str, Any]:
        return {
            "step": self.step,
            "edge": self.edge.key(),
            "symbolic": self.symbolic,
            "measured": self.measured,
            "relative_error": self.error(),
        }


@attr.s(auto_attribs=True, frozen=True)
class CrosscheckReport(object):
    steps: Tuple[CrosscheckStep, ...]

    def max_error(self) -> float:
        return max((step.error() for step in self.steps), default=0.0)

    def holds(self, tolerance: float = CROSSCHECK_TOLERANCE) -> bool:
        return self.max_error() < tolerance

    def to_json(self) -> Dict[str, Any]:
        return {"steps": [step.to_json() for step in self.steps], "max_relative_error": self.max_error()}


def crosscheck_word(state: LabelledTriangulation, word: Word, assignment: Mapping[str, Number]) -> CrosscheckReport:
    """Compare each symbolic flip label with the lambda length of the same diagonal, measured geometrically.

    Flips change which diagonals are drawn, not the decorated polygon, so one
    realization serves every step.
    """
    polygon = realize_labelled_triangulation(state, assignment)
    report = apply_word(state, word, Policy.ABORT)
    steps = []
    for record in report.steps:
        assert record.added is not None and record.label is not None
        steps.append(CrosscheckStep(record.step, record.added, float(eval_at(record.label, assignment)),
                                    lambda_length(polygon, record.added.low, record.added.high)))
    return CrosscheckReport(tuple(steps))


def crosscheck_lemma(assignment: Mapping[str, Number]) -> CrosscheckReport:
    return crosscheck_word(pentagon_fan_state(), pentagon_cycle_word(), assignment)
