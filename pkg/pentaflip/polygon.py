"""Triangulations of a convex n-gon with vertices 1..n in cyclic order."""

from collections import deque
from itertools import combinations
from typing import Any, Dict, FrozenSet, List, Optional, Tuple
import attr
import networkx as nx
from pentaflip.errors import InvalidTriangulationError, NotADiagonalError, FlipGraphBoundError


DEFAULT_MAX_N = 12

Triangle = Tuple[int, int, int]
Quad = Tuple[int, int, int, int]


@attr.s(auto_attribs=True, frozen=True, order=True)
class Edge(object):
    low: int
    high: int

    @staticmethod
    def of(u: int, v: int) -> 'Edge':
        if u == v:
            raise InvalidTriangulationError("Edge endpoints must differ, got %d twice" % u)
        return Edge(min(u, v), max(u, v))

    @staticmethod
    def parse(text: str) -> 'Edge':
        parts = text.split("-")
        if len(parts) != 2 or not all(p.strip().isdigit() for p in parts):
            raise InvalidTriangulationError("Cannot parse edge '%s', expected 'i-j'" % text)
        return Edge.of(int(parts[0]), int(parts[1]))

    def is_boundary(self, n: int) -> bool:
        return self.high - self.low == 1 or (self.low == 1 and self.high == n)

    def crosses(self, other: 'Edge') -> bool:
        return (self.low < other.low < self.high < other.high) or \
               (other.low < self.low < other.high < self.high)

    def key(self) -> str:
        return "%d-%d" % (self.low, self.high)

    def to_list(self) -> List[int]:
        return [self.low, self.high]


def boundary_edges(n: int) -> List[Edge]:
    return [Edge.of(i, i % n + 1) for i in range(1, n + 1)]


@attr.s(frozen=True)
class Triangulation(object):
    n: int = attr.ib()
    diagonals: FrozenSet[Edge] = attr.ib(converter=frozenset)

    def __attrs_post_init__(self) -> None:
        if self.n < 3:
            raise InvalidTriangulationError("A polygon needs at least 3 vertices, got %d" % self.n)
        for d in self.diagonals:
            if not (1 <= d.low and d.high <= self.n):
                raise InvalidTriangulationError("Diagonal %s out of range for n=%d" % (d.key(), self.n))
            if d.is_boundary(self.n):
                raise InvalidTriangulationError("%s is a boundary edge, not a diagonal" % d.key())
        if len(self.diagonals) != self.n - 3:
            raise InvalidTriangulationError("Expected %d diagonals, got %d" % (self.n - 3, len(self.diagonals)))
        for d1, d2 in combinations(self.diagonals, 2):
            if d1.crosses(d2):
                raise InvalidTriangulationError("Diagonals %s and %s cross" % (d1.key(), d2.key()))

    @staticmethod
    def from_json(data: Dict[str, Any]) -> 'Triangulation':
        try:
            return Triangulation(int(data["n"]), [Edge.of(int(u), int(v)) for u, v in data["diagonals"]])
        except (KeyError, TypeError, ValueError) as e:
            raise InvalidTriangulationError("Malformed triangulation JSON: %s" % e)

    def to_json(self) -> Dict[str, Any]:
        return {"n": self.n, "diagonals": [d.to_list() for d in self.sorted_diagonals()]}

    def sorted_diagonals(self) -> List[Edge]:
        return sorted(self.diagonals)

    def key(self) -> str:
        return ",".join(d.key() for d in self.sorted_diagonals())

    def has_edge(self, edge: Edge) -> bool:
        if not (1 <= edge.low and edge.high <= self.n):
            return False
        return edge.is_boundary(self.n) or edge in self.diagonals

    def edges(self) -> List[Edge]:
        return sorted(set(boundary_edges(self.n)) | self.diagonals)


def fan_triangulation(n: int, apex: int = 1) -> Triangulation:
    if n < 3:
        raise InvalidTriangulationError("A polygon needs at least 3 vertices, got %d" % n)
    if not 1 <= apex <= n:
        raise InvalidTriangulationError("Apex %d out of range 1..%d" % (apex, n))
    diagonals = [Edge.of(apex, v) for v in range(1, n + 1) if v != apex and not Edge.of(apex, v).is_boundary(n)] \
        if n > 3 else []
    return Triangulation(n, diagonals)


def triangles(t: Triangulation) -> List[Triangle]:
    return [tri for tri in combinations(range(1, t.n + 1), 3)
            if t.has_edge(Edge.of(tri[0], tri[1])) and t.has_edge(Edge.of(tri[1], tri[2]))
            and t.has_edge(Edge.of(tri[0], tri[2]))]


def quad_of(t: Triangulation, d: Edge) -> Quad:
    if d not in t.diagonals:
        raise NotADiagonalError("%s is not a diagonal of %s" % (d.key(), t.key()))
    apexes = [v for v in range(1, t.n + 1)
              if v != d.low and v != d.high and t.has_edge(Edge.of(d.low, v)) and t.has_edge(Edge.of(v, d.high))]
    # one apex on each side of d
    assert len(apexes) == 2
    p, q, r, s = sorted([d.low, d.high] + apexes)
    return (p, q, r, s)


def other_diagonal(quad: Quad, d: Edge) -> Edge:
    p, q, r, s = quad
    if d == Edge.of(p, r):
        return Edge.of(q, s)
    if d == Edge.of(q, s):
        return Edge.of(p, r)
    raise NotADiagonalError("%s is not a diagonal of quadrilateral %s" % (d.key(), quad))


def find_quad_diagonal(t: Triangulation, quad: Quad) -> Optional[Edge]:
    """The present diagonal of the quadrilateral, if it is a union of two triangles of t."""
    p, q, r, s = sorted(quad)
    if p < 1 or s > t.n:
        return None
    sides = [Edge.of(p, q), Edge.of(q, r), Edge.of(r, s), Edge.of(s, p)]
    if not all(t.has_edge(side) for side in sides):
        return None
    present = [d for d in (Edge.of(p, r), Edge.of(q, s)) if d in t.diagonals]
    if len(present) != 1:
        return None
    return present[0]


def flip(t: Triangulation, d: Edge) -> Tuple[Triangulation, Edge]:
    new_diagonal = other_diagonal(quad_of(t, d), d)
    return Triangulation(t.n, (t.diagonals - {d}) | {new_diagonal}), new_diagonal


def flip_graph(n: int, max_n: int = DEFAULT_MAX_N) -> nx.Graph:
    if n < 3:
        raise InvalidTriangulationError("A polygon needs at least 3 vertices, got %d" % n)
    if n > max_n:
        raise FlipGraphBoundError("n=%d exceeds the enumeration bound %d" % (n, max_n))
    start = fan_triangulation(n, 1)
    graph = nx.Graph(n=n)
    graph.add_node(start)
    frontier = deque([start])
    while frontier:
        current = frontier.popleft()
        for d in current.sorted_diagonals():
            neighbour, _ = flip(current, d)
            if neighbour not in graph:
                graph.add_node(neighbour)
                frontier.append(neighbour)
            graph.add_edge(current, neighbour)
    return graph


def sorted_states(graph: nx.Graph) -> List[Triangulation]:
    return sorted(graph.nodes, key=lambda t: t.sorted_diagonals())


def flip_path(source: Triangulation, target: Triangulation, max_n: int = DEFAULT_MAX_N) -> List[Edge]:
    """Diagonals to flip, in order, along a shortest path from source to target."""
    if source.n != target.n:
        raise InvalidTriangulationError("Triangulations of different polygons (%d, %d)" % (source.n, target.n))
    path = nx.shortest_path(flip_graph(source.n, max_n), source, target)
    return [_flipped_diagonal(a, b) for a, b in zip(path, path[1:])]


def _flipped_diagonal(before: Triangulation, after: Triangulation) -> Edge:
    (removed,) = before.diagonals - after.diagonals
    return removed


def flip_graph_to_json(graph: nx.Graph) -> Dict[str, Any]:
    states = sorted_states(graph)
    return {
        "n": graph.graph["n"],
        "vertices": [t.key() for t in states],
        "adjacency": {t.key(): [u.key() for u in sorted(graph.neighbors(t), key=lambda u: u.sorted_diagonals())]
                      for t in states},
    }


def flip_graph_to_dot(graph: nx.Graph) -> str:
    states = sorted_states(graph)
    index = {t: i for i, t in enumerate(states)}
    lines = ["graph flipgraph_%d {" % graph.graph["n"]]
    for t in states:
        lines.append('  "%s";' % t.key())
    for t in states:
        for u in sorted(graph.neighbors(t), key=lambda u: index[u]):
            if index[t] < index[u]:
                lines.append('  "%s" -- "%s";' % (t.key(), u.key()))
    lines.append("}")
    return "\n".join(lines) + "\n"


def catalan(k: int) -> int:
    result = 1
    for i in range(k):
        result = result * 2 * (2 * i + 1) // (i + 2)
    return result
