"""Flip generators acting on edge-labelled triangulations by the Ptolemy rule."""

import json
from enum import Enum
from typing import Any, Dict, Iterable, List, Mapping, Optional, Tuple, Union
import attr
import numpy as np
from pentaflip.errors import InapplicableGeneratorError, InvalidStateError, SingularEvaluationError
from pentaflip.gamma import Generator, Indices, Letter, RelationInstance, RelationKind, Word, canonical_generator, \
    format_word, pentagon_cycle_word, relation_instances
from pentaflip.polygon import DEFAULT_MAX_N, Edge, Triangulation, fan_triangulation, find_quad_diagonal, \
    flip_graph, flip_path, other_diagonal, quad_of, sorted_states
from pentaflip.symexpr.parser import parse_expr
from pentaflip.symexpr.polynomial import Number
from pentaflip.symexpr.rational import RationalFunction, eval_at, is_laurent


Labels = Tuple[Tuple[Edge, RationalFunction], ...]


def _sorted_labels(labels: Union[Mapping[Edge, RationalFunction], Iterable[Tuple[Edge, RationalFunction]]]) -> Labels:
    items = labels.items() if isinstance(labels, Mapping) else labels
    return tuple(sorted(items, key=lambda item: item[0]))


@attr.s(frozen=True)
class LabelledTriangulation(object):
    base: Triangulation = attr.ib()
    labels: Labels = attr.ib(converter=_sorted_labels)

    def __attrs_post_init__(self) -> None:
        expected = self.base.edges()
        present = [edge for edge, _ in self.labels]
        if present != expected:
            missing = sorted(set(expected) - set(present))
            extra = sorted(set(present) - set(expected))
            raise InvalidStateError("Labels do not match the edges of %s (missing: %s, unexpected: %s)" % (
                self.base.key(), ",".join(e.key() for e in missing) or "none",
                ",".join(e.key() for e in extra) or "none"))
        for edge, label in self.labels:
            if label.is_zero():
                raise InvalidStateError("Edge %s has the zero label" % edge.key())

    def label(self, edge: Edge) -> RationalFunction:
        for candidate, label in self.labels:
            if candidate == edge:
                return label
        raise InvalidStateError("Edge %s is not an edge of %s" % (edge.key(), self.base.key()))

    def label_dict(self) -> Dict[Edge, RationalFunction]:
        return dict(self.labels)

    def to_json(self) -> Dict[str, Any]:
        result = self.base.to_json()
        result["labels"] = {edge.key(): label.to_string() for edge, label in self.labels}
        return result

    @staticmethod
    def from_json(data: Dict[str, Any]) -> 'LabelledTriangulation':
        base = Triangulation.from_json(data)
        try:
            raw_labels = data["labels"]
            labels = {Edge.parse(key): parse_expr(str(text)) for key, text in raw_labels.items()}
        except (KeyError, AttributeError) as e:
            raise InvalidStateError("Malformed labelled state: %s" % e)
        if len(labels) != len(raw_labels):
            raise InvalidStateError("An edge is labelled twice")
        return LabelledTriangulation(base, labels)


def load_state(text: str) -> LabelledTriangulation:
    try:
        data = json.loads(text)
    except ValueError as e:
        raise InvalidStateError("State is not valid JSON: %s" % e)
    if not isinstance(data, dict):
        raise InvalidStateError("State must be a JSON object")
    return LabelledTriangulation.from_json(data)


def dump_state(state: LabelledTriangulation) -> str:
    return json.dumps(state.to_json(), sort_keys=True, indent=2)


def fresh_labelling(t: Triangulation) -> LabelledTriangulation:
    labels = {}
    for edge in t.edges():
        if edge.is_boundary(t.n):
            # boundary edge i-(i+1) gets s{i}, the closing edge 1-n gets s{n}
            index = edge.high if edge.low == 1 and edge.high == t.n else edge.low
            labels[edge] = RationalFunction.variable("s%d" % index)
        else:
            labels[edge] = RationalFunction.variable("t%d_%d" % (edge.low, edge.high))
    return LabelledTriangulation(t, labels)


def pentagon_fan_state() -> LabelledTriangulation:
    names = {(1, 2): "a", (2, 3): "b", (3, 4): "c", (4, 5): "d", (1, 5): "e", (1, 3): "x", (1, 4): "y"}
    return LabelledTriangulation(fan_triangulation(5, 1),
                                 {Edge.of(u, v): RationalFunction.variable(name) for (u, v), name in names.items()})


def is_applicable(state: LabelledTriangulation, g: Generator) -> bool:
    return find_quad_diagonal(state.base, g.cyclic_indices()) is not None


def applicable_generators(state: LabelledTriangulation) -> List[Generator]:
    return sorted(canonical_generator(*quad_of(state.base, d)) for d in state.base.sorted_diagonals())


def apply_generator(state: LabelledTriangulation, g: Generator) -> LabelledTriangulation:
    p, q, r, s = g.cyclic_indices()
    old = find_quad_diagonal(state.base, (p, q, r, s))
    if old is None:
        raise InapplicableGeneratorError(g.to_string())
    new = other_diagonal((p, q, r, s), old)
    # opposite sides pair up: pq*rs + qr*sp
    numerator = state.label(Edge.of(p, q)) * state.label(Edge.of(r, s)) + \
        state.label(Edge.of(q, r)) * state.label(Edge.of(s, p))
    labels = state.label_dict()
    del labels[old]
    labels[new] = numerator / state.label(old)
    return LabelledTriangulation(Triangulation(state.base.n, (state.base.diagonals - {old}) | {new}), labels)


def apply_arrangement(state: LabelledTriangulation, indices: Indices) -> LabelledTriangulation:
    """Flip by d(i,j,k,l) written in the given index order.

    The sides are read as i-j, j-k, k-l, l-i, so the order must trace the boundary of the quadrilateral.
    """
    i, j, k, l = indices
    g = canonical_generator(i, j, k, l)
    quad = g.cyclic_indices()
    old = find_quad_diagonal(state.base, quad)
    if old is None:
        raise InapplicableGeneratorError(g.to_string())
    written = {Edge.of(i, j), Edge.of(j, k), Edge.of(k, l), Edge.of(l, i)}
    p, q, r, s = quad
    if written != {Edge.of(p, q), Edge.of(q, r), Edge.of(r, s), Edge.of(s, p)}:
        raise InapplicableGeneratorError("d(%d,%d,%d,%d) does not trace the sides of %s" % (i, j, k, l, quad))
    numerator = state.label(Edge.of(i, j)) * state.label(Edge.of(k, l)) + \
        state.label(Edge.of(j, k)) * state.label(Edge.of(l, i))
    labels = state.label_dict()
    del labels[old]
    new = other_diagonal(quad, old)
    labels[new] = numerator / state.label(old)
    return LabelledTriangulation(Triangulation(state.base.n, (state.base.diagonals - {old}) | {new}), labels)


class Policy(Enum):
    SKIP = 1
    ABORT = 2

    def to_string(self) -> str:
        return {
            Policy.SKIP: "skip",
            Policy.ABORT: "abort",
        }[self]

    @staticmethod
    def parse(text: str) -> 'Policy':
        return {"skip": Policy.SKIP, "abort": Policy.ABORT}[text]


@attr.s(auto_attribs=True, frozen=True)
class StepRecord(object):
    step: int
    letter: Letter
    applied: bool
    removed: Optional[Edge] = None
    added: Optional[Edge] = None
    label: Optional[RationalFunction] = None

    def to_json(self) -> Dict[str, Any]:
        return {
            "step": self.step,
            "generator": self.letter.to_string(),
            "applied": self.applied,
            "removed": self.removed.key() if self.removed is not None else None,
            "added": self.added.key() if self.added is not None else None,
            "label": self.label.to_string() if self.label is not None else None,
        }

    def to_string(self) -> str:
        if not self.applied:
            return "%d: %s not applicable, skipped" % (self.step, self.letter.to_string())
        assert self.removed is not None and self.added is not None and self.label is not None
        return "%d: %s flips %s -> %s, label %s" % (
            self.step, self.letter.to_string(), self.removed.key(), self.added.key(), self.label.to_string())


@attr.s(auto_attribs=True, frozen=True)
class ActionReport(object):
    word: Word
    initial: LabelledTriangulation
    final: LabelledTriangulation
    steps: Tuple[StepRecord, ...]

    def identity(self) -> bool:
        return self.final == self.initial

    def skipped(self) -> List[StepRecord]:
        return [step for step in self.steps if not step.applied]

    def to_json(self) -> Dict[str, Any]:
        return {
            "word": format_word(self.word),
            "initial": self.initial.to_json(),
            "final": self.final.to_json(),
            "steps": [step.to_json() for step in self.steps],
            "identity": self.identity(),
        }

    def to_string(self) -> str:
        lines = ["word: %s" % (format_word(self.word) or "(empty)"), "initial: %s" % self.initial.base.key()]
        lines.extend(step.to_string() for step in self.steps)
        lines.append("final: %s" % self.final.base.key())
        lines.extend("  %s: %s" % (edge.key(), label.to_string()) for edge, label in self.final.labels)
        lines.append("identity: %s" % ("true" if self.identity() else "false"))
        return "\n".join(lines) + "\n"


def apply_word(state: LabelledTriangulation, word: Word, policy: Policy = Policy.SKIP) -> ActionReport:
    """Apply the letters left to right; each generator is its own inverse in this action."""
    current = state
    steps = []
    for index, letter in enumerate(word, start=1):
        if not is_applicable(current, letter.generator):
            if policy == Policy.ABORT:
                raise InapplicableGeneratorError(letter.to_string(), index)
            steps.append(StepRecord(index, letter, applied=False))
            continue
        following = apply_generator(current, letter.generator)
        (removed,) = current.base.diagonals - following.base.diagonals
        (added,) = following.base.diagonals - current.base.diagonals
        steps.append(StepRecord(index, letter, True, removed, added, following.label(added)))
        current = following
    return ActionReport(word, state, current, tuple(steps))


def verify_lemma1() -> ActionReport:
    return apply_word(pentagon_fan_state(), pentagon_cycle_word(), Policy.ABORT)


@attr.s(auto_attribs=True, frozen=True)
class RelationReport(object):
    instance: RelationInstance
    admissible: int
    failures: Tuple[str, ...] = ()

    def vacuous(self) -> bool:
        return self.admissible == 0

    def holds(self) -> bool:
        return len(self.failures) == 0

    def to_json(self) -> Dict[str, Any]:
        return {
            "relation": self.instance.name(),
            "admissible_states": self.admissible,
            "holds": self.holds(),
            "vacuous": self.vacuous(),
            "failures": list(self.failures),
        }


def _run_strict(state: LabelledTriangulation, word: Word) -> Optional[LabelledTriangulation]:
    try:
        return apply_word(state, word, Policy.ABORT).final
    except InapplicableGeneratorError:
        return None


def check_relation(instance: RelationInstance, states: Iterable[LabelledTriangulation]) -> RelationReport:
    """Check lhs = rhs on every state where both sides are fully applicable."""
    admissible = 0
    failures = []
    for state in states:
        lhs = _run_strict(state, instance.lhs)
        if instance.arrangement is not None:
            rhs = _run_arranged(state, instance.arrangement)
        else:
            rhs = _run_strict(state, instance.rhs)
        if lhs is None or rhs is None:
            continue
        admissible += 1
        if lhs != rhs:
            failures.append(state.base.key())
    return RelationReport(instance, admissible, tuple(failures))


def _run_arranged(state: LabelledTriangulation, indices: Indices) -> Optional[LabelledTriangulation]:
    try:
        return apply_arrangement(state, indices)
    except InapplicableGeneratorError:
        return None


def fresh_states(n: int, max_n: int = DEFAULT_MAX_N) -> List[LabelledTriangulation]:
    return [fresh_labelling(t) for t in sorted_states(flip_graph(n, max_n))]


def check_relations(n: int, kind: RelationKind, max_n: int = DEFAULT_MAX_N) -> List[RelationReport]:
    states = fresh_states(n, max_n)
    return [check_relation(instance, states) for instance in relation_instances(n, kind)]


@attr.s(auto_attribs=True, frozen=True)
class LaurentWalkReport(object):
    word: Word
    labels_checked: int
    # (step, edge key, label) for every label with a non-monomial denominator
    non_laurent: Tuple[Tuple[int, str, str], ...] = ()

    def holds(self) -> bool:
        return len(self.non_laurent) == 0

    def to_json(self) -> Dict[str, Any]:
        return {
            "word": format_word(self.word),
            "labels_checked": self.labels_checked,
            "non_laurent": [{"step": step, "edge": edge, "label": label} for step, edge, label in self.non_laurent],
        }


def random_laurent_walk(n: int, length: int, rng: np.random.Generator) -> LaurentWalkReport:
    state = fresh_labelling(fan_triangulation(n, 1))
    letters = []
    checked = 0
    offenders = []
    for step in range(1, length + 1):
        choices = applicable_generators(state)
        if len(choices) == 0:
            break
        g = choices[int(rng.integers(len(choices)))]
        letters.append(Letter(g))
        state = apply_generator(state, g)
        for edge, label in state.labels:
            checked += 1
            if not is_laurent(label):
                offenders.append((step, edge.key(), label.to_string()))
    return LaurentWalkReport(Word(tuple(letters)), checked, tuple(offenders))


def transport_labels(state: LabelledTriangulation, target: Triangulation,
                     path: Optional[List[Edge]] = None, max_n: int = DEFAULT_MAX_N) -> LabelledTriangulation:
    """Carry the labels of state to target by flipping the given diagonals in turn."""
    if path is None:
        path = flip_path(state.base, target, max_n)
    current = state
    for step, d in enumerate(path, start=1):
        if d not in current.base.diagonals:
            raise InapplicableGeneratorError("flip of %s" % d.key(), step)
        current = apply_generator(current, canonical_generator(*quad_of(current.base, d)))
    if current.base != target:
        raise InvalidStateError("Flip path ends at %s instead of %s" % (current.base.key(), target.key()))
    return current


@attr.s(auto_attribs=True, frozen=True)
class PathIndependenceReport(object):
    source: Triangulation
    target: Triangulation
    direct: Tuple[Edge, ...]
    detour: Tuple[Edge, ...]
    equal: bool

    def to_json(self) -> Dict[str, Any]:
        return {
            "source": self.source.key(),
            "target": self.target.key(),
            "direct": [d.key() for d in self.direct],
            "detour": [d.key() for d in self.detour],
            "equal": self.equal,
        }


def check_path_independence(state: LabelledTriangulation, target: Triangulation,
                            via: Optional[Triangulation] = None,
                            max_n: int = DEFAULT_MAX_N) -> PathIndependenceReport:
    direct = flip_path(state.base, target, max_n)
    if via is None:
        others = [t for t in sorted_states(flip_graph(state.base.n, max_n)) if t not in (state.base, target)]
        via = others[-1] if others else None
    if via is None:
        # nowhere else to go: walk to the target, back, and out again
        back = flip_path(target, state.base, max_n)
        detour = direct + back + direct
    else:
        detour = flip_path(state.base, via, max_n) + flip_path(via, target, max_n)
    equal = transport_labels(state, target, direct, max_n) == transport_labels(state, target, detour, max_n)
    return PathIndependenceReport(state.base, target, tuple(direct), tuple(detour), equal)


@attr.s(auto_attribs=True, frozen=True)
class SpecializationReport(object):
    values: Tuple[Tuple[Edge, Number], ...]
    vanishing: Tuple[Edge, ...]
    singular: Tuple[Edge, ...]

    def to_json(self) -> Dict[str, Any]:
        return {
            "values": {edge.key(): str(value) for edge, value in self.values},
            "vanishing": [edge.key() for edge in self.vanishing],
            "singular": [edge.key() for edge in self.singular],
        }


def specialize_state(state: LabelledTriangulation, assignment: Mapping[str, Number]) -> SpecializationReport:
    """Evaluate every label; a vanishing label makes the next flip through it divide by zero."""
    values = []
    vanishing = []
    singular = []
    for edge, label in state.labels:
        try:
            value = eval_at(label, assignment)
        except SingularEvaluationError:
            singular.append(edge)
            continue
        values.append((edge, value))
        if value == 0:
            vanishing.append(edge)
    return SpecializationReport(tuple(values), tuple(vanishing), tuple(singular))

