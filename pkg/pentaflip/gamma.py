"""Generators and words of the group Gamma_n^4, relation instances included."""

import re
from enum import Enum
from itertools import combinations
from typing import FrozenSet, Iterator, List, Optional, Tuple
import attr
from pentaflip.errors import InvalidGeneratorError, WordSyntaxError


# The eight index arrangements that name the same generator:
# ijkl = kjil = ilkj = klij = jkli = jilk = lkji = lijk
ARRANGEMENTS: Tuple[Tuple[int, int, int, int], ...] = (
    (0, 1, 2, 3),
    (2, 1, 0, 3),
    (0, 3, 2, 1),
    (2, 3, 0, 1),
    (1, 2, 3, 0),
    (1, 0, 3, 2),
    (3, 2, 1, 0),
    (3, 0, 1, 2),
)

Indices = Tuple[int, int, int, int]


@attr.s(auto_attribs=True, frozen=True, order=True)
class Generator(object):
    indices: Indices

    def vertex_set(self) -> FrozenSet[int]:
        return frozenset(self.indices)

    def cyclic_indices(self) -> Indices:
        p, q, r, s = sorted(self.indices)
        return (p, q, r, s)

    def to_string(self) -> str:
        return "d(%d,%d,%d,%d)" % self.indices


def orbit(i: int, j: int, k: int, l: int) -> List[Indices]:
    quadruple = (i, j, k, l)
    return [(quadruple[a], quadruple[b], quadruple[c], quadruple[d]) for a, b, c, d in ARRANGEMENTS]


def _check_distinct(indices: Tuple[int, ...], n: Optional[int]) -> None:
    if len(set(indices)) != len(indices):
        raise InvalidGeneratorError("Indices %s are not distinct" % (indices,))
    for index in indices:
        if index < 1 or (n is not None and index > n):
            raise InvalidGeneratorError("Index %d out of range" % index)


def canonical_generator(i: int, j: int, k: int, l: int, n: Optional[int] = None) -> Generator:
    _check_distinct((i, j, k, l), n)
    return Generator(min(orbit(i, j, k, l)))


def generators(n: int) -> List[Generator]:
    """One generator per quadrilateral of the convex n-gon."""
    return [canonical_generator(*quad) for quad in combinations(range(1, n + 1), 4)]


def far_commute(g1: Generator, g2: Generator) -> bool:
    return len(g1.vertex_set() & g2.vertex_set()) < 3


@attr.s(auto_attribs=True, frozen=True)
class Letter(object):
    generator: Generator
    exponent: int = 1

    def __attrs_post_init__(self) -> None:
        if self.exponent not in (1, -1):
            raise InvalidGeneratorError("Exponent must be +1 or -1, got %d" % self.exponent)

    def inverse(self) -> 'Letter':
        return Letter(self.generator, -self.exponent)

    def to_string(self) -> str:
        if self.exponent == -1:
            return self.generator.to_string() + "^-1"
        return self.generator.to_string()


@attr.s(auto_attribs=True, frozen=True)
class Word(object):
    letters: Tuple[Letter, ...] = ()

    @staticmethod
    def of(*generators: Generator) -> 'Word':
        return Word(tuple(Letter(g) for g in generators))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __add__(self, other: 'Word') -> 'Word':
        return Word(self.letters + other.letters)

    def inverse(self) -> 'Word':
        return Word(tuple(letter.inverse() for letter in reversed(self.letters)))

    def to_string(self) -> str:
        return " ".join(letter.to_string() for letter in self.letters)


_LETTER_RE = re.compile(r'\s*d\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)(\^-1)?')


def parse_word(text: str) -> Word:
    letters = []
    position = 0
    while text[position:].strip() != "":
        match = _LETTER_RE.match(text, position)
        if match is None:
            offset = len(text[position:]) - len(text[position:].lstrip())
            raise WordSyntaxError("Expected a generator like d(1,2,3,4)", position + offset)
        try:
            generator = canonical_generator(*(int(match.group(i)) for i in range(1, 5)))
        except InvalidGeneratorError as e:
            raise WordSyntaxError(e.message(), match.start(1))
        letters.append(Letter(generator, -1 if match.group(5) else 1))
        position = match.end()
        if position < len(text) and not text[position].isspace():
            raise WordSyntaxError("Generators must be separated by whitespace", position)
    return Word(tuple(letters))


def format_word(word: Word) -> str:
    return word.to_string()


def pentagon_word(i: int, j: int, k: int, l: int, m: int) -> Word:
    _check_distinct((i, j, k, l, m), None)
    return Word.of(canonical_generator(i, j, k, l), canonical_generator(i, j, l, m),
                   canonical_generator(j, k, l, m), canonical_generator(i, j, k, m),
                   canonical_generator(i, k, l, m))


def pentagon_cycle_word() -> Word:
    """The five flips leading the fan {13, 14} of the pentagon back to itself.

    Diagonals produced in turn: 35, 25, 24, 14, 13.
    """
    return parse_word("d(1,3,4,5) d(1,2,3,5) d(2,3,4,5) d(1,2,4,5) d(1,2,3,4)")


class RelationKind(Enum):
    INVOLUTION = 1
    FAR_COMM = 2
    PENTAGON = 3
    SYMMETRY = 4

    def to_string(self) -> str:
        return {
            RelationKind.INVOLUTION: "involution",
            RelationKind.FAR_COMM: "far_comm",
            RelationKind.PENTAGON: "pentagon",
            RelationKind.SYMMETRY: "symmetry",
        }[self]


@attr.s(auto_attribs=True, frozen=True)
class RelationInstance(object):
    """lhs = rhs in the group; an empty rhs stands for the identity."""
    kind: RelationKind
    lhs: Word
    rhs: Word = Word()
    # the index arrangement a symmetry instance was written in
    arrangement: Optional[Indices] = None

    def name(self) -> str:
        rhs = self.rhs.to_string() or "1"
        if self.arrangement is not None:
            rhs = "d(%d,%d,%d,%d)" % self.arrangement
        return "%s: %s = %s" % (self.kind.to_string(), self.lhs.to_string(), rhs)


def relation_instances(n: int, kind: RelationKind) -> List[RelationInstance]:
    minimum = 5 if kind == RelationKind.PENTAGON else 4
    if n < minimum:
        raise InvalidGeneratorError("%s relations need n >= %d, got %d" % (kind.to_string(), minimum, n))
    if kind == RelationKind.INVOLUTION:
        return [RelationInstance(kind, Word.of(g, g)) for g in generators(n)]
    if kind == RelationKind.FAR_COMM:
        return [RelationInstance(kind, Word.of(g1, g2), Word.of(g2, g1))
                for g1, g2 in combinations(generators(n), 2) if far_commute(g1, g2)]
    if kind == RelationKind.PENTAGON:
        return [RelationInstance(kind, pentagon_word(*subset)) for subset in combinations(range(1, n + 1), 5)]
    result = []
    for quad in combinations(range(1, n + 1), 4):
        # three cyclic orders per 4-subset, each with its own orbit
        for start in sorted(set(canonical_generator(*arrangement) for arrangement in _cyclic_orders(quad))):
            for arrangement in orbit(*start.indices)[1:]:
                result.append(RelationInstance(kind, Word.of(start), Word.of(canonical_generator(*arrangement)),
                                                 arrangement))
    return result


def _cyclic_orders(quad: Tuple[int, ...]) -> List[Indices]:
    a, b, c, d = quad
    return [(a, b, c, d), (a, b, d, c), (a, c, b, d)]
