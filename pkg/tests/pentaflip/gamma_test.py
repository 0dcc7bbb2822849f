import unittest
import pytest
from parameterized import parameterized
from pentaflip.errors import InvalidGeneratorError, WordSyntaxError
from pentaflip.gamma import Generator, Letter, RelationKind, Word, canonical_generator, far_commute, format_word, \
    generators, orbit, parse_word, pentagon_cycle_word, pentagon_word, relation_instances


def test_same_generator_under_all_arrangements() -> None:
    expected = canonical_generator(1, 2, 3, 4)
    assert expected == Generator((1, 2, 3, 4))
    for arrangement in orbit(1, 2, 3, 4):
        assert canonical_generator(*arrangement) == expected
    assert canonical_generator(3, 2, 1, 4) == expected
    assert canonical_generator(4, 3, 2, 1) == expected


def test_different_cyclic_order_is_a_different_generator() -> None:
    assert canonical_generator(1, 3, 2, 4) != canonical_generator(1, 2, 3, 4)


def test_orbit_has_eight_distinct_arrangements() -> None:
    assert len(set(orbit(2, 5, 3, 7))) == 8


def test_repeated_index() -> None:
    with pytest.raises(InvalidGeneratorError):
        canonical_generator(1, 1, 3, 4)
    with pytest.raises(InvalidGeneratorError):
        canonical_generator(1, 2, 3, 7, n=6)


def test_generators_one_per_quadrilateral() -> None:
    assert len(generators(6)) == 15
    assert generators(4) == [Generator((1, 2, 3, 4))]


def test_far_commute() -> None:
    assert far_commute(canonical_generator(1, 2, 3, 4), canonical_generator(1, 4, 5, 6))
    assert not far_commute(canonical_generator(1, 2, 3, 4), canonical_generator(1, 2, 4, 5))


def test_parse_word() -> None:
    word = parse_word("d(1,3,4,5)  d(1,2,3,5)^-1")
    assert len(word) == 2
    assert word.letters[1] == Letter(canonical_generator(1, 2, 3, 5), -1)
    assert word.to_string() == "d(1,3,4,5) d(1,2,3,5)^-1"
    assert format_word(word) == word.to_string()
    assert format_word(Word()) == ""


def test_parse_word_canonicalizes() -> None:
    assert parse_word("d(3,2,1,4)") == Word.of(canonical_generator(1, 2, 3, 4))


def test_parse_empty_word() -> None:
    assert parse_word("") == Word()
    assert parse_word("   ") == Word()


class ParseWordErrorTest(unittest.TestCase):
    @parameterized.expand([
        ("d(1,2,3)", 0),
        ("d(1,2,3,4)d(1,2,3,5)", 10),
        ("d(1,1,3,4)", 2),
        ("d(1,2,3,4) x", 11),
    ])
    def test_parse_word_errors(self, text: str, position: int) -> None:
        with pytest.raises(WordSyntaxError) as error:
            parse_word(text)
        assert error.value.position == position


def test_word_inverse() -> None:
    word = parse_word("d(1,2,3,4) d(1,2,3,5)^-1")
    assert word.inverse().to_string() == "d(1,2,3,5) d(1,2,3,4)^-1"
    assert word.inverse().inverse() == word


def test_pentagon_word() -> None:
    assert pentagon_word(1, 2, 3, 4, 5).to_string() == \
        "d(1,2,3,4) d(1,2,4,5) d(2,3,4,5) d(1,2,3,5) d(1,3,4,5)"


def test_pentagon_cycle_word() -> None:
    assert len(pentagon_cycle_word()) == 5
    assert pentagon_cycle_word().letters[0].generator == Generator((1, 3, 4, 5))


class RelationInstanceCountTest(unittest.TestCase):
    @parameterized.expand([
        (RelationKind.INVOLUTION, 4, 1),
        (RelationKind.INVOLUTION, 6, 15),
        (RelationKind.FAR_COMM, 5, 0),
        (RelationKind.FAR_COMM, 6, 45),
        (RelationKind.PENTAGON, 5, 1),
        (RelationKind.PENTAGON, 6, 6),
        (RelationKind.SYMMETRY, 4, 21),
        (RelationKind.SYMMETRY, 5, 105),
    ])
    def test_relation_instance_count(self, kind: RelationKind, n: int, expected: int) -> None:
        assert len(relation_instances(n, kind)) == expected


def test_relation_instances_need_enough_vertices() -> None:
    with pytest.raises(InvalidGeneratorError):
        relation_instances(4, RelationKind.PENTAGON)
    with pytest.raises(InvalidGeneratorError):
        relation_instances(3, RelationKind.INVOLUTION)


def test_symmetry_instance_names_arrangement() -> None:
    instance = relation_instances(4, RelationKind.SYMMETRY)[0]
    assert instance.lhs == instance.rhs
    assert instance.name() == "symmetry: d(1,2,3,4) = d(3,2,1,4)"
