import math
import numpy as np
import pytest
from pentaflip.errors import InvalidVertexError, RealizationError
from pentaflip.hyperbolic import GEOMETRY_TOLERANCE, Arc, Horocycle, IdealVertex, DecoratedIdealPolygon, \
    attach_triangle, crosscheck_lemma, lambda_length, max_ptolemy_residual, ptolemy_residual, random_assignment, \
    random_quadrilateral, realize_labelled_triangulation, realize_triangle, rescale_horocycle, roundtrip_error, \
    signed_horocycle_distance, vertical_geodesic_length
from pentaflip.polygon import Edge, fan_triangulation, flip_graph, sorted_states
from pentaflip.ptolemy_action import fresh_labelling, pentagon_fan_state


_FAN_ASSIGNMENT = {"a": 1, "b": 1, "c": 1, "d": 1, "e": 1, "x": 2, "y": 2}


def test_lambda_length_with_infinity() -> None:
    polygon = DecoratedIdealPolygon.of([
        (IdealVertex(1, None), Horocycle(1.0)),
        (IdealVertex(2, 0.0), Horocycle(1.0)),
        (IdealVertex(3, 3.0), Horocycle(1.0)),
    ])
    assert lambda_length(polygon, 1, 2) == pytest.approx(1.0)
    assert lambda_length(polygon, 2, 3) == pytest.approx(3.0)
    assert lambda_length(polygon, 3, 2) == lambda_length(polygon, 2, 3)


def test_tangent_horocycles_are_at_distance_zero() -> None:
    polygon = realize_triangle(1.0, 1.0, 1.0)
    assert signed_horocycle_distance(polygon, 1, 2) == pytest.approx(0.0)
    assert signed_horocycle_distance(realize_triangle(1.0, 1.0, 0.5), 1, 2) < 0


def test_realize_triangle() -> None:
    polygon = realize_triangle(2.0, 3.0, 5.0)
    assert polygon.vertex(3).position == pytest.approx(2.0 / 15.0)
    assert polygon.horocycle(2).parameter == pytest.approx(1.0 / 25.0)
    assert polygon.horocycle(3).parameter == pytest.approx(1.0 / 9.0)
    assert lambda_length(polygon, 2, 3) == pytest.approx(2.0, rel=1e-12)
    assert lambda_length(polygon, 1, 3) == pytest.approx(3.0, rel=1e-12)
    assert lambda_length(polygon, 1, 2) == pytest.approx(5.0, rel=1e-12)


def test_realize_triangle_needs_positive_lengths() -> None:
    with pytest.raises(RealizationError):
        realize_triangle(0.0, 1.0, 1.0)


def test_attach_triangle() -> None:
    polygon = attach_triangle(realize_triangle(1.0, 1.0, 1.0), (2, 3), 1.0, 1.0, Arc.INNER, 4)
    assert polygon.labels() == [1, 2, 4, 3]
    assert polygon.vertex(4).position == pytest.approx(0.5)
    assert lambda_length(polygon, 2, 4) == pytest.approx(1.0)
    assert lambda_length(polygon, 3, 4) == pytest.approx(1.0)
    assert lambda_length(polygon, 1, 4) == pytest.approx(2.0)
    assert ptolemy_residual(polygon, (1, 2, 4, 3)) < GEOMETRY_TOLERANCE


def test_attach_outer_at_infinity_is_rejected() -> None:
    with pytest.raises(RealizationError):
        attach_triangle(realize_triangle(1.0, 1.0, 1.0), (2, 3), 1.0, 1.0, Arc.OUTER, 4)


def test_measured_diagonal_matches_ptolemy_label() -> None:
    polygon = realize_labelled_triangulation(pentagon_fan_state(), _FAN_ASSIGNMENT)
    assert polygon.labels() == [1, 2, 3, 4, 5]
    assert lambda_length(polygon, 3, 5) == pytest.approx(1.5, rel=1e-12)
    assert roundtrip_error(polygon, pentagon_fan_state(), _FAN_ASSIGNMENT) < GEOMETRY_TOLERANCE


def test_realization_needs_positive_labels() -> None:
    with pytest.raises(RealizationError):
        realize_labelled_triangulation(pentagon_fan_state(), dict(_FAN_ASSIGNMENT, x=-1))


def test_arbitrary_lengths_round_trip() -> None:
    rng = np.random.default_rng(5)
    for t in sorted_states(flip_graph(6)):
        state = fresh_labelling(t)
        assignment = random_assignment(state, rng)
        polygon = realize_labelled_triangulation(state, assignment)
        assert roundtrip_error(polygon, state, assignment) < GEOMETRY_TOLERANCE


def test_heptagon_fan_round_trip() -> None:
    state = fresh_labelling(fan_triangulation(7))
    assignment = random_assignment(state, np.random.default_rng(1))
    polygon = realize_labelled_triangulation(state, assignment)
    assert roundtrip_error(polygon, state, assignment) < GEOMETRY_TOLERANCE
    assert max_ptolemy_residual(polygon) < GEOMETRY_TOLERANCE


def test_random_quadrilaterals_satisfy_ptolemy() -> None:
    rng = np.random.default_rng(2)
    for _ in range(100):
        assert ptolemy_residual(random_quadrilateral(rng), (1, 2, 3, 4)) < GEOMETRY_TOLERANCE


def test_ptolemy_residual_needs_cyclic_order() -> None:
    polygon = attach_triangle(realize_triangle(1.0, 1.0, 1.0), (2, 3), 1.0, 1.0, Arc.INNER, 4)
    with pytest.raises(InvalidVertexError):
        ptolemy_residual(polygon, (1, 4, 2, 3))
    assert ptolemy_residual(polygon, (2, 4, 3, 1)) < GEOMETRY_TOLERANCE


def test_rescaling_a_horocycle() -> None:
    polygon = realize_triangle(2.0, 3.0, 5.0)
    rescaled = rescale_horocycle(polygon, 3, 2.0)
    assert lambda_length(rescaled, 1, 3) == pytest.approx(1.5)
    assert lambda_length(rescaled, 2, 3) == pytest.approx(1.0)
    assert lambda_length(rescaled, 1, 2) == pytest.approx(5.0)
    with pytest.raises(InvalidVertexError):
        rescale_horocycle(polygon, 1, 2.0)


def test_vertical_geodesic_length() -> None:
    assert vertical_geodesic_length(4.0, 1.0) == pytest.approx(math.log(4.0), rel=1e-6)
    assert vertical_geodesic_length(1.0, 4.0) == pytest.approx(-math.log(4.0), rel=1e-6)
    polygon = realize_triangle(2.0, 3.0, 5.0)
    assert vertical_geodesic_length(1.0, 1.0 / 25.0) == \
        pytest.approx(signed_horocycle_distance(polygon, 1, 2), rel=1e-6)


def test_polygon_rejects_bad_order() -> None:
    with pytest.raises(RealizationError):
        DecoratedIdealPolygon((IdealVertex(1, 0.0), IdealVertex(2, 0.0), IdealVertex(3, 1.0)),
                              (Horocycle(1.0), Horocycle(1.0), Horocycle(1.0)))
    with pytest.raises(RealizationError):
        Horocycle(0.0)


def test_polygon_json() -> None:
    data = realize_triangle(1.0, 1.0, 1.0).to_json()
    assert data["labels"] == [1, 2, 3]
    assert data["vertices"] == ["inf", 0.0, 1.0]


def test_crosscheck_five_flips() -> None:
    report = crosscheck_lemma(_FAN_ASSIGNMENT)
    assert [step.edge for step in report.steps] == [Edge(3, 5), Edge(2, 5), Edge(2, 4), Edge(1, 4), Edge(1, 3)]
    assert report.steps[0].symbolic == pytest.approx(1.5)
    assert report.holds()


def test_crosscheck_random_lengths() -> None:
    rng = np.random.default_rng(11)
    for _ in range(100):
        assert crosscheck_lemma(random_assignment(pentagon_fan_state(), rng)).holds()
