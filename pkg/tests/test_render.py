"""Float pentagon billiard and SVG output, checked against the exact flow."""

import math

import pytest

from goldenl import Outcome, trace
from goldenl.render import (
    PENTAGON_MIDPOINTS,
    PENTAGON_VERTICES,
    billiard_path,
    golden_l_svg,
    pentagon_direction,
    pentagon_length,
    pentagon_svg,
    render_trajectory,
    transported_side_events,
)

PHI = (1.0 + math.sqrt(5.0)) / 2.0


def test_pentagon_has_unit_sides():
    for i in range(5):
        a = PENTAGON_VERTICES[i]
        b = PENTAGON_VERTICES[(i + 1) % 5]
        assert math.hypot(b[0] - a[0], b[1] - a[1]) == pytest.approx(1.0)


def test_midpoints_bisect_the_sides():
    midpoints = set()
    for i in range(5):
        a = PENTAGON_VERTICES[i]
        b = PENTAGON_VERTICES[(i + 1) % 5]
        midpoints.add(((a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0))
    for point in PENTAGON_MIDPOINTS.values():
        assert any(
            math.hypot(point[0] - m[0], point[1] - m[1]) < 1e-12 for m in midpoints
        )


def test_word_21_corner_path_length_is_saddle_holonomy():
    t = trace(1, (2, 1))
    assert t.outcome is Outcome.HIT_CONE_POINT
    path = billiard_path(1, pentagon_direction((2, 1)))
    assert path.outcome == "corner"
    assert path.length == pytest.approx(pentagon_length(t.holonomy), rel=1e-9)


def test_word_21_closed_paths_match_transported_flow():
    direction = pentagon_direction((2, 1))
    for label in (4, 2):
        t = trace(label, (2, 1))
        assert t.outcome is Outcome.CLOSED
        path = billiard_path(label, direction)
        assert path.outcome == "closed"
        period = pentagon_length(t.holonomy)
        multiplicity = round(path.length / period)
        assert path.length / period == pytest.approx(multiplicity, abs=1e-6)
        assert path.segment_count == transported_side_events(t) * multiplicity


def test_word_21_billiard_lengths_in_golden_ratio():
    direction = pentagon_direction((2, 1))
    short = billiard_path(4, direction)
    long = billiard_path(2, direction)
    assert long.length / short.length == pytest.approx(PHI, rel=1e-9)


def test_horizontal_corner_path():
    path = billiard_path(5, pentagon_direction(()))
    assert path.outcome == "corner"
    assert path.length == pytest.approx(0.5, rel=1e-9)


def test_billiard_cap():
    path = billiard_path(4, pentagon_direction((2, 1)), max_bounces=3)
    assert path.outcome == "capped"
    assert path.segment_count == 3


def test_billiard_rejects_bad_input():
    with pytest.raises(ValueError):
        billiard_path(0, (1.0, 0.0))
    with pytest.raises(ValueError):
        billiard_path(1, (0.0, 0.0))


def test_side_events_need_a_closed_orbit():
    t = trace(1, (2, 1))
    with pytest.raises(ValueError):
        transported_side_events(t)


def test_golden_l_svg_contents():
    t = trace(4, (2, 1))
    svg = golden_l_svg(t)
    assert svg.count("<polygon") == 2
    assert svg.count('<line class="trajectory"') == t.segment_count
    assert svg.count('class="marked-point') == 5
    assert svg.startswith("<?xml") and svg.rstrip().endswith("</svg>")


def test_pentagon_svg_contents():
    path = billiard_path(4, pentagon_direction((2, 1)))
    svg = pentagon_svg((2, 1), 4)
    assert svg.count("<polygon") == 1
    assert svg.count('<line class="trajectory"') == path.segment_count
    assert svg.count('class="marked-point') == 5


def test_render_trajectory_frames():
    assert render_trajectory((2, 1), 4, frame="goldenl").count("<polygon") == 2
    assert render_trajectory((2, 1), 4, frame="pentagon").count("<polygon") == 1
    with pytest.raises(ValueError):
        render_trajectory((2, 1), 4, frame="sphere")
