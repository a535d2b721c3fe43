"""SVG rendering of trajectories, in the golden L frame or the pentagon frame.

The golden L frame draws the exact trajectory (coordinates only become floats
at the last step). The pentagon frame replays the direction through the frame
change P and follows the billiard in a regular pentagon with side 1 by float
reflection; it is a visual aid and never feeds back into classification.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .field import GoldenVector
from .flow import Outcome, Trajectory
from .surface import GOLDEN_L, pentagon_transfer, weierstrass_point
from .words import Word, word_to_vector

GOLDEN_L_FRAME = "goldenl"
PENTAGON_FRAME = "pentagon"
FRAMES = (GOLDEN_L_FRAME, PENTAGON_FRAME)

DEFAULT_SIZE = 480
DEFAULT_STROKE = 2.0
DEFAULT_MAX_BOUNCES = 20_000
CORNER_TOLERANCE = 1e-9
CLOSE_TOLERANCE = 1e-7

# Regular pentagon with side 1, apex up, centered at the origin.
_CIRCUMRADIUS = 1.0 / (2.0 * math.sin(math.pi / 5.0))
_APOTHEM = 1.0 / (2.0 * math.tan(math.pi / 5.0))

PENTAGON_VERTICES = tuple(
    (
        _CIRCUMRADIUS * math.cos(math.radians(90.0 + 72.0 * k)),
        _CIRCUMRADIUS * math.sin(math.radians(90.0 + 72.0 * k)),
    )
    for k in range(5)
)

# Side midpoints carry the same labels as the Weierstrass points: upper left 1,
# upper right 2, lower left 3, lower right 4, bottom 5.
_MIDPOINT_ANGLES = {1: 126.0, 2: 54.0, 3: 198.0, 4: 342.0, 5: 270.0}
PENTAGON_MIDPOINTS = {
    label: (
        _APOTHEM * math.cos(math.radians(angle)),
        _APOTHEM * math.sin(math.radians(angle)),
    )
    for label, angle in _MIDPOINT_ANGLES.items()
}


def pentagon_direction(word: Word) -> tuple[float, float]:
    """The float pentagon-frame image P * v of a word's direction."""
    v = word_to_vector(word)
    (p00, p01), (p10, p11) = pentagon_transfer().matrix
    x, y = v.to_floats()
    return (p00 * x + p01 * y, p10 * x + p11 * y)


def pentagon_length(h: GoldenVector) -> float:
    """Euclidean length of P * h, the pentagon-frame image of a holonomy."""
    (p00, p01), (p10, p11) = pentagon_transfer().matrix
    x, y = h.to_floats()
    return math.hypot(p00 * x + p01 * y, p10 * x + p11 * y)


def _split_inscribed_edges():
    """Inscribed pentagon edges: interior cuts, and the wall translations of
    the two edges that lie on the golden L boundary."""
    ring = GOLDEN_L.inscribed_pentagon
    cuts = []
    boundary_edges = []
    for i in range(5):
        a, b = ring[i], ring[(i + 1) % 5]
        if (a.x.is_zero and b.x.is_zero) or (a.y.is_zero and b.y.is_zero):
            boundary_edges.append({a, b})
        else:
            cuts.append((a, b))
    translations = tuple(
        ident.translation
        for ident in GOLDEN_L.identifications
        if {ident.source[0], ident.source[1]} in boundary_edges
    )
    return tuple(cuts), translations


_INTERIOR_CUTS, _SIDE_WALL_TRANSLATIONS = _split_inscribed_edges()


def transported_side_events(trajectory: Trajectory) -> int:
    """Pentagon-side crossings of one period of a closed trajectory.

    The inscribed pentagon's sides, doubled across the two gluing walls they
    lie on, are the billiard table sides after the frame change; each crossing
    is one billiard bounce, so this count transports the exact segment
    structure to a predicted bounce count per holonomy period.
    """
    if trajectory.outcome is not Outcome.CLOSED:
        raise ValueError("side events are defined for closed trajectories only")
    events = 0
    for begin, end in trajectory.segments:
        seg = end - begin
        for a, b in _INTERIOR_CUTS:
            cut = b - a
            denom = seg.cross(cut)
            if denom.is_zero:
                continue
            inv = denom.inverse()
            w = a - begin
            t = w.cross(cut) * inv
            s = w.cross(seg) * inv
            # Crossing strictly inside both segments: t(1-t) > 0 and s(1-s) > 0.
            if (t - t * t).sign() > 0 and (s - s * s).sign() > 0:
                events += 1
    side_translations = {
        (tr.x, tr.y) for tr in _SIDE_WALL_TRANSLATIONS
    } | {(-tr.x, -tr.y) for tr in _SIDE_WALL_TRANSLATIONS}
    segments = trajectory.segments
    joints = list(zip(segments, segments[1:]))
    closes_mid = segments[-1][1] == trajectory.start
    if closes_mid:
        # The start sits strictly inside a segment, on its own pentagon side.
        events += 1
    else:
        joints.append((segments[-1], segments[0]))
    for (_, end), (next_begin, _) in joints:
        jump = next_begin - end
        if (jump.x, jump.y) in side_translations:
            events += 1
    return events


@dataclass(frozen=True)
class BilliardPath:
    """A float billiard orbit in the unit-side regular pentagon."""

    start_label: int
    points: tuple[tuple[float, float], ...]
    outcome: str  # "closed" | "corner" | "capped"
    length: float

    @property
    def segment_count(self) -> int:
        return len(self.points) - 1


def _normalize(v: tuple[float, float]) -> tuple[float, float]:
    n = math.hypot(*v)
    if n == 0.0:
        raise ValueError("billiard direction must be nonzero")
    return (v[0] / n, v[1] / n)


def billiard_path(
    label: int,
    direction: tuple[float, float],
    max_bounces: int = DEFAULT_MAX_BOUNCES,
    corner_tolerance: float = CORNER_TOLERANCE,
    close_tolerance: float = CLOSE_TOLERANCE,
) -> BilliardPath:
    """Reflect a ray around the pentagon until it closes or meets a corner.

    Closure means passing through the start point with the starting direction,
    either inside a segment or at a bounce; corners within `corner_tolerance`
    end the path as a saddle hit.
    """
    if label not in PENTAGON_MIDPOINTS:
        raise ValueError(f"midpoint label must be 1..5, got {label}")
    start = PENTAGON_MIDPOINTS[label]
    d0 = _normalize(direction)
    # The direction is defined up to sign; launch into the pentagon. The
    # outward edge normal at a midpoint is the midpoint's own radial direction.
    normal = _normalize(start)
    if d0[0] * normal[0] + d0[1] * normal[1] > 0.0:
        d0 = (-d0[0], -d0[1])
    p = start
    d = d0
    points = [start]
    total = 0.0
    skip_edge = label_edge = _edge_of_midpoint(label)
    for _ in range(max_bounces):
        hit = _next_edge_hit(p, d, skip_edge)
        if hit is None:
            raise ValueError(f"billiard ray escaped the pentagon at {p} along {d}")
        t, edge_index, _u = hit
        q = (p[0] + t * d[0], p[1] + t * d[1])
        # Closure strictly inside the segment, with the original direction.
        along = (start[0] - p[0]) * d[0] + (start[1] - p[1]) * d[1]
        if close_tolerance < along < t - close_tolerance and _close(d, d0, close_tolerance):
            off = math.hypot(
                start[0] - (p[0] + along * d[0]), start[1] - (p[1] + along * d[1])
            )
            if off < close_tolerance:
                points.append(start)
                total += along
                return BilliardPath(label, tuple(points), "closed", total)
        points.append(q)
        total += t
        if _near_corner(q, corner_tolerance):
            return BilliardPath(label, tuple(points), "corner", total)
        d = _reflect(d, edge_index)
        # Closure at a bounce point: back at the start midpoint, same outgoing ray.
        if (
            edge_index == label_edge
            and math.hypot(q[0] - start[0], q[1] - start[1]) < close_tolerance
            and _close(d, d0, close_tolerance)
        ):
            return BilliardPath(label, tuple(points), "closed", total)
        p = q
        skip_edge = edge_index
    return BilliardPath(label, tuple(points), "capped", total)


def _edge_of_midpoint(label: int) -> int:
    mid = PENTAGON_MIDPOINTS[label]
    best, best_dist = 0, float("inf")
    for i in range(5):
        a = PENTAGON_VERTICES[i]
        b = PENTAGON_VERTICES[(i + 1) % 5]
        center = ((a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0)
        dist = math.hypot(center[0] - mid[0], center[1] - mid[1])
        if dist < best_dist:
            best, best_dist = i, dist
    return best


def _next_edge_hit(
    p: tuple[float, float], d: tuple[float, float], skip_edge: int
) -> tuple[float, int, float] | None:
    best: tuple[float, int, float] | None = None
    for i in range(5):
        if i == skip_edge:
            continue
        a = PENTAGON_VERTICES[i]
        b = PENTAGON_VERTICES[(i + 1) % 5]
        ex, ey = b[0] - a[0], b[1] - a[1]
        denom = d[0] * ey - d[1] * ex
        if abs(denom) < 1e-15:
            continue
        wx, wy = a[0] - p[0], a[1] - p[1]
        t = (wx * ey - wy * ex) / denom
        u = (wx * d[1] - wy * d[0]) / denom
        if t <= 1e-12 or u < -1e-9 or u > 1.0 + 1e-9:
            continue
        if best is None or t < best[0]:
            best = (t, i, u)
    return best


def _near_corner(q: tuple[float, float], tolerance: float) -> bool:
    return any(math.hypot(q[0] - v[0], q[1] - v[1]) < tolerance for v in PENTAGON_VERTICES)


def _reflect(d: tuple[float, float], edge_index: int) -> tuple[float, float]:
    a = PENTAGON_VERTICES[edge_index]
    b = PENTAGON_VERTICES[(edge_index + 1) % 5]
    ex, ey = _normalize((b[0] - a[0], b[1] - a[1]))
    along = d[0] * ex + d[1] * ey
    return (2.0 * along * ex - d[0], 2.0 * along * ey - d[1])


def _close(u: tuple[float, float], w: tuple[float, float], tolerance: float) -> bool:
    return math.hypot(u[0] - w[0], u[1] - w[1]) < tolerance


# SVG assembly


def _svg_header(width: float, height: float) -> str:
    return (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0f}" height="{height:.0f}" '
        f'viewBox="0 0 {width:.2f} {height:.2f}">\n'
    )


def _polygon(points: list[tuple[float, float]], css_class: str, stroke: float) -> str:
    coords = " ".join(f"{x:.3f},{y:.3f}" for x, y in points)
    return (
        f'<polygon class="{css_class}" points="{coords}" '
        f'fill="none" stroke="#444444" stroke-width="{stroke:.2f}"/>\n'
    )


def _line(a: tuple[float, float], b: tuple[float, float], stroke: float) -> str:
    return (
        f'<line class="trajectory" x1="{a[0]:.3f}" y1="{a[1]:.3f}" '
        f'x2="{b[0]:.3f}" y2="{b[1]:.3f}" stroke="#c02020" stroke-width="{stroke:.2f}"/>\n'
    )


def _dot(p: tuple[float, float], radius: float, css_class: str) -> str:
    return (
        f'<circle class="{css_class}" cx="{p[0]:.3f}" cy="{p[1]:.3f}" '
        f'r="{radius:.2f}" fill="#1040a0"/>\n'
    )


def golden_l_svg(trajectory: Trajectory, size: int = DEFAULT_SIZE, stroke: float = DEFAULT_STROKE) -> str:
    """Draw the golden L, its marked points, and an exact trajectory."""
    raw_extent = GOLDEN_L.vertices[2].x.to_float()  # phi squared
    margin = 0.06 * size
    scale = (size - 2.0 * margin) / raw_extent

    def place(p: GoldenVector) -> tuple[float, float]:
        x, y = p.to_floats()
        return (margin + x * scale, margin + (raw_extent - y) * scale)

    parts = [_svg_header(size, size)]
    parts.append(_polygon([place(v) for v in GOLDEN_L.vertices], "surface-outline", stroke))
    parts.append(
        _polygon([place(v) for v in GOLDEN_L.inscribed_pentagon], "inscribed-pentagon", stroke / 2.0)
    )
    for begin, end in trajectory.segments:
        parts.append(_line(place(begin), place(end), stroke))
    for label, point in GOLDEN_L.weierstrass.items():
        parts.append(_dot(place(point), 2.0 * stroke, f"marked-point marked-point-{label}"))
    parts.append("</svg>\n")
    return "".join(parts)


def pentagon_svg(
    word: Word,
    label: int,
    size: int = DEFAULT_SIZE,
    stroke: float = DEFAULT_STROKE,
    max_bounces: int = DEFAULT_MAX_BOUNCES,
) -> str:
    """Draw the pentagon billiard orbit for a word from one labeled midpoint."""
    path = billiard_path(label, pentagon_direction(word), max_bounces)
    margin = 0.06 * size
    scale = (size - 2.0 * margin) / (2.0 * _CIRCUMRADIUS)

    def place(p: tuple[float, float]) -> tuple[float, float]:
        return (
            margin + (p[0] + _CIRCUMRADIUS) * scale,
            margin + (_CIRCUMRADIUS - p[1]) * scale,
        )

    parts = [_svg_header(size, size)]
    parts.append(_polygon([place(v) for v in PENTAGON_VERTICES], "surface-outline", stroke))
    for begin, end in zip(path.points, path.points[1:]):
        parts.append(_line(place(begin), place(end), stroke))
    for mid_label, point in PENTAGON_MIDPOINTS.items():
        parts.append(_dot(place(point), 2.0 * stroke, f"marked-point marked-point-{mid_label}"))
    parts.append("</svg>\n")
    return "".join(parts)


def render_trajectory(
    word: Word,
    label: int,
    frame: str = GOLDEN_L_FRAME,
    size: int = DEFAULT_SIZE,
    stroke: float = DEFAULT_STROKE,
    cap: int | None = None,
) -> str:
    """SVG for a word and midpoint in the requested frame."""
    if frame == GOLDEN_L_FRAME:
        from .flow import DEFAULT_STEP_CAP, trace

        trajectory = trace(label, word, cap if cap is not None else DEFAULT_STEP_CAP)
        return golden_l_svg(trajectory, size, stroke)
    if frame == PENTAGON_FRAME:
        return pentagon_svg(word, label, size, stroke, cap if cap is not None else DEFAULT_MAX_BOUNCES)
    raise ValueError(f"frame must be one of {FRAMES}, got {frame!r}")
