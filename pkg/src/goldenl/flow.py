"""Exact straight-line flow on the golden L.

The flow moves in a fixed direction from the closed first quadrant, so every
crossing leaves through a right or top boundary edge and re-enters through the
glued left or bottom edge. All intersections, comparisons, and closure checks
are exact; a trajectory ends either by returning to its start point or by
running into the cone point.

The only divisions the flow ever performs are by the direction coordinates,
so once the start point is scaled to integer Z[phi] coordinates every wall
hit stays integral after a further scaling by the coordinate norms. The
tracer exploits that: it runs entirely on machine-integer pairs (a, b)
meaning a + b*phi and converts to fractions once, when the trajectory is
assembled.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import lcm

from .classify import Classification, HORIZONTAL_VERDICTS
from .errors import CapExceededError, StructuralViolationError
from .field import GoldenNumber, GoldenVector, PHI, PHI_SQUARED
from .surface import CONE_POINTS, GOLDEN_L, WEIERSTRASS_LABELS, weierstrass_point
from .words import Word, format_word, word_to_vector

DEFAULT_STEP_CAP = 1_000_000


@dataclass(frozen=True)
class Wall:
    """An exit edge (right or top) with the translation back to its glued twin."""

    name: str
    vertical: bool
    coord: GoldenNumber
    lo: GoldenNumber
    hi: GoldenNumber
    back: GoldenVector


def _build_walls() -> tuple[Wall, ...]:
    walls = []
    for ident in GOLDEN_L.identifications:
        p, q = ident.target
        vertical = p.x == q.x
        if vertical:
            coord, lo, hi = p.x, p.y, q.y
        else:
            coord, lo, hi = p.y, p.x, q.x
        walls.append(Wall(ident.name, vertical, coord, lo, hi, -ident.translation))
    return tuple(walls)


WALLS = _build_walls()


def point_in_surface(p: GoldenVector) -> bool:
    """Membership in the closed L-shaped polygon."""
    x_ok = p.x.sign() >= 0
    y_ok = p.y.sign() >= 0
    in_wide = x_ok and y_ok and p.x <= PHI_SQUARED and p.y <= PHI
    in_tall = x_ok and y_ok and p.x <= PHI and p.y <= PHI_SQUARED
    return in_wide or in_tall


def is_cone_point(p: GoldenVector) -> bool:
    return p in CONE_POINTS


def canonicalize(p: GoldenVector) -> GoldenVector:
    """Canonical representative of a surface point.

    Points on a glued right/top edge map to their left/bottom twin; all cone
    point representatives map to the origin, the distinguished one.
    """
    if not point_in_surface(p):
        raise ValueError(f"point lies outside the golden L: {p}")
    if p in CONE_POINTS:
        return GOLDEN_L.vertices[0]
    for wall in WALLS:
        if wall.vertical:
            on_wall = p.x == wall.coord and wall.lo <= p.y <= wall.hi
        else:
            on_wall = p.y == wall.coord and wall.lo <= p.x <= wall.hi
        if on_wall:
            return p + wall.back
    return p


def is_canonical(p: GoldenVector) -> bool:
    return canonicalize(p) == p


@dataclass(frozen=True)
class Crossing:
    """One flow step: exit through a wall, re-enter at the glued twin."""

    wall: str
    exit_point: GoldenVector
    reentry_point: GoldenVector


@dataclass(frozen=True)
class ConeHit:
    """The flow ran into the cone point."""

    point: GoldenVector


def _check_direction(v: GoldenVector) -> None:
    if v.is_zero:
        raise ValueError("flow direction must be nonzero")
    if v.x.sign() < 0 or v.y.sign() < 0:
        raise ValueError(f"flow direction must lie in the closed first quadrant: {v}")


# Integer kernel. Pairs (a, b) are a + b*phi; points are 4-tuples
# (xa, xb, ya, yb). All kernel lengths carry one fixed scale factor, chosen
# in _kernel_setup so that every wall hit is integral.


def _int_sign(a: int, b: int) -> int:
    """Sign of a + b*phi, via 2*(a + b*phi) = (2a + b) + b*sqrt(5)."""
    p = 2 * a + b
    if p >= 0 and b >= 0:
        return 1 if p or b else 0
    if p <= 0 and b <= 0:
        return -1
    return 1 if (p * p > 5 * b * b) == (p > 0) else -1


def _int_mul(a: int, b: int, c: int, d: int) -> tuple[int, int]:
    bd = b * d
    return a * c + bd, a * d + b * c + bd


def _int_pair(x: GoldenNumber, scale: int) -> tuple[int, int]:
    a = x.a * scale
    b = x.b * scale
    if a.denominator != 1 or b.denominator != 1:
        raise ValueError(f"{x} is not integral at scale {scale}")
    return int(a), int(b)


def _int_point(p: GoldenVector, scale: int) -> tuple[int, int, int, int]:
    return _int_pair(p.x, scale) + _int_pair(p.y, scale)


def _from_pair(a: int, b: int, scale: int) -> GoldenNumber:
    return GoldenNumber(Fraction(a, scale), Fraction(b, scale))


def _from_point(point: tuple[int, int, int, int], scale: int) -> GoldenVector:
    xa, xb, ya, yb = point
    return GoldenVector(_from_pair(xa, xb, scale), _from_pair(ya, yb, scale))


# Wall and cone tables at scale 2, the denominator of the start points.
_WALLS2 = tuple(
    (
        wall.vertical,
        _int_pair(wall.coord, 2),
        _int_pair(wall.lo, 2),
        _int_pair(wall.hi, 2),
        _int_pair(wall.back.x, 2),
        _int_pair(wall.back.y, 2),
        wall.name,
    )
    for wall in WALLS
)
_CONES2 = tuple(_int_point(p, 2) for p in CONE_POINTS)


def _kernel_setup(p_scale: int, v: GoldenVector):
    """Scale tables for a trace: point scale, direction pairs, wall rows, cones.

    The direction is cleared to integer pairs; points, walls, and cones are
    scaled by p_scale times the lcm of the direction coordinate norms, which
    makes every wall-hit division below come out exact. Wall rows carry their
    span bounds premultiplied by the direction coordinate the span test
    scales by.
    """
    den = lcm(v.x.a.denominator, v.x.b.denominator, v.y.a.denominator, v.y.b.denominator)
    vxa, vxb = int(v.x.a * den), int(v.x.b * den)
    vya, vyb = int(v.y.a * den), int(v.y.b * den)
    norm_x = vxa * vxa + vxa * vxb - vxb * vxb
    norm_y = vya * vya + vya * vyb - vyb * vyb
    factor = p_scale * lcm(abs(norm_x) or 1, abs(norm_y) or 1) // 2
    scale = 2 * factor
    has_x = bool(vxa or vxb)
    walls = []
    for vertical, coord, lo, hi, back_x, back_y, name in _WALLS2:
        if vertical:
            if not has_x:
                continue
            span_va, span_vb = vxa, vxb
        else:
            if not (vya or vyb):
                continue
            span_va, span_vb = vya, vyb
        walls.append(
            (
                vertical,
                (coord[0] * factor, coord[1] * factor),
                _int_mul(lo[0] * factor, lo[1] * factor, span_va, span_vb),
                _int_mul(hi[0] * factor, hi[1] * factor, span_va, span_vb),
                (back_x[0] * factor, back_x[1] * factor),
                (back_y[0] * factor, back_y[1] * factor),
                name,
            )
        )
    cones = tuple(
        (xa * factor, xb * factor, ya * factor, yb * factor) for xa, xb, ya, yb in _CONES2
    )
    return scale, (vxa, vxb, vya, vyb), tuple(walls), cones, norm_x, norm_y, has_x


def _exact_div(pair: tuple[int, int], n: int) -> tuple[int, int]:
    qa, ra = divmod(pair[0], n)
    qb, rb = divmod(pair[1], n)
    if ra or rb:
        raise StructuralViolationError("wall hit left the integer lattice")
    return qa, qb


def _kernel_next(point, direction, walls, cones, norm_x, norm_y, has_x):
    """One flow step on integer coordinates.

    Returns (hit, reentry, wall_name, cone): the first wall hit ahead, the
    glued re-entry point, and the nearest cone representative on the half-open
    segment (point, hit], or None. Wall corners are all cone representatives,
    so a corner exit is caught by the cone scan; so are the flat vertices that
    edge-collinear flow runs over.
    """
    pxa, pxb, pya, pyb = point
    vxa, vxb, vya, vyb = direction
    best = None
    for vertical, coord, span_lo, span_hi, back_x, back_y, name in walls:
        if vertical:
            ra, rb = coord[0] - pxa, coord[1] - pxb
            if _int_sign(ra, rb) <= 0:
                continue
            # Coordinate along the wall, scaled by v.x: p.y*v.x + reach*v.y.
            sa, sb = _int_mul(pya, pyb, vxa, vxb)
            ta, tb = _int_mul(ra, rb, vya, vyb)
            oa, ob = sa + ta, sb + tb
        else:
            ra, rb = coord[0] - pya, coord[1] - pyb
            if _int_sign(ra, rb) <= 0:
                continue
            sa, sb = _int_mul(pxa, pxb, vya, vyb)
            ta, tb = _int_mul(ra, rb, vxa, vxb)
            oa, ob = sa + ta, sb + tb
        if _int_sign(oa - span_lo[0], ob - span_lo[1]) < 0:
            continue
        if _int_sign(span_hi[0] - oa, span_hi[1] - ob) < 0:
            continue
        if best is not None:
            # Compare hit times (reach / v-coordinate) across axes by
            # cross-multiplying; both denominators are positive.
            bra, brb, b_vertical = best[0], best[1], best[2]
            if vertical == b_vertical:
                closer = _int_sign(bra - ra, brb - rb) > 0
            else:
                la, lb = _int_mul(ra, rb, *( (vya, vyb) if vertical else (vxa, vxb) ))
                ma, mb = _int_mul(bra, brb, *( (vya, vyb) if b_vertical else (vxa, vxb) ))
                closer = _int_sign(ma - la, mb - lb) > 0
            if not closer:
                continue
        best = (ra, rb, vertical, coord, (oa, ob), back_x, back_y, name)
    if best is None:
        raise StructuralViolationError("no exit wall ahead of the flow")
    _, _, vertical, coord, other, back_x, back_y, name = best
    if vertical:
        hit_y = _exact_div(_int_mul(other[0], other[1], vxa + vxb, -vxb), norm_x)
        hit = (coord[0], coord[1], hit_y[0], hit_y[1])
    else:
        hit_x = _exact_div(_int_mul(other[0], other[1], vya + vyb, -vyb), norm_y)
        hit = (hit_x[0], hit_x[1], coord[0], coord[1])
    reentry = (
        hit[0] + back_x[0],
        hit[1] + back_x[1],
        hit[2] + back_y[0],
        hit[3] + back_y[1],
    )
    cone = _first_cone_on_segment(point, direction, hit, cones, has_x)
    return hit, reentry, name, cone


def _on_open_ray_before(point, direction, target, endpoint, has_x):
    """Progress of target along the ray, if strictly after point and not past
    endpoint; None otherwise. Progress is measured on the dominant axis."""
    dxa, dxb = target[0] - point[0], target[1] - point[1]
    dya, dyb = target[2] - point[2], target[3] - point[3]
    vxa, vxb, vya, vyb = direction
    ca, cb = _int_mul(dxa, dxb, vya, vyb)
    ea, eb = _int_mul(dya, dyb, vxa, vxb)
    if ca != ea or cb != eb:
        return None
    if has_x:
        prog = (dxa, dxb)
        limit = (endpoint[0] - point[0], endpoint[1] - point[1])
    else:
        prog = (dya, dyb)
        limit = (endpoint[2] - point[2], endpoint[3] - point[3])
    if _int_sign(prog[0], prog[1]) <= 0:
        return None
    if _int_sign(limit[0] - prog[0], limit[1] - prog[1]) < 0:
        return None
    return prog


def _first_cone_on_segment(point, direction, endpoint, cones, has_x):
    best = None
    best_prog = None
    for cone in cones:
        prog = _on_open_ray_before(point, direction, cone, endpoint, has_x)
        if prog is None:
            continue
        if best_prog is None or _int_sign(best_prog[0] - prog[0], best_prog[1] - prog[1]) > 0:
            best, best_prog = cone, prog
    return best


def advance(p: GoldenVector, v: GoldenVector) -> Crossing | ConeHit:
    """Flow from a canonical point to the next boundary crossing or cone hit."""
    _check_direction(v)
    if not point_in_surface(p):
        raise ValueError(f"point lies outside the golden L: {p}")
    if p in CONE_POINTS:
        raise ValueError("flow cannot start at the cone point")
    p_scale = lcm(2, p.x.a.denominator, p.x.b.denominator, p.y.a.denominator, p.y.b.denominator)
    scale, direction, walls, cones, norm_x, norm_y, has_x = _kernel_setup(p_scale, v)
    hit, reentry, name, cone = _kernel_next(
        _int_point(p, scale), direction, walls, cones, norm_x, norm_y, has_x
    )
    if cone is not None:
        return ConeHit(_from_point(cone, scale))
    return Crossing(name, _from_point(hit, scale), _from_point(reentry, scale))


class Outcome(Enum):
    CLOSED = "closed"
    HIT_CONE_POINT = "cone_point"


Segment = tuple[GoldenVector, GoldenVector]


@dataclass(frozen=True)
class Trajectory:
    """A maximal flow orbit from a Weierstrass point in one direction."""

    start_label: int
    start: GoldenVector
    direction: GoldenVector
    segments: tuple[Segment, ...]
    outcome: Outcome
    holonomy: GoldenVector
    cone_point: GoldenVector | None

    @property
    def segment_count(self) -> int:
        return len(self.segments)

    def to_json_dict(self, word: Word | None = None) -> dict:
        return {
            "word": None if word is None else format_word(word),
            "midpoint": self.start_label,
            "direction": self.direction.quadruple(),
            "outcome": self.outcome.value,
            "segments": [
                {"from": begin.quadruple(), "to": end.quadruple()}
                for begin, end in self.segments
            ],
            "segment_count": self.segment_count,
            "holonomy": self.holonomy.quadruple(),
            "cone_point": None if self.cone_point is None else self.cone_point.quadruple(),
        }


def trace_direction(label: int, v: GoldenVector, cap: int = DEFAULT_STEP_CAP) -> Trajectory:
    """Flow from Weierstrass point `label` in direction v until closure or cone hit.

    Closure can land exactly on the start point at a re-entry, or strictly
    inside a segment (the start need not sit on a glued edge); in the latter
    case the last segment is truncated at the start point.
    """
    _check_direction(v)
    start = weierstrass_point(label)
    scale, direction, walls, cones, norm_x, norm_y, has_x = _kernel_setup(2, v)
    start_point = _int_point(start, scale)

    raw_segments: list[tuple[tuple[int, int, int, int], tuple[int, int, int, int]]] = []
    current = start_point
    outcome: Outcome | None = None
    cone_end: tuple[int, int, int, int] | None = None
    for _ in range(cap):
        hit, reentry, _, cone = _kernel_next(
            current, direction, walls, cones, norm_x, norm_y, has_x
        )
        endpoint = hit if cone is None else cone
        if raw_segments and _on_open_ray_before(
            current, direction, start_point, endpoint, has_x
        ) is not None:
            # The orbit returned to its start strictly inside this segment.
            raw_segments.append((current, start_point))
            outcome = Outcome.CLOSED
            break
        if cone is not None:
            raw_segments.append((current, cone))
            outcome = Outcome.HIT_CONE_POINT
            cone_end = cone
            break
        raw_segments.append((current, hit))
        if reentry == start_point:
            outcome = Outcome.CLOSED
            break
        current = reentry
    if outcome is None:
        raise CapExceededError(f"trajectory did not terminate within {cap} steps")

    segments = tuple(
        (_from_point(begin, scale), _from_point(end, scale)) for begin, end in raw_segments
    )
    h = (0, 0, 0, 0)
    for begin, end in raw_segments:
        h = (
            h[0] + end[0] - begin[0],
            h[1] + end[1] - begin[1],
            h[2] + end[2] - begin[2],
            h[3] + end[3] - begin[3],
        )
    return Trajectory(
        start_label=label,
        start=start,
        direction=v,
        segments=segments,
        outcome=outcome,
        holonomy=_from_point(h, scale),
        cone_point=None if cone_end is None else _from_point(cone_end, scale),
    )


def trace(label: int, word: Word, cap: int = DEFAULT_STEP_CAP) -> Trajectory:
    return trace_direction(label, word_to_vector(word), cap)


@dataclass(frozen=True)
class OracleReport:
    """Joint result of flowing all five midpoints in one direction."""

    direction: GoldenVector
    trajectories: dict[int, Trajectory]
    verdicts: dict[int, Classification]
    short_holonomy: GoldenVector
    long_holonomy: GoldenVector
    saddle_label: int


def _holonomy_magnitude(trajectory: Trajectory, vertical: bool) -> GoldenNumber:
    h = trajectory.holonomy
    return h.y if vertical else h.x


def oracle_report_direction(v: GoldenVector, cap: int = DEFAULT_STEP_CAP) -> OracleReport:
    """Classify every midpoint by flowing it, checking the cylinder structure.

    Exactly one midpoint must hit the cone point; the other four must close
    with holonomies parallel to the direction, splitting two and two between
    exactly two magnitudes with ratio phi. Anything else is a structural
    violation of the simulator or the geometry tables, never bad input.
    """
    _check_direction(v)
    trajectories = {label: trace_direction(label, v, cap) for label in WEIERSTRASS_LABELS}
    saddles = [l for l, t in trajectories.items() if t.outcome is Outcome.HIT_CONE_POINT]
    closed = [l for l, t in trajectories.items() if t.outcome is Outcome.CLOSED]
    if len(saddles) != 1 or len(closed) != 4:
        raise StructuralViolationError(
            f"expected 4 closed orbits and 1 cone hit, got {len(closed)} and {len(saddles)}"
        )
    vertical = v.x.is_zero
    for label in closed:
        if not trajectories[label].holonomy.cross(v).is_zero:
            raise StructuralViolationError(f"holonomy of midpoint {label} is not parallel to {v}")
    magnitudes = sorted({_holonomy_magnitude(trajectories[l], vertical) for l in closed})
    if len(magnitudes) != 2:
        raise StructuralViolationError(f"expected exactly 2 holonomy magnitudes, got {magnitudes}")
    small, large = magnitudes
    if large != small * PHI:
        raise StructuralViolationError(f"cylinder holonomies {small}, {large} are not in ratio phi")
    verdicts: dict[int, Classification] = {saddles[0]: Classification.SADDLE_CONNECTION}
    short_labels = [l for l in closed if _holonomy_magnitude(trajectories[l], vertical) == small]
    if len(short_labels) != 2:
        raise StructuralViolationError("holonomy magnitudes do not split two and two")
    for label in closed:
        is_short = label in short_labels
        verdicts[label] = Classification.SHORT if is_short else Classification.LONG
    short_example = trajectories[short_labels[0]].holonomy
    long_example = next(
        trajectories[l].holonomy for l in closed if l not in short_labels
    )
    return OracleReport(
        direction=v,
        trajectories=trajectories,
        verdicts=verdicts,
        short_holonomy=short_example,
        long_holonomy=long_example,
        saddle_label=saddles[0],
    )


def oracle_report(word: Word, cap: int = DEFAULT_STEP_CAP) -> OracleReport:
    return oracle_report_direction(word_to_vector(word), cap)


def oracle_classify(word: Word, cap: int = DEFAULT_STEP_CAP) -> dict[int, Classification]:
    """Flow-based verdict map, the independent check on the tau computation."""
    return oracle_report(word, cap).verdicts


def oracle_classify_direction(v: GoldenVector, cap: int = DEFAULT_STEP_CAP) -> dict[int, Classification]:
    return oracle_report_direction(v, cap).verdicts


def validate_trajectory_structure(trajectory: Trajectory) -> None:
    """Check the wall-crossing bookkeeping of a finished trajectory.

    Consecutive segments must connect by one of the four gluing translations,
    every segment must point along the direction, and a closed orbit must end
    exactly where it started. Holds for the trajectory and for its reversal
    (reversed segment order and orientation, negated translations).
    """
    v = trajectory.direction
    allowed = set()
    for ident in GOLDEN_L.identifications:
        allowed.add((ident.translation.x, ident.translation.y))
        allowed.add((-ident.translation.x, -ident.translation.y))
    for begin, end in trajectory.segments:
        step = end - begin
        if step.is_zero or not step.cross(v).is_zero:
            raise StructuralViolationError(f"segment {begin} -> {end} is not along {v}")
        if step.dot(v).sign() <= 0:
            raise StructuralViolationError(f"segment {begin} -> {end} runs against {v}")
    for (_, end), (next_begin, _) in zip(trajectory.segments, trajectory.segments[1:]):
        jump = next_begin - end
        if (jump.x, jump.y) not in allowed:
            raise StructuralViolationError(f"segments jump by {jump}, not a gluing translation")
    final = trajectory.segments[-1][1]
    if trajectory.outcome is Outcome.CLOSED:
        closes_at_start = final == trajectory.start or canonicalize(final) == trajectory.start
        if not closes_at_start:
            raise StructuralViolationError(f"closed orbit ends at {final}, not at its start")
    else:
        if final not in CONE_POINTS:
            raise StructuralViolationError(f"cone-hit orbit ends at {final}, not a cone point")
