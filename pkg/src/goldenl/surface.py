"""Static geometry of the golden L translation surface.

The golden L is the union of the square [0, phi]^2 with a 1 x phi rectangle on
the right and a phi x 1 rectangle on top. Opposite boundary edges are glued by
translation, the eight boundary vertices become a single cone point of angle
6*pi, and the five Weierstrass points of the resulting genus-2 surface sit at
the side midpoints of an inscribed pentagon.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import NamedTuple, Union

from .field import (
    GoldenMatrix,
    GoldenNumber,
    GoldenVector,
    ONE,
    PHI,
    PHI_INVERSE,
    PHI_SQUARED,
    ZERO,
)

HALF = Fraction(1, 2)


def _gv(xa, xb, ya, yb) -> GoldenVector:
    return GoldenVector(GoldenNumber(xa, xb), GoldenNumber(ya, yb))


@dataclass(frozen=True)
class EdgeIdentification:
    """A glued pair of parallel boundary segments: source + translation = target.

    Source segments lie on the left/bottom boundary and serve as the canonical
    representatives of identified points.
    """

    name: str
    source: tuple[GoldenVector, GoldenVector]
    target: tuple[GoldenVector, GoldenVector]
    translation: GoldenVector


@dataclass(frozen=True)
class GoldenL:
    """Boundary vertices, identifications, and marked points of the golden L."""

    vertices: tuple[GoldenVector, ...]
    identifications: tuple[EdgeIdentification, ...]
    weierstrass: dict[int, GoldenVector]
    cone_representatives: tuple[GoldenVector, ...]
    inscribed_pentagon: tuple[GoldenVector, ...]

    def to_json_dict(self) -> dict:
        return {
            "vertices": [v.quadruple() for v in self.vertices],
            "identifications": [
                {
                    "name": ident.name,
                    "source": [ident.source[0].quadruple(), ident.source[1].quadruple()],
                    "target": [ident.target[0].quadruple(), ident.target[1].quadruple()],
                    "translation": ident.translation.quadruple(),
                }
                for ident in self.identifications
            ],
            "weierstrass_points": {
                str(label): point.quadruple() for label, point in self.weierstrass.items()
            },
            "cone_points": [v.quadruple() for v in self.cone_representatives],
            "inscribed_pentagon": [v.quadruple() for v in self.inscribed_pentagon],
        }


_VERTICES = (
    _gv(0, 0, 0, 0),
    _gv(0, 1, 0, 0),  # (phi, 0)
    _gv(1, 1, 0, 0),  # (phi^2, 0)
    _gv(1, 1, 0, 1),  # (phi^2, phi)
    _gv(0, 1, 0, 1),  # (phi, phi)
    _gv(0, 1, 1, 1),  # (phi, phi^2)
    _gv(0, 0, 1, 1),  # (0, phi^2)
    _gv(0, 0, 0, 1),  # (0, phi)
)

_IDENTIFICATIONS = (
    EdgeIdentification(
        "a",
        source=(_gv(0, 0, 0, 1), _gv(0, 0, 1, 1)),
        target=(_gv(0, 1, 0, 1), _gv(0, 1, 1, 1)),
        translation=_gv(0, 1, 0, 0),
    ),
    EdgeIdentification(
        "b",
        source=(_gv(0, 0, 0, 0), _gv(0, 0, 0, 1)),
        target=(_gv(1, 1, 0, 0), _gv(1, 1, 0, 1)),
        translation=_gv(1, 1, 0, 0),
    ),
    EdgeIdentification(
        "c",
        source=(_gv(0, 0, 0, 0), _gv(0, 1, 0, 0)),
        target=(_gv(0, 0, 1, 1), _gv(0, 1, 1, 1)),
        translation=_gv(0, 0, 1, 1),
    ),
    EdgeIdentification(
        "d",
        source=(_gv(0, 1, 0, 0), _gv(1, 1, 0, 0)),
        target=(_gv(0, 1, 0, 1), _gv(1, 1, 0, 1)),
        translation=_gv(0, 0, 0, 1),
    ),
)

_WEIERSTRASS = {
    1: _gv(0, 0, HALF, 1),          # (0, phi + 1/2)
    2: _gv(0, HALF, HALF, 1),       # (phi/2, phi + 1/2)
    3: _gv(0, HALF, 0, HALF),       # (phi/2, phi/2)
    4: _gv(HALF, 1, 0, HALF),       # (phi + 1/2, phi/2)
    5: _gv(HALF, 1, 0, 0),          # (phi + 1/2, 0)
}

# Side midpoints of this pentagon, in cyclic order, are the points 5, 4, 2, 1, 3.
_INSCRIBED_PENTAGON = (
    _gv(0, 1, 0, 0),
    _gv(1, 1, 0, 0),
    _gv(0, 1, 0, 1),
    _gv(0, 0, 1, 1),
    _gv(0, 0, 0, 1),
)

GOLDEN_L = GoldenL(
    vertices=_VERTICES,
    identifications=_IDENTIFICATIONS,
    weierstrass=_WEIERSTRASS,
    cone_representatives=_VERTICES,
    inscribed_pentagon=_INSCRIBED_PENTAGON,
)

CONE_POINTS = frozenset(_VERTICES)
WEIERSTRASS_LABELS = (1, 2, 3, 4, 5)


def weierstrass_point(label: int) -> GoldenVector:
    if label not in _WEIERSTRASS:
        raise ValueError(f"midpoint label must be 1..5, got {label}")
    return _WEIERSTRASS[label]


# The four parabolic shear generators, row-major.

SIGMA = (
    GoldenMatrix(ONE, PHI, ZERO, ONE),
    GoldenMatrix(PHI, PHI, ONE, PHI),
    GoldenMatrix(PHI, ONE, PHI, PHI),
    GoldenMatrix(ONE, ZERO, PHI, ONE),
)

SIGMA_INVERSE = tuple(m.inverse() for m in SIGMA)


def sigma(k: int) -> GoldenMatrix:
    if not 0 <= k <= 3:
        raise ValueError(f"generator index must be 0..3, got {k}")
    return SIGMA[k]


@dataclass(frozen=True)
class Permutation5:
    """A permutation of the labels 1..5, stored as the image tuple.

    images[j - 1] is where label j goes. Composition is (p * q)(j) = p(q(j)),
    so the right factor acts first.
    """

    images: tuple[int, int, int, int, int]

    def __post_init__(self) -> None:
        if sorted(self.images) != [1, 2, 3, 4, 5]:
            raise ValueError(f"not a permutation of 1..5: {self.images}")

    @classmethod
    def identity(cls) -> Permutation5:
        return cls((1, 2, 3, 4, 5))

    def __call__(self, label: int) -> int:
        if not 1 <= label <= 5:
            raise ValueError(f"label must be 1..5, got {label}")
        return self.images[label - 1]

    def __mul__(self, other: Permutation5) -> Permutation5:
        return Permutation5(tuple(self.images[other.images[j] - 1] for j in range(5)))

    def inverse(self) -> Permutation5:
        images = [0] * 5
        for j, image in enumerate(self.images, start=1):
            images[image - 1] = j
        return Permutation5(tuple(images))

    def cycle_string(self) -> str:
        seen: set[int] = set()
        parts: list[str] = []
        for j in range(1, 6):
            if j in seen:
                continue
            cycle = [j]
            seen.add(j)
            image = self(j)
            while image != j:
                cycle.append(image)
                seen.add(image)
                image = self(image)
            if len(cycle) > 1:
                parts.append("(" + " ".join(str(c) for c in cycle) + ")")
        return "".join(parts) if parts else "()"


# How each shear permutes the Weierstrass points:
# tau_0 = (1 2)(3 4), tau_1 = (1 3)(2 5), tau_2 = (1 4)(3 5), tau_3 = (2 3)(4 5).
TAU = (
    Permutation5((2, 1, 4, 3, 5)),
    Permutation5((3, 5, 1, 4, 2)),
    Permutation5((4, 2, 5, 1, 3)),
    Permutation5((1, 3, 2, 5, 4)),
)


def tau(k: int) -> Permutation5:
    if not 0 <= k <= 3:
        raise ValueError(f"generator index must be 0..3, got {k}")
    return TAU[k]


# Reflecting the golden L across y = x swaps the vertical and horizontal
# directions and relabels the Weierstrass points by (1 5)(2 4).
VERTICAL_RELABELING = Permutation5((5, 4, 3, 2, 1))


class Axis(Enum):
    HORIZONTAL = "horizontal"
    VERTICAL = "vertical"


Sector = Union[int, Axis]

# Lower slope bounds of the four sector cones: 0, 1/phi, 1, phi.
_SECTOR_BOUNDS = (ZERO, PHI_INVERSE, ONE, PHI)


def sector_of(v: GoldenVector) -> Sector:
    """Sector index of a direction in the closed first quadrant.

    Cone k is spanned by the columns of sigma_k; slopes on a shared boundary
    belong to the higher sector. Horizontal directions are terminal (they lie
    in no cone) and vertical ones are reported as Axis.VERTICAL for the caller
    to handle by the y = x relabeling.
    """
    if v.is_zero:
        raise ValueError("zero vector has no direction")
    if v.x.sign() < 0 or v.y.sign() < 0:
        raise ValueError(f"direction must lie in the closed first quadrant: {v}")
    if v.y.is_zero:
        return Axis.HORIZONTAL
    if v.x.is_zero:
        return Axis.VERTICAL
    for k in (3, 2, 1):
        # slope >= bound, compared as y >= bound * x with x > 0
        if (v.y - _SECTOR_BOUNDS[k] * v.x).sign() >= 0:
            return k
    return 0


class PentagonTransfer(NamedTuple):
    """Float change of frame from the golden L to the regular pentagon."""

    matrix: tuple[tuple[float, float], tuple[float, float]]
    inverse: tuple[tuple[float, float], tuple[float, float]]
    cos_pi_5: GoldenNumber


def pentagon_transfer() -> PentagonTransfer:
    """The matrix P = ((1, cos pi/5), (0, sin pi/5)) and its inverse.

    cos(pi/5) = phi/2 exactly; sin(pi/5) exists only as a float, which is why
    the pentagon frame is render-only and never feeds classification.
    """
    import math

    cos_exact = GoldenNumber(0, HALF)
    c = cos_exact.to_float()
    s = math.sin(math.pi / 5.0)
    matrix = ((1.0, c), (0.0, s))
    inverse = ((1.0, -c / s), (0.0, 1.0 / s))
    return PentagonTransfer(matrix, inverse, cos_exact)


def surface_description() -> dict:
    """JSON-ready description of the golden L for renderers and external tools."""
    return GOLDEN_L.to_json_dict()
