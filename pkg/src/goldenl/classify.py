"""Combinatorial classification of midpoint trajectories.

For a word k_1 ... k_n, the permutation tau_{k_1} * tau_{k_2} * ... * tau_{k_n}
(rightmost factor acting first) carries each Weierstrass label to the label of
the horizontal trajectory it unwinds to: images 1 and 2 mean the short
cylinder, 3 and 4 the long cylinder, and 5 the saddle connection.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import VerticalDirectionError
from .field import GoldenVector
from .surface import (
    Axis,
    Permutation5,
    TAU,
    VERTICAL_RELABELING,
    WEIERSTRASS_LABELS,
    sector_of,
)
from .words import Word, format_word, vector_to_word


class Classification(Enum):
    SHORT = "short"
    LONG = "long"
    SADDLE_CONNECTION = "saddle"


# Verdicts in the horizontal direction itself (the empty word).
HORIZONTAL_VERDICTS: dict[int, Classification] = {
    1: Classification.SHORT,
    2: Classification.SHORT,
    3: Classification.LONG,
    4: Classification.LONG,
    5: Classification.SADDLE_CONNECTION,
}


def _bucket(label: int) -> Classification:
    return HORIZONTAL_VERDICTS[label]


def word_permutation(word: Word) -> Permutation5:
    """tau_{k_1} * tau_{k_2} * ... * tau_{k_n}, identity for the empty word."""
    acc = Permutation5.identity()
    for k in word:
        if k not in (0, 1, 2, 3):
            raise ValueError(f"word letter out of range 0-3: {k}")
        acc = acc * TAU[k]
    return acc


@dataclass(frozen=True)
class ClassificationReport:
    """Verdicts for all five midpoints in one direction."""

    word: Word | None
    tau: Permutation5 | None
    verdicts: dict[int, Classification]

    def verdict(self, label: int) -> Classification:
        if label not in self.verdicts:
            raise ValueError(f"midpoint label must be 1..5, got {label}")
        return self.verdicts[label]

    def counts(self) -> dict[Classification, int]:
        out = {kind: 0 for kind in Classification}
        for verdict in self.verdicts.values():
            out[verdict] += 1
        return out

    def to_json_dict(self) -> dict:
        return {
            "word": None if self.word is None else format_word(self.word),
            "tau": None if self.tau is None else list(self.tau.images),
            "verdicts": {str(label): self.verdicts[label].value for label in WEIERSTRASS_LABELS},
        }


def classify_all(word: Word) -> ClassificationReport:
    perm = word_permutation(word)
    verdicts = {label: _bucket(perm(label)) for label in WEIERSTRASS_LABELS}
    return ClassificationReport(word=tuple(word), tau=perm, verdicts=verdicts)


def classify(word: Word, label: int) -> Classification:
    if label not in HORIZONTAL_VERDICTS:
        raise ValueError(f"midpoint label must be 1..5, got {label}")
    return _bucket(word_permutation(word)(label))


def classify_vector(v: GoldenVector) -> ClassificationReport:
    """Classify an exact direction vector.

    Horizontal and general directions go through the word machinery. The
    vertical direction has no word; it is classified by reflecting across
    y = x, which relabels the midpoints by (1 5)(2 4) and turns the question
    back into the horizontal one.
    """
    try:
        word = vector_to_word(v)
    except VerticalDirectionError:
        assert sector_of(v) is Axis.VERTICAL
        verdicts = {
            label: HORIZONTAL_VERDICTS[VERTICAL_RELABELING(label)]
            for label in WEIERSTRASS_LABELS
        }
        return ClassificationReport(word=None, tau=None, verdicts=verdicts)
    return classify_all(word)
