"""Tree words over the alphabet {0, 1, 2, 3} and their direction vectors.

A word k_1 k_2 ... k_n names the direction sigma_{k_n} ... sigma_{k_1} (1, 0).
Reduction deletes adjacent equal letters until none remain; the result is the
base word, and classification only depends on it.
"""

from __future__ import annotations

from .errors import CapExceededError, VerticalDirectionError
from .field import GoldenVector, ONE, ZERO
from .surface import Axis, SIGMA, SIGMA_INVERSE, sector_of

Word = tuple[int, ...]

EMPTY_WORD: Word = ()
EMPTY_WORD_TEXT = "e"
DEFAULT_INVERSION_CAP = 10_000


def parse_word(text: str) -> Word:
    """Parse a word: digits 0-3, or the single letter "e" for the empty word."""
    if text == EMPTY_WORD_TEXT:
        return EMPTY_WORD
    if not text or any(ch not in "0123" for ch in text):
        raise ValueError(f"not a word over 0-3 (or 'e'): {text!r}")
    return tuple(int(ch) for ch in text)


def format_word(word: Word) -> str:
    _check_letters(word)
    if not word:
        return EMPTY_WORD_TEXT
    return "".join(str(k) for k in word)


def _check_letters(word: Word) -> None:
    for k in word:
        if k not in (0, 1, 2, 3):
            raise ValueError(f"word letter out of range 0-3: {k}")


def word_to_vector(word: Word) -> GoldenVector:
    """Direction vector of a word: apply sigma_k to (1, 0) for each letter in order."""
    _check_letters(word)
    v = GoldenVector(ONE, ZERO)
    for k in word:
        v = SIGMA[k].apply(v)
    return v


def vector_to_word(v: GoldenVector, cap: int = DEFAULT_INVERSION_CAP) -> Word:
    """Recover the unique word without leading 0 that names the direction of v.

    Greedy cone peeling: while the direction is not horizontal, find its sector
    k and pull back by sigma_k inverse. Letters come out last-first, so the
    collected sequence is reversed at the end. Vertical input has no word and
    raises VerticalDirectionError; the cap guards against a non-terminating
    peel, which no valid Q[phi] input produces.
    """
    reversed_letters: list[int] = []
    for _ in range(cap):
        k = sector_of(v)
        if k is Axis.HORIZONTAL:
            return tuple(reversed(reversed_letters))
        if k is Axis.VERTICAL:
            raise VerticalDirectionError(
                "vertical direction has no word; classify it via the y = x relabeling"
            )
        reversed_letters.append(k)
        v = SIGMA_INVERSE[k].apply(v)
    raise CapExceededError(f"direction did not reduce to horizontal within {cap} steps")


def derive_once(word: Word) -> Word:
    """One derivation pass: delete disjoint adjacent equal pairs, left to right."""
    _check_letters(word)
    out: list[int] = []
    i = 0
    while i < len(word):
        if i + 1 < len(word) and word[i] == word[i + 1]:
            i += 2
        else:
            out.append(word[i])
            i += 1
    return tuple(out)


def reduce_word(word: Word) -> Word:
    """The base word: the fixed point of derivation, computed with one stack pass."""
    _check_letters(word)
    stack: list[int] = []
    for k in word:
        if stack and stack[-1] == k:
            stack.pop()
        else:
            stack.append(k)
    return tuple(stack)


def is_base_word(word: Word) -> bool:
    _check_letters(word)
    return all(word[i] != word[i + 1] for i in range(len(word) - 1))
