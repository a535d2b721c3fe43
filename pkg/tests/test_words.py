"""Word algebra: parsing, direction vectors, inversion, and reduction."""

import random
from itertools import product

import pytest

from goldenl import (
    CapExceededError,
    GoldenNumber,
    GoldenVector,
    VerticalDirectionError,
    derive_once,
    format_word,
    is_base_word,
    parse_word,
    reduce_word,
    vector_to_word,
    word_to_vector,
)


def test_parse_and_format():
    assert parse_word("e") == ()
    assert parse_word("0") == (0,)
    assert parse_word("132") == (1, 3, 2)
    assert format_word(()) == "e"
    assert format_word((2, 1)) == "21"
    for text in ("", "4", "12x", "E"):
        with pytest.raises(ValueError):
            parse_word(text)
    with pytest.raises(ValueError):
        format_word((5,))


def test_word_to_vector_worked_examples():
    assert word_to_vector(()) == GoldenVector(GoldenNumber(1), GoldenNumber(0))
    assert word_to_vector((1, 3, 2)) == GoldenVector(GoldenNumber(3, 2), GoldenNumber(2, 4))
    assert word_to_vector((2, 1)) == GoldenVector(GoldenNumber(2, 2), GoldenNumber(1, 2))


def test_single_letter_vectors_are_sigma_first_columns():
    assert word_to_vector((0,)) == GoldenVector(GoldenNumber(1), GoldenNumber(0))
    assert word_to_vector((1,)) == GoldenVector(GoldenNumber(0, 1), GoldenNumber(1))
    assert word_to_vector((2,)) == GoldenVector(GoldenNumber(0, 1), GoldenNumber(0, 1))
    assert word_to_vector((3,)) == GoldenVector(GoldenNumber(1), GoldenNumber(0, 1))


def test_word_letters_validated():
    with pytest.raises(ValueError):
        word_to_vector((1, 4))


def test_vector_to_word_known():
    assert vector_to_word(GoldenVector(GoldenNumber(1), GoldenNumber(0))) == ()
    assert vector_to_word(GoldenVector(GoldenNumber(1), GoldenNumber(1))) == (2,)
    assert vector_to_word(GoldenVector(GoldenNumber(3, 2), GoldenNumber(2, 4))) == (1, 3, 2)


def test_round_trip_exhaustive_short():
    for length in range(0, 5):
        for word in product((0, 1, 2, 3), repeat=length):
            if word and word[0] == 0:
                continue
            assert vector_to_word(word_to_vector(word)) == word


def test_round_trip_sampled_long():
    rng = random.Random(17)
    for _ in range(40):
        length = rng.randint(7, 8)
        word = (rng.randint(1, 3),) + tuple(rng.randrange(4) for _ in range(length - 1))
        assert vector_to_word(word_to_vector(word)) == word


def test_leading_zeros_collapse():
    # sigma_0 fixes (1, 0), so leading zeros do not change the direction.
    assert word_to_vector((0, 2, 1)) == word_to_vector((2, 1))
    assert vector_to_word(word_to_vector((0, 0, 2, 1))) == (2, 1)
    assert vector_to_word(word_to_vector((0,))) == ()


def test_vector_to_word_never_emits_leading_zero():
    rng = random.Random(91)
    for _ in range(60):
        length = rng.randint(0, 6)
        word = tuple(rng.randrange(4) for _ in range(length))
        recovered = vector_to_word(word_to_vector(word))
        assert recovered == () or recovered[0] != 0


def test_vertical_direction_has_no_word():
    with pytest.raises(VerticalDirectionError):
        vector_to_word(GoldenVector(GoldenNumber(0), GoldenNumber(1)))


def test_inversion_cap():
    v = word_to_vector((1, 2, 3))
    with pytest.raises(CapExceededError):
        vector_to_word(v, cap=2)


def test_reduce_worked_example():
    assert reduce_word((2, 3, 1, 2, 2, 1)) == (2, 3)


def test_reduce_basics():
    assert reduce_word(()) == ()
    assert reduce_word((1, 1)) == ()
    assert reduce_word((1, 2, 2, 1)) == ()
    assert reduce_word((0, 1, 2, 3)) == (0, 1, 2, 3)


def test_derive_once_single_pass():
    assert derive_once((1, 1, 1)) == (1,)
    assert derive_once((1, 2, 2, 1)) == (1, 1)
    assert derive_once(()) == ()


def test_reduce_is_derive_fixpoint():
    rng = random.Random(29)
    for _ in range(300):
        word = tuple(rng.randrange(4) for _ in range(rng.randint(0, 14)))
        current = word
        while True:
            step = derive_once(current)
            if step == current:
                break
            current = step
        assert current == reduce_word(word)


def test_reduce_preserves_length_parity():
    rng = random.Random(31)
    for _ in range(200):
        word = tuple(rng.randrange(4) for _ in range(rng.randint(0, 13)))
        assert (len(word) - len(reduce_word(word))) % 2 == 0


def test_reduce_idempotent_and_base():
    rng = random.Random(37)
    for _ in range(200):
        word = tuple(rng.randrange(4) for _ in range(rng.randint(0, 12)))
        base = reduce_word(word)
        assert reduce_word(base) == base
        assert is_base_word(base)


def test_is_base_word():
    assert is_base_word(())
    assert is_base_word((1, 2, 1))
    assert not is_base_word((1, 1))
    assert not is_base_word((2, 3, 3, 1))
