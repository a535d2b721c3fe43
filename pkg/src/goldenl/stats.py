"""Distribution of base-word lengths over uniformly random words.

Appending a letter to a word whose base word has length l >= 1 cancels with
probability 1/4 (the letter equal to the current last letter) and extends with
probability 3/4; from l = 0 every letter extends. Reduced length is therefore
a nearest-neighbor walk on the nonnegative integers, which the exact profile
exploits; brute force enumeration and Monte Carlo sampling are kept around as
independent checks.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import CapExceededError
from .words import reduce_word

DEFAULT_ENUMERATION_LIMIT = 10
_MC_SHARD_SIZE = 1 << 16


@dataclass(frozen=True)
class ReductionProfile:
    """counts[l] = number of length-m words whose base word has length l."""

    word_length: int
    counts: dict[int, int]

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    def probability(self, reduced_length: int) -> Fraction:
        return Fraction(self.counts.get(reduced_length, 0), 4**self.word_length)


def exact_profile(m: int) -> ReductionProfile:
    """Exact base-word length distribution via the walk recurrence."""
    if m < 0:
        raise ValueError(f"word length must be nonnegative, got {m}")
    counts = {0: 1}
    for _ in range(m):
        step: dict[int, int] = {}
        for length, ways in counts.items():
            if length == 0:
                step[1] = step.get(1, 0) + 4 * ways
            else:
                step[length - 1] = step.get(length - 1, 0) + ways
                step[length + 1] = step.get(length + 1, 0) + 3 * ways
        counts = step
    return ReductionProfile(word_length=m, counts=counts)


def count_empty_reductions(m: int) -> int:
    """How many of the 4**m words reduce to the empty word."""
    return exact_profile(m).counts.get(0, 0)


def empty_reduction_probability(m: int) -> Fraction:
    return exact_profile(m).probability(0)


def brute_force_profile(m: int, limit: int = DEFAULT_ENUMERATION_LIMIT) -> ReductionProfile:
    """Enumerate all 4**m words and reduce each one. Exponential; capped."""
    if m < 0:
        raise ValueError(f"word length must be nonnegative, got {m}")
    if m > limit:
        raise CapExceededError(f"enumeration of 4**{m} words exceeds the limit {limit}")
    counts: dict[int, int] = {}
    for word in itertools.product((0, 1, 2, 3), repeat=m):
        length = len(reduce_word(word))
        counts[length] = counts.get(length, 0) + 1
    return ReductionProfile(word_length=m, counts=counts)


@dataclass(frozen=True)
class MonteCarloEstimate:
    word_length: int
    samples: int
    seed: int
    hits: int

    @property
    def estimate(self) -> float:
        return self.hits / self.samples

    @property
    def stderr(self) -> float:
        p = self.estimate
        return (p * (1.0 - p) / self.samples) ** 0.5


def monte_carlo_empty_rate(m: int, samples: int, seed: int = 0) -> MonteCarloEstimate:
    """Estimate the empty-reduction probability by sampling uniform words.

    Sampling is sharded with one RNG per (seed, m, shard) so the result is a
    pure function of the arguments no matter how shards would be scheduled.
    """
    if m < 0:
        raise ValueError(f"word length must be nonnegative, got {m}")
    if samples <= 0:
        raise ValueError(f"sample count must be positive, got {samples}")
    hits = 0
    done = 0
    shard = 0
    while done < samples:
        batch = min(_MC_SHARD_SIZE, samples - done)
        rng = random.Random(f"{seed}:{m}:{shard}")
        for _ in range(batch):
            stack: list[int] = []
            for _ in range(m):
                letter = rng.randrange(4)
                if stack and stack[-1] == letter:
                    stack.pop()
                else:
                    stack.append(letter)
            if not stack:
                hits += 1
        done += batch
        shard += 1
    return MonteCarloEstimate(word_length=m, samples=samples, seed=seed, hits=hits)
