"""Named statistics used to lump groups and word monoids into classes."""

from __future__ import annotations

from .oriented import OrientedPermutation, directed_oriented_rising, oriented_rising
from .perm import Permutation, rising, turning
from .shuffles import cut_class, hand_class


def rising_number(p: Permutation) -> int:
    return rising(p).count


def rising_sequences(p: Permutation) -> tuple[int, ...]:
    """The cut positions; equal cuts means equal rising sequences."""
    return rising(p).cuts


def turning_number(p: Permutation) -> int:
    return turning(p).count


def turning_points(p: Permutation) -> tuple[int, ...]:
    return tuple(sorted(turning(p).points))


def reduced_turning_number(p: Permutation) -> int:
    return turning(p).reduced_count


def oriented_rising_number(p: OrientedPermutation) -> int:
    return oriented_rising(p).count


def fixed_points(p: Permutation) -> int:
    return sum(1 for i, v in enumerate(p.map, 1) if i == v)


# statistic name -> (domain, function); domain is "sym", "oriented" or "words"
STATISTICS = {
    "rising": ("sym", rising_number),
    "risingsequence": ("sym", rising_sequences),
    "turning": ("sym", turning_number),
    "turningset": ("sym", turning_points),
    "reducedturning": ("sym", reduced_turning_number),
    "fixedpoints": ("sym", fixed_points),
    "orientedrising": ("oriented", oriented_rising_number),
    "directedorientedrising": ("oriented", directed_oriented_rising),
    "hand": ("words", hand_class),
    "cut": ("words", cut_class),
}
