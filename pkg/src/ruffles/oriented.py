"""Oriented (signed) permutations: a permutation plus a face-down flag per card."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .perm import Permutation, all_permutations, compose, identity, inverse


@dataclass(frozen=True, order=True)
class OrientedPermutation:
    perm: Permutation
    # flipped[i-1] is True when card i ends face-down
    flipped: tuple[bool, ...]

    def __post_init__(self):
        fl = tuple(bool(f) for f in self.flipped)
        object.__setattr__(self, "flipped", fl)
        if len(fl) != self.perm.n:
            raise ValueError(f"need {self.perm.n} flip flags, got {len(fl)}")

    @property
    def n(self) -> int:
        return self.perm.n

    def __mul__(self, other: "OrientedPermutation") -> "OrientedPermutation":
        return o_compose(self, other)


@dataclass(frozen=True)
class OrientedRisingDecomposition:
    """Consecutive card intervals; block k is face-up ascending when k is even,
    face-down descending when k is odd.  Blocks may be empty."""

    blocks: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.blocks)


def o_identity(n: int) -> OrientedPermutation:
    return OrientedPermutation(identity(n), (False,) * n)


def o_compose(p: OrientedPermutation, q: OrientedPermutation) -> OrientedPermutation:
    """Natural-order product; each card's flips XOR along its trajectory."""
    if p.n != q.n:
        raise ValueError(f"size mismatch: {p.n} vs {q.n}")
    qf = q.flipped
    flipped = tuple(f ^ qf[pos - 1] for f, pos in zip(p.flipped, p.perm.map))
    return OrientedPermutation(compose(p.perm, q.perm), flipped)


def o_inverse(p: OrientedPermutation) -> OrientedPermutation:
    inv = inverse(p.perm)
    # the card now at position j must be flipped back
    return OrientedPermutation(inv, tuple(p.flipped[c - 1] for c in inv.map))


def project(p: OrientedPermutation) -> Permutation:
    return p.perm


def lifts(sigma: Permutation) -> Iterator[OrientedPermutation]:
    """All 2^n orientations of ``sigma``; flip patterns in binary-counting order."""
    for flips in product((False, True), repeat=sigma.n):
        yield OrientedPermutation(sigma, flips)


def all_oriented(n: int) -> Iterator[OrientedPermutation]:
    for sigma in all_permutations(n):
        yield from lifts(sigma)


def oriented_rising(p: OrientedPermutation) -> OrientedRisingDecomposition:
    """Fewest consecutive blocks realising ``p`` as one oriented ruffle.

    Greedy: keep extending the open block while the card's face matches the
    block parity and its position continues the block's monotone run.
    """
    blocks: list[list[int]] = [[]]
    for card in range(1, p.n + 1):
        down = p.flipped[card - 1]
        pos = p.perm.map[card - 1]
        cur = blocks[-1]
        k = len(blocks) - 1
        if (k % 2 == 1) == down:
            if not cur:
                cur.append(card)
                continue
            last = p.perm.map[cur[-1] - 1]
            if (pos < last) if down else (pos > last):
                cur.append(card)
                continue
            # same parity but broken run: skip past an empty block
            blocks.append([])
        blocks.append([card])
    return OrientedRisingDecomposition(tuple(tuple(b) for b in blocks))


def from_signed(values: Sequence[int]) -> OrientedPermutation:
    """Parse signed function form, e.g. ``(-1, 2)``: negative means face-down."""
    return OrientedPermutation(Permutation(tuple(abs(v) for v in values)),
                               tuple(v < 0 for v in values))


def directed_oriented_rising(p: OrientedPermutation) -> int:
    """Fewest hands for one directed ruffle (either direction) giving ``p``.

    A downward ruffle turns the even piles, which only removes the empty
    leading pile needed when the first card ends face-down.
    """
    count = oriented_rising(p).count
    return count - 1 if p.flipped[0] else count
