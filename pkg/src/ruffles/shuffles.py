"""Interpretation of digit words as shuffles.

Digit ``w_i`` names the pile that supplies final position ``i``.  The deck is
cut into consecutive piles, pile 0 on top, whose sizes are the digit counts.
Positions are then filled in order, each taking the next card of its pile.
A ruffle turns odd-numbered piles over before interleaving (reversed order,
cards face-down); a downward directed ruffle turns the even piles instead.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .oriented import OrientedPermutation
from .perm import Permutation, _unchecked
from .words import DOWN, DirectedWord, RadixWord


@dataclass(frozen=True, order=True)
class CutClassLabel:
    radix: int
    counts: tuple[int, ...]

    def __str__(self):
        return f"{self.radix};" + ",".join(map(str, self.counts))


def _interleave(w: RadixWord, turned: Callable[[int], bool]):
    """Return (function-form map, per-card face-down flags)."""
    a, digits = w.radix, w.digits
    counts = [0] * a
    for x in digits:
        counts[x] += 1
    # next card to hand out from each pile, and the step through it
    nxt, step = [], []
    top = 1
    for k in range(a):
        if turned(k):
            nxt.append(top + counts[k] - 1)
            step.append(-1)
        else:
            nxt.append(top)
            step.append(1)
        top += counts[k]
    m = [0] * len(digits)
    flipped = [False] * len(digits)
    for pos, x in enumerate(digits, 1):
        card = nxt[x]
        nxt[x] += step[x]
        m[card - 1] = pos
        flipped[card - 1] = turned(x)
    return tuple(m), tuple(flipped)


def _odd(k: int) -> bool:
    return k % 2 == 1


def _even(k: int) -> bool:
    return k % 2 == 0


def riffle(w: RadixWord) -> Permutation:
    m, _ = _interleave(w, lambda k: False)
    return _unchecked(m)


def ruffle(w: RadixWord) -> Permutation:
    m, _ = _interleave(w, _odd)
    return _unchecked(m)


def oriented_ruffle(w: RadixWord) -> OrientedPermutation:
    m, flipped = _interleave(w, _odd)
    return OrientedPermutation(_unchecked(m), flipped)


def oriented_directed_ruffle(d: DirectedWord) -> OrientedPermutation:
    m, flipped = _interleave(d.word, _even if d.direction == DOWN else _odd)
    return OrientedPermutation(_unchecked(m), flipped)


def directed_ruffle(d: DirectedWord) -> Permutation:
    return oriented_directed_ruffle(d).perm


def hand_class(w: RadixWord | DirectedWord) -> int:
    return w.radix


def cut_class(w: RadixWord) -> CutClassLabel:
    counts = [0] * w.radix
    for x in w.digits:
        counts[x] += 1
    return CutClassLabel(w.radix, tuple(counts))


SHUFFLES = {
    "riffle": riffle,
    "ruffle": ruffle,
    "orientedruffle": oriented_ruffle,
    "directedruffle": directed_ruffle,
}
