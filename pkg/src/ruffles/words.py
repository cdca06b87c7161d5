"""Digit-word monoids: Radix_n, Gray_n, and directed Gray words.

A word of radix ``a`` is a list of n digits in ``[0, a)``.  Products combine
two words digit by digit as a two-digit number in the hybrid base ``(a, b)``;
the Gray variant counts the low digit alternately up and down.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

UP, DOWN = "up", "down"


@dataclass(frozen=True, order=True)
class RadixWord:
    radix: int
    digits: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "digits", tuple(self.digits))
        if self.radix < 1:
            raise ValueError(f"radix must be >= 1, got {self.radix}")
        bad = [x for x in self.digits if not 0 <= x < self.radix]
        if bad:
            raise ValueError(f"digits {bad} out of range for radix {self.radix}")

    @property
    def n(self) -> int:
        return len(self.digits)

    def __str__(self):
        return f"{self.radix}:" + ",".join(map(str, self.digits))


@dataclass(frozen=True, order=True)
class DirectedWord:
    direction: str
    word: RadixWord

    def __post_init__(self):
        if self.direction not in (UP, DOWN):
            raise ValueError(f"direction must be 'up' or 'down', got {self.direction!r}")

    @property
    def n(self) -> int:
        return self.word.n

    @property
    def radix(self) -> int:
        return self.word.radix

    def __str__(self):
        return f"{self.direction}:{self.word}"


def unit_word(n: int) -> RadixWord:
    """The radix-1 zero word, two-sided identity of both products."""
    return RadixWord(1, (0,) * n)


def _check_sizes(m, w):
    if m.n != w.n:
        raise ValueError(f"size mismatch: {m.n} vs {w.n}")


def radix_mul(m: RadixWord, w: RadixWord) -> RadixWord:
    _check_sizes(m, w)
    b = w.radix
    return RadixWord(m.radix * b, tuple(b * x + y for x, y in zip(m.digits, w.digits)))


def gray_mul(m: RadixWord, w: RadixWord) -> RadixWord:
    _check_sizes(m, w)
    b = w.radix
    return RadixWord(
        m.radix * b,
        tuple(b * x + (y if x % 2 == 0 else b - 1 - y) for x, y in zip(m.digits, w.digits)),
    )


def _flip_bit(direction: str) -> int:
    return 1 if direction == DOWN else 0


def directed_mul(m: DirectedWord, w: DirectedWord) -> DirectedWord:
    """Product of directed Gray words.

    A digit ``x`` under direction ``d`` marks a turned-over pile when ``x + d``
    is odd; the second word's digit is reflected exactly there.  The first
    direction survives into the product only through an odd second radix,
    since an even radix absorbs the parity into the low digit.
    """
    _check_sizes(m, w)
    d1 = _flip_bit(m.direction)
    b = w.radix
    digits = tuple(
        b * x + (b - 1 - y if (x + d1) % 2 else y)
        for x, y in zip(m.word.digits, w.word.digits)
    )
    d = (_flip_bit(w.direction) + (d1 if b % 2 else 0)) % 2
    return DirectedWord(DOWN if d else UP, RadixWord(m.radix * b, digits))


def gray_count(bases: Sequence[int]) -> Iterator[tuple[int, ...]]:
    """All digit tuples in hybrid (reflected) Gray order, high digit first.

    Each lower digit runs up while the digits above it have even sum and
    down otherwise, so consecutive tuples differ by +-1 in one place.
    """
    bases = list(bases)
    if not bases:
        raise ValueError("need at least one base")
    if any(b < 1 for b in bases):
        raise ValueError(f"bases must be >= 1: {bases}")

    def rec(i: int, reflected: bool) -> Iterator[tuple[int, ...]]:
        if i == len(bases):
            yield ()
            return
        order = range(bases[i] - 1, -1, -1) if reflected else range(bases[i])
        for x in order:
            for tail in rec(i + 1, reflected ^ (x % 2 == 1)):
                yield (x,) + tail

    yield from rec(0, False)


def enumerate_words(n: int, radix: int) -> Iterator[RadixWord]:
    """All ``radix**n`` words in lexicographic order."""
    if radix < 1:
        raise ValueError(f"radix must be >= 1, got {radix}")
    for digits in product(range(radix), repeat=n):
        yield RadixWord(radix, digits)


def enumerate_directed(n: int, radix: int) -> Iterator[DirectedWord]:
    for direction in (UP, DOWN):
        for w in enumerate_words(n, radix):
            yield DirectedWord(direction, w)


def parse_word(text: str) -> RadixWord:
    """Parse ``a:x1,...,xn``, e.g. ``2:1,1,0,1,0``."""
    try:
        radix, digits = text.strip().split(":")
        return RadixWord(int(radix), tuple(int(x) for x in digits.split(",")))
    except ValueError as exc:
        raise ValueError(f"malformed word literal {text!r}: {exc}") from None


def parse_directed(text: str) -> DirectedWord:
    """Parse ``up:a:x1,...`` / ``down:a:x1,...``; a bare word defaults to up."""
    head, _, rest = text.strip().partition(":")
    if head in (UP, DOWN):
        return DirectedWord(head, parse_word(rest))
    return DirectedWord(UP, parse_word(text))
