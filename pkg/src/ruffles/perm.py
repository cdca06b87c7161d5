"""Permutations of {1..n} composed in natural (left-to-right) order.

A permutation is stored in function form: ``p.map[i - 1]`` is the final
position of card ``i``.  The deck word (which card sits at each position)
is the inverse tuple and is derived on demand.

Composition follows ``i^(pq) = (i^p)^q``: apply ``p`` first, then ``q``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterator, Sequence


@dataclass(frozen=True, order=True)
class Permutation:
    map: tuple[int, ...]

    def __post_init__(self):
        m = tuple(self.map)
        object.__setattr__(self, "map", m)
        if not m:
            raise ValueError("a permutation needs n >= 1")
        if sorted(m) != list(range(1, len(m) + 1)):
            raise ValueError(f"not a bijection of 1..{len(m)}: {m}")

    @property
    def n(self) -> int:
        return len(self.map)

    def __getitem__(self, i: int) -> int:
        """Final position of card ``i`` (1-based)."""
        return self.map[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __repr__(self):
        return f"Permutation({self.map})"


@dataclass(frozen=True)
class RisingDecomposition:
    cuts: tuple[int, ...]
    count: int


@dataclass(frozen=True)
class TurningSet:
    points: frozenset[int]
    count: int
    reduced_count: int


def _unchecked(m: tuple[int, ...]) -> Permutation:
    # skip bijectivity validation for values produced internally
    p = object.__new__(Permutation)
    object.__setattr__(p, "map", m)
    return p


def compose(p: Permutation, q: Permutation) -> Permutation:
    """Natural-order product: ``p`` first, then ``q``."""
    if p.n != q.n:
        raise ValueError(f"size mismatch: {p.n} vs {q.n}")
    qm = q.map
    return _unchecked(tuple(qm[j - 1] for j in p.map))


def identity(n: int) -> Permutation:
    if n < 1:
        raise ValueError("n must be >= 1")
    return _unchecked(tuple(range(1, n + 1)))


def reversal(n: int) -> Permutation:
    """The permutation that turns the deck over: card i goes to n+1-i."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return _unchecked(tuple(range(n, 0, -1)))


def inverse(p: Permutation) -> Permutation:
    out = [0] * p.n
    for card, pos in enumerate(p.map, 1):
        out[pos - 1] = card
    return _unchecked(tuple(out))


def from_cycle(n: int, items: Sequence[int]) -> Permutation:
    """Build ``<i_1 ... i_k>`` via ``<i_1..i_k> = <i_{k-1} i_k><i_1..i_{k-1}>``.

    With natural-order composition this sends i_1 -> i_2 -> ... -> i_k -> i_1.
    """
    items = list(items)
    if len(set(items)) != len(items):
        raise ValueError(f"repeated entries in cycle {items}")
    if any(not 1 <= i <= n for i in items):
        raise ValueError(f"cycle entries must lie in 1..{n}: {items}")
    if len(items) <= 1:
        return identity(n)
    if len(items) == 2:
        m = list(range(1, n + 1))
        i, j = items
        m[i - 1], m[j - 1] = j, i
        return _unchecked(tuple(m))
    head = from_cycle(n, items[-2:])
    return compose(head, from_cycle(n, items[:-1]))


def from_fraction(top: Sequence[int], bottom: Sequence[int]) -> Permutation:
    """The before/after fraction ``top / bottom = top * bottom^-1``."""
    return compose(Permutation(tuple(top)), inverse(Permutation(tuple(bottom))))


def deck_word(p: Permutation) -> tuple[int, ...]:
    """Cards listed by position: ``deck_word(p)[j-1]`` is the card at position j."""
    return inverse(p).map


def from_deck_word(word: Sequence[int]) -> Permutation:
    return inverse(Permutation(tuple(word)))


def perm_matrix(p: Permutation) -> list[list[int]]:
    """0/1 matrix with entry (i, j) set iff card i lands at position j."""
    return [[1 if p.map[i] == j + 1 else 0 for j in range(p.n)] for i in range(p.n)]


def act_on_list(p: Permutation, xs: Sequence) -> tuple:
    """Move the entry at index i to index ``p[i]``.

    Same as multiplying the row vector ``xs`` on the right by ``perm_matrix(p)``.
    """
    if len(xs) != p.n:
        raise ValueError(f"length mismatch: list of {len(xs)} for n={p.n}")
    out = [None] * p.n
    for i, pos in enumerate(p.map):
        out[pos - 1] = xs[i]
    return tuple(out)


def rising(p: Permutation) -> RisingDecomposition:
    m = p.map
    cuts = tuple(i for i in range(1, p.n) if m[i] < m[i - 1])
    return RisingDecomposition(cuts, len(cuts) + 1)


def turning(p: Permutation) -> TurningSet:
    # graph extended by 0 -> 0; n is never a turning point
    ext = (0,) + p.map
    pts = set()
    for i in range(1, p.n):
        left, mid, right = ext[i - 1], ext[i], ext[i + 1]
        if (mid > left and mid > right) or (mid < left and mid < right):
            pts.add(i)
    count = len(pts)
    return TurningSet(frozenset(pts), count, count - (1 in pts))


def all_permutations(n: int) -> Iterator[Permutation]:
    """S_n in lexicographic order of function form."""
    for m in permutations(range(1, n + 1)):
        yield _unchecked(m)


def parse_perm(text: str, *, deck: bool = False) -> Permutation:
    """Parse ``"3,5,1,2,4"``; ``deck=True`` reads it as a deck word."""
    try:
        values = tuple(int(t) for t in text.replace(" ", "").split(","))
    except ValueError:
        raise ValueError(f"malformed permutation literal: {text!r}") from None
    p = Permutation(values)
    return inverse(p) if deck else p
