"""Replay of the hand-worked 3- and 5-card examples, compared bit for bit."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from . import monoid
from .oriented import OrientedPermutation, oriented_rising
from .perm import (
    Permutation,
    act_on_list,
    compose,
    deck_word,
    from_cycle,
    from_fraction,
    identity,
    perm_matrix,
    reversal,
    rising,
    turning,
)
from .shuffles import directed_ruffle, riffle, ruffle
from .words import DOWN, UP, DirectedWord, RadixWord, gray_count, gray_mul, radix_mul


@dataclass(frozen=True)
class Example:
    name: str
    expected: Any
    compute: Callable[[], Any]


def _w(radix, *digits):
    return RadixWord(radix, digits)


def _matrix_product(x, y):
    return [[sum(x[i][k] * y[k][j] for k in range(len(y))) for j in range(len(y[0]))]
            for i in range(len(x))]


A = Permutation((2, 1, 3))
B = Permutation((1, 3, 2))

RIFFLE_M = _w(3, 2, 2, 1, 0, 1)
RIFFLE_N = _w(2, 1, 1, 0, 1, 0)
RUFFLE_M = _w(3, 1, 1, 2, 0, 1)


def _riffle_twisted():
    return monoid.twisted_product(monoid.RADIX_ACTION, riffle, RIFFLE_M, RIFFLE_N)


def _ruffle_twisted():
    return monoid.twisted_product(monoid.GRAY_ACTION, ruffle, RUFFLE_M, RIFFLE_N)


EXAMPLES = [
    # 3-card braid generators and the fraction notation
    Example("a = <1 2>", (2, 1, 3), lambda: from_cycle(3, [1, 2]).map),
    Example("b = <2 3>", (1, 3, 2), lambda: from_cycle(3, [2, 3]).map),
    Example("ab = <1 2><2 3>", (3, 1, 2), lambda: compose(A, B).map),
    Example("<1 3 2>", (3, 1, 2), lambda: from_cycle(3, [1, 3, 2]).map),
    Example("a = (1,2,3)/(2,1,3)", (2, 1, 3), lambda: from_fraction((1, 2, 3), (2, 1, 3)).map),
    Example("b = (1,2,3)/(1,3,2)", (1, 3, 2), lambda: from_fraction((1, 2, 3), (1, 3, 2)).map),
    Example("b = (2,1,3)/(2,3,1)", (1, 3, 2), lambda: from_fraction((2, 1, 3), (2, 3, 1)).map),
    Example("ab = (1,2,3)/(2,3,1)", (3, 1, 2), lambda: from_fraction((1, 2, 3), (2, 3, 1)).map),
    Example("ab as deck word", (2, 3, 1), lambda: deck_word(compose(A, B))),
    Example("permmatrix[a] permmatrix[b]",
            [[0, 0, 1], [1, 0, 0], [0, 1, 0]],
            lambda: _matrix_product(perm_matrix(A), perm_matrix(B))),
    Example("permmatrix[ab]", [[0, 0, 1], [1, 0, 0], [0, 1, 0]], lambda: perm_matrix(compose(A, B))),
    # riffle chain
    Example("riffle 2:1,1,0,1,0", (3, 4, 1, 5, 2), lambda: deck_word(riffle(RIFFLE_N))),
    Example("riffle 3:2,2,1,0,1", (4, 5, 2, 1, 3), lambda: deck_word(riffle(RIFFLE_M))),
    Example("3:2,2,1,0,1 permuted by riffle 2:1,1,0,1,0", (1, 0, 2, 1, 2),
            lambda: act_on_list(riffle(RIFFLE_N), RIFFLE_M.digits)),
    Example("3:1,0,2,1,2 * 2:1,1,0,1,0 (radix)", _w(6, 3, 1, 4, 3, 4),
            lambda: radix_mul(_w(3, 1, 0, 2, 1, 2), RIFFLE_N)),
    Example("3:2,2,1,0,1 *riffle 2:1,1,0,1,0", _w(6, 3, 1, 4, 3, 4), _riffle_twisted),
    Example("(4,5,2,1,3)/(2,1,4,3,5) = riffle 2:1,1,0,1,0", riffle(RIFFLE_N).map,
            lambda: from_fraction((4, 5, 2, 1, 3), (2, 1, 4, 3, 5)).map),
    Example("riffle product, composed", (2, 1, 4, 3, 5),
            lambda: deck_word(compose(riffle(RIFFLE_M), riffle(RIFFLE_N)))),
    Example("riffle 6:3,1,4,3,4", (2, 1, 4, 3, 5), lambda: deck_word(riffle(_riffle_twisted()))),
    # Gray counting
    Example("Gray base (3,2)", [(0, 0), (0, 1), (1, 1), (1, 0), (2, 0), (2, 1)],
            lambda: list(gray_count((3, 2)))),
    # ruffle chain
    Example("ruffle 2:1,1,0,1,0", (5, 4, 1, 3, 2), lambda: deck_word(ruffle(RIFFLE_N))),
    Example("ruffle 3:1,1,2,0,1", (4, 3, 5, 1, 2), lambda: deck_word(ruffle(RUFFLE_M))),
    Example("3:1,1,2,0,1 permuted by ruffle 2:1,1,0,1,0", (1, 0, 1, 2, 1),
            lambda: act_on_list(ruffle(RIFFLE_N), RUFFLE_M.digits)),
    Example("3:1,0,1,2,1 * 2:1,1,0,1,0 (gray)", _w(6, 2, 1, 3, 5, 3),
            lambda: gray_mul(_w(3, 1, 0, 1, 2, 1), RIFFLE_N)),
    Example("3:1,1,2,0,1 *ruffle 2:1,1,0,1,0", _w(6, 2, 1, 3, 5, 3), _ruffle_twisted),
    Example("(4,3,5,1,2)/(2,1,4,5,3) = ruffle 2:1,1,0,1,0", ruffle(RIFFLE_N).map,
            lambda: from_fraction((4, 3, 5, 1, 2), (2, 1, 4, 5, 3)).map),
    Example("ruffle product, composed", (2, 1, 4, 5, 3),
            lambda: deck_word(compose(ruffle(RUFFLE_M), ruffle(RIFFLE_N)))),
    Example("ruffle 6:2,1,3,5,3", (2, 1, 4, 5, 3), lambda: deck_word(ruffle(_ruffle_twisted()))),
    # directed ruffles
    Example("up directed ruffle 2:1,1,0,1,0", (5, 4, 1, 3, 2),
            lambda: deck_word(directed_ruffle(DirectedWord(UP, RIFFLE_N)))),
    Example("down directed ruffle 2:1,1,0,1,0", (3, 4, 2, 5, 1),
            lambda: deck_word(directed_ruffle(DirectedWord(DOWN, RIFFLE_N)))),
    # statistic anchors
    Example("rising number of identity", 1, lambda: rising(identity(5)).count),
    Example("turning number of identity", 0, lambda: turning(identity(5)).count),
    Example("reduced turning number of reversal", 0, lambda: turning(reversal(5)).reduced_count),
    Example("oriented rising number, every card flipped in place", 10,
            lambda: oriented_rising(OrientedPermutation(identity(5), (True,) * 5)).count),
]


@dataclass(frozen=True)
class Mismatch:
    name: str
    expected: Any
    got: Any

    def __str__(self):
        return f"{self.name}: expected {self.expected!r}, got {self.got!r}"


def replay(examples=None, perturb: str | None = None) -> list[tuple[str, bool]]:
    """Run every example; ``perturb`` names one whose expectation is spoiled.

    Returns ``(name, ok)`` pairs in order.
    """
    results = []
    for ex in examples or EXAMPLES:
        expected = ex.expected
        if ex.name == perturb:
            expected = ("perturbed", expected)
        results.append((ex.name, ex.compute() == expected))
    return results


def first_mismatch(examples=None, perturb: str | None = None) -> Mismatch | None:
    for ex in examples or EXAMPLES:
        expected = ("perturbed", ex.expected) if ex.name == perturb else ex.expected
        got = ex.compute()
        if got != expected:
            return Mismatch(ex.name, expected, got)
    return None
