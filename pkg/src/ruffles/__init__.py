"""Riffles, ruffles and the subalgebras of shuffle statistics, checked exhaustively."""

from .oriented import OrientedPermutation, o_compose, oriented_rising, project
from .perm import Permutation, compose, deck_word, from_deck_word, inverse, rising, turning
from .shuffles import directed_ruffle, oriented_ruffle, riffle, ruffle
from .words import DirectedWord, RadixWord, directed_mul, gray_mul, radix_mul

__all__ = [
    "DirectedWord",
    "OrientedPermutation",
    "Permutation",
    "RadixWord",
    "compose",
    "deck_word",
    "directed_mul",
    "directed_ruffle",
    "from_deck_word",
    "gray_mul",
    "inverse",
    "o_compose",
    "oriented_rising",
    "oriented_ruffle",
    "project",
    "radix_mul",
    "riffle",
    "rising",
    "ruffle",
    "turning",
]
