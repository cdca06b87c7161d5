import random
from itertools import product

import pytest
from hypothesis import given, strategies as st

from ruffles.words import (
    DOWN,
    UP,
    DirectedWord,
    RadixWord,
    directed_mul,
    enumerate_directed,
    enumerate_words,
    gray_count,
    gray_mul,
    parse_directed,
    parse_word,
    radix_mul,
    unit_word,
)


def words(n, radix_max=4):
    return st.integers(1, radix_max).flatmap(
        lambda a: st.lists(st.integers(0, a - 1), min_size=n, max_size=n).map(
            lambda ds: RadixWord(a, tuple(ds))))


def small_words(n=3, max_radix=3):
    return [w for a in range(1, max_radix + 1) for w in enumerate_words(n, a)]


def test_digit_bounds_enforced():
    with pytest.raises(ValueError):
        RadixWord(2, (0, 2))
    with pytest.raises(ValueError):
        RadixWord(0, ())
    with pytest.raises(ValueError):
        DirectedWord("sideways", unit_word(2))


class TestRadixMul:
    def test_worked_product(self):
        assert radix_mul(RadixWord(3, (1, 0, 2, 1, 2)), RadixWord(2, (1, 1, 0, 1, 0))) == \
            RadixWord(6, (3, 1, 4, 3, 4))

    def test_unit(self):
        m = RadixWord(3, (1, 0, 2, 1, 2))
        assert radix_mul(m, unit_word(5)) == m
        assert radix_mul(unit_word(5), m) == m

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            radix_mul(unit_word(2), unit_word(3))

    def test_matches_composition_of_linear_maps(self):
        # digit x of radix a is the map X -> aX + x; products compose left to right
        rng = random.Random(7)
        for _ in range(200):
            a, b = rng.randint(1, 6), rng.randint(1, 6)
            x, y = rng.randrange(a), rng.randrange(b)
            (z,) = radix_mul(RadixWord(a, (x,)), RadixWord(b, (y,))).digits
            for X in range(a * b):
                assert a * b * X + z == b * (a * X + x) + y

    def test_associative_with_unit_exhaustive(self):
        ws = small_words()
        for x in ws:
            for y in ws:
                xy = radix_mul(x, y)
                assert all(0 <= d < xy.radix for d in xy.digits)
                for z in ws:
                    assert radix_mul(xy, z) == radix_mul(x, radix_mul(y, z))


class TestGrayMul:
    def test_worked_product(self):
        assert gray_mul(RadixWord(3, (1, 0, 1, 2, 1)), RadixWord(2, (1, 1, 0, 1, 0))) == \
            RadixWord(6, (2, 1, 3, 5, 3))

    @given(words(4), words(4))
    def test_even_digits_agree_with_radix(self, m, w):
        m = RadixWord(m.radix, tuple(x - x % 2 for x in m.digits))
        assert gray_mul(m, w) == radix_mul(m, w)

    def test_associative_binary(self):
        ws = list(enumerate_words(3, 2))
        for x, y, z in product(ws, repeat=3):
            assert gray_mul(gray_mul(x, y), z) == gray_mul(x, gray_mul(y, z))

    def test_associative_with_unit_exhaustive(self):
        ws = small_words()
        u = unit_word(3)
        for x in ws:
            assert gray_mul(x, u) == x == gray_mul(u, x)
            for y in ws:
                xy = gray_mul(x, y)
                assert all(0 <= d < xy.radix for d in xy.digits)
                for z in ws:
                    assert gray_mul(xy, z) == gray_mul(x, gray_mul(y, z))

    def test_single_digit_products_follow_gray_count(self):
        for a, b in product(range(1, 5), repeat=2):
            order = list(gray_count((a, b)))
            for x, y in order:
                (z,) = gray_mul(RadixWord(a, (x,)), RadixWord(b, (y,))).digits
                assert order[z] == (x, y)


class TestDirectedMul:
    def test_up_is_gray(self):
        for m in enumerate_words(3, 2):
            for w in enumerate_words(3, 3):
                assert directed_mul(DirectedWord(UP, m), DirectedWord(UP, w)) == \
                    DirectedWord(UP, gray_mul(m, w))

    def test_down_unit_squared(self):
        d = DirectedWord(DOWN, unit_word(4))
        assert directed_mul(d, d).direction == UP

    def test_associative_with_unit(self):
        ws = [w for a in (1, 2, 3) for w in enumerate_directed(2, a)]
        up_unit = DirectedWord(UP, unit_word(2))
        for x in ws:
            assert directed_mul(x, up_unit) == x == directed_mul(up_unit, x)
            for y in ws:
                xy = directed_mul(x, y)
                for z in ws:
                    assert directed_mul(xy, z) == directed_mul(x, directed_mul(y, z))


class TestGrayCount:
    def test_worked_base(self):
        assert list(gray_count((3, 2))) == [(0, 0), (0, 1), (1, 1), (1, 0), (2, 0), (2, 1)]

    @pytest.mark.parametrize("k", [1, 2, 5])
    def test_single_digit(self, k):
        assert list(gray_count((k,))) == [(i,) for i in range(k)]

    def test_binary_reflected(self):
        expected = []
        for i in range(8):
            g = i ^ (i >> 1)
            expected.append(((g >> 2) & 1, (g >> 1) & 1, g & 1))
        assert list(gray_count((2, 2, 2))) == expected

    @given(st.lists(st.integers(1, 4), min_size=1, max_size=4))
    def test_adjacent_tuples_differ_by_one_step(self, bases):
        seq = list(gray_count(bases))
        total = 1
        for b in bases:
            total *= b
        assert len(seq) == total == len(set(seq))
        for s, t in zip(seq, seq[1:]):
            diffs = [abs(x - y) for x, y in zip(s, t) if x != y]
            assert diffs == [1]

    def test_errors(self):
        with pytest.raises(ValueError):
            list(gray_count(()))
        with pytest.raises(ValueError):
            list(gray_count((2, 0)))


class TestEnumerate:
    def test_counts_and_order(self):
        assert len(list(enumerate_words(5, 2))) == 32
        assert list(enumerate_words(3, 1)) == [unit_word(3)]
        ws = list(enumerate_words(4, 3))
        assert len(ws) == 81
        assert ws[0].digits == (0, 0, 0, 0) and ws[-1].digits == (2, 2, 2, 2)
        assert ws == sorted(ws)

    def test_bad_radix(self):
        with pytest.raises(ValueError):
            list(enumerate_words(3, 0))


def test_literals_round_trip():
    w = parse_word("2:1,1,0,1,0")
    assert w == RadixWord(2, (1, 1, 0, 1, 0)) and str(w) == "2:1,1,0,1,0"
    d = parse_directed("down:2:1,1,0,1,0")
    assert d == DirectedWord(DOWN, w) and str(d) == "down:2:1,1,0,1,0"
    assert parse_directed("3:0,2").direction == UP
    for bad in ("2:1,2", "x:1", "2-1,0"):
        with pytest.raises(ValueError):
            parse_word(bad)
