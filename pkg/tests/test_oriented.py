import pytest

from ruffles.oriented import (
    OrientedPermutation,
    all_oriented,
    directed_oriented_rising,
    from_signed,
    lifts,
    o_compose,
    o_identity,
    o_inverse,
    oriented_rising,
    project,
)
from ruffles.perm import Permutation, all_permutations, compose, identity, reversal, turning
from ruffles.shuffles import oriented_directed_ruffle, oriented_ruffle, ruffle
from ruffles.words import DOWN, UP, DirectedWord, enumerate_words

S3_BAR = list(all_oriented(3))


def fewest_hands_oracle(n, max_radix):
    """Smallest radix of a word oriented-ruffling to each element, by enumeration."""
    best = {}
    for a in range(1, max_radix + 1):
        for w in enumerate_words(n, a):
            best.setdefault(oriented_ruffle(w), a)
    return best


def test_group_order():
    for n in range(1, 5):
        assert len(set(all_oriented(n))) == 2 ** n * len(list(all_permutations(n)))


def test_identity_element():
    e = o_identity(3)
    for x in S3_BAR:
        assert o_compose(x, e) == x
        assert o_compose(e, x) == x


def test_total_flip_is_an_involution():
    flip = OrientedPermutation(identity(4), (True,) * 4)
    assert o_compose(flip, flip) == o_identity(4)


def test_associativity_and_inverses_exhaustive():
    for x in S3_BAR:
        assert o_compose(x, o_inverse(x)) == o_identity(3)
        assert o_compose(o_inverse(x), x) == o_identity(3)
        for y in S3_BAR:
            xy = o_compose(x, y)
            for z in S3_BAR:
                assert o_compose(xy, z) == o_compose(x, o_compose(y, z))


def test_projection_is_homomorphism():
    for x in S3_BAR:
        for y in S3_BAR:
            assert project(o_compose(x, y)) == compose(project(x), project(y))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_projection_kernel_and_surjectivity(n):
    kernel = [x for x in all_oriented(n) if project(x) == identity(n)]
    assert len(kernel) == 2 ** n
    assert {project(x) for x in all_oriented(n)} == set(all_permutations(n))


def test_size_mismatch():
    with pytest.raises(ValueError):
        o_compose(o_identity(2), o_identity(3))
    with pytest.raises(ValueError):
        OrientedPermutation(identity(3), (True,))


class TestLifts:
    def test_count_and_projection(self):
        sigma = Permutation((2, 3, 1))
        ls = list(lifts(sigma))
        assert len(ls) == 8 and len(set(ls)) == 8
        assert all(project(x) == sigma for x in ls)

    def test_identity_two(self):
        ls = list(lifts(identity(2)))
        assert len(ls) == 4
        assert [oriented_rising(x).count for x in ls].count(1) == 1

    def test_project_of_identity(self):
        assert project(o_identity(4)) == identity(4)


class TestOrientedRising:
    def test_identity(self):
        assert oriented_rising(o_identity(4)).count == 1

    @pytest.mark.parametrize("n", [1, 2, 3, 5, 8])
    def test_flip_every_card_in_place(self, n):
        d = oriented_rising(OrientedPermutation(identity(n), (True,) * n))
        assert d.count == 2 * n

    def test_block_structure(self):
        # face-down first card forces an empty face-up block 0
        d = oriented_rising(from_signed((-1, 2)))
        assert d.blocks == ((), (1,), (2,))

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_matches_brute_force_minimum(self, n):
        oracle = fewest_hands_oracle(n, 2 * n)
        assert len(oracle) == 2 ** n * len(list(all_permutations(n)))
        for x in all_oriented(n):
            assert oriented_rising(x).count == oracle[x]

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_decomposition_invariants(self, n):
        for x in all_oriented(n):
            d = oriented_rising(x)
            assert 1 <= d.count <= 2 * n
            assert [c for b in d.blocks for c in b] == list(range(1, n + 1))
            for k, block in enumerate(d.blocks):
                assert all(x.flipped[c - 1] == (k % 2 == 1) for c in block)
                pos = [x.perm[c] for c in block]
                assert pos == (sorted(pos, reverse=True) if k % 2 else sorted(pos))
            assert not any(not a and not b for a, b in zip(d.blocks, d.blocks[1:]))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_turning_number_is_min_over_lifts_minus_one(self, n):
        for sigma in all_permutations(n):
            best = min(oriented_rising(x).count for x in lifts(sigma))
            assert best == turning(sigma).count + 1


def test_oriented_ruffle_projects_to_ruffle():
    for w in enumerate_words(4, 2):
        assert project(oriented_ruffle(w)) == ruffle(w)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_directed_oriented_rising_is_fewest_directed_hands(n):
    best = {}
    for a in range(1, 2 * n + 1):
        for d in (UP, DOWN):
            for w in enumerate_words(n, a):
                best.setdefault(oriented_directed_ruffle(DirectedWord(d, w)), a)
    for x in all_oriented(n):
        assert directed_oriented_rising(x) == best[x]


def test_reversal_lift():
    x = OrientedPermutation(reversal(4), (True,) * 4)
    assert oriented_rising(x).count == 2
    assert directed_oriented_rising(x) == 1


def test_from_signed():
    x = from_signed((-2, 1, 3))
    assert x.perm.map == (2, 1, 3) and x.flipped == (True, False, False)
