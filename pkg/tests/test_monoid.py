import random

import pytest

from ruffles import monoid
from ruffles.monoid import (
    Action,
    check_action_axioms,
    check_reaction,
    check_twisted_associativity,
    semidirect_compose,
    twisted_product,
)
from ruffles.oriented import all_oriented
from ruffles.perm import all_permutations, compose, identity
from ruffles.shuffles import directed_ruffle, oriented_directed_ruffle, oriented_ruffle, riffle, ruffle
from ruffles.words import RadixWord, enumerate_directed, enumerate_words, radix_mul, unit_word

W = RadixWord


def domain(n, radices, directed=False):
    gen = enumerate_directed if directed else enumerate_words
    return [w for a in radices for w in gen(n, a)]


class TestSemidirect:
    def test_trivial_group_part(self):
        e = identity(3)
        m, n = W(2, (1, 0, 1)), W(3, (2, 2, 0))
        assert semidirect_compose(monoid.RADIX_ACTION, (e, m), (e, n)) == (e, radix_mul(m, n))

    def test_group_embeds(self):
        u = unit_word(3)
        for g in all_permutations(3):
            for h in all_permutations(3):
                assert semidirect_compose(monoid.RADIX_ACTION, (g, u), (h, u)) == (compose(g, h), u)

    def test_associativity_matches_three_way_expansion(self):
        act, rng = monoid.RADIX_ACTION, random.Random(11)
        perms = list(all_permutations(4))
        words = domain(4, (1, 2, 3))
        for _ in range(500):
            (g, h, i), (m, n, o) = rng.choices(perms, k=3), rng.choices(words, k=3)
            left = semidirect_compose(act, semidirect_compose(act, (g, m), (h, n)), (i, o))
            right = semidirect_compose(act, (g, m), semidirect_compose(act, (h, n), (i, o)))
            hi = compose(h, i)
            # (ghi, m^{hi} n^i o)
            expected = (compose(g, hi),
                        radix_mul(radix_mul(act.apply(m, hi), act.apply(n, i)), o))
            assert left == right == expected


class TestTwistedProduct:
    def test_worked_riffle(self):
        got = twisted_product(monoid.RADIX_ACTION, riffle, W(3, (2, 2, 1, 0, 1)), W(2, (1, 1, 0, 1, 0)))
        assert got == W(6, (3, 1, 4, 3, 4))

    def test_worked_ruffle(self):
        got = twisted_product(monoid.GRAY_ACTION, ruffle, W(3, (1, 1, 2, 0, 1)), W(2, (1, 1, 0, 1, 0)))
        assert got == W(6, (2, 1, 3, 5, 3))

    def test_unit_on_the_right(self):
        for m in domain(4, (1, 2, 3)):
            assert twisted_product(monoid.RADIX_ACTION, riffle, m, unit_word(4)) == m
            assert twisted_product(monoid.GRAY_ACTION, ruffle, m, unit_word(4)) == m


class TestCheckReaction:
    @pytest.mark.parametrize("action,gamma", [
        (monoid.RADIX_ACTION, riffle),
        (monoid.GRAY_ACTION, ruffle),
        (monoid.ORIENTED_GRAY_ACTION, oriented_ruffle),
    ])
    def test_passes_n5(self, action, gamma):
        ws = domain(5, (2, 3))
        assert W(3, (2, 2, 1, 0, 1)) in ws and W(2, (1, 1, 0, 1, 0)) in ws
        assert check_reaction(action, gamma, ws) is None

    def test_directed_passes_n4(self):
        assert check_reaction(monoid.DIRECTED_ACTION, directed_ruffle,
                              domain(4, (1, 2, 3), directed=True)) is None

    def test_oriented_directed_reaction(self):
        # the stronger law, with face-down flags kept
        assert check_reaction(monoid.ORIENTED_DIRECTED_ACTION, oriented_directed_ruffle,
                              domain(3, (1, 2, 3), directed=True)) is None

    def test_corrupted_gamma_is_caught(self):
        ws = domain(3, (1, 2))
        u, v = W(2, (0, 0, 1)), W(2, (0, 1, 0))

        def bad(w):
            return riffle(v if w == u else u if w == v else w)

        ce = check_reaction(monoid.RADIX_ACTION, bad, ws)
        assert ce is not None and ce.law == "reaction"
        assert u in ce.witness or v in ce.witness

    def test_counterexample_independent_of_workers(self):
        ws = domain(3, (1, 2))
        bad = _SwapFirstTwo()
        one = check_reaction(monoid.RADIX_ACTION, bad, ws, workers=1)
        three = check_reaction(monoid.RADIX_ACTION, bad, ws, workers=3)
        assert one is not None and one == three


class _SwapFirstTwo:
    def __call__(self, w):
        swap = {W(2, (0, 0, 1)): W(2, (0, 1, 0)), W(2, (0, 1, 0)): W(2, (0, 0, 1))}
        return riffle(swap.get(w, w))


class TestActionAxioms:
    def test_permuting_digits(self):
        assert check_action_axioms(monoid.RADIX_ACTION, all_permutations(4), enumerate_words(4, 3)) is None
        assert check_action_axioms(monoid.GRAY_ACTION, all_permutations(3), domain(3, (1, 2, 3))) is None

    def test_oriented_group_acts_through_projection(self):
        assert check_action_axioms(monoid.ORIENTED_GRAY_ACTION, all_oriented(2), domain(2, (1, 2, 3))) is None

    def test_identity_fixes_everything(self):
        for m in domain(4, (1, 2, 3)):
            assert monoid.RADIX_ACTION.apply(m, identity(4)) == m

    def test_off_by_one_action_is_caught(self):
        def shifted(w, g):
            moved = monoid.permute_word(w, g)
            return W(w.radix, moved.digits[1:] + moved.digits[:1])

        bad = Action(shifted, compose, radix_mul)
        ce = check_action_axioms(bad, all_permutations(3), enumerate_words(3, 2))
        assert ce is not None


class TestTwistedMonoid:
    @pytest.mark.parametrize("action,gamma", [
        (monoid.RADIX_ACTION, riffle),
        (monoid.GRAY_ACTION, ruffle),
    ])
    def test_associative(self, action, gamma):
        assert check_twisted_associativity(action, gamma, domain(3, (1, 2, 3))) is None

    def test_associative_n4_binary(self):
        for action, gamma in ((monoid.RADIX_ACTION, riffle), (monoid.GRAY_ACTION, ruffle)):
            assert check_twisted_associativity(action, gamma, domain(4, (1, 2))) is None

    def test_directed_associative(self):
        assert check_twisted_associativity(monoid.DIRECTED_ACTION, directed_ruffle,
                                           domain(2, (1, 2, 3), directed=True)) is None

    @pytest.mark.parametrize("action,gamma", [
        (monoid.RADIX_ACTION, riffle),
        (monoid.GRAY_ACTION, ruffle),
    ])
    def test_gamma_is_a_monoid_map(self, action, gamma):
        ws = domain(3, (1, 2, 3))
        for m in ws:
            for n in ws:
                assert gamma(twisted_product(action, gamma, m, n)) == compose(gamma(m), gamma(n))
