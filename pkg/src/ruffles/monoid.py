"""Right actions by automorphisms, semidirect products and reactions.

An :class:`Action` bundles three plain functions: the action ``m^g``, the
group product and the monoid product.  A reaction ``gamma`` maps monoid
elements to group elements with ``gamma(m) gamma(n) == gamma(m^gamma(n) n)``;
it turns the monoid product into the twisted product ``m^gamma(n) n``.

The checkers return ``None`` when the law holds and a :class:`Counterexample`
otherwise.  Pairs are scanned in index order of the supplied domain, so the
witness reported is always the first failing pair whatever ``workers`` is.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Any, Callable, Sequence

from .oriented import o_compose, project
from .perm import Permutation, act_on_list, compose
from .words import DirectedWord, RadixWord, directed_mul, gray_mul, radix_mul


@dataclass(frozen=True)
class Action:
    apply: Callable[[Any, Any], Any]
    group_mul: Callable[[Any, Any], Any]
    monoid_mul: Callable[[Any, Any], Any]


@dataclass(frozen=True)
class Counterexample:
    law: str
    witness: tuple
    lhs: Any
    rhs: Any

    def __str__(self):
        args = ", ".join(map(str, self.witness))
        return f"{self.law} fails at ({args}): {self.lhs} != {self.rhs}"


def permute_word(w: RadixWord, g: Permutation) -> RadixWord:
    return RadixWord(w.radix, act_on_list(g, w.digits))


def permute_word_oriented(w: RadixWord, g) -> RadixWord:
    # oriented permutations move digits through their underlying permutation
    return permute_word(w, project(g))


def permute_directed(w: DirectedWord, g: Permutation) -> DirectedWord:
    return DirectedWord(w.direction, permute_word(w.word, g))


def permute_directed_oriented(w: DirectedWord, g) -> DirectedWord:
    return permute_directed(w, project(g))


RADIX_ACTION = Action(permute_word, compose, radix_mul)
GRAY_ACTION = Action(permute_word, compose, gray_mul)
ORIENTED_GRAY_ACTION = Action(permute_word_oriented, o_compose, gray_mul)
DIRECTED_ACTION = Action(permute_directed, compose, directed_mul)
ORIENTED_DIRECTED_ACTION = Action(permute_directed_oriented, o_compose, directed_mul)


def semidirect_compose(action: Action, left: tuple, right: tuple) -> tuple:
    """``(g, m)(h, n) = (gh, m^h n)``."""
    g, m = left
    h, n = right
    return action.group_mul(g, h), action.monoid_mul(action.apply(m, h), n)


def twisted_product(action: Action, gamma: Callable, m, n):
    """``m *_gamma n = m^gamma(n) n``."""
    return action.monoid_mul(action.apply(m, gamma(n)), n)


def _first_reaction_failure(action, gamma, domain, rows):
    images = [gamma(x) for x in domain]
    for i in rows:
        m, gm = domain[i], images[i]
        for j, n in enumerate(domain):
            lhs = action.group_mul(gm, images[j])
            prod = twisted_product(action, gamma, m, n)
            rhs = gamma(prod)
            if lhs != rhs:
                return (i, j), Counterexample("reaction", (m, n), lhs, rhs)
    return None


def _scan(fn, size: int, workers: int):
    """Run ``fn(rows)`` over row chunks; keep the least-index failure."""
    if workers <= 1 or size < 2:
        found = fn(range(size))
        return None if found is None else found[1]
    chunks = [range(k, size, workers) for k in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        results = [r for r in pool.map(fn, chunks) if r is not None]
    return min(results, key=lambda r: r[0])[1] if results else None


def check_reaction(action: Action, gamma: Callable, domain: Sequence,
                   workers: int = 1) -> Counterexample | None:
    """Verify ``gamma(m) gamma(n) == gamma(m *_gamma n)`` for every ordered pair."""
    domain = list(domain)
    fn = partial(_first_reaction_failure, action, gamma, domain)
    return _scan(fn, len(domain), workers)


def check_action_axioms(action: Action, group: Sequence, monoid: Sequence) -> Counterexample | None:
    """Check ``(m^g)^h = m^(gh)`` and ``(mn)^g = m^g n^g`` on the given samples."""
    group, monoid = list(group), list(monoid)
    for m in monoid:
        for g in group:
            mg = action.apply(m, g)
            for h in group:
                lhs = action.apply(mg, h)
                rhs = action.apply(m, action.group_mul(g, h))
                if lhs != rhs:
                    return Counterexample("compatibility", (m, g, h), lhs, rhs)
    for m in monoid:
        for n in monoid:
            mn = action.monoid_mul(m, n)
            for g in group:
                lhs = action.apply(mn, g)
                rhs = action.monoid_mul(action.apply(m, g), action.apply(n, g))
                if lhs != rhs:
                    return Counterexample("automorphism", (m, n, g), lhs, rhs)
    return None


def check_twisted_associativity(action: Action, gamma: Callable, domain: Sequence) -> Counterexample | None:
    domain = list(domain)
    for x in domain:
        for y in domain:
            xy = twisted_product(action, gamma, x, y)
            for z in domain:
                lhs = twisted_product(action, gamma, xy, z)
                rhs = twisted_product(action, gamma, x, twisted_product(action, gamma, y, z))
                if lhs != rhs:
                    return Counterexample("twisted associativity", (x, y, z), lhs, rhs)
    return None
