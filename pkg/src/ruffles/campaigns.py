"""Exhaustive verification campaigns over bounded n and radix."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable

from . import monoid
from .algebra import (
    ClassTable,
    LumpingCounterexample,
    RestructureCounterexample,
    RestructureMatrix,
    StructureTable,
    Verdict,
    certify_lumping_via_theorem,
    classify,
    hand_algebra_check,
    restructure,
    structure_constants,
)
from .oriented import all_oriented, o_compose, project
from .perm import all_permutations, compose
from .shuffles import (
    directed_ruffle,
    oriented_directed_ruffle,
    oriented_ruffle,
    riffle,
    ruffle,
)
from .statistics import STATISTICS
from .words import enumerate_directed, enumerate_words

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReactionSpec:
    action: monoid.Action
    gamma: Callable
    directed: bool = False


REACTIONS = {
    "riffle": ReactionSpec(monoid.RADIX_ACTION, riffle),
    "ruffle": ReactionSpec(monoid.GRAY_ACTION, ruffle),
    "orientedruffle": ReactionSpec(monoid.ORIENTED_GRAY_ACTION, oriented_ruffle),
    "directedruffle": ReactionSpec(monoid.DIRECTED_ACTION, directed_ruffle, directed=True),
}

GROUPS = {
    "sym": (all_permutations, compose),
    "oriented": (all_oriented, o_compose),
}


def word_domain(n: int, radices, directed: bool = False) -> list:
    gen = enumerate_directed if directed else enumerate_words
    return [w for a in radices for w in gen(n, a)]


def verify_reaction(name: str, n: int, radices, workers: int = 1):
    spec = REACTIONS[name]
    domain = word_domain(n, radices, spec.directed)
    log.info("checking %s reaction on %d words", name, len(domain))
    return monoid.check_reaction(spec.action, spec.gamma, domain, workers=workers)


def group_table(group: str, n: int, stat: str) -> ClassTable:
    domain, fn = STATISTICS[stat]
    if domain != group:
        raise ValueError(f"statistic {stat!r} is defined on {domain!r}, not {group!r}")
    elements, _ = GROUPS[group]
    return classify(elements(n), fn, name=stat)


def verify_lumping(group: str, n: int, stat: str,
                   workers: int = 1) -> StructureTable | LumpingCounterexample:
    table = group_table(group, n, stat)
    _, product = GROUPS[group]
    log.info("counting %d^2 products in %s_%d by %s", len(table.elements), group, n, stat)
    return structure_constants(table, product, n=n, workers=workers)


@dataclass(frozen=True)
class RestructureSpec:
    f: Callable
    # "words", "directed" or a group name
    source_kind: str
    target_group: str


RESTRUCTURES = {
    "riffle": RestructureSpec(riffle, "words", "sym"),
    "ruffle": RestructureSpec(ruffle, "words", "sym"),
    "orientedruffle": RestructureSpec(oriented_ruffle, "words", "oriented"),
    "directedruffle": RestructureSpec(directed_ruffle, "directed", "sym"),
    "orienteddirectedruffle": RestructureSpec(oriented_directed_ruffle, "directed", "oriented"),
    "project": RestructureSpec(project, "oriented", "sym"),
}


def source_table(kind: str, n: int, source_stat: str, max_radix: int) -> ClassTable:
    if kind in GROUPS:
        return group_table(kind, n, source_stat)
    domain, fn = STATISTICS[source_stat]
    if domain != "words":
        raise ValueError(f"statistic {source_stat!r} does not apply to words")
    if source_stat == "cut" and kind == "directed":
        raise ValueError("cut classes are defined on undirected words only")
    elements = word_domain(n, range(1, max_radix + 1), directed=kind == "directed")
    return classify(elements, fn, name=source_stat)


def run_restructure(map_name: str, n: int, source_stat: str, target_stat: str,
                    max_radix: int = 1) -> RestructureMatrix | RestructureCounterexample:
    spec = RESTRUCTURES[map_name]
    src = source_table(spec.source_kind, n, source_stat, max_radix)
    tgt = group_table(spec.target_group, n, target_stat)
    return restructure(spec.f, src, tgt)


FACTORISATION_RADIX = 3


def factor_map(map_name: str) -> str:
    """The reaction whose twisted product governs the source words of ``map_name``."""
    return {"riffle": "riffle", "ruffle": "ruffle", "orientedruffle": "ruffle"}[map_name]


def certify(map_name: str, n: int, source_stat: str, target_stat: str,
            max_radix: int = 1, workers: int = 1) -> Verdict:
    """Transport a lumping along ``map_name`` and confirm it by direct counting.

    Word-side sources are hand or cut classes.  Both are lumpings once the
    twisted product covers each radix-ab class evenly, which is checked for
    radices up to ``FACTORISATION_RADIX``; group-side sources are verified
    by direct counting first.
    """
    spec = RESTRUCTURES[map_name]
    D = run_restructure(map_name, n, source_stat, target_stat, max_radix)
    if isinstance(D, RestructureCounterexample):
        return Verdict(False, target_stat, f"restructure constants not well defined: {D}")
    if spec.source_kind in GROUPS:
        src = verify_lumping(spec.source_kind, n, source_stat, workers)
        source_ok = isinstance(src, StructureTable)
    else:
        reaction = REACTIONS["directedruffle" if spec.source_kind == "directed" else factor_map(map_name)]
        gen = enumerate_directed if spec.source_kind == "directed" else enumerate_words
        bound = min(max_radix, FACTORISATION_RADIX)
        source_ok = hand_algebra_check(n, bound, reaction.action, reaction.gamma, gen) is None
    tgt = group_table(spec.target_group, n, target_stat)
    _, product = GROUPS[spec.target_group]
    return certify_lumping_via_theorem(D, source_ok, tgt, product, n=n, workers=workers)
