"""Command-line front end.

Exit status: 0 when everything verifies, 1 when a counterexample is found,
2 for usage or configuration errors.  Results go to stdout (or --output);
progress goes to stderr.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys

from . import campaigns, report
from .algebra import LumpingCounterexample, RestructureCounterexample, StructureTable
from .oriented import from_signed, oriented_rising
from .perm import deck_word, parse_perm, rising, turning
from .shuffles import SHUFFLES, cut_class, hand_class, oriented_directed_ruffle
from .statistics import STATISTICS
from .words import parse_directed, parse_word
from .worked import EXAMPLES, first_mismatch, replay

log = logging.getLogger("ruffles")

WORKERS_ENV = "RUFFLES_WORKERS"

# the reaction example echoed for each map at n = 5
REACTION_ECHO = {
    "riffle": "3:2,2,1,0,1 *riffle 2:1,1,0,1,0 = 6:3,1,4,3,4",
    "ruffle": "3:1,1,2,0,1 *ruffle 2:1,1,0,1,0 = 6:2,1,3,5,3",
}


class UsageError(Exception):
    pass


class _Swapped:
    """A shuffle map with the images of two words exchanged (fault injection)."""

    def __init__(self, gamma, u, v):
        self.gamma, self.u, self.v = gamma, u, v

    def __call__(self, w):
        if w == self.u:
            return self.gamma(self.v)
        if w == self.v:
            return self.gamma(self.u)
        return self.gamma(w)


def _radices(text: str) -> list[int]:
    try:
        values = [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"bad radix list {text!r}") from None
    if not values or min(values) < 1:
        raise UsageError("radices must be positive integers")
    return values


def _workers(args) -> int:
    if args.workers is not None:
        return args.workers
    try:
        return int(os.environ.get(WORKERS_ENV, "1"))
    except ValueError:
        raise UsageError(f"{WORKERS_ENV} must be an integer") from None


def _emit(args, text: str):
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_verify_reaction(args) -> int:
    radices = _radices(args.radices)
    if args.n < 1:
        raise UsageError("n must be >= 1")
    entry = campaigns.REACTIONS[args.map]
    if args.corrupt:
        domain = campaigns.word_domain(args.n, radices, entry.directed)
        # two words of equal radix with different images
        u = next(w for w in domain if w.radix > 1)
        v = next(w for w in domain if w.radix == u.radix and entry.gamma(w) != entry.gamma(u))
        gamma = _Swapped(entry.gamma, u, v)
        ce = campaigns.monoid.check_reaction(entry.action, gamma, domain, workers=_workers(args))
    else:
        ce = campaigns.verify_reaction(args.map, args.n, radices, workers=_workers(args))
    if ce is None:
        print(f"{args.map} reaction holds for n = {args.n}, radices {radices}")
        if args.n == 5 and args.map in REACTION_ECHO:
            print(f"  includes {REACTION_ECHO[args.map]}")
        return 0
    print(f"counterexample: {ce}")
    return 1


def cmd_verify_lumping(args) -> int:
    if args.n < 1:
        raise UsageError("n must be >= 1")
    result = campaigns.verify_lumping(args.group, args.n, args.stat, workers=_workers(args))
    if isinstance(result, LumpingCounterexample):
        print(f"not a lumping: {result}")
        return 1
    if args.format == "json":
        _emit(args, report.dumps(report.structure_json(result)))
    elif args.format == "csv":
        _emit(args, report.structure_csv(result))
    else:
        _emit(args, report.structure_text(result))
    return 0


def cmd_restructure(args) -> int:
    if args.n < 1 or args.max_radix < 1:
        raise UsageError("n and --max-radix must be >= 1")
    entry = campaigns.RESTRUCTURES[args.map]
    default_source = "hand" if entry.source_kind in ("words", "directed") else None
    source = args.source or default_source
    if source is None:
        raise UsageError(f"--source is required for map {args.map!r}")
    D = campaigns.run_restructure(args.map, args.n, source, args.stat, args.max_radix)
    if isinstance(D, RestructureCounterexample):
        print(f"restructure constants not well defined: {D}")
        return 1
    if args.format == "json":
        _emit(args, report.dumps(report.restructure_json(D, n=args.n, map=args.map,
                                                         max_radix=args.max_radix)))
    elif args.format == "csv":
        _emit(args, report.restructure_csv(D))
    else:
        _emit(args, report.restructure_text(D))
    if args.certify:
        sys.stdout.flush()
        verdict = campaigns.certify(args.map, args.n, source, args.stat,
                                    args.max_radix, workers=_workers(args))
        print(f"{args.stat}: {'certified' if verdict.certified else 'not certified'} "
              f"({verdict.reason})", file=sys.stderr)
        return 0 if verdict.certified else 1
    return 0


def _perm_lines(p) -> list[str]:
    r, t = rising(p), turning(p)
    return [
        f"function form: {list(p.map)}",
        f"deck word: {list(deck_word(p))}",
        f"rising number: {r.count} (cuts {list(r.cuts)})",
        f"turning number: {t.count} (points {sorted(t.points)})",
        f"reduced turning number: {t.reduced_count}",
    ]


def cmd_stats(args) -> int:
    given = [x for x in (args.word, args.perm_map, args.perm_deck, args.signed) if x]
    if len(given) != 1:
        raise UsageError("give exactly one of --word, --perm-map, --perm-deck, --signed")
    try:
        if args.word:
            if args.map == "directedruffle":
                w = parse_directed(args.word)
                o = oriented_directed_ruffle(w)
                lines = [f"word: {w}", f"hand class: {hand_class(w)}"]
                p = o.perm
            else:
                w = parse_word(args.word)
                lines = [f"word: {w}", f"hand class: {hand_class(w)}",
                         f"cut class: {cut_class(w)}"]
                image = SHUFFLES[args.map](w)
                o = image if args.map == "orientedruffle" else None
                p = image.perm if o is not None else image
            lines.append(f"{args.map} image:")
            lines += ["  " + s for s in _perm_lines(p)]
            if o is not None:
                lines.append(f"  face-down cards: {[i for i, f in enumerate(o.flipped, 1) if f]}")
                lines.append(f"  oriented rising number: {oriented_rising(o).count}")
        elif args.signed:
            o = from_signed([int(t) for t in args.signed.split(",")])
            lines = _perm_lines(o.perm)
            lines.append(f"oriented rising number: {oriented_rising(o).count}")
        else:
            p = parse_perm(args.perm_map or args.perm_deck, deck=bool(args.perm_deck))
            lines = _perm_lines(p)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print("\n".join(lines))
    return 0


def cmd_worked_examples(args) -> int:
    if args.perturb and args.perturb not in {ex.name for ex in EXAMPLES}:
        raise UsageError(f"no worked example named {args.perturb!r}")
    for name, ok in replay(perturb=args.perturb):
        print(f"{'PASS' if ok else 'FAIL'}  {name}")
    mismatch = first_mismatch(perturb=args.perturb)
    if mismatch is not None:
        print(f"first mismatch: {mismatch}")
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ruffles", description="Exhaustive checks for riffle and ruffle shuffle algebras.")
    parser.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--workers", type=int, default=None,
                       help=f"worker processes (default ${WORKERS_ENV} or 1)")

    def output(p):
        p.add_argument("--format", choices=("json", "csv", "text"), default="text")
        p.add_argument("--output", help="write the table here instead of stdout")

    p = sub.add_parser("verify-reaction", help="check a shuffle map is a reaction")
    common(p)
    p.add_argument("--map", choices=sorted(campaigns.REACTIONS), required=True)
    p.add_argument("--radices", default="1,2,3")
    p.add_argument("--corrupt", action="store_true", help="swap two images (self-test)")
    p.set_defaults(func=cmd_verify_reaction)

    p = sub.add_parser("verify-lumping", help="structure constants of a statistic")
    common(p)
    output(p)
    p.add_argument("--group", choices=sorted(campaigns.GROUPS), required=True)
    p.add_argument("--stat", choices=sorted(k for k, (d, _) in STATISTICS.items() if d != "words"),
                   required=True)
    p.set_defaults(func=cmd_verify_lumping)

    p = sub.add_parser("restructure", help="restructure constants of a map")
    common(p)
    output(p)
    p.add_argument("--map", choices=sorted(campaigns.RESTRUCTURES), required=True)
    p.add_argument("--source", choices=sorted(STATISTICS), help="source statistic (default hand)")
    p.add_argument("--stat", choices=sorted(k for k, (d, _) in STATISTICS.items() if d != "words"),
                   required=True, help="target statistic")
    p.add_argument("--max-radix", type=int, default=3)
    p.add_argument("--certify", action="store_true",
                   help="also transport the lumping and confirm it directly")
    p.set_defaults(func=cmd_restructure)

    p = sub.add_parser("stats", help="statistics of one word or permutation")
    p.add_argument("--word", help="word literal a:x1,...,xn (prefix up:/down: for directed)")
    p.add_argument("--map", choices=sorted(SHUFFLES), default="riffle")
    p.add_argument("--perm-map", help="permutation in function form")
    p.add_argument("--perm-deck", help="permutation as a deck word")
    p.add_argument("--signed", help="oriented permutation, e.g. --signed=-2,1,3 (negative = face-down)")
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("worked-examples", help="replay the hand-worked examples")
    p.add_argument("--perturb", metavar="NAME", help="spoil one expected value (self-test)")
    p.set_defaults(func=cmd_worked_examples)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(message)s")
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
