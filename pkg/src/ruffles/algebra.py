"""Lumpings, structure constants and restructure constants.

Everything here is exact integer counting.  A statistic lumps a finite
monoid when, for every pair of classes ``[a], [b]`` and every ``c``, the
number of factorisations ``x y = c`` with ``x`` in ``[a]`` and ``y`` in
``[b]`` depends only on the class of ``c``.  A map ``f: M -> N``
transports a lumping of ``M`` to a statistic on ``N`` when the preimage
counts inside each source class depend only on the target class, and the
resulting matrix has full column rank.
"""

from __future__ import annotations

from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial
from typing import Any, Callable, Hashable, Iterable, Sequence


class CertificationError(AssertionError):
    """The transported lumping disagrees with direct verification."""


def _sorted_labels(labels: Iterable[Hashable]) -> list:
    labels = list(labels)
    try:
        return sorted(labels)
    except TypeError:
        return sorted(labels, key=repr)


@dataclass(frozen=True)
class ClassTable:
    """Partition of ``elements`` by the value of a statistic.

    ``class_of[i]`` is the class index of ``elements[i]``; classes are
    ordered by label.
    """

    statistic: str
    elements: tuple
    labels: tuple
    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]
    index: dict = field(repr=False, compare=False)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def __len__(self):
        return len(self.classes)

    def partition(self) -> frozenset[frozenset]:
        """The partition as a set of element sets (labels forgotten)."""
        return frozenset(frozenset(self.elements[i] for i in c) for c in self.classes)


def classify(elements: Iterable, statistic: Callable, name: str | None = None) -> ClassTable:
    elements = tuple(elements)
    values = [statistic(x) for x in elements]
    labels = _sorted_labels(set(values))
    pos = {lab: k for k, lab in enumerate(labels)}
    members: list[list[int]] = [[] for _ in labels]
    for i, v in enumerate(values):
        members[pos[v]].append(i)
    index = {x: i for i, x in enumerate(elements)}
    if len(index) != len(elements):
        raise ValueError("elements must be distinct")
    return ClassTable(
        statistic=name or getattr(statistic, "__name__", "statistic"),
        elements=elements,
        labels=tuple(labels),
        classes=tuple(tuple(m) for m in members),
        class_of=tuple(pos[v] for v in values),
        index=index,
    )


@dataclass(frozen=True)
class StructureTable:
    statistic: str
    n: int | None
    labels: tuple
    sizes: tuple[int, ...]
    # sparse: (a, b, c) class indices -> number of factorisations
    constants: dict[tuple[int, int, int], int]

    def value(self, a: int, b: int, c: int) -> int:
        return self.constants.get((a, b, c), 0)

    def row_sums_ok(self) -> bool:
        k = len(self.labels)
        for a in range(k):
            for b in range(k):
                total = sum(self.value(a, b, c) * self.sizes[c] for c in range(k))
                if total != self.sizes[a] * self.sizes[b]:
                    return False
        return True

    def is_commutative(self) -> bool:
        return all(self.value(b, a, c) == v for (a, b, c), v in self.constants.items())


@dataclass(frozen=True)
class LumpingCounterexample:
    """Two members of one class with different factorisation counts."""

    statistic: str
    pair: tuple[Any, Any]  # labels of the factor classes
    target_label: Any
    representatives: tuple[Any, Any]
    counts: tuple[int, int]

    def __str__(self):
        (c1, c2), (k1, k2) = self.representatives, self.counts
        return (f"{self.statistic}: classes {self.pair[0]!r} x {self.pair[1]!r} "
                f"give {k1} factorisations of {c1} but {k2} of {c2} "
                f"(both in class {self.target_label!r})")


def _count_products(elements, class_of, index, product, k, rows):
    n_el = len(elements)
    counts = [0] * (k * k * n_el)
    for i in rows:
        x = elements[i]
        base = class_of[i] * k
        for j, y in enumerate(elements):
            try:
                c = index[product(x, y)]
            except KeyError:
                raise ValueError(f"product of {x} and {y} leaves the element set") from None
            counts[(base + class_of[j]) * n_el + c] += 1
    return counts


def _pair_counts(table: ClassTable, product: Callable, workers: int) -> list[int]:
    k, size = len(table), len(table.elements)
    fn = partial(_count_products, table.elements, table.class_of, table.index, product, k)
    if workers <= 1:
        return fn(range(size))
    chunks = [range(s, size, workers) for s in range(workers)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(fn, chunks))
    return [sum(col) for col in zip(*parts)]


def structure_constants(table: ClassTable, product: Callable, n: int | None = None,
                        workers: int = 1) -> StructureTable | LumpingCounterexample:
    """Count ``x y = c`` per class pair and check representative independence."""
    k, size = len(table), len(table.elements)
    counts = _pair_counts(table, product, workers)
    constants = {}
    for a in range(k):
        for b in range(k):
            row = (a * k + b) * size
            for c, members in enumerate(table.classes):
                first = counts[row + members[0]]
                for m in members[1:]:
                    if counts[row + m] != first:
                        return LumpingCounterexample(
                            table.statistic,
                            (table.labels[a], table.labels[b]),
                            table.labels[c],
                            (table.elements[members[0]], table.elements[m]),
                            (first, counts[row + m]),
                        )
                if first:
                    constants[(a, b, c)] = first
    return StructureTable(table.statistic, n, table.labels, table.sizes, constants)


def group_algebra_product(left: dict, right: dict, product: Callable) -> Counter:
    """Multiply two elements of the integer monoid algebra (dicts of coefficients)."""
    out: Counter = Counter()
    for x, cx in left.items():
        for y, cy in right.items():
            out[product(x, y)] += cx * cy
    return out


def class_sum(table: ClassTable, k: int) -> dict:
    return {table.elements[i]: 1 for i in table.classes[k]}


# ---------------------------------------------------------------- restructure


@dataclass(frozen=True)
class RestructureMatrix:
    source: str
    target: str
    row_labels: tuple
    col_labels: tuple
    entries: tuple[tuple[int, ...], ...]
    # greedy triangular ordering: pivots are (row, col) index pairs
    row_order: tuple[int, ...]
    col_order: tuple[int, ...]
    pivots: tuple[tuple[int, int], ...]
    lower_triangular: bool
    rank: int

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.entries[r][c] for r, c in self.pivots)

    @property
    def spans_basis(self) -> bool:
        """Every standard basis vector of the target lies in the row space."""
        return self.rank == len(self.col_labels)

    def reordered(self) -> list[list[int]]:
        return [[self.entries[r][c] for c in self.col_order] for r in self.row_order]


@dataclass(frozen=True)
class RestructureCounterexample:
    source_label: Any
    target_label: Any
    representatives: tuple[Any, Any]
    counts: tuple[int, int]

    def __str__(self):
        (b1, b2), (k1, k2) = self.representatives, self.counts
        return (f"source class {self.source_label!r} reaches {b1} in {k1} ways "
                f"but {b2} in {k2} ways (both in target class {self.target_label!r})")


def exact_rank(rows: Sequence[Sequence[int]]) -> int:
    m = [[Fraction(v) for v in row] for row in rows]
    rank, ncols = 0, len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col] != 0), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col] != 0:
                f = m[r][col] / m[rank][col]
                m[r] = [u - f * v for u, v in zip(m[r], m[rank])]
        rank += 1
    return rank


def triangular_order(entries: Sequence[Sequence[int]]):
    """Greedy search for a lower-triangular arrangement.

    Repeatedly take the first remaining row whose support, outside columns
    already used, is a single column; that column becomes its pivot.  Rows
    left with no new support go last.  Returns ``(row_order, col_order,
    pivots, ok)``; ``ok`` is False if some remaining row still has two or
    more unused columns when no row qualifies.
    """
    nrows = len(entries)
    ncols = len(entries[0]) if entries else 0
    used: set[int] = set()
    remaining = list(range(nrows))
    pivots = []
    while remaining:
        for r in remaining:
            new = [c for c in range(ncols) if entries[r][c] and c not in used]
            if len(new) == 1:
                pivots.append((r, new[0]))
                used.add(new[0])
                remaining.remove(r)
                break
        else:
            break
    ok = all(not any(entries[r][c] for c in range(ncols) if c not in used) for r in remaining)
    row_order = tuple(r for r, _ in pivots) + tuple(remaining)
    col_order = tuple(c for _, c in pivots) + tuple(c for c in range(ncols) if c not in used)
    return row_order, col_order, tuple(pivots), ok


def restructure(f: Callable, source: ClassTable, target: ClassTable) -> RestructureMatrix | RestructureCounterexample:
    """Restructure constants of ``f`` from ``source`` classes to ``target`` classes."""
    size = len(target.elements)
    per_class = []
    for members in source.classes:
        hits = [0] * size
        for i in members:
            y = f(source.elements[i])
            try:
                hits[target.index[y]] += 1
            except KeyError:
                raise ValueError(f"image {y} of {source.elements[i]} is outside the target set") from None
        per_class.append(hits)
    entries = []
    for a, hits in enumerate(per_class):
        row = []
        for b, members in enumerate(target.classes):
            first = hits[members[0]]
            for m in members[1:]:
                if hits[m] != first:
                    return RestructureCounterexample(
                        source.labels[a], target.labels[b],
                        (target.elements[members[0]], target.elements[m]),
                        (first, hits[m]),
                    )
            row.append(first)
        entries.append(tuple(row))
    row_order, col_order, pivots, ok = triangular_order(entries)
    return RestructureMatrix(
        source=source.statistic,
        target=target.statistic,
        row_labels=source.labels,
        col_labels=target.labels,
        entries=tuple(entries),
        row_order=row_order,
        col_order=col_order,
        pivots=pivots,
        lower_triangular=ok,
        rank=exact_rank(entries),
    )


@dataclass(frozen=True)
class Verdict:
    certified: bool
    statistic: str
    reason: str
    table: StructureTable | None = None


def certify_lumping_via_theorem(D: RestructureMatrix, source_is_lumping: bool,
                                target: ClassTable, product: Callable,
                                n: int | None = None, workers: int = 1) -> Verdict:
    """Certify the target statistic from ``D``, then confirm it directly.

    A certified claim that direct counting refutes raises
    :class:`CertificationError`: that can only be a bug here.
    """
    if not source_is_lumping:
        return Verdict(False, target.statistic, "source statistic is not a verified lumping")
    if not D.spans_basis:
        return Verdict(False, target.statistic,
                       f"restructure matrix has rank {D.rank} < {len(D.col_labels)} target classes")
    direct = structure_constants(target, product, n=n, workers=workers)
    if isinstance(direct, LumpingCounterexample):
        raise CertificationError(f"certified {target.statistic} but direct check found: {direct}")
    return Verdict(True, target.statistic, "restructure constants well defined with full row space", direct)


def hand_algebra_check(n: int, max_radix: int, action, gamma: Callable,
                       enumerate_words: Callable) -> tuple | None:
    """Check that radix-a times radix-b products cover the radix-ab class evenly.

    For plain words each radix-ab word must arise from exactly one pair
    ``(u, v)``; directed words double up, one factorisation per direction
    choice.  Even fibres make the hand classes a lumping with a single
    non-zero structure constant per pair of radices.  Returns ``None`` on
    success, else ``(a, b, word, times)`` for a badly covered word (``times``
    is None when the product leaves the radix-ab class).
    """
    from .monoid import twisted_product

    for a in range(1, max_radix + 1):
        for b in range(1, max_radix + 1):
            left, right = list(enumerate_words(n, a)), list(enumerate_words(n, b))
            targets = list(enumerate_words(n, a * b))
            hits = Counter()
            for u in left:
                for v in right:
                    hits[twisted_product(action, gamma, u, v)] += 1
            expected = len(left) * len(right) // len(targets)
            for w in targets:
                if hits.get(w, 0) != expected:
                    return (a, b, w, hits.get(w, 0))
            if len(hits) != len(targets):
                stray = next(w for w in hits if w not in set(targets))
                return (a, b, stray, None)
    return None
