"""Executable versions of the witnesses used in the splitting and bounding arguments.

* :func:`splitter_from_slalom` -- a set splitting every member of a family
  that has slalom ``h``.
* :func:`rothberger_guesser` / :func:`ij_from_guesser` -- a guessing function
  for the maps ``y -> (first 2n elements of y)`` and the greedy disjoint
  sets ``I``, ``J`` it induces.
* :func:`gtilde` / :func:`bounding_reduction` -- the bound ``g(h(n+1))``
  obtained from a compressor ``h``.
* :func:`maxfin_closure`, :func:`escape_function`,
  :func:`filter_subbase_from_bound` -- finite maxima and the ``[f<g]`` filter
  subbase.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from functools import reduce
from math import lcm
from typing import Sequence

from .compression import compress_set
from .epsets import EPSet, almost_subset, complement, enumeration, intersect, require_infinite, union
from .errors import ExhaustedChoice, NotIncreasing, WitnessInvalid
from .families import FamilySpec
from .qafuns import QAFun, compose, le_set, pointwise_max, require_increasing
from .streams import DEFAULT_BUDGET, Budget, LazyFun, LazySet


def splitter_from_slalom(h: QAFun) -> EPSet:
    """The union of the even-indexed windows ``[h(2n), h(2n+1))``."""
    require_increasing(h)
    T = lcm(2, h.period)
    jump = h.incr * T // h.period
    E = h.start + (h.start % 2)
    bounds = [h(k) for k in range(E + T + 2)]

    def inside(x):
        if x < bounds[0]:
            return False
        return (bisect_right(bounds, x) - 1) % 2 == 0

    return EPSet.from_predicate(inside, h(E), jump)


def first2n(y: EPSet, n: int) -> frozenset:
    """The ``2n`` smallest elements of ``y``.

    These are ``y(1), ..., y(2n)`` in one-based enumeration, i.e. our
    zero-based ``y(0), ..., y(2n-1)``.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    require_infinite(y)
    return frozenset(y.first(2 * n))


class GuesserProgram:
    """Guessing function interleaving the sources by residue class.

    ``g(n) = first2n(sources[n % k], n)``, so ``g`` agrees with ``f_y`` on the
    whole residue class of ``y`` (for ``n >= 1``).
    """

    def __init__(self, sources: Sequence[EPSet]):
        if not sources:
            raise ValueError("guesser needs at least one source")
        self.sources = tuple(require_infinite(y) for y in sources)
        self._enums = [enumeration(y) for y in self.sources]

    def strand(self, n: int) -> int:
        return n % len(self.sources)

    def limit(self, n: int) -> int:
        return 2 * n

    def candidate(self, n: int, idx: int) -> int:
        """The ``idx``-th smallest member of ``g(n)``."""
        return self._enums[self.strand(n)](idx)

    def __call__(self, n: int) -> frozenset:
        return frozenset(self.candidate(n, i) for i in range(self.limit(n)))

    def matches(self, source: int, n: int) -> bool:
        return self(n) == first2n(self.sources[source], n)

    def universe(self) -> EPSet:
        return reduce(union, self.sources)

    def __repr__(self) -> str:
        return f"GuesserProgram({', '.join(map(str, self.sources))})"


def rothberger_guesser(Y: Sequence[EPSet]) -> GuesserProgram:
    return GuesserProgram(Y)


class _GreedyRun:
    """One replay of the greedy choice of ``(i_n, j_n)``."""

    def __init__(self, g: GuesserProgram, budget: Budget):
        self.g = g
        self.budget = budget
        self.n = 0
        self.used: set[int] = set()
        self.I: set[int] = set()
        self.J: set[int] = set()
        self.pairs: list[tuple[int, int]] = []
        self._ptr: dict[int, int] = {}
        self._universe = iter(g.universe())
        self._pending = next(self._universe)

    def step(self) -> tuple[int, int]:
        self.budget.tick()
        self.n += 1
        n, g = self.n, self.g
        strand, lim = g.strand(n), g.limit(n)
        idx = self._ptr.get(strand, 0)
        while idx < lim and g.candidate(n, idx) in self.used:
            idx += 1
        self._ptr[strand] = idx
        picks = []
        while len(picks) < 2 and idx < lim:
            x = g.candidate(n, idx)
            if x not in self.used:
                picks.append(x)
            idx += 1
        if len(picks) < 2:
            raise ExhaustedChoice(f"g({n}) has fewer than two unused members")
        i, j = sorted(picks)
        self.used.update(picks)
        self.I.add(i)
        self.J.add(j)
        self.pairs.append((i, j))
        return i, j

    def settle(self, depth: int) -> None:
        """Run until no element below ``depth`` can still be chosen."""
        while True:
            while self._pending in self.used:
                self._pending = next(self._universe)
            if self._pending >= depth:
                return
            self.step()


def greedy_pairs(g: GuesserProgram, rounds: int, budget: int = DEFAULT_BUDGET) -> list[tuple[int, int]]:
    """The first ``rounds`` pairs ``(i_n, j_n)``, ``n = 1..rounds``."""
    run = _GreedyRun(g, Budget(budget))
    for _ in range(rounds):
        run.step()
    return run.pairs


def ij_truncations(g: GuesserProgram, depth: int, budget: int = DEFAULT_BUDGET) -> tuple[list[int], list[int]]:
    """``I`` and ``J`` below ``depth`` from a single greedy run."""
    run = _GreedyRun(g, Budget(budget))
    run.settle(depth)
    return sorted(x for x in run.I if x < depth), sorted(x for x in run.J if x < depth)


def ij_from_guesser(g: GuesserProgram, budget: int = DEFAULT_BUDGET) -> tuple[LazySet, LazySet]:
    """Greedy disjoint sets: ``i_n < j_n`` are the two smallest unused members of ``g(n)``."""

    def side(which):
        def gen(b):
            run = _GreedyRun(g, b)
            chosen = run.I if which == "I" else run.J
            for x in g.universe():
                run.settle(x + 1)
                if x in chosen:
                    yield x

        return gen

    params = ";".join(map(str, g.sources))
    return (LazySet("greedy_I", params, side("I"), budget),
            LazySet("greedy_J", params, side("J"), budget))


def gtilde(g: QAFun, h: QAFun) -> QAFun:
    """``n -> g(h(n+1))``."""
    require_increasing(h, "compressor h")
    return compose(g, h.shift(1))


@dataclass(frozen=True)
class BoundingEntry:
    f: QAFun
    le_g: EPSet
    compressed: EPSet
    le_gtilde: EPSet
    subset: bool
    almost: bool


@dataclass(frozen=True)
class BoundingReport:
    Y: tuple
    g: QAFun
    h: QAFun
    gtilde: QAFun
    entries: tuple

    @property
    def verifies(self) -> bool:
        return all(e.subset and e.almost for e in self.entries)

    def verify(self) -> bool:
        """Recompute every flag from the stored functions."""
        gt = compose(self.g, self.h.shift(1))
        if gt != self.gtilde:
            return False
        for e in self.entries:
            fresh = _bounding_entry(e.f, self.g, self.h, gt)
            if fresh != e or not (fresh.subset and fresh.almost):
                return False
        return True

    def to_json(self) -> dict:
        return {
            "g": str(self.g),
            "h": str(self.h),
            "gtilde": str(self.gtilde),
            "verifies": self.verifies,
            "entries": [
                {"f": str(e.f), "le_g": str(e.le_g), "compressed": str(e.compressed),
                 "le_gtilde": str(e.le_gtilde), "subset": e.subset, "almost_subset": e.almost}
                for e in self.entries
            ],
        }


def _bounding_entry(f, g, h, gt) -> BoundingEntry:
    le_g = le_set(f, g)
    compressed = compress_set(le_g, h)
    le_gt = le_set(f, gt)
    subset = intersect(compressed, complement(le_gt)).is_empty()
    return BoundingEntry(f, le_g, compressed, le_gt, subset, almost_subset(compressed, le_gt))


def bounding_reduction(Y: Sequence[QAFun], g: QAFun, h: QAFun) -> BoundingReport:
    require_increasing(h, "compressor h")
    if not g.is_nondecreasing():
        raise NotIncreasing(f"bound g must be nondecreasing: {g}")
    for f in Y:
        if not f.is_nondecreasing():
            raise NotIncreasing(f"family member must be nondecreasing: {f}")
        if le_set(f, g).is_finite():
            raise WitnessInvalid(f"[f <= g] is finite for f = {f}", culprit=f)
    gt = gtilde(g, h)
    return BoundingReport(tuple(Y), g, h, gt, tuple(_bounding_entry(f, g, h, gt) for f in Y))


def maxfin_closure(Y: Sequence[QAFun]) -> list[QAFun]:
    """Pointwise maxima of all nonempty subfamilies."""
    if not Y:
        raise ValueError("maxfin_closure needs a nonempty family")
    out: list[QAFun] = []
    for f in Y:
        # ``out`` is closed under pairwise max, so a member adds nothing new
        if f in out:
            continue
        new = [f] + [pointwise_max([m, f]) for m in out]
        for m in new:
            if m not in out:
                out.append(m)
    return out


def escape_function(Y: Sequence[QAFun]) -> QAFun:
    """``max(Y) + 1``: strictly above every finite maximum of members."""
    return pointwise_max(Y).add_const(1)


def filter_subbase_from_bound(Y: Sequence[QAFun], g: QAFun) -> FamilySpec:
    """The family ``{[f < g] : f in Y}`` for a ``g`` no finite maximum dominates."""
    for m in maxfin_closure(Y):
        if le_set(m, g, strict=True).is_finite():
            raise WitnessInvalid(f"[m < g] is finite for maxfin element m = {m}", culprit=m)
    return FamilySpec(tuple(le_set(f, g, strict=True) for f in Y), kind="filter-subbase")


def recursive_slalom_stream(Y: Sequence[QAFun], budget: int = DEFAULT_BUDGET) -> LazyFun:
    """``h(0) = 0``, ``h(n+1) = b(h(n)) + 1`` with ``b`` the pointwise max of ``Y``."""
    if not Y:
        raise ValueError("recursive_slalom_stream needs a nonempty family")
    for f in Y:
        require_increasing(f, "enumeration")
    b = pointwise_max(Y)

    def gen(_budget):
        x = 0
        while True:
            yield x
            x = b(x) + 1

    return LazyFun("recursive_slalom", ";".join(map(str, Y)), gen, budget)
