"""Eventually periodic subsets of the natural numbers.

An :class:`EPSet` is a finite prefix below ``start`` followed by a tail that
repeats ``pattern`` with period ``period``::

    n in a  <=>  (n < start and n in prefix)
                 or (n >= start and (n - start) % period in pattern)

Instances are always stored in canonical form (minimal period, then minimal
start), so ``==`` is set equality.  Finite sets are ordinary values with an
empty pattern and period 1, which keeps the Boolean algebra total.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass, field
from itertools import count
from math import lcm
from typing import Callable, Iterable, Iterator

from .errors import FiniteSet


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def canonical_fields(prefix, start, period, pattern):
    """Return the canonical ``(prefix, start, period, pattern)`` of a raw description.

    Raw descriptions may carry prefix elements at or above ``start``; those are
    ignored, exactly as the membership formula ignores them.
    """
    if period < 1:
        raise ValueError(f"period must be >= 1, got {period}")
    if start < 0:
        raise ValueError(f"start must be >= 0, got {start}")
    prefix = {n for n in prefix if n < start}
    if any(n < 0 for n in prefix):
        raise ValueError("prefix elements must be natural numbers")
    pattern = set(pattern)
    if any(not 0 <= r < period for r in pattern):
        raise ValueError(f"pattern residues must lie in [0, {period})")

    if not pattern:
        start = max(prefix) + 1 if prefix else 0
        return frozenset(prefix), start, 1, frozenset()

    for d in _divisors(period):
        if all((((r + d) % period) in pattern) == (r in pattern) for r in range(period)):
            pattern = {r for r in pattern if r < d}
            period = d
            break

    # pull the tail backwards while the prefix agrees with it
    while start > 0 and ((start - 1) in prefix) == ((period - 1) in pattern):
        prefix.discard(start - 1)
        start -= 1
        pattern = {(r + 1) % period for r in pattern}
    return frozenset(prefix), start, period, frozenset(pattern)


@dataclass(frozen=True)
class EPSet:
    prefix: frozenset = frozenset()
    start: int = 0
    period: int = 1
    pattern: frozenset = frozenset()
    _sorted_prefix: tuple = field(default=(), init=False, repr=False, compare=False)
    _sorted_pattern: tuple = field(default=(), init=False, repr=False, compare=False)

    def __post_init__(self):
        prefix, start, period, pattern = canonical_fields(
            frozenset(self.prefix), int(self.start), int(self.period), frozenset(self.pattern)
        )
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "period", period)
        object.__setattr__(self, "pattern", pattern)
        object.__setattr__(self, "_sorted_prefix", tuple(sorted(prefix)))
        object.__setattr__(self, "_sorted_pattern", tuple(sorted(pattern)))

    # -- constructors -------------------------------------------------------

    @classmethod
    def naturals(cls) -> EPSet:
        return cls(start=0, period=1, pattern={0})

    @classmethod
    def empty(cls) -> EPSet:
        return cls()

    @classmethod
    def finite(cls, elements: Iterable[int]) -> EPSet:
        elements = set(elements)
        return cls(prefix=elements, start=max(elements, default=-1) + 1)

    @classmethod
    def residues(cls, period: int, residues: Iterable[int], start: int = 0) -> EPSet:
        """``{n >= start : (n - start) % period in residues}``."""
        return cls(start=start, period=period, pattern=set(residues))

    @classmethod
    def multiples(cls, k: int) -> EPSet:
        return cls(period=k, pattern={0})

    @classmethod
    def at_least(cls, n: int) -> EPSet:
        return cls(start=n, period=1, pattern={0})

    @classmethod
    def from_predicate(cls, pred: Callable[[int], bool], start: int, period: int) -> EPSet:
        """Tabulate a predicate known to be periodic with ``period`` from ``start`` on."""
        prefix = {n for n in range(start) if pred(n)}
        pattern = {r for r in range(period) if pred(start + r)}
        return cls(prefix=prefix, start=start, period=period, pattern=pattern)

    # -- queries ------------------------------------------------------------

    def __contains__(self, n: int) -> bool:
        if n < 0:
            return False
        if n < self.start:
            return n in self.prefix
        return (n - self.start) % self.period in self.pattern

    def member(self, n: int) -> bool:
        return n in self

    def is_infinite(self) -> bool:
        return bool(self.pattern)

    def is_finite(self) -> bool:
        return not self.pattern

    def is_cofinite(self) -> bool:
        return len(self.pattern) == self.period

    def is_empty(self) -> bool:
        return not self.pattern and not self.prefix

    def meets(self, lo: int, hi: int) -> bool:
        """Whether the half-open interval ``[lo, hi)`` contains an element."""
        lo = max(lo, 0)
        if hi <= lo:
            return False
        if lo < self.start:
            i = bisect_left(self._sorted_prefix, lo)
            if i < len(self._sorted_prefix) and self._sorted_prefix[i] < min(hi, self.start):
                return True
        if hi <= self.start or not self.pattern:
            return False
        lo = max(lo, self.start)
        if hi - lo >= self.period:
            return True
        r0 = (lo - self.start) % self.period
        return any((r0 + j) % self.period in self.pattern for j in range(hi - lo))

    def __iter__(self) -> Iterator[int]:
        yield from self._sorted_prefix
        if not self.pattern:
            return
        for block in count():
            base = self.start + block * self.period
            for r in self._sorted_pattern:
                yield base + r

    def elements_below(self, bound: int) -> list[int]:
        out = []
        for x in self:
            if x >= bound:
                break
            out.append(x)
        return out

    def first(self, k: int) -> list[int]:
        """The ``k`` smallest elements."""
        if self.is_finite() and k > len(self.prefix):
            raise FiniteSet(f"set has only {len(self.prefix)} elements, asked for {k}")
        out = []
        it = iter(self)
        for _ in range(k):
            out.append(next(it))
        return out

    def enumeration(self):
        return enumeration(self)

    def size(self) -> int:
        if self.pattern:
            raise FiniteSet("infinite set has no size")
        return len(self.prefix)

    # -- algebra ------------------------------------------------------------

    def __and__(self, other: EPSet) -> EPSet:
        return intersect(self, other)

    def __or__(self, other: EPSet) -> EPSet:
        return union(self, other)

    def __sub__(self, other: EPSet) -> EPSet:
        return difference(self, other)

    def __invert__(self) -> EPSet:
        return complement(self)

    def __str__(self) -> str:
        return (
            f"ep(prefix=[{','.join(map(str, self._sorted_prefix))}],start={self.start},"
            f"period={self.period},pattern=[{','.join(map(str, self._sorted_pattern))}])"
        )

    def to_json(self) -> dict:
        return {
            "type": "ep",
            "prefix": list(self._sorted_prefix),
            "start": self.start,
            "period": self.period,
            "pattern": list(self._sorted_pattern),
        }


def member(a: EPSet, n: int) -> bool:
    return n in a


def canonicalize(a: EPSet) -> EPSet:
    # construction already canonicalizes; this re-runs it on the raw fields
    return EPSet(a.prefix, a.start, a.period, a.pattern)


def _combine(a: EPSet, b: EPSet, op: Callable[[bool, bool], bool]) -> EPSet:
    return EPSet.from_predicate(
        lambda n: op(n in a, n in b), max(a.start, b.start), lcm(a.period, b.period)
    )


def intersect(a: EPSet, b: EPSet) -> EPSet:
    return _combine(a, b, lambda x, y: x and y)


def union(a: EPSet, b: EPSet) -> EPSet:
    return _combine(a, b, lambda x, y: x or y)


def difference(a: EPSet, b: EPSet) -> EPSet:
    return _combine(a, b, lambda x, y: x and not y)


def complement(a: EPSet) -> EPSet:
    return EPSet(
        prefix=set(range(a.start)) - a.prefix,
        start=a.start,
        period=a.period,
        pattern=set(range(a.period)) - a.pattern,
    )


def almost_subset(a: EPSet, b: EPSet) -> bool:
    """``a \\ b`` is finite."""
    return difference(a, b).is_finite()


def is_cofinite(a: EPSet) -> bool:
    return a.is_cofinite()


def require_infinite(a: EPSet, what: str = "set") -> EPSet:
    if a.is_finite():
        raise FiniteSet(f"{what} must be infinite: {a}")
    return a


def tail_gap_bound(a: EPSet) -> int:
    """Least window length that always meets ``a`` in its periodic tail."""
    require_infinite(a)
    rs = a._sorted_pattern
    gaps = [rs[i + 1] - rs[i] for i in range(len(rs) - 1)]
    gaps.append(rs[0] + a.period - rs[-1])
    return max(gaps)


def enumeration(a: EPSet):
    """Increasing enumeration of ``a`` as a QAFun (0-indexed)."""
    from .qafuns import QAFun

    require_infinite(a)
    return QAFun(
        table=a._sorted_prefix,
        period=len(a.pattern),
        incr=a.period,
        base=tuple(a.start + r for r in a._sorted_pattern),
    )

