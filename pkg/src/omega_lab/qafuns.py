"""Eventually periodic-increment functions ``N -> N``.

A :class:`QAFun` is given by a finite table of initial values and, from
``start = len(table)`` on, a block of ``period`` base values that repeats
with a constant jump::

    f(n) = base[(n - start) % period] + incr * ((n - start) // period)

This is the decidable fragment of Baire space the rest of the library works
in: composition, finite pointwise maxima and comparison sets all stay inside
it, and eventual domination reduces to a slope comparison plus a finite scan.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Callable, Iterable, Sequence

from .epsets import EPSet, _divisors, intersect
from .errors import NotIncreasing


def _canonical(table, period, incr, base):
    m, q = period, incr
    for d in _divisors(m):
        if (q * d) % m:
            continue
        qd = q * d // m
        if all(base[i + d] == base[i] + qd for i in range(m - d)):
            base, m, q = base[:d], d, qd
            break
    while table and table[-1] + q == base[-1]:
        base = (table[-1],) + base[:-1]
        table = table[:-1]
    return table, m, q, base


@dataclass(frozen=True)
class QAFun:
    table: tuple = ()
    period: int = 1
    incr: int = 0
    base: tuple = (0,)

    def __post_init__(self):
        table = tuple(int(v) for v in self.table)
        base = tuple(int(v) for v in self.base)
        period, incr = int(self.period), int(self.incr)
        if period < 1:
            raise ValueError(f"period must be >= 1, got {period}")
        if incr < 0:
            raise ValueError(f"incr must be >= 0, got {incr}")
        if len(base) != period:
            raise ValueError(f"base must have exactly {period} values, got {len(base)}")
        if any(v < 0 for v in table + base):
            raise ValueError("values must be natural numbers")
        table, period, incr, base = _canonical(table, period, incr, base)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "period", period)
        object.__setattr__(self, "incr", incr)
        object.__setattr__(self, "base", base)

    @property
    def start(self) -> int:
        return len(self.table)

    # -- constructors -------------------------------------------------------

    @classmethod
    def linear(cls, slope: int, offset: int = 0) -> QAFun:
        """``n -> slope*n + offset``."""
        return cls(period=1, incr=slope, base=(offset,))

    @classmethod
    def constant(cls, c: int) -> QAFun:
        return cls.linear(0, c)

    @classmethod
    def identity(cls) -> QAFun:
        return cls.linear(1, 0)

    @classmethod
    def tabulate(cls, fn: Callable[[int], int], start: int, period: int, incr: int) -> QAFun:
        """Build from a function known to satisfy ``fn(n+period) = fn(n)+incr`` for ``n >= start``."""
        return cls(
            table=tuple(fn(n) for n in range(start)),
            period=period,
            incr=incr,
            base=tuple(fn(start + i) for i in range(period)),
        )

    # -- evaluation ---------------------------------------------------------

    def __call__(self, n: int) -> int:
        s = len(self.table)
        if n < s:
            return self.table[n]
        k, r = divmod(n - s, self.period)
        return self.base[r] + self.incr * k

    def eval(self, n: int) -> int:
        return self(n)

    def values(self, n: int) -> list[int]:
        return [self(i) for i in range(n)]

    @property
    def slope(self) -> Fraction:
        return Fraction(self.incr, self.period)

    def is_increasing(self) -> bool:
        """Strictly increasing everywhere."""
        if self.incr < 1:
            return False
        vals = self.values(self.start + self.period)
        if any(a >= b for a, b in zip(vals, vals[1:])):
            return False
        return self.base[-1] < self.base[0] + self.incr

    def is_nondecreasing(self) -> bool:
        vals = self.values(self.start + self.period)
        if any(a > b for a, b in zip(vals, vals[1:])):
            return False
        return self.base[-1] <= self.base[0] + self.incr

    def shift(self, k: int = 1) -> QAFun:
        """``n -> f(n + k)``."""
        s = max(self.start - k, 0)
        return QAFun.tabulate(lambda n: self(n + k), s, self.period, self.incr)

    def add_const(self, c: int) -> QAFun:
        return QAFun(
            table=tuple(v + c for v in self.table),
            period=self.period,
            incr=self.incr,
            base=tuple(v + c for v in self.base),
        )

    def aligned(self, period: int) -> tuple[int, int]:
        """Increment over ``period`` steps; ``period`` must be a multiple of ``self.period``."""
        assert period % self.period == 0
        return period, self.incr * (period // self.period)

    def __str__(self) -> str:
        table = ",".join(map(str, self.table))
        base = ",".join(map(str, self.base))
        return f"qa(table=[{table}],period={self.period},incr={self.incr},base=[{base}])"

    def to_json(self) -> dict:
        return {
            "type": "qa",
            "table": list(self.table),
            "period": self.period,
            "incr": self.incr,
            "base": list(self.base),
        }


def require_increasing(f: QAFun, what: str = "function") -> QAFun:
    if not f.is_increasing():
        raise NotIncreasing(f"{what} must be strictly increasing: {f}")
    return f


def _settle_point(f: QAFun, threshold: int) -> int:
    """Least ``S >= f.start`` (on a period boundary) with ``f(n) >= threshold`` for all ``n >= S``.

    Requires ``f.incr > 0``.
    """
    blocks = 0
    for b in f.base:
        if b < threshold:
            blocks = max(blocks, -(-(threshold - b) // f.incr))
    return f.start + f.period * blocks


def eval_at(f: QAFun, n: int) -> int:
    return f(n)


def compose(g: QAFun, f: QAFun) -> QAFun:
    """``n -> g(f(n))``."""
    if f.incr == 0:
        return QAFun.tabulate(lambda n: g(f(n)), f.start, f.period, 0)
    t = g.period // gcd(f.incr, g.period)
    period = f.period * t
    incr = g.incr * (f.incr * t // g.period)
    start = _settle_point(f, g.start)
    return QAFun.tabulate(lambda n: g(f(n)), start, period, incr)


def pointwise_max(fs: Iterable[QAFun]) -> QAFun:
    fs = list(fs)
    if not fs:
        raise ValueError("pointwise_max needs at least one function")
    if len(fs) == 1:
        return fs[0]
    L = lcm(*(f.period for f in fs))
    S = max(f.start for f in fs)
    jumps = [f.aligned(L)[1] for f in fs]
    top = max(jumps)
    lead = fs[jumps.index(top)]
    # number of L-blocks after which only top-slope functions can attain the max
    blocks = 0
    for f, q in zip(fs, jumps):
        if q == top:
            continue
        for r in range(L):
            excess = f(S + r) - lead(S + r)
            if excess > 0:
                blocks = max(blocks, -(-excess // (top - q)))
    return QAFun.tabulate(lambda n: max(f(n) for f in fs), S + L * blocks, L, top)


def le_set(f: QAFun, g: QAFun, strict: bool = False) -> EPSet:
    """``{n : f(n) <= g(n)}``, or ``<`` when ``strict``."""
    L = lcm(f.period, g.period)
    S = max(f.start, g.start)
    delta = g.aligned(L)[1] - f.aligned(L)[1]
    blocks = 0
    if delta:
        blocks = max(abs(g(S + r) - f(S + r)) // abs(delta) + 1 for r in range(L))
    if strict:
        pred = lambda n: f(n) < g(n)  # noqa: E731
    else:
        pred = lambda n: f(n) <= g(n)  # noqa: E731
    return EPSet.from_predicate(pred, S + L * blocks, L)


def eq_set(f: QAFun, g: QAFun) -> EPSet:
    return intersect(le_set(f, g), le_set(g, f))


def le_star(f: QAFun, g: QAFun) -> bool:
    """``f <=* g``: ``f(n) <= g(n)`` for all but finitely many ``n``."""
    return le_set(f, g).is_cofinite()


def preimage(a: EPSet, f: QAFun) -> EPSet:
    """``{n : f(n) in a}``."""
    if f.incr == 0:
        return EPSet.from_predicate(lambda n: f(n) in a, f.start, f.period)
    t = a.period // gcd(f.incr, a.period)
    start = _settle_point(f, a.start)
    return EPSet.from_predicate(lambda n: f(n) in a, start, f.period * t)


@dataclass(frozen=True)
class StrandFun:
    """Interleaves QAFuns by residue: ``g(n) = strands[n % k](n)``."""

    strands: tuple

    def __post_init__(self):
        strands = tuple(self.strands)
        if not strands:
            raise ValueError("StrandFun needs at least one strand")
        object.__setattr__(self, "strands", strands)

    def __call__(self, n: int) -> int:
        return self.strands[n % len(self.strands)](n)

    def __str__(self) -> str:
        return "strands[" + ";".join(map(str, self.strands)) + "]"

    def to_json(self) -> dict:
        return {"type": "strands", "strands": [s.to_json() for s in self.strands]}


def eq_infinitely_often(g: StrandFun, f: QAFun) -> bool:
    k = len(g.strands)
    for i, strand in enumerate(g.strands):
        hits = intersect(eq_set(strand, f), EPSet.residues(k, {i}))
        if hits.is_infinite():
            return True
    return False


def image_set(f: QAFun) -> EPSet:
    require_increasing(f)
    lo = f.base[0]
    return EPSet(prefix=set(f.table), start=lo, period=f.incr, pattern={b - lo for b in f.base})


def from_values(values: Sequence[int], period: int, incr: int) -> QAFun:
    """Convenience: the last ``period`` entries of ``values`` become the base block."""
    values = tuple(values)
    return QAFun(table=values[:-period], period=period, incr=incr, base=values[-period:])
