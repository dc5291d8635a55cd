"""Seeded random values.

Every draw comes from numpy's PCG64 seeded with ``SeedSequence([seed, case,
stream])``, so case ``i`` of a run is reproducible on its own and cases can
be generated in any order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..covers import CoverSequence, CoverTrace
from ..epsets import EPSet
from ..families import FamilySpec, TestBattery
from ..qafuns import QAFun, StrandFun
from ..streams import Truncation


@dataclass(frozen=True)
class GenParams:
    seed: int = 0
    cases: int | None = None  # None: each suite uses its own default
    max_start: int = 8
    max_period: int = 6
    density: float = 0.5
    max_value: int = 12
    max_slope: int = 4
    family_size: int = 3
    battery_size: int = 3
    points: int = 3
    depth: int = 2000


def rng_for(seed: int, case: int, stream: int = 0) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, case, stream])))


def _int(rng, lo: int, hi: int) -> int:
    """Uniform integer in ``[lo, hi]``."""
    return int(rng.integers(lo, hi + 1))


def raw_epset(rng, p: GenParams, infinite: bool = True):
    """Unnormalized ``(prefix, start, period, pattern)`` fields."""
    start = _int(rng, 0, p.max_start)
    period = _int(rng, 1, p.max_period)
    pattern = {r for r in range(period) if rng.random() < p.density}
    if infinite and not pattern:
        pattern.add(_int(rng, 0, period - 1))
    prefix = {n for n in range(start) if rng.random() < 0.5}
    return frozenset(prefix), start, period, frozenset(pattern)


def random_epset(rng, p: GenParams, infinite: bool = True) -> EPSet:
    return EPSet(*raw_epset(rng, p, infinite))


def random_family(rng, p: GenParams, size: int | None = None) -> list[EPSet]:
    size = size or _int(rng, 1, p.family_size)
    return [random_epset(rng, p) for _ in range(size)]


def raw_qafun(rng, p: GenParams, kind: str = "any"):
    """Fields ``(table, period, incr, base)``; ``kind`` is any, increasing or nondecreasing."""
    s = _int(rng, 0, max(p.max_start // 2, 0))
    m = _int(rng, 1, max(p.max_period // 2, 1) + 1)
    if kind == "any":
        table = tuple(_int(rng, 0, p.max_value) for _ in range(s))
        base = tuple(_int(rng, 0, p.max_value) for _ in range(m))
        return table, m, _int(rng, 0, p.max_slope * m), base
    lo = 1 if kind == "increasing" else 0
    vals = [_int(rng, 0, p.max_value // 2)]
    for _ in range(s + m - 1):
        vals.append(vals[-1] + _int(rng, lo, p.max_slope))
    table, base = tuple(vals[:s]), tuple(vals[s:])
    incr = base[-1] - base[0] + _int(rng, lo, p.max_slope)
    return table, m, incr, base


def random_qafun(rng, p: GenParams, kind: str = "any") -> QAFun:
    return QAFun(*raw_qafun(rng, p, kind))


def random_strandfun(rng, p: GenParams) -> StrandFun:
    return StrandFun(tuple(random_qafun(rng, p) for _ in range(_int(rng, 1, 3))))


def random_battery(rng, p: GenParams) -> TestBattery:
    return TestBattery(tuple(random_epset(rng, p) for _ in range(_int(rng, 0, p.battery_size))))


def random_familyspec(rng, p: GenParams) -> FamilySpec:
    kind = [None, "semifilter-base", "filter-base", "filter-subbase"][_int(rng, 0, 3)]
    return FamilySpec(tuple(random_family(rng, p)), kind)


def random_cover(rng, p: GenParams, npoints: int | None = None, infinite: bool = True) -> CoverTrace:
    npoints = npoints or _int(rng, 1, p.points)
    traces = []
    for _ in range(npoints):
        t = random_epset(rng, p, infinite)
        if t.is_empty():
            t = EPSet.finite({_int(rng, 0, p.max_start)})
        traces.append(t)
    return CoverTrace(tuple(f"x{i}" for i in range(npoints)), tuple(traces))


def random_cover_sequence(rng, p: GenParams, length: int | None = None) -> CoverSequence:
    length = length or _int(rng, 1, 3)
    npoints = _int(rng, 1, p.points)
    return CoverSequence(tuple(random_cover(rng, p, npoints) for _ in range(length)))


def random_truncation(rng, p: GenParams) -> Truncation:
    depth = _int(rng, 0, 40)
    elems = tuple(sorted({_int(rng, 0, max(depth - 1, 0)) for _ in range(_int(rng, 0, 8))} if depth else ()))
    name = ["a_f", "greedy_I", "greedy_J"][_int(rng, 0, 2)]
    return Truncation(name, str(random_qafun(rng, p)), depth, elems)


# index-addressed wrappers: value i of a run is a pure function of (seed, i)

def gen_epset(p: GenParams, i: int) -> EPSet:
    return random_epset(rng_for(p.seed, i), p)


def gen_qafun(p: GenParams, i: int, kind: str = "any") -> QAFun:
    return random_qafun(rng_for(p.seed, i), p, kind)


def gen_family(p: GenParams, i: int) -> list[EPSet]:
    return random_family(rng_for(p.seed, i), p)


def gen_cover(p: GenParams, i: int) -> CoverTrace:
    return random_cover(rng_for(p.seed, i), p)


GENERATORS = {
    "epset": lambda p, i: gen_epset(p, i),
    "qafun": lambda p, i: gen_qafun(p, i),
    "increasing": lambda p, i: gen_qafun(p, i, "increasing"),
    "family": lambda p, i: FamilySpec(tuple(gen_family(p, i))),
    "cover": lambda p, i: gen_cover(p, i),
    "sequence": lambda p, i: random_cover_sequence(rng_for(p.seed, i), p),
}
