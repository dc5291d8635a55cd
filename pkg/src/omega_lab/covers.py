"""Covers of a finite point sample, encoded by their traces.

A countable cover ``U_0, U_1, ...`` restricted to sample points is recorded as
one trace per point, ``{n : x in U_n}``.  Every cover class and the gluing of
consecutive members then become statements about eventually periodic sets,
so all verdicts here are exact relative to the sample.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import reduce
from typing import Mapping, Optional, Sequence, Union

from .compression import build_slalom, compress_exact
from .epsets import EPSet, enumeration, intersect, require_infinite, union
from .errors import EmptyTrace, FiniteSet, NotGlueable, ScheduleMismatch
from .families import splits
from .qafuns import QAFun, compose, preimage, require_increasing

GAMMA = "gamma"
LARGE = "large"
OMEGA = "omega_rel"
FAILS = "fails"


@dataclass(frozen=True)
class CoverTrace:
    points: tuple
    traces: tuple

    def __post_init__(self):
        points = tuple(str(p) for p in self.points)
        traces = tuple(self.traces)
        if len(points) != len(traces):
            raise ValueError("one trace per point is required")
        if len(set(points)) != len(points):
            raise ValueError("point labels must be distinct")
        object.__setattr__(self, "points", points)
        object.__setattr__(self, "traces", traces)

    @classmethod
    def from_mapping(cls, mapping: Mapping[str, EPSet]) -> CoverTrace:
        return cls(tuple(mapping), tuple(mapping.values()))

    def __getitem__(self, point: str) -> EPSet:
        return self.traces[self.points.index(point)]

    def items(self):
        return zip(self.points, self.traces)

    def with_traces(self, traces) -> CoverTrace:
        return CoverTrace(self.points, tuple(traces))

    def __str__(self) -> str:
        return "\n".join(["[points]"] + [f"{p}: {t}" for p, t in self.items()])

    def to_json(self) -> dict:
        return {"type": "cover", "points": list(self.points),
                "traces": [t.to_json() for t in self.traces]}


@dataclass(frozen=True)
class CoverSequence:
    """Covers used cyclically: round ``k`` plays ``covers[k % len(covers)]``."""

    covers: tuple

    def __post_init__(self):
        covers = tuple(self.covers)
        if not covers:
            raise ValueError("a cover sequence needs at least one cover")
        if any(c.points != covers[0].points for c in covers):
            raise ValueError("all covers in a sequence must share the point list")
        object.__setattr__(self, "covers", covers)

    @classmethod
    def constant(cls, cover: CoverTrace) -> CoverSequence:
        return cls((cover,))

    @property
    def points(self) -> tuple:
        return self.covers[0].points

    def rotated(self, k: int) -> CoverSequence:
        k %= len(self.covers)
        return CoverSequence(self.covers[k:] + self.covers[:k])

    def __str__(self) -> str:
        blocks = []
        for i, c in enumerate(self.covers):
            blocks.append(f"[cover {i}]")
            blocks.extend(f"{p}: {t}" for p, t in c.items())
        return "\n".join(blocks)

    def to_json(self) -> dict:
        return {"type": "cover_sequence", "covers": [c.to_json() for c in self.covers]}


def _require_admissible(c: CoverTrace) -> None:
    for p, t in c.items():
        if t.is_empty():
            raise EmptyTrace(f"point {p!r} lies in no member of the cover")


def _tags(hits: Sequence[EPSet]) -> set:
    tags = set()
    if all(t.is_infinite() for t in hits):
        tags.add(LARGE)
    if all(t.is_cofinite() for t in hits):
        tags.add(GAMMA)
    # the intersection over all points is the smallest one over any subset
    if hits and reduce(intersect, hits).is_infinite():
        tags.add(OMEGA)
    return tags


def classify_cover(c: CoverTrace) -> frozenset:
    """Subset of ``{"gamma", "large", "omega_rel"}`` the cover belongs to, on the sample."""
    _require_admissible(c)
    return frozenset(_tags(c.traces))


def glue_cover(c: CoverTrace, h: QAFun) -> CoverTrace:
    """Merge the members indexed by each window ``[h(n), h(n+1))``."""
    _require_admissible(c)
    require_increasing(h, "gluing function h")
    return c.with_traces(compress_exact(t, h) for t in c.traces)


def split_cover(c: CoverTrace, s: EPSet) -> bool:
    """Whether the members indexed by ``s`` and by its complement are both large."""
    _require_admissible(c)
    require_infinite(s, "splitting set")
    return all(splits(s, t) for t in c.traces)


@dataclass(frozen=True)
class GluePartition:
    """A partition of the cover indices into finite consecutive pieces.

    Piece ``n`` is ``[b(n), b(n+1))`` for the boundary function ``b``
    (``selector`` in Case1, ``h`` in Case2), except that piece 0 always starts
    at 0.  In Case1 every piece covers the sample; in Case2 the unions of the
    pieces form a gamma-cover.
    """

    mode: str
    h: QAFun
    selector: Optional[QAFun]
    covering: EPSet

    @property
    def boundaries(self) -> QAFun:
        return self.selector if self.mode == "Case1" else self.h

    def piece(self, n: int) -> range:
        b = self.boundaries
        return range(0 if n == 0 else b(n), b(n + 1))

    def verify(self, c: CoverTrace) -> bool:
        b = self.boundaries
        if not b.is_increasing():
            return False
        if self.mode == "Case1":
            if self.selector(0) != 0:
                return False
            return all(compress_exact(t, b) == EPSet.naturals() for t in c.traces)
        glued = [compress_exact(t, b) for t in c.traces]
        return GAMMA in _tags(glued)

    def to_json(self) -> dict:
        return {"mode": self.mode, "h": str(self.h),
                "selector": None if self.selector is None else str(self.selector),
                "covering": str(self.covering)}


def gamma_glueable(c: CoverTrace, force_h: Optional[QAFun] = None) -> GluePartition:
    """Partition witnessing that a large cover is gamma-glueable.

    ``force_h`` replaces the slalom with a caller-chosen function; this is how
    Case1 is reached, since the constructed slalom always lands in Case2.
    """
    _require_admissible(c)
    for p, t in c.items():
        if t.is_finite():
            raise FiniteSet(f"cover is not large: point {p!r} has finite trace {t}")
    h = build_slalom(c.traces) if force_h is None else require_increasing(force_h, "forced h")
    covering = reduce(intersect, (compress_exact(t, h) for t in c.traces))
    if covering.is_cofinite():
        return GluePartition("Case2", h, None, covering)
    if covering.is_infinite():
        # g(0) = 0 and g(n) = h(a(n)) for n >= 1: piece n then contains the
        # covering window a(n) (piece 0 also absorbs everything before it)
        via = compose(h, enumeration(covering))
        selector = QAFun.tabulate(lambda n: via(n) if n else 0, max(via.start, 1), via.period, via.incr)
        return GluePartition("Case1", h, selector, covering)
    raise NotGlueable(f"only finitely many windows of {h} cover the sample")


class Mode(str, enum.Enum):
    S1 = "S1"
    SFIN = "Sfin"
    UFIN = "Ufin"


TARGETS = {Mode.S1: LARGE, Mode.SFIN: LARGE, Mode.UFIN: GAMMA}


@dataclass(frozen=True)
class PickSchedule:
    """``kind="pick"``: take member ``fn(k)`` in round ``k``.
    ``kind="blocks"``: take members ``[fn(k), fn(k+1))`` in round ``k``."""

    kind: str
    fn: QAFun


@dataclass(frozen=True)
class SelectionVerdict:
    mode: Mode
    points: tuple
    hits: tuple
    tags: frozenset
    target: str

    @property
    def success(self) -> bool:
        return self.target in self.tags

    def recheck(self) -> bool:
        tags = _tags(self.hits)
        if self.target not in tags:
            tags.add(FAILS)
        return frozenset(tags) == self.tags

    def to_json(self) -> dict:
        return {"mode": self.mode.value, "target": self.target, "tags": sorted(self.tags),
                "hits": {p: str(t) for p, t in zip(self.points, self.hits)}}


def evaluate_selection(seq: CoverSequence, schedule: Union[PickSchedule, QAFun],
                       mode: Union[Mode, str], target: Optional[str] = None) -> SelectionVerdict:
    """Exact per-point hit-sets of a periodic selection strategy."""
    mode = Mode(mode)
    if isinstance(schedule, QAFun):
        schedule = PickSchedule("pick" if mode is Mode.S1 else "blocks", schedule)
    expected = "pick" if mode is Mode.S1 else "blocks"
    if schedule.kind != expected:
        raise ScheduleMismatch(f"{mode.value} needs a {expected!r} schedule, got {schedule.kind!r}")
    for c in seq.covers:
        _require_admissible(c)
    fn = schedule.fn
    if expected == "blocks":
        require_increasing(fn, "block schedule")

    L = len(seq.covers)
    hits = []
    for i in range(len(seq.points)):
        parts = []
        for j, cover in enumerate(seq.covers):
            t = cover.traces[i]
            chosen = preimage(t, fn) if expected == "pick" else compress_exact(t, fn)
            parts.append(intersect(chosen, EPSet.residues(L, {j})))
        hits.append(reduce(union, parts))

    target = target or TARGETS[mode]
    tags = _tags(hits)
    if target not in tags:
        tags.add(FAILS)
    return SelectionVerdict(mode, seq.points, tuple(hits), frozenset(tags), target)
