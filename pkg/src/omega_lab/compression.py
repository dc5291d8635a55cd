"""The compression operator ``a/h`` and everything built directly on it.

``a/h = {n : a meets [h(n), h(n+1))}`` for an increasing ``h``.  A slalom for
a family is an ``h`` that makes every compressed member cofinite.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from math import gcd
from typing import Sequence

from .epsets import EPSet, almost_subset, complement, require_infinite, tail_gap_bound
from .families import FamilySpec, is_filter_base
from .qafuns import QAFun, require_increasing


def compress_exact(a: EPSet, h: QAFun) -> EPSet:
    """``a/h`` without precondition checks; ``a`` may be finite, ``h`` must be increasing."""
    # window starts advance by h.incr every h.period steps; after t such
    # blocks they have moved by a multiple of a.period
    t = a.period // gcd(h.incr, a.period)
    start = h.start
    while h(start) < a.start:
        start += 1
    return EPSet.from_predicate(lambda n: a.meets(h(n), h(n + 1)), start, h.period * t)


def compress_set(a: EPSet, h: QAFun) -> EPSet:
    require_infinite(a)
    require_increasing(h, "compressor h")
    return compress_exact(a, h)


def compress_family(family: Sequence[EPSet], h: QAFun) -> list[EPSet]:
    out: list[EPSet] = []
    for a in family:
        c = compress_set(a, h)
        if c not in out:
            out.append(c)
    return out


def is_slalom(h: QAFun, family: Sequence[EPSet]) -> bool:
    return all(compress_set(a, h).is_cofinite() for a in family)


def build_slalom(family: Sequence[EPSet]) -> QAFun:
    """A linear slalom ``h(n) = G*n`` with ``G`` the largest tail gap in the family."""
    if not family:
        raise ValueError("build_slalom needs a nonempty family")
    gap = max(tail_gap_bound(require_infinite(a)) for a in family)
    return QAFun.linear(max(gap, 1))


def frechet_after(family: Sequence[EPSet], h: QAFun) -> bool:
    """Whether the family compressed by ``h`` generates the Frechet filter."""
    return is_slalom(h, family)


class Tag(str, enum.Enum):
    FRECHET = "Frechet"
    ULTRA_LIKE = "UltraLike"
    FULL_LIKE = "FullLike"
    UNCLASSIFIED = "Unclassified"


@dataclass(frozen=True)
class TrichotomyVerdict:
    """Outcome of :func:`classify_trichotomy`, relative to a finite test battery.

    ``certificate`` holds the slalom (Frechet), a map test -> covering
    generator (FullLike), or test -> (generator, side) with side ``"in"`` or
    ``"out"`` (UltraLike).  Indices refer to ``compressed`` and ``tests``.
    """

    tag: Tag
    compressed: tuple
    tests: tuple
    h: QAFun
    certificate: dict = field(default_factory=dict)

    def recheck(self) -> bool:
        gens, tests = self.compressed, self.tests
        if self.tag is Tag.FRECHET:
            return all(c.is_cofinite() for c in gens)
        if self.tag is Tag.FULL_LIKE:
            return len(self.certificate) == len(tests) and all(
                almost_subset(gens[gi], tests[ti]) for ti, gi in self.certificate.items()
            )
        if self.tag is Tag.ULTRA_LIKE:
            if not is_filter_base(FamilySpec(gens)):
                return False
            for ti, (gi, side) in self.certificate.items():
                target = tests[ti] if side == "in" else complement(tests[ti])
                if not almost_subset(gens[gi], target):
                    return False
            return len(self.certificate) == len(tests)
        return True

    def to_json(self) -> dict:
        return {
            "tag": self.tag.value,
            "h": str(self.h),
            "compressed": [str(c) for c in self.compressed],
            "certificate": {str(k): v if isinstance(v, int) else list(v)
                            for k, v in sorted(self.certificate.items())},
        }


def classify_trichotomy(family: Sequence[EPSet], h: QAFun, tests: Sequence[EPSet]) -> TrichotomyVerdict:
    """Battery-relative trichotomy verdict for the family compressed by ``h``.

    Checked in order: Frechet, then FullLike (every test almost-contains a
    compressed generator), then UltraLike (filter base deciding every test).
    The verdict only speaks about the given tests.
    """
    tests = tuple(require_infinite(c, "test set") for c in tests)
    compressed = tuple(compress_family(family, h))

    if all(c.is_cofinite() for c in compressed):
        return TrichotomyVerdict(Tag.FRECHET, compressed, tests, h)

    covering = {}
    for ti, c in enumerate(tests):
        for gi, g in enumerate(compressed):
            if almost_subset(g, c):
                covering[ti] = gi
                break
    if len(covering) == len(tests):
        return TrichotomyVerdict(Tag.FULL_LIKE, compressed, tests, h, covering)

    if is_filter_base(FamilySpec(compressed)):
        decisive = {}
        for ti, c in enumerate(tests):
            cc = complement(c)
            for gi, g in enumerate(compressed):
                if almost_subset(g, c):
                    decisive[ti] = (gi, "in")
                    break
                if almost_subset(g, cc):
                    decisive[ti] = (gi, "out")
                    break
        if len(decisive) == len(tests):
            return TrichotomyVerdict(Tag.ULTRA_LIKE, compressed, tests, h, decisive)

    return TrichotomyVerdict(Tag.UNCLASSIFIED, compressed, tests, h)
