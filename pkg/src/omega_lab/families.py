"""Finitely generated semifilters over eventually periodic sets.

Membership is always asked of the generated semifilter
``<S> = {b : some a in S has a <=* b}``, never of the raw generator list.
Properties that quantify over all infinite sets (reaping, ultrafilter base,
base for all infinite sets) only appear in a battery-relative form.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Optional, Sequence

from .epsets import EPSet, almost_subset, complement, intersect, require_infinite
from .errors import FiniteIntersection

KINDS = ("semifilter-base", "filter-base", "filter-subbase")


def _dedupe(sets):
    out = []
    for a in sets:
        if a not in out:
            out.append(a)
    return tuple(out)


@dataclass(frozen=True)
class FamilySpec:
    generators: tuple
    kind: Optional[str] = None

    def __post_init__(self):
        gens = _dedupe(self.generators)
        if not gens:
            raise ValueError("a family needs at least one generator")
        for a in gens:
            require_infinite(a, "generator")
        if self.kind is not None and self.kind not in KINDS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        object.__setattr__(self, "generators", gens)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)


@dataclass(frozen=True)
class TestBattery:
    tests: tuple = ()

    __test__ = False  # not a pytest class

    def __post_init__(self):
        tests = _dedupe(self.tests)
        for c in tests:
            require_infinite(c, "test set")
        object.__setattr__(self, "tests", tests)

    def __iter__(self):
        return iter(self.tests)

    def __len__(self):
        return len(self.tests)


def _as_family(S) -> FamilySpec:
    return S if isinstance(S, FamilySpec) else FamilySpec(tuple(S))


def _as_battery(T) -> TestBattery:
    return T if isinstance(T, TestBattery) else TestBattery(tuple(T))


def gen_membership(b: EPSet, S) -> bool:
    require_infinite(b)
    return any(almost_subset(a, b) for a in _as_family(S))


def psi_k(S, k: int) -> FamilySpec:
    """All intersections of at most ``k`` generators (repetition allowed)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    S = _as_family(S)
    gens = S.generators
    out = []
    for combo in combinations_with_replacement(range(len(gens)), k):
        acc = gens[combo[0]]
        for i in combo[1:]:
            acc = intersect(acc, gens[i])
        if acc.is_finite():
            raise FiniteIntersection(
                f"intersection of generators {sorted(set(combo))} is finite", sorted(set(combo))
            )
        if acc not in out:
            out.append(acc)
    return FamilySpec(tuple(out), S.kind)


def subbase_check(S) -> bool:
    """Every finite intersection of generators is infinite."""
    closure = set()
    frontier = set(_as_family(S).generators)
    gens = list(frontier)
    while frontier:
        closure |= frontier
        nxt = set()
        for a in frontier:
            for g in gens:
                c = intersect(a, g)
                if c.is_finite():
                    return False
                if c not in closure:
                    nxt.add(c)
        frontier = nxt
    return True


def is_filter_base(S) -> bool:
    gens = _as_family(S).generators
    for i, a in enumerate(gens):
        for b in gens[i:]:
            ab = intersect(a, b)
            if not any(almost_subset(c, ab) for c in gens):
                return False
    return True


def dual_membership(a: EPSet, S) -> bool:
    """Membership in ``S+ = {a : complement(a) not in <S>}``."""
    require_infinite(a)
    ca = complement(a)
    return ca.is_finite() or not gen_membership(ca, S)


def splits(c: EPSet, y: EPSet) -> bool:
    return intersect(y, c).is_infinite() and intersect(y, complement(c)).is_infinite()


def split_witness_check(Y: Sequence[EPSet], c: EPSet) -> bool:
    """``c`` splits every member of ``Y``."""
    require_infinite(c)
    return all(splits(c, require_infinite(y)) for y in Y)


def reaping_relative(Y: Sequence[EPSet], tests) -> bool:
    for y in Y:
        require_infinite(y)
    return not any(split_witness_check(Y, c) for c in _as_battery(tests))


def ultra_relative(S, tests) -> bool:
    S = _as_family(S)
    if not is_filter_base(S):
        return False
    for c in _as_battery(tests):
        cc = complement(c)
        if not any(almost_subset(a, c) or almost_subset(a, cc) for a in S):
            return False
    return True


def base_for_roth_relative(S, tests) -> bool:
    S = _as_family(S)
    return all(any(almost_subset(a, c) for a in S) for c in _as_battery(tests))


def equivalent_bases(S, T) -> bool:
    """Whether two families generate the same semifilter."""
    S, T = _as_family(S), _as_family(T)
    return all(gen_membership(a, T) for a in S) and all(gen_membership(b, S) for b in T)
