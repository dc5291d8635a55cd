"""Named property suites with oracle cross-checks and counterexample shrinking.

A suite draws ``cases`` independent inputs (case ``i`` seeded by
``(seed, i)``), runs a check on each, and shrinks any failing input by
repeatedly trying simpler values that still fail the same way.
"""

from __future__ import annotations

import itertools
import json
import time
from collections import Counter
from dataclasses import dataclass, field
from functools import reduce
from math import lcm
from typing import Callable, Optional

from .. import textio
from ..compression import build_slalom, classify_trichotomy, compress_set, frechet_after, is_slalom, Tag
from ..constructions import (
    bounding_reduction,
    escape_function,
    filter_subbase_from_bound,
    first2n,
    ij_from_guesser,
    maxfin_closure,
    recursive_slalom_stream,
    rothberger_guesser,
    splitter_from_slalom,
)
from ..covers import (
    CoverSequence,
    CoverTrace,
    classify_cover,
    evaluate_selection,
    gamma_glueable,
    glue_cover,
    split_cover,
)
from ..epsets import (
    EPSet,
    _divisors,
    almost_subset,
    canonicalize,
    complement,
    difference,
    enumeration,
    intersect,
    tail_gap_bound,
    union,
)
from ..errors import NotGlueable, UnknownSuite, WitnessInvalid
from ..families import (
    equivalent_bases,
    gen_membership,
    is_filter_base,
    psi_k,
    reaping_relative,
    split_witness_check,
    subbase_check,
    ultra_relative,
)
from ..qafuns import QAFun, StrandFun, compose, image_set, le_set, le_star, pointwise_max
from . import gen
from .gen import GenParams, rng_for
from .oracles import (
    compression,
    decisive_window,
    eventually_le,
    max_gap,
    raw_eval,
    raw_member,
    tail_is_full,
)

FAR = 100_000


class PropertyFailure(AssertionError):
    pass


def need(cond, message: str) -> None:
    if not cond:
        raise PropertyFailure(message)


@dataclass(frozen=True)
class Suite:
    name: str
    generate: Callable
    check: Callable
    cases: int = 1000
    budget: float = 5.0
    description: str = ""


# -- checks ---------------------------------------------------------------------

def _reencode(raw):
    """Same set, deliberately non-canonical: tail unrolled once and period doubled."""
    prefix, start, period, pattern = raw
    prefix = set(prefix) | {start + r for r in pattern}
    pattern2 = set(pattern) | {r + period for r in pattern}
    return frozenset(prefix), start + period, 2 * period, frozenset(pattern2)


def _gen_epsets(rng, p):
    return (gen.raw_epset(rng, p, rng.random() < 0.8), gen.raw_epset(rng, p, rng.random() < 0.8))


def _check_epsets(ra, rb):
    a, b = EPSet(*ra), EPSet(*rb)
    ma = lambda n: raw_member(ra, n)  # noqa: E731
    mb = lambda n: raw_member(rb, n)  # noqa: E731
    D = decisive_window(ra, rb)
    L = lcm(ra[2], rb[2])
    points = list(range(D)) + list(range(FAR, FAR + L))
    ops = [
        ("intersect", intersect(a, b), lambda n: ma(n) and mb(n)),
        ("union", union(a, b), lambda n: ma(n) or mb(n)),
        ("difference", difference(a, b), lambda n: ma(n) and not mb(n)),
        ("complement", complement(a), lambda n: not ma(n)),
    ]
    for n in points:
        need((n in a) == ma(n), f"member({n}) disagrees with the raw formula")
        for name, got, want in ops:
            need((n in got) == want(n), f"{name} disagrees at {n}")
    tail = range(D, D + L)
    need(almost_subset(a, b) == (not any(ma(n) and not mb(n) for n in tail)), "almost_subset disagrees")
    need(a.is_cofinite() == all(ma(n) for n in tail), "is_cofinite disagrees")
    need(a.is_infinite() == any(ma(n) for n in tail), "is_infinite disagrees")
    need(canonicalize(a) == a and canonicalize(canonicalize(a)) == a, "canonicalize not idempotent")
    need(EPSet(*_reencode(ra)) == a, "re-encoded set has a different canonical form")
    need((a == b) == all(ma(n) == mb(n) for n in points), "structural equality differs from set equality")
    need(complement(union(a, b)) == intersect(complement(a), complement(b)), "De Morgan fails")
    need(complement(complement(a)) == a, "complement is not an involution")
    if a.is_infinite():
        need(tail_gap_bound(a) == max_gap(ma, D, L), "tail_gap_bound disagrees with scan")
        e = enumeration(a)
        need(e.is_increasing(), "enumeration not increasing")
        need(e.values(40) == [n for n in range(D + 40 * L) if ma(n)][:40], "enumeration lists wrong elements")
        need(image_set(e) == a, "image_set(enumeration(a)) != a")


def _gen_qafuns(rng, p):
    k = gen._int(rng, 1, 3)
    return (gen.raw_qafun(rng, p), gen.raw_qafun(rng, p), [gen.raw_qafun(rng, p) for _ in range(k)])


def _check_qafuns(rf, rg, rs):
    f, g = QAFun(*rf), QAFun(*rg)
    fs = [QAFun(*r) for r in rs]
    L = lcm(rf[1], rg[1], *(r[1] for r in rs))
    W = 4 * (max(len(r[0]) for r in [rf, rg, *rs]) + L) + 64
    points = list(range(W)) + list(range(FAR, FAR + 2 * L))
    c = compose(g, f)
    m = pointwise_max(fs)
    le, lt = le_set(f, g), le_set(f, g, strict=True)
    for n in points:
        fn, gn = raw_eval(rf, n), raw_eval(rg, n)
        need(f(n) == fn, f"eval disagrees at {n}")
        need(c(n) == raw_eval(rg, fn), f"compose disagrees at {n}")
        need(m(n) == max(raw_eval(r, n) for r in rs), f"pointwise_max disagrees at {n}")
        need((n in le) == (fn <= gn), f"le_set disagrees at {n}")
        need((n in lt) == (fn < gn), f"strict le_set disagrees at {n}")
    need(le_star(f, g) == eventually_le(f, g, rf, rg), "le_star disagrees with slope oracle")
    need(f.shift(3)(7) == raw_eval(rf, 10), "shift is off")
    doubled = QAFun(tuple(f.values(f.start + 2)), 2 * f.period, 2 * f.incr,
                    tuple(f(n) for n in range(f.start + 2, f.start + 2 + 2 * f.period)))
    need(doubled == f, "re-encoded function has a different canonical form")


def _gen_compress(rng, p):
    return (gen.raw_epset(rng, p), gen.raw_qafun(rng, p, "increasing"),
            gen.raw_qafun(rng, p, "increasing"), gen.raw_epset(rng, p))


def _check_compress(ra, rh, rk, rb):
    a, h, k, extra = EPSet(*ra), QAFun(*rh), QAFun(*rk), EPSet(*rb)
    ma = lambda n: raw_member(ra, n)  # noqa: E731
    hn = lambda n: raw_eval(rh, n)  # noqa: E731
    c = compress_set(a, h)
    P = ra[2] * rh[1]
    for n in itertools.chain(range(512), range(FAR, FAR + P)):
        need((n in c) == compression(ma, hn, n), f"compress_set disagrees at {n}")
    need(c.is_cofinite() == tail_is_full(lambda n: compression(ma, hn, n), FAR, P), "cofiniteness of a/h")
    bigger = union(a, extra)
    need(almost_subset(c, compress_set(bigger, h)), "compression is not monotone")
    need(compress_set(c, k) == compress_set(a, compose(h, k)), "(a/h)/k != a/(h o k)")


def _gen_family_and_h(rng, p):
    return gen.random_family(rng, p), gen.random_qafun(rng, p, "increasing")


def _check_slalom(S, h):
    need(frechet_after(S, build_slalom(S)), "constructed slalom does not make S Frechet")
    brute = True
    for a in S:
        P = lcm(a.period, h.period * a.period)
        lo = max(a.start, h.start) + FAR
        brute &= tail_is_full(lambda n: compression(a.__contains__, h, n), lo, P)
    need(is_slalom(h, S) == brute, "is_slalom disagrees with brute-force windows")
    enums = [enumeration(a) for a in S]
    values = recursive_slalom_stream(enums).take(65)
    need(all(x < y for x, y in zip(values, values[1:])), "recursive slalom not increasing")
    for a in S:
        need(all(a.meets(values[n], values[n + 1]) for n in range(64)), "recursive slalom misses a window")


def _check_split1(S, _h):
    h = build_slalom(S)
    a = splitter_from_slalom(h)
    need(split_witness_check(S, a), f"splitter {a} fails to split the family")
    cover = CoverTrace(tuple(f"x{i}" for i in range(len(S))), tuple(S))
    need(split_cover(cover, a), "splitter fails on the cover view")


def _gen_rothsplit(rng, p):
    return (gen.random_family(rng, p, gen._int(rng, 1, 4)), p.depth)


def _check_rothsplit(Y, depth):
    g = rothberger_guesser(Y)
    k = len(Y)
    for n in range(1, 30):
        need(g.matches(n % k, n), f"guesser misses its own strand at n={n}")
    I, J = ij_from_guesser(g)
    tI, tJ = I.truncate(depth), J.truncate(depth)
    need(not set(tI) & set(tJ), "I and J intersect")
    marks = [depth // 4, depth // 2, depth]
    for y in Y:
        for side, t in (("I", tI), ("J", tJ)):
            counts = [sum(1 for x in t if x < d and x in y) for d in marks]
            need(counts[0] < counts[1] < counts[2], f"|{side} & y| not growing: {counts} for {y}")


def _gen_split4(rng, p):
    Y = [gen.random_qafun(rng, p, "nondecreasing") for _ in range(gen._int(rng, 1, 3))]
    g = gen.random_qafun(rng, p, "increasing")
    if any(le_set(f, g).is_finite() for f in Y):
        g = pointwise_max([g, *Y])
    return Y, g, gen.random_qafun(rng, p, "increasing"), gen.random_qafun(rng, p, "nondecreasing")


def _check_split4(Y, g, h, noise):
    report = bounding_reduction(Y, g, h)
    need(report.verifies and report.verify(), "bounding reduction fails to verify")
    for e in report.entries:
        for n in range(200):
            if n in e.compressed:
                need(e.f(n) <= g(h(n + 1)), f"f({n}) > g(h({n}+1))")
    bad = pointwise_max([g.add_const(1), noise])
    try:
        bounding_reduction([*Y, bad], g, h)
    except WitnessInvalid as exc:
        need(exc.culprit == bad, "WitnessInvalid names the wrong function")
    else:
        raise PropertyFailure("violating bound was accepted")
    return "valid+invalid"


def _gen_maxfin(rng, p):
    Y = [gen.random_qafun(rng, p) for _ in range(gen._int(rng, 1, 4))]
    if rng.random() < 0.6:
        g = pointwise_max([escape_function(Y), gen.random_qafun(rng, p)])
    else:
        g = gen.random_qafun(rng, p, "increasing")
    cut = gen._int(rng, 0, len(Y))
    return Y, g, cut


def _far_block(fs):
    L = lcm(*(f.period for f in fs))
    far = FAR * L + max(f.start for f in fs)
    return range(far, far + L)


def _check_maxfin(Y, g, cut):
    prefix_closures = [maxfin_closure(Y[:i]) for i in range(1, len(Y) + 1)]
    closure = prefix_closures[-1]
    window = range(60)
    subsets = [s for r in range(1, len(Y) + 1) for s in itertools.combinations(Y, r)]
    maxima = {tuple(max(f(n) for f in s) for n in window) for s in subsets}
    need({tuple(m(n) for n in window) for m in closure} == maxima, "closure differs from subset maxima")
    e = escape_function(Y)
    for m in closure:
        need(le_set(e, m).is_empty(), f"escape function not above {m} everywhere")
        need(not le_star(e, m), f"escape function <=* {m}")
        need(all(e(n) > m(n) for n in window), "escape function fails the pointwise scan")
    need(set(maxfin_closure(closure)) == set(closure), "maxfin closure not idempotent")
    A = prefix_closures[max(cut, 1) - 1]
    B = maxfin_closure(Y[cut:] or Y[-1:])
    need(set(closure) >= set(A) | set(B), "maxfin(A u B) misses a member of maxfin(A) u maxfin(B)")
    need(set(closure) == set().union(*prefix_closures), "directed union identity fails")
    pre = all(any(m(n) < g(n) for n in _far_block([m, g])) for m in closure)
    try:
        fam = filter_subbase_from_bound(Y, g)
    except WitnessInvalid:
        need(not pre, "WitnessInvalid although every [m<g] is infinite")
        return "subbase-pre-failed"
    need(pre, "subbase built although some [m<g] is finite")
    need(subbase_check(fam), "[f<g] family is not a filter subbase")
    return "subbase-pre-held"


def _gen_glue(rng, p):
    return gen.random_cover(rng, p), gen.random_qafun(rng, p, "increasing")


def _check_glue(c, h):
    glued = glue_cover(c, h)
    for (x, t), g in zip(c.items(), glued.traces):
        need(g == compress_set(t, h), f"glued trace of {x} differs from compression")
        need(all((n in g) == compression(t.__contains__, h, n) for n in range(256)),
             f"glued trace of {x} differs from brute-force windows")
    need("large" in classify_cover(glued), "gluing a large cover lost largeness")
    part = gamma_glueable(c)
    need(part.mode == "Case2" and part.verify(c), "constructed partition fails to verify")
    try:
        forced = gamma_glueable(c, force_h=h)
    except NotGlueable:
        far = range(FAR, FAR + lcm(*(t.period for t in c.traces)) * h.period)
        need(not any(all(compression(t.__contains__, h, n) for t in c.traces) for n in far),
             "NotGlueable although infinitely many windows cover")
        return "forced-finite"
    need(forced.verify(c), f"forced {forced.mode} partition fails to verify")
    if forced.mode == "Case1":
        for n in range(20):
            piece = forced.piece(n)
            need(all(any(k in t for k in piece) for t in c.traces), f"piece {n} does not cover")
    return f"forced-{forced.mode}"


def _gen_selection(rng, p):
    return (gen.random_cover(rng, p), gen.random_cover_sequence(rng, p),
            gen.random_qafun(rng, p), gen.random_qafun(rng, p, "increasing"))


def _check_selection(c, seq, pick, blocks):
    v = evaluate_selection(CoverSequence.constant(c), build_slalom(c.traces), "Ufin")
    need("gamma" in v.tags and v.success, "Ufin with the slalom is not a gamma selection")
    L = len(seq.covers)
    s1 = evaluate_selection(seq, pick, "S1")
    uf = evaluate_selection(seq, blocks, "Ufin")
    for i in range(len(seq.points)):
        for k in range(200):
            cover = seq.covers[k % L]
            need((k in s1.hits[i]) == (pick(k) in cover.traces[i]), f"S1 hit-set wrong at round {k}")
            hit = any(n in cover.traces[i] for n in range(blocks(k), blocks(k + 1)))
            need((k in uf.hits[i]) == hit, f"Ufin hit-set wrong at round {k}")
    need(s1.recheck() and uf.recheck(), "verdict tags not recomputable from hit-sets")
    need(evaluate_selection(seq.rotated(L), pick, "S1") == s1, "rotation by L changes the verdict")


def _gen_roundtrip(rng, p):
    return (
        gen.random_epset(rng, p, rng.random() < 0.8),
        gen.random_qafun(rng, p),
        gen.random_strandfun(rng, p),
        gen.random_familyspec(rng, p),
        gen.random_battery(rng, p),
        gen.random_cover(rng, p, infinite=rng.random() < 0.8),
        gen.random_cover_sequence(rng, p),
        gen.random_truncation(rng, p),
        gen.random_epset(rng, p),
        gen.random_qafun(rng, p, "increasing"),
    )


def _check_roundtrip(*values):
    for v in values[:8]:
        text = textio.serialize(v)
        back = textio.parse(text)
        need(back == v, f"text round trip changed {type(v).__name__}")
        need(textio.serialize(back) == text, f"text form of {type(v).__name__} not stable")
        need(textio.loads(textio.dumps(v)) == v, f"JSON round trip changed {type(v).__name__}")
    a, f = values[8], values[9]
    need(image_set(enumeration(a)) == a, "image_set . enumeration != id")
    need(enumeration(image_set(f)) == f, "enumeration . image_set != id")


def _gen_families(rng, p):
    return (gen.random_family(rng, p), gen.random_epset(rng, p), gen.random_epset(rng, p),
            list(gen.random_battery(rng, p)), gen.random_qafun(rng, p, "increasing"))


def _check_families(S, extra, b, tests, h):
    need(not gen_membership(b, S) or gen_membership(b, S + [extra]), "gen_membership not monotone")
    brute_subbase = all(reduce(intersect, s).is_infinite()
                        for r in range(1, len(S) + 1) for s in itertools.combinations(S, r))
    need(subbase_check(S) == brute_subbase, "subbase_check disagrees with all-subsets scan")
    if brute_subbase:
        need(equivalent_bases(psi_k(psi_k(S, 2), 2), psi_k(S, 4)), "psi_2 . psi_2 != psi_4")
    cb = complement(b)
    if is_filter_base(S) and cb.is_infinite():
        need(not (gen_membership(b, S) and gen_membership(cb, S)), "filter base holds a set and its complement")
    for c in tests:
        if split_witness_check(S, c):
            need(not reaping_relative(S, tests), "split by a test yet reaping")
    if ultra_relative(S, tests):
        need(reaping_relative(S, tests), "decisive base but not reaping")
    verdict = classify_trichotomy(S, h, tests)
    need(verdict.recheck(), f"{verdict.tag.value} certificate does not re-verify")
    if verdict.tag is not Tag.FRECHET:
        need(not frechet_after(S, h), "Frechet missed")
    return verdict.tag.value


SUITES = {
    s.name: s
    for s in [
        Suite("oracle-epsets", _gen_epsets, _check_epsets, 1000, 4.0, "EP set algebra vs brute force"),
        Suite("oracle-qafuns", _gen_qafuns, _check_qafuns, 1000, 4.0, "compose/max/le_set vs brute force"),
        Suite("oracle-compress", _gen_compress, _check_compress, 1000, 3.0, "a/h vs window scan"),
        Suite("slalom", _gen_family_and_h, _check_slalom, 1000, 5.0, "slalom construction and check"),
        Suite("split1", _gen_family_and_h, _check_split1, 1000, 5.0, "splitter from a slalom"),
        Suite("rothsplit", _gen_rothsplit, _check_rothsplit, 300, 20.0, "guesser and greedy I/J"),
        Suite("split4", _gen_split4, _check_split4, 1000, 5.0, "bound g(h(n+1)) from a compressor"),
        Suite("maxfin", _gen_maxfin, _check_maxfin, 1000, 5.0, "maxfin, escape, [f<g] subbase"),
        Suite("glue", _gen_glue, _check_glue, 500, 5.0, "trace/glue identity and glueable partitions"),
        Suite("selection", _gen_selection, _check_selection, 300, 5.0, "exact selection runner"),
        Suite("roundtrip", _gen_roundtrip, _check_roundtrip, 1000, 5.0, "serialization and enumeration"),
        Suite("families", _gen_families, _check_families, 1000, 5.0, "semifilter algebra invariants"),
    ]
}


# -- shrinking ------------------------------------------------------------------

def _shrinks(v):
    if isinstance(v, EPSet):
        if v.prefix:
            yield EPSet(frozenset(), v.start, v.period, v.pattern)
            for x in sorted(v.prefix):
                yield EPSet(v.prefix - {x}, v.start, v.period, v.pattern)
        if v.start:
            yield EPSet(v.prefix, 0, v.period, v.pattern)
            yield EPSet({x for x in v.prefix if x < v.start - 1}, v.start - 1, v.period, v.pattern)
        for d in _divisors(v.period)[:-1]:
            yield EPSet(v.prefix, v.start, d, {r % d for r in v.pattern})
        if len(v.pattern) > 1:
            for r in sorted(v.pattern):
                yield EPSet(v.prefix, v.start, v.period, v.pattern - {r})
    elif isinstance(v, QAFun):
        if v.table:
            yield QAFun((), v.period, v.incr, v.base)
            yield QAFun(v.table[:-1], v.period, v.incr, v.base)
        if v.period > 1:
            yield QAFun(v.table, 1, v.incr // v.period, v.base[:1])
        if v.incr:
            yield QAFun(v.table, v.period, v.incr // 2, v.base)
        for i, b in enumerate(v.base):
            if b:
                yield QAFun(v.table, v.period, v.incr, v.base[:i] + (b // 2,) + v.base[i + 1:])
    elif isinstance(v, CoverTrace):
        if len(v.points) > 1:
            for i in range(len(v.points)):
                yield CoverTrace(v.points[:i] + v.points[i + 1:], v.traces[:i] + v.traces[i + 1:])
        for i, t in enumerate(v.traces):
            for s in _shrinks(t):
                yield v.with_traces(v.traces[:i] + (s,) + v.traces[i + 1:])
    elif isinstance(v, CoverSequence):
        if len(v.covers) > 1:
            for i in range(len(v.covers)):
                yield CoverSequence(v.covers[:i] + v.covers[i + 1:])
    elif isinstance(v, (list, tuple)) and not isinstance(v, str):
        kind = type(v)
        if len(v) > 1:
            for i in range(len(v)):
                yield kind(v[:i]) + kind(v[i + 1:])
        for i, x in enumerate(v):
            for s in _shrinks(x):
                yield kind(v[:i]) + kind([s]) + kind(v[i + 1:])
    elif isinstance(v, int) and not isinstance(v, bool) and v > 0:
        yield 0
        yield v // 2


def _outcome(check, args):
    """``(failure kind or None, message, stat tag)``."""
    try:
        tag = check(*args)
    except PropertyFailure as exc:
        return PropertyFailure, str(exc), None
    except Exception as exc:  # crashes are failures too
        return type(exc), f"{type(exc).__name__}: {exc}", None
    return None, "", tag


def shrink(check, args, kind, max_steps: int = 500):
    args = tuple(args)
    for _ in range(max_steps):
        for pos, value in enumerate(args):
            found = False
            for cand in _shrinks(value):
                trial = args[:pos] + (cand,) + args[pos + 1:]
                try:
                    k = _outcome(check, trial)[0]
                except RecursionError:
                    continue
                if k is kind:
                    args, found = trial, True
                    break
            if found:
                break
        else:
            return args
    return args


# -- reports --------------------------------------------------------------------

def _fmt(v) -> str:
    if isinstance(v, CoverTrace):
        return "cover{" + ", ".join(f"{p}: {t}" for p, t in v.items()) + "}"
    if isinstance(v, CoverSequence):
        return "seq[" + "; ".join(_fmt(c) for c in v.covers) + "]"
    if isinstance(v, (EPSet, QAFun, StrandFun)):
        return str(v)
    if isinstance(v, (list, tuple)):
        return "[" + "; ".join(_fmt(x) for x in v) + "]"
    return repr(v)


@dataclass
class Failure:
    case: int
    message: str
    original: tuple
    shrunk: tuple

    def to_json(self) -> dict:
        return {"case": self.case, "message": self.message,
                "input": _fmt(self.original), "shrunk": _fmt(self.shrunk)}


@dataclass
class SuiteReport:
    suite: str
    seed: int
    cases: int
    failures: list = field(default_factory=list)
    stats: dict = field(default_factory=dict)
    elapsed: float = 0.0
    budget: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def within_budget(self) -> bool:
        return self.elapsed <= self.budget

    def render(self, fmt: str = "text", timing: bool = False) -> str:
        """Deterministic rendering; wall time only appears with ``timing=True``."""
        if fmt == "json":
            obj = {"suite": self.suite, "seed": self.seed, "cases": self.cases,
                   "result": "PASS" if self.passed else "FAIL",
                   "stats": dict(sorted(self.stats.items())),
                   "failures": [f.to_json() for f in self.failures]}
            if timing:
                obj["elapsed"] = round(self.elapsed, 3)
                obj["budget"] = self.budget
            return json.dumps(obj, sort_keys=True, indent=2)
        lines = [f"suite={self.suite} seed={self.seed} cases={self.cases} "
                 f"failures={len(self.failures)} result={'PASS' if self.passed else 'FAIL'}"]
        lines += [f"stat {k}={v}" for k, v in sorted(self.stats.items())]
        for f in self.failures:
            lines.append(f"FAIL case={f.case}: {f.message}")
            lines.append(f"  input:  {_fmt(f.original)}")
            lines.append(f"  shrunk: {_fmt(f.shrunk)}")
        if timing:
            lines.append(f"time={self.elapsed:.3f}s budget={self.budget:g}s")
        return "\n".join(lines)


def get_suite(name: str) -> Suite:
    try:
        return SUITES[name]
    except KeyError:
        raise UnknownSuite(f"unknown suite {name!r}; known: {', '.join(SUITES)}") from None


def run_suite(suite, params: Optional[GenParams] = None, cases: Optional[int] = None,
              max_failures: int = 5) -> SuiteReport:
    """Run a suite (by name or object).

    The case count is ``cases``, else ``params.cases``, else the suite default.
    """
    suite = get_suite(suite) if isinstance(suite, str) else suite
    params = params or GenParams()
    n = next(c for c in (cases, params.cases, suite.cases) if c is not None)
    report = SuiteReport(suite.name, params.seed, n, budget=suite.budget)
    stats: Counter = Counter()
    t0 = time.perf_counter()
    for i in range(n):
        args = suite.generate(rng_for(params.seed, i), params)
        kind, message, tag = _outcome(suite.check, args)
        if kind is None:
            if tag:
                stats[tag] += 1
            continue
        if len(report.failures) < max_failures:
            small = shrink(suite.check, args, kind)
            small_msg = _outcome(suite.check, small)[1]
            report.failures.append(Failure(i, small_msg or message, tuple(args), small))
        stats["failed"] += 1
    report.elapsed = time.perf_counter() - t0
    report.stats = dict(stats)
    return report


def replay(suite, args) -> bool:
    """True when ``args`` still fail the suite's property."""
    suite = get_suite(suite) if isinstance(suite, str) else suite
    return _outcome(suite.check, args)[0] is not None
