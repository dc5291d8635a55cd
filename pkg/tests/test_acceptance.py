"""The ten acceptance criteria, each at its stated scale and time limit.

Every criterion prints one ``PASS``/``FAIL`` line.  Wall time is measured
around the suite runs only.
"""

import time

import pytest

from omega_lab import CoverSequence, CoverTrace, EPSet, QAFun, evaluate_selection
from omega_lab.harness.gen import GenParams
from omega_lab.harness.suites import SUITES, run_suite

SEED = 0
_reports = {}


def _run(name, **kw):
    t0 = time.perf_counter()
    report = run_suite(name, GenParams(seed=SEED), **kw)
    elapsed = time.perf_counter() - t0
    _reports[name] = report
    return report, elapsed


def _verdict(capsys, number, title, ok, detail):
    with capsys.disabled():
        print(f"\nACCEPTANCE {number:>2} {'PASS' if ok else 'FAIL'}  {title}: {detail}")
    assert ok, detail


def test_01_oracle_agreement(capsys):
    total, details, ok = 0.0, [], True
    for name in ("oracle-epsets", "oracle-qafuns", "oracle-compress"):
        r, dt = _run(name)
        total += dt
        ok &= r.passed and r.cases >= 1000
        details.append(f"{name} {r.cases} cases {len(r.failures)} failures")
    ok &= total < 10
    _verdict(capsys, 1, "oracle agreement", ok, f"{'; '.join(details)}; {total:.2f}s < 10s")


def _simple(capsys, number, title, name, min_cases, limit, extra=lambda r: (True, "")):
    r, dt = _run(name)
    more_ok, more = extra(r)
    ok = r.passed and r.cases >= min_cases and dt < limit and more_ok
    failures = "" if r.passed else "\n" + r.render()
    _verdict(capsys, number, title, ok,
             f"{r.cases} cases, {len(r.failures)} failures{more}, {dt:.2f}s < {limit}s{failures}")


def test_02_slalom(capsys):
    _simple(capsys, 2, "slalom equivalence", "slalom", 1000, 5)


def test_03_splitter(capsys):
    _simple(capsys, 3, "splitter from slalom", "split1", 1000, 5)


def test_04_guesser_split(capsys):
    _simple(capsys, 4, "guesser I/J split at depth 2000", "rothsplit", 300, 20)


def test_05_bounding(capsys):
    def extra(r):
        n = r.stats.get("valid+invalid", 0)
        return n >= 1000, f", {n} valid instances verified and {n} violations rejected"

    _simple(capsys, 5, "bounding reduction", "split4", 1000, 5, extra)


def test_06_maxfin(capsys):
    def extra(r):
        held = r.stats.get("subbase-pre-held", 0)
        return held >= 500, f", subbase precondition held in {held}"

    _simple(capsys, 6, "maxfin, escape and [f<g] subbase", "maxfin", 500, 5, extra)


def test_07_glue(capsys):
    _simple(capsys, 7, "trace/glue identity and glueable partitions", "glue", 500, 5)


def test_08_selection(capsys):
    def extra(_r):
        lin = QAFun.linear
        evens, odds = EPSet.multiples(2), EPSet.residues(2, {1})
        ex1 = evaluate_selection(CoverSequence.constant(CoverTrace(("x",), (EPSet.naturals(),))),
                                 QAFun.identity(), "S1")
        ex2 = evaluate_selection(CoverSequence.constant(CoverTrace(("x", "y"), (evens, odds))), lin(2), "Ufin")
        ex3 = evaluate_selection(CoverSequence.constant(CoverTrace(("x",), (EPSet.multiples(4),))), lin(2), "S1")
        ok = (ex1.hits == (EPSet.naturals(),) and "gamma" in ex1.tags
              and ex2.hits == (EPSet.naturals(),) * 2 and "gamma" in ex2.tags
              and ex3.hits == (evens,) and "large" in ex3.tags and "gamma" not in ex3.tags)
        return ok, f", worked examples {'reproduced' if ok else 'DIFFER'}"

    _simple(capsys, 8, "selection runner", "selection", 300, 5, extra)


def test_09_round_trips(capsys):
    _simple(capsys, 9, "serialization and enumeration round trips", "roundtrip", 1000, 5)


def test_10_determinism(capsys):
    mismatched = []
    for name in SUITES:
        first = _reports.get(name) or run_suite(name, GenParams(seed=SEED))
        second = run_suite(name, GenParams(seed=SEED))
        for fmt in ("text", "json"):
            if first.render(fmt) != second.render(fmt):
                mismatched.append(f"{name}/{fmt}")
    ok = not mismatched
    _verdict(capsys, 10, "determinism", ok,
             f"{len(SUITES)} suites rerun with seed {SEED}: "
             + ("byte-identical text and JSON reports" if ok else f"differ: {mismatched}"))
