import json

import pytest

from omega_lab import EPSet, QAFun
from omega_lab.errors import UnknownSuite
from omega_lab.harness import suites as S
from omega_lab.harness.gen import GENERATORS, GenParams, gen_epset, gen_qafun, random_familyspec, rng_for
from omega_lab.harness.suites import PropertyFailure, Suite, need, replay, run_suite, shrink


def test_gen_is_deterministic():
    p = GenParams(seed=1)
    assert gen_epset(p, 0) == gen_epset(GenParams(seed=1), 0)
    assert [gen_epset(p, i) for i in range(20)] == [gen_epset(p, i) for i in range(20)]
    assert [gen_epset(p, i) for i in range(20)] != [gen_epset(GenParams(seed=2), i) for i in range(20)]


def test_density_one_gives_cofinite_sets():
    p = GenParams(seed=5, density=1.0)
    assert all(gen_epset(p, i).is_cofinite() for i in range(200))


def test_draws_satisfy_invariants():
    p = GenParams(seed=9)
    for i in range(1000):
        a = gen_epset(p, i)
        assert a.is_infinite() and EPSet(a.prefix, a.start, a.period, a.pattern) == a
        assert gen_qafun(p, i, "increasing").is_increasing()
        assert gen_qafun(p, i, "nondecreasing").is_nondecreasing()
    for i in range(100):
        fam = random_familyspec(rng_for(3, i), p)
        assert all(g.is_infinite() for g in fam.generators)
    for name, g in GENERATORS.items():
        assert g(p, 4) == g(p, 4), name


@pytest.mark.parametrize("name, seed", [("split1", 0), ("oracle-epsets", 0), ("split4", 42)])
def test_named_runs_pass(name, seed):
    r = run_suite(name, GenParams(seed=seed))
    assert r.passed and r.seed == seed and r.cases >= 1000
    assert "result=PASS" in r.render()


def test_unknown_suite():
    with pytest.raises(UnknownSuite):
        run_suite("nope")


def test_case_override_and_registry():
    assert run_suite("glue", GenParams(cases=7)).cases == 7
    assert run_suite("glue", cases=3).cases == 3
    assert set(S.SUITES) >= {"oracle-epsets", "oracle-qafuns", "oracle-compress", "slalom", "split1",
                             "rothsplit", "split4", "maxfin", "glue", "selection", "roundtrip"}


def _wide_period_suite():
    def gen(rng, p):
        return (EPSet({1, 3}, 5, 6, {0, 1, 4}), [QAFun((4, 9), 3, 7, (10, 11, 20))], 13)

    def check(a, fs, k):
        need(a.period < 3, f"period {a.period} too large")

    return Suite("toy", gen, check, cases=4)


def test_shrinking_keeps_failure_and_simplifies():
    suite = _wide_period_suite()
    r = run_suite(suite)
    assert not r.passed and r.stats["failed"] == 4 and len(r.failures) == 4
    f = r.failures[0]
    a, fs, k = f.shrunk
    assert a.period == 3 and a.prefix == frozenset() and a.start == 0 and len(a.pattern) == 1
    assert fs == [QAFun((), 1, 0, (0,))] and k == 0
    assert replay(suite, f.shrunk) and replay(suite, f.original)
    assert "shrunk:" in r.render()


def test_crash_is_a_failure_and_shrinks_by_kind():
    def check(a):
        if a.start > 1:
            raise KeyError("boom")

    suite = Suite("crash", lambda rng, p: (EPSet({0}, 6, 2, {1}),), check, cases=1)
    r = run_suite(suite)
    assert r.failures[0].message.startswith("KeyError")
    assert r.failures[0].shrunk[0].start == 2


def test_shrinker_ignores_candidates_failing_differently():
    def check(a):
        if a.period == 1:
            raise ValueError("other problem")
        need(a.is_infinite() and a.period > 1 and 0 in a, "zero in a")

    out = shrink(check, (EPSet.residues(4, {0, 2}),), PropertyFailure)
    assert out[0].period > 1


def test_reports_are_byte_identical():
    a = run_suite("selection", GenParams(seed=3), cases=40)
    b = run_suite("selection", GenParams(seed=3), cases=40)
    assert a.render() == b.render()
    assert a.render("json") == b.render("json")
    assert json.loads(a.render("json"))["result"] == "PASS"
    assert "time=" in a.render(timing=True)


@pytest.mark.parametrize("target, fake, suite", [
    ("compress_set", lambda a, h: a, "oracle-compress"),
    ("intersect", lambda a, b: a, "oracle-epsets"),
    ("pointwise_max", lambda fs: list(fs)[0], "oracle-qafuns"),
])
def test_oracles_catch_mutants(monkeypatch, target, fake, suite):
    monkeypatch.setattr(S, target, fake)
    r = run_suite(suite, cases=60)
    assert not r.passed
    assert all(replay(suite, f.shrunk) for f in r.failures)
