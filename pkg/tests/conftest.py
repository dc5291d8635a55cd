import os

from hypothesis import HealthCheck, settings, strategies as st

from omega_lab import EPSet, QAFun

settings.register_profile("default", max_examples=150, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("quick", max_examples=25, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def ep_fields(draw, infinite=None, max_start=8, max_period=6):
    start = draw(st.integers(0, max_start))
    period = draw(st.integers(1, max_period))
    pattern = draw(st.frozensets(st.integers(0, period - 1)))
    if infinite is True and not pattern:
        pattern = frozenset({0})
    if infinite is False:
        pattern = frozenset()
    prefix = draw(st.frozensets(st.integers(0, max(start - 1, 0)))) if start else frozenset()
    return prefix, start, period, pattern


def epsets(**kw):
    return ep_fields(**kw).map(lambda f: EPSet(*f))


@st.composite
def qa_fields(draw, kind="any", max_table=4, max_period=4, max_value=12, max_step=4):
    s = draw(st.integers(0, max_table))
    m = draw(st.integers(1, max_period))
    if kind == "any":
        table = tuple(draw(st.lists(st.integers(0, max_value), min_size=s, max_size=s)))
        base = tuple(draw(st.lists(st.integers(0, max_value), min_size=m, max_size=m)))
        return table, m, draw(st.integers(0, max_step * m)), base
    lo = 1 if kind == "increasing" else 0
    vals = [draw(st.integers(0, max_value))]
    for _ in range(s + m - 1):
        vals.append(vals[-1] + draw(st.integers(lo, max_step)))
    incr = vals[-1] - vals[s] + draw(st.integers(lo, max_step))
    return tuple(vals[:s]), m, incr, tuple(vals[s:])


def qafuns(kind="any", **kw):
    return qa_fields(kind, **kw).map(lambda f: QAFun(*f))
