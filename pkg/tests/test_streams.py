import pytest
from hypothesis import given, settings

from brute import raw_eval
from conftest import qa_fields
from omega_lab import EPSet, LazySet, QAFun, Truncation, baire_to_roth, truncate
from omega_lab.errors import BudgetExceeded
from omega_lab.streams import from_epset


def test_baire_to_roth_examples():
    assert truncate(baire_to_roth(QAFun.constant(0)), 8) == list(range(8))
    assert truncate(baire_to_roth(QAFun.constant(1)), 10) == [1, 3, 5, 7, 9]
    assert baire_to_roth(QAFun.identity()).truncate(15) == [0, 2, 5, 9, 14]


def test_truncate_edges():
    assert truncate(baire_to_roth(QAFun.constant(1)), 0) == []
    assert truncate(from_epset(EPSet.multiples(2)), 5) == [0, 2, 4]
    assert truncate(from_epset(EPSet.finite({1, 3})), 100) == [1, 3]


def test_budget():
    with pytest.raises(BudgetExceeded):
        baire_to_roth(QAFun.constant(0), budget=5).truncate(100)
    assert baire_to_roth(QAFun.constant(0), budget=50).truncate(10) == list(range(10))


def test_non_increasing_stream_is_rejected():
    bad = LazySet("bad", "", lambda _b: iter([1, 1]))
    with pytest.raises(RuntimeError):
        bad.truncate(5)


def test_reproducible_snapshot():
    s = baire_to_roth(QAFun.linear(2, 1))
    a, b = s.snapshot(200), s.snapshot(200)
    assert a == b
    assert isinstance(a, Truncation) and a.depth == 200
    assert str(a).startswith('trunc(name="a_f",params="qa(table=[],period=1,incr=2,base=[1])"')


@settings(max_examples=20)
@given(qa_fields())
def test_partial_sums_strictly_increase(rf):
    f = QAFun(*rf)
    got = baire_to_roth(f).truncate(10**4)
    expected, total, n = [], 0, 0
    while True:
        total += raw_eval(rf, n)
        x = total + n
        if x >= 10**4:
            break
        expected.append(x)
        n += 1
    assert got == expected
    assert all(a < b for a, b in zip(got, got[1:]))
