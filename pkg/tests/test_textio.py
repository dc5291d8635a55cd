import json

import pytest
from hypothesis import given, strategies as st

from conftest import epsets, qafuns
from omega_lab import (
    CoverSequence,
    CoverTrace,
    EPSet,
    FamilySpec,
    QAFun,
    StrandFun,
    TestBattery,
    Truncation,
    parse,
    serialize,
)
from omega_lab.errors import ParseError
from omega_lab.textio import dumps, loads, parse_cover, parse_cover_sequence, parse_family_file, parse_qafun

EVENS = EPSet.multiples(2)


def test_documented_examples():
    assert serialize(EVENS) == "ep(prefix=[],start=0,period=2,pattern=[0])"
    assert parse("ep(prefix=[],start=0,period=2,pattern=[0])") == EVENS
    f = parse("qa(table=[],period=1,incr=2,base=[0])")
    assert f == QAFun.linear(2) and f(7) == 14
    with pytest.raises(ParseError):
        parse("ep(prefix=[],start=0,period=0,pattern=[])")


def test_noncanonical_input_canonicalizes():
    assert parse("ep(prefix=[0],start=1,period=2,pattern=[1])") == EVENS
    assert parse("ep(period=4, pattern={0, 2})") == EVENS
    assert serialize(parse("qa(table=[0,2],period=2,incr=4,base=[4,6])")) == "qa(table=[],period=1,incr=2,base=[0])"


@pytest.mark.parametrize("text, pos", [
    ("ep(prefix=[],start=0,period=2,pattern=[0]", 41),
    ("ep(prefix=[],start=0,perod=2,pattern=[0])", 21),
    ("ep(prefix=[],start=x,period=2,pattern=[0])", 19),
    ("qb(x=1)", 0),
    ("ep(period=2,pattern=[0]) junk", 25),
    ("ep(period=2,pattern=[5])", 0),
    ("ep(prefix=[3],start=2,period=1,pattern=[0])", 0),
    ("qa(period=2,base=[0])", 0),
    ('trunc(name="a,depth=3,elems=[])', 31),
])
def test_errors_carry_positions(text, pos):
    with pytest.raises(ParseError) as info:
        parse(text)
    assert info.value.pos == pos
    assert f"at position {pos}" in str(info.value)


def test_strands_and_trunc():
    g = StrandFun((QAFun.identity(), QAFun.linear(2)))
    text = serialize(g)
    assert text == "strands[qa(table=[],period=1,incr=1,base=[0]);qa(table=[],period=1,incr=2,base=[0])]"
    assert parse(text) == g
    t = Truncation("greedy_I", 'ep(...);"quoted"\\', 10, (0, 4, 8))
    assert parse(serialize(t)) == t
    with pytest.raises(ParseError):
        parse("strands[ep(period=1,pattern=[0])]")


def test_family_file():
    text = """# a comment
[kind]
filter-base
[generators]
ep(prefix=[],start=0,period=2,pattern=[0])
ep(prefix=[],start=0,period=6,pattern=[0])
[tests]
ep(prefix=[],start=0,period=3,pattern=[0])
[functions]
qa(table=[],period=1,incr=2,base=[0])
"""
    ff = parse_family_file(text)
    assert ff.family == FamilySpec((EVENS, EPSet.multiples(6)), "filter-base")
    assert ff.tests == TestBattery((EPSet.multiples(3),))
    assert ff.functions == [QAFun.linear(2)]
    with pytest.raises(ParseError) as info:
        parse_family_file("[generators]\nep(period=2,pattern=[0])\n[bogus]\n")
    assert info.value.pos == 38
    with pytest.raises(ParseError):
        parse_family_file("[generators]\nqa(period=1,base=[0])\n")
    with pytest.raises(ParseError):
        parse_family_file("ep(period=2,pattern=[0])\n")


def test_cover_files():
    c = parse_cover("[points]\nx: ep(period=2,pattern=[0])\ny: ep(period=2,pattern=[1])\n")
    assert c.points == ("x", "y") and c["y"] == EPSet.residues(2, {1})
    seq = parse_cover_sequence("[cover 0]\nx: ep(period=1,pattern=[0])\n[cover 1]\nx: ep(period=2,pattern=[0])\n")
    assert len(seq.covers) == 2 and seq.points == ("x",)
    assert parse_cover_sequence(str(c)) == CoverSequence.constant(c)
    with pytest.raises(ParseError):
        parse_cover_sequence("[cover 1]\nx: ep(period=1,pattern=[0])\n")
    with pytest.raises(ParseError):
        parse_cover("[points]\nx ep(period=1,pattern=[0])\n")
    with pytest.raises(ParseError):
        parse_cover("[points]\nx: ep(period=1,pattern=[0])\nx: ep(period=1,pattern=[0])\n")


def test_json_shape():
    obj = json.loads(dumps(EVENS))
    assert obj == {"type": "ep", "prefix": [], "start": 0, "period": 2, "pattern": [0]}
    assert json.loads(dumps(QAFun.linear(3, 1))) == {"type": "qa", "table": [], "period": 1, "incr": 3, "base": [1]}
    with pytest.raises(ParseError):
        loads('{"type": "zz"}')
    with pytest.raises(ParseError):
        loads("{not json")
    with pytest.raises(ParseError):
        loads('{"type": "ep", "period": 0, "pattern": []}')


def test_parse_qafun_type_check():
    with pytest.raises(ParseError):
        parse_qafun("ep(period=1,pattern=[0])")


@st.composite
def covers(draw):
    k = draw(st.integers(1, 3))
    return CoverTrace(tuple(f"pt{i}" for i in range(k)), tuple(draw(epsets()) for _ in range(k)))


values = st.one_of(
    epsets(),
    qafuns(),
    st.lists(qafuns(), min_size=1, max_size=3).map(lambda fs: StrandFun(tuple(fs))),
    st.tuples(st.lists(epsets(infinite=True), min_size=1, max_size=3),
              st.sampled_from([None, "semifilter-base", "filter-base", "filter-subbase"])).map(
        lambda t: FamilySpec(tuple(t[0]), t[1])),
    st.lists(epsets(infinite=True), max_size=3).map(lambda ts: TestBattery(tuple(ts))),
    covers(),
    st.integers(1, 3).flatmap(lambda L: st.lists(covers(), min_size=L, max_size=L)).map(
        lambda cs: CoverSequence(tuple(CoverTrace(cs[0].points, (c.traces * 3)[:len(cs[0].points)])
                                       for c in cs))),
    st.builds(Truncation, st.sampled_from(["a_f", "greedy_I"]), st.text(max_size=12),
              st.integers(0, 50), st.lists(st.integers(0, 49), unique=True, max_size=6).map(
                  lambda xs: tuple(sorted(xs)))),
)


@given(values)
def test_round_trips(v):
    text = serialize(v)
    assert parse(text) == v
    assert serialize(parse(text)) == text
    assert loads(dumps(v)) == v
    assert dumps(loads(dumps(v))) == dumps(v)
