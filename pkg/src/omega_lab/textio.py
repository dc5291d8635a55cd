"""Text and JSON forms of every public value.

Single values::

    ep(prefix=[...],start=S,period=P,pattern=[...])
    qa(table=[...],period=M,incr=Q,base=[...])
    strands[qa(...);qa(...)]
    trunc(name="...",params="...",depth=D,elems=[...])

Files are line oriented with ``[section]`` headers; ``#`` starts a comment
line.  Family files hold ``[generators]`` (optionally preceded by ``[kind]``),
``[tests]`` and ``[functions]``; cover files hold ``[points]`` followed by
``label: <ep>`` lines, and cover sequences use ``[cover 0]``, ``[cover 1]``, ...
blocks.  Canonical values print and parse bit-exactly.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Any, Optional

from .covers import CoverSequence, CoverTrace
from .epsets import EPSet
from .errors import ParseError
from .families import FamilySpec, TestBattery
from .qafuns import QAFun, StrandFun
from .streams import Truncation

_FIELDS = {
    "ep": ({"prefix", "start", "period", "pattern"}, {"period", "pattern"}),
    "qa": ({"table", "period", "incr", "base"}, {"period", "base"}),
    "trunc": ({"name", "params", "depth", "elems"}, {"name", "depth", "elems"}),
}


class _Parser:
    def __init__(self, text: str, offset: int = 0, full: Optional[str] = None):
        self.text = text
        self.pos = 0
        self.offset = offset
        self.full = text if full is None else full

    def error(self, message: str, pos: Optional[int] = None):
        pos = self.pos if pos is None else pos
        return ParseError(message, self.full, self.offset + pos)

    def ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s: str) -> bool:
        self.ws()
        return self.text.startswith(s, self.pos)

    def expect(self, s: str):
        if not self.peek(s):
            found = self.text[self.pos:self.pos + 10] or "end of input"
            raise self.error(f"expected {s!r}, found {found!r}")
        self.pos += len(s)

    def ident(self) -> str:
        self.ws()
        m = re.compile(r"[A-Za-z_][A-Za-z0-9_\-]*").match(self.text, self.pos)
        if not m:
            raise self.error("expected a name")
        self.pos = m.end()
        return m.group()

    def nat(self) -> int:
        self.ws()
        m = re.compile(r"\d+").match(self.text, self.pos)
        if not m:
            raise self.error("expected a natural number")
        self.pos = m.end()
        return int(m.group())

    def string(self) -> str:
        self.ws()
        if not self.peek('"'):
            return self.ident()
        self.pos += 1
        out = []
        while self.pos < len(self.text):
            ch = self.text[self.pos]
            if ch == "\\" and self.pos + 1 < len(self.text):
                out.append(self.text[self.pos + 1])
                self.pos += 2
            elif ch == '"':
                self.pos += 1
                return "".join(out)
            else:
                out.append(ch)
                self.pos += 1
        raise self.error("unterminated string")

    def nat_list(self) -> list[int]:
        self.ws()
        close = {"[": "]", "{": "}"}.get(self.text[self.pos:self.pos + 1])
        if close is None:
            raise self.error("expected '[' or '{'")
        self.pos += 1
        out = []
        if self.peek(close):
            self.pos += 1
            return out
        while True:
            out.append(self.nat())
            if self.peek(","):
                self.pos += 1
                continue
            self.expect(close)
            return out

    def value(self):
        self.ws()
        at = self.pos
        head = self.ident()
        if head == "strands":
            self.expect("[")
            strands = [self.value()]
            while self.peek(";"):
                self.pos += 1
                strands.append(self.value())
            self.expect("]")
            if not all(isinstance(s, QAFun) for s in strands):
                raise self.error("strands must be qa(...) values", at)
            return StrandFun(tuple(strands))
        if head not in _FIELDS:
            raise self.error(f"unknown value kind {head!r}", at)
        allowed, required = _FIELDS[head]
        self.expect("(")
        args: dict[str, Any] = {}
        while not self.peek(")"):
            key_at = self.pos
            key = self.ident()
            if key not in allowed:
                raise self.error(f"unknown field {key!r} for {head}", key_at)
            if key in args:
                raise self.error(f"duplicate field {key!r}", key_at)
            self.expect("=")
            if key in ("prefix", "pattern", "table", "base", "elems"):
                args[key] = self.nat_list()
            elif key in ("name", "params"):
                args[key] = self.string()
            else:
                args[key] = self.nat()
            if not self.peek(")"):
                self.expect(",")
        self.expect(")")
        missing = required - set(args)
        if missing:
            raise self.error(f"{head} is missing {sorted(missing)}", at)
        try:
            return _build(head, args)
        except ValueError as exc:
            raise self.error(f"invalid {head}: {exc}", at) from None

    def done(self):
        self.ws()
        if self.pos != len(self.text):
            raise self.error("trailing input")


def _build(head: str, args: dict):
    if head == "ep":
        prefix = args.get("prefix", [])
        start = args.get("start", max(prefix, default=-1) + 1)
        if any(x >= start for x in prefix):
            raise ValueError("prefix elements must be below start")
        return EPSet(frozenset(prefix), start, args["period"], frozenset(args["pattern"]))
    if head == "qa":
        return QAFun(tuple(args.get("table", [])), args["period"], args.get("incr", 0), tuple(args["base"]))
    return Truncation(args["name"], args.get("params", ""), args["depth"], tuple(args["elems"]))


def parse_value(text: str, offset: int = 0, full: Optional[str] = None):
    p = _Parser(text, offset, full)
    v = p.value()
    p.done()
    return v


def parse_epset(text: str) -> EPSet:
    v = parse_value(text)
    if not isinstance(v, EPSet):
        raise ParseError("expected an ep(...) value", text, 0)
    return v


def parse_qafun(text: str) -> QAFun:
    v = parse_value(text)
    if not isinstance(v, QAFun):
        raise ParseError("expected a qa(...) value", text, 0)
    return v


# -- files --------------------------------------------------------------------

@dataclass
class Section:
    name: str
    arg: str
    offset: int
    lines: list = field(default_factory=list)  # (offset, text)


def _sections(text: str) -> list[Section]:
    sections: list[Section] = []
    offset = 0
    for raw in text.splitlines(keepends=True):
        line = raw.strip()
        lead = len(raw) - len(raw.lstrip())
        if line and not line.startswith("#"):
            m = re.fullmatch(r"\[\s*([A-Za-z]+)\s*(\S*)\s*\]", line)
            if m:
                sections.append(Section(m.group(1), m.group(2), offset))
            elif not sections:
                raise ParseError("content before the first [section] header", text, offset + lead)
            else:
                sections[-1].lines.append((offset + lead, line))
        offset += len(raw)
    return sections


@dataclass
class FamilyFile:
    family: Optional[FamilySpec] = None
    tests: Optional[TestBattery] = None
    functions: list = field(default_factory=list)


def parse_family_file(text: str) -> FamilyFile:
    out = FamilyFile()
    kind = None
    gens: list = []
    tests: list = []
    seen = set()
    for sec in _sections(text):
        if sec.name in seen:
            raise ParseError(f"duplicate section [{sec.name}]", text, sec.offset)
        seen.add(sec.name)
        if sec.name == "kind":
            if len(sec.lines) != 1:
                raise ParseError("[kind] takes exactly one line", text, sec.offset)
            kind = sec.lines[0][1]
            continue
        if sec.name not in ("generators", "tests", "functions"):
            raise ParseError(f"unknown section [{sec.name}]", text, sec.offset)
        for off, line in sec.lines:
            v = parse_value(line, off, text)
            want = QAFun if sec.name == "functions" else EPSet
            if not isinstance(v, want):
                raise ParseError(f"[{sec.name}] expects {want.__name__} lines", text, off)
            {"generators": gens, "tests": tests, "functions": out.functions}[sec.name].append(v)
    try:
        if "generators" in seen:
            out.family = FamilySpec(tuple(gens), kind)
        if "tests" in seen:
            out.tests = TestBattery(tuple(tests))
    except Exception as exc:
        raise ParseError(str(exc), text, 0) from None
    return out


def _cover_lines(sec: Section, text: str) -> CoverTrace:
    points, traces = [], []
    for off, line in sec.lines:
        label, sep, rest = line.partition(":")
        if not sep or not label.strip():
            raise ParseError("expected 'label: ep(...)'", text, off)
        v = parse_value(rest, off + len(label) + 1, text)
        if not isinstance(v, EPSet):
            raise ParseError("trace must be an ep(...) value", text, off)
        points.append(label.strip())
        traces.append(v)
    try:
        return CoverTrace(tuple(points), tuple(traces))
    except ValueError as exc:
        raise ParseError(str(exc), text, sec.offset) from None


def parse_cover_sequence(text: str) -> CoverSequence:
    """Parse ``[cover k]`` blocks; a plain ``[points]`` file is a constant sequence."""
    covers = []
    for i, sec in enumerate(_sections(text)):
        if sec.name == "points" and i == 0:
            covers.append(_cover_lines(sec, text))
            continue
        if sec.name != "cover" or sec.arg != str(len(covers)):
            raise ParseError(f"expected [cover {len(covers)}]", text, sec.offset)
        covers.append(_cover_lines(sec, text))
    if not covers:
        raise ParseError("no covers found", text, 0)
    try:
        return CoverSequence(tuple(covers))
    except ValueError as exc:
        raise ParseError(str(exc), text, 0) from None


def parse_cover(text: str) -> CoverTrace:
    secs = _sections(text)
    if len(secs) != 1 or secs[0].name != "points":
        raise ParseError("a cover file has exactly one [points] section", text, 0)
    return _cover_lines(secs[0], text)


# -- generic entry points -------------------------------------------------------

def serialize(value) -> str:
    if isinstance(value, FamilySpec):
        head = [f"[kind]\n{value.kind}"] if value.kind else []
        return "\n".join(head + ["[generators]"] + [str(a) for a in value.generators])
    if isinstance(value, TestBattery):
        return "\n".join(["[tests]"] + [str(c) for c in value.tests])
    return str(value)


def parse(text: str):
    """Inverse of :func:`serialize` for every public value type."""
    stripped = text.lstrip()
    if stripped.startswith("[points]"):
        return parse_cover(text)
    if stripped.startswith("[cover"):
        return parse_cover_sequence(text)
    if stripped.startswith("["):
        ff = parse_family_file(text)
        if ff.family is not None and ff.tests is None and not ff.functions:
            return ff.family
        if ff.tests is not None and ff.family is None and not ff.functions:
            return ff.tests
        raise ParseError("file holds more than one value; use parse_family_file", text, 0)
    return parse_value(text)


def to_json(value) -> Any:
    if isinstance(value, FamilySpec):
        return {"type": "family", "kind": value.kind,
                "generators": [a.to_json() for a in value.generators]}
    if isinstance(value, TestBattery):
        return {"type": "battery", "tests": [c.to_json() for c in value.tests]}
    return value.to_json()


def from_json(obj: Any):
    try:
        kind = obj["type"]
        if kind == "ep":
            return _build("ep", obj)
        if kind == "qa":
            return _build("qa", obj)
        if kind == "trunc":
            return _build("trunc", obj)
        if kind == "strands":
            return StrandFun(tuple(from_json(s) for s in obj["strands"]))
        if kind == "family":
            return FamilySpec(tuple(from_json(a) for a in obj["generators"]), obj.get("kind"))
        if kind == "battery":
            return TestBattery(tuple(from_json(c) for c in obj["tests"]))
        if kind == "cover":
            return CoverTrace(tuple(obj["points"]), tuple(from_json(t) for t in obj["traces"]))
        if kind == "cover_sequence":
            return CoverSequence(tuple(from_json(c) for c in obj["covers"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed JSON value: {exc}", json.dumps(obj), 0) from None
    raise ParseError(f"unknown JSON value type {kind!r}", json.dumps(obj), 0)


def dumps(value) -> str:
    return json.dumps(to_json(value), sort_keys=True)


def loads(text: str):
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, text, exc.pos) from None
    return from_json(obj)
