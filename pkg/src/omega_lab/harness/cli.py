"""``omega-lab`` command line.

Exit codes: 0 when every check passes, 1 on a property failure, 2 on a usage
or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .. import textio
from ..compression import build_slalom, classify_trichotomy, compress_family, frechet_after
from ..constructions import (
    bounding_reduction,
    escape_function,
    filter_subbase_from_bound,
    ij_from_guesser,
    maxfin_closure,
    rothberger_guesser,
    splitter_from_slalom,
)
from ..covers import classify_cover, evaluate_selection, gamma_glueable, glue_cover, split_cover
from ..epsets import EPSet, almost_subset, complement, difference, enumeration, intersect, union
from ..errors import OmegaLabError
from ..families import (
    base_for_roth_relative,
    is_filter_base,
    reaping_relative,
    split_witness_check,
    subbase_check,
    ultra_relative,
)
from ..qafuns import QAFun, compose, image_set, le_set, le_star, pointwise_max
from .gen import GENERATORS, GenParams
from .suites import SUITES, get_suite, run_suite


class UsageError(Exception):
    pass


def _read(arg: str) -> str:
    """An argument is either inline text or ``@path`` / an existing file path."""
    if arg.startswith("@"):
        return Path(arg[1:]).read_text()
    p = Path(arg)
    if not arg.lstrip().startswith(("ep(", "qa(", "strands[", "trunc(")) and p.is_file():
        return p.read_text()
    return arg


def _value(arg: str, want=None):
    v = textio.parse(_read(arg))
    if want is not None and not isinstance(v, want):
        raise UsageError(f"expected a {want.__name__}, got {type(v).__name__}")
    return v


def _family_file(path: str):
    ff = textio.parse_family_file(_read(path))
    return ff


def _generators(path: str) -> list[EPSet]:
    ff = _family_file(path)
    if ff.family is None:
        raise UsageError(f"{path}: no [generators] section")
    return list(ff.family.generators)


def _functions(path: str) -> list[QAFun]:
    ff = _family_file(path)
    if not ff.functions:
        raise UsageError(f"{path}: no [functions] section")
    return ff.functions


def _plain(v):
    """JSON-friendly view of results."""
    if isinstance(v, dict):
        return {str(k): _plain(x) for k, x in v.items()}
    if isinstance(v, (list, tuple, set, frozenset)):
        items = sorted(v) if isinstance(v, (set, frozenset)) else v
        return [_plain(x) for x in items]
    if isinstance(v, (bool, int, float, str)) or v is None:
        return v
    return str(v)


def _text(obj, indent: str = "") -> list[str]:
    lines = []
    for k, v in obj.items():
        if isinstance(v, dict):
            lines.append(f"{indent}{k}:")
            lines.extend(_text(v, indent + "  "))
        elif isinstance(v, list) and v and isinstance(v[0], dict):
            lines.append(f"{indent}{k}:")
            for item in v:
                lines.extend(_text(item, indent + "  "))
                lines.append(f"{indent}  --")
        elif isinstance(v, list):
            lines.append(f"{indent}{k}: " + ", ".join(str(x) for x in v))
        else:
            lines.append(f"{indent}{k}: {v}")
    return lines


class Result:
    def __init__(self, data: dict, ok: bool = True):
        self.data = data
        self.ok = ok

    def render(self, fmt: str) -> str:
        data = {**self.data, "result": "PASS" if self.ok else "FAIL"}
        if fmt == "json":
            return json.dumps(_plain(data), indent=2, sort_keys=True)
        return "\n".join(_text(_plain(data)))


# -- subcommands ----------------------------------------------------------------

_SET_OPS = {"intersect": intersect, "union": union, "difference": difference}


def cmd_eval(a) -> Result:
    vals = [_value(v) for v in a.values]
    op = a.op
    x = vals[0]
    if op == "canon":
        data = {"value": x}
        if isinstance(x, EPSet):
            data.update(infinite=x.is_infinite(), cofinite=x.is_cofinite(),
                        first=x.first(a.n) if x.is_infinite() else sorted(x.prefix))
        elif isinstance(x, QAFun):
            data.update(values=x.values(a.n), slope=str(x.slope), increasing=x.is_increasing())
        return Result(data)
    if op in _SET_OPS:
        return Result({"value": _SET_OPS[op](*vals[:2])})
    if op == "complement":
        return Result({"value": complement(x)})
    if op == "almost-subset":
        return Result({"value": almost_subset(*vals[:2])})
    if op == "member":
        return Result({"value": a.n in x})
    if op == "compose":
        return Result({"value": compose(*vals[:2])})
    if op == "max":
        return Result({"value": pointwise_max(vals)})
    if op == "le":
        return Result({"set": le_set(*vals[:2], strict=a.strict), "eventually": le_star(*vals[:2])})
    if op == "enumerate":
        return Result({"value": enumeration(x)})
    if op == "image":
        return Result({"value": image_set(x)})
    raise UsageError(f"unknown op {op}")


def _h_or_slalom(a, family):
    return _value(a.h, QAFun) if a.h else build_slalom(family)


def cmd_compress(a) -> Result:
    ff = _family_file(a.family)
    if ff.family is None:
        raise UsageError("family file needs a [generators] section")
    fam = list(ff.family.generators)
    tests = ff.tests.tests if ff.tests else ()
    if a.tests:
        tests = tuple(_family_file(a.tests).tests or ())
    h = _h_or_slalom(a, fam)
    verdict = classify_trichotomy(fam, h, tests)
    return Result({"h": h, "compressed": compress_family(fam, h), "frechet": frechet_after(fam, h),
                   "verdict": verdict.tag.value, "certificate": verdict.to_json()}, verdict.recheck())


def cmd_classify(a) -> Result:
    ff = _family_file(a.family)
    if ff.family is None:
        raise UsageError("family file needs a [generators] section")
    fam = list(ff.family.generators)
    data = {"kind": ff.family.kind, "generators": fam, "subbase": subbase_check(fam),
            "filter_base": is_filter_base(fam)}
    ok = True
    if ff.family.kind in ("filter-base", "filter-subbase"):
        ok = data["subbase"] if ff.family.kind == "filter-subbase" else data["filter_base"]
    if ff.tests is not None:
        tests = ff.tests.tests
        data.update(reaping=reaping_relative(fam, tests), ultra=ultra_relative(fam, tests),
                    roth_base=base_for_roth_relative(fam, tests),
                    splitters=[c for c in tests if split_witness_check(fam, c)])
    return Result(data, ok)


def cmd_witness(a) -> Result:
    if a.construction == "split1":
        fam = _generators(a.family)
        h = _h_or_slalom(a, fam)
        s = splitter_from_slalom(h)
        return Result({"h": h, "splitter": s}, split_witness_check(fam, s))
    if a.construction == "rothsplit":
        fam = _generators(a.family)
        g = rothberger_guesser(fam)
        I, J = ij_from_guesser(g)
        tI, tJ = I.snapshot(a.depth), J.snapshot(a.depth)
        counts = {str(y): {"I": sum(1 for x in tI.elements if x in y),
                           "J": sum(1 for x in tJ.elements if x in y)} for y in fam}
        disjoint = not set(tI.elements) & set(tJ.elements)
        ok = disjoint and all(c["I"] > 0 and c["J"] > 0 for c in counts.values())
        return Result({"I": tI, "J": tJ, "disjoint": disjoint, "counts": counts}, ok)
    fns = _functions(a.family)
    if a.construction == "split4":
        if not (a.g and a.h):
            raise UsageError("split4 needs --g and --h")
        report = bounding_reduction(fns, _value(a.g, QAFun), _value(a.h, QAFun))
        return Result(report.to_json(), report.verifies and report.verify())
    if a.construction == "subbase":
        if not a.g:
            raise UsageError("subbase needs --g")
        fam = filter_subbase_from_bound(fns, _value(a.g, QAFun))
        return Result({"kind": fam.kind, "generators": list(fam.generators)}, subbase_check(fam))
    e = escape_function(fns)
    closure = maxfin_closure(fns)
    return Result({"escape": e, "maxfin": closure},
                  all(le_set(e, m).is_empty() for m in closure))


def cmd_cover(a) -> Result:
    text = _read(a.file)
    if a.action == "game":
        seq = textio.parse_cover_sequence(text)
        if not a.schedule:
            raise UsageError("cover game needs --schedule")
        v = evaluate_selection(seq, _value(a.schedule, QAFun), a.mode)
        return Result(v.to_json(), v.success)
    c = textio.parse_cover(text)
    if a.action == "classify":
        return Result({"tags": classify_cover(c)})
    if a.action == "glue":
        if not a.h:
            raise UsageError("cover glue needs --h")
        glued = glue_cover(c, _value(a.h, QAFun))
        return Result({"cover": dict(glued.items()), "tags": classify_cover(glued)})
    if a.action == "split":
        if not a.set:
            raise UsageError("cover split needs --set")
        return Result({"split": split_cover(c, _value(a.set, EPSet))})
    force = _value(a.force_h, QAFun) if a.force_h else None
    p = gamma_glueable(c, force_h=force)
    return Result(p.to_json(), p.verify(c))


def cmd_suite(a, params: GenParams) -> tuple[str, bool]:
    names = list(SUITES) if a.name == "all" else [get_suite(a.name).name]
    reports = [run_suite(n, params) for n in names]
    ok = all(r.passed for r in reports)
    if a.format == "json":
        body = "[" + ",\n".join(r.render("json", a.timing) for r in reports) + "]"
    else:
        body = "\n".join(r.render("text", a.timing) for r in reports)
    return body, ok


def cmd_gen(a, params: GenParams) -> str:
    if a.kind not in GENERATORS:
        raise UsageError(f"unknown generator {a.kind!r}; known: {', '.join(GENERATORS)}")
    values = [GENERATORS[a.kind](params, i) for i in range(a.cases or 10)]
    if a.format == "json":
        return json.dumps([textio.to_json(v) for v in values], indent=2, sort_keys=True)
    return "\n".join(textio.serialize(v) for v in values)


# -- wiring ---------------------------------------------------------------------

def _default_seed() -> int:
    raw = os.environ.get("OMEGA_LAB_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"OMEGA_LAB_SEED must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None, help="default: $OMEGA_LAB_SEED or 0")
    common.add_argument("--cases", type=int, default=None)
    common.add_argument("--depth", type=int, default=2000)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--out", metavar="FILE")

    p = argparse.ArgumentParser(prog="omega-lab", description="Exact experiments with eventually periodic sets.")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("eval", parents=[common], help="canonicalize or combine values")
    e.add_argument("values", nargs="+")
    e.add_argument("--op", default="canon",
                   choices=["canon", "member", "intersect", "union", "difference", "complement",
                            "almost-subset", "compose", "max", "le", "enumerate", "image"])
    e.add_argument("-n", type=int, default=10, help="how many values to list / point for member")
    e.add_argument("--strict", action="store_true")

    c = sub.add_parser("compress", parents=[common], help="compress a family and classify it")
    c.add_argument("family")
    c.add_argument("--h")
    c.add_argument("--tests", help="file with a [tests] section")

    k = sub.add_parser("classify", parents=[common], help="filter/reaping checks for a family file")
    k.add_argument("family")

    w = sub.add_parser("witness", parents=[common], help="run a construction and verify it")
    w.add_argument("construction", choices=["split1", "rothsplit", "split4", "subbase", "escape"])
    w.add_argument("family")
    w.add_argument("--h")
    w.add_argument("--g")

    v = sub.add_parser("cover", parents=[common], help="cover traces, gluing and selection games")
    v.add_argument("action", choices=["classify", "glue", "split", "glueable", "game"])
    v.add_argument("file")
    v.add_argument("--h")
    v.add_argument("--set", help="splitting set for 'split'")
    v.add_argument("--force-h")
    v.add_argument("--mode", choices=["S1", "Sfin", "Ufin"], default="Ufin")
    v.add_argument("--schedule", help="QAFun: pick function (S1) or block boundaries")

    s = sub.add_parser("suite", parents=[common], help="run a property suite ('all' for every suite)")
    s.add_argument("name")
    s.add_argument("--timing", action="store_true", help="include wall time (breaks byte-identity)")

    g = sub.add_parser("gen", parents=[common], help="print seeded random values")
    g.add_argument("kind")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        seed = a.seed if a.seed is not None else _default_seed()
        params = GenParams(seed=seed, cases=a.cases, depth=a.depth)
        if a.command == "suite":
            out, ok = cmd_suite(a, params)
        elif a.command == "gen":
            out, ok = cmd_gen(a, params), True
        else:
            handler = {"eval": cmd_eval, "compress": cmd_compress, "classify": cmd_classify,
                       "witness": cmd_witness, "cover": cmd_cover}[a.command]
            res = handler(a)
            out, ok = res.render(a.format), res.ok
    except (UsageError, OmegaLabError, ValueError, OSError) as exc:
        print(f"omega-lab: error: {exc}", file=sys.stderr)
        return 2
    if a.out:
        Path(a.out).write_text(out + "\n")
    else:
        print(out)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
