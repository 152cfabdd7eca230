"""Command-line front end.

Exit codes: 0 equal / success, 1 not equal, 2 requires-oracle,
64 usage, 65 parse or lookup error, 66 type error, 70 guard exceeded.
All state flows through files and flags; output is plain text, or JSON
(schema version 1) with ``--json``.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bench as bench_mod
from .annotate import AnnotatedTerm, annotate
from .compose import eliminate
from .decide import (
    Bouncer,
    Disconnect,
    Equal,
    NotEqual,
    RequiresOracle,
    SharedCopoint,
    SharedPoint,
    SyntacticRecursion,
    decide_with_stats,
)
from .factor import factor_inj, factor_proj
from .oracle import (
    CardinalSquare,
    DEFAULT_GUARD,
    cardinal_path,
    class_of,
    enumerate_terms,
    find_bouncers,
    homset_classes,
    same_class,
)
from .syntax import Module, ParseError, parse_module, parse_type
from .terms import TypedTerm, TypingError, format_term, infer, term_sort_key
from .types import GuardExceeded, format_type

SCHEMA = 1

EX_USAGE = 64
EX_PARSE = 65
EX_TYPE = 66
EX_GUARD = 70


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EX_USAGE)


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _load(path: str) -> Module:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"cannot read {path}: {exc}", EX_PARSE)
    return parse_module(text)


def _named(module: Module, name: str) -> TypedTerm:
    if name not in module.decls:
        raise CliError(f"no term named {name!r} in file", EX_PARSE)
    return module.typed(name)


def _cut_free(module: Module, name: str) -> tuple[AnnotatedTerm, TypedTerm]:
    tt = _named(module, name)
    t = eliminate(tt.term)
    return annotate(t, tt.dom, tt.cod), TypedTerm(t, tt.dom, tt.cod)


def _witness_tag(witness) -> str:
    match witness:
        case Disconnect():
            return "disconnect"
        case SharedPoint():
            return "shared point"
        case SharedCopoint():
            return "shared copoint"
        case Bouncer():
            return "bouncer"
        case SyntacticRecursion():
            return "syntactic"
    return "singleton homset"


def _emit(payload: dict, text: str, as_json: bool):
    if as_json:
        payload["schema"] = SCHEMA
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


# -- subcommands -------------------------------------------------------------

def cmd_check(args) -> int:
    module = _load(args.file)
    for name in module.decls:
        _named(module, name)
    n = len(module.decls)
    _emit({"terms": n, "ok": True}, f"ok: {n} term(s) well-typed", args.json)
    return 0


def cmd_decide(args) -> int:
    module = _load(args.file)
    pairs = []
    if args.left or args.right:
        if not (args.left and args.right):
            raise CliError("--left and --right go together", EX_USAGE)
        pairs.append((args.left, args.right))
    pairs.extend(args.pair or [])
    if not pairs:
        raise CliError("nothing to decide: give --left/--right or --pair", EX_USAGE)
    worst = 0
    for lname, rname in pairs:
        left, ltt = _cut_free(module, lname)
        right, rtt = _cut_free(module, rname)
        if (ltt.dom, ltt.cod) != (rtt.dom, rtt.cod):
            raise CliError(f"{lname} and {rname} are not parallel", EX_TYPE)
        verdict, stats = decide_with_stats(left, right)
        payload = {"left": lname, "right": rname}
        match verdict:
            case Equal(witness):
                tag = _witness_tag(witness)
                text = f"Equal ({tag})"
                payload |= {"verdict": "Equal", "witness_kind": tag}
                if args.witness and witness is not None and not isinstance(witness, SyntacticRecursion):
                    payload["witness"] = format_term(witness.term)
                    text += f"  witness: {format_term(witness.term)}"
                code = 0
            case NotEqual(reason):
                text = f"NotEqual ({reason})"
                payload |= {"verdict": "NotEqual", "reason": reason}
                code = 1
            case RequiresOracle(reason):
                text = f"RequiresOracle ({reason})"
                payload |= {"verdict": "RequiresOracle", "reason": reason}
                code = 2
        if args.stats:
            payload["steps"] = stats.steps
            text += f"  [steps={stats.steps}]"
        _emit(payload, text, args.json)
        worst = max(worst, code)
    return worst


def cmd_compose(args) -> int:
    module = _load(args.file)
    tt = _named(module, args.term)
    term, dom, cod = tt.term, tt.dom, tt.cod
    if args.with_:
        other = _named(module, args.with_)
        if other.dom != cod:
            raise CliError(f"{args.term} ; {args.with_}: middle types differ", EX_TYPE)
        from .terms import Cut

        term, cod = Cut(term, other.term), other.cod
        infer(term, dom, cod, module.graph)
    result = eliminate(term)
    infer(result, dom, cod, module.graph)
    text = f"{format_term(result)} : {format_type(dom)} -> {format_type(cod)}"
    _emit({"term": format_term(result), "dom": format_type(dom), "cod": format_type(cod)},
          text, args.json)
    return 0


def _annotation_tree(node: AnnotatedTerm) -> dict:
    a = node.ann
    return {
        "term": format_term(node.term),
        "dom": format_type(node.dom),
        "cod": format_type(node.cod),
        "pointed": a.pointed,
        "copointed": a.copointed,
        "point_witness": format_term(a.point_witness) if a.point_witness else None,
        "copoint_witness": format_term(a.copoint_witness) if a.copoint_witness else None,
        "children": [_annotation_tree(c) for c in node.children],
    }


def _annotation_lines(node: AnnotatedTerm, depth: int, out: list[str]):
    a = node.ann
    bits = f"pointed{'+' if a.pointed else '-'} copointed{'+' if a.copointed else '-'}"
    wits = []
    if a.point_witness is not None:
        wits.append(f"point={format_term(a.point_witness)}")
    if a.copoint_witness is not None:
        wits.append(f"copoint={format_term(a.copoint_witness)}")
    head = "  " * depth + f"{format_term(node.term)} : {format_type(node.dom)} -> {format_type(node.cod)}"
    out.append(f"{head}  {bits}" + (("  " + ", ".join(wits)) if wits else ""))
    for c in node.children:
        _annotation_lines(c, depth + 1, out)


def cmd_annotate(args) -> int:
    module = _load(args.file)
    ann, _ = _cut_free(module, args.term)
    lines: list[str] = []
    _annotation_lines(ann, 0, lines)
    _emit(_annotation_tree(ann), "\n".join(lines), args.json)
    return 0


def cmd_factor(args) -> int:
    from .types import Prod, Sum

    module = _load(args.file)
    ann, tt = _cut_free(module, args.term)
    if (args.inj is None) == (args.proj is None):
        raise CliError("give exactly one of --inj or --proj", EX_USAGE)
    if args.inj is not None:
        if not isinstance(tt.cod, Sum):
            raise CliError(f"{args.term} has no sum codomain to factor through", EX_TYPE)
        got = factor_inj(ann, args.inj)
        kind, index = "inj", args.inj
    else:
        if not isinstance(tt.dom, Prod):
            raise CliError(f"{args.term} has no product domain to factor through", EX_TYPE)
        got = factor_proj(ann, args.proj)
        kind, index = "proj", args.proj
    if got is None:
        _emit({"factors": False, "kind": kind, "index": index}, "no factorization", args.json)
        return 1
    text = f"{format_term(got.term)} : {format_type(got.dom)} -> {format_type(got.cod)}"
    _emit({"factors": True, "kind": kind, "index": index, "term": format_term(got.term),
           "dom": format_type(got.dom), "cod": format_type(got.cod)}, text, args.json)
    return 0


def cmd_enumerate(args) -> int:
    dom = parse_type(args.dom)
    cod = parse_type(args.cod)
    terms = enumerate_terms(dom, cod, guard=args.guard)
    payload: dict = {"dom": format_type(dom), "cod": format_type(cod), "terms": len(terms)}
    if args.classes:
        classes, _ = homset_classes(dom, cod, guard=args.guard)
        payload["classes"] = len(classes)
        text = f"{len(terms)} terms, {len(classes)} classes"
    else:
        text = f"{len(terms)} terms"
    if args.list:
        payload["members"] = [format_term(t) for t in terms]
        text += "\n" + "\n".join(format_term(t) for t in terms)
    _emit(payload, text, args.json)
    return 0


def cmd_oracle(args) -> int:
    guard = args.guard
    if args.oracle_cmd == "decide":
        module = _load(args.file)
        _, ltt = _cut_free(module, args.left)
        _, rtt = _cut_free(module, args.right)
        if (ltt.dom, ltt.cod) != (rtt.dom, rtt.cod):
            raise CliError("terms are not parallel", EX_TYPE)
        eq = same_class(ltt.term, rtt.term, ltt.dom, ltt.cod, guard=guard)
        _emit({"verdict": "Equal" if eq else "NotEqual"},
              "Equal" if eq else "NotEqual", args.json)
        return 0 if eq else 1
    if args.oracle_cmd == "class":
        module = _load(args.file)
        _, tt = _cut_free(module, args.term)
        cls = class_of(tt.term, tt.dom, tt.cod, guard=guard)
        members = sorted(cls.members, key=term_sort_key)
        _emit({"size": len(members), "canonical": format_term(cls.canonical),
               "members": [format_term(m) for m in members]},
              f"{len(members)} member(s), canonical: {format_term(cls.canonical)}\n"
              + "\n".join(format_term(m) for m in members), args.json)
        return 0
    if args.oracle_cmd == "enumerate":
        return cmd_enumerate(args)
    if args.oracle_cmd == "path":
        module = _load(args.file)
        square = CardinalSquare(parse_type(args.x0), parse_type(args.x1),
                                parse_type(args.a0), parse_type(args.a1))
        _, ltt = _cut_free(module, args.left)
        _, rtt = _cut_free(module, args.right)
        path = cardinal_path(square, ltt.term, rtt.term, (ltt.dom, ltt.cod),
                             (rtt.dom, rtt.cod), module.graph, guard=guard)
        if path is None:
            _emit({"connected": False}, "no path", args.json)
            return 1
        desc = [f"corner {c}: {format_term(t)}" for c, t in zip(path.corners, path.terms)]
        _emit({"connected": True, "length": path.length,
               "terms": [format_term(t) for t in path.terms],
               "witnesses": [format_term(w) for w in path.witnesses]},
              f"path of length {path.length}\n" + "\n".join(desc), args.json)
        return 0
    if args.oracle_cmd == "bouncers":
        module = _load(args.file)
        square = CardinalSquare(parse_type(args.x0), parse_type(args.x1),
                                parse_type(args.a0), parse_type(args.a1))
        _, ltt = _cut_free(module, args.left)
        _, rtt = _cut_free(module, args.right)
        hs = find_bouncers(square, args.i, args.j, ltt.term, rtt.term,
                           module.graph, guard=guard)
        _emit({"bouncers": [format_term(h) for h in hs]},
              f"{len(hs)} bouncer(s)\n" + "\n".join(format_term(h) for h in hs),
              args.json)
        return 0
    raise CliError("unknown oracle subcommand", EX_USAGE)


def cmd_bench(args) -> int:
    rows = bench_mod.run_bench(args.max_height)
    csv = bench_mod.bench_csv(rows)
    if args.csv:
        Path(args.csv).write_text(csv, encoding="utf-8")
        print(f"wrote {args.csv}")
    else:
        print(csv, end="")
    return 0


# -- wiring -------------------------------------------------------------------

def build_parser() -> _Parser:
    p = _Parser(prog="sigmapi", description=__doc__)
    sub = p.add_subparsers(dest="cmd", required=True)

    def common(sp, file=True):
        if file:
            sp.add_argument("file", help=".spt declaration file")
        sp.add_argument("--json", action="store_true")
        return sp

    common(sub.add_parser("check", help="parse and typecheck a file")).set_defaults(fn=cmd_check)

    d = common(sub.add_parser("decide", help="decide equality of named terms"))
    d.add_argument("--left")
    d.add_argument("--right")
    d.add_argument("--pair", nargs=2, action="append", metavar=("L", "R"))
    d.add_argument("--witness", action="store_true")
    d.add_argument("--stats", action="store_true")
    d.set_defaults(fn=cmd_decide)

    c = common(sub.add_parser("compose", help="cut-eliminate a term"))
    c.add_argument("--term", required=True)
    c.add_argument("--with", dest="with_", help="postcompose with another named term")
    c.set_defaults(fn=cmd_compose)

    a = common(sub.add_parser("annotate", help="per-node pointedness report"))
    a.add_argument("--term", required=True)
    a.set_defaults(fn=cmd_annotate)

    f = common(sub.add_parser("factor", help="factor through an injection/projection"))
    f.add_argument("--term", required=True)
    f.add_argument("--inj", type=int, choices=(0, 1))
    f.add_argument("--proj", type=int, choices=(0, 1))
    f.set_defaults(fn=cmd_factor)

    def enum_args(sp):
        sp.add_argument("-X", "--dom", required=True, help="domain type")
        sp.add_argument("-A", "--cod", required=True, help="codomain type")
        sp.add_argument("--classes", action="store_true")
        sp.add_argument("--list", action="store_true")
        sp.add_argument("--guard", type=int, default=DEFAULT_GUARD)
        return sp

    e = enum_args(common(sub.add_parser("enumerate", help="enumerate a homset"), file=False))
    e.set_defaults(fn=cmd_enumerate)

    o = sub.add_parser("oracle", help="exact exponential oracle")
    osub = o.add_subparsers(dest="oracle_cmd", required=True)
    od = common(osub.add_parser("decide"))
    od.add_argument("--left", required=True)
    od.add_argument("--right", required=True)
    od.add_argument("--guard", type=int, default=DEFAULT_GUARD)
    oc = common(osub.add_parser("class"))
    oc.add_argument("--term", required=True)
    oc.add_argument("--guard", type=int, default=DEFAULT_GUARD)
    oe = enum_args(common(osub.add_parser("enumerate"), file=False))
    op = common(osub.add_parser("path"))
    for flag in ("--x0", "--x1", "--a0", "--a1"):
        op.add_argument(flag, required=True)
    op.add_argument("--left", required=True)
    op.add_argument("--right", required=True)
    op.add_argument("--guard", type=int, default=DEFAULT_GUARD)
    ob = common(osub.add_parser("bouncers"))
    for flag in ("--x0", "--x1", "--a0", "--a1"):
        ob.add_argument(flag, required=True)
    ob.add_argument("--left", required=True)
    ob.add_argument("--right", required=True)
    ob.add_argument("-i", type=int, choices=(0, 1), required=True)
    ob.add_argument("-j", type=int, choices=(0, 1), required=True)
    ob.add_argument("--guard", type=int, default=DEFAULT_GUARD)
    o.set_defaults(fn=cmd_oracle)

    b = sub.add_parser("bench", help="balanced-type benchmark, CSV output")
    b.add_argument("--max-height", type=int, default=10)
    b.add_argument("--csv", help="write CSV here instead of stdout")
    b.set_defaults(fn=cmd_bench)
    return p


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EX_PARSE
    except TypingError as exc:
        print(f"type error: {exc}", file=sys.stderr)
        return EX_TYPE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EX_TYPE
    except GuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return EX_GUARD


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
