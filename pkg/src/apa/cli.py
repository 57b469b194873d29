"""Command-line interface.

    apa states <file> [--sigma <spec>]
    apa transitions <file> --sigma <spec>
    apa semantics <file> --state a2,a3,a4 --which ad|co|pr|st|gr
    apa check <file> <query-file>
    apa dot <file> [--sigma <spec>]

`--sigma` is `all` or a comma-separated list of brace-set literals, e.g.
`{a2},{a1,a3},{}`. Exit codes: 0 success (and true verdicts), 2 formula
false, 1 any error. All output is deterministic; `--json` switches the
result to a canonical JSON document.
"""

from __future__ import annotations

import argparse
import json
import re
import sys

from . import ctl, dynamics, semantics
from .dot import export_dot
from .dynamics import SelectorFamily
from .errors import ApaError
from .fileformat import parse_framework
from .model import APAFramework, State

_SIGMA_RE = re.compile(r"\{([^{}]*)\}")


def parse_sigma_spec(spec: str) -> SelectorFamily:
    if spec == "all":
        return SelectorFamily.wildcard()
    rest = _SIGMA_RE.sub("", spec).replace(",", "").strip()
    if rest:
        raise ApaError(
            f"bad --sigma value {spec!r}: expected 'all' or brace-set "
            "literals like '{a1,a2},{}'"
        )
    refsets = [
        frozenset(t for t in body.replace(",", " ").split() if t)
        for body in _SIGMA_RE.findall(spec)
    ]
    if not refsets:
        raise ApaError(f"bad --sigma value {spec!r}: no selectors")
    return SelectorFamily(tuple(refsets))


def _load(path: str) -> APAFramework:
    with open(path, encoding="utf-8") as handle:
        return parse_framework(handle.read())


def _state_doc(fw: APAFramework, state: State) -> list[str]:
    return list(fw.sort_args(state.visible))


def _sigma_label(lts: dynamics.LTS, selector: int) -> str:
    if lts.family.is_wildcard:
        return "*"
    return lts.framework.format_set(lts.family.effective[selector])


def cmd_states(args, out) -> int:
    fw = _load(args.file)
    lts = dynamics.reachable(fw, parse_sigma_spec(args.sigma), args.max_states)
    if args.json:
        doc = {
            "states": [
                {
                    "visible": _state_doc(fw, s),
                    "initial": s == lts.initial,
                    "deadlock": s in lts.deadlocks,
                }
                for s in lts.states
            ]
        }
        print(json.dumps(doc, sort_keys=True), file=out)
        return 0
    for s in lts.states:
        marks = []
        if s == lts.initial:
            marks.append("initial")
        if s in lts.deadlocks:
            marks.append("deadlock")
        suffix = f"  ({', '.join(marks)})" if marks else ""
        print(fw.format_set(s.visible) + suffix, file=out)
    return 0


def cmd_transitions(args, out) -> int:
    fw = _load(args.file)
    lts = dynamics.reachable(fw, parse_sigma_spec(args.sigma), args.max_states)
    if args.json:
        doc = {
            "edges": [
                {
                    "from": _state_doc(fw, src),
                    "selector": sel,
                    "refset": (
                        None
                        if lts.family.is_wildcard
                        else list(fw.sort_args(lts.family.effective[sel]))
                    ),
                    "to": _state_doc(fw, dst),
                }
                for src, sel, dst in lts.edges
            ]
        }
        print(json.dumps(doc, sort_keys=True), file=out)
        return 0
    for src, sel, dst in lts.edges:
        label = f"#{sel} {_sigma_label(lts, sel)}"
        print(
            f"{fw.format_set(src.visible)} -[{label}]-> "
            f"{fw.format_set(dst.visible)}",
            file=out,
        )
    return 0


def cmd_semantics(args, out) -> int:
    fw = _load(args.file)
    members = [t for t in args.state.replace(",", " ").split() if t]
    unknown = [t for t in members if t not in fw.arguments]
    if unknown:
        raise ApaError(f"unknown arguments in --state: {', '.join(unknown)}")
    state = fw.state(members)
    exts = semantics.extensions(fw, args.which, state, args.max_args)
    if args.json:
        doc = {
            "label": args.which,
            "state": _state_doc(fw, state),
            "extensions": [list(fw.sort_args(e)) for e in exts],
        }
        print(json.dumps(doc, sort_keys=True), file=out)
        return 0
    for ext in exts:
        print(fw.format_set(ext), file=out)
    return 0


def cmd_check(args, out) -> int:
    fw = _load(args.file)
    with open(args.query, encoding="utf-8") as handle:
        query = ctl.parse_query(handle.read())
    result = ctl.check(fw, query, args.max_states, args.max_args)
    if args.json:
        witness = None
        if result.witness is not None:
            witness = {
                "prefix": [_state_doc(fw, s) for s in result.witness.prefix],
                "cycle": [_state_doc(fw, s) for s in result.witness.cycle],
            }
        doc = {"value": result.value, "witness": witness}
        print(json.dumps(doc, sort_keys=True), file=out)
    else:
        print("true" if result.value else "false", file=out)
        if result.witness is not None:
            fmt = lambda states: " -> ".join(
                fw.format_set(s.visible) for s in states
            )
            kind = "witness" if result.value else "counterexample"
            print(f"{kind} prefix: {fmt(result.witness.prefix) or '(empty)'}",
                  file=out)
            print(f"{kind} cycle:  {fmt(result.witness.cycle)}", file=out)
    return 0 if result.value else 2


def cmd_dot(args, out) -> int:
    fw = _load(args.file)
    lts = dynamics.reachable(fw, parse_sigma_spec(args.sigma), args.max_states)
    out.write(export_dot(lts, args.annotate))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apa",
        description="Persuasion-dynamics argumentation: state enumeration, "
        "per-state semantics and temporal queries.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, sigma=False):
        p.add_argument("file", help="framework file")
        if sigma:
            p.add_argument(
                "--sigma",
                default="all",
                help="'all' or comma-separated brace-set literals "
                "(default: all)",
            )
        p.add_argument("--json", action="store_true",
                       help="emit a canonical JSON document")
        p.add_argument("--max-states", type=int,
                       default=dynamics.DEFAULT_MAX_STATES,
                       help="override the reachable-state bound")
        p.add_argument("--max-args", type=int,
                       default=semantics.DEFAULT_MAX_ENUM_ARGS,
                       help="override the extension-enumeration bound")

    p = sub.add_parser("states", help="list reachable states")
    common(p, sigma=True)
    p.set_defaults(func=cmd_states)

    p = sub.add_parser("transitions", help="list labeled transitions")
    common(p, sigma=True)
    p.set_defaults(func=cmd_transitions)

    p = sub.add_parser("semantics", help="list extensions at a state")
    common(p)
    p.add_argument("--state", required=True,
                   help="comma-separated visible arguments")
    p.add_argument("--which", required=True,
                   choices=list(semantics.LABELS))
    p.set_defaults(func=cmd_semantics)

    p = sub.add_parser("check", help="evaluate a query file")
    common(p)
    p.add_argument("query", help="query file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("dot", help="emit the LTS as Graphviz DOT")
    common(p, sigma=True)
    p.add_argument("--annotate", choices=list(semantics.LABELS),
                   default=None,
                   help="annotate each node with this label's extensions")
    p.set_defaults(func=cmd_dot)
    return parser


def main(argv=None, out=sys.stdout, err=sys.stderr) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except ApaError as exc:
        print(f"error: {exc}", file=err)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=err)
        return 1


if __name__ == "__main__":
    sys.exit(main())
