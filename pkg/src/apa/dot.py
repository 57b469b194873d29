"""Graphviz DOT rendering of a reachable LTS.

One node per state labeled with its visible set, one edge per (selector,
successor), deadlock states double-circled. Output is byte-identical
across runs: states, edges and attributes are emitted in canonical order.
"""

from __future__ import annotations

from .dynamics import LTS
from .semantics import LABELS


def export_dot(lts: LTS, annotate_extensions: str | None = None) -> str:
    """Render `lts` as DOT text.

    When `annotate_extensions` names a semantics label, each node also
    lists that label's extensions at the state (needs enumeration; only
    use at desk scale).
    """
    from . import semantics  # local import keeps plain export cheap

    if annotate_extensions is not None and annotate_extensions not in LABELS:
        raise ValueError(f"unknown semantics label: {annotate_extensions!r}")

    fw = lts.framework
    ids = {state: f"s{i}" for i, state in enumerate(lts.states)}
    selectors = lts.family.effective

    lines = ["digraph apa {", "  rankdir=LR;", '  node [shape=ellipse];']
    for state in lts.states:
        label = fw.format_set(state.visible)
        if annotate_extensions is not None:
            exts = semantics.extensions(fw, annotate_extensions, state)
            ext_text = " ".join(fw.format_set(e) for e in exts)
            label = f"{label}\\n{annotate_extensions}: {ext_text}"
        attrs = [f'label="{label}"']
        if state == lts.initial:
            attrs.append("style=bold")
        if state in lts.deadlocks:
            attrs.append("peripheries=2")
        lines.append(f'  {ids[state]} [{", ".join(attrs)}];')
    for src, sel, dst in lts.edges:
        sel_label = "*" if lts.family.is_wildcard else fw.format_set(selectors[sel])
        lines.append(f'  {ids[src]} -> {ids[dst]} [label="{sel_label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
