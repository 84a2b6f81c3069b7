"""Structured output records and graph-text emission for the CLI."""

from __future__ import annotations

import json
from typing import Iterable, Mapping

from .analysis import CheckResult
from .triangulation import Cycle, Triangulation

SCHEMA_VERSION = "1.0"

_PALETTE = ("red", "blue", "forestgreen", "darkorange", "purple", "brown")


def dumps(record: Mapping) -> str:
    """Deterministic JSON document: sorted keys, fixed indentation."""
    return json.dumps(record, indent=2, sort_keys=True) + "\n"


def base_record(command: str, instance: str) -> dict:
    return {"schema_version": SCHEMA_VERSION, "command": command, "instance": instance}


def width_record(command, instance, strategy, order, width, prof, ext) -> dict:
    rec = base_record(command, instance)
    rec.update(
        {
            "strategy": strategy,
            "width": list(width),
            "ordering": list(order),
            "profile": list(prof),
            "maxima": list(ext.maxima),
            "minima": list(ext.minima),
        }
    )
    return rec


def check_rows(rows: Iterable[CheckResult]) -> list[dict]:
    return [
        {"theorem": r.theorem, "instance": r.instance, "status": r.status, "witness": r.witness}
        for r in rows
    ]


def format_check_table(rows: list[CheckResult]) -> str:
    """Aligned text table, one row per (instance, theorem)."""
    headers = ("instance", "theorem", "status", "witness")
    data = [(r.instance, r.theorem, r.status, r.witness) for r in rows]
    widths = [max(len(h), *(len(row[i]) for row in data)) if data else len(h)
              for i, h in enumerate(headers)]
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(headers))]
    for row in data:
        lines.append("  ".join(row[i].ljust(widths[i]) for i in range(4)).rstrip())
    return "\n".join(lines)


def to_dot(t: Triangulation, cycles: Mapping[str, Cycle] | None = None,
           name: str = "triangulation") -> str:
    """The 1-skeleton with highlighted cycles, then the dual graph.

    Two plain ``graph`` blocks in standard DOT text; tools process them in
    sequence.  Highlighted cycle edges are colored per cycle, first listed
    wins on shared edges.
    """
    cycles = dict(cycles or {})
    lines: list[str] = []
    styles: dict[tuple[int, int], str] = {}
    for idx, (label, c) in enumerate(cycles.items()):
        color = _PALETTE[idx % len(_PALETTE)]
        lines.append(f"// cycle {label}: {color} {'-'.join(map(str, c.vertices))}")
        for e in c.edges:
            styles.setdefault(e, color)
    lines.append(f'graph "{name}-skeleton" {{')
    lines.append("  node [shape=circle, fontsize=10];")
    for e in t.edges:
        if e in styles:
            lines.append(f'  {e[0]} -- {e[1]} [color="{styles[e]}", penwidth=2.5];')
        else:
            lines.append(f"  {e[0]} -- {e[1]};")
    lines.append("}")
    lines.append(f'graph "{name}-dual" {{')
    lines.append("  node [shape=box, fontsize=10];")
    for f in range(t.n_faces):
        a, b, c = t.faces[f]
        lines.append(f'  f{f} [label="f{f}: {a},{b},{c}"];')
    for f in range(t.n_faces):
        for g, e in t.dual_neighbors[f]:
            if f < g:
                lines.append(f'  f{f} -- f{g} [label="{e[0]}-{e[1]}", fontsize=8];')
    lines.append("}")
    return "\n".join(lines) + "\n"
