"""Text renderings of relation digraphs (Graphviz DOT and JSON)."""

from __future__ import annotations

import hashlib

from .diamonds import Diamond, HodgeNumbers
from .documents import dumps
from .relation import RelationDigraph, cover_edges, transitivity_report

__all__ = ["diamond_label", "entry_summary", "render_dot", "render_json"]


def entry_summary(f: Diamond) -> str:
    return " ".join(f"{p},{q}:{m}" for (p, q), m in f)


def diamond_label(h: HodgeNumbers, f: Diamond) -> str:
    """``◇_r`` on ``(g,g)``, ``◇_{r,s}`` on ``(b,a,b)``, otherwise a short content hash."""
    t = h.as_tuple()
    if h.weight == 1:
        return f"◇_{f[(0, 0)]}"
    if h.weight == 2 and t[0] == t[2]:
        return f"◇_{{{f[(0, 0)]},{f[(0, 1)]}}}"
    digest = hashlib.sha1(entry_summary(f).encode()).hexdigest()[:8]
    return f"◇#{digest}"


def _edges(g: RelationDigraph, covers_only: bool) -> list[tuple[int, int]]:
    return sorted(cover_edges(g) if covers_only else g.edges)


def _dot_escape(s: str) -> str:
    return s.replace("\\", "\\\\").replace('"', '\\"')


def render_dot(g: RelationDigraph, covers_only: bool = False) -> str:
    """Edges run from the less degenerate diamond to the more degenerate one."""
    h = g.hodge
    report = transitivity_report(g)
    kind = "covers" if covers_only else "relation"
    lines = ["digraph hodge {", "  rankdir=LR;", f'  label="h={h} {kind}";', "  node [shape=box];"]
    if covers_only and not report.transitive:
        lines.append("  // relation is not transitive: cover edges do not determine it")
    for i, f in enumerate(g.nodes):
        text = _dot_escape(diamond_label(h, f)) + "\\n" + _dot_escape(entry_summary(f))
        lines.append(f'  d{i} [label="{text}"];')
    for i, j in _edges(g, covers_only):
        lines.append(f"  d{i} -> d{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def render_json(g: RelationDigraph, covers_only: bool = False) -> str:
    h = g.hodge
    report = transitivity_report(g)
    doc = {
        "weight": h.weight,
        "hodge_numbers": list(h.as_tuple()),
        "covers_only": covers_only,
        "transitive": report.transitive,
        "nodes": [
            {
                "id": i,
                "label": diamond_label(h, f),
                "entries": [{"p": p, "q": q, "m": m} for (p, q), m in f],
            }
            for i, f in enumerate(g.nodes)
        ],
        "edges": [[i, j] for i, j in _edges(g, covers_only)],
        "transitivity_violations": [list(t) for t in report.violations],
    }
    return dumps(doc)
