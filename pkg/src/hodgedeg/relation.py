"""The polarized degeneracy relation between Hodge diamonds.

``f1 <= f2`` holds when ``f2`` is a sum, over the levels ``l`` of the primitive
decomposition of ``f1``, of shifted copies ``sum_{0<=a<=l} g_l[a]`` where each
``g_l`` is a Hodge diamond on the level-``l`` primitive subdomain (weight
``n + l``, Hodge numbers read off the level-``l`` top line of ``f1``).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .diamonds import (
    Cell,
    Diamond,
    HodgeNumbers,
    InvalidDiamond,
    SubdomainSpec,
    WeightMismatch,
    enumerate_diamonds,
    is_valid_diamond,
    primitive_decomposition,
    shift,
    subdomain_specs,
)

__all__ = [
    "DEFAULT_NODE_CAP",
    "NodeCapExceeded",
    "RelationDigraph",
    "RelationResult",
    "TransitivityReport",
    "cover_edges",
    "polarized_leq",
    "relation_digraph",
    "transitivity_report",
    "witness_sum",
]

DEFAULT_NODE_CAP = 400


class NodeCapExceeded(ValueError):
    pass


@dataclass(frozen=True)
class RelationResult:
    holds: bool
    witness: tuple[tuple[int, Diamond], ...] | None = None

    def __bool__(self) -> bool:
        return self.holds


@dataclass(frozen=True)
class RelationDigraph:
    hodge: HodgeNumbers
    nodes: tuple[Diamond, ...]
    edges: frozenset[tuple[int, int]]

    def leq(self, i: int, j: int) -> bool:
        return i == j or (i, j) in self.edges

    def index(self, f: Diamond) -> int:
        return self.nodes.index(f)


@dataclass(frozen=True)
class TransitivityReport:
    violations: tuple[tuple[int, int, int], ...]

    @property
    def transitive(self) -> bool:
        return not self.violations


@lru_cache(maxsize=4096)
def _subdomain_diamonds(spec: SubdomainSpec) -> tuple[tuple[Diamond, dict[Cell, int]], ...]:
    """Diamonds of one primitive subdomain, each paired with its summed shifts."""
    out = []
    for g in enumerate_diamonds(spec.hodge_numbers()):
        spread: dict[Cell, int] = {}
        for a in range(spec.level + 1):
            for cell, m in shift(g, a):
                spread[cell] = spread.get(cell, 0) + m
        out.append((g, spread))
    return tuple(out)


def _check_inputs(f1: Diamond, f2: Diamond, h: HodgeNumbers) -> None:
    if f1.weight != h.weight or f2.weight != h.weight:
        raise WeightMismatch(f"diamond weights {f1.weight}, {f2.weight} vs Hodge weight {h.weight}")
    for name, f in (("first", f1), ("second", f2)):
        verdict = is_valid_diamond(h, f)
        if not verdict:
            raise InvalidDiamond(f"{name} diamond invalid for {h}: " + "; ".join(map(str, verdict.violations)))


def polarized_leq(f1: Diamond, f2: Diamond, h: HodgeNumbers) -> RelationResult:
    """Decide ``f1 <= f2`` (reflexive) by depth-first search over subdomain diamonds."""
    _check_inputs(f1, f2, h)
    specs = sorted(subdomain_specs(primitive_decomposition(f1)), key=lambda s: -s.level)
    residual = f2.as_dict()
    chosen: list[tuple[int, Diamond]] = []

    def walk(k: int) -> bool:
        if k == len(specs):
            return not any(residual.values())
        for g, spread in _subdomain_diamonds(specs[k]):
            ok = True
            for cell, m in spread.items():
                if residual.get(cell, 0) < m:
                    ok = False
                    break
            if not ok:
                continue
            for cell, m in spread.items():
                residual[cell] -= m
            chosen.append((specs[k].level, g))
            if walk(k + 1):
                return True
            chosen.pop()
            for cell, m in spread.items():
                residual[cell] += m
        return False

    if walk(0):
        return RelationResult(True, tuple(sorted(chosen, key=lambda t: t[0])))
    return RelationResult(False, None)


def witness_sum(witness, weight: int) -> Diamond:
    acc: dict[Cell, int] = {}
    for level, g in witness:
        for a in range(level + 1):
            for cell, m in shift(g, a):
                acc[cell] = acc.get(cell, 0) + m
    return Diamond(weight, acc)


def relation_digraph(h: HodgeNumbers, node_cap: int = DEFAULT_NODE_CAP) -> RelationDigraph:
    nodes = tuple(enumerate_diamonds(h))
    if len(nodes) > node_cap:
        raise NodeCapExceeded(f"{len(nodes)} diamonds for {h} exceeds the cap of {node_cap}")
    edges = set()
    for i, f1 in enumerate(nodes):
        for j, f2 in enumerate(nodes):
            if i != j and f1.mass == f2.mass and polarized_leq(f1, f2, h).holds:
                edges.add((i, j))
    return RelationDigraph(h, nodes, frozenset(edges))


def cover_edges(g: RelationDigraph) -> frozenset[tuple[int, int]]:
    """Edges with no intermediate node; only a Hasse diagram when the relation is transitive."""
    succ: dict[int, set[int]] = {}
    for i, j in g.edges:
        succ.setdefault(i, set()).add(j)
    return frozenset(
        (i, j) for i, j in g.edges if not any(k != j and (k, j) in g.edges for k in succ.get(i, ()))
    )


def transitivity_report(g: RelationDigraph) -> TransitivityReport:
    succ: dict[int, list[int]] = {}
    for i, j in sorted(g.edges):
        succ.setdefault(i, []).append(j)
    bad = []
    for i in sorted(succ):
        for j in succ[i]:
            for k in succ.get(j, ()):
                if k != i and (i, k) not in g.edges:
                    bad.append((i, j, k))
    return TransitivityReport(tuple(bad))
