"""Named reference scenarios whose outputs are checked in as golden files."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable

from .diamonds import HodgeNumbers, enumerate_diamonds
from .documents import diamond_to_doc, dumps
from .relation import relation_digraph
from .render import render_dot, render_json

__all__ = ["SCENARIOS", "Scenario", "golden_text", "run_scenario"]


@dataclass(frozen=True)
class Scenario:
    name: str
    filename: str
    build: Callable[[], str]
    summary: str


def _enumerate(values: tuple[int, ...]) -> Callable[[], str]:
    def build() -> str:
        h = HodgeNumbers.from_tuple(values)
        return dumps([diamond_to_doc(h, f) for f in enumerate_diamonds(h)])

    return build


def _digraph(values: tuple[int, ...], fmt: str, covers_only: bool) -> Callable[[], str]:
    def build() -> str:
        g = relation_digraph(HodgeNumbers.from_tuple(values))
        return render_dot(g, covers_only) if fmt == "dot" else render_json(g, covers_only)

    return build


SCENARIOS: tuple[Scenario, ...] = (
    Scenario("enumerate-2-2", "enumerate-2-2.json", _enumerate((2, 2)), "the g+1 diamonds of h=(g,g), g=2"),
    Scenario("enumerate-1-2-1", "enumerate-1-2-1.json", _enumerate((1, 2, 1)), "the three diamonds of h=(1,a,1), a=2"),
    Scenario("enumerate-2-4-2", "enumerate-2-4-2.json", _enumerate((2, 4, 2)), "the (r,s) family of h=(b,a,b), b=2, a=4"),
    Scenario("order-3-3", "order-3-3.json", _digraph((3, 3), "json", False), "full relation on h=(3,3): a chain"),
    Scenario("order-3-6-3", "order-3-6-3.dot", _digraph((3, 6, 3), "dot", True), "cover diagram of h=(3,6,3)"),
    Scenario("order-1-2-2-1", "order-1-2-2-1.json", _digraph((1, 2, 2, 1), "json", False), "non-transitive relation on h=(1,2,2,1)"),
    Scenario("hasse-2-4-2", "hasse-2-4-2.dot", _digraph((2, 4, 2), "dot", True), "cover diagram of h=(2,4,2)"),
)


def run_scenario(name: str) -> str:
    for s in SCENARIOS:
        if s.name == name:
            return s.build()
    raise KeyError(name)


def golden_text(filename: str, golden_dir: Path | None = None) -> str | None:
    if golden_dir is not None:
        path = golden_dir / filename
        return path.read_text(encoding="utf-8") if path.exists() else None
    res = resources.files("hodgedeg").joinpath("goldens", filename)
    return res.read_text(encoding="utf-8") if res.is_file() else None
