"""Hodge numbers, Hodge diamonds and their primitive decomposition.

A Hodge diamond for weight ``n`` Hodge numbers ``h`` is a nonnegative integer
function on the ``(p, q)`` lattice. It is valid when

* hd1: its columns sum to the Hodge numbers, ``sum_p f(p, q) = h^{n-q, q}``;
* hd2: it is symmetric about the diagonal, ``f(p, q) = f(q, p)``;
* hd3: it is symmetric about ``p + q = n``, ``f(p, q) = f(n-q, n-p)``;
* hd4: it does not increase moving away from ``p + q = n`` along a diagonal,
  ``f(p, q) >= f(p+1, q+1)`` whenever ``p + q >= n``.

Every valid diamond is a sum of shifted "primitive tops" (one ``N``-string per
top), and :func:`enumerate_diamonds` walks these top families directly.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Mapping
from dataclasses import dataclass, field
from typing import Union

__all__ = [
    "Cell",
    "Diamond",
    "DiamondCheck",
    "HodgeNumbers",
    "InvalidDiamond",
    "InvalidHodgeNumbers",
    "PrimitiveDiamond",
    "SubdomainSpec",
    "Violation",
    "WeightMismatch",
    "enumerate_diamonds",
    "is_valid_diamond",
    "primitive_decomposition",
    "pure_diamond",
    "reconstruct",
    "shift",
    "subdomain_specs",
    "validate_hodge_numbers",
]

Cell = tuple[int, int]


class InvalidHodgeNumbers(ValueError):
    pass


class InvalidDiamond(ValueError):
    pass


class WeightMismatch(ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    condition: str
    cell: object
    message: str

    def __str__(self) -> str:
        return f"{self.condition} at {self.cell}: {self.message}"


@dataclass(frozen=True)
class HodgeNumbers:
    """Weight ``n`` and ``counts[p] = h^{p, n-p}``.

    Construction does not validate; call :func:`validate_hodge_numbers`.
    """

    weight: int
    counts: tuple[tuple[int, int], ...] = field(default=())

    def __init__(self, weight: int, counts: Mapping[int, int] | Iterable[tuple[int, int]]) -> None:
        items = counts.items() if isinstance(counts, Mapping) else counts
        merged: dict[int, int] = {}
        for p, c in items:
            if c:
                merged[int(p)] = merged.get(int(p), 0) + int(c)
        object.__setattr__(self, "weight", int(weight))
        object.__setattr__(self, "counts", tuple(sorted((p, c) for p, c in merged.items() if c)))

    @classmethod
    def from_tuple(cls, values: Iterable[int], weight: int | None = None) -> HodgeNumbers:
        """From ``(h^{n,0}, h^{n-1,1}, ..., h^{0,n})``; weight defaults to ``len - 1``."""
        values = [int(v) for v in values]
        n = len(values) - 1 if weight is None else weight
        return cls(n, {n - i: v for i, v in enumerate(values)})

    def __getitem__(self, p: int) -> int:
        return dict(self.counts).get(p, 0)

    def h(self, p: int, q: int) -> int:
        return self[p] if p + q == self.weight else 0

    def as_tuple(self) -> tuple[int, ...]:
        n = self.weight
        return tuple(self[n - i] for i in range(n + 1))

    @property
    def dim(self) -> int:
        return sum(c for _, c in self.counts)

    def __str__(self) -> str:
        return "(" + ",".join(map(str, self.as_tuple())) + ")"


class _LatticeFunction:
    """Finitely supported positive integer function on Z^2, canonical sparse form."""

    __slots__ = ("weight", "entries", "_map", "_hash")

    def __init__(self, weight: int, entries: Mapping[Cell, int] | Iterable[tuple[Cell, int]] = ()) -> None:
        items = entries.items() if isinstance(entries, Mapping) else entries
        acc: dict[Cell, int] = {}
        for (p, q), m in items:
            key = (int(p), int(q))
            acc[key] = acc.get(key, 0) + int(m)
        for key, m in acc.items():
            if m < 0:
                raise InvalidDiamond(f"negative multiplicity {m} at {key}")
        self.weight = int(weight)
        self._map = {k: m for k, m in acc.items() if m}
        self.entries: tuple[tuple[Cell, int], ...] = tuple(sorted(self._map.items()))
        self._hash = None

    def __getitem__(self, cell: Cell) -> int:
        return self._map.get(cell, 0)

    def __iter__(self) -> Iterator[tuple[Cell, int]]:
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def support(self) -> list[Cell]:
        return [c for c, _ in self.entries]

    @property
    def mass(self) -> int:
        return sum(m for _, m in self.entries)

    def as_dict(self) -> dict[Cell, int]:
        return dict(self._map)

    def sort_key(self) -> tuple:
        return self.entries

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        return self.weight == other.weight and self.entries == other.entries

    def __lt__(self, other: _LatticeFunction) -> bool:
        return (self.weight, self.entries) < (other.weight, other.entries)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((type(self).__name__, self.weight, self.entries))
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join(f"{c}: {m}" for c, m in self.entries)
        return f"{type(self).__name__}(n={self.weight}, {{{body}}})"


class Diamond(_LatticeFunction):
    __slots__ = ()

    def render(self) -> str:
        """Text picture with ``q`` increasing upward, ``p`` to the right."""
        if not self.entries:
            return "(empty)"
        ps = [p for (p, _), _ in self.entries]
        qs = [q for (_, q), _ in self.entries]
        p0, p1 = min(0, min(ps)), max(self.weight, max(ps))
        q0, q1 = min(0, min(qs)), max(self.weight, max(qs))
        width = max(len(str(m)) for _, m in self.entries)
        lines = []
        for q in range(q1, q0 - 1, -1):
            cells = [str(self[(p, q)]).rjust(width) if self[(p, q)] else ".".rjust(width) for p in range(p0, p1 + 1)]
            lines.append(" ".join(cells))
        return "\n".join(lines)


class PrimitiveDiamond(_LatticeFunction):
    """Multiplicities ``j^{p,q}`` of primitive tops, defined for ``p + q >= n``."""

    __slots__ = ()

    def __init__(self, weight, entries=()) -> None:
        super().__init__(weight, entries)
        n = self.weight
        for (p, q), _ in self.entries:
            level = p + q - n
            if level < 0:
                raise InvalidDiamond(f"primitive top {(p, q)} lies below the line p+q={n}")
            if not (level <= p <= n and level <= q <= n):
                raise InvalidDiamond(f"primitive top {(p, q)} outside the window [{level},{n}]^2")
            if self[(q, p)] != self[(p, q)]:
                raise InvalidDiamond(f"primitive tops not symmetric at {(p, q)}")

    def levels(self) -> list[int]:
        return sorted({p + q - self.weight for (p, q), _ in self.entries})

    def line(self, level: int) -> dict[Cell, int]:
        s = self.weight + level
        return {c: m for c, m in self.entries if c[0] + c[1] == s}


@dataclass(frozen=True)
class SubdomainSpec:
    """Level ``l`` primitive subdomain: weight ``n + l``, Hodge numbers from one top line."""

    level: int
    weight: int
    line_numbers: tuple[tuple[int, int], ...]

    def hodge_numbers(self) -> HodgeNumbers:
        return HodgeNumbers(self.weight, dict(self.line_numbers))

    def cells(self) -> dict[Cell, int]:
        return {(p, self.weight - p): c for p, c in self.line_numbers}


@dataclass(frozen=True)
class DiamondCheck:
    ok: bool
    violations: tuple[Violation, ...] = ()

    def __bool__(self) -> bool:
        return self.ok

    def failed(self) -> list[str]:
        return [v.condition for v in self.violations]


LatticeFunction = Union[Diamond, PrimitiveDiamond]


def validate_hodge_numbers(h: HodgeNumbers) -> DiamondCheck:
    out = []
    n = h.weight
    if n < 0:
        out.append(Violation("weight", n, "weight must be nonnegative"))
    for p, c in h.counts:
        if c < 0:
            out.append(Violation("nonnegative", p, f"h^{{{p},{n - p}}} = {c} < 0"))
    for p, c in h.counts:
        if not 0 <= p <= n:
            out.append(Violation("effective", p, f"h^{{{p},{n - p}}} = {c} outside 0 <= p <= {n}"))
            break
    for p, c in h.counts:
        if h[n - p] != c:
            out.append(Violation("conjugation symmetry", p, f"h^{{{p},{n - p}}} = {c} != h^{{{n - p},{p}}} = {h[n - p]}"))
            break
    if h.dim < 1:
        out.append(Violation("dimension", h.dim, "total dimension must be at least 1"))
    return DiamondCheck(not out, tuple(out))


def _require_valid(h: HodgeNumbers) -> None:
    verdict = validate_hodge_numbers(h)
    if not verdict:
        raise InvalidHodgeNumbers("; ".join(map(str, verdict.violations)))


def is_valid_diamond(h: HodgeNumbers, f: Diamond) -> DiamondCheck:
    """Check the four diamond conditions, reporting the first failing cell of each."""
    n = h.weight
    if f.weight != n:
        raise WeightMismatch(f"diamond weight {f.weight} != Hodge weight {n}")
    out = []

    cols = sorted({q for (_, q) in f.support} | set(range(0, n + 1)))
    for q in cols:
        total = sum(m for (_, qq), m in f if qq == q)
        if total != h.h(n - q, q):
            out.append(Violation("hd1", q, f"column q={q} sums to {total}, expected {h.h(n - q, q)}"))
            break
    for (p, q), m in f:
        if f[(q, p)] != m:
            out.append(Violation("hd2", (p, q), f"f{(p, q)} = {m} != f{(q, p)} = {f[(q, p)]}"))
            break
    for (p, q), m in f:
        mirror = (n - q, n - p)
        if f[mirror] != m:
            out.append(Violation("hd3", (p, q), f"f{(p, q)} = {m} != f{mirror} = {f[mirror]}"))
            break
    candidates = sorted({c for c in f.support} | {(p - 1, q - 1) for (p, q) in f.support})
    for p, q in candidates:
        if p + q >= n and f[(p, q)] < f[(p + 1, q + 1)]:
            out.append(Violation("hd4", (p, q), f"f{(p, q)} = {f[(p, q)]} < f{(p + 1, q + 1)} = {f[(p + 1, q + 1)]}"))
            break
    return DiamondCheck(not out, tuple(out))


def shift(f: LatticeFunction, a: int) -> Diamond:
    """``g(p, q) = f(p + a, q + a)``. Support may leave the effective window.

    Shifting a primitive diamond gives a plain lattice function, returned as a
    :class:`Diamond` (primitive-top invariants do not survive translation).
    """
    return Diamond(f.weight, (((p - a, q - a), m) for (p, q), m in f))


def primitive_decomposition(f: Diamond) -> PrimitiveDiamond:
    n = f.weight
    tops = {}
    for (p, q), m in f:
        if p + q >= n:
            j = m - f[(p + 1, q + 1)]
            if j < 0:
                raise InvalidDiamond(f"hd4 fails at {(p, q)}: f = {m} < f{(p + 1, q + 1)} = {f[(p + 1, q + 1)]}")
            tops[(p, q)] = j
    # cells just above the support may carry a negative value too
    for (p, q), m in f:
        cell = (p - 1, q - 1)
        if cell[0] + cell[1] >= n and cell not in tops and m > 0:
            raise InvalidDiamond(f"hd4 fails at {cell}: 0 < f{(p, q)} = {m}")
    return PrimitiveDiamond(n, tops)


def reconstruct(prim: PrimitiveDiamond) -> Diamond:
    n = prim.weight
    acc: dict[Cell, int] = {}
    for (p, q), j in prim:
        level = p + q - n
        for a in range(level + 1):
            cell = (p - a, q - a)
            acc[cell] = acc.get(cell, 0) + j
    return Diamond(n, acc)


def pure_diamond(h: HodgeNumbers) -> Diamond:
    return Diamond(h.weight, {(p, h.weight - p): c for p, c in h.counts})


def subdomain_specs(prim: PrimitiveDiamond) -> list[SubdomainSpec]:
    n = prim.weight
    specs = []
    for level in prim.levels():
        line = prim.line(level)
        specs.append(SubdomainSpec(level, n + level, tuple(sorted((p, m) for (p, _), m in line.items()))))
    return specs


def _top_orbits(n: int) -> list[Cell]:
    """Representatives ``p >= q`` of the possible primitive tops, outermost columns first."""
    tops = []
    for p in range(n, -1, -1):
        for q in range(p, -1, -1):
            level = p + q - n
            if level >= 0 and level <= q:
                tops.append((p, q))
    tops.sort(key=lambda c: (n - c[0], -c[1]))
    return tops


def _column_hits(n: int, top: Cell) -> dict[int, int]:
    """How many times an orbit of tops contributes to each column after reconstruction."""
    p, q = top
    hits: dict[int, int] = {}
    for P, Q in {(p, q), (q, p)}:
        for col in range(n - P, Q + 1):
            hits[col] = hits.get(col, 0) + 1
    return hits


def enumerate_diamonds(h: HodgeNumbers) -> list[Diamond]:
    """All valid diamonds for ``h`` in canonical (sorted-entries) order."""
    _require_valid(h)
    n = h.weight
    tops = _top_orbits(n)
    hits = [_column_hits(n, t) for t in tops]
    residual = {q: h.h(n - q, q) for q in range(n + 1)}
    closes_at: dict[int, list[int]] = {}
    last = {}
    for i, hs in enumerate(hits):
        for col in hs:
            last[col] = i
    for col, i in last.items():
        closes_at.setdefault(i, []).append(col)

    found: list[Diamond] = []
    values = [0] * len(tops)

    def walk(i: int) -> None:
        if i == len(tops):
            if all(v == 0 for v in residual.values()):
                prim = {}
                for (p, q), v in zip(tops, values):
                    if v:
                        prim[(p, q)] = v
                        prim[(q, p)] = v
                found.append(reconstruct(PrimitiveDiamond(n, prim)))
            return
        bound = min(residual[col] // k for col, k in hits[i].items())
        for v in range(bound + 1):
            values[i] = v
            for col, k in hits[i].items():
                residual[col] -= k * v
            if all(residual[col] == 0 for col in closes_at.get(i, ())):
                walk(i + 1)
            for col, k in hits[i].items():
                residual[col] += k * v
        values[i] = 0

    walk(0)
    if len(set(found)) != len(found):
        raise RuntimeError(f"distinct primitive families reconstructed to the same diamond for {h}")
    return sorted(found, key=Diamond.sort_key)
