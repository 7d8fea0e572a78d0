"""JSON documents for diamonds and PMHS witnesses.

Diamond::

    {"weight": n, "hodge_numbers": [h^{n,0}, ..., h^{0,n}],
     "entries": [{"p": p, "q": q, "m": m}, ...]}

Witness: ``dimension``, ``weight``, ``Q`` and ``N`` as row-major lists of exact
scalar strings, and ``F`` as ``[{"p": p, "basis": [[...], ...]}, ...]`` for
``p = 0..n``. Scalars follow ``rational := int | int "/" int`` and
``scalar := rational | rational ("+"|"-") rational "i"``.
"""

from __future__ import annotations

import json
from typing import Any

from .diamonds import Diamond, HodgeNumbers
from .linalg.filtration import HodgeFiltration
from .linalg.pmhs import PairingForm, PMHSWitness
from .linalg.scalar import format_scalar, parse_scalar
from .linalg.subspace import Subspace

__all__ = [
    "DocumentError",
    "diamond_from_doc",
    "diamond_to_doc",
    "dumps",
    "load_diamond",
    "witness_from_doc",
    "witness_to_doc",
]


class DocumentError(ValueError):
    pass


def dumps(obj: Any) -> str:
    """Canonical text form: 2-space indent, sorted nothing, trailing newline."""
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def diamond_to_doc(h: HodgeNumbers, f: Diamond) -> dict:
    return {
        "weight": h.weight,
        "hodge_numbers": list(h.as_tuple()),
        "entries": [{"p": p, "q": q, "m": m} for (p, q), m in f],
    }


def _int(doc: dict, key: str) -> int:
    if key not in doc:
        raise DocumentError(f"missing field {key!r}")
    value = doc[key]
    if isinstance(value, bool) or not isinstance(value, int):
        raise DocumentError(f"field {key!r} must be an integer")
    return value


def diamond_from_doc(doc: Any) -> tuple[HodgeNumbers, Diamond]:
    if not isinstance(doc, dict):
        raise DocumentError("diamond document must be a JSON object")
    extra = set(doc) - {"weight", "hodge_numbers", "entries"}
    if extra:
        raise DocumentError(f"unknown fields {sorted(extra)}")
    n = _int(doc, "weight")
    hn = doc.get("hodge_numbers")
    if not isinstance(hn, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in hn):
        raise DocumentError("hodge_numbers must be a list of integers")
    if len(hn) != n + 1:
        raise DocumentError(f"hodge_numbers has {len(hn)} entries, expected weight+1 = {n + 1}")
    entries = doc.get("entries")
    if not isinstance(entries, list):
        raise DocumentError("entries must be a list")
    cells: dict[tuple[int, int], int] = {}
    for e in entries:
        if not isinstance(e, dict) or set(e) != {"p", "q", "m"}:
            raise DocumentError(f"entry {e!r} must have exactly the fields p, q, m")
        p, q, m = _int(e, "p"), _int(e, "q"), _int(e, "m")
        if m <= 0:
            raise DocumentError(f"entry at ({p},{q}) has non-positive multiplicity {m}")
        if (p, q) in cells:
            raise DocumentError(f"duplicate entry at ({p},{q})")
        cells[(p, q)] = m
    return HodgeNumbers.from_tuple(hn, weight=n), Diamond(n, cells)


def load_diamond(text: str, index: int | None = None) -> tuple[HodgeNumbers, Diamond]:
    """Parse one document, or item ``index`` of a JSON array of documents."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentError(f"not valid JSON: {exc}") from None
    if isinstance(data, list):
        if index is None:
            if len(data) != 1:
                raise DocumentError(f"file holds {len(data)} diamonds; select one with FILE#INDEX")
            index = 0
        if not 0 <= index < len(data):
            raise DocumentError(f"index {index} out of range for {len(data)} diamonds")
        data = data[index]
    elif index not in (None, 0):
        raise DocumentError("index given but the file holds a single diamond")
    return diamond_from_doc(data)


def _matrix_strings(m) -> list[list[str]]:
    return [[format_scalar(x) for x in row] for row in m]


def _parse_matrix(rows: Any, d: int, name: str):
    if not isinstance(rows, list) or len(rows) != d:
        raise DocumentError(f"{name} must have {d} rows")
    out = []
    for row in rows:
        if not isinstance(row, list) or len(row) != d or not all(isinstance(x, str) for x in row):
            raise DocumentError(f"{name} rows must be lists of {d} scalar strings")
        try:
            out.append(tuple(parse_scalar(x) for x in row))
        except (ValueError, ZeroDivisionError) as exc:
            raise DocumentError(f"{name}: {exc}") from None
    return tuple(out)


def witness_to_doc(w: PMHSWitness) -> dict:
    return {
        "dimension": w.dimension,
        "weight": w.weight,
        "Q": _matrix_strings(w.form.matrix),
        "N": _matrix_strings(w.nilpotent),
        "F": [{"p": p, "basis": _matrix_strings(w.hodge[p].basis)} for p in range(0, w.weight + 1)],
    }


def witness_from_doc(doc: Any) -> PMHSWitness:
    if not isinstance(doc, dict):
        raise DocumentError("witness document must be a JSON object")
    d, n = _int(doc, "dimension"), _int(doc, "weight")
    q = _parse_matrix(doc.get("Q"), d, "Q")
    nm = _parse_matrix(doc.get("N"), d, "N")
    fl = doc.get("F")
    if not isinstance(fl, list):
        raise DocumentError("F must be a list")
    spaces = {}
    for item in fl:
        if not isinstance(item, dict) or set(item) != {"p", "basis"}:
            raise DocumentError("F items must have exactly the fields p, basis")
        p = _int(item, "p")
        basis = item["basis"]
        if not isinstance(basis, list):
            raise DocumentError("basis must be a list of vectors")
        vecs = []
        for v in basis:
            if not isinstance(v, list) or len(v) != d:
                raise DocumentError(f"basis vectors of F^{p} must have length {d}")
            vecs.append(tuple(parse_scalar(x) for x in v))
        spaces[p] = Subspace(d, vecs)
    try:
        return PMHSWitness(n, PairingForm(q, n), nm, HodgeFiltration(d, spaces))
    except ValueError as exc:
        raise DocumentError(f"invalid witness: {exc}") from None
