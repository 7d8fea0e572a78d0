"""Increasing/decreasing filtrations and the Jacobson-Morosov weight filtration."""

from __future__ import annotations

from collections.abc import Mapping

from .subspace import Matrix, Subspace, identity, is_zero_matrix, matmul, matpow

__all__ = [
    "HodgeFiltration",
    "IncreasingFiltration",
    "NotNilpotent",
    "jm_filtration",
    "jm_filtration_inductive",
    "nilpotency_index",
]


class NotNilpotent(ValueError):
    pass


class IncreasingFiltration:
    """``W_l`` stored on a finite index window; zero below it and full above it."""

    __slots__ = ("dim", "spaces", "lo", "hi")

    def __init__(self, dim: int, spaces: Mapping[int, Subspace]) -> None:
        self.dim = dim
        keys = sorted(spaces)
        for a, b in zip(keys, keys[1:]):
            if b != a + 1:
                raise ValueError("filtration indices must be contiguous")
            if not spaces[a] <= spaces[b]:
                raise ValueError(f"W_{a} is not contained in W_{b}")
        # trim to [last zero + 1, first full]
        kept = {k: spaces[k] for k in keys if not spaces[k].is_zero()}
        full = [k for k in kept if kept[k].is_full()]
        if full:
            kept = {k: s for k, s in kept.items() if k <= full[0]}
        self.spaces = kept
        self.lo = min(kept) if kept else 0
        self.hi = max(kept) if kept else 0
        if kept and not kept[self.hi].is_full():
            raise ValueError("top of an increasing filtration must be the whole space")

    def __getitem__(self, k: int) -> Subspace:
        if k in self.spaces:
            return self.spaces[k]
        return Subspace.zero(self.dim) if k < self.lo else Subspace.full(self.dim)

    def shifted(self, k: int) -> IncreasingFiltration:
        """``W[-k]`` with ``W[-k]_l = W_{l-k}``."""
        return IncreasingFiltration(self.dim, {l + k: s for l, s in self.spaces.items()})

    def graded_dims(self) -> dict[int, int]:
        return {l: self[l].dim - self[l - 1].dim for l in range(self.lo, self.hi + 1) if self[l].dim != self[l - 1].dim}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, IncreasingFiltration):
            return NotImplemented
        return self.dim == other.dim and self.spaces == other.spaces

    def __repr__(self) -> str:
        return f"IncreasingFiltration(dims={ {k: s.dim for k, s in self.spaces.items()} })"


class HodgeFiltration:
    """Decreasing ``F^p``: full at and below ``lo``, zero above ``hi``."""

    __slots__ = ("dim", "spaces", "lo", "hi")

    def __init__(self, dim: int, spaces: Mapping[int, Subspace]) -> None:
        self.dim = dim
        keys = sorted(spaces)
        for a, b in zip(keys, keys[1:]):
            if b != a + 1:
                raise ValueError("filtration indices must be contiguous")
            if not spaces[b] <= spaces[a]:
                raise ValueError(f"F^{b} is not contained in F^{a}")
        kept = {k: spaces[k] for k in keys if not spaces[k].is_zero()}
        full = [k for k in kept if kept[k].is_full()]
        if full:
            kept = {k: s for k, s in kept.items() if k >= full[-1]}
        self.spaces = kept
        self.lo = min(kept) if kept else 0
        self.hi = max(kept) if kept else -1
        if kept and not kept[self.lo].is_full():
            raise ValueError("bottom of a Hodge filtration must be the whole space")

    def __getitem__(self, p: int) -> Subspace:
        if p in self.spaces:
            return self.spaces[p]
        return Subspace.full(self.dim) if p < self.lo else Subspace.zero(self.dim)

    def profile(self) -> dict[int, int]:
        return {p: s.dim for p, s in self.spaces.items()}

    def apply(self, g: Matrix) -> HodgeFiltration:
        return HodgeFiltration(self.dim, {p: s.image(g) for p, s in self.spaces.items()})

    def conjugate_spaces(self) -> dict[int, Subspace]:
        return {p: s.conjugate() for p, s in self.spaces.items()}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HodgeFiltration):
            return NotImplemented
        return self.dim == other.dim and self.spaces == other.spaces

    def __repr__(self) -> str:
        return f"HodgeFiltration(dims={self.profile()})"


def nilpotency_index(n_mat: Matrix) -> int:
    """Smallest ``k`` with ``N^k = 0``; raises :class:`NotNilpotent`."""
    d = len(n_mat)
    power = identity(d)
    for k in range(d + 1):
        if is_zero_matrix(power):
            return k
        power = matmul(power, n_mat)
    raise NotNilpotent(f"N^{d} != 0")


def jm_filtration(n_mat: Matrix) -> IncreasingFiltration:
    """``W(N)`` as ``W_l = sum_{a>=0} im N^a  ∩  ker N^{l+1+a}``.

    In an N-string of length L the vector ``N^c x`` has weight ``L-1-2c``;
    ``im N^a ∩ ker N^b`` collects exactly the string vectors of weight at most
    ``b-1-a``, so the sum over ``b = l+1+a`` is the span of all weights ``<= l``.
    """
    d = len(n_mat)
    nil = nilpotency_index(n_mat)
    if nil <= 1:
        return IncreasingFiltration(d, {0: Subspace.full(d)})
    k = nil - 1
    powers = [matpow(n_mat, a) for a in range(nil + 1)]
    images = [Subspace.image_of(p) for p in powers]
    kernels = [Subspace.kernel(p) for p in powers]

    def ker(b: int) -> Subspace:
        return kernels[min(b, nil)] if b >= 0 else Subspace.zero(d)

    spaces = {}
    for l in range(-k - 1, k + 1):
        w = Subspace.zero(d)
        for a in range(nil):
            b = l + 1 + a
            if b > 0:
                w = w + (images[a] & ker(b))
        spaces[l] = w
    return IncreasingFiltration(d, spaces)


def jm_filtration_inductive(n_mat: Matrix) -> IncreasingFiltration:
    """``W(N)`` by descending induction from ``N^k != 0 = N^{k+1}``.

    ``W_k = V``, ``W_{-k-1} = 0``, then for ``l = k-1, ..., 0``::

        W_l      = {v in W_{l+1} : N^{l+1} v in W_{-l-2}}
        W_{-l-1} = N^{l+1} (W_{l+1})

    (exponent ``l+1`` in the first step and ``W_{l+1}`` in the second; the
    variants with ``N^l`` or ``N^{l+1}(W_l)`` already fail on Jordan blocks of
    size 3 and 4 respectively).
    """
    d = len(n_mat)
    nil = nilpotency_index(n_mat)
    if nil <= 1:
        return IncreasingFiltration(d, {0: Subspace.full(d)})
    k = nil - 1
    w = {k: Subspace.full(d), -k - 1: Subspace.zero(d)}
    for l in range(k - 1, -1, -1):
        p = matpow(n_mat, l + 1)
        w[l] = w[l + 1] & w[-l - 2].preimage(p)
        w[-l - 1] = w[l + 1].image(p)
    return IncreasingFiltration(d, w)
