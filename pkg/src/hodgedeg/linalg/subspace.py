"""Exact matrices and subspaces of ``C^d`` over the Gaussian rationals.

Vectors are tuples of :class:`Gauss`; matrices are tuples of rows and act on
column vectors. A :class:`Subspace` stores its basis in reduced row-echelon
form, so two subspaces are equal exactly when their bases are equal.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from fractions import Fraction

from .scalar import ONE, ZERO, Gauss, as_gauss

__all__ = [
    "DimensionMismatch",
    "Matrix",
    "Subspace",
    "Vector",
    "bilinear",
    "conj_vec",
    "determinant",
    "identity",
    "mat",
    "matmul",
    "matpow",
    "matvec",
    "nullspace",
    "rref",
    "transpose",
]

Vector = tuple[Gauss, ...]
Matrix = tuple[tuple[Gauss, ...], ...]


class DimensionMismatch(ValueError):
    pass


def vec(values: Iterable) -> Vector:
    return tuple(as_gauss(x) for x in values)


def mat(rows: Iterable[Iterable]) -> Matrix:
    out = tuple(vec(r) for r in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise DimensionMismatch("ragged matrix")
    return out


def identity(d: int) -> Matrix:
    return tuple(tuple(ONE if i == j else ZERO for j in range(d)) for i in range(d))


def zeros(r: int, c: int) -> Matrix:
    return tuple(tuple(ZERO for _ in range(c)) for _ in range(r))


def transpose(m: Matrix) -> Matrix:
    return tuple(zip(*m)) if m else ()


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(_dot(row, col) for col in bt) for row in a)


def matvec(m: Matrix, v: Sequence[Gauss]) -> Vector:
    if m and len(m[0]) != len(v):
        raise DimensionMismatch(f"matrix with {len(m[0])} columns applied to vector of length {len(v)}")
    return tuple(_dot(row, v) for row in m)


def matpow(m: Matrix, k: int) -> Matrix:
    out = identity(len(m))
    for _ in range(k):
        out = matmul(out, m)
    return out


def is_zero_matrix(m: Matrix) -> bool:
    return not any(x for row in m for x in row)


def conj_vec(v: Sequence[Gauss]) -> Vector:
    return tuple(x.conjugate() for x in v)


def bilinear(q: Matrix, u: Sequence[Gauss], v: Sequence[Gauss]) -> Gauss:
    """``u^T q v`` with no conjugation."""
    return _dot(u, matvec(q, v))


def _dot(u: Sequence[Gauss], v: Sequence[Gauss]) -> Gauss:
    re = Fraction(0)
    im = Fraction(0)
    for a, b in zip(u, v):
        if not a or not b:
            continue
        if a.im or b.im:
            re += a.re * b.re - a.im * b.im
            im += a.re * b.im + a.im * b.re
        else:
            re += a.re * b.re
    return Gauss(re, im)


def rref(rows: Iterable[Sequence[Gauss]], ncols: int) -> list[Vector]:
    """Nonzero rows of the reduced row-echelon form."""
    m = [list(r) for r in rows]
    for r in m:
        if len(r) != ncols:
            raise DimensionMismatch(f"row of length {len(r)} in a {ncols}-column system")
    out_rows = 0
    for c in range(ncols):
        piv = next((i for i in range(out_rows, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[out_rows], m[piv] = m[piv], m[out_rows]
        prow = m[out_rows]
        inv = prow[c].inverse()
        if prow[c] != ONE:
            prow[:] = [x * inv for x in prow]
        for i in range(len(m)):
            if i != out_rows and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y if y else x for x, y in zip(m[i], prow)]
        out_rows += 1
        if out_rows == len(m):
            break
    return [tuple(r) for r in m[:out_rows]]


def nullspace(m: Sequence[Sequence[Gauss]], ncols: int) -> list[Vector]:
    """Basis of ``{x : m x = 0}``."""
    red = rref(m, ncols)
    pivots = [next(c for c, x in enumerate(r) if x) for r in red]
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        x = [ZERO] * ncols
        x[fc] = ONE
        for r, pc in zip(red, pivots):
            x[pc] = -r[fc]
        basis.append(tuple(x))
    return basis


def determinant(m: Matrix) -> Gauss:
    a = [[as_gauss(x) for x in r] for r in m]
    n = len(a)
    det = ONE
    for c in range(n):
        piv = next((i for i in range(c, n) if a[i][c]), None)
        if piv is None:
            return ZERO
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            det = -det
        det = det * a[c][c]
        inv = a[c][c].inverse()
        for i in range(c + 1, n):
            if a[i][c]:
                f = a[i][c] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return det


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    aug = [list(r) + list(e) for r, e in zip(m, identity(n))]
    red = rref(aug, 2 * n)
    if len(red) < n or any(red[i][i] != ONE for i in range(n)):
        raise ZeroDivisionError("singular matrix")
    return tuple(tuple(r[n:]) for r in red)


class Subspace:
    """A subspace of ``C^dim`` with canonical (RREF) basis."""

    __slots__ = ("dim_ambient", "basis", "_hash")

    def __init__(self, dim_ambient: int, vectors: Iterable[Sequence] = ()) -> None:
        self.dim_ambient = dim_ambient
        self.basis: tuple[Vector, ...] = tuple(rref((vec(v) for v in vectors), dim_ambient))
        self._hash = None

    @classmethod
    def zero(cls, d: int) -> Subspace:
        return cls(d)

    @classmethod
    def full(cls, d: int) -> Subspace:
        return cls(d, identity(d))

    @classmethod
    def kernel(cls, m: Matrix) -> Subspace:
        d = len(m[0]) if m else 0
        return cls(d, nullspace(m, d))

    @classmethod
    def image_of(cls, m: Matrix) -> Subspace:
        return cls(len(m), transpose(m))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def is_zero(self) -> bool:
        return not self.basis

    def is_full(self) -> bool:
        return self.dim == self.dim_ambient

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim} in C^{self.dim_ambient})"

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.dim_ambient == other.dim_ambient and self.basis == other.basis

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.dim_ambient, self.basis))
        return self._hash

    def _check(self, other: Subspace) -> None:
        if self.dim_ambient != other.dim_ambient:
            raise DimensionMismatch(f"ambient dimensions {self.dim_ambient} and {other.dim_ambient}")

    def __add__(self, other: Subspace) -> Subspace:
        self._check(other)
        if other.is_zero() or self.is_full():
            return self
        if self.is_zero():
            return other
        return Subspace(self.dim_ambient, self.basis + other.basis)

    def __and__(self, other: Subspace) -> Subspace:
        self._check(other)
        if self.is_zero() or other.is_full():
            return self
        if other.is_zero() or self.is_full():
            return other
        # A ∩ B = ann(ann A + ann B) for the (non-conjugating) dot pairing
        return self.annihilator().__add__(other.annihilator()).annihilator()

    def annihilator(self) -> Subspace:
        return Subspace(self.dim_ambient, nullspace(self.basis, self.dim_ambient))

    def __le__(self, other: Subspace) -> bool:
        self._check(other)
        return (self + other).dim == other.dim

    def __ge__(self, other: Subspace) -> bool:
        return other <= self

    def contains(self, v: Sequence) -> bool:
        return Subspace(self.dim_ambient, self.basis + (vec(v),)).dim == self.dim

    def conjugate(self) -> Subspace:
        if all(x.is_real() for row in self.basis for x in row):
            return self
        return Subspace(self.dim_ambient, (conj_vec(v) for v in self.basis))

    def is_real(self) -> bool:
        return self.conjugate() == self

    def image(self, m: Matrix) -> Subspace:
        if m and len(m[0]) != self.dim_ambient:
            raise DimensionMismatch("matrix does not act on this ambient space")
        return Subspace(len(m), (matvec(m, v) for v in self.basis))

    def preimage(self, m: Matrix) -> Subspace:
        """``{v : m v in self}``."""
        d = len(m[0])
        if len(m) != self.dim_ambient:
            raise DimensionMismatch("matrix target does not match this ambient space")
        ann = nullspace(self.basis, self.dim_ambient)
        # rows a with a . (m v) = 0  <=>  (a m) . v = 0
        rows = [tuple(_dot(a, col) for col in transpose(m)) for a in ann]
        return Subspace(d, nullspace(rows, d))

    def perp(self, q: Matrix) -> Subspace:
        """``{v : q(v, s) = 0 for all s in self}`` for the bilinear form ``q``."""
        if len(q) != self.dim_ambient:
            raise DimensionMismatch("pairing size does not match ambient dimension")
        rows = [matvec(q, s) for s in self.basis]
        return Subspace(self.dim_ambient, nullspace(rows, self.dim_ambient))

    def pairs_to_zero(self, q: Matrix, other: Subspace) -> bool:
        return all(not bilinear(q, u, v) for u in self.basis for v in other.basis)
