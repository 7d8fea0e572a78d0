"""Explicit R-split polarized mixed Hodge structures over Q(i).

A witness is ``(Q, N, F)`` on ``V = Q^d``: a ``(-1)^n``-symmetric rational form,
a rational nilpotent ``N`` with ``Q(Nu, v) + Q(u, Nv) = 0``, and a Hodge
filtration ``F`` of ``C^d``. The weight filtration is always ``W(N)[-n]``.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from ..diamonds import Diamond, HodgeNumbers, InvalidDiamond, WeightMismatch, is_valid_diamond, primitive_decomposition
from .filtration import HodgeFiltration, IncreasingFiltration, jm_filtration, nilpotency_index
from .scalar import ONE, ZERO, Gauss, I, as_gauss
from .subspace import (
    DimensionMismatch,
    Matrix,
    Subspace,
    Vector,
    bilinear,
    conj_vec,
    determinant,
    identity,
    is_zero_matrix,
    mat,
    matmul,
    matpow,
    matvec,
    transpose,
)

__all__ = [
    "CheckItem",
    "CheckReport",
    "DegenerateForm",
    "DeligneSplitting",
    "NotInLieAlgebra",
    "NotMixedHodgeStructure",
    "PMHSWitness",
    "PairingForm",
    "ProbeResult",
    "ProfileMismatch",
    "check_pmhs",
    "deligne_splitting",
    "diamond_of",
    "exp_nilpotent",
    "hermitian_gram",
    "in_period_domain",
    "is_positive_definite",
    "orbit_probe",
    "period_domain_report",
    "realize_diamond",
    "weight_filtration",
]


class DegenerateForm(ValueError):
    pass


class NotInLieAlgebra(ValueError):
    pass


class NotMixedHodgeStructure(ValueError):
    pass


class ProfileMismatch(ValueError):
    pass


def _i_power(k: int) -> Gauss:
    return (ONE, I, -ONE, -I)[k % 4]


class PairingForm:
    """Nondegenerate rational form with ``Q(u, v) = (-1)^n Q(v, u)``."""

    __slots__ = ("matrix", "weight")

    def __init__(self, matrix: Iterable[Iterable], weight: int) -> None:
        m = mat(matrix)
        d = len(m)
        if any(len(row) != d for row in m):
            raise DimensionMismatch("pairing matrix must be square")
        if any(not x.is_real() for row in m for x in row):
            raise DegenerateForm("pairing must be defined over Q")
        sign = 1 if weight % 2 == 0 else -1
        for i in range(d):
            for j in range(d):
                if m[i][j] != sign * m[j][i]:
                    kind = "symmetric" if sign == 1 else "antisymmetric"
                    raise DegenerateForm(f"weight {weight} pairing must be {kind}; fails at ({i},{j})")
        if d and not determinant(m):
            raise DegenerateForm("pairing is degenerate")
        self.matrix = m
        self.weight = weight

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def __call__(self, u: Sequence, v: Sequence) -> Gauss:
        return bilinear(self.matrix, u, v)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PairingForm) and self.matrix == other.matrix and self.weight == other.weight

    def __hash__(self) -> int:
        return hash((self.matrix, self.weight))


def _in_lie_algebra(q: Matrix, n_mat: Matrix) -> bool:
    # N^T Q + Q N = 0
    lhs = matmul(transpose(n_mat), q)
    rhs = matmul(q, n_mat)
    return all(not (a + b) for ra, rb in zip(lhs, rhs) for a, b in zip(ra, rb))


@dataclass(frozen=True, eq=False)
class PMHSWitness:
    weight: int
    form: PairingForm
    nilpotent: Matrix
    hodge: HodgeFiltration

    def __post_init__(self) -> None:
        d = self.form.dim
        n_mat = mat(self.nilpotent)
        object.__setattr__(self, "nilpotent", n_mat)
        if self.form.weight != self.weight:
            raise WeightMismatch(f"pairing weight {self.form.weight} != witness weight {self.weight}")
        if len(n_mat) != d or any(len(r) != d for r in n_mat):
            raise DimensionMismatch(f"N must be {d}x{d}")
        if self.hodge.dim != d:
            raise DimensionMismatch(f"Hodge filtration lives in C^{self.hodge.dim}, expected C^{d}")
        if any(not x.is_real() for row in n_mat for x in row):
            raise NotInLieAlgebra("N must be rational")
        if not _in_lie_algebra(self.form.matrix, n_mat):
            raise NotInLieAlgebra("Q(Nu, v) + Q(u, Nv) != 0")

    @property
    def dimension(self) -> int:
        return self.form.dim

    def hodge_numbers(self) -> HodgeNumbers:
        n = self.weight
        return HodgeNumbers(n, {p: self.hodge[p].dim - self.hodge[p + 1].dim for p in range(0, n + 1)})

    def weight_filtration(self) -> IncreasingFiltration:
        return weight_filtration(self.nilpotent, self.weight)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PMHSWitness):
            return NotImplemented
        return (self.weight, self.form, self.nilpotent, self.hodge) == (other.weight, other.form, other.nilpotent, other.hodge)


def weight_filtration(n_mat: Matrix, weight: int) -> IncreasingFiltration:
    """``W(N)[-n]``."""
    return jm_filtration(n_mat).shifted(weight)


# --- Deligne splitting -------------------------------------------------------


@dataclass(frozen=True)
class DeligneSplitting:
    dim: int
    pieces: dict[tuple[int, int], Subspace] = field(default_factory=dict)

    def __getitem__(self, pq: tuple[int, int]) -> Subspace:
        return self.pieces.get(pq, Subspace.zero(self.dim))

    def dims(self) -> dict[tuple[int, int], int]:
        return {pq: s.dim for pq, s in sorted(self.pieces.items())}

    def span(self, cells: Iterable[tuple[int, int]]) -> Subspace:
        out = Subspace.zero(self.dim)
        for c in cells:
            out = out + self[c]
        return out

    def is_direct_sum(self) -> bool:
        total = sum(s.dim for s in self.pieces.values())
        return total == self.dim and self.span(self.pieces).is_full()

    def recovers(self, w: IncreasingFiltration, f: HodgeFiltration) -> bool:
        for p in range(f.lo - 1, f.hi + 2):
            if self.span(c for c in self.pieces if c[0] >= p) != f[p]:
                return False
        for l in range(w.lo - 1, w.hi + 2):
            if self.span(c for c in self.pieces if c[0] + c[1] <= l) != w[l]:
                return False
        return True

    def conjugation_congruence(self) -> bool:
        """``conj I^{p,q} = I^{q,p}`` modulo ``sum_{r<q, s<p} I^{r,s}``."""
        for (p, q), s in self.pieces.items():
            low = self.span(c for c in self.pieces if c[0] < q and c[1] < p)
            if s.conjugate() + low != self[(q, p)] + low:
                return False
        return True

    def is_real_split(self) -> bool:
        return all(s.conjugate() == self[(q, p)] for (p, q), s in self.pieces.items())


def deligne_splitting(w: IncreasingFiltration, f: HodgeFiltration) -> DeligneSplitting:
    """``I^{p,q} = F^p ∩ W_{p+q} ∩ (conj F^q ∩ W_{p+q} + conj U^{q-1}_{p+q-2})``.

    with ``U^a_b = sum_{j>=0} F^{a-j} ∩ W_{b-j}``. Raises
    :class:`NotMixedHodgeStructure` when the pieces do not form a direct sum.
    """
    if w.dim != f.dim:
        raise DimensionMismatch("filtrations live in different spaces")
    d = w.dim
    fbar = {p: f[p].conjugate() for p in range(f.lo, f.hi + 1)}

    def conj_f(q: int) -> Subspace:
        if q < f.lo:
            return Subspace.full(d)
        return fbar.get(q, Subspace.zero(d))

    def u(a: int, b: int) -> Subspace:
        out = Subspace.zero(d)
        j = 0
        while b - j >= w.lo:
            out = out + (f[a - j] & w[b - j])
            j += 1
        return out

    pieces = {}
    for p in range(f.lo, f.hi + 1):
        for q in range(f.lo, f.hi + 1):
            wl = w[p + q]
            if wl.is_zero():
                continue
            inner = (conj_f(q) & wl) + u(q - 1, p + q - 2).conjugate()
            piece = f[p] & wl & inner
            if not piece.is_zero():
                pieces[(p, q)] = piece
    split = DeligneSplitting(d, pieces)
    if not split.is_direct_sum():
        raise NotMixedHodgeStructure(
            f"Deligne pieces have total dimension {sum(s.dim for s in pieces.values())} in C^{d} "
            "or do not span; (W, F) is not a mixed Hodge structure"
        )
    return split


def diamond_of(w: IncreasingFiltration, f: HodgeFiltration, weight: int | None = None) -> Diamond:
    split = deligne_splitting(w, f)
    if weight is None:
        graded = w.graded_dims()
        weight = (min(graded) + max(graded)) // 2
    return Diamond(weight, split.dims())


# --- positivity ----------------------------------------------------------------


def hermitian_gram(basis: Sequence[Vector], form) -> list[list[Gauss]]:
    """``G[a][b] = form(v_a, v_b)`` for a sesquilinear ``form``."""
    return [[form(u, v) for v in basis] for u in basis]


def is_positive_definite(gram: Sequence[Sequence[Gauss]]) -> bool:
    """Sylvester's criterion: Hermitian with every leading principal minor real and > 0."""
    k = len(gram)
    for a in range(k):
        for b in range(k):
            if gram[a][b] != gram[b][a].conjugate():
                return False
    for m in range(1, k + 1):
        minor = determinant(tuple(tuple(row[:m]) for row in gram[:m]))
        if not minor.is_real() or minor.re <= 0:
            return False
    return True


# --- checks --------------------------------------------------------------------


@dataclass(frozen=True)
class CheckItem:
    name: str
    passed: bool
    detail: str = ""

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'} {self.name}" + (f": {self.detail}" if self.detail else "")


@dataclass(frozen=True)
class CheckReport:
    items: tuple[CheckItem, ...]

    @property
    def passed(self) -> bool:
        return all(i.passed for i in self.items)

    def __bool__(self) -> bool:
        return self.passed

    def failures(self) -> list[CheckItem]:
        return [i for i in self.items if not i.passed]

    def __getitem__(self, name: str) -> CheckItem:
        for i in self.items:
            if i.name == name:
                return i
        raise KeyError(name)

    def summary(self) -> str:
        return "\n".join(i.line() for i in self.items)


def _isotropy_failure(form: PairingForm, f: HodgeFiltration, n: int) -> str | None:
    for p in range(0, n + 2):
        if not f[p].pairs_to_zero(form.matrix, f[n + 1 - p]):
            return f"Q(F^{p}, F^{n + 1 - p}) != 0"
    return None


def _mhs_failure(w: IncreasingFiltration, f: HodgeFiltration) -> str | None:
    """F must induce a weight-l Hodge structure on every W_l / W_{l-1}."""
    for l in range(w.lo, w.hi + 1):
        top, low = w[l], w[l - 1]
        if top == low:
            continue
        for k in range(f.lo, f.hi + 2):
            a = (f[k] & top) + low
            b = (f[l + 1 - k].conjugate() & top) + low
            if a + b != top or (a & b) != low:
                return f"gr_{l}: F^{k} and conj F^{l + 1 - k} are not complementary"
    return None


def check_pmhs(w: PMHSWitness) -> CheckReport:
    """Check the PMHS axioms for ``(W(N)[-n], F, N)`` exactly."""
    n, d = w.weight, w.dimension
    q = w.form
    n_mat = w.nilpotent
    f = w.hodge
    items: list[CheckItem] = []

    nil = nilpotency_index(n_mat)
    items.append(CheckItem("(i) N^(n+1) = 0", nil <= n + 1, f"nilpotency index {nil}"))
    wf = weight_filtration(n_mat, n)
    items.append(CheckItem("(i) W = W(N)[-n]", True, f"graded dims {wf.graded_dims()}"))

    iso = _isotropy_failure(q, f, n)
    items.append(CheckItem("(ii) F is Q-isotropic", iso is None, iso or ""))
    bad = next((p for p in range(f.lo, f.hi + 1) if not f[p].image(n_mat) <= f[p - 1]), None)
    items.append(CheckItem("(ii) N F^p in F^(p-1)", bad is None, "" if bad is None else f"fails at p={bad}"))

    mhs = _mhs_failure(wf, f)
    items.append(CheckItem("MHS: F induces Hodge structures on gr W", mhs is None, mhs or ""))
    try:
        split = deligne_splitting(wf, f)
    except NotMixedHodgeStructure as exc:
        items.append(CheckItem("(iii) primitive parts polarized", False, str(exc)))
        return CheckReport(tuple(items))

    problems = []
    for level in range(0, d):
        m = n + level
        top, low = wf[m], wf[m - 1]
        if top == low:
            continue
        power = matpow(n_mat, level + 1)
        prim_quot = (top & wf[n - level - 3].preimage(power)).dim - low.dim
        n_l = matpow(n_mat, level)
        cells = [(p, m - p) for p in range(f.lo, f.hi + 1) if (p, m - p) in split.pieces]
        prim = {c: split[c] & Subspace.kernel(power) for c in cells}
        if sum(s.dim for s in prim.values()) != prim_quot:
            problems.append(f"l={level}: primitive pieces have total dim {sum(s.dim for s in prim.values())}, expected {prim_quot}")
            continue
        for (p, qq), s in prim.items():
            if s.conjugate() + low != prim.get((qq, p), Subspace.zero(d)) + low:
                problems.append(f"l={level}: conj P^{p},{qq} != P^{qq},{p} mod W_{m - 1}")

        def polarizing(u, v):
            return q(u, matvec(n_l, conj_vec(v)))

        for (p, qq), s in prim.items():
            if s.is_zero():
                continue
            c = _i_power(p - qq)
            gram = hermitian_gram(s.basis, lambda u, v: c * polarizing(u, v))
            if not is_positive_definite(gram):
                problems.append(f"l={level}: i^(p-q) Q(v, N^l conj v) not positive definite on P^{p},{qq}")
            for (r, t), s2 in prim.items():
                if (r, t) != (p, qq) and any(polarizing(u, v) for u in s.basis for v in s2.basis):
                    problems.append(f"l={level}: P^{p},{qq} and P^{r},{t} not orthogonal for Q(., N^l conj .)")
    items.append(CheckItem("(iii) primitive parts polarized", not problems, "; ".join(problems)))
    return CheckReport(tuple(items))


# --- realization -----------------------------------------------------------------


def _pair_block(p: int, q: int) -> tuple[int, int, int]:
    """``(B(e,e), B(f,f), B(e,f))`` for a conjugate pair of tops ``(p,q)``, ``p > q``.

    ``v = e + i f`` spans the top at ``(p,q)``; ``B(x, y) = Q(x, N^l y)``.
    Chosen so that ``B(v, v) = 0`` and ``i^(p-q) B(v, conj v) = 2``.
    """
    if (p - q) % 2 == 0:
        c = 1 if ((p - q) // 2) % 2 == 0 else -1
        return c, c, 0
    m = 1 if ((p - q - 1) // 2) % 2 == 0 else -1
    return 0, 0, m


def realize_diamond(h: HodgeNumbers, f: Diamond) -> PMHSWitness:
    """An R-split PMHS with Hodge diamond ``f``: one N-string per primitive top."""
    verdict = is_valid_diamond(h, f)
    if not verdict:
        raise InvalidDiamond("; ".join(map(str, verdict.violations)))
    n = h.weight
    prim = primitive_decomposition(f)

    blocks = []  # (kind, p, q, level, string start indices)
    d = 0
    for (p, q), mult in prim:
        level = p + q - n
        if p < q:
            continue
        for _ in range(mult):
            if p == q:
                blocks.append(("real", p, q, level, (d,)))
                d += level + 1
            else:
                blocks.append(("pair", p, q, level, (d, d + level + 1)))
                d += 2 * (level + 1)

    qm = [[Fraction(0)] * d for _ in range(d)]
    nm = [[Fraction(0)] * d for _ in range(d)]
    pieces: dict[int, list[list[Gauss]]] = {}  # Hodge index p -> vectors of I^{p,*}

    def unit(i: int, scale=ONE) -> list[Gauss]:
        v = [ZERO] * d
        v[i] = as_gauss(scale)
        return v

    def pair_strings(gen_starts, level, bmat):
        for x, sx in enumerate(gen_starts):
            for a in range(level):
                nm[sx + a + 1][sx + a] = Fraction(1)
            for y, sy in enumerate(gen_starts):
                if bmat[x][y]:
                    for a in range(level + 1):
                        qm[sx + a][sy + level - a] = Fraction((-1) ** a * bmat[x][y])

    for kind, p, q, level, starts in blocks:
        if kind == "real":
            pair_strings(starts, level, [[1]])
            for a in range(level + 1):
                pieces.setdefault(p - a, []).append(unit(starts[0] + a))
        else:
            bee, bff, bef = _pair_block(p, q)
            # B(f, e) = (-1)^(n+l) B(e, f), and n+l = p+q is odd exactly when bef != 0
            pair_strings(starts, level, [[bee, bef], [-bef, bff]])
            se, sf = starts
            for a in range(level + 1):
                v = unit(se + a)
                v[sf + a] = I
                vbar = unit(se + a)
                vbar[sf + a] = -I
                pieces.setdefault(p - a, []).append(v)
                pieces.setdefault(q - a, []).append(vbar)

    hodge = {}
    for k in range(0, n + 1):
        vecs = [v for r, vs in pieces.items() if r >= k for v in vs]
        hodge[k] = Subspace(d, vecs)
    form = PairingForm(qm, n)
    return PMHSWitness(n, form, tuple(tuple(Gauss(x) for x in row) for row in nm), HodgeFiltration(d, hodge))


# --- period domain and nilpotent orbits ------------------------------------------------


def period_domain_report(f: HodgeFiltration, q: PairingForm, h: HodgeNumbers) -> CheckReport:
    """Hodge-Riemann relations for ``F`` as a weight-``n`` Hodge filtration."""
    n = h.weight
    if f.dim != q.dim:
        raise DimensionMismatch("filtration and pairing live in different spaces")
    for p in range(0, n + 2):
        expected = sum(h[r] for r in range(p, n + 1))
        if f[p].dim != expected:
            raise ProfileMismatch(f"dim F^{p} = {f[p].dim}, expected {expected}")
    items = []
    bad = None
    for k in range(0, n + 2):
        a, b = f[k], f[n + 1 - k].conjugate()
        if not (a + b).is_full() or a.dim + b.dim != f.dim:
            bad = k
            break
    items.append(CheckItem("F^k + conj F^(n+1-k) = V", bad is None, "" if bad is None else f"fails at k={bad}"))
    iso = _isotropy_failure(q, f, n)
    items.append(CheckItem("Q(F^p, F^q) = 0 for p+q = n+1", iso is None, iso or ""))
    problems = []
    for p in range(0, n + 1):
        vpq = f[p] & f[n - p].conjugate()
        if vpq.dim != h[p]:
            problems.append(f"dim V^{p},{n - p} = {vpq.dim}, expected {h[p]}")
            continue
        if vpq.is_zero():
            continue
        c = _i_power(2 * p - n)
        gram = hermitian_gram(vpq.basis, lambda u, v: c * q(u, conj_vec(v)))
        if not is_positive_definite(gram):
            problems.append(f"i^(p-q) Q(v, conj v) not positive definite on V^{p},{n - p}")
    items.append(CheckItem("i^(p-q) Q(v, conj v) > 0", not problems, "; ".join(problems)))
    return CheckReport(tuple(items))


def in_period_domain(f: HodgeFiltration, q: PairingForm, h: HodgeNumbers) -> bool:
    return period_domain_report(f, q, h).passed


def exp_nilpotent(n_mat: Matrix, z) -> Matrix:
    """``exp(z N)`` as the finite sum ``sum_k z^k N^k / k!``."""
    z = as_gauss(z)
    d = len(n_mat)
    out = [list(r) for r in identity(d)]
    k = 1
    power = n_mat
    while not is_zero_matrix(power):
        coeff = z ** k / factorial(k)
        for i in range(d):
            for j in range(d):
                if power[i][j]:
                    out[i][j] = out[i][j] + coeff * power[i][j]
        k += 1
        power = matmul(power, n_mat)
    return tuple(tuple(r) for r in out)


@dataclass(frozen=True)
class ProbeResult:
    z: Gauss
    horizontal: bool
    member: bool
    detail: str = ""


def orbit_probe(w: PMHSWitness, samples: Iterable) -> list[ProbeResult]:
    """For each ``z``, whether ``exp(zN) F`` lies in the period domain of ``w``."""
    h = w.hodge_numbers()
    horizontal = all(w.hodge[p].image(w.nilpotent) <= w.hodge[p - 1] for p in range(w.hodge.lo, w.hodge.hi + 1))
    out = []
    for z in samples:
        z = as_gauss(z)
        moved = w.hodge.apply(exp_nilpotent(w.nilpotent, z))
        report = period_domain_report(moved, w.form, h)
        detail = "; ".join(i.line() for i in report.failures())
        out.append(ProbeResult(z, horizontal, report.passed, detail))
    return out
