"""Linear algebra over GF(q) on matrices stored as tuples of index rows.

Subspaces are kept in reduced row echelon form, so equality of two
subspaces is equality of their basis grids.  Column vectors of F^[k] are
stored as plain tuples too; ``Subspace.side`` records which space a basis
lives in.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Sequence

from whamming.errors import check_cap
from whamming.gf import FieldSpec

Row = tuple[int, ...]
Matrix = tuple[Row, ...]

ROW = "row"
COL = "col"


def as_matrix(rows) -> Matrix:
    return tuple(tuple(int(x) for x in r) for r in rows)


def rref(field: FieldSpec, rows: Sequence[Sequence[int]], ncols: int | None = None):
    """Reduced row echelon form.

    Returns ``(matrix, rank, pivots)`` where ``matrix`` keeps the input shape
    (zero rows at the bottom) and ``pivots`` lists 0-based pivot columns.
    """
    work = [list(r) for r in rows]
    if ncols is None:
        ncols = len(work[0]) if work else 0
    add, mul, neg, inv = field.add_table, field.mul_table, field.neg_table, field.inv_table
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(work):
            break
        pr = next((i for i in range(r, len(work)) if work[i][c]), None)
        if pr is None:
            continue
        work[r], work[pr] = work[pr], work[r]
        s = inv[work[r][c]]
        if s != 1:
            work[r] = [mul[s][x] for x in work[r]]
        pivot_row = work[r]
        for i in range(len(work)):
            if i != r and work[i][c]:
                mrow = mul[neg[work[i][c]]]
                work[i] = [add[x][mrow[y]] for x, y in zip(work[i], pivot_row)]
        pivots.append(c)
        r += 1
    return tuple(tuple(row) for row in work), len(pivots), pivots


def rank(field: FieldSpec, rows) -> int:
    return rref(field, rows)[1]


def vec_add(field: FieldSpec, u: Sequence[int], v: Sequence[int]) -> Row:
    add = field.add_table
    return tuple(add[a][b] for a, b in zip(u, v))


def vec_scale(field: FieldSpec, c: int, v: Sequence[int]) -> Row:
    row = field.mul_table[c]
    return tuple(row[a] for a in v)


def vec_sub(field: FieldSpec, u: Sequence[int], v: Sequence[int]) -> Row:
    return vec_add(field, u, vec_scale(field, field.neg(1), v))


def vec_mat(field: FieldSpec, gamma: Sequence[int], mat: Sequence[Sequence[int]], ncols: int | None = None) -> Row:
    """Row vector times matrix."""
    if ncols is None:
        ncols = len(mat[0]) if mat else 0
    out = (0,) * ncols
    for g, row in zip(gamma, mat):
        if g:
            out = vec_add(field, out, vec_scale(field, g, row))
    return out


def mat_mul(field: FieldSpec, a: Sequence[Sequence[int]], b: Sequence[Sequence[int]], ncols: int | None = None) -> Matrix:
    if ncols is None:
        ncols = len(b[0]) if b else 0
    return tuple(vec_mat(field, row, b, ncols) for row in a)


def transpose(rows: Sequence[Sequence[int]], ncols: int | None = None) -> Matrix:
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    return tuple(tuple(r[j] for r in rows) for j in range(ncols))


def identity(k: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(k)) for i in range(k))


def qbinom(n: int, r: int, q: int) -> int:
    """Gaussian binomial coefficient; zero when r > n."""
    if r < 0 or n < 0 or r > n:
        return 0
    num = den = 1
    for i in range(1, r + 1):
        num *= q ** (i + n - r) - 1
        den *= q**i - 1
    return num // den


@dataclass(frozen=True)
class Subspace:
    """A subspace of F^k (``side="row"``) or F^[k] (``side="col"``).

    ``basis`` is the RREF basis with exactly ``dim`` rows.
    """

    field: FieldSpec
    ambient_dim: int
    basis: Matrix
    side: str = ROW

    @property
    def dim(self) -> int:
        return len(self.basis)

    @classmethod
    def span(cls, field: FieldSpec, vectors, ambient_dim: int, side: str = ROW) -> Subspace:
        vectors = as_matrix(vectors)
        for v in vectors:
            if len(v) != ambient_dim:
                raise ValueError(f"vector {v} does not have length {ambient_dim}")
        red, rk, _ = rref(field, vectors, ambient_dim)
        return cls(field, ambient_dim, red[:rk], side)

    @classmethod
    def zero(cls, field: FieldSpec, k: int, side: str = ROW) -> Subspace:
        return cls(field, k, (), side)

    @classmethod
    def full(cls, field: FieldSpec, k: int, side: str = ROW) -> Subspace:
        return cls(field, k, identity(k), side)

    def __len__(self) -> int:
        return self.field.q**self.dim

    def __contains__(self, v) -> bool:
        v = tuple(v)
        if len(v) != self.ambient_dim:
            return False
        return rank(self.field, self.basis + (v,)) == self.dim

    def pivots(self) -> list[int]:
        return [next(j for j, x in enumerate(row) if x) for row in self.basis]

    def vectors(self) -> Iterator[Row]:
        """Every vector of the subspace, coefficients in ``itertools.product`` order."""
        zero = (0,) * self.ambient_dim
        for coeffs in itertools.product(range(self.field.q), repeat=self.dim):
            yield vec_mat(self.field, coeffs, self.basis, self.ambient_dim) if self.dim else zero

    def to_json(self) -> dict:
        return {"side": self.side, "ambient_dim": self.ambient_dim, "basis": [list(r) for r in self.basis]}


def _rref_profiles(field: FieldSpec, k: int, m: int) -> Iterator[Matrix]:
    q = field.q
    for pivots in itertools.combinations(range(k), m):
        # Free slots: entries right of a pivot that are not themselves pivot columns.
        free = [(r, c) for r, pc in enumerate(pivots) for c in range(pc + 1, k) if c not in pivots]
        for values in itertools.product(range(q), repeat=len(free)):
            grid = [[0] * k for _ in range(m)]
            for r, pc in enumerate(pivots):
                grid[r][pc] = 1
            for (r, c), x in zip(free, values):
                grid[r][c] = x
            yield tuple(tuple(row) for row in grid)


def subspaces(k: int, m: int, field: FieldSpec, side: str = ROW, cap: int | None = None) -> list[Subspace]:
    """All m-dimensional subspaces of F^k in canonical order."""
    if not 0 <= m <= k:
        raise ValueError(f"dimension {m} outside [0, {k}]")
    check_cap(f"subspaces({k}, {m}) over GF({field.q})", qbinom(k, m, field.q), cap)
    return [Subspace(field, k, b, side) for b in _rref_profiles(field, k, m)]


def subspaces_containing(a: Subspace, m: int, cap: int | None = None) -> list[Subspace]:
    """All m-dimensional subspaces containing ``a``.

    Uses the complement spanned by the unit vectors at ``a``'s non-pivot
    coordinates: every B >= A is A + W for exactly one (m - dim A)-dimensional
    W inside that complement.
    """
    k, field = a.ambient_dim, a.field
    if not a.dim <= m <= k:
        raise ValueError(f"dimension {m} outside [{a.dim}, {k}]")
    check_cap(f"subspaces containing a {a.dim}-dim subspace", qbinom(k - a.dim, m - a.dim, field.q), cap)
    free_coords = [j for j in range(k) if j not in a.pivots()]
    out = []
    for w in _rref_profiles(field, len(free_coords), m - a.dim):
        lifted = []
        for row in w:
            v = [0] * k
            for j, x in zip(free_coords, row):
                v[j] = x
            lifted.append(v)
        out.append(Subspace.span(field, a.basis + as_matrix(lifted), k, a.side))
    return out


def null_space(field: FieldSpec, rows: Sequence[Sequence[int]], ncols: int) -> Matrix:
    """Basis of {x : rows . x = 0}, one vector per free column."""
    red, rk, pivots = rref(field, rows, ncols)
    basis = []
    for free in (j for j in range(ncols) if j not in pivots):
        v = [0] * ncols
        v[free] = 1
        for r, pc in enumerate(pivots):
            v[pc] = field.neg(red[r][free])
        basis.append(tuple(v))
    return tuple(basis)


def dual(u: Subspace) -> Subspace:
    """The annihilator under the standard bilinear form; flips the side."""
    other = COL if u.side == ROW else ROW
    return Subspace.span(u.field, null_space(u.field, u.basis, u.ambient_dim), u.ambient_dim, other)


def point_of(field: FieldSpec, v: Sequence[int]) -> Row:
    """Canonical representative of the line through nonzero ``v`` (leading entry 1)."""
    lead = next((x for x in v if x), 0)
    if not lead:
        raise ValueError("the zero vector spans no projective point")
    return vec_scale(field, field.inv(lead), v)


def projective_points(k: int, field: FieldSpec) -> list[Row]:
    """Normalized representatives of every 1-dimensional subspace of F^[k]."""
    if k < 1:
        raise ValueError("k must be at least 1")
    points = []
    for lead in range(k):
        for tail in itertools.product(range(field.q), repeat=k - lead - 1):
            points.append((0,) * lead + (1,) + tail)
    return points
