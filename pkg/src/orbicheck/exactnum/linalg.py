"""Exact linear algebra over cyclotomic fields.

Vectors are plain tuples of :class:`CycNum`.  Matrices are immutable
:class:`CycMatrix` objects.  Subspaces are kept in reduced row echelon form,
which makes subspace equality a comparison of basis lists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

from .cyclotomic import ONE, ZERO, CycNum

Vector = tuple  # tuple[CycNum, ...]


class DimensionError(ValueError):
    """Operands have incompatible shapes."""


def as_cyc(x) -> CycNum:
    if isinstance(x, CycNum):
        return x
    return CycNum.rational(Fraction(x))


def vector(values: Iterable) -> Vector:
    return tuple(as_cyc(v) for v in values)


def _common_order(values: Iterable[CycNum]) -> int:
    order = 1
    for v in values:
        order = order * v.order // gcd(order, v.order)
    return order


def rref(rows: Sequence[Sequence[CycNum]], ncols: int) -> tuple[list[list[CycNum]], list[int]]:
    """Reduced row echelon form; zero rows dropped.

    The pivot in each column is the first nonzero entry at or below the
    current row, so the result is deterministic.
    """
    m = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r >= len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        piv = m[r][c]
        if piv != 1:
            inv = piv.inverse()
            m[r] = [x * inv if x else x for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y if y else x for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


class CycMatrix:
    """Immutable rectangular matrix with cyclotomic entries."""

    __slots__ = ("rows", "nrows", "ncols", "_hash")

    def __init__(self, rows: Iterable[Iterable], ncols: int | None = None):
        self.rows = tuple(tuple(as_cyc(x) for x in row) for row in rows)
        self.nrows = len(self.rows)
        if self.nrows:
            self.ncols = len(self.rows[0])
            if any(len(r) != self.ncols for r in self.rows):
                raise DimensionError("ragged matrix rows")
        else:
            self.ncols = ncols or 0
        if ncols is not None and ncols != self.ncols:
            raise DimensionError(f"expected {ncols} columns, got {self.ncols}")
        self._hash = None

    @classmethod
    def identity(cls, n: int) -> CycMatrix:
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> CycMatrix:
        return cls([[ZERO] * ncols for _ in range(nrows)], ncols=ncols)

    @classmethod
    def diag(cls, entries: Sequence) -> CycMatrix:
        n = len(entries)
        return cls([[as_cyc(entries[i]) if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence], nrows: int) -> CycMatrix:
        return cls([[col[i] for col in cols] for i in range(nrows)], ncols=len(cols))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    @property
    def order(self) -> int:
        """Cyclotomic order shared by all entries after lifting."""
        return _common_order(x for row in self.rows for x in row)

    def lift(self, order: int) -> CycMatrix:
        return CycMatrix([[x.lift(order) for x in row] for row in self.rows], ncols=self.ncols)

    def key(self) -> tuple:
        """Canonical encoding, comparable between matrices of one shape."""
        order = self.order
        return (order,) + tuple(x.lift(order).coeffs for row in self.rows for x in row)

    def columns(self) -> list[Vector]:
        return [tuple(row[j] for row in self.rows) for j in range(self.ncols)]

    @property
    def T(self) -> CycMatrix:
        return CycMatrix(self.columns(), ncols=self.nrows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other):
        if isinstance(other, CycMatrix):
            if self.ncols != other.nrows:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            cols = other.columns()
            return CycMatrix([[_dot(row, col) for col in cols] for row in self.rows],
                             ncols=other.ncols)
        v = tuple(other)
        if len(v) != self.ncols:
            raise DimensionError(f"cannot apply {self.shape} matrix to vector of length {len(v)}")
        return tuple(_dot(row, v) for row in self.rows)

    def __mul__(self, scalar):
        s = as_cyc(scalar)
        return CycMatrix([[x * s for x in row] for row in self.rows], ncols=self.ncols)

    __rmul__ = __mul__

    def __add__(self, other: CycMatrix) -> CycMatrix:
        if self.shape != other.shape:
            raise DimensionError(f"cannot add {self.shape} and {other.shape}")
        return CycMatrix([[x + y for x, y in zip(a, b)] for a, b in zip(self.rows, other.rows)],
                         ncols=self.ncols)

    def __sub__(self, other: CycMatrix) -> CycMatrix:
        return self + other * -1

    def __neg__(self):
        return self * -1

    def __pow__(self, k: int) -> CycMatrix:
        if not self.is_square:
            raise DimensionError("power of a non-square matrix")
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = CycMatrix.identity(self.nrows)
        while k:
            if k & 1:
                result = result @ base
            base = base @ base
            k >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, CycMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.shape, self.rows))
        return self._hash

    def rank(self) -> int:
        return len(rref(self.rows, self.ncols)[1])

    def is_identity(self) -> bool:
        return self.is_square and all(
            (x == 1) if i == j else not x
            for i, row in enumerate(self.rows) for j, x in enumerate(row))

    def inverse(self) -> CycMatrix:
        if not self.is_square:
            raise DimensionError("inverse of a non-square matrix")
        n = self.nrows
        aug = [list(row) + [ONE if i == j else ZERO for j in range(n)]
               for i, row in enumerate(self.rows)]
        red, pivots = rref(aug, 2 * n)
        if pivots[:n] != list(range(n)):
            raise ZeroDivisionError("matrix is singular")
        return CycMatrix([row[n:] for row in red])

    def __str__(self):
        return "[" + "; ".join(", ".join(str(x) for x in row) for row in self.rows) + "]"

    def __repr__(self):
        return f"CycMatrix({self})"


def _dot(a: Sequence[CycNum], b: Sequence[CycNum]) -> CycNum:
    acc = ZERO
    for x, y in zip(a, b):
        if x and y:
            acc = acc + x * y
    return acc


def block_diag(*blocks: CycMatrix) -> CycMatrix:
    n = sum(b.nrows for b in blocks)
    m = sum(b.ncols for b in blocks)
    rows = [[ZERO] * m for _ in range(n)]
    r = c = 0
    for b in blocks:
        for i in range(b.nrows):
            for j in range(b.ncols):
                rows[r + i][c + j] = b.rows[i][j]
        r += b.nrows
        c += b.ncols
    return CycMatrix(rows, ncols=m)


@dataclass(frozen=True)
class Subspace:
    """Subspace of an ambient coordinate space, basis in reduced echelon form."""

    ambient_dim: int
    basis: tuple  # tuple[Vector, ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence], ambient_dim: int) -> Subspace:
        rows = [vector(v) for v in vectors]
        for v in rows:
            if len(v) != ambient_dim:
                raise DimensionError(f"vector of length {len(v)} in ambient dimension {ambient_dim}")
        red, _ = rref(rows, ambient_dim)
        return cls(ambient_dim, tuple(tuple(r) for r in red))

    @classmethod
    def zero(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim, ())

    @classmethod
    def whole(cls, ambient_dim: int) -> Subspace:
        return cls.span(CycMatrix.identity(ambient_dim).rows, ambient_dim)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def pivots(self) -> list[int]:
        return [next(j for j, x in enumerate(b) if x) for b in self.basis]

    def is_zero(self) -> bool:
        return not self.basis

    def is_whole(self) -> bool:
        return self.dim == self.ambient_dim

    def __contains__(self, v) -> bool:
        return member(v, self)

    def contains(self, other: Subspace) -> bool:
        return all(member(b, self) for b in other.basis)

    def basis_matrix(self) -> CycMatrix:
        """Matrix whose columns are the basis vectors."""
        return CycMatrix.from_columns(self.basis, self.ambient_dim)

    def __str__(self):
        if not self.basis:
            return "{0}"
        return "span{" + ", ".join("(" + ", ".join(str(x) for x in b) + ")" for b in self.basis) + "}"


def kernel(m: CycMatrix) -> Subspace:
    """Null space of ``m`` as a canonical subspace of the column space."""
    red, pivots = rref(m.rows, m.ncols)
    free = [j for j in range(m.ncols) if j not in pivots]
    vecs = []
    for f in free:
        v = [ZERO] * m.ncols
        v[f] = ONE
        for row, p in zip(red, pivots):
            if row[f]:
                v[p] = -row[f]
        vecs.append(v)
    return Subspace.span(vecs, m.ncols)


def annihilator(v: Subspace) -> Subspace:
    # linear functionals vanishing on v (bilinear pairing, no conjugation)
    return kernel(CycMatrix(v.basis, ncols=v.ambient_dim))


def intersect(a: Subspace, b: Subspace) -> Subspace:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionError(f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")
    if a.is_whole():
        return b
    if b.is_whole() or a == b:
        return a
    constraints = annihilator(a).basis + annihilator(b).basis
    return kernel(CycMatrix(constraints, ncols=a.ambient_dim))


def apply(m: CycMatrix, v: Subspace) -> Subspace:
    """Image of the subspace ``v`` under ``m``."""
    if m.ncols != v.ambient_dim:
        raise DimensionError(f"cannot apply {m.shape} matrix in ambient dimension {v.ambient_dim}")
    return Subspace.span([m @ b for b in v.basis], m.nrows)


def member(v: Sequence, space: Subspace) -> bool:
    v = list(vector(v))
    if len(v) != space.ambient_dim:
        raise DimensionError(f"vector of length {len(v)} in ambient dimension {space.ambient_dim}")
    for b, p in zip(space.basis, space.pivots):
        c = v[p]
        if c:
            v = [x - c * y if y else x for x, y in zip(v, b)]
    return not any(v)


def solve(m: CycMatrix, v: Sequence) -> Vector | None:
    """A solution x of m @ x == v (free variables set to zero), or None."""
    v = vector(v)
    if len(v) != m.nrows:
        raise DimensionError(f"right-hand side of length {len(v)} for {m.shape} matrix")
    aug = [list(row) + [rhs] for row, rhs in zip(m.rows, v)]
    red, pivots = rref(aug, m.ncols + 1)
    if pivots and pivots[-1] == m.ncols:
        return None
    x = [ZERO] * m.ncols
    for row, p in zip(red, pivots):
        x[p] = row[-1]
    return tuple(x)


def restriction_is_identity(m: CycMatrix, space: Subspace) -> bool:
    return all(tuple(m @ b) == b for b in space.basis)


def agree_on(a: CycMatrix, b: CycMatrix, space: Subspace) -> bool:
    """True if ``a`` and ``b`` coincide on every vector of ``space``."""
    return all(a @ w == b @ w for w in space.basis)
