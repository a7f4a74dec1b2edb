"""Exact dense linear algebra over the rationals.

Everything here is immutable and pure: matrices are flat tuples of
`fractions.Fraction`, subspaces are kept in reduced row echelon form so that
equality of subspaces is entry-wise equality of their canonical bases.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .errors import ShapeError

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def frac(x) -> Fraction:
    """Coerce ints / strings / Fractions to an exact scalar."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


class Matrix:
    """Dense row-major matrix of exact rationals."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, rows, cols, data):
        data = tuple(frac(x) for x in data)
        if len(data) != rows * cols:
            raise ShapeError(f"need {rows * cols} entries, got {len(data)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "data", data)

    def __setattr__(self, *a):
        raise AttributeError("Matrix is immutable")

    @classmethod
    def from_rows(cls, rows_list) -> "Matrix":
        rows = len(rows_list)
        cols = len(rows_list[0]) if rows else 0
        flat = []
        for r in rows_list:
            if len(r) != cols:
                raise ShapeError("ragged rows")
            flat.extend(r)
        return cls(rows, cols, flat)

    @classmethod
    def zeros(cls, rows, cols) -> "Matrix":
        return cls(rows, cols, [ZERO] * (rows * cols))

    @classmethod
    def identity(cls, n) -> "Matrix":
        return cls(n, n, [ONE if i == j else ZERO for i in range(n) for j in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.data[i * self.cols + j]

    def row(self, i):
        return self.data[i * self.cols : (i + 1) * self.cols]

    def col(self, j):
        return tuple(self.data[i * self.cols + j] for i in range(self.rows))

    def row_list(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.data))

    def __repr__(self):
        rows = [" ".join(str(x) for x in self.row(i)) for i in range(self.rows)]
        return "Matrix[\n  " + "\n  ".join(rows) + "\n]"

    def __add__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("addition shape mismatch")
        return Matrix(self.rows, self.cols, [a + b for a, b in zip(self.data, other.data)])

    def __sub__(self, other):
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ShapeError("subtraction shape mismatch")
        return Matrix(self.rows, self.cols, [a - b for a, b in zip(self.data, other.data)])

    def __neg__(self):
        return Matrix(self.rows, self.cols, [-a for a in self.data])

    def scale(self, c) -> "Matrix":
        c = frac(c)
        return Matrix(self.rows, self.cols, [c * a for a in self.data])

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        n, m, p = self.rows, self.cols, other.cols
        out = [ZERO] * (n * p)
        for i in range(n):
            base = i * m
            for k in range(m):
                a = self.data[base + k]
                if a == 0:
                    continue
                ob = k * p
                rb = i * p
                for j in range(p):
                    b = other.data[ob + j]
                    if b != 0:
                        out[rb + j] += a * b
        return Matrix(n, p, out)

    def apply(self, vec):
        """Matrix times column vector (as a tuple)."""
        if len(vec) != self.cols:
            raise ShapeError("vector length mismatch")
        out = []
        for i in range(self.rows):
            base = i * self.cols
            s = ZERO
            for j, v in enumerate(vec):
                if v != 0:
                    s += self.data[base + j] * v
            out.append(s)
        return tuple(out)

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols,
            self.rows,
            [self.data[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)],
        )

    def trace(self):
        if self.rows != self.cols:
            raise ShapeError("trace of non-square matrix")
        return sum((self[i, i] for i in range(self.rows)), ZERO)

    def is_zero(self) -> bool:
        return all(x == 0 for x in self.data)

    # -- elimination ---------------------------------------------------

    def rref(self):
        """Reduced row echelon form; returns (Matrix, pivot column list)."""
        m = self.row_list()
        rows, cols = self.rows, self.cols
        pivots = []
        r = 0
        for c in range(cols):
            if r == rows:
                break
            pr = None
            for i in range(r, rows):
                if m[i][c] != 0:
                    pr = i
                    break
            if pr is None:
                continue
            m[r], m[pr] = m[pr], m[r]
            inv = m[r][c]
            if inv != 1:
                m[r] = [x / inv for x in m[r]]
            for i in range(rows):
                if i != r and m[i][c] != 0:
                    f = m[i][c]
                    m[i] = [a - f * b for a, b in zip(m[i], m[r])]
            pivots.append(c)
            r += 1
        return Matrix.from_rows(m) if rows else self, pivots

    def rank(self) -> int:
        return len(self.rref()[1])

    def kernel(self) -> "SubspaceBasis":
        """Basis of the right null space, canonicalized."""
        red, pivots = self.rref()
        free = [c for c in range(self.cols) if c not in pivots]
        vecs = []
        for fc in free:
            v = [ZERO] * self.cols
            v[fc] = ONE
            for r, pc in enumerate(pivots):
                v[pc] = -red[r, fc]
            vecs.append(v)
        return SubspaceBasis.from_vectors(self.cols, vecs)

    def solve(self, b):
        """Full solution set of self * x = b.

        Returns None when inconsistent, else (particular, SubspaceBasis of
        homogeneous solutions). Exact: self * particular == b.
        """
        if len(b) != self.rows:
            raise ShapeError("rhs length mismatch")
        aug = Matrix(
            self.rows,
            self.cols + 1,
            [x for i in range(self.rows) for x in (*self.row(i), frac(b[i]))],
        )
        red, pivots = aug.rref()
        if self.cols in pivots:
            return None
        part = [ZERO] * self.cols
        for r, pc in enumerate(pivots):
            part[pc] = red[r, self.cols]
        return tuple(part), self.kernel()

    def det(self):
        """Exact determinant via integer Bareiss after clearing denominators."""
        if self.rows != self.cols:
            raise ShapeError("determinant of non-square matrix")
        n = self.rows
        if n == 0:
            return ONE
        scale = 1
        m = []
        for i in range(n):
            row = self.row(i)
            d = 1
            for x in row:
                d = d * x.denominator // gcd(d, x.denominator)
            scale *= d
            m.append([int(x * d) for x in row])
        sign = 1
        prev = 1
        for k in range(n - 1):
            if m[k][k] == 0:
                pr = None
                for i in range(k + 1, n):
                    if m[i][k] != 0:
                        pr = i
                        break
                if pr is None:
                    return ZERO
                m[k], m[pr] = m[pr], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
                m[i][k] = 0
            prev = m[k][k]
        return Fraction(sign * m[n - 1][n - 1], scale)

    def inverse(self) -> "Matrix":
        if self.rows != self.cols:
            raise ShapeError("inverse of non-square matrix")
        n = self.rows
        aug = Matrix(
            n,
            2 * n,
            [
                x
                for i in range(n)
                for x in (*self.row(i), *(ONE if j == i else ZERO for j in range(n)))
            ],
        )
        red, pivots = aug.rref()
        if pivots[:n] != list(range(n)):
            raise ShapeError("matrix is singular")
        return Matrix(n, n, [red[i, n + j] for i in range(n) for j in range(n)])


def hstack(a: Matrix, b: Matrix) -> Matrix:
    if a.rows != b.rows:
        raise ShapeError("hstack row mismatch")
    return Matrix(
        a.rows, a.cols + b.cols, [x for i in range(a.rows) for x in (*a.row(i), *b.row(i))]
    )


def vstack(a: Matrix, b: Matrix) -> Matrix:
    if a.cols != b.cols:
        raise ShapeError("vstack col mismatch")
    return Matrix(a.rows + b.rows, a.cols, a.data + b.data)


class SubspaceBasis:
    """A subspace of Q^n held as an RREF basis (canonical form)."""

    __slots__ = ("ambient_dim", "vectors")

    def __init__(self, ambient_dim, vectors, _canonical=False):
        if not _canonical:
            raise ValueError("use SubspaceBasis.from_vectors")
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "vectors", vectors)

    def __setattr__(self, *a):
        raise AttributeError("SubspaceBasis is immutable")

    @classmethod
    def from_vectors(cls, ambient_dim, vectors) -> "SubspaceBasis":
        vecs = [tuple(frac(x) for x in v) for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise ShapeError("vector length != ambient dimension")
        if not vecs:
            return cls(ambient_dim, (), _canonical=True)
        red, pivots = Matrix.from_rows(vecs).rref()
        rows = tuple(red.row(i) for i in range(len(pivots)))
        return cls(ambient_dim, rows, _canonical=True)

    @classmethod
    def zero(cls, ambient_dim) -> "SubspaceBasis":
        return cls(ambient_dim, (), _canonical=True)

    @classmethod
    def full(cls, ambient_dim) -> "SubspaceBasis":
        return cls.from_vectors(
            ambient_dim,
            [[ONE if j == i else ZERO for j in range(ambient_dim)] for i in range(ambient_dim)],
        )

    @property
    def dim(self) -> int:
        return len(self.vectors)

    def pivots(self):
        out = []
        for v in self.vectors:
            for j, x in enumerate(v):
                if x != 0:
                    out.append(j)
                    break
        return out

    def matrix(self) -> Matrix:
        if not self.vectors:
            return Matrix.zeros(0, self.ambient_dim)
        return Matrix.from_rows(self.vectors)

    def contains(self, vec) -> bool:
        vec = [frac(x) for x in vec]
        if len(vec) != self.ambient_dim:
            raise ShapeError("vector length != ambient dimension")
        return all(x == 0 for x in self.reduce(vec))

    def reduce(self, vec):
        """Residue of vec after eliminating this subspace's pivot coordinates."""
        v = [frac(x) for x in vec]
        pivs = self.pivots()
        for row, p in zip(self.vectors, pivs):
            c = v[p]
            if c != 0:
                for j, x in enumerate(row):
                    if x != 0:
                        v[j] -= c * x
        return v

    def coordinates(self, vec):
        """Coefficients of vec in this basis, or None if not a member."""
        v = [frac(x) for x in vec]
        coords = []
        for row, p in zip(self.vectors, self.pivots()):
            c = v[p]
            coords.append(c)
            if c != 0:
                for j, x in enumerate(row):
                    if x != 0:
                        v[j] -= c * x
        if any(x != 0 for x in v):
            return None
        return tuple(coords)

    def sum(self, other: "SubspaceBasis") -> "SubspaceBasis":
        if self.ambient_dim != other.ambient_dim:
            raise ShapeError("ambient dimension mismatch")
        return SubspaceBasis.from_vectors(self.ambient_dim, list(self.vectors) + list(other.vectors))

    def intersect(self, other: "SubspaceBasis") -> "SubspaceBasis":
        if self.ambient_dim != other.ambient_dim:
            raise ShapeError("ambient dimension mismatch")
        if self.dim == 0 or other.dim == 0:
            return SubspaceBasis.zero(self.ambient_dim)
        # Zassenhaus: kernel of [U^T | -V^T] gives intersection coefficients.
        u = self.matrix().transpose()
        v = other.matrix().transpose()
        ker = hstack(u, v).kernel()
        vecs = []
        for coeff in ker.vectors:
            w = [ZERO] * self.ambient_dim
            for c, row in zip(coeff[: self.dim], self.vectors):
                if c != 0:
                    for j, x in enumerate(row):
                        w[j] += c * x
            vecs.append(w)
        return SubspaceBasis.from_vectors(self.ambient_dim, vecs)

    def complement_indices(self):
        """Coordinate indices whose unit vectors complete this basis."""
        pivs = set(self.pivots())
        return [j for j in range(self.ambient_dim) if j not in pivs]

    def __eq__(self, other):
        return (
            isinstance(other, SubspaceBasis)
            and self.ambient_dim == other.ambient_dim
            and self.vectors == other.vectors
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.vectors))

    def __repr__(self):
        return f"SubspaceBasis(dim {self.dim} of Q^{self.ambient_dim})"


def sparse_kernel(rows, nvars) -> SubspaceBasis:
    """Kernel of a homogeneous system given as sparse rows {var: coeff}.

    Equivalent to Matrix.kernel on the dense stack but exploits that most
    rows produced by form/context constraints carry only a couple of terms.
    """
    seen = set()
    work = []
    for r in rows:
        r = {v: frac(c) for v, c in r.items() if c != 0}
        if not r:
            continue
        key = tuple(sorted(r.items()))
        lead = key[0][1]
        key = tuple((v, c / lead) for v, c in key)
        if key in seen:
            continue
        seen.add(key)
        work.append(dict(key))
    # eliminate sparsest rows first to limit fill-in
    work.sort(key=len)
    pivot_rows = {}  # pivot var -> row (dict), row normalized at pivot
    for r in work:
        r = dict(r)
        while True:
            r = {v: c for v, c in r.items() if c != 0}
            hit = None
            for v in r:
                if v in pivot_rows:
                    hit = v
                    break
            if hit is None:
                break
            c = r.pop(hit)
            for v2, c2 in pivot_rows[hit].items():
                if v2 == hit:
                    continue
                r[v2] = r.get(v2, ZERO) - c * c2
        if not r:
            continue
        pv = min(r)
        inv = r[pv]
        row = {v: c / inv for v, c in r.items()}
        # keep previous pivot rows reduced against the new one
        for opv, orow in list(pivot_rows.items()):
            if pv in orow:
                f = orow.pop(pv)
                for v2, c2 in row.items():
                    if v2 == pv:
                        continue
                    orow[v2] = orow.get(v2, ZERO) - f * c2
                pivot_rows[opv] = {v: c for v, c in orow.items() if c != 0 or v == opv}
        pivot_rows[pv] = row
    free = [v for v in range(nvars) if v not in pivot_rows]
    vecs = []
    for fv in free:
        vec = [ZERO] * nvars
        vec[fv] = ONE
        for pv, row in pivot_rows.items():
            c = row.get(fv, ZERO)
            if c != 0:
                vec[pv] = -c
        vecs.append(vec)
    return SubspaceBasis.from_vectors(nvars, vecs)


def rank(m: Matrix) -> int:
    return m.rank()


def kernel(m: Matrix) -> SubspaceBasis:
    return m.kernel()


def solve(m: Matrix, b):
    return m.solve(b)


def det(m: Matrix) -> Fraction:
    return m.det()
