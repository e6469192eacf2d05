"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction`; vectors are tuples of fractions and
matrices are immutable :class:`Matrix` objects acting on column vectors.
Nothing in here ever touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple  # tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


class LinAlgError(ValueError):
    pass


def frac(x) -> Fraction:
    """Coerce ints, strings like ``"-3/4"`` and fractions to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point input is not accepted; use a string or Fraction")
    if isinstance(x, str):
        return Fraction(x.strip().replace("−", "-"))
    return Fraction(x)


def frac_str(x: Fraction) -> str:
    return str(x)


def vec(*xs) -> Vector:
    if len(xs) == 1 and not isinstance(xs[0], (int, str, Fraction)):
        xs = tuple(xs[0])
    return tuple(frac(x) for x in xs)


def zero_vec(n: int) -> Vector:
    return (ZERO,) * n


def unit_vec(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def vadd(v: Sequence, w: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(v, w))


def vsub(v: Sequence, w: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(v, w))


def vscale(c, v: Sequence) -> Vector:
    c = frac(c)
    return tuple(c * a for a in v)


def vcomb(coeffs: Iterable, vectors: Sequence[Sequence], n: int) -> Vector:
    """Linear combination sum(c_i v_i) of length-n vectors."""
    out = [ZERO] * n
    for c, v in zip(coeffs, vectors):
        if c:
            for k, a in enumerate(v):
                if a:
                    out[k] += c * a
    return tuple(out)


def dot(v: Sequence, w: Sequence) -> Fraction:
    s = ZERO
    for a, b in zip(v, w):
        if a and b:
            s += a * b
    return s


def is_zero_vec(v: Sequence) -> bool:
    return not any(v)


class Matrix:
    """Immutable dense matrix of Fractions."""

    __slots__ = ("_rows", "_nrows", "_ncols", "_hash")

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(frac(x) for x in r) for r in rows)
        if not data or not data[0]:
            raise LinAlgError("a matrix needs at least one row and one column")
        width = len(data[0])
        if any(len(r) != width for r in data):
            raise LinAlgError("ragged rows")
        self._rows = data
        self._nrows = len(data)
        self._ncols = width
        self._hash = None

    @classmethod
    def _raw(cls, rows: tuple) -> "Matrix":
        m = object.__new__(cls)
        m._rows = rows
        m._nrows = len(rows)
        m._ncols = len(rows[0])
        m._hash = None
        return m

    # construction helpers

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls._raw(tuple(unit_vec(n, i) for i in range(n)))

    @classmethod
    def zeros(cls, r: int, c: int | None = None) -> "Matrix":
        c = r if c is None else c
        return cls._raw(tuple(zero_vec(c) for _ in range(r)))

    @classmethod
    def diag(cls, *entries) -> "Matrix":
        if len(entries) == 1 and not isinstance(entries[0], (int, str, Fraction)):
            entries = tuple(entries[0])
        n = len(entries)
        d = [frac(x) for x in entries]
        return cls._raw(tuple(tuple(d[i] if i == j else ZERO for j in range(n)) for i in range(n)))

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence]) -> "Matrix":
        cols = [tuple(frac(x) for x in c) for c in cols]
        return cls._raw(tuple(tuple(c[i] for c in cols) for i in range(len(cols[0]))))

    @classmethod
    def from_entries(cls, n: int, entries: dict, ncols: int | None = None) -> "Matrix":
        """Build from a sparse ``{(row, col): value}`` dict (0-based)."""
        ncols = n if ncols is None else ncols
        rows = [[ZERO] * ncols for _ in range(n)]
        for (i, j), x in entries.items():
            rows[i][j] = frac(x)
        return cls._raw(tuple(tuple(r) for r in rows))

    @classmethod
    def from_images(cls, images: Sequence[Sequence]) -> "Matrix":
        """Matrix whose j-th column is the image of the j-th basis vector."""
        return cls.from_columns(images)

    @classmethod
    def block(cls, blocks: Sequence[Sequence["Matrix"]]) -> "Matrix":
        rows = []
        for brow in blocks:
            for i in range(brow[0].nrows):
                r = []
                for b in brow:
                    r.extend(b._rows[i])
                rows.append(tuple(r))
        return cls._raw(tuple(rows))

    @classmethod
    def direct_sum(cls, a: "Matrix", b: "Matrix") -> "Matrix":
        return cls.block([[a, cls.zeros(a.nrows, b.ncols)], [cls.zeros(b.nrows, a.ncols), b]])

    # basic protocol

    @property
    def nrows(self) -> int:
        return self._nrows

    @property
    def ncols(self) -> int:
        return self._ncols

    @property
    def shape(self) -> tuple[int, int]:
        return (self._nrows, self._ncols)

    @property
    def rows(self) -> tuple:
        return self._rows

    def row(self, i: int) -> Vector:
        return self._rows[i]

    def col(self, j: int) -> Vector:
        return tuple(r[j] for r in self._rows)

    def columns(self) -> list[Vector]:
        return [self.col(j) for j in range(self._ncols)]

    def __getitem__(self, ij):
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._rows)
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(str(x) for x in r) + "]" for r in self._rows)
        return f"Matrix([{body}])"

    def __str__(self) -> str:
        cells = [[str(x) for x in r] for r in self._rows]
        w = max(len(c) for r in cells for c in r)
        return "\n".join(" ".join(c.rjust(w) for c in r) for r in cells)

    # arithmetic

    def _check_same_shape(self, other: "Matrix"):
        if self.shape != other.shape:
            raise LinAlgError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix._raw(tuple(tuple(a + b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)))

    def __sub__(self, other: "Matrix") -> "Matrix":
        self._check_same_shape(other)
        return Matrix._raw(tuple(tuple(a - b for a, b in zip(r, s)) for r, s in zip(self._rows, other._rows)))

    def __neg__(self) -> "Matrix":
        return Matrix._raw(tuple(tuple(-a for a in r) for r in self._rows))

    def __mul__(self, c) -> "Matrix":
        if isinstance(c, Matrix):
            raise TypeError("use @ for matrix products")
        c = frac(c)
        return Matrix._raw(tuple(tuple(c * a for a in r) for r in self._rows))

    __rmul__ = __mul__

    def __truediv__(self, c) -> "Matrix":
        return self * (ONE / frac(c))

    def __matmul__(self, other):
        if isinstance(other, Matrix):
            if self._ncols != other._nrows:
                raise LinAlgError(f"cannot multiply {self.shape} by {other.shape}")
            ocols = other._ncols
            orows = other._rows
            out = []
            for r in self._rows:
                acc = [ZERO] * ocols
                for k, a in enumerate(r):
                    if a:
                        for j, b in enumerate(orows[k]):
                            if b:
                                acc[j] += a * b
                out.append(tuple(acc))
            return Matrix._raw(tuple(out))
        v = tuple(other)
        if len(v) != self._ncols:
            raise LinAlgError(f"cannot apply {self.shape} matrix to vector of length {len(v)}")
        return tuple(dot(r, v) for r in self._rows)

    def apply(self, v: Sequence) -> Vector:
        return self @ v

    @property
    def T(self) -> "Matrix":
        return Matrix._raw(tuple(zip(*self._rows)))

    def transpose(self) -> "Matrix":
        return self.T

    def trace(self) -> Fraction:
        self._require_square()
        return sum((self._rows[i][i] for i in range(self._nrows)), ZERO)

    def is_square(self) -> bool:
        return self._nrows == self._ncols

    def is_zero(self) -> bool:
        return not any(any(r) for r in self._rows)

    def is_symmetric(self) -> bool:
        return self.is_square() and self == self.T

    def is_antisymmetric(self) -> bool:
        return self.is_square() and self == -self.T

    def _require_square(self):
        if not self.is_square():
            raise LinAlgError(f"square matrix required, got {self.shape}")

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "Matrix":
        return Matrix._raw(tuple(tuple(self._rows[i][j] for j in cols) for i in rows))

    def pow(self, k: int) -> "Matrix":
        self._require_square()
        out = Matrix.identity(self._nrows)
        for _ in range(k):
            out = out @ self
        return out

    def flat(self) -> Vector:
        return tuple(x for r in self._rows for x in r)

    # elimination based routines

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        rows, pivots = _rref([list(r) for r in self._rows], self._ncols)
        return Matrix._raw(tuple(tuple(r) for r in rows)), tuple(pivots)

    def rank(self) -> int:
        return len(_rref([list(r) for r in self._rows], self._ncols)[1])

    def det(self) -> Fraction:
        self._require_square()
        a = [list(r) for r in self._rows]
        n = self._nrows
        d = ONE
        for c in range(n):
            p = next((r for r in range(c, n) if a[r][c]), None)
            if p is None:
                return ZERO
            if p != c:
                a[c], a[p] = a[p], a[c]
                d = -d
            piv = a[c][c]
            d *= piv
            for r in range(c + 1, n):
                f = a[r][c]
                if f:
                    f /= piv
                    ar, ac = a[r], a[c]
                    for k in range(c, n):
                        if ac[k]:
                            ar[k] -= f * ac[k]
        return d

    def inverse(self) -> "Matrix":
        self._require_square()
        n = self._nrows
        aug = [list(r) + list(unit_vec(n, i)) for i, r in enumerate(self._rows)]
        rows, pivots = _rref(aug, n)
        if len(pivots) < n or pivots[n - 1] != n - 1:
            raise LinAlgError("matrix is singular")
        return Matrix._raw(tuple(tuple(r[n:]) for r in rows[:n]))

    def is_invertible(self) -> bool:
        return self.is_square() and self.rank() == self._nrows

    # serialization

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self._rows]

    @classmethod
    def from_json(cls, data) -> "Matrix":
        return cls(data)


def _rref(a: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """In-place reduced row echelon form over the first ``ncols`` columns.

    Extra columns (augmentation) are carried along.
    """
    nrows = len(a)
    pivots = []
    r = 0
    for c in range(ncols):
        if r >= nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c]), None)
        if p is None:
            continue
        if p != r:
            a[r], a[p] = a[p], a[r]
        pr = a[r]
        inv = ONE / pr[c]
        if inv != ONE:
            a[r] = pr = [x * inv if x else x for x in pr]
        nz = [k for k, x in enumerate(pr) if x]
        for i in range(nrows):
            if i != r:
                f = a[i][c]
                if f:
                    ai = a[i]
                    for k in nz:
                        ai[k] -= f * pr[k]
        pivots.append(c)
        r += 1
    return a, pivots


def rref_rows(vectors: Sequence[Sequence], n: int) -> list[Vector]:
    """Nonzero rows of the RREF of the given row vectors."""
    if not vectors:
        return []
    rows, pivots = _rref([list(v) for v in vectors], n)
    return [tuple(rows[i]) for i in range(len(pivots))]


def kernel_basis(m: Matrix) -> list[Vector]:
    """Basis of ``{v : m v = 0}``.

    One vector per free column of the RREF, in increasing column order, with
    a 1 in that free slot.
    """
    rows, pivots = _rref([list(r) for r in m.rows], m.ncols)
    pivset = set(pivots)
    basis = []
    for free in range(m.ncols):
        if free in pivset:
            continue
        v = [ZERO] * m.ncols
        v[free] = ONE
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][free]
        basis.append(tuple(v))
    return basis


def kernel_of_rows(rows: Sequence[Sequence], n: int) -> list[Vector]:
    """Kernel of a linear system given as a list of equation rows of width n."""
    if not rows:
        return [unit_vec(n, i) for i in range(n)]
    return kernel_basis(Matrix._raw(tuple(tuple(frac(x) for x in r) for r in rows)))


def solve(m: Matrix, b: Sequence) -> Vector:
    """One exact solution x of ``m x = b`` (free variables set to zero)."""
    b = vec(b)
    if len(b) != m.nrows:
        raise LinAlgError("right-hand side has wrong length")
    aug = [list(r) + [bi] for r, bi in zip(m.rows, b)]
    rows, pivots = _rref(aug, m.ncols)
    for i in range(len(pivots), m.nrows):
        if rows[i][m.ncols]:
            raise LinAlgError("inconsistent linear system")
    x = [ZERO] * m.ncols
    for i, pc in enumerate(pivots):
        x[pc] = rows[i][m.ncols]
    return tuple(x)


def coordinates(vectors: Sequence[Sequence], v: Sequence) -> Vector:
    """Coefficients of ``v`` in the span of independent ``vectors``."""
    return solve(Matrix.from_columns(vectors), v)


def signature(m: Matrix) -> tuple[int, int, int]:
    """Sylvester signature ``(p, q, r)`` of a symmetric matrix.

    Symmetric congruence reduction: pivot on a nonzero diagonal entry when
    there is one, otherwise replace e_i by e_i + e_j to create one.
    """
    if not m.is_symmetric():
        raise LinAlgError("signature needs a symmetric matrix")
    a = [list(r) for r in m.rows]
    n = len(a)
    active = list(range(n))
    p = q = 0
    while active:
        k = next((i for i in active if a[i][i]), None)
        if k is None:
            pair = next(((i, j) for i in active for j in active if i < j and a[i][j]), None)
            if pair is None:
                break
            i, j = pair
            # congruence by e_i -> e_i + e_j; new a_ii = 2 a_ij
            for t in range(n):
                a[i][t] += a[j][t]
            for t in range(n):
                a[t][i] += a[t][j]
            k = i
        piv = a[k][k]
        if piv > 0:
            p += 1
        else:
            q += 1
        active.remove(k)
        for i in active:
            f = a[i][k]
            if f:
                f /= piv
                for t in active:
                    a[i][t] -= f * a[k][t]
                a[i][k] = ZERO
        for i in active:
            a[k][i] = ZERO
    return p, q, n - p - q


def adjoint(f: Matrix, g: Matrix) -> Matrix:
    """Metric adjoint ``g^{-1} f^T g``, so that g(fX, Y) = g(X, f* Y)."""
    if f.shape != g.shape:
        raise LinAlgError("endomorphism and metric dimensions differ")
    try:
        ginv = g.inverse()
    except LinAlgError:
        raise LinAlgError("metric is degenerate") from None
    return ginv @ f.T @ g


def commutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b - b @ a


def anticommutator(a: Matrix, b: Matrix) -> Matrix:
    return a @ b + b @ a


def linear_combination(coeffs: Sequence, mats: Sequence[Matrix]) -> Matrix:
    if not mats:
        raise LinAlgError("empty combination")
    r, c = mats[0].shape
    out = [[ZERO] * c for _ in range(r)]
    for k, m in zip(coeffs, mats):
        k = frac(k)
        if not k:
            continue
        for i, row in enumerate(m.rows):
            oi = out[i]
            for j, x in enumerate(row):
                if x:
                    oi[j] += k * x
    return Matrix._raw(tuple(tuple(r) for r in out))


def matrix(rows) -> Matrix:
    return rows if isinstance(rows, Matrix) else Matrix(rows)
