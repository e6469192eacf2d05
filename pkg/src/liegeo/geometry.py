"""Left-invariant pseudo-Riemannian geometry on a Lie algebra.

Conventions: R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z
and Ric(X,Y) = tr(Z -> R(Z,X)Y).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .lie import LieAlgebra
from .linalg import (
    ZERO,
    LinAlgError,
    Matrix,
    Vector,
    commutator,
    dot,
    linear_combination,
    signature,
)


class DegenerateMetricError(LinAlgError):
    pass


class Metric:
    """Nondegenerate symmetric bilinear form on the basis of a Lie algebra."""

    __slots__ = ("matrix", "_inverse")

    def __init__(self, m):
        m = m.matrix if isinstance(m, Metric) else (m if isinstance(m, Matrix) else Matrix(m))
        if not m.is_symmetric():
            raise LinAlgError("metric matrix must be symmetric")
        try:
            inv = m.inverse()
        except LinAlgError:
            raise DegenerateMetricError("metric is degenerate") from None
        self.matrix = m
        self._inverse = inv

    @property
    def dim(self) -> int:
        return self.matrix.nrows

    @property
    def inverse(self) -> Matrix:
        return self._inverse

    def __call__(self, v: Sequence, w: Sequence) -> Fraction:
        return dot(v, self.matrix @ w)

    def adjoint(self, f: Matrix) -> Matrix:
        return self._inverse @ f.T @ self.matrix

    def signature(self) -> tuple[int, int]:
        p, q, _ = signature(self.matrix)
        return p, q

    def __eq__(self, other) -> bool:
        return isinstance(other, Metric) and self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        return f"Metric({self.matrix!r})"


def as_metric(g) -> Metric:
    return g if isinstance(g, Metric) else Metric(g)


@dataclass(frozen=True)
class Connection:
    """Left-invariant connection; ``gammas[i]`` is the matrix of nabla_{e_i}."""

    gammas: tuple[Matrix, ...]

    @property
    def dim(self) -> int:
        return len(self.gammas)

    def along(self, x: Sequence) -> Matrix:
        """Matrix of nabla_X for a coordinate vector X."""
        return linear_combination(x, self.gammas)

    def covariant(self, x: Sequence, y: Sequence) -> Vector:
        return self.along(x) @ y

    def parallel(self, t: Matrix) -> bool:
        """True iff the (1,1)-tensor ``t`` satisfies nabla t = 0."""
        return all(commutator(gm, t).is_zero() for gm in self.gammas)

    def derivative(self, i: int, t: Matrix) -> Matrix:
        """Matrix of (nabla_{e_i} t)."""
        return commutator(self.gammas[i], t)


def levi_civita(algebra: LieAlgebra, g) -> Connection:
    """Levi-Civita connection from Koszul's formula on basis triples.

    2 g(nabla_X Y, Z) = g([X,Y],Z) - g(Y,[X,Z]) - g(X,[Y,Z]).
    """
    metric = as_metric(g)
    n = algebra.dim
    if metric.dim != n:
        raise LinAlgError("metric and algebra dimensions differ")
    G = metric.matrix
    c = algebra.constants
    gc = [G @ algebra.ad(i) for i in range(n)]  # (G ad_i)[a][b] = g(e_a, [e_i, e_b])
    half_ginv = metric.inverse * Fraction(1, 2)
    gammas = []
    for i in range(n):
        cols = []
        gci = gc[i]
        for j in range(n):
            rhs = []
            cij = c[i][j]
            for k in range(n):
                t1 = dot(G.row(k), cij)  # g([e_i,e_j], e_k)
                t2 = gci[j, k]  # g(e_j, [e_i,e_k])
                t3 = gc[j][i, k]  # g(e_i, [e_j,e_k])
                rhs.append(t1 - t2 - t3)
            cols.append(half_ginv @ rhs)
        gammas.append(Matrix.from_columns(cols))
    return Connection(tuple(gammas))


class CurvatureTensor:
    """R(e_i, e_j) as matrices; ``component(i, j, k, l)`` = (R(e_i,e_j)e_k)_l."""

    def __init__(self, mats: Sequence[Sequence[Matrix]]):
        self.mats = tuple(tuple(row) for row in mats)
        self.dim = len(self.mats)

    def operator(self, i: int, j: int) -> Matrix:
        return self.mats[i][j]

    def component(self, i: int, j: int, k: int, l: int) -> Fraction:
        return self.mats[i][j][l, k]

    def apply(self, x: Sequence, y: Sequence, z: Sequence) -> Vector:
        n = self.dim
        out = [ZERO] * n
        for i, a in enumerate(x):
            if not a:
                continue
            for j, b in enumerate(y):
                if not b or i == j:
                    continue
                v = self.mats[i][j] @ z
                ab = a * b
                for k in range(n):
                    if v[k]:
                        out[k] += ab * v[k]
        return tuple(out)

    def is_zero(self) -> bool:
        return all(m.is_zero() for row in self.mats for m in row)


def curvature(algebra: LieAlgebra, conn: Connection) -> CurvatureTensor:
    n = algebra.dim
    gm = conn.gammas
    zero = Matrix.zeros(n)
    mats = [[zero] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            r = gm[i] @ gm[j] - gm[j] @ gm[i]
            cij = algebra.constants[i][j]
            if any(cij):
                r = r - linear_combination(cij, gm)
            mats[i][j] = r
            mats[j][i] = -r
    return CurvatureTensor(mats)


def ricci(algebra: LieAlgebra, R: CurvatureTensor) -> Matrix:
    n = algebra.dim
    rows = []
    for a in range(n):
        row = []
        for b in range(n):
            s = ZERO
            for c in range(n):
                s += R.mats[c][a][c, b]
            row.append(s)
        rows.append(row)
    return Matrix(rows)


@dataclass(frozen=True)
class Geometry:
    """Connection, curvature and Ricci tensor bundled for one (algebra, metric)."""

    algebra: LieAlgebra
    metric: Metric

    @cached_property
    def connection(self) -> Connection:
        return levi_civita(self.algebra, self.metric)

    @cached_property
    def curvature(self) -> CurvatureTensor:
        return curvature(self.algebra, self.connection)

    @cached_property
    def ricci(self) -> Matrix:
        return ricci(self.algebra, self.curvature)

    def is_flat(self) -> bool:
        return self.curvature.is_zero()

    def is_ricci_flat(self) -> bool:
        return self.ricci.is_zero()


def is_flat(algebra: LieAlgebra, g) -> bool:
    return Geometry(algebra, as_metric(g)).is_flat()


def is_ricci_flat(algebra: LieAlgebra, g) -> bool:
    return Geometry(algebra, as_metric(g)).is_ricci_flat()


def torsion_free(algebra: LieAlgebra, conn: Connection) -> bool:
    n = algebra.dim
    for i in range(n):
        for j in range(i + 1, n):
            lhs = tuple(a - b for a, b in zip(conn.gammas[i].col(j), conn.gammas[j].col(i)))
            if lhs != algebra.constants[i][j]:
                return False
    return True


def metric_compatible(conn: Connection, g) -> bool:
    """g(nabla_X Y, Z) + g(Y, nabla_X Z) = 0, i.e. each Gamma_i is g-antisymmetric."""
    G = as_metric(g).matrix
    return all((G @ gm + gm.T @ G).is_zero() for gm in conn.gammas)
