"""Lie algebras given by structure constants.

Indices are 0-based in the Python API; the JSON file format and all
human-facing messages use the 1-based numbering of the basis e_1..e_n.
"""
from __future__ import annotations

import json
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .linalg import (
    ZERO,
    Matrix,
    Vector,
    frac,
    kernel_of_rows,
    rref_rows,
    unit_vec,
    vcomb,
    zero_vec,
)


class JacobiError(ValueError):
    """Structure constants violate the Jacobi identity."""

    def __init__(self, triple):
        self.triple = triple
        i, j, k = (t + 1 for t in triple)
        super().__init__(f"Jacobi identity fails on (e{i}, e{j}, e{k})")


def _normalize_constants(dim: int, brackets: Mapping) -> list[list[Vector]]:
    """Dense antisymmetric table c[i][j] = [e_i, e_j] from a sparse mapping."""
    table = [[zero_vec(dim) for _ in range(dim)] for _ in range(dim)]
    seen: dict = {}
    for (i, j), value in brackets.items():
        if not (0 <= i < dim and 0 <= j < dim):
            raise ValueError(f"bracket index ({i + 1}, {j + 1}) out of range for dim {dim}")
        if isinstance(value, Mapping):
            v = [ZERO] * dim
            for k, x in value.items():
                v[k] = frac(x)
            v = tuple(v)
        else:
            v = tuple(frac(x) for x in value)
            if len(v) != dim:
                raise ValueError("bracket value has wrong length")
        if i == j:
            if any(v):
                raise ValueError(f"[e{i + 1}, e{i + 1}] must vanish")
            continue
        key = (min(i, j), max(i, j))
        oriented = v if i < j else tuple(-x for x in v)
        if key in seen and seen[key] != oriented:
            raise ValueError(f"inconsistent values given for [e{key[0] + 1}, e{key[1] + 1}]")
        seen[key] = oriented
    for (i, j), v in seen.items():
        table[i][j] = v
        table[j][i] = tuple(-x for x in v)
    return table


def _bracket_table(c, v: Sequence, w: Sequence, dim: int) -> Vector:
    out = [ZERO] * dim
    for i, a in enumerate(v):
        if not a:
            continue
        ci = c[i]
        for j, b in enumerate(w):
            if not b or i == j:
                continue
            ab = a * b
            for k, x in enumerate(ci[j]):
                if x:
                    out[k] += ab * x
    return tuple(out)


def jacobi_check(dim: int, c) -> tuple[int, int, int] | None:
    """First (i, j, k), i<j<k, where the Jacobiator is nonzero; None if it holds.

    ``c`` is a dense table with c[i][j] the coordinate vector of [e_i, e_j].
    """
    basis = [unit_vec(dim, t) for t in range(dim)]
    for i in range(dim):
        for j in range(i + 1, dim):
            for k in range(j + 1, dim):
                s = _bracket_table(c, c[i][j], basis[k], dim)
                t = _bracket_table(c, c[j][k], basis[i], dim)
                u = _bracket_table(c, c[k][i], basis[j], dim)
                if any(a + b + d for a, b, d in zip(s, t, u)):
                    return (i, j, k)
    return None


class Subspace:
    """A linear subspace of Q^n stored by its canonical (RREF) basis."""

    __slots__ = ("ambient", "basis")

    def __init__(self, ambient: int, vectors: Iterable[Sequence] = ()):
        self.ambient = ambient
        vs = [tuple(frac(x) for x in v) for v in vectors]
        self.basis = tuple(rref_rows(vs, ambient)) if vs else ()

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(n, [unit_vec(n, i) for i in range(n)])

    @classmethod
    def zero(cls, n: int) -> "Subspace":
        return cls(n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __len__(self) -> int:
        return self.dim

    def contains(self, v: Sequence) -> bool:
        v = tuple(frac(x) for x in v)
        if not any(v):
            return True
        return len(rref_rows(list(self.basis) + [v], self.ambient)) == self.dim

    __contains__ = contains

    def __le__(self, other: "Subspace") -> bool:
        return all(other.contains(v) for v in self.basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        return self.ambient == other.ambient and self.basis == other.basis

    def __hash__(self) -> int:
        return hash((self.ambient, self.basis))

    def __add__(self, other: "Subspace") -> "Subspace":
        return Subspace(self.ambient, list(self.basis) + list(other.basis))

    def image(self, m: Matrix) -> "Subspace":
        return Subspace(m.nrows, [m @ v for v in self.basis])

    def is_invariant(self, m: Matrix) -> bool:
        return all(self.contains(m @ v) for v in self.basis)

    def __repr__(self) -> str:
        vs = ", ".join("(" + ", ".join(str(x) for x in v) + ")" for v in self.basis)
        return f"Subspace(dim={self.dim}, [{vs}])"


class LieAlgebra:
    """Finite-dimensional real Lie algebra with rational structure constants.

    ``brackets`` maps 0-based pairs (i, j) to the coordinate vector (or a
    sparse ``{k: coeff}`` dict) of [e_i, e_j]. Missing pairs are zero. The
    constructor enforces antisymmetry and the Jacobi identity.
    """

    def __init__(self, dim: int, brackets: Mapping | None = None, name: str = "", check: bool = True):
        if dim < 1:
            raise ValueError("dimension must be positive")
        self.dim = dim
        self.name = name
        c = _normalize_constants(dim, brackets or {})
        self._c = tuple(tuple(row) for row in c)
        if check:
            bad = jacobi_check(dim, self._c)
            if bad is not None:
                raise JacobiError(bad)

    @classmethod
    def abelian(cls, n: int, name: str = "") -> "LieAlgebra":
        return cls(n, {}, name=name or f"R{n}")

    @classmethod
    def from_ad_matrices(cls, ads: Sequence[Matrix], name: str = "") -> "LieAlgebra":
        n = len(ads)
        return cls(n, {(i, j): ads[i].col(j) for i in range(n) for j in range(i + 1, n)}, name=name)

    # structure

    def structure_constant(self, i: int, j: int, k: int) -> Fraction:
        """c^k_ij with [e_i, e_j] = sum_k c^k_ij e_k."""
        return self._c[i][j][k]

    @property
    def constants(self):
        return self._c

    def nonzero_brackets(self) -> dict[tuple[int, int], Vector]:
        n = self.dim
        return {(i, j): self._c[i][j] for i in range(n) for j in range(i + 1, n) if any(self._c[i][j])}

    def basis(self) -> list[Vector]:
        return [unit_vec(self.dim, i) for i in range(self.dim)]

    def bracket(self, v: Sequence, w: Sequence) -> Vector:
        if len(v) != self.dim or len(w) != self.dim:
            raise ValueError(f"vectors must have length {self.dim}")
        return _bracket_table(self._c, v, w, self.dim)

    def bracket_basis(self, i: int, j: int) -> Vector:
        return self._c[i][j]

    @cached_property
    def _ad_basis(self) -> tuple[Matrix, ...]:
        return tuple(Matrix.from_columns([self._c[i][j] for j in range(self.dim)]) for i in range(self.dim))

    def ad(self, v) -> Matrix:
        """Matrix of ad(v); ``v`` is a basis index or a coordinate vector."""
        if isinstance(v, int):
            return self._ad_basis[v]
        acc = Matrix.zeros(self.dim)
        for i, a in enumerate(v):
            if a:
                acc = acc + self._ad_basis[i] * a
        return acc

    def is_abelian(self) -> bool:
        return not any(any(v) for row in self._c for v in row)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieAlgebra):
            return NotImplemented
        return self.dim == other.dim and self._c == other._c

    def __hash__(self) -> int:
        return hash((self.dim, self._c))

    def __repr__(self) -> str:
        label = f" {self.name!r}" if self.name else ""
        return f"<LieAlgebra{label} dim={self.dim} nonzero brackets={len(self.nonzero_brackets())}>"

    # subspaces and series

    def bracket_subspaces(self, u: Subspace, v: Subspace) -> Subspace:
        return Subspace(self.dim, [self.bracket(a, b) for a in u.basis for b in v.basis])

    def derived_algebra(self) -> Subspace:
        return self.bracket_subspaces(Subspace.full(self.dim), Subspace.full(self.dim))

    def lower_central_series(self) -> list[Subspace]:
        """g^0 = g, g^{i+1} = [g, g^i], until it stabilizes (last term repeated once)."""
        full = Subspace.full(self.dim)
        series = [full]
        while True:
            nxt = self.bracket_subspaces(full, series[-1])
            series.append(nxt)
            if nxt.dim == 0 or nxt == series[-2]:
                return series

    def nilpotency_step(self) -> int | None:
        """Smallest k with g^k = 0, or None when the algebra is not nilpotent."""
        series = self.lower_central_series()
        return len(series) - 1 if series[-1].dim == 0 else None

    def is_nilpotent(self) -> bool:
        return self.nilpotency_step() is not None

    def derived_series(self) -> list[Subspace]:
        series = [Subspace.full(self.dim)]
        while True:
            cur = series[-1]
            nxt = self.bracket_subspaces(cur, cur)
            series.append(nxt)
            if nxt.dim == 0 or nxt == cur:
                return series

    def solvability_step(self) -> int | None:
        series = self.derived_series()
        return len(series) - 1 if series[-1].dim == 0 else None

    def is_solvable(self) -> bool:
        return self.solvability_step() is not None

    def center(self) -> Subspace:
        # v central iff ad(e_j) v = 0 for all j; stack the ad matrices
        rows = [r for j in range(self.dim) for r in self._ad_basis[j].rows]
        return Subspace(self.dim, kernel_of_rows(rows, self.dim))

    def is_unimodular(self) -> bool:
        return all(self._ad_basis[i].trace() == 0 for i in range(self.dim))

    # derivations

    def is_derivation(self, d: Matrix) -> bool:
        if d.shape != (self.dim, self.dim):
            raise ValueError("derivation must be a dim x dim matrix")
        n = self.dim
        cols = d.columns()
        for i in range(n):
            for j in range(i + 1, n):
                lhs = d @ self._c[i][j]
                rhs1 = self.bracket(cols[i], unit_vec(n, j))
                rhs2 = self.bracket(unit_vec(n, i), cols[j])
                if any(a - b - c for a, b, c in zip(lhs, rhs1, rhs2)):
                    return False
        return True

    def derivation_space(self) -> list[Matrix]:
        """Basis of Der(g), unknowns ordered as row-major matrix entries."""
        n = self.dim
        c = self._c
        rows = []
        for i in range(n):
            for j in range(i + 1, n):
                # D[e_i,e_j] - [D e_i, e_j] - [e_i, D e_j] = 0, component k
                for k in range(n):
                    eq = [ZERO] * (n * n)
                    for m in range(n):
                        x = c[i][j][m]
                        if x:
                            eq[k * n + m] += x  # D[k][m] * c^m_ij
                    for m in range(n):
                        x = c[m][j][k]
                        if x:
                            eq[m * n + i] -= x  # D[m][i] * c^k_mj
                        y = c[i][m][k]
                        if y:
                            eq[m * n + j] -= y  # D[m][j] * c^k_im
                    if any(eq):
                        rows.append(eq)
        sols = kernel_of_rows(rows, n * n)
        return [Matrix([s[r * n:(r + 1) * n] for r in range(n)]) for s in sols]

    # serialization (1-based indices)

    def to_json(self) -> dict:
        brackets = []
        for (i, j), v in self.nonzero_brackets().items():
            brackets.append({"x": i + 1, "y": j + 1, "result": {str(k + 1): str(x) for k, x in enumerate(v) if x}})
        return {"name": self.name, "dim": self.dim, "brackets": brackets}

    @classmethod
    def from_json(cls, data: Mapping) -> "LieAlgebra":
        try:
            dim = int(data["dim"])
        except (KeyError, TypeError, ValueError):
            raise ValueError("structure file needs an integer 'dim'") from None
        brackets: dict = {}
        for entry in data.get("brackets", []):
            i, j = int(entry["x"]) - 1, int(entry["y"]) - 1
            res = {int(k) - 1: frac(v) for k, v in entry.get("result", {}).items()}
            if any(not 0 <= k < dim for k in res):
                raise ValueError(f"result index out of range in bracket ({i + 1}, {j + 1})")
            if (i, j) in brackets:
                raise ValueError(f"bracket ({i + 1}, {j + 1}) listed twice")
            brackets[(i, j)] = res
        return cls(dim, brackets, name=data.get("name", ""))

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)


def span_of(vectors: Iterable[Sequence], n: int) -> Subspace:
    return Subspace(n, vectors)


def combination(coeffs: Sequence, basis_vectors: Sequence[Sequence], n: int) -> Vector:
    return vcomb([frac(x) for x in coeffs], basis_vectors, n)
