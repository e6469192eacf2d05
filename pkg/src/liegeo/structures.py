"""Complex and para-complex structures, Kähler forms and integrability tests."""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .geometry import Geometry, Metric, as_metric
from .lie import LieAlgebra, Subspace
from .linalg import ZERO, Matrix, Vector, frac, matrix, unit_vec


class CompatibilityError(ValueError):
    """A (g, J[, E]) triple violates its algebraic compatibility conditions."""

    def __init__(self, diagnostics: "Diagnostics"):
        self.diagnostics = diagnostics
        super().__init__("incompatible structure: " + ", ".join(diagnostics.failures()))


class Diagnostics(dict):
    """Ordered ``name -> bool`` findings; truthy iff every item passed."""

    def __bool__(self) -> bool:
        return all(self.values())

    @property
    def ok(self) -> bool:
        return bool(self)

    def failures(self) -> list[str]:
        return [k for k, v in self.items() if not v]


def check_unitary_compat(g, J: Matrix | None = None, E: Matrix | None = None) -> Diagnostics:
    G = g.matrix if isinstance(g, Metric) else matrix(g)
    n = G.nrows
    ident = Matrix.identity(n)
    d = Diagnostics()
    d["metric_symmetric"] = G.is_symmetric()
    d["metric_nondegenerate"] = G.is_square() and G.is_invertible()
    if J is not None:
        d["J_squared"] = J @ J == -ident
        d["J_metric"] = J.T @ G @ J == G
    if E is not None:
        d["E_squared"] = E @ E == ident
        d["E_metric"] = E.T @ G @ E == -G
        if J is not None:
            d["JE_anticommute"] = (J @ E + E @ J).is_zero()
    return d


@dataclass(frozen=True)
class StructureRecord:
    """A Lie algebra with metric g, almost complex J and optional para-complex E."""

    algebra: LieAlgebra
    metric: Metric
    J: Matrix
    E: Matrix | None = None
    name: str = ""
    validate: bool = field(default=True, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "metric", as_metric(self.metric))
        object.__setattr__(self, "J", matrix(self.J))
        if self.E is not None:
            object.__setattr__(self, "E", matrix(self.E))
        n = self.algebra.dim
        if self.metric.dim != n or self.J.shape != (n, n) or (self.E is not None and self.E.shape != (n, n)):
            raise ValueError("metric and structure tensors must match the algebra dimension")
        if self.validate:
            d = check_unitary_compat(self.metric, self.J, self.E)
            if not d:
                raise CompatibilityError(d)

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def g(self) -> Matrix:
        return self.metric.matrix

    @cached_property
    def geometry(self) -> Geometry:
        return Geometry(self.algebra, self.metric)

    def with_E(self, E: Matrix | None, validate: bool = True) -> "StructureRecord":
        return StructureRecord(self.algebra, self.metric, self.J, E, self.name, validate)

    def permuted(self, perm: Sequence[int]) -> "StructureRecord":
        """Same structure in the reordered basis f_k = e_{perm[k]}."""
        n = self.dim
        P = Matrix.from_columns([unit_vec(n, p) for p in perm])  # new -> old coordinates
        Pinv = P.T
        alg = LieAlgebra(
            n,
            {(a, b): Pinv @ self.algebra.bracket_basis(perm[a], perm[b]) for a in range(n) for b in range(a + 1, n)},
            name=self.algebra.name,
        )
        E = None if self.E is None else Pinv @ self.E @ P
        return StructureRecord(alg, Metric(P.T @ self.g @ P), Pinv @ self.J @ P, E, self.name)


class Form:
    """Alternating k-form stored by components on increasing index tuples."""

    __slots__ = ("dim", "degree", "_c")

    def __init__(self, dim: int, degree: int, components: Mapping | None = None):
        self.dim = dim
        self.degree = degree
        comps: dict = {}
        for idx, val in (components or {}).items():
            val = frac(val)
            if not val:
                continue
            idx = tuple(idx)
            if len(idx) != degree or any(not 0 <= i < dim for i in idx):
                raise ValueError(f"bad index {idx} for a {degree}-form on dim {dim}")
            sign, key = _sort_sign(idx)
            if sign == 0:
                continue
            comps[key] = comps.get(key, ZERO) + sign * val
        self._c = {k: v for k, v in comps.items() if v}

    @property
    def components(self) -> dict:
        return dict(self._c)

    def __call__(self, *idx: int) -> Fraction:
        """Value on basis vectors e_{idx[0]}, ..., e_{idx[k-1]}."""
        sign, key = _sort_sign(idx)
        if sign == 0:
            return ZERO
        return sign * self._c.get(key, ZERO)

    def evaluate(self, *vectors: Sequence) -> Fraction:
        total = ZERO
        for key, val in self._c.items():
            for perm in itertools.permutations(range(self.degree)):
                term = val * _perm_sign(perm)
                for slot, p in enumerate(perm):
                    term *= vectors[slot][key[p]]
                    if not term:
                        break
                total += term
        return total

    def is_zero(self) -> bool:
        return not self._c

    def __eq__(self, other) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        return (self.dim, self.degree, self._c) == (other.dim, other.degree, other._c)

    def __hash__(self):
        return hash((self.dim, self.degree, frozenset(self._c.items())))

    def __add__(self, other: "Form") -> "Form":
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, ZERO) + v
        return Form(self.dim, self.degree, out)

    def __neg__(self) -> "Form":
        return Form(self.dim, self.degree, {k: -v for k, v in self._c.items()})

    def __sub__(self, other: "Form") -> "Form":
        return self + (-other)

    def __mul__(self, c) -> "Form":
        c = frac(c)
        return Form(self.dim, self.degree, {k: c * v for k, v in self._c.items()})

    __rmul__ = __mul__

    def __repr__(self) -> str:
        return f"Form({self.to_string()!r})"

    def to_string(self) -> str:
        """Human notation such as ``e12-e34+1/2*e56`` (1-based, single-digit safe)."""
        if not self._c:
            return "0"
        parts = []
        for key in sorted(self._c):
            v = self._c[key]
            mono = "e" + "".join(str(i + 1) for i in key) if self.dim <= 9 else "e(" + ",".join(str(i + 1) for i in key) + ")"
            if v == 1:
                term = mono
            elif v == -1:
                term = "-" + mono
            else:
                term = f"{v}*{mono}"
            parts.append(term)
        out = parts[0]
        for p in parts[1:]:
            out += p if p.startswith("-") else "+" + p
        return out

    @classmethod
    def from_matrix(cls, m: Matrix) -> "Form":
        if not m.is_antisymmetric():
            raise ValueError("a 2-form needs an antisymmetric matrix")
        n = m.nrows
        return cls(n, 2, {(i, j): m[i, j] for i in range(n) for j in range(i + 1, n) if m[i, j]})

    def to_matrix(self) -> Matrix:
        if self.degree != 2:
            raise ValueError("only 2-forms have a matrix")
        n = self.dim
        return Matrix([[self(i, j) for j in range(n)] for i in range(n)])


def _perm_sign(perm: Sequence[int]) -> int:
    sign = 1
    p = list(perm)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def _sort_sign(idx: Sequence[int]) -> tuple[int, tuple]:
    if len(set(idx)) != len(idx):
        return 0, ()
    order = sorted(range(len(idx)), key=lambda t: idx[t])
    return _perm_sign(order), tuple(sorted(idx))


def basis_form(dim: int, *idx: int) -> Form:
    """The monomial e^{i1} ^ ... ^ e^{ik} (0-based indices)."""
    return Form(dim, len(idx), {tuple(idx): 1})


def form_from_string(dim: int, text: str) -> Form:
    """Parse ``e12-e34+2*e56`` style sums of 2-forms (1-based single digits)."""
    from .salamon import parse_linear_forms

    comps = parse_linear_forms(text, {})
    return Form(dim, 2, {(i - 1, j - 1): v for (i, j), v in comps.items()})


def kahler_form(rec: StructureRecord) -> Form:
    """omega(X, Y) = g(JX, Y)."""
    if rec.validate is False:
        d = check_unitary_compat(rec.metric, rec.J)
        if not d:
            raise CompatibilityError(d)
    m = rec.J.T @ rec.g
    return Form.from_matrix(m)


def ce_differential(algebra: LieAlgebra, alpha: Form) -> Form:
    """Chevalley-Eilenberg differential on left-invariant forms.

    (d a)(X_0..X_k) = sum_{i<j} (-1)^{i+j} a([X_i, X_j], X_0..^i..^j..X_k).
    """
    n, k = algebra.dim, alpha.degree
    if alpha.dim != n:
        raise ValueError("form and algebra dimensions differ")
    if k + 1 > n:
        return Form(n, k + 1)
    c = algebra.constants
    out = {}
    for idx in itertools.combinations(range(n), k + 1):
        total = ZERO
        for a in range(k + 1):
            for b in range(a + 1, k + 1):
                br = c[idx[a]][idx[b]]
                if not any(br):
                    continue
                rest = idx[:a] + idx[a + 1:b] + idx[b + 1:]
                s = ZERO
                for m, x in enumerate(br):
                    if x:
                        s += x * alpha(m, *rest)
                if s:
                    total += s if (a + b) % 2 == 0 else -s
        if total:
            out[idx] = total
    return Form(n, k + 1, out)


def nijenhuis(algebra: LieAlgebra, J: Matrix) -> list[list[Vector]]:
    """N(e_i, e_j) = [Je_i, Je_j] - [e_i, e_j] - J[Je_i, e_j] - J[e_i, Je_j]."""
    n = algebra.dim
    cols = J.columns()
    basis = algebra.basis()
    out = [[tuple([ZERO] * n) for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            t1 = algebra.bracket(cols[i], cols[j])
            t2 = algebra.bracket_basis(i, j)
            t3 = J @ algebra.bracket(cols[i], basis[j])
            t4 = J @ algebra.bracket(basis[i], cols[j])
            v = tuple(a - b - c - d for a, b, c, d in zip(t1, t2, t3, t4))
            out[i][j] = v
            out[j][i] = tuple(-x for x in v)
    return out


def nijenhuis_vanishes(algebra: LieAlgebra, J: Matrix) -> bool:
    return not any(any(v) for row in nijenhuis(algebra, J) for v in row)


def pseudo_kahler_routes(rec: StructureRecord) -> tuple[bool, bool]:
    """(nabla J = 0, N_J = 0 and d omega = 0) computed independently."""
    route_a = rec.geometry.connection.parallel(rec.J)
    omega = kahler_form(rec)
    route_b = nijenhuis_vanishes(rec.algebra, rec.J) and ce_differential(rec.algebra, omega).is_zero()
    return route_a, route_b


def is_pseudo_kahler(rec: StructureRecord) -> bool:
    a, b = pseudo_kahler_routes(rec)
    if a != b:
        raise AssertionError(f"parallelism ({a}) and integrability ({b}) disagree for {rec.name or rec.algebra}")
    return a


def is_abelian_complex(algebra: LieAlgebra, J: Matrix) -> bool:
    """[JX, JY] = [X, Y] on all basis pairs."""
    cols = J.columns()
    n = algebra.dim
    return all(
        algebra.bracket(cols[i], cols[j]) == algebra.bracket_basis(i, j) for i in range(n) for j in range(i + 1, n)
    )


def is_abelian_para(algebra: LieAlgebra, E: Matrix) -> bool:
    """[EX, EY] = -[X, Y] on all basis pairs."""
    cols = E.columns()
    n = algebra.dim
    return all(
        algebra.bracket(cols[i], cols[j]) == tuple(-x for x in algebra.bracket_basis(i, j))
        for i in range(n)
        for j in range(i + 1, n)
    )


def is_hypersymplectic(rec: StructureRecord) -> bool:
    """nabla E = 0 for an almost hypersymplectic record.

    Violations of the algebraic conditions raise CompatibilityError so they
    are never confused with a parallelism failure.
    """
    if rec.E is None:
        raise ValueError("record has no para-complex structure E")
    d = check_unitary_compat(rec.metric, rec.J, rec.E)
    if not d:
        raise CompatibilityError(d)
    return rec.geometry.connection.parallel(rec.E)


def is_kodaira_type(algebra: LieAlgebra, J: Matrix) -> bool:
    if algebra.nilpotency_step() != 2:
        return False
    z = algebra.center()
    return 2 * z.dim == algebra.dim and z.is_invariant(J)


def complex_structure_from_images(n: int, images: Mapping[int, Iterable]) -> Matrix:
    """J from a partial list ``{i: J e_i}`` completed by J(J e_i) = -e_i.

    Only the images of a set of vectors whose images are basis vectors up to
    sign can be completed this way, which covers every J written as
    ``J e_1 = e_2, J e_3 = e_4``.
    """
    cols: dict[int, Vector] = {}
    for i, img in images.items():
        v = tuple(frac(x) for x in img)
        cols[i] = v
        nz = [k for k, x in enumerate(v) if x]
        if len(nz) == 1:
            k = nz[0]
            s = v[k]
            # J e_k = J(s^-1 J e_i) = -s^-1 e_i
            cols.setdefault(k, tuple(-1 / s if t == i else ZERO for t in range(n)))
    if len(cols) != n:
        raise ValueError("images do not determine J on the whole basis")
    return Matrix.from_columns([cols[i] for i in range(n)])


def J_from_pairs(n: int, pairs: Iterable[tuple[int, int]], signs: Iterable[int] | None = None) -> Matrix:
    """J with J e_a = s e_b and J e_b = -s e_a for each (a, b) pair (0-based)."""
    pairs = list(pairs)
    signs = list(signs) if signs is not None else [1] * len(pairs)
    ent = {}
    for (a, b), s in zip(pairs, signs):
        ent[(b, a)] = s
        ent[(a, b)] = -s
    return Matrix.from_entries(n, ent)
