"""Semidirect products g x| h with the block-diagonal metric and complex structure.

The basis of the product is the basis of g followed by the basis of h.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .geometry import Connection, Metric, as_metric
from .lie import LieAlgebra, Subspace
from .linalg import (
    ZERO,
    Matrix,
    Vector,
    commutator,
    kernel_of_rows,
    linear_combination,
    matrix,
    rref_rows,
    solve,
    unit_vec,
)
from .structures import (
    CompatibilityError,
    Diagnostics,
    StructureRecord,
    check_unitary_compat,
    is_abelian_complex,
    is_hypersymplectic,
    is_pseudo_kahler,
)


class ExtensionError(ValueError):
    """Input data for a semidirect construction violates a hypothesis."""


def sym_anti_split(f: Matrix, g) -> tuple[Matrix, Matrix]:
    """(f^s, f^a) with respect to the metric ``g``."""
    fstar = as_metric(g).adjoint(f)
    return (f + fstar) / 2, (f - fstar) / 2


def sym_part(f: Matrix, g) -> Matrix:
    return sym_anti_split(f, g)[0]


def anti_part(f: Matrix, g) -> Matrix:
    return sym_anti_split(f, g)[1]


@dataclass(frozen=True)
class Representation:
    """phi: h -> End(g) given on the basis of h."""

    domain: LieAlgebra
    codomain_dim: int
    phi: tuple[Matrix, ...]

    def __init__(self, domain: LieAlgebra, phi: Sequence, codomain_dim: int | None = None):
        mats = tuple(matrix(m) for m in phi)
        if len(mats) != domain.dim:
            raise ExtensionError(f"need one matrix per basis vector of h ({domain.dim}), got {len(mats)}")
        n = codomain_dim if codomain_dim is not None else (mats[0].nrows if mats else 0)
        for m in mats:
            if m.shape != (n, n):
                raise ExtensionError(f"representation matrices must be {n}x{n}")
        object.__setattr__(self, "domain", domain)
        object.__setattr__(self, "codomain_dim", n)
        object.__setattr__(self, "phi", mats)

    @classmethod
    def zero(cls, domain: LieAlgebra, n: int) -> "Representation":
        return cls(domain, [Matrix.zeros(n)] * domain.dim, n)

    def __call__(self, a) -> Matrix:
        """phi of a basis index or of a coordinate vector in h."""
        if isinstance(a, int):
            return self.phi[a]
        return linear_combination(a, self.phi) if any(a) else Matrix.zeros(self.codomain_dim)

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.phi)

    def problems(self, g_alg: LieAlgebra) -> list[str]:
        out = []
        if g_alg.dim != self.codomain_dim:
            out.append("dimension of g does not match the representation")
            return out
        for i, m in enumerate(self.phi):
            if not g_alg.is_derivation(m):
                out.append(f"phi(a{i + 1}) is not a derivation of g")
        h = self.domain
        for i in range(h.dim):
            for j in range(i + 1, h.dim):
                if commutator(self.phi[i], self.phi[j]) != self(h.bracket_basis(i, j)):
                    out.append(f"phi is not a homomorphism on (a{i + 1}, a{j + 1})")
        return out


def semidirect_algebra(g_alg: LieAlgebra, h_alg: LieAlgebra, rep: Representation, name: str = "") -> LieAlgebra:
    n, m = g_alg.dim, h_alg.dim
    N = n + m
    br: dict = {}
    for i in range(n):
        for j in range(i + 1, n):
            v = g_alg.bracket_basis(i, j)
            if any(v):
                br[(i, j)] = tuple(v) + (ZERO,) * m
    for a in range(m):
        col = rep.phi[a]
        for j in range(n):
            v = col.col(j)
            if any(v):
                # [e_j, a_a] = -phi(a_a) e_j
                br[(j, n + a)] = tuple(-x for x in v) + (ZERO,) * m
    for a in range(m):
        for b in range(a + 1, m):
            v = h_alg.bracket_basis(a, b)
            if any(v):
                br[(n + a, n + b)] = (ZERO,) * n + tuple(v)
    return LieAlgebra(N, br, name=name)


@dataclass(frozen=True)
class HSBlocks:
    """Blocks of E on g + h: [[E1, E2], [E3, E4]]."""

    E1: Matrix
    E2: Matrix
    E3: Matrix
    E4: Matrix

    def __post_init__(self):
        for k in ("E1", "E2", "E3", "E4"):
            object.__setattr__(self, k, matrix(getattr(self, k)))
        n, m = self.E1.nrows, self.E4.nrows
        if self.E1.shape != (n, n) or self.E2.shape != (n, m) or self.E3.shape != (m, n) or self.E4.shape != (m, m):
            raise ExtensionError("E blocks have inconsistent shapes")

    @classmethod
    def from_matrix(cls, E: Matrix, n: int) -> "HSBlocks":
        N = E.nrows
        g_idx, h_idx = list(range(n)), list(range(n, N))
        return cls(E.submatrix(g_idx, g_idx), E.submatrix(g_idx, h_idx), E.submatrix(h_idx, g_idx), E.submatrix(h_idx, h_idx))

    @classmethod
    def diagonal(cls, E_g: Matrix, E_h: Matrix) -> "HSBlocks":
        n, m = E_g.nrows, E_h.nrows
        return cls(E_g, Matrix.zeros(n, m), Matrix.zeros(m, n), E_h)

    def assemble(self) -> Matrix:
        return Matrix.block([[self.E1, self.E2], [self.E3, self.E4]])


@dataclass(frozen=True)
class Extension:
    g_rec: StructureRecord
    h_rec: StructureRecord
    rep: Representation
    product: StructureRecord

    @property
    def n(self) -> int:
        return self.g_rec.dim

    @property
    def m(self) -> int:
        return self.h_rec.dim

    def g_index(self, i: int) -> int:
        return i

    def h_index(self, a: int) -> int:
        return self.n + a

    def with_blocks(self, blocks: HSBlocks, validate: bool = True) -> "Extension":
        rec = self.product.with_E(blocks.assemble(), validate=validate)
        return Extension(self.g_rec, self.h_rec, self.rep, rec)

    @cached_property
    def blocks(self) -> HSBlocks | None:
        return None if self.product.E is None else HSBlocks.from_matrix(self.product.E, self.n)


def build_semidirect(
    g_rec: StructureRecord,
    h_rec: StructureRecord,
    rep: Representation | Sequence,
    blocks: HSBlocks | None = None,
    name: str = "",
    validate_E: bool = True,
) -> Extension:
    if not isinstance(rep, Representation):
        rep = Representation(h_rec.algebra, rep, g_rec.dim)
    if rep.domain != h_rec.algebra:
        raise ExtensionError("representation is defined on a different algebra than h")
    bad = rep.problems(g_rec.algebra)
    if bad:
        raise ExtensionError("; ".join(bad))
    alg = semidirect_algebra(g_rec.algebra, h_rec.algebra, rep, name=name)
    G = Matrix.direct_sum(g_rec.g, h_rec.g)
    J = Matrix.direct_sum(g_rec.J, h_rec.J)
    E = blocks.assemble() if blocks is not None else None
    rec = StructureRecord(alg, Metric(G), J, E, name=name, validate=validate_E)
    return Extension(g_rec, h_rec, rep, rec)


# Levi-Civita connection of the product from the connections of the factors


def block_connection(ext: Extension) -> Connection:
    """Connection of the product assembled from the factor formulas.

    nabla_X Y = nabla^g_X Y + (the h-part fixed by h(., C) = g(phi(C)^s X, Y)),
    nabla_X B = -phi(B)^s X, nabla_A B = nabla^h_A B, nabla_A Y = phi(A)^a Y.
    """
    n, m = ext.n, ext.m
    g, h = ext.g_rec.metric, ext.h_rec.metric
    gam_g = ext.g_rec.geometry.connection.gammas
    gam_h = ext.h_rec.geometry.connection.gammas
    split = [sym_anti_split(p, g) for p in ext.rep.phi]
    hinv = h.inverse
    gammas = []
    for i in range(n):
        cols = []
        for j in range(n):
            top = gam_g[i].col(j)
            # coefficients c_C = g(phi(a_C)^s e_i, e_j), then raise the index with h
            low = [g(split[c][0].col(i), unit_vec(n, j)) for c in range(m)]
            cols.append(tuple(top) + tuple(hinv @ low))
        for b in range(m):
            cols.append(tuple(-x for x in split[b][0].col(i)) + (ZERO,) * m)
        gammas.append(Matrix.from_columns(cols))
    for a in range(m):
        cols = []
        for j in range(n):
            cols.append(tuple(split[a][1].col(j)) + (ZERO,) * m)
        for b in range(m):
            cols.append((ZERO,) * n + tuple(gam_h[a].col(b)))
        gammas.append(Matrix.from_columns(cols))
    return Connection(tuple(gammas))


# pseudo-Kahler extension conditions


def _require_pk(rec: StructureRecord, label: str):
    if not is_pseudo_kahler(rec):
        raise ExtensionError(f"{label} is not pseudo-Kahler")


def pk_condition_items(g_rec: StructureRecord, h_rec: StructureRecord, rep: Representation) -> Diagnostics:
    g = g_rec.metric
    Jg, Jh = g_rec.J, h_rec.J
    d = Diagnostics()
    for A in range(h_rec.dim):
        s, a = sym_anti_split(rep(A), g)
        sJ = sym_part(rep(Jh.col(A)), g)
        d[f"J_sym[a{A + 1}]"] = Jg @ s == sJ
        d[f"J_anti[a{A + 1}]"] = commutator(Jg, a).is_zero()
    return d


def check_pk_extension_conditions(g_rec: StructureRecord, h_rec: StructureRecord, rep: Representation | Sequence) -> bool:
    """Both conditions on phi(A)^s and phi(A)^a for every basis vector A of h."""
    _require_pk(g_rec, "g")
    _require_pk(h_rec, "h")
    if not isinstance(rep, Representation):
        rep = Representation(h_rec.algebra, rep, g_rec.dim)
    return bool(pk_condition_items(g_rec, h_rec, rep))


def is_trivial_extension(rep: Representation, g) -> bool:
    return all(sym_part(p, g).is_zero() for p in rep.phi)


def check_abelian_cx_conditions(g_rec: StructureRecord, h_rec: StructureRecord, rep: Representation) -> bool:
    if not (is_abelian_complex(g_rec.algebra, g_rec.J) and is_abelian_complex(h_rec.algebra, h_rec.J)):
        return False
    g = g_rec.metric
    for A in range(h_rec.dim):
        lhs = anti_part(rep(h_rec.J.col(A)), g) @ g_rec.J
        if lhs != anti_part(rep(A), g):
            return False
    return True


# (A, B1, B2) triples for extensions by the flat Kahler R^2


@dataclass(frozen=True)
class ABTriple:
    A: Matrix
    B1: Matrix
    B2: Matrix

    def representation(self, J: Matrix, h_alg: LieAlgebra | None = None) -> Representation:
        h_alg = h_alg or LieAlgebra.abelian(2)
        return Representation(h_alg, [self.A + self.B1, J @ self.A + self.B2], self.A.nrows)


def standard_R2() -> StructureRecord:
    """Abelian R^2 with the Euclidean metric and J a1 = a2."""
    return StructureRecord(LieAlgebra.abelian(2, "R2"), Metric(Matrix.identity(2)), Matrix([[0, -1], [1, 0]]), name="R2")


def decompose_AB1B2(g_rec: StructureRecord, rep: Representation, h_rec: StructureRecord | None = None) -> ABTriple:
    std = standard_R2()
    if h_rec is not None and (h_rec.algebra != std.algebra or h_rec.g != std.g or h_rec.J != std.J):
        raise ExtensionError("h must be R^2 with the Euclidean metric and J a1 = a2")
    if rep.domain.dim != 2 or not rep.domain.is_abelian():
        raise ExtensionError("h must be R^2 with the Euclidean metric and J a1 = a2")
    g = g_rec.metric
    A, B1 = sym_anti_split(rep(0), g)
    S2, B2 = sym_anti_split(rep(1), g)
    if S2 != g_rec.J @ A:
        raise ExtensionError("phi(a2)^s differs from J phi(a1)^s")
    return ABTriple(A, B1, B2)


def ab_constraint_items(t: ABTriple, g_rec: StructureRecord) -> Diagnostics:
    g, J = g_rec.metric, g_rec.J
    alg = g_rec.algebra
    d = Diagnostics()
    d["A_symmetric"] = g.adjoint(t.A) == t.A
    d["A_anticommutes_J"] = (t.A @ J + J @ t.A).is_zero()
    for k, B in (("B1", t.B1), ("B2", t.B2)):
        d[f"{k}_antisymmetric"] = g.adjoint(B) == -B
        d[f"{k}_commutes_J"] = commutator(B, J).is_zero()
    d["A+B1_derivation"] = alg.is_derivation(t.A + t.B1)
    d["JA+B2_derivation"] = alg.is_derivation(J @ t.A + t.B2)
    d["[A,B2]=J[A,B1]"] = commutator(t.A, t.B2) == J @ commutator(t.A, t.B1)
    d["[B1,B2]=2JA^2"] = commutator(t.B1, t.B2) == (J @ t.A @ t.A) * 2
    return d


def check_AB1B2_constraints(t: ABTriple, g_rec: StructureRecord) -> bool:
    return bool(ab_constraint_items(t, g_rec))


# hypersymplectic extension conditions


def hs_condition_items(ext: Extension, blocks: HSBlocks) -> Diagnostics:
    n, m = ext.n, ext.m
    g = ext.g_rec.metric
    gam_g = ext.g_rec.geometry.connection
    gam_h = ext.h_rec.geometry.connection
    E1, E2, E3, E4 = blocks.E1, blocks.E2, blocks.E3, blocks.E4
    rep = ext.rep
    split = [sym_anti_split(p, g) for p in rep.phi]

    def phis(v) -> Matrix:
        return sym_part(rep(v), g) if any(v) else Matrix.zeros(n)

    d = Diagnostics()
    d["h_parallel_E4"] = gam_h.parallel(E4)
    d["anti_E2"] = all(split[a][1] @ E2 == E2 @ gam_h.gammas[a] for a in range(m))
    d["anti_E1"] = all(commutator(split[a][1], E1).is_zero() for a in range(m))
    d["sym_E2"] = all(
        split[b][0] @ E2.col(c) == split[c][0] @ E2.col(b) for b in range(m) for c in range(b + 1, m)
    )
    ok5 = True
    for c in range(m):
        E2c = E2.col(c)
        rhs_mat = E1 @ split[c][0] - phis(E4.col(c))
        G_rhs = g.matrix.T @ rhs_mat  # entry (y, x) = g(rhs e_x, e_y)
        for x in range(n):
            nab = gam_g.gammas[x]
            for y in range(n):
                if g(nab.col(y), E2c) != G_rhs[y, x]:
                    ok5 = False
                    break
            if not ok5:
                break
        if not ok5:
            break
    d["connection_E2"] = ok5
    ok6 = True
    E3_sym = [phis(E3.col(y)) for y in range(n)]
    for x in range(n):
        DE1 = gam_g.derivative(x, E1)
        for y in range(n):
            for z in range(n):
                lhs = g(DE1.col(y), unit_vec(n, z))
                rhs = g(E3_sym[y].col(z), unit_vec(n, x)) - g(E3_sym[z].col(y), unit_vec(n, x))
                if lhs != rhs:
                    ok6 = False
                    break
            if not ok6:
                break
        if not ok6:
            break
    d["connection_E1"] = ok6
    return d


def check_hs_extension_conditions(ext: Extension, blocks: HSBlocks | None = None) -> bool:
    """Six block conditions for E to be parallel on the product.

    The assembled E must be almost hypersymplectic; violations raise
    CompatibilityError naming the failing identities.
    """
    blocks = blocks if blocks is not None else ext.blocks
    if blocks is None:
        raise ExtensionError("no E blocks supplied")
    if blocks.E1.nrows != ext.n or blocks.E4.nrows != ext.m:
        raise ExtensionError("E blocks do not match the factor dimensions")
    d = check_unitary_compat(ext.product.metric, ext.product.J, blocks.assemble())
    if not d:
        raise CompatibilityError(d)
    return bool(hs_condition_items(ext, blocks))


def product_is_hypersymplectic(ext: Extension, blocks: HSBlocks) -> bool:
    rec = ext.product.with_E(blocks.assemble(), validate=False)
    return is_hypersymplectic(rec)


# quotient by a J_h-invariant ideal inside ker(phi)


def orthogonal_complement(sub: Subspace, G: Matrix) -> list[Vector]:
    if not sub.dim:
        return [unit_vec(G.nrows, i) for i in range(G.nrows)]
    return kernel_of_rows([G @ v for v in sub.basis], G.nrows)


def quotient_by_kernel_ideal(ext: Extension, k: Subspace | Sequence[Sequence]) -> Extension:
    h = ext.h_rec
    m = h.dim
    if not isinstance(k, Subspace):
        k = Subspace(m, k)
    if k.ambient != m:
        raise ExtensionError("subspace lives in the wrong space")
    for v in k.basis:
        if not ext.rep(v).is_zero():
            raise ExtensionError("subspace is not contained in the kernel of phi")
    alg = h.algebra
    for v in k.basis:
        for i in range(m):
            if not k.contains(alg.bracket(unit_vec(m, i), v)):
                raise ExtensionError("subspace is not an ideal of h")
    if not k.is_invariant(h.J):
        raise ExtensionError("subspace is not J_h-invariant")
    kb = list(k.basis)
    restricted = Matrix([[h.metric(u, v) for v in kb] for u in kb]) if kb else None
    if restricted is not None and not restricted.is_invertible():
        raise ExtensionError("metric restricted to the subspace is degenerate")
    comp = orthogonal_complement(k, h.g)
    r = len(comp)
    frame = Matrix.from_columns(comp + kb)  # columns: complement then k

    def coords(v) -> Vector:
        return solve(frame, v)[:r]

    br = {}
    for i in range(r):
        for j in range(i + 1, r):
            w = coords(alg.bracket(comp[i], comp[j]))
            if any(w):
                br[(i, j)] = w
    q_alg = LieAlgebra(r, br, name=f"{alg.name}/k" if alg.name else "")
    q_metric = Matrix([[h.metric(u, v) for v in comp] for u in comp])
    q_J = Matrix.from_columns([coords(h.J @ u) for u in comp])
    q_rec = StructureRecord(q_alg, Metric(q_metric), q_J, name=f"{h.name}/k")
    q_rep = Representation(q_alg, [ext.rep(u) for u in comp], ext.n)
    return build_semidirect(ext.g_rec, q_rec, q_rep, name=f"{ext.product.name}/k")


# extensions by an abelian algebra of derivations


def _span_basis(mats: Sequence[Matrix]) -> list[Matrix]:
    if not mats:
        return []
    r, c = mats[0].shape
    rows = rref_rows([m.flat() for m in mats], r * c)
    return [Matrix([row[i * c:(i + 1) * c] for i in range(r)]) for row in rows]


def _in_span(basis: Sequence[Matrix], m: Matrix) -> bool:
    if m.is_zero():
        return True
    if not basis:
        return False
    r, c = m.shape
    return len(rref_rows([b.flat() for b in basis] + [m.flat()], r * c)) == len(basis)


def _coords_in(basis: Sequence[Matrix], m: Matrix) -> Vector:
    cols = Matrix.from_columns([b.flat() for b in basis])
    return solve(cols, m.flat())


def build_from_derivation_subalgebra(
    g_rec: StructureRecord,
    h_basis: Sequence,
    J0: Matrix | None = None,
    h_metric: Matrix | None = None,
) -> Extension:
    """Extension of g by an abelian algebra of derivations acting by inclusion.

    The basis used for h is a basis of its symmetric part followed by one of
    its antisymmetric part. On the symmetric part J_h(A) = J o A; on the
    antisymmetric part ``J0`` (default: pair consecutive vectors) is used.
    The default metric is I + J_h^T J_h, which is always compatible.
    """
    mats = [matrix(x) for x in h_basis]
    if not mats or all(x.is_zero() for x in mats):
        raise ExtensionError("the derivation algebra is zero")
    n = g_rec.dim
    alg, g, J = g_rec.algebra, g_rec.metric, g_rec.J
    span = _span_basis(mats)
    if len(span) != len(mats):
        raise ExtensionError("the given derivations are linearly dependent")
    for x in mats:
        if x.shape != (n, n) or not alg.is_derivation(x):
            raise ExtensionError("an element of h is not a derivation of g")
    for i, x in enumerate(mats):
        for y in mats[i + 1:]:
            if not commutator(x, y).is_zero():
                raise ExtensionError("h is not abelian")
    for x in mats:
        if not _in_span(span, g.adjoint(x)):
            raise ExtensionError("h is not closed under the metric adjoint")
    h1 = _span_basis([sym_part(x, g) for x in mats])
    h0 = _span_basis([anti_part(x, g) for x in mats])
    if len(h0) % 2:
        raise ExtensionError("the antisymmetric part of h is odd-dimensional")
    for x in h0:
        if not commutator(x, J).is_zero():
            raise ExtensionError("an antisymmetric element of h does not commute with J")
    for x in h1:
        if not _in_span(h1, J @ x):
            raise ExtensionError("J o A leaves the symmetric part of h")
    r1, r0 = len(h1), len(h0)
    basis = h1 + h0
    m = r1 + r0
    Jh1 = Matrix.from_columns([_coords_in(h1, J @ x) for x in h1]) if r1 else None
    if r0 == 0:
        J0 = None
    else:
        if J0 is None:
            J0 = Matrix.from_entries(r0, {e: v for k in range(0, r0, 2) for e, v in (((k + 1, k), 1), ((k, k + 1), -1))})
        J0 = matrix(J0)
        if J0.shape != (r0, r0):
            raise ExtensionError("complex structure on the antisymmetric part has the wrong size")
    if Jh1 is None:
        Jh = J0
    elif r0 == 0:
        Jh = Jh1
    else:
        Jh = Matrix.direct_sum(Jh1, J0)
    H = matrix(h_metric) if h_metric is not None else Matrix.identity(m) + Jh.T @ Jh
    h_rec = StructureRecord(LieAlgebra.abelian(m), Metric(H), Jh, name="h")
    return build_semidirect(g_rec, h_rec, Representation(h_rec.algebra, basis, n))


# AW-relatedness for supplied maps


def _is_homomorphism(alg: LieAlgebra, alg2: LieAlgebra, f: Matrix) -> bool:
    cols = f.columns()
    n = alg.dim
    return all(
        f @ alg.bracket_basis(i, j) == alg2.bracket(cols[i], cols[j]) for i in range(n) for j in range(i + 1, n)
    )


def aw_related_items(ext: Extension, ext2: Extension, f_g: Matrix, f_h: Matrix) -> Diagnostics:
    f_g, f_h = matrix(f_g), matrix(f_h)
    d = Diagnostics()
    shapes = f_g.shape == (ext2.n, ext.n) and f_h.shape == (ext2.m, ext.m)
    iso = (
        shapes
        and f_g.is_square()
        and f_h.is_square()
        and f_g.is_invertible()
        and f_h.is_invertible()
        and _is_homomorphism(ext.g_rec.algebra, ext2.g_rec.algebra, f_g)
        and _is_homomorphism(ext.h_rec.algebra, ext2.h_rec.algebra, f_h)
    )
    d["isomorphisms"] = bool(iso)
    if not iso:
        for k in ("metrics", "complex_structures", "symmetric_part", "commutator"):
            d[k] = False
        return d
    d["metrics"] = f_g.T @ ext2.g_rec.g @ f_g == ext.g_rec.g and f_h.T @ ext2.h_rec.g @ f_h == ext.h_rec.g
    d["complex_structures"] = f_g @ ext.g_rec.J == ext2.g_rec.J @ f_g and f_h @ ext.h_rec.J == ext2.h_rec.J @ f_h
    finv = f_g.inverse()
    conj = [f_g @ p @ finv for p in ext.rep.phi]
    g2 = ext2.g_rec.metric
    d["symmetric_part"] = all(sym_part(conj[a] - ext2.rep(f_h.col(a)), g2).is_zero() for a in range(ext.m))
    d["commutator"] = all(commutator(c, p).is_zero() for c in conj for p in ext2.rep.phi)
    return d


def check_aw_related(ext: Extension, ext2: Extension, f_g: Matrix, f_h: Matrix) -> Diagnostics:
    """Itemized check of the AW conditions for the given pair of maps."""
    return aw_related_items(ext, ext2, f_g, f_h)


def direct_product(g_rec: StructureRecord, h_rec: StructureRecord) -> Extension:
    return build_semidirect(g_rec, h_rec, Representation.zero(h_rec.algebra, g_rec.dim))
