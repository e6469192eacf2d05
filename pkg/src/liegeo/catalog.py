"""Built-in examples with the properties claimed for them.

Each entry builds a StructureRecord or an Extension from rational parameter
bindings, lists a grid of sample bindings and states the expected values of
report fields at any binding. ``run`` recomputes the report and compares.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Mapping, Sequence

from .geometry import Metric
from .lie import LieAlgebra, Subspace
from .linalg import ZERO, Matrix, frac, unit_vec
from .report import VerificationReport, verify_extension, verify_record
from .salamon import parse_salamon
from .semidirect import (
    ABTriple,
    Extension,
    HSBlocks,
    Representation,
    build_semidirect,
    check_AB1B2_constraints,
    check_aw_related,
    decompose_AB1B2,
    direct_product,
    standard_R2,
)
from .structures import StructureRecord, form_from_string, J_from_pairs


class CatalogError(ValueError):
    pass


class UnknownEntryError(CatalogError, KeyError):
    def __str__(self):
        return self.args[0] if self.args else "unknown catalog entry"


class DomainError(CatalogError):
    """A parameter binding lies outside the documented domain."""


class MissingDataError(CatalogError):
    """The entry needs data that has to be supplied by the caller."""


@dataclass(frozen=True)
class Param:
    name: str
    default: Any
    doc: str = ""
    kind: str = "rational"  # or "text"


@dataclass(frozen=True)
class Claim:
    value: Any


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    title: str
    builder: Callable[[dict], Any]
    params: tuple[Param, ...] = ()
    claims: Callable[[dict], dict] = lambda b: {}
    domain: Callable[[dict], str | None] = lambda b: None
    grid: tuple[dict, ...] = ({},)
    data_complete: bool = True
    extra: Callable[[Any, dict], dict] | None = None
    note: str = ""
    errata: Mapping[str, str] = field(default_factory=dict)

    def bind(self, bindings: Mapping | None = None) -> dict:
        bindings = dict(bindings or {})
        names = {p.name for p in self.params}
        unknown = set(bindings) - names
        if unknown:
            raise DomainError(f"{self.id}: unknown parameter(s) {', '.join(sorted(unknown))}")
        out = {}
        for p in self.params:
            v = bindings.get(p.name, p.default)
            if v is None:
                raise MissingDataError(f"{self.id}: parameter {p.name!r} must be supplied")
            out[p.name] = frac(v) if p.kind == "rational" else v
        problem = self.domain(out)
        if problem:
            raise DomainError(f"{self.id}: {problem}")
        return out


# shared building blocks


def _rec(alg: LieAlgebra, g, J, E=None, name: str = "") -> StructureRecord:
    return StructureRecord(alg, Metric(Matrix(g) if not isinstance(g, Matrix) else g), J, E, name=name)


def _sym(n: int, pairs: Mapping[tuple[int, int], Any]) -> Matrix:
    """Symmetric matrix from 1-based entries; off-diagonal pairs mean e^i (.) e^j."""
    ent = {}
    for (i, j), v in pairs.items():
        ent[(i - 1, j - 1)] = frac(v) + ent.get((i - 1, j - 1), ZERO)
        if i != j:
            ent[(j - 1, i - 1)] = frac(v) + ent.get((j - 1, i - 1), ZERO)
    return Matrix.from_entries(n, ent)


def _J(n: int, images: Mapping[int, Mapping[int, Any]]) -> Matrix:
    """J from 1-based images {i: {k: coeff}} meaning J e_i = sum coeff e_k, closed under J^2=-1."""
    cols: dict[int, tuple] = {}
    for i, img in images.items():
        v = [ZERO] * n
        for k, c in img.items():
            v[k - 1] = frac(c)
        cols[i - 1] = tuple(v)
    for i, v in list(cols.items()):
        nz = [k for k, x in enumerate(v) if x]
        if len(nz) == 1 and nz[0] not in cols:
            k = nz[0]
            cols[k] = tuple(-1 / v[k] if t == i else ZERO for t in range(n))
    if len(cols) != n:
        raise CatalogError("complex structure not determined on the whole basis")
    return Matrix.from_columns([cols[i] for i in range(n)])


def _phi_from_images(n: int, images: Mapping[int, Mapping[int, Any]]) -> Matrix:
    """Endomorphism from 1-based images {j: {k: coeff}}; unlisted basis vectors go to 0."""
    ent = {}
    for j, img in images.items():
        for k, c in img.items():
            ent[(k - 1, j - 1)] = frac(c)
    return Matrix.from_entries(n, ent)


def _span(n: int, vectors: Sequence[Mapping[int, Any]]) -> Subspace:
    out = []
    for v in vectors:
        w = [ZERO] * n
        for k, c in v.items():
            w[k - 1] = frac(c)
        out.append(w)
    return Subspace(n, out)


def euclidean_R2(sign: int = 1, name: str = "R2") -> StructureRecord:
    return _rec(LieAlgebra.abelian(2, name), Matrix.identity(2) * sign, _J(2, {1: {2: 1}}), name=name)


def r4_diag(signs: Sequence[int], pairs: Sequence[tuple[int, int]], name: str = "R4") -> StructureRecord:
    n = len(signs)
    return _rec(LieAlgebra.abelian(n, name), Matrix.diag(*signs), _J(n, {a: {b: 1} for a, b in pairs}), name=name)


def pseudokahler_R4() -> StructureRecord:
    """Neutral R^4: g = diag(1,-1,1,-1), J e1 = e3, J e2 = e4."""
    return r4_diag([1, -1, 1, -1], [(1, 3), (2, 4)], "R4")


def rh3_algebra() -> LieAlgebra:
    return LieAlgebra(4, {(0, 1): {2: 1}}, name="rh3")


def rh3_kahler() -> StructureRecord:
    """rh3 with g = e1(.)e3 + e2(.)e4, J e1 = e2, J e3 = e4."""
    return _rec(rh3_algebra(), _sym(4, {(1, 3): 1, (2, 4): 1}), _J(4, {1: {2: 1}, 3: {4: 1}}), name="rh3")


def r2prime_algebra() -> LieAlgebra:
    return LieAlgebra(4, {(0, 2): {2: 1}, (0, 3): {3: 1}, (1, 2): {3: 1}, (1, 3): {2: -1}}, name="r2'")


R2PRIME_J = Matrix([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])


def r2prime_metric(a12, a13, a14) -> Matrix:
    return Matrix([[a12, 0, -frac(a14), a13], [0, a12, a13, a14], [-frac(a14), a13, 0, 0], [a13, a14, 0, 0]])


def r2prime_kahler(a12=1, a13=1, a14=0) -> StructureRecord:
    return _rec(r2prime_algebra(), r2prime_metric(a12, a13, a14), R2PRIME_J, name="r2'")


def r2prime_list_metric(x, y, z) -> Matrix:
    """x(e1^2 + e2^2) + y(e2(.)e4 - e1(.)e3) + z(e1(.)e4 + e2(.)e3)."""
    return _sym(4, {(1, 1): x, (2, 2): x, (2, 4): y, (1, 3): -frac(y), (1, 4): z, (2, 3): z})


def flat_hs_R4n(n: int = 1, name: str = "") -> StructureRecord:
    """Flat hypersymplectic R^{4n} with block J, E and the anti-diagonal metric."""
    I = Matrix([[1 if i + j == n - 1 else 0 for j in range(n)] for i in range(n)])
    Z = Matrix.zeros(n)
    g = Matrix.block([[Z, Z, Z, I], [Z, Z, -I, Z], [Z, -I, Z, Z], [I, Z, Z, Z]])
    one = Matrix.identity(2 * n)
    zero = Matrix.zeros(2 * n)
    J = Matrix.block([[zero, -one], [one, zero]])
    E = Matrix.block([[one, zero], [zero, -one]])
    return StructureRecord(LieAlgebra.abelian(4 * n, f"R{4 * n}"), Metric(g), J, E, name=name or f"R{4 * n}")


def flat_hs_R4() -> StructureRecord:
    return flat_hs_R4n(1, "flat_HS_R4")


NONKODAIRA_PHI = Matrix([[0, 1, 0, 0], [0, 0, 0, 0], [0, 0, 0, 1], [0, 0, 0, 0]])

EX1_PHI1 = Matrix([[1, 1, 1, 1], [1, -1, 1, -1], [-1, -1, -1, -1], [-1, 1, -1, 1]])
EX1_PHI2 = Matrix([[-1, 1, -1, 1], [1, 1, 1, 1], [1, -1, 1, -1], [-1, -1, -1, -1]])
SEMISIMPLE_PHI1 = Matrix([[1, 2, -1, 0], [0, 1, 0, 1], [1, 0, -1, 0], [0, -1, 2, -1]])
SEMISIMPLE_PHI2 = Matrix([[0, 1, 2, 1], [1, 0, -1, 0], [0, 1, 0, 1], [-1, 2, 1, 0]])


def _zeros(n: int, k: int) -> list[Matrix]:
    return [Matrix.zeros(n)] * k


# builders


def b_withthenotation(p):
    l = p["lambda"]
    g = euclidean_R2(1, "R2")
    h = euclidean_R2(-1, "R2")
    return build_semidirect(g, h, [g.J * l, Matrix.zeros(2)], name="withthenotation")


def b_sec2_ex1(p):
    g = r4_diag([1, 1, -1, -1], [(1, 2), (3, 4)])
    return build_semidirect(g, euclidean_R2(), [EX1_PHI1, EX1_PHI2], name="sec2_ex1")


def b_sec2_ex2(p):
    g = pseudokahler_R4()
    return build_semidirect(g, pseudokahler_R4(), [SEMISIMPLE_PHI1, SEMISIMPLE_PHI1, SEMISIMPLE_PHI2, SEMISIMPLE_PHI2], name="sec2_ex2")


def b_sec2_ex3(p):
    g = r4_diag([1, 1, 1, 1, -1, -1], [(1, 2), (3, 4), (5, 6)], "R6")
    p1 = Matrix([
        [1, 0, 0, 0, 0, 1], [0, -1, 0, 0, 1, 0], [0] * 6, [0] * 6,
        [0, -1, 0, 0, 1, 0], [-1, 0, 0, 0, 0, -1],
    ])
    p2 = Matrix([
        [0, 1, 0, 0, -1, 0], [1, 0, 0, 0, 0, 1], [0] * 6, [0] * 6,
        [1, 0, 0, 0, 0, 1], [0, -1, 0, 0, 1, 0],
    ])
    return build_semidirect(g, euclidean_R2(-1), [p1, p2], name="sec2_ex3")


def three_step_6dim(printed: bool = False) -> StructureRecord:
    """3-step nilpotent base; J e3 = -e4 makes J integrable (printed: J e3 = e4, N(e1,e3) = 2e5)."""
    alg = LieAlgebra(6, {(0, 1): {3: 1}, (1, 2): {5: 1}, (1, 3): {4: 1}}, name="g6_3step")
    g = _sym(6, {(1, 5): -1, (2, 6): -1, (3, 3): -1, (4, 4): -1})
    s = 1 if printed else -1
    return _rec(alg, g, _J(6, {1: {2: 1}, 3: {4: s}, 5: {6: 1}}), name="g6_3step")


def two_step_6dim() -> StructureRecord:
    """2-step nilpotent base as printed; its Kahler form is not closed (d omega = 2 e123)."""
    alg = LieAlgebra(6, {(0, 2): {4: -1}, (1, 2): {5: 1}}, name="g6_2step")
    g = _sym(6, {(1, 5): 1, (2, 6): -1, (3, 3): 1, (4, 4): 1})
    return _rec(alg, g, _J(6, {1: {2: -1}, 3: {4: 1}, 5: {6: 1}}), name="g6_2step")


def b_8dim_3step(p):
    x, y = p["x"], p["y"]
    p1 = _phi_from_images(6, {1: {5: x, 6: y}, 2: {5: y, 6: -x}})
    p2 = _phi_from_images(6, {2: {5: x, 6: y}, 1: {5: -y, 6: x}})
    return build_semidirect(three_step_6dim(), euclidean_R2(), [p1, p2], name="8dim_3step")


def b_8dim_2step(p):
    x, y = p["x"], p["y"]
    p1 = _phi_from_images(6, {1: {5: x, 6: -y}, 2: {5: y, 6: x}})
    p2 = _phi_from_images(6, {2: {5: -x, 6: y}, 1: {5: y, 6: x}})
    return build_semidirect(two_step_6dim(), euclidean_R2(), [p1, p2], name="8dim_2step")


def b_8dim_2step_variant(p):
    x1, x2, x3, x4 = p["x1"], p["x2"], p["x3"], p["x4"]
    z = [0] * 6
    p1 = Matrix([z, z, z, [x1, x2, 0, 0, 0, 0], [x3, x4, x2, 0, 0, 0], [x4, x3, x1, 0, 0, 0]])
    p2 = Matrix([z, z, z, [x2, -x1, 0, 0, 0, 0], [0, -2 * x3, -x1, 0, 0, 0], [0, 0, x2, 0, 0, 0]])
    return build_semidirect(two_step_6dim(), euclidean_R2(), [p1, p2], name="8dim_2step_variant")


def rh3_ovando_variant() -> StructureRecord:
    """rh3 with g = e1(.)e3 + e2(.)e4 - e1^2 - e2^2, J e1 = e2, J e3 = e4."""
    g = _sym(4, {(1, 3): 1, (2, 4): 1, (1, 1): -1, (2, 2): -1})
    return _rec(rh3_algebra(), g, _J(4, {1: {2: 1}, 3: {4: 1}}), name="rh3")


def b_r2prime_aff(p):
    x1, x2, y1, y2 = p["x1"], p["x2"], p["y1"], p["y2"]
    h = p.get("h_record") or r2prime_kahler(p["a12"], p["a13"], p["a14"])
    half = Fraction(1, 2)
    p1 = Matrix([[0] * 4, [0] * 4, [-half * (y1 + y2), x1, 0, 0], [x2, half * (y1 + y2), 0, 0]])
    p2 = Matrix([[0] * 4, [0] * 4, [half * (x1 + x2), y1, 0, 0], [y2, -half * (x1 + x2), 0, 0]])
    return build_semidirect(rh3_ovando_variant(), h, [p1, p2, Matrix.zeros(4), Matrix.zeros(4)], name="r2prime_aff")


def rr30_algebra() -> LieAlgebra:
    return LieAlgebra(4, {(0, 1): {1: 1}}, name="rr30")


def rr30_kahler(h_metric=None) -> StructureRecord:
    """rr_{3,0} with J a1 = a2, J a3 = a4; the default metric is the identity."""
    g = Matrix(h_metric) if h_metric is not None else Matrix.identity(4)
    return _rec(rr30_algebra(), g, _J(4, {1: {2: 1}, 3: {4: 1}}), name="rr30")


def _rr30_h(p) -> StructureRecord:
    rec = p.get("h_record")
    return rec if rec is not None else rr30_kahler()


def b_rr30_R2(p):
    half = Fraction(1, 2)
    p1 = Matrix([[0, half], [half, 0]])
    p2 = Matrix([[-half, half], [-half, half]])
    return build_semidirect(euclidean_R2(), _rr30_h(p), [p1, p2, Matrix.zeros(2), Matrix.zeros(2)], name="rr30_R2")


def b_rr30_R4(p):
    x, y = p["x"], p["y"]
    half = Fraction(1, 2)
    p1 = Matrix([[0, half, 0, 0], [half, 0, 0, 0], [0, 0, 0, half], [0, 0, half, 0]])
    p2 = Matrix([[-half, half, 0, 0], [-half, half, 0, 0], [0, 0, -half, half], [0, 0, -half, half]])
    K = Matrix([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])
    g = r4_diag([1, 1, 1, 1], [(1, 2), (3, 4)])
    return build_semidirect(g, _rr30_h(p), [p1, p2, K * x, K * y], name="rr30_R4")


RH3_FLAT_PHI1 = Matrix([[0] * 4, [0] * 4, [1, 0, 0, 0], [0, -1, 0, 0]])
RH3_FLAT_PHI2 = Matrix([[0] * 4, [0] * 4, [0, 1, 0, 0], [1, 0, 0, 0]])


def b_rh3_rh3_flat(p):
    g = rh3_kahler()
    return build_semidirect(g, rh3_kahler(), [RH3_FLAT_PHI1, RH3_FLAT_PHI2, Matrix.zeros(4), Matrix.zeros(4)], name="rh3_rh3_flat")


def semisimple_triple(a, k1, k2) -> ABTriple:
    """(A, B1, B2) with A semisimple on R^4, diag(1,-1,1,-1), J e1 = e3, J e2 = e4; needs k1^2 + k2^2 = 2a^2."""
    A = Matrix([[a, a, 0, 0], [-a, a, 0, 0], [0, 0, -a, -a], [0, 0, a, -a]])
    B1 = Matrix([[0, k1, -k2, 0], [k1, 0, 0, k2], [k2, 0, 0, k1], [0, -k2, k1, 0]])
    B2 = Matrix([[0, k2, k1, 0], [k2, 0, 0, -k1], [-k1, 0, 0, k2], [0, k1, k2, 0]])
    return ABTriple(A, B1, B2)


def nonsemisimple_triple(a, nu1, nu2, mu1, mu2) -> ABTriple:
    """(A, B1, B2) with A nilpotent on R^4, diag(1,1,-1,-1), J e1 = e2, J e3 = e4; needs (nu1,nu2), (mu1,mu2) dependent."""
    A = Matrix([[a, 0, -a, 0], [0, -a, 0, a], [a, 0, -a, 0], [0, -a, 0, a]])
    B1 = Matrix([
        [0, nu2 - mu1, mu2, mu1], [-nu2 + mu1, 0, -mu1, mu2],
        [mu2, -mu1, 0, nu2 + mu1], [mu1, mu2, -nu2 - mu1, 0],
    ])
    B2 = Matrix([
        [0, -mu2 - nu1, nu2, nu1], [mu2 + nu1, 0, -nu1, nu2],
        [nu2, -nu1, 0, -mu2 + nu1], [nu1, nu2, mu2 - nu1, 0],
    ])
    return ABTriple(A, B1, B2)


def nonsemisimple_base() -> StructureRecord:
    return r4_diag([1, 1, -1, -1], [(1, 2), (3, 4)])


def b_class_R4_semisimple(p):
    a = p["a"]
    return build_semidirect(pseudokahler_R4(), standard_R2(), [SEMISIMPLE_PHI1 * a, SEMISIMPLE_PHI2 * a], name="class_R4_semisimple")


def nonsemisimple_phis(a, b, c) -> tuple[Matrix, Matrix]:
    p1 = Matrix([
        [a, -a + c, -b, b],
        [a + c, -a, -b, b],
        [b, -b, -a, a + c],
        [b, -b, -a + c, a],
    ])
    p2 = Matrix([
        [0, 0, a - c, -a],
        [0, 0, a, -a - c],
        [a + c, -a, 0, 0],
        [a, -a + c, 0, 0],
    ])
    return p1, p2


def b_class_R4_nonsemisimple(p):
    p1, p2 = nonsemisimple_phis(p["a"], p["b"], p["c"])
    return build_semidirect(pseudokahler_R4(), standard_R2(), [p1, p2], name="class_R4_nonsemisimple")


def b_class_rh3(p):
    a = p["a"]
    return build_semidirect(rh3_kahler(), standard_R2(), [RH3_FLAT_PHI1 * a, RH3_FLAT_PHI2 * a], name="class_rh3")


def r2prime_list_kahler(x, y, z) -> StructureRecord:
    return _rec(r2prime_algebra(), r2prime_list_metric(x, y, z), R2PRIME_J, name="r2'")


def r2prime_phis(a) -> tuple[Matrix, Matrix]:
    p1 = Matrix([[0] * 4, [0] * 4, [a, 0, 0, 0], [0, a, 0, 0]])
    p2 = Matrix([[0] * 4, [0] * 4, [0, -a, 0, 0], [a, 0, 0, 0]])
    return p1, p2


def b_class_r2prime(p):
    p1, p2 = r2prime_phis(p["a"])
    return build_semidirect(r2prime_list_kahler(p["x"], p["y"], p["z"]), standard_R2(), [p1, p2], name="class_r2prime")


# the explicit 6-dimensional list, entered as structure equations

LIST_SEMISIMPLE = (
    "(e15+2e25+e26-e35+2e36+e46, e16+e25-e36+e45, "
    "e15+e26-e35+e46, -e16-e25+2e26+2e35+e36-e45, 0, 0)"
)
LIST_NONSEMISIMPLE = (
    "(e15-e25+c*e25-b*e35+e36-c*e36+b*e45-e46, -(1+c)(-e15+e46)+(-e25+e36)+b(-e35+e45), "
    "(1+c)(e16+e45)-(e26+e35)-b(-e15+e25), -(1-c)(e26+e35)+(e16+e45)-b(-e15+e25), 0, 0)"
)
LIST_RH3 = "(0, 0, a*(e15+e26)-e12, -a*(-e16+e25), 0, 0)"
LIST_R2PRIME = "(0, 0, -a*(-e15+e26)-e13+e24, a*(e16+e25)-e14-e23, 0, 0)"

# printed Kahler forms; the first one is inconsistent with its metric (see LIST_ERRATA)
PRINTED_OMEGA = {
    "list_R4_semisimple": "e12-e34+e56",
    "list_R4_nonsemisimple": "e13-e24+e56",
    "list_rh3": "e14-e23+e56",
}
TWO_STEP_ERRATUM = (
    "the printed 6-dim base (brackets [e1,e3]=-e5, [e2,e3]=e6, J e1=-e2, J e3=e4, J e5=e6, "
    "g=e1(.)e5-e2(.)e6+e3^2+e4^2) has d omega = 2 e123, so neither it nor the extension is pseudo-Kahler; "
    "no sign change keeps the flat locus x^2+y^2=1/2, so the printed data is kept"
)

LIST_ERRATA = {
    "list_R4_semisimple": (
        "printed form e12-e34+e56 gives J^2 = +1 on span(e1,e2) for the printed metric "
        "diag(1,-1,1,-1,1,1); the form of J e1 = e3, J e2 = e4, J e5 = e6 is e13-e24+e56"
    ),
}


def _structure_from_omega(alg: LieAlgebra, G: Matrix, omega: str, name: str) -> StructureRecord:
    """J from omega(X, Y) = g(JX, Y), i.e. J = -G^{-1} Omega."""
    Om = form_from_string(alg.dim, omega).to_matrix()
    J = -(G.inverse() @ Om)
    return StructureRecord(alg, Metric(G), J, name=name)


LIST_METRIC_NEUTRAL = Matrix.diag(1, -1, 1, -1, 1, 1)


def b_list_R4_semisimple(p):
    alg = parse_salamon(LIST_SEMISIMPLE, name="list_R4_semisimple")
    return _structure_from_omega(alg, LIST_METRIC_NEUTRAL, "e13-e24+e56", "list_R4_semisimple")


def b_list_R4_nonsemisimple(p):
    alg = parse_salamon(LIST_NONSEMISIMPLE, {"b": p["b"], "c": p["c"]}, name="list_R4_nonsemisimple")
    return _structure_from_omega(alg, LIST_METRIC_NEUTRAL, "e13-e24+e56", "list_R4_nonsemisimple")


def b_list_rh3(p):
    alg = parse_salamon(LIST_RH3, {"a": p["a"]}, name="list_rh3")
    G = _sym(6, {(1, 3): 1, (2, 4): 1, (5, 5): 1, (6, 6): 1})
    return _structure_from_omega(alg, G, "e14-e23+e56", "list_rh3")


def list_r2prime_omega(x, y, z) -> str:
    from .structures import Form

    f = Form(6, 2, {(0, 1): -frac(x), (0, 2): -frac(z), (0, 3): -frac(y), (1, 2): -frac(y), (1, 3): z, (4, 5): 1})
    return f.to_string()


def b_list_r2prime(p):
    a, x, y, z = p["a"], p["x"], p["y"], p["z"]
    alg = parse_salamon(LIST_R2PRIME, {"a": a}, name="list_r2prime")
    G = Matrix.direct_sum(r2prime_list_metric(x, y, z), Matrix.identity(2))
    return _structure_from_omega(alg, G, list_r2prime_omega(x, y, z), "list_r2prime")


def b_kahleronr2(p):
    return r2prime_kahler(p["a12"], p["a13"], p["a14"])


def b_rh3(p):
    return rh3_kahler()


def b_pseudokahlerR4(p):
    return pseudokahler_R4()


def b_flat_HS_R4(p):
    return flat_hs_R4()


def trivial_pair_records() -> tuple[StructureRecord, StructureRecord]:
    return r4_diag([1, 1, -1, -1], [(1, 2), (3, 4)]), euclidean_R2(-1)


TRIVIAL_PAIR_PHI1 = Matrix([[0, -1, 0, 1], [1, 0, -1, 0], [0, -1, 0, 1], [1, 0, -1, 0]])
TRIVIAL_PAIR_PHI2 = Matrix([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])


def trivial_pair_extensions() -> tuple[Extension, Extension, Extension]:
    """(phi_1 extension, phi_2 extension, direct product)."""
    g, h = trivial_pair_records()
    e1 = build_semidirect(g, h, [TRIVIAL_PAIR_PHI1, Matrix.zeros(4)], name="trivial_pair_phi1")
    e2 = build_semidirect(g, h, [TRIVIAL_PAIR_PHI2, Matrix.zeros(4)], name="trivial_pair_phi2")
    return e1, e2, direct_product(g, h)


def b_remark_phi1_phi2(p):
    e1, e2, _ = trivial_pair_extensions()
    return e2 if p["which"] == 2 else e1


def x_trivial_pair(ext, p):
    e1, e2, d = trivial_pair_extensions()
    I4, I2 = Matrix.identity(4), Matrix.identity(2)
    pair = check_aw_related(e1, e2, I4, I2)
    return {
        "aw_phi1_direct": bool(check_aw_related(e1, d, I4, I2)),
        "aw_phi2_direct": bool(check_aw_related(e2, d, I4, I2)),
        "aw_phi1_phi2": bool(pair),
        "aw_phi1_phi2_failures": pair.failures(),
    }


def x_isometric_not_aw(ext, p):
    d = direct_product(ext.g_rec, ext.h_rec)
    I4 = Matrix.identity(4)
    return {
        "g_flat": ext.g_rec.geometry.is_flat(),
        "aw_identity_to_direct_product": bool(check_aw_related(ext, d, I4, I4)),
        "direct_product_flat": d.product.geometry.is_flat(),
    }


def _hs_pair(g: StructureRecord, h: StructureRecord, phis, name: str, blocks: HSBlocks | None = None) -> Extension:
    blocks = blocks or HSBlocks.diagonal(g.E, h.E)
    return build_semidirect(g, h, phis, blocks=blocks, name=name)


def b_hs_nonkodaira(p):
    g, h = flat_hs_R4(), flat_hs_R4()
    return _hs_pair(g, h, [NONKODAIRA_PHI] + _zeros(4, 3), "hs_nonkodaira")


def is_rh3(alg: LieAlgebra) -> bool:
    """Heisenberg times R: dimension 4 with a 1-dimensional derived algebra inside a 2-dimensional center."""
    der, z = alg.derived_algebra(), alg.center()
    return alg.dim == 4 and der.dim == 1 and z.dim == 2 and der <= z


def rh3_hypersymplectic() -> StructureRecord:
    """Flat hypersymplectic R^4 data with the single bracket [e1, e3] = e2, an algebra isomorphic to rh3."""
    base = flat_hs_R4()
    alg = LieAlgebra(4, {(0, 2): {1: 1}}, name="rh3")
    return StructureRecord(alg, base.metric, base.J, base.E, name="rh3_hs")


def b_hs_rh3_R4(p):
    h = p.get("h_record")
    if h is None:
        raise MissingDataError("hs_rh3_R4: supply a hypersymplectic structure on rh3 as 'h_record'")
    if not is_rh3(h.algebra) or h.E is None:
        raise DomainError("hs_rh3_R4: 'h_record' must be a hypersymplectic structure on rh3")
    g = flat_hs_R4()
    return _hs_pair(g, h, _zeros(4, 3) + [NONKODAIRA_PHI], "hs_rh3_R4")


HS_SOLVABLE_PHI = {
    1: Matrix.diag(1, -1, 1, -1),
    2: Matrix([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]),
}


def b_hs_2step_solvable(p):
    v = int(p["variant"])
    g, h = flat_hs_R4(), flat_hs_R4()
    if v == 3:
        phi = HS_SOLVABLE_PHI[1]
        return _hs_pair(g, h, [phi, Matrix.zeros(4), Matrix.zeros(4), phi], "hs_2step_solvable")
    return _hs_pair(g, h, [HS_SOLVABLE_PHI[v]] + _zeros(4, 3), "hs_2step_solvable")


def leading_free_basis(rec: StructureRecord) -> StructureRecord:
    """Reorder the basis so the first vector has zero coordinate on the derived algebra."""
    der = rec.algebra.derived_algebra()
    for i in range(rec.dim):
        if all(not v[i] for v in der.basis):
            if i == 0:
                return rec
            perm = [i] + [k for k in range(rec.dim) if k != i]
            return rec.permuted(perm)
    raise DomainError("the derived algebra has a component along every basis vector")


def _hs_record(hid: str) -> StructureRecord:
    obj = instantiate(hid)
    rec = obj.product if isinstance(obj, Extension) else obj
    if rec.E is None:
        raise DomainError(f"{hid} carries no para-complex structure")
    return rec


def b_hs_nonabelian(p):
    h = p.get("h_record") or _hs_record(p["h"])
    if not h.algebra.is_nilpotent():
        raise DomainError("h must be nilpotent")
    h = leading_free_basis(h)
    g = flat_hs_R4()
    return _hs_pair(g, h, [NONKODAIRA_PHI] + _zeros(4, h.dim - 1), "hs_nonabelian")


def b_hs_notkodaira(p):
    m = int(p["m"])
    g, h = flat_hs_R4(), flat_hs_R4n(m)
    return _hs_pair(g, h, [NONKODAIRA_PHI] + _zeros(4, h.dim - 1), "hs_notkodaira")


def b_hs_kodaira_8dim(p):
    g = r4_diag([1, 1, -1, -1], [(1, 2), (3, 4)])
    h = _rec(LieAlgebra.abelian(4), -g.g, -g.J, name="R4")
    q = Matrix([[1, -1, 1, -1], [-1, -1, -1, -1], [-1, 1, -1, 1], [1, 1, 1, 1]])
    I4, Z = Matrix.identity(4), Matrix.zeros(4)
    return build_semidirect(g, h, [EX1_PHI1, q, EX1_PHI1, q], blocks=HSBlocks(Z, I4, I4, Z), name="hs_kodaira_8dim")


def shift_matrix(n: int, k: int) -> Matrix:
    """n x n nilpotent matrix with A^k = 0 and A^{k-1} != 0 (one Jordan block of size k)."""
    if not 1 <= k <= n:
        raise DomainError("need 1 <= k <= n")
    return Matrix.from_entries(n, {(i, i + 1): 1 for i in range(k - 1)})


def n4n_matrix(A: Matrix) -> Matrix:
    n = A.nrows
    I = Matrix([[1 if i + j == n - 1 else 0 for j in range(n)] for i in range(n)])
    B = -(I @ A.T @ I)
    Z = Matrix.zeros(n)
    return Matrix.block([[A, Z, Z, Z], [Z, B, Z, Z], [Z, Z, A, Z], [Z, Z, Z, B]])


def _n4n_ext(A: Matrix, h: StructureRecord, name: str) -> Extension:
    n = A.nrows
    g = flat_hs_R4n(n)
    return _hs_pair(g, h, [n4n_matrix(A)] + _zeros(4 * n, h.dim - 1), name)


def b_arbitrarystep(p):
    n, k = int(p["n"]), int(p["k"])
    h = p.get("h_record") or (flat_hs_R4() if p["h"] == "R4" else _hs_record(p["h"]))
    return _n4n_ext(shift_matrix(n, k), h, "arbitrarystep")


def b_N4n(p):
    A = p.get("A")
    A = Matrix(A) if A is not None else shift_matrix(int(p["n"]), int(p["n"]))
    if A.nrows != int(p["n"]):
        raise DomainError("A must be n x n")
    return _n4n_ext(A, flat_hs_R4(), "N4n")


def x_ab_triple(ext, p):
    t = decompose_AB1B2(ext.g_rec, ext.rep, ext.h_rec)
    return {"ab_constraints": check_AB1B2_constraints(t, ext.g_rec)}


def x_derived(ext, p):
    alg = _alg(ext)
    return {"derived_series_dims": [s.dim for s in alg.derived_series()]}


def _alg(obj) -> LieAlgebra:
    return obj.product.algebra if isinstance(obj, Extension) else obj.algebra


# claims

Q = Fraction
P = Claim  # shorthand inside the tables


def c_withthenotation(b):
    l = b["lambda"]
    return {
        "pseudo_kahler": P(True),
        "flat": P(True),
        "trivial_extension": P(True),
        "pk_extension_conditions": P(True),
        "salamon": P(_salamon_l(l)),
    }


def _salamon_l(l) -> str:
    from .salamon import emit_salamon

    return emit_salamon(parse_salamon("(-l*e23, l*e13, 0, 0)", {"l": l}))


def c_sec2_ex1(b):
    return {
        "pseudo_kahler": P(True),
        "pk_extension_conditions": P(True),
        "nilpotency_step": P(2),
        "flat": P(False),
        "ricci_flat": P(True),
    }


def c_sec2_ex2(b):
    return {
        "pseudo_kahler": P(True),
        "pk_extension_conditions": P(True),
        "solvability_step": P(2),
        "derived_algebra": P(_basis_str(_span(8, [{1: 1}, {2: 1}, {3: 1}, {4: 1}]))),
        "flat": P(False),
    }


def c_sec2_ex3(b):
    return {
        "pseudo_kahler": P(True),
        "pk_extension_conditions": P(True),
        "nilpotency_step": P(2),
        "flat": P(False),
        "ricci_flat": P(True),
    }


def c_8dim_3step(b):
    x, y = b["x"], b["y"]
    return {
        "pseudo_kahler": P(True),
        "nilpotency_step": P(3),
        "derived_algebra": P(_basis_str(_span(8, [{4: 1}, {5: 1}, {6: 1}]))),
        "flat": P(x == 0 and y == 0),
        "ricci_flat": P(True),
    }


def c_8dim_2step(b):
    x, y = b["x"], b["y"]
    return {
        "pseudo_kahler": P(True),
        "nilpotency_step": P(2),
        "derived_algebra": P(_basis_str(_span(8, [{5: 1}, {6: 1}]))),
        "flat": P(x * x + y * y == Q(1, 2)),
        "ricci_flat": P(True),
    }


def c_8dim_2step_variant(b):
    out = {
        "pseudo_kahler": P(True),
        "nilpotency_step": P(2),
    }
    if b["x1"] or b["x2"]:
        out["derived_algebra"] = P(_basis_str(_span(8, [{4: 1}, {5: 1}, {6: 1}])))
    return out


def c_r2prime_aff(b):
    return {
        "pseudo_kahler": P(True),
        "pk_extension_conditions": P(True),
        "solvability_step": P(2),
        "derived_algebra": P(_basis_str(_span(8, [{3: 1}, {4: 1}, {7: 1}, {8: 1}]))),
        "flat": P(False),
    }


def c_rr30_R2(b):
    return {
        "pseudo_kahler": P(True),
        "derived_series": P(
            [_basis_str(_span(6, [{1: 1}, {2: 1}, {4: 1}])), _basis_str(_span(6, [{1: 1, 2: 1}])), _basis_str(Subspace(6))],
        ),
        "solvability_step": P(3),
        "unimodular": P(False),
        "flat": P(False),
        "ricci_flat": P(False),
    }


def c_rr30_R4(b):
    x, y = b["x"], b["y"]
    out = {
        "pseudo_kahler": P(True),
        "pk_extension_conditions": P(True),
        "solvability_step": P(3),
        "unimodular": P(False),
        "flat": P(False),
    }
    if x or y:
        out["center"] = P(_basis_str(_span(8, [{7: y, 8: -x}])))
        out["center_J_invariant"] = P(False)
    return out


def c_rh3_rh3_flat(b):
    return {
        "pseudo_kahler": P(True),
        "nilpotency_step": P(2),
        "g_flat": P(True),
        "flat": P(True),
        "trivial_extension": P(False),
        "phi_commute": P(True),
    }


def c_isometric_not_aw(b):
    out = c_rh3_rh3_flat(b)
    out["aw_identity_to_direct_product"] = P(False)
    out["direct_product_flat"] = P(True)
    return out


def c_class_R4_semisimple(b):
    return {
        "pseudo_kahler": P(True),
        "pk_extension_conditions": P(True),
        "trivial_extension": P(False),
        "ab_constraints": P(True),
        "ricci_flat": P(True),
        "flat": P(False),
    }


def c_class_R4_nonsemisimple(b):
    c = b["c"]
    return {
        "pseudo_kahler": P(True),
        "pk_extension_conditions": P(True),
        "trivial_extension": P(False),
        "ab_constraints": P(True),
        "nilpotency_step": P(2 if c == 0 else None),
        "ricci_flat": P(True),
        "flat": P(False),
    }


def c_class_rh3(b):
    a = b["a"]
    return {
        "pseudo_kahler": P(True),
        "pk_extension_conditions": P(True),
        "trivial_extension": P(a == 0),
        "ab_constraints": P(True),
        "nilpotency_step": P(2),
        "abelian_cx": P(True),
        "abelian_cx_conditions": P(True),
        "ricci_flat": P(True),
        "flat": P(a == 0),
    }


def c_class_r2prime(b):
    a, x, y, z = b["a"], b["x"], b["y"], b["z"]
    return {
        "pseudo_kahler": P(True),
        "pk_extension_conditions": P(True),
        "trivial_extension": P(a == 0),
        "ab_constraints": P(True),
        "ricci_flat": P(True),
        "flat": P(x == a * a * (y * y + z * z)),
    }


def c_list_R4_semisimple(b):
    return {
        "pseudo_kahler": P(True),
        "omega": P("e13-e24+e56"),
        "ricci_flat": P(True),
        "flat": P(False),
    }


def c_list_R4_nonsemisimple(b):
    return {
        "pseudo_kahler": P(True),
        "omega": P("e13-e24+e56"),
        "ricci_flat": P(True),
        "flat": P(False),
    }


def c_list_rh3(b):
    a = b["a"]
    return {
        "pseudo_kahler": P(True),
        "omega": P("e14-e23+e56"),
        "ricci_flat": P(True),
        "flat": P(a == 0),
    }


def c_list_r2prime(b):
    a, x, y, z = b["a"], b["x"], b["y"], b["z"]
    return {
        "pseudo_kahler": P(True),
        "omega": P(list_r2prime_omega(x, y, z)),
        "ricci_flat": P(True),
        "flat": P(x == a * a * (y * y + z * z)),
    }


def c_kahleronr2(b):
    return {"pseudo_kahler": P(True)}


def c_rh3(b):
    return {
        "pseudo_kahler": P(True),
        "nilpotency_step": P(2),
        "center_dim": P(2),
    }


def c_pseudokahlerR4(b):
    return {"pseudo_kahler": P(True), "signature": P([2, 2])}


def c_flat_HS_R4(b):
    return {
        "pseudo_kahler": P(True),
        "hypersymplectic": P(True),
        "flat": P(True),
        "signature": P([2, 2]),
    }


def c_trivial_pair(b):
    return {
        "pseudo_kahler": P(True),
        "trivial_extension": P(True),
        "aw_phi1_direct": P(True),
        "aw_phi2_direct": P(True),
        "aw_phi1_phi2": P(False),
        "aw_phi1_phi2_failures": P(["commutator"]),
    }


def _hs_common() -> dict:
    return {
        "hypersymplectic": P(True),
        "hs_conditions": P(True),
        "ricci_flat": P(True),
        "abelian_para_matches_cx": P(True),
    }


def c_hs_nonkodaira(b):
    out = _hs_common()
    out.update({
        "nilpotency_step": P(2),
        "center_dim": P(5),
        "center": P(_basis_str(_span(8, [{1: 1}, {3: 1}, {6: 1}, {7: 1}, {8: 1}]))),
        "kodaira": P(False),
        "abelian_cx": P(False),
        "flat": P(True),
    })
    return out


def c_hs_rh3_R4(b):
    out = _hs_common()
    out.update({
        "nilpotency_step": P(2),
        "flat": P(True),
        "kodaira": P(False),
        "abelian_cx": P(False),
    })
    return out


def c_hs_2step_solvable(b):
    out = _hs_common()
    out["solvability_step"] = P(2)
    if int(b["variant"]) == 3:
        out["kernel_nondegenerate"] = P(True)
    return out


def x_kernel(ext, p):
    m = ext.m
    rows = [ext.rep.phi[a].flat() for a in range(m)]
    from .linalg import kernel_of_rows

    # vectors v in h with sum v_a phi(a) = 0
    cols = [[rows[a][t] for a in range(m)] for t in range(len(rows[0]))]
    ker = kernel_of_rows(cols, m)
    G = Matrix([[ext.h_rec.metric(u, v) for v in ker] for u in ker]) if ker else None
    return {"kernel_nondegenerate": bool(ker) and G.is_invertible()}


def c_hs_nonabelian(b):
    out = _hs_common()
    out["abelian_cx"] = P(False)
    out["nilpotent"] = P(True)
    return out


def c_hs_notkodaira(b):
    m = int(b["m"])
    out = _hs_common()
    out.update({
        "nilpotency_step": P(2),
        "center_dim": P(4 * m + 1),
        "kodaira": P(False),
        "abelian_cx": P(False),
        "flat": P(True),
    })
    return out


def c_hs_kodaira_8dim(b):
    out = _hs_common()
    out.update({
        "pseudo_kahler": P(True),
        "pk_extension_conditions": P(True),
        "nilpotency_step": P(2),
        "center": P(
            _basis_str(_span(8, [{5: 1, 7: -1}, {6: 1, 8: -1}, {1: 1, 3: -1}, {2: 1, 4: -1}])),
        ),
        "kodaira": P(True),
        "flat": P(True),
    })
    return out


def c_arbitrarystep(b):
    k = int(b["k"])
    out = _hs_common()
    out.update({
        "nilpotency_step": P(k),
        "abelian_cx": P(False),
        "n4n_compatible": P(True),
    })
    if b["h"] == "R4":
        out["flat"] = P(True)
    return out


def c_N4n(b):
    out = _hs_common()
    out["n4n_compatible"] = P(True)
    return out


def x_hs(ext, p):
    rec = ext.product
    from .structures import is_abelian_complex, is_abelian_para

    return {"abelian_para_matches_cx": is_abelian_complex(rec.algebra, rec.J) == is_abelian_para(rec.algebra, rec.E)}


def x_n4n(ext, p):
    out = x_hs(ext, p)
    N = ext.rep.phi[0]
    g = ext.g_rec
    out["n4n_compatible"] = (
        (N @ g.J == g.J @ N) and (N @ g.E == g.E @ N) and g.metric.adjoint(N) == -N
    )
    return out


def _combine(*fs):
    def run(ext, p):
        out = {}
        for f in fs:
            out.update(f(ext, p))
        return out

    return run


def _basis_str(sub: Subspace) -> list[list[str]]:
    return [[str(x) for x in v] for v in sub.basis]


# domains


def d_positive(*names):
    def check(b):
        for n in names:
            if b[n] <= 0:
                return f"{n} must be positive"
        return None

    return check


def d_nonsemisimple(b):
    if b["a"] <= 0:
        return "a must be positive"
    if b["c"] == 0 and b["b"] != 0:
        return "either b = c = 0 or c != 0"
    return None


def d_r2prime(b):
    if b["y"] == 0 and b["z"] == 0:
        return "(y, z) must be nonzero"
    if "a" in b and b["a"] <= 0:
        return "a must be positive"
    return None


def d_list_r2prime(b):
    if b["y"] == 0 and b["z"] == 0:
        return "(y, z) must be nonzero"
    return None


def d_kahleronr2(b):
    if b["a13"] == 0 and b["a14"] == 0:
        return "a13^2 + a14^2 must be nonzero"
    return None


def d_variant(b):
    return None if b["variant"] in (1, 2, 3) else "variant must be 1, 2 or 3"


def d_m(b):
    return None if b["m"] >= 1 and b["m"].denominator == 1 else "m must be a positive integer"


def d_arbitrarystep(b):
    n, k = b["n"], b["k"]
    if n.denominator != 1 or k.denominator != 1:
        return "n and k must be integers"
    if not 2 <= k <= n:
        return "need 2 <= k <= n"
    return None


def d_N4n(b):
    n = b["n"]
    return None if n.denominator == 1 and n >= 1 else "n must be a positive integer"


def d_trivial_pair(b):
    return None if b["which"] in (1, 2) else "which must be 1 or 2"


def _grid(*pts, names=()):
    return tuple(dict(zip(names, map(Fraction, p))) if not isinstance(p, dict) else p for p in pts)


ENTRIES: dict[str, CatalogEntry] = {}


def _add(e: CatalogEntry):
    ENTRIES[e.id] = e


_add(CatalogEntry(
    "withthenotation", "abelian R^2 by R^2 with phi(a1) = lambda J",
    b_withthenotation, (Param("lambda", 1),), c_withthenotation,
    grid=_grid((1,), (0,), (-2,), ("1/3",), names=("lambda",)),
))
_add(CatalogEntry("sec2_ex1", "R^4 by R^2, 2-step nilpotent, non-flat", b_sec2_ex1, claims=c_sec2_ex1))
_add(CatalogEntry("sec2_ex2", "R^4 by R^4, 2-step solvable, non-flat", b_sec2_ex2, claims=c_sec2_ex2))
_add(CatalogEntry("sec2_ex3", "R^6 by R^2, 2-step nilpotent, non-flat", b_sec2_ex3, claims=c_sec2_ex3))
_add(CatalogEntry(
    "8dim_3step", "3-step nilpotent 6-dim algebra by R^2",
    b_8dim_3step, (Param("x", 1), Param("y", 0)), c_8dim_3step,
    grid=_grid((0, 0), (1, 0), (0, 1), ("1/2", -3), names=("x", "y")),
    note="the base uses J e3 = -e4; with the printed J e3 = e4 the complex structure is not integrable",
))
_add(CatalogEntry(
    "8dim_2step", "2-step nilpotent 6-dim algebra by R^2, flat iff x^2+y^2=1/2",
    b_8dim_2step, (Param("x", "1/2"), Param("y", "1/2")), c_8dim_2step,
    grid=_grid(("1/2", "1/2"), (1, 0), (0, 0), ("1/10", "7/10"), ("-1/2", "1/2"), (2, 3), names=("x", "y")),
    note=TWO_STEP_ERRATUM, errata={"pseudo_kahler": TWO_STEP_ERRATUM},
))
_add(CatalogEntry(
    "8dim_2step_variant", "2-step nilpotent 6-dim algebra by R^2, phi not into [g,g]",
    b_8dim_2step_variant, tuple(Param(f"x{i}", 1) for i in range(1, 5)), c_8dim_2step_variant,
    grid=_grid((1, 1, 1, 1), (1, 0, 0, 0), (0, 2, -1, 3), (0, 0, 1, 1), names=("x1", "x2", "x3", "x4")),
    note=TWO_STEP_ERRATUM, errata={"pseudo_kahler": TWO_STEP_ERRATUM},
))
_add(CatalogEntry(
    "r2prime_aff", "rh3 by r'2 (aff(C)); the metric on r'2 is not printed",
    b_r2prime_aff,
    (Param("x1", 1), Param("x2", 0), Param("y1", 0), Param("y2", 1),
     Param("a12", 1, "metric slot on r'2"), Param("a13", 1, "metric slot on r'2"), Param("a14", 0, "metric slot on r'2")),
    c_r2prime_aff,
    domain=d_kahleronr2,
    grid=_grid((1, 0, 0, 1, 1, 1, 0), (2, -1, 3, "1/2", 1, 1, 0), names=("x1", "x2", "y1", "y2", "a12", "a13", "a14")),
    data_complete=False, extra=None,
    note="the pseudo-Kahler metric on r'2 is cited, not printed; default is the r'2 family with a12=a13=1, a14=0",
))
_add(CatalogEntry(
    "rr30_R2", "R^2 by rr_{3,0}; the metric on rr_{3,0} is not printed",
    b_rr30_R2, (), c_rr30_R2, data_complete=False,
    note="the metric on rr_{3,0} is cited, not printed; default is the identity (a Kahler metric)",
))
_add(CatalogEntry(
    "rr30_R4", "R^4 by rr_{3,0} with phi(a3), phi(a4) rotations",
    b_rr30_R4, (Param("x", 1), Param("y", 2)), c_rr30_R4,
    grid=_grid((1, 2), (0, 0), ("1/2", -1), (0, 3), names=("x", "y")),
    note="h metric defaults to the identity; the claims checked do not depend on this choice except flatness",
))
_add(CatalogEntry(
    "rh3_rh3_flat", "rh3 by rh3, flat and 2-step nilpotent",
    b_rh3_rh3_flat, (), c_rh3_rh3_flat,
    extra=lambda ext, p: {
        "g_flat": ext.g_rec.geometry.is_flat(),
        "phi_commute": (ext.rep.phi[0] @ ext.rep.phi[1] == ext.rep.phi[1] @ ext.rep.phi[0]),
    },
))
_add(CatalogEntry(
    "isometric_not_AW", "rh3 by rh3, not AW-related to the direct product",
    b_rh3_rh3_flat, (), c_isometric_not_aw,
    extra=_combine(
        x_isometric_not_aw,
        lambda ext, p: {"phi_commute": (ext.rep.phi[0] @ ext.rep.phi[1] == ext.rep.phi[1] @ ext.rep.phi[0])},
    ),
))
_add(CatalogEntry(
    "class_R4_semisimple", "R^4 by R^2, semisimple symmetric part",
    b_class_R4_semisimple, (Param("a", 1),), c_class_R4_semisimple,
    domain=d_positive("a"), grid=_grid((1,), (2,), ("1/3",), names=("a",)), extra=x_ab_triple,
))
_add(CatalogEntry(
    "class_R4_nonsemisimple", "R^4 by R^2, nilpotent symmetric part",
    b_class_R4_nonsemisimple, (Param("a", 1), Param("b", 0), Param("c", 0)), c_class_R4_nonsemisimple,
    domain=d_nonsemisimple,
    grid=_grid((1, 0, 0), (1, 2, 1), (2, 0, -1), ("1/2", 3, "1/3"), names=("a", "b", "c")),
    extra=x_ab_triple,
))
_add(CatalogEntry(
    "class_rh3", "rh3 by R^2",
    b_class_rh3, (Param("a", 1),), c_class_rh3,
    domain=d_positive("a"), grid=_grid((1,), (2,), ("1/5",), names=("a",)), extra=x_ab_triple,
))
_add(CatalogEntry(
    "class_r2prime", "r'2 by R^2, flat iff x = a^2(y^2+z^2)",
    b_class_r2prime, (Param("a", 1), Param("x", 1), Param("y", 1), Param("z", 0)), c_class_r2prime,
    domain=d_r2prime,
    grid=_grid((1, 1, 1, 0), (1, 2, 1, 0), (2, 4, 1, 0), (1, 2, 1, 1), (1, 1, 0, 1), ("1/2", 3, -1, 2), names=("a", "x", "y", "z")),
    extra=x_ab_triple,
))
_add(CatalogEntry(
    "list_R4_semisimple", "6-dim list: R^4 extension, semisimple case (a=1)",
    b_list_R4_semisimple, (), c_list_R4_semisimple,
    note=LIST_ERRATA["list_R4_semisimple"],
))
_add(CatalogEntry(
    "list_R4_nonsemisimple", "6-dim list: R^4 extension, non-semisimple case (a=1)",
    b_list_R4_nonsemisimple, (Param("b", 0), Param("c", 0)), c_list_R4_nonsemisimple,
    domain=lambda b: "either b = c = 0 or c != 0" if b["c"] == 0 and b["b"] != 0 else None,
    grid=_grid((0, 0), (1, 1), (2, -1), (0, 3), names=("b", "c")),
))
_add(CatalogEntry(
    "list_rh3", "6-dim list: rh3 extension",
    b_list_rh3, (Param("a", 1),), c_list_rh3,
    grid=_grid((1,), (0,), (2,), ("-1/3",), names=("a",)),
))
_add(CatalogEntry(
    "list_r2prime", "6-dim list: r'2 extension",
    b_list_r2prime, (Param("a", 1), Param("x", 1), Param("y", 1), Param("z", 0)), c_list_r2prime,
    domain=d_list_r2prime,
    grid=_grid((1, 1, 1, 0), (1, 2, 1, 0), (2, 4, 1, 0), (1, 5, 1, 2), (0, 0, 1, 1), (0, 1, 2, 0), names=("a", "x", "y", "z")),
))
_add(CatalogEntry(
    "kahleronr2", "r'2 with its extendable pseudo-Kahler family",
    b_kahleronr2, (Param("a12", 0), Param("a13", 1), Param("a14", 0)), c_kahleronr2,
    domain=d_kahleronr2, grid=_grid((0, 1, 0), (1, 1, 0), (2, -1, 3), names=("a12", "a13", "a14")),
))
_add(CatalogEntry("rh3", "rh3 with g = e1(.)e3 + e2(.)e4", b_rh3, (), c_rh3))
_add(CatalogEntry("pseudokahlerR4", "neutral pseudo-Kahler R^4", b_pseudokahlerR4, (), c_pseudokahlerR4))
_add(CatalogEntry("flat_HS_R4", "flat hypersymplectic R^4", b_flat_HS_R4, (), c_flat_HS_R4))
_add(CatalogEntry(
    "remark_phi1_phi2", "two trivial extensions that are not AW-related",
    b_remark_phi1_phi2, (Param("which", 1),), c_trivial_pair, domain=d_trivial_pair,
    grid=_grid((1,), (2,), names=("which",)), extra=x_trivial_pair,
))
_add(CatalogEntry("hs_nonkodaira", "R^4 by R^4, hypersymplectic, not Kodaira", b_hs_nonkodaira, (), c_hs_nonkodaira, extra=x_hs))
_add(CatalogEntry(
    "hs_rh3_R4", "R^4 by rh3 with a cited hypersymplectic structure",
    b_hs_rh3_R4, (), c_hs_rh3_R4, data_complete=False, extra=x_hs,
    note="the hypersymplectic structure on rh3 is cited, not printed; pass it as 'h_record'",
))
_add(CatalogEntry(
    "hs_2step_solvable", "R^4 by R^4, 2-step solvable hypersymplectic",
    b_hs_2step_solvable, (Param("variant", 1),), c_hs_2step_solvable, domain=d_variant,
    grid=_grid((1,), (2,), (3,), names=("variant",)),
    extra=lambda ext, p: {**x_hs(ext, p), **(x_kernel(ext, p) if int(p["variant"]) == 3 else {})},
))
_add(CatalogEntry(
    "hs_nonabelian", "R^4 by a nilpotent hypersymplectic h, non-abelian type",
    b_hs_nonabelian, (Param("h", "hs_nonkodaira", "catalog id of a nilpotent hypersymplectic entry", "text"),),
    c_hs_nonabelian,
    grid=({"h": "flat_HS_R4"}, {"h": "hs_nonkodaira"}, {"h": "hs_kodaira_8dim"}),
    extra=lambda ext, p: {**x_hs(ext, p), "nilpotent": ext.product.algebra.is_nilpotent()},
))
_add(CatalogEntry(
    "hs_notkodaira", "R^4 by R^{4m}, neither Kodaira nor abelian type",
    b_hs_notkodaira, (Param("m", 1),), c_hs_notkodaira, domain=d_m,
    grid=_grid((1,), (2,), names=("m",)), extra=x_hs,
))
_add(CatalogEntry("hs_kodaira_8dim", "R^4 by R^4 of Kodaira type", b_hs_kodaira_8dim, (), c_hs_kodaira_8dim, extra=x_hs))
_add(CatalogEntry(
    "arbitrarystep", "R^{4n} by h with phi(a1) = N_{4n}, k-step nilpotent",
    b_arbitrarystep,
    (Param("n", 2), Param("k", 2), Param("h", "R4", "'R4' or a catalog id", "text")),
    c_arbitrarystep, domain=d_arbitrarystep,
    grid=({"n": Fraction(2), "k": Fraction(2), "h": "R4"}, {"n": Fraction(3), "k": Fraction(3), "h": "R4"},
          {"n": Fraction(3), "k": Fraction(2), "h": "R4"}),
    extra=x_n4n,
))
_add(CatalogEntry(
    "N4n", "R^{4n} by R^4 with phi(a1) = N_{4n} for a supplied nilpotent A",
    b_N4n, (Param("n", 2),), c_N4n, domain=d_N4n,
    grid=_grid((1,), (2,), names=("n",)), extra=x_n4n,
    note="pass 'A' (an n x n matrix) to instantiate; default is the full shift matrix",
))


# public API


def get(entry_id: str) -> CatalogEntry:
    try:
        return ENTRIES[entry_id]
    except KeyError:
        raise UnknownEntryError(f"unknown catalog entry {entry_id!r}") from None


def ids(complete_only: bool = False) -> list[str]:
    return [k for k, e in ENTRIES.items() if e.data_complete or not complete_only]


_EXTRA_KEYS = ("h_record", "A")


def _split(bindings: Mapping | None) -> tuple[dict, dict]:
    bindings = dict(bindings or {})
    extra = {k: bindings.pop(k) for k in _EXTRA_KEYS if k in bindings}
    return bindings, extra


def instantiate(entry_id: str, bindings: Mapping | None = None):
    e = get(entry_id)
    plain, extra = _split(bindings)
    b = e.bind(plain)
    return e.builder({**b, **extra})


def expected_claims(entry_id: str, bindings: Mapping | None = None) -> dict[str, Claim]:
    e = get(entry_id)
    plain, _ = _split(bindings)
    return e.claims(e.bind(plain))


def compute_report(obj, entry: CatalogEntry | None = None, bindings: Mapping | None = None) -> VerificationReport:
    rep = verify_extension(obj) if isinstance(obj, Extension) else verify_record(obj)
    alg = _alg(obj)
    rep["center"] = _basis_str(alg.center())
    rep["derived_algebra"] = _basis_str(alg.derived_algebra())
    rep["derived_series"] = [_basis_str(s) for s in alg.derived_series()[1:]]
    rec = obj.product if isinstance(obj, Extension) else obj
    rep["center_J_invariant"] = alg.center().is_invariant(rec.J)
    rep["nilpotent"] = alg.is_nilpotent()
    if alg.dim <= 9:
        from .salamon import emit_salamon

        rep["salamon"] = emit_salamon(alg)
    if entry is not None and entry.extra is not None:
        rep.update(entry.extra(obj, dict(bindings or {})))
    return rep


@dataclass
class RunResult:
    entry_id: str
    bindings: dict
    report: VerificationReport
    expected: dict[str, Claim]
    mismatches: list[str] = field(default_factory=list)
    consistency: list[str] = field(default_factory=list)
    known: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.consistency

    def to_json(self) -> dict:
        return {
            "id": self.entry_id,
            "bindings": {k: str(v) for k, v in self.bindings.items()},
            "ok": self.ok,
            "mismatches": self.mismatches,
            "consistency_errors": self.consistency,
            "known_discrepancies": self.known,
            "claims": {
                k: {"expected": _jsonish(c.value), "actual": _jsonish(self.report.get(k))}
                for k, c in self.expected.items()
            },
            "report": {k: v for k, v in self.report.to_json().items() if k not in ("center", "derived_algebra", "derived_series")},
        }


def _jsonish(v):
    from .report import _jsonable

    return _jsonable(v)


def run(entry_id: str, bindings: Mapping | None = None) -> RunResult:
    e = get(entry_id)
    plain, extra = _split(bindings)
    b = e.bind(plain)
    obj = e.builder({**b, **extra})
    rep = compute_report(obj, e, b)
    expected = e.claims(b)
    mism, known = [], []
    for k, c in expected.items():
        differs = _jsonish(rep.get(k)) != _jsonish(c.value)
        line = f"{k}: expected {_jsonish(c.value)!r}, got {_jsonish(rep.get(k))!r}"
        if k in e.errata:
            # a recorded discrepancy must still reproduce, otherwise the record is stale
            (known if differs else mism).append(line if differs else f"{k}: recorded discrepancy no longer reproduces")
        elif differs:
            mism.append(line)
    return RunResult(entry_id, b, rep, expected, mism, rep.consistency_errors(), known)


def sweep(entry_ids: Sequence[str] | None = None, complete_only: bool = True) -> list[RunResult]:
    out = []
    for eid in entry_ids or ids(complete_only):
        for pt in get(eid).grid:
            out.append(run(eid, pt))
    return out
