"""Acceptance criteria, each exact and each reported as one PASS/FAIL line.

Run under pytest (the lines appear in the terminal summary) or directly:
``python tests/test_acceptance.py``.
"""
import os
import random
import sys
from fractions import Fraction

import pytest

sys.path.insert(0, os.path.dirname(__file__))

import conftest  # noqa: E402
from conftest import catalog_objects  # noqa: E402
from liegeo import catalog  # noqa: E402
from liegeo.geometry import Metric, levi_civita  # noqa: E402
from liegeo.linalg import Matrix  # noqa: E402
from liegeo.salamon import emit_salamon, parse_salamon  # noqa: E402
from liegeo.semidirect import (  # noqa: E402
    Extension,
    HSBlocks,
    Representation,
    block_connection,
    build_semidirect,
    check_AB1B2_constraints,
    check_aw_related,
    check_hs_extension_conditions,
    check_pk_extension_conditions,
    direct_product,
    standard_R2,
)
from liegeo.structures import (  # noqa: E402
    CompatibilityError,
    is_abelian_complex,
    is_hypersymplectic,
    is_kodaira_type,
    is_pseudo_kahler,
    kahler_form,
)
from strategies import cayley  # noqa: E402

TITLES = {
    1: "pseudo-Kahler extension conditions agree with nabla J = 0",
    2: "block formulas of the product connection",
    3: "first examples: nilpotent and flat loci",
    4: "6-dimensional list and R^4-by-R^2 normal forms",
    5: "hypersymplectic examples",
    6: "hypersymplectic extension conditions agree with nabla E = 0",
    7: "AW predicate on the two representations",
    8: "property suites",
    9: "structure-equation round trip",
}


class Checks:
    """Named sub-checks for one criterion."""

    def __init__(self):
        self.failed: list[str] = []
        self.count = 0
        self.note = ""

    def __call__(self, name: str, ok) -> bool:
        self.count += 1
        if not ok:
            self.failed.append(name)
        return bool(ok)

    @property
    def ok(self) -> bool:
        return not self.failed

    def detail(self) -> str:
        if not self.ok:
            return "failed: " + ", ".join(self.failed[:6])
        return f"{self.count} checks" + (f", {self.note}" if self.note else "")


def record(n: int, checks: Checks):
    conftest.ACCEPTANCE[n] = (TITLES[n], checks.ok, checks.detail())
    print(f"criterion {n}: {'PASS' if checks.ok else 'FAIL'}  {TITLES[n]}  ({checks.detail()})")


def nabla_parallel(rec, T) -> bool:
    """Direct check: the product connection commutes with T in every direction."""
    return rec.geometry.connection.parallel(T)


def extensions():
    return [(eid, pt, obj) for eid, pt, obj in catalog_objects() if isinstance(obj, Extension)]


# 1


def _unitary(rnd, rec):
    n = rec.dim
    X = Matrix([[rnd.randint(-2, 2) for _ in range(n)] for _ in range(n)])
    g = Metric(rec.g)
    Y = (X - g.adjoint(X)) * Fraction(1, 2)
    Y = (Y - rec.J @ Y @ rec.J) * Fraction(1, 2)
    return cayley(Y)


def pk_samples(seed=1, per_base=24):
    """(label, g_rec, h_rec, phi) over catalog bases; phi is always a representation."""
    rnd = random.Random(seed)
    bases, seen = [], set()
    for eid, _, ext in extensions():
        g, h = ext.g_rec, ext.h_rec
        key = (g.algebra, g.g, g.J, h.algebra, h.g, h.J)
        if key in seen or not (is_pseudo_kahler(g) and is_pseudo_kahler(h)) or ext.n + ext.m > 10:
            continue
        seen.add(key)
        bases.append((eid, ext))
    out = []
    for eid, ext in bases:
        g, h, phi = ext.g_rec, ext.h_rec, list(ext.rep.phi)
        abelian_h = h.algebra.is_abelian()
        ders = g.algebra.derivation_space()
        for t in range(per_base):
            kind = t % 4
            if kind == 0 and abelian_h:
                s = Fraction(rnd.randint(-4, 4), rnd.randint(1, 3))
                out.append((f"{eid}: scaled phi", g, h, [p * s for p in phi]))
            elif kind == 1 and g.algebra.is_abelian():
                U = _unitary(rnd, g)
                if U is not None:
                    Ui = U.inverse()
                    out.append((f"{eid}: conjugated phi", g, h, [U @ p @ Ui for p in phi]))
            elif kind == 2 and abelian_h and g.algebra.is_abelian():
                eps = Fraction(rnd.choice([-2, -1, 1, 2]), rnd.randint(1, 3))
                k = rnd.randrange(len(phi))
                bumped = [p + Matrix.identity(g.dim) * eps if i == k else p for i, p in enumerate(phi)]
                out.append((f"{eid}: phi + eps I", g, h, bumped))
            elif abelian_h and ders:
                D = Matrix.zeros(g.dim)
                for d in ders:
                    D = D + d * rnd.randint(-1, 1)
                cs = [Fraction(rnd.randint(-2, 2)) for _ in range(h.dim)]
                out.append((f"{eid}: random derivation", g, h, [D * c for c in cs]))
    return out


def criterion_1() -> Checks:
    c = Checks()
    truths = set()
    n = 0
    for label, g, h, phi in pk_samples():
        rep = Representation(h.algebra, phi, g.dim)
        if rep.problems(g.algebra):
            continue
        n += 1
        fast = check_pk_extension_conditions(g, h, rep)
        prod = build_semidirect(g, h, rep).product
        direct = nabla_parallel(prod, prod.J)
        truths.add(direct)
        c(f"{label} #{n}", fast == direct)
    c(f"at least 200 representations (got {n})", n >= 200)
    c("both truth values", truths == {True, False})
    c.note = f"{n} representations"
    return c


# 2


def criterion_2() -> Checks:
    c = Checks()
    for eid, pt, ext in extensions():
        koszul = levi_civita(ext.product.algebra, ext.product.g).gammas
        c(f"{eid}{pt}", tuple(block_connection(ext).gammas) == tuple(koszul))
    return c


# 3


def criterion_3() -> Checks:
    c = Checks()
    for eid in ("sec2_ex1", "sec2_ex3"):
        rec = catalog.instantiate(eid).product
        c(f"{eid} pseudo-Kahler", is_pseudo_kahler(rec))
        c(f"{eid} 2-step", rec.algebra.nilpotency_step() == 2)
        c(f"{eid} Ricci-flat", rec.geometry.is_ricci_flat())
        c(f"{eid} not flat", not rec.geometry.is_flat())
    rec = catalog.instantiate("sec2_ex2").product
    c("sec2_ex2 2-step solvable", rec.algebra.solvability_step() == 2)
    c("sec2_ex2 not flat", not rec.geometry.is_flat())
    for (x, y), flat in (((0, 0), True), ((1, 0), False)):
        rec = catalog.instantiate("8dim_3step", {"x": x, "y": y}).product
        c(f"8dim_3step{(x, y)} 3-step", rec.algebra.nilpotency_step() == 3)
        c(f"8dim_3step{(x, y)} flat={flat}", rec.geometry.is_flat() == flat)
    half = Fraction(1, 2)
    for (x, y), flat in (((half, half), True), ((1, 0), False), ((0, 0), False)):
        rec = catalog.instantiate("8dim_2step", {"x": x, "y": y}).product
        c(f"8dim_2step{(x, y)} 2-step", rec.algebra.nilpotency_step() == 2)
        c(f"8dim_2step{(x, y)} flat={flat}", rec.geometry.is_flat() == flat)
    ext = catalog.instantiate("rh3_rh3_flat")
    c("rh3_rh3_flat g flat", ext.g_rec.geometry.is_flat())
    c("rh3_rh3_flat product flat", ext.product.geometry.is_flat())
    return c


# 4


def family_one_printed() -> Checks:
    c = Checks()
    alg = parse_salamon(catalog.LIST_SEMISIMPLE)
    try:
        rec = catalog._structure_from_omega(alg, catalog.LIST_METRIC_NEUTRAL, catalog.PRINTED_OMEGA["list_R4_semisimple"], "f1")
        c("family 1 pseudo-Kahler with the printed form", is_pseudo_kahler(rec))
    except CompatibilityError as exc:
        c(f"family 1 printed form compatible with its metric ({', '.join(exc.diagnostics.failures())})", False)
    return c


def criterion_4_rest() -> Checks:
    c = Checks()
    rec = catalog.instantiate("list_R4_semisimple")
    c("family 1 (J e1 = e3 form) pseudo-Kahler", is_pseudo_kahler(rec))
    c("family 1 Ricci-flat", rec.geometry.is_ricci_flat())
    c("family 1 not flat", not rec.geometry.is_flat())
    for b, cc in ((0, 0), (2, 1), (1, -1), (Fraction(1, 2), 3)):
        rec = catalog.instantiate("list_R4_nonsemisimple", {"b": b, "c": cc})
        tag = f"family 2 (b,c)={b, cc}"
        c(f"{tag} printed form", kahler_form(rec).to_string() == catalog.PRINTED_OMEGA["list_R4_nonsemisimple"])
        c(f"{tag} pseudo-Kahler", is_pseudo_kahler(rec))
        c(f"{tag} Ricci-flat", rec.geometry.is_ricci_flat())
        c(f"{tag} not flat", not rec.geometry.is_flat())
    for a in (0, 1, 3, Fraction(-1, 2)):
        rec = catalog.instantiate("list_rh3", {"a": a})
        tag = f"family 3 a={a}"
        c(f"{tag} printed form", kahler_form(rec).to_string() == catalog.PRINTED_OMEGA["list_rh3"])
        c(f"{tag} pseudo-Kahler", is_pseudo_kahler(rec))
        c(f"{tag} Ricci-flat", rec.geometry.is_ricci_flat())
        c(f"{tag} flat iff a = 0", rec.geometry.is_flat() == (a == 0))
    samples = [(1, 1, 0, 1), (1, 1, 0, 2), (2, 1, 1, 8), (2, 1, 1, 3), (Fraction(1, 2), 2, -1, Fraction(5, 4)), (1, 0, 3, 1)]
    for a, y, z, x in samples:
        rec = catalog.instantiate("list_r2prime", {"a": a, "x": x, "y": y, "z": z})
        tag = f"family 4 (a,y,z,x)={a, y, z, x}"
        c(f"{tag} printed form", kahler_form(rec).to_string() == catalog.list_r2prime_omega(x, y, z))
        c(f"{tag} pseudo-Kahler", is_pseudo_kahler(rec))
        c(f"{tag} Ricci-flat", rec.geometry.is_ricci_flat())
        c(f"{tag} flat iff x = a^2(y^2+z^2)", rec.geometry.is_flat() == (x == a * a * (y * y + z * z)))
    g = catalog.pseudokahler_R4()
    for a, k1, k2 in ((1, 1, 1), (5, 1, 7), (5, 7, -1), (Fraction(1, 2), Fraction(1, 2), Fraction(-1, 2))):
        c(f"semisimple k1^2+k2^2=2a^2 at {a, k1, k2}", k1 * k1 + k2 * k2 == 2 * a * a)
        t = catalog.semisimple_triple(a, k1, k2)
        c(f"semisimple {a, k1, k2} constraints", check_AB1B2_constraints(t, g))
        c(f"semisimple {a, k1, k2} product", is_pseudo_kahler(build_semidirect(g, standard_R2(), t.representation(g.J)).product))
    c("semisimple off the circle rejected", not check_AB1B2_constraints(catalog.semisimple_triple(1, 0, 1), g))
    g = catalog.nonsemisimple_base()
    for args in ((1, 1, 2, 2, 4), (1, 0, 0, 0, 0), (2, 1, 0, 3, 0), (1, -1, 1, 2, -2)):
        t = catalog.nonsemisimple_triple(*args)
        c(f"nonsemisimple {args} constraints", check_AB1B2_constraints(t, g))
        c(f"nonsemisimple {args} product", is_pseudo_kahler(build_semidirect(g, standard_R2(), t.representation(g.J)).product))
    c("nonsemisimple independent pairs rejected", not check_AB1B2_constraints(catalog.nonsemisimple_triple(1, 1, 0, 0, 1), g))
    return c


def criterion_4() -> Checks:
    c = criterion_4_rest()
    printed = family_one_printed()
    c.count += printed.count
    c.failed += printed.failed
    return c


# 5


def hs_objects():
    out = []
    for eid, pt, obj in catalog_objects():
        rec = obj.product if isinstance(obj, Extension) else obj
        if rec.E is not None:
            out.append((eid, pt, obj, rec))
    return out


def criterion_5() -> Checks:
    c = Checks()
    for eid, pt, _, rec in hs_objects():
        c(f"{eid}{pt} hypersymplectic", is_hypersymplectic(rec))
        c(f"{eid}{pt} Ricci-flat", rec.geometry.is_ricci_flat())
    c("flat_HS_R4 included", any(eid == "flat_HS_R4" for eid, *_ in hs_objects()))
    rec = catalog.instantiate("hs_nonkodaira").product
    c("hs_nonkodaira center dim 5", rec.algebra.center().dim == 5)
    c("hs_nonkodaira not Kodaira type", not is_kodaira_type(rec.algebra, rec.J))
    c("hs_nonkodaira J not abelian", not is_abelian_complex(rec.algebra, rec.J))
    c("hs_nonkodaira flat", rec.geometry.is_flat())
    rec = catalog.instantiate("hs_kodaira_8dim").product
    c("hs_kodaira_8dim Kodaira type", is_kodaira_type(rec.algebra, rec.J))
    c("hs_kodaira_8dim flat", rec.geometry.is_flat())
    for m in (1, 2):
        rec = catalog.instantiate("hs_notkodaira", {"m": m}).product
        c(f"hs_notkodaira m={m} center dim {4 * m + 1}", rec.algebra.center().dim == 4 * m + 1)
    for k in (2, 3):
        rec = catalog.instantiate("arbitrarystep", {"n": k, "k": k, "h": "R4"}).product
        tag = f"arbitrarystep n=k={k}"
        c(f"{tag} {k}-step", rec.algebra.nilpotency_step() == k)
        c(f"{tag} hypersymplectic", is_hypersymplectic(rec))
        c(f"{tag} J not abelian", not is_abelian_complex(rec.algebra, rec.J))
        c(f"{tag} flat", rec.geometry.is_flat())
    return c


# 6


def hs_block_samples(seed=3, per_entry=10):
    rnd = random.Random(seed)
    out = []
    for eid, pt, obj, rec in hs_objects():
        if not isinstance(obj, Extension) or rec.dim > 12:
            continue
        E, J = rec.E, rec.J
        out.append((f"{eid}{pt}", obj, obj.blocks))
        for name, F in (("-E", -E), ("JE", J @ E), ("3/5 E + 4/5 JE", E * Fraction(3, 5) + J @ E * Fraction(4, 5))):
            out.append((f"{eid}{pt} {name}", obj, HSBlocks.from_matrix(F, obj.n)))
        made = 0
        while made < per_entry:
            U = _unitary(rnd, rec)
            if U is None:
                continue
            made += 1
            out.append((f"{eid}{pt} perturbed #{made}", obj, HSBlocks.from_matrix(U @ E @ U.inverse(), obj.n)))
    return out


def criterion_6() -> Checks:
    c = Checks()
    truths = set()
    perturbed = 0
    for label, ext, blocks in hs_block_samples():
        fast = check_hs_extension_conditions(ext, blocks)
        rec = ext.with_blocks(blocks).product
        direct = nabla_parallel(rec, rec.E)
        truths.add(direct)
        perturbed += "perturbed" in label
        c(label, fast == direct)
    c(f"at least 100 perturbations (got {perturbed})", perturbed >= 100)
    c("both truth values", truths == {True, False})
    return c


# 7


def criterion_7() -> Checks:
    c = Checks()
    e1, e2, d = catalog.trivial_pair_extensions()
    I4, I2 = Matrix.identity(4), Matrix.identity(2)
    c("phi1 vs direct product", check_aw_related(e1, d, I4, I2))
    c("phi2 vs direct product", check_aw_related(e2, d, I4, I2))
    r = check_aw_related(e1, e2, I4, I2)
    c("phi1 vs phi2 not related", not r)
    c("phi1 vs phi2 flags the commutator condition", "commutator" in r.failures())
    return c


# 8


def criterion_8() -> Checks:
    import test_properties

    c = Checks()
    for name in sorted(dir(test_properties)):
        fn = getattr(test_properties, name)
        if not (name.startswith("test_") and callable(fn)):
            continue
        try:
            fn()
            c(name, True)
        except Exception as exc:  # a failing property is a failed sub-check
            c(f"{name}: {type(exc).__name__}", False)
    return c


# 9


def criterion_9() -> Checks:
    c = Checks()
    seen = set()
    for eid, pt, obj in catalog_objects():
        recs = [obj.product, obj.g_rec, obj.h_rec] if isinstance(obj, Extension) else [obj]
        for rec in recs:
            alg = rec.algebra
            if alg.dim > 9 or alg in seen:
                continue
            seen.add(alg)
            c(f"{eid}{pt} dim {alg.dim}", parse_salamon(emit_salamon(alg)) == alg)
    for a in (1, 2, Fraction(1, 5), 0):
        built = catalog.instantiate("class_rh3", {"a": a}).product.algebra if a else direct_product(catalog.rh3_kahler(), standard_R2()).product.algebra
        c(f"class_rh3 string at a={a}", parse_salamon(catalog.LIST_RH3, {"a": a}).constants == built.constants)
    return c


CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5,
            6: criterion_6, 7: criterion_7, 8: criterion_8, 9: criterion_9}


@pytest.mark.parametrize("n", [1, 2, 3, 5, 6, 7, 8, 9])
def test_criterion(n):
    checks = CRITERIA[n]()
    record(n, checks)
    assert checks.ok, checks.failed


def test_criterion_4_except_printed_family_one():
    checks = criterion_4_rest()
    assert checks.ok, checks.failed


@pytest.mark.xfail(strict=True, reason="printed form of family 1 gives J^2 = +1 on span(e1, e2); see the ledger")
def test_criterion_4():
    checks = criterion_4()
    record(4, checks)
    assert checks.ok, checks.failed


if __name__ == "__main__":
    results = {}
    for n, fn in CRITERIA.items():
        checks = fn()
        record(n, checks)
        results[n] = checks.ok
    sys.exit(0 if all(results.values()) else 1)
