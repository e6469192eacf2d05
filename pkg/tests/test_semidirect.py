from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from liegeo import catalog
from liegeo.geometry import Metric, levi_civita
from liegeo.lie import LieAlgebra
from liegeo.linalg import Matrix, unit_vec
from liegeo.semidirect import (
    ExtensionError,
    HSBlocks,
    Representation,
    ab_constraint_items,
    block_connection,
    build_from_derivation_subalgebra,
    build_semidirect,
    check_AB1B2_constraints,
    check_aw_related,
    check_hs_extension_conditions,
    check_pk_extension_conditions,
    decompose_AB1B2,
    direct_product,
    quotient_by_kernel_ideal,
    standard_R2,
    sym_anti_split,
)
from liegeo.structures import CompatibilityError, StructureRecord, is_pseudo_kahler
from strategies import metrics, rationals, small_ints

Z4 = Matrix.zeros(4)
I4 = Matrix.identity(4)
N = Matrix.from_entries(4, {(0, 1): 1, (2, 3): 1})


def catalog_extensions():
    from conftest import catalog_objects

    return [(eid, obj) for eid, _, obj in catalog_objects() if hasattr(obj, "rep")]


def test_representation_shape_errors():
    h = LieAlgebra.abelian(2)
    with pytest.raises(ExtensionError):
        Representation(h, [I4])
    with pytest.raises(ExtensionError):
        Representation(h, [I4, Matrix.identity(3)])


def test_representation_problems_are_named():
    heis = LieAlgebra(3, {(0, 1): {2: 1}})
    rep = Representation(LieAlgebra.abelian(1), [Matrix.diag(1, 0, 0)])
    assert rep.problems(heis) == ["phi(a1) is not a derivation of g"]
    rep = Representation(LieAlgebra.abelian(2), [Matrix.diag(1, 0, 0, 0), Matrix.from_entries(4, {(0, 1): 1})])
    assert rep.problems(LieAlgebra.abelian(4)) == ["phi is not a homomorphism on (a1, a2)"]
    g = catalog.pseudokahler_R4()
    with pytest.raises(ExtensionError, match="homomorphism"):
        build_semidirect(g, standard_R2(), rep.phi)


def test_semidirect_bracket_convention():
    g = catalog.flat_hs_R4()
    ext = build_semidirect(g, standard_R2(), [N, Z4])
    alg = ext.product.algebra
    # [a_1, e_2] = phi(a_1) e_2 = e_1, so [e_2, a_1] = -e_1
    assert alg.bracket_basis(1, 4) == tuple(-x for x in unit_vec(6, 0))
    assert alg.bracket_basis(4, 1) == unit_vec(6, 0)


def test_direct_product_is_block_sum():
    ext = direct_product(catalog.rh3_kahler(), standard_R2())
    assert ext.rep.is_zero()
    assert ext.product.g == Matrix.direct_sum(ext.g_rec.g, ext.h_rec.g)
    assert is_pseudo_kahler(ext.product)


def test_block_connection_matches_koszul_on_catalog():
    for eid, ext in catalog_extensions():
        koszul = levi_civita(ext.product.algebra, ext.product.g).gammas
        assert block_connection(ext).gammas == koszul, eid


@given(st.sampled_from([catalog.flat_hs_R4, catalog.pseudokahler_R4, catalog.rh3_kahler]), rationals, rationals)
def test_block_connection_matches_koszul_on_scaled_data(base, s, t):
    g = base()
    phi = N * s + g.J * t
    if not g.algebra.is_derivation(phi):
        return
    ext = build_semidirect(g, standard_R2(), [phi, Z4])
    assert block_connection(ext).gammas == levi_civita(ext.product.algebra, ext.product.g).gammas


def test_pk_conditions_need_pseudo_kahler_factors():
    g = catalog.two_step_6dim()
    h = standard_R2()
    with pytest.raises(ExtensionError, match="not pseudo-Kahler"):
        check_pk_extension_conditions(g, h, [Matrix.zeros(6), Matrix.zeros(6)])


@pytest.mark.parametrize("args", [(1, 1, 1), (5, 1, 7), (5, 7, -1), (Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))])
def test_semisimple_normal_form(args):
    g = catalog.pseudokahler_R4()
    t = catalog.semisimple_triple(*args)
    assert check_AB1B2_constraints(t, g)
    ext = build_semidirect(g, standard_R2(), t.representation(g.J))
    assert is_pseudo_kahler(ext.product)
    assert decompose_AB1B2(g, ext.rep) == t


def test_semisimple_normal_form_off_the_circle():
    g = catalog.pseudokahler_R4()
    d = ab_constraint_items(catalog.semisimple_triple(1, 0, 1), g)
    assert d.failures() == ["[B1,B2]=2JA^2"]


@pytest.mark.parametrize("args", [(1, 1, 2, 2, 4), (1, 0, 0, 0, 0), (2, 1, 0, 3, 0), (1, -1, 1, 2, -2)])
def test_nonsemisimple_normal_form(args):
    g = catalog.nonsemisimple_base()
    t = catalog.nonsemisimple_triple(*args)
    assert check_AB1B2_constraints(t, g)
    ext = build_semidirect(g, standard_R2(), t.representation(g.J))
    assert is_pseudo_kahler(ext.product)


def test_nonsemisimple_normal_form_independent_pairs_fail():
    g = catalog.nonsemisimple_base()
    d = ab_constraint_items(catalog.nonsemisimple_triple(1, 1, 0, 0, 1), g)
    assert d.failures() == ["[B1,B2]=2JA^2"]


def test_decompose_rejects_other_h():
    g = catalog.pseudokahler_R4()
    rep = Representation(LieAlgebra.abelian(2), [Z4, Z4])
    other = StructureRecord(LieAlgebra.abelian(2), Metric(Matrix.diag(2, 2)), standard_R2().J)
    with pytest.raises(ExtensionError):
        decompose_AB1B2(g, rep, other)
    rep = Representation(LieAlgebra.abelian(2), [Matrix.diag(1, -1, -1, 1), Z4])
    with pytest.raises(ExtensionError, match="differs"):
        decompose_AB1B2(g, rep)


@given(metrics(4), st.lists(st.lists(small_ints, min_size=4, max_size=4), min_size=4, max_size=4))
def test_sym_anti_split(G, rows):
    f = Matrix(rows)
    s, a = sym_anti_split(f, G)
    g = Metric(G)
    assert s + a == f
    assert g.adjoint(s) == s
    assert g.adjoint(a) == -a


def test_quotient_by_kernel_ideal_matches_direct_build():
    g = catalog.flat_hs_R4()
    h = catalog.r4_diag([1, 1, -1, -1], [(1, 2), (3, 4)])
    ext = build_semidirect(g, h, [N, Z4, Z4, Z4])
    q = quotient_by_kernel_ideal(ext, [[0, 0, 1, 0], [0, 0, 0, 1]])
    assert is_pseudo_kahler(q.product)
    direct = build_semidirect(g, standard_R2(), [N, Z4])
    assert q.product.algebra == direct.product.algebra
    assert q.product.g == direct.product.g
    assert q.product.J == direct.product.J


def test_quotient_of_hypersymplectic_example():
    ext = catalog.instantiate("hs_2step_solvable", {"variant": 3})
    q = quotient_by_kernel_ideal(ext, [[0, 1, 1, 0], [1, 0, 0, -1]])
    assert q.product.dim == 6
    assert is_pseudo_kahler(q.product)
    assert q.product.algebra.solvability_step() == 2


def test_quotient_errors():
    g = catalog.flat_hs_R4()
    h = catalog.r4_diag([1, 1, -1, -1], [(1, 2), (3, 4)])
    ext = build_semidirect(g, h, [N, Z4, Z4, Z4])
    with pytest.raises(ExtensionError, match="kernel of phi"):
        quotient_by_kernel_ideal(ext, [[1, 0, 0, 0], [0, 1, 0, 0]])
    with pytest.raises(ExtensionError, match="J_h-invariant"):
        quotient_by_kernel_ideal(ext, [[0, 0, 1, 0]])
    prod = direct_product(g, h)
    with pytest.raises(ExtensionError, match="degenerate"):
        quotient_by_kernel_ideal(prod, [[1, 0, 1, 0], [0, 1, 0, 1]])
    # span{e1, e2} in rh3 is J-invariant but [e1, e2] = e3 leaves it
    prod = direct_product(g, catalog.rh3_kahler())
    with pytest.raises(ExtensionError, match="not an ideal"):
        quotient_by_kernel_ideal(prod, [[1, 0, 0, 0], [0, 1, 0, 0]])


def test_derivation_subalgebra_with_antisymmetric_part():
    g = catalog.flat_hs_R4()
    ext = build_from_derivation_subalgebra(g, [N, g.J])
    assert is_pseudo_kahler(ext.product)
    assert check_pk_extension_conditions(ext.g_rec, ext.h_rec, ext.rep)


def test_derivation_subalgebra_symmetric_only():
    g = catalog.nonsemisimple_base()
    A = catalog.nonsemisimple_triple(1, 0, 0, 0, 0).A
    ext = build_from_derivation_subalgebra(g, [A, g.J @ A])
    assert ext.h_rec.dim == 2
    assert is_pseudo_kahler(ext.product)
    assert check_pk_extension_conditions(ext.g_rec, ext.h_rec, ext.rep)
    assert not ext.product.geometry.is_flat()


def test_derivation_subalgebra_errors():
    g = catalog.flat_hs_R4()
    with pytest.raises(ExtensionError, match="zero"):
        build_from_derivation_subalgebra(g, [Z4])
    with pytest.raises(ExtensionError, match="dependent"):
        build_from_derivation_subalgebra(g, [N, N * 2])
    with pytest.raises(ExtensionError, match="odd"):
        build_from_derivation_subalgebra(g, [g.J])
    with pytest.raises(ExtensionError, match="abelian"):
        build_from_derivation_subalgebra(g, [N, Matrix.from_entries(4, {(1, 0): 1, (3, 2): 1})])
    with pytest.raises(ExtensionError, match="not a derivation"):
        build_from_derivation_subalgebra(catalog.rh3_kahler(), [Matrix.diag(1, 0, 0, 0)])


def test_aw_predicate_items():
    e1, e2, d = catalog.trivial_pair_extensions()
    I2 = Matrix.identity(2)
    assert check_aw_related(e1, d, I4, I2)
    assert check_aw_related(e2, d, I4, I2)
    assert check_aw_related(e1, e2, I4, I2).failures() == ["commutator"]
    ext = catalog.instantiate("isometric_not_AW")
    r = check_aw_related(ext, direct_product(ext.g_rec, ext.h_rec), I4, I4)
    assert r.failures() == ["symmetric_part"]


def test_aw_predicate_rejects_non_isomorphisms():
    e1, _, d = catalog.trivial_pair_extensions()
    r = check_aw_related(e1, d, Matrix.zeros(4), Matrix.identity(2))
    assert r.failures() == ["isomorphisms", "metrics", "complex_structures", "symmetric_part", "commutator"]


def test_hs_conditions_on_diagonal_blocks():
    ext = catalog.instantiate("hs_nonkodaira")
    assert check_hs_extension_conditions(ext)
    bad = HSBlocks.diagonal(I4, I4)
    with pytest.raises(CompatibilityError):
        check_hs_extension_conditions(ext, bad)
    with pytest.raises(ExtensionError):
        check_hs_extension_conditions(catalog.instantiate("rh3_rh3_flat"))
