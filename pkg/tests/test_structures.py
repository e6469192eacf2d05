from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from liegeo import catalog
from liegeo.geometry import Metric
from liegeo.lie import LieAlgebra
from liegeo.linalg import Matrix
from liegeo.structures import (
    CompatibilityError,
    Form,
    J_from_pairs,
    StructureRecord,
    basis_form,
    ce_differential,
    check_unitary_compat,
    complex_structure_from_images,
    form_from_string,
    is_abelian_complex,
    is_abelian_para,
    is_hypersymplectic,
    is_kodaira_type,
    is_pseudo_kahler,
    kahler_form,
    nijenhuis_vanishes,
    pseudo_kahler_routes,
)
from strategies import algebras, invertible, rationals, transport

HEIS = LieAlgebra(3, {(0, 1): {2: 1}})
J4 = J_from_pairs(4, [(0, 1), (2, 3)])


@st.composite
def forms(draw, n, k):
    from itertools import combinations

    comps = {idx: draw(rationals) for idx in combinations(range(n), k)}
    return Form(n, k, comps)


def test_compatibility_errors_name_the_condition():
    alg = LieAlgebra.abelian(2)
    with pytest.raises(CompatibilityError) as info:
        StructureRecord(alg, Metric(Matrix.diag(1, -1)), Matrix([[0, -1], [1, 0]]))
    assert info.value.diagnostics.failures() == ["J_metric"]
    with pytest.raises(CompatibilityError) as info:
        StructureRecord(alg, Metric(Matrix.identity(2)), Matrix([[0, 1], [1, 0]]))
    assert "J_squared" in info.value.diagnostics.failures()


def test_check_unitary_compat_with_E():
    rec = catalog.flat_hs_R4()
    assert check_unitary_compat(rec.metric, rec.J, rec.E)
    d = check_unitary_compat(rec.metric, rec.J, Matrix.identity(4))
    assert d.failures() == ["E_metric", "JE_anticommute"]


def test_form_sign_normalisation_and_string():
    f = Form(4, 2, {(1, 0): 1, (2, 3): Fraction(1, 2)})
    assert f(0, 1) == -1
    assert f(1, 0) == 1
    assert f(3, 3) == 0
    assert f.to_string() == "-e12+1/2*e34"
    assert form_from_string(4, "-e12+1/2*e34") == f
    assert Form.from_matrix(f.to_matrix()) == f


def test_basis_form_evaluation():
    f = basis_form(3, 0, 1)
    assert f.evaluate((1, 0, 0), (0, 1, 0)) == 1
    assert f.evaluate((0, 1, 0), (1, 0, 0)) == -1


def test_differential_of_one_forms_matches_structure_equations():
    # de^3 = -e^12 for [e1, e2] = e3
    assert ce_differential(HEIS, basis_form(3, 2)) == Form(3, 2, {(0, 1): -1})
    assert ce_differential(HEIS, basis_form(3, 0)).is_zero()


@given(algebras(4), forms(4, 1))
def test_d_squared_on_one_forms(alg, f):
    assert ce_differential(alg, ce_differential(alg, f)).is_zero()


@given(algebras(4), forms(4, 2))
def test_d_squared_on_two_forms(alg, f):
    assert ce_differential(alg, ce_differential(alg, f)).is_zero()


def test_kahler_form_convention():
    rec = catalog.pseudokahler_R4()
    # omega(X, Y) = g(JX, Y) with J e1 = e3, J e2 = e4, g = diag(1,-1,1,-1)
    assert kahler_form(rec).to_string() == "e13-e24"


def test_nijenhuis_detects_the_printed_three_step_base():
    printed = catalog.three_step_6dim(printed=True)
    assert not nijenhuis_vanishes(printed.algebra, printed.J)
    assert nijenhuis_vanishes(catalog.three_step_6dim().algebra, catalog.three_step_6dim().J)


def test_printed_two_step_base_has_non_closed_form():
    rec = catalog.two_step_6dim()
    assert nijenhuis_vanishes(rec.algebra, rec.J)
    assert ce_differential(rec.algebra, kahler_form(rec)).to_string() == "2*e123"
    assert pseudo_kahler_routes(rec) == (False, False)


@given(st.sampled_from(["rh3", "pseudokahlerR4", "flat_HS_R4", "kahleronr2"]), invertible(4))
def test_routes_agree_on_transported_records(eid, P):
    rec = transport(catalog.instantiate(eid), P)
    assert pseudo_kahler_routes(rec) == (True, True)


@given(algebras(4), invertible(4))
def test_routes_agree_on_random_structures(alg, P):
    G0 = Matrix.diag(1, 1, -1, -1)
    rec = StructureRecord(alg, Metric(P.T @ G0 @ P), P.inverse() @ J4 @ P)
    a, b = pseudo_kahler_routes(rec)
    assert a == b
    assert is_pseudo_kahler(rec) == a


def test_hypersymplectic_predicate():
    rec = catalog.flat_hs_R4()
    assert is_hypersymplectic(rec)
    with pytest.raises(ValueError):
        is_hypersymplectic(catalog.pseudokahler_R4())
    bad = rec.with_E(Matrix.identity(4), validate=False)
    with pytest.raises(CompatibilityError):
        is_hypersymplectic(bad)


def test_abelian_structures():
    rec = catalog.rh3_kahler()
    assert is_abelian_complex(rec.algebra, rec.J)
    hs = catalog.rh3_hypersymplectic()
    assert is_abelian_complex(hs.algebra, hs.J) == is_abelian_para(hs.algebra, hs.E)


def test_kodaira_type():
    ext = catalog.instantiate("hs_kodaira_8dim")
    assert is_kodaira_type(ext.product.algebra, ext.product.J)
    ext = catalog.instantiate("hs_nonkodaira")
    assert not is_kodaira_type(ext.product.algebra, ext.product.J)
    assert not is_kodaira_type(LieAlgebra.abelian(4), J4)


def test_complex_structure_builders():
    J = complex_structure_from_images(4, {0: [0, 0, 1, 0], 1: [0, 0, 0, 1]})
    assert J == J_from_pairs(4, [(0, 2), (1, 3)])
    assert J @ J == -Matrix.identity(4)
    with pytest.raises(ValueError):
        complex_structure_from_images(4, {0: [0, 1, 0, 0]})


def test_permuted_record_is_isometric_copy():
    rec = catalog.rh3_kahler()
    p = rec.permuted([2, 0, 3, 1])
    assert pseudo_kahler_routes(p) == (True, True)
    assert p.algebra.nilpotency_step() == 2
    assert p.metric.signature() == rec.metric.signature()
