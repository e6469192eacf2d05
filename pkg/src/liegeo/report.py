"""Verification reports: named findings computed for a structure or extension."""
from __future__ import annotations

import json
from typing import Any

from .lie import LieAlgebra
from .linalg import frac_str
from .semidirect import (
    Extension,
    check_abelian_cx_conditions,
    hs_condition_items,
    is_trivial_extension,
    pk_condition_items,
)
from .structures import (
    StructureRecord,
    ce_differential,
    check_unitary_compat,
    is_abelian_complex,
    is_abelian_para,
    is_kodaira_type,
    kahler_form,
    nijenhuis_vanishes,
)

FIELDS = (
    "jacobi",
    "dim",
    "signature",
    "pseudo_kahler",
    "nijenhuis_zero",
    "omega_closed",
    "omega",
    "flat",
    "ricci_flat",
    "hypersymplectic",
    "kodaira",
    "abelian_cx",
    "abelian_para",
    "nilpotency_step",
    "solvability_step",
    "unimodular",
    "center_dim",
    "trivial_extension",
    "factors_pseudo_kahler",
    "pk_extension_conditions",
    "abelian_cx_conditions",
    "hs_conditions",
)


class VerificationReport(dict):
    """Ordered findings; values are bools, ints, None or small JSON-able data."""

    def consistency_errors(self) -> list[str]:
        errs = []
        if self.get("flat") and self.get("ricci_flat") is False:
            errs.append("flat but not Ricci-flat")
        if self.get("pseudo_kahler") and not (self.get("nijenhuis_zero") and self.get("omega_closed")):
            errs.append("pseudo-Kahler without integrable J and closed omega")
        if self.get("pseudo_kahler") is False and self.get("nijenhuis_zero") and self.get("omega_closed"):
            errs.append("integrable J and closed omega but not pseudo-Kahler")
        if self.get("hypersymplectic") and self.get("ricci_flat") is False:
            errs.append("hypersymplectic but not Ricci-flat")
        if self.get("kodaira") and self.get("nilpotency_step") != 2:
            errs.append("Kodaira type but not 2-step nilpotent")
        if self.get("factors_pseudo_kahler") and self["pk_extension_conditions"] != self.get("pseudo_kahler"):
            errs.append("extension conditions disagree with the direct pseudo-Kahler test")
        if self.get("pseudo_kahler") and "hs_conditions" in self and self["hs_conditions"] is not None and self["hs_conditions"] != self.get("hypersymplectic"):
            errs.append("block conditions disagree with the direct parallelism test")
        if self.get("factors_pseudo_kahler") and self.get("pk_extension_conditions") and self["abelian_cx_conditions"] != self.get("abelian_cx"):
            errs.append("abelian-J conditions disagree with the direct test")
        return errs

    def to_json(self) -> dict:
        return {k: _jsonable(v) for k, v in self.items()}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    def to_text(self) -> str:
        width = max((len(k) for k in self), default=0)
        return "\n".join(f"{k.ljust(width)}  {_text(v)}" for k, v in self.items())


def _jsonable(v: Any):
    if isinstance(v, tuple):
        return [_jsonable(x) for x in v]
    if isinstance(v, list):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {str(k): _jsonable(x) for k, x in v.items()}
    if hasattr(v, "numerator") and not isinstance(v, (bool, int)):
        return frac_str(v)
    return v


def _text(v: Any) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_text(x) for x in v) + "]"
    return str(v)


def algebra_findings(alg: LieAlgebra) -> VerificationReport:
    rep = VerificationReport()
    rep["jacobi"] = True
    rep["dim"] = alg.dim
    rep["nilpotency_step"] = alg.nilpotency_step()
    rep["solvability_step"] = alg.solvability_step()
    rep["unimodular"] = alg.is_unimodular()
    rep["center_dim"] = alg.center().dim
    return rep


def verify_record(rec: StructureRecord) -> VerificationReport:
    alg = rec.algebra
    rep = VerificationReport()
    rep["jacobi"] = True
    rep["dim"] = alg.dim
    rep["signature"] = list(rec.metric.signature())
    compat = check_unitary_compat(rec.metric, rec.J)
    geo = rec.geometry
    if compat:
        omega = kahler_form(rec)
        nz = nijenhuis_vanishes(alg, rec.J)
        closed = ce_differential(alg, omega).is_zero()
        rep["pseudo_kahler"] = geo.connection.parallel(rec.J)
        rep["nijenhuis_zero"] = nz
        rep["omega_closed"] = closed
        rep["omega"] = omega.to_string()
    else:
        rep["pseudo_kahler"] = False
        rep["nijenhuis_zero"] = None
        rep["omega_closed"] = None
        rep["omega"] = None
    rep["flat"] = geo.is_flat()
    rep["ricci_flat"] = geo.is_ricci_flat()
    if rec.E is not None:
        ok = check_unitary_compat(rec.metric, rec.J, rec.E)
        rep["hypersymplectic"] = bool(ok) and rep["pseudo_kahler"] and geo.connection.parallel(rec.E)
        rep["abelian_para"] = is_abelian_para(alg, rec.E)
    else:
        rep["hypersymplectic"] = None
    rep["kodaira"] = is_kodaira_type(alg, rec.J)
    rep["abelian_cx"] = is_abelian_complex(alg, rec.J)
    rep["nilpotency_step"] = alg.nilpotency_step()
    rep["solvability_step"] = alg.solvability_step()
    rep["unimodular"] = alg.is_unimodular()
    rep["center_dim"] = alg.center().dim
    return rep


def verify_extension(ext: Extension) -> VerificationReport:
    rep = verify_record(ext.product)
    g = ext.g_rec.metric
    rep["trivial_extension"] = is_trivial_extension(ext.rep, g)
    rep["factors_pseudo_kahler"] = bool(
        ext.g_rec.geometry.connection.parallel(ext.g_rec.J) and ext.h_rec.geometry.connection.parallel(ext.h_rec.J)
    )
    rep["pk_extension_conditions"] = bool(pk_condition_items(ext.g_rec, ext.h_rec, ext.rep))
    rep["abelian_cx_conditions"] = check_abelian_cx_conditions(ext.g_rec, ext.h_rec, ext.rep)
    if ext.blocks is not None and check_unitary_compat(ext.product.metric, ext.product.J, ext.product.E):
        rep["hs_conditions"] = bool(hs_condition_items(ext, ext.blocks))
    elif ext.blocks is not None:
        rep["hs_conditions"] = None
    return rep
