"""Exact computations for pseudo-Kahler and hypersymplectic structures on Lie algebras."""
from .geometry import Geometry, Metric, curvature, levi_civita, ricci
from .lie import JacobiError, LieAlgebra, Subspace
from .linalg import Matrix
from .report import VerificationReport, verify_extension, verify_record
from .salamon import emit_salamon, parse_salamon
from .semidirect import Extension, HSBlocks, Representation, build_semidirect, check_aw_related
from .structures import StructureRecord, ce_differential, is_hypersymplectic, is_pseudo_kahler, nijenhuis

__all__ = [
    "Extension", "Geometry", "HSBlocks", "JacobiError", "LieAlgebra", "Matrix", "Metric",
    "Representation", "StructureRecord", "Subspace", "VerificationReport", "build_semidirect",
    "ce_differential", "check_aw_related", "curvature", "emit_salamon", "is_hypersymplectic",
    "is_pseudo_kahler", "levi_civita", "nijenhuis", "parse_salamon", "ricci",
    "verify_extension", "verify_record",
]
