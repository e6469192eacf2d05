"""JSON files for structures and extensions.

Structure file: the Lie algebra file ({"name", "dim", "brackets"}) plus
"metric", "J" and optionally "E", each a list of rows of rational strings.

Extension file: {"g": <structure or catalog id>, "h": <...>, "phi": [matrix per
basis vector of h], optional "E_blocks": {"E1", "E2", "E3", "E4"}, optional "name"}.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

from .geometry import DegenerateMetricError, Metric
from .lie import JacobiError, LieAlgebra
from .linalg import LinAlgError, Matrix
from .semidirect import Extension, ExtensionError, HSBlocks, build_semidirect
from .structures import CompatibilityError, StructureRecord


class InputError(ValueError):
    """Malformed or invalid input; the message names the failing part."""


def _matrix(data: Any, what: str, n: int | None = None) -> Matrix:
    try:
        m = Matrix.from_json(data)
    except (TypeError, ValueError, ZeroDivisionError, LinAlgError) as exc:
        raise InputError(f"{what}: not a matrix of rationals ({exc})") from None
    if n is not None and m.shape != (n, n):
        raise InputError(f"{what}: expected a {n}x{n} matrix, got {m.nrows}x{m.ncols}")
    return m


def record_from_json(data: Mapping) -> StructureRecord:
    if not isinstance(data, Mapping):
        raise InputError("structure must be a JSON object")
    try:
        alg = LieAlgebra.from_json(data)
    except JacobiError as exc:
        raise InputError(f"brackets: {exc}") from None
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise InputError(f"brackets: {exc}") from None
    for key in ("metric", "J"):
        if key not in data:
            raise InputError(f"structure file needs {key!r}")
    n = alg.dim
    G = _matrix(data["metric"], "metric", n)
    J = _matrix(data["J"], "J", n)
    E = _matrix(data["E"], "E", n) if data.get("E") is not None else None
    try:
        return StructureRecord(alg, Metric(G), J, E, name=data.get("name", ""))
    except DegenerateMetricError as exc:
        raise InputError(f"metric: {exc}") from None
    except CompatibilityError as exc:
        raise InputError(f"compatibility: {exc}") from None
    except ValueError as exc:
        raise InputError(str(exc)) from None


def record_to_json(rec: StructureRecord) -> dict:
    out = rec.algebra.to_json()
    out["name"] = rec.name or rec.algebra.name
    out["metric"] = rec.g.to_json()
    out["J"] = rec.J.to_json()
    if rec.E is not None:
        out["E"] = rec.E.to_json()
    return out


def _factor(data: Any, which: str) -> StructureRecord:
    if isinstance(data, str):
        from . import catalog

        try:
            obj = catalog.instantiate(data)
        except catalog.CatalogError as exc:
            raise InputError(f"{which}: {exc}") from None
        return obj.product if isinstance(obj, Extension) else obj
    try:
        return record_from_json(data)
    except InputError as exc:
        raise InputError(f"{which}: {exc}") from None


def extension_from_json(data: Mapping) -> Extension:
    if not isinstance(data, Mapping):
        raise InputError("extension must be a JSON object")
    for key in ("g", "h", "phi"):
        if key not in data:
            raise InputError(f"extension file needs {key!r}")
    g = _factor(data["g"], "g")
    h = _factor(data["h"], "h")
    phi = data["phi"]
    if not isinstance(phi, list) or len(phi) != h.dim:
        raise InputError(f"phi: expected {h.dim} matrices, one per basis vector of h")
    mats = [_matrix(m, f"phi[{a + 1}]", g.dim) for a, m in enumerate(phi)]
    blocks = None
    if data.get("E_blocks") is not None:
        eb = data["E_blocks"]
        try:
            blocks = HSBlocks(*(Matrix.from_json(eb[k]) for k in ("E1", "E2", "E3", "E4")))
        except KeyError as exc:
            raise InputError(f"E_blocks: missing {exc}") from None
        except (TypeError, ValueError) as exc:
            raise InputError(f"E_blocks: {exc}") from None
    try:
        return build_semidirect(g, h, mats, blocks=blocks, name=data.get("name", ""))
    except (ExtensionError, CompatibilityError, JacobiError, ValueError) as exc:
        raise InputError(f"extension: {exc}") from None


def extension_to_json(ext: Extension) -> dict:
    out: dict = {
        "name": ext.product.name,
        "g": record_to_json(ext.g_rec),
        "h": record_to_json(ext.h_rec),
        "phi": [m.to_json() for m in ext.rep.phi],
    }
    if ext.blocks is not None:
        b = ext.blocks
        out["E_blocks"] = {"E1": b.E1.to_json(), "E2": b.E2.to_json(), "E3": b.E3.to_json(), "E4": b.E4.to_json()}
    return out


def load_json(path: str | Path) -> Any:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: malformed JSON at line {exc.lineno} column {exc.colno}: {exc.msg}") from None


def load_record(path: str | Path) -> StructureRecord:
    return record_from_json(load_json(path))


def load_extension(path: str | Path) -> Extension:
    return extension_from_json(load_json(path))
