"""JSON interfaces: matrices, group/representation specs, problem files.

Matrices travel as row-major nested lists of [re, im] pairs.  Group specs
are either a preset label or an explicit multiplication table; rep specs a
preset name ("regular", "trivial", an irrep name) or explicit matrices.
"""

from __future__ import annotations

import json

import numpy as np

from .errors import SpecFileError
from .groups import (
    FiniteGroup,
    UnitaryRep,
    group_preset,
    irrep_catalog,
    named_irrep,
    regular_rep,
    trivial_rep,
)
from .reduction import LinearRealization, SymplecticVectorSpace


def matrix_to_json(m) -> list:
    a = np.asarray(m, dtype=complex)
    return [[[float(v.real), float(v.imag)] for v in row] for row in a]


def matrix_from_json(data) -> np.ndarray:
    try:
        rows = []
        for row in data:
            rows.append([complex(float(re), float(im)) for re, im in row])
        a = np.array(rows, dtype=complex)
    except (TypeError, ValueError) as exc:
        raise SpecFileError(f"malformed matrix payload: {exc}") from exc
    if a.ndim != 2:
        raise SpecFileError("matrix payload must be two-dimensional")
    return a


def vector_to_json(v) -> list:
    return [float(x) for x in np.asarray(v, dtype=float)]


def load_group(spec: dict) -> FiniteGroup:
    if not isinstance(spec, dict):
        raise SpecFileError("group spec must be an object")
    if "preset" in spec:
        try:
            return group_preset(str(spec["preset"]))
        except Exception as exc:
            raise SpecFileError(f"unknown group preset: {exc}") from exc
    if "table" in spec:
        try:
            return FiniteGroup(spec["table"])
        except Exception as exc:
            raise SpecFileError(f"invalid multiplication table: {exc}") from exc
    raise SpecFileError("group spec needs 'preset' or 'table'")


def load_rep(spec: dict, group: FiniteGroup) -> UnitaryRep:
    if not isinstance(spec, dict):
        raise SpecFileError("rep spec must be an object")
    if "preset" in spec:
        name = str(spec["preset"])
        if name == "regular":
            return regular_rep(group)
        if name == "trivial":
            return trivial_rep(group)
        try:
            return named_irrep(group, name)
        except Exception as exc:
            raise SpecFileError(f"unknown rep preset '{name}': {exc}") from exc
    if "irrep" in spec:
        try:
            return named_irrep(group, str(spec["irrep"]))
        except Exception as exc:
            raise SpecFileError(f"unknown irrep: {exc}") from exc
    if "matrices" in spec:
        try:
            mats = np.stack([matrix_from_json(m) for m in spec["matrices"]])
            return UnitaryRep(group, mats)
        except SpecFileError:
            raise
        except Exception as exc:
            raise SpecFileError(f"invalid representation matrices: {exc}") from exc
    raise SpecFileError("rep spec needs 'preset', 'irrep' or 'matrices'")


def load_group_and_rep(payload: dict) -> tuple[FiniteGroup, UnitaryRep]:
    """The finite-groups spec-file format: {"group": ..., "rep": ...}."""
    if "group" not in payload:
        raise SpecFileError("spec file needs a 'group' entry")
    group = load_group(payload["group"])
    rep = load_rep(payload.get("rep", {"preset": "regular"}), group)
    return group, rep


def load_induction_case(payload: dict):
    """Induction spec: {"group": ..., "U": ..., "rho": ...}."""
    if "group" not in payload:
        raise SpecFileError("induction spec needs a 'group' entry")
    group = load_group(payload["group"])
    u = load_rep(payload.get("U", {"preset": "regular"}), group)
    rho = load_rep(payload.get("rho", {"preset": "trivial"}), group)
    return group, u, rho


def load_real_matrix(data, what: str) -> np.ndarray:
    try:
        a = np.asarray(data, dtype=float)
    except (TypeError, ValueError) as exc:
        raise SpecFileError(f"malformed {what}: {exc}") from exc
    if a.ndim != 2:
        raise SpecFileError(f"{what} must be a matrix")
    return a


def load_reduction_problem(payload: dict):
    """Reduction spec: omega, J = {A, b}, optional rho = {omega, A, b}.

    Returns (J, J_rho) with J_rho defaulting to the point realization at 0
    (Marsden-Weinstein).
    """
    if "omega" not in payload or "J" not in payload:
        raise SpecFileError("reduction spec needs 'omega' and 'J'")
    try:
        space = SymplecticVectorSpace(load_real_matrix(payload["omega"], "omega"))
        jspec = payload["J"]
        A = load_real_matrix(jspec["A"], "J.A")
        b = jspec.get("b")
        j = LinearRealization(space, A, None if b is None else np.asarray(b, dtype=float))
    except SpecFileError:
        raise
    except KeyError as exc:
        raise SpecFileError(f"reduction spec missing field: {exc}") from exc
    except Exception as exc:
        raise SpecFileError(f"invalid reduction problem: {exc}") from exc
    if "rho" in payload:
        try:
            rspec = payload["rho"]
            rspace = SymplecticVectorSpace(load_real_matrix(rspec["omega"], "rho.omega"))
            rA = load_real_matrix(rspec["A"], "rho.A")
            rb = rspec.get("b")
            j_rho = LinearRealization(
                rspace, rA, None if rb is None else np.asarray(rb, dtype=float)
            )
        except SpecFileError:
            raise
        except KeyError as exc:
            raise SpecFileError(f"reduction spec missing field: {exc}") from exc
        except Exception as exc:
            raise SpecFileError(f"invalid second realization: {exc}") from exc
    else:
        j_rho = LinearRealization.point_at_zero(j.target_dim)
    return j, j_rho


def load_projective_case(payload: dict):
    """Projective-rep spec: {"group": ..., "matrices": [...]}."""
    if "group" not in payload or "matrices" not in payload:
        raise SpecFileError("projective spec needs 'group' and 'matrices'")
    group = load_group(payload["group"])
    mats = np.stack([matrix_from_json(m) for m in payload["matrices"]])
    if mats.shape[0] != group.order:
        raise SpecFileError("need exactly one matrix per group element")
    return group, mats


def load_json_file(path) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise SpecFileError(f"spec file not found: {path}") from exc
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"spec file {path} is not valid JSON: {exc}") from exc


def format_float(x: float) -> str:
    """17 significant digits: exact round-trip, byte-stable for diffs."""
    return f"{float(x):.17g}"


def jsonable(obj):
    """Recursively convert numpy containers to json-serializable values."""
    if isinstance(obj, dict):
        return {k: jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        if np.iscomplexobj(obj):
            return matrix_to_json(obj) if obj.ndim == 2 else [
                [float(v.real), float(v.imag)] for v in obj
            ]
        return obj.tolist()
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (np.floating,)):
        return float(obj)
    if isinstance(obj, complex):
        return [obj.real, obj.imag]
    return obj


def dump_json(payload, path):
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(jsonable(payload), fh, indent=1, sort_keys=False)
        fh.write("\n")


def irrep_names(group: FiniteGroup) -> list[str]:
    return [r.name for r in irrep_catalog(group)]
