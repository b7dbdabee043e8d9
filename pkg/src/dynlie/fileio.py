"""File formats: system specs, schedules, and canonical reports.

Reports are structured text (a JSON subset) chosen over binary for
inspectability and golden-file diffs.  Serialization is canonical: keys
appear in fixed builder order, floats are printed with 17 significant
digits, complex entries as [re, im] pairs.  Parsing with
:func:`loads_report` and re-serializing therefore reproduces the exact
bytes.
"""

import json

import numpy as np

from .dynamics import ControlSchedule, KIND_SIMPLE, structure_residuals, su2_flags
from .models import MODELS, ControlSystem

STRUCTURE_FORMAT = "dynlie-structure-report"
PROPAGATION_FORMAT = "dynlie-propagation-report"


class SpecError(ValueError):
    """Malformed spec, schedule, or flag input (CLI exit code 2)."""


# ---------------------------------------------------------------------------
# canonical serialization

def _fmt_float(x):
    x = float(x)
    if x != x or x in (float("inf"), float("-inf")):
        raise ValueError("reports must not contain NaN or infinities")
    return format(x, ".17g")


def _emit(obj, indent):
    pad = "  " * indent
    if obj is None:
        return "null"
    if obj is True:
        return "true"
    if obj is False:
        return "false"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        parts = [f'{pad}  {json.dumps(str(k))}: {_emit(v, indent + 1)}'
                 for k, v in obj.items()]
        return "{\n" + ",\n".join(parts) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        inline = "[" + ", ".join(_emit(v, 0) for v in obj) + "]"
        if len(inline) <= 100 and "\n" not in inline:
            return inline
        parts = [f"{pad}  {_emit(v, indent + 1)}" for v in obj]
        return "[\n" + ",\n".join(parts) + "\n" + pad + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps_report(doc):
    """Canonical text form of a report document (dicts and lists)."""
    return _emit(doc, 0) + "\n"


def loads_report(text):
    """Inverse of :func:`dumps_report` (plain JSON parsing)."""
    return json.loads(text)


def matrix_to_pairs(mat):
    """Complex matrix -> nested lists of [re, im] pairs."""
    m = np.asarray(mat, dtype=complex)
    return [[[float(v.real), float(v.imag)] for v in row] for row in m]


def pairs_to_matrix(obj, what="matrix"):
    """Nested [re, im] lists -> complex ndarray, with shape validation."""
    try:
        arr = np.asarray(obj, dtype=float)
    except (TypeError, ValueError) as err:
        raise SpecError(f"{what}: entries must be [re, im] pairs") from err
    if arr.ndim != 3 or arr.shape[2] != 2 or arr.shape[0] != arr.shape[1]:
        raise SpecError(
            f"{what}: expected a square matrix of [re, im] pairs, "
            f"got shape {arr.shape}")
    return arr[:, :, 0] + 1j * arr[:, :, 1]


# ---------------------------------------------------------------------------
# input formats

def load_system_spec(path):
    """Read a control-system spec file.

    Two shapes are accepted: {"model": "two-spin"} for a bundled model,
    or explicit {"dim", "drift", "controls", "labels"} with matrices as
    nested [re, im] pairs.  Hamiltonians are validated as Hermitian at
    1e-8 and symmetrized.
    """
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as err:
        raise SpecError(f"cannot read spec file: {err}") from err
    except json.JSONDecodeError as err:
        raise SpecError(f"spec file is not valid JSON: {err}") from err
    return system_from_doc(doc)


def system_from_doc(doc):
    if not isinstance(doc, dict):
        raise SpecError("spec must be a JSON object")
    if "model" in doc:
        name = doc["model"]
        if name not in MODELS:
            known = ", ".join(sorted(MODELS))
            raise SpecError(f"unknown model {name!r} (known: {known})")
        return MODELS[name]()
    for key in ("dim", "drift", "controls"):
        if key not in doc:
            raise SpecError(f"spec is missing the {key!r} field")
    try:
        dim = int(doc["dim"])
    except (TypeError, ValueError) as err:
        raise SpecError("dim must be an integer") from err
    drift = pairs_to_matrix(doc["drift"], "drift")
    controls = [pairs_to_matrix(c, f"control {k}")
                for k, c in enumerate(doc["controls"])]
    labels = doc.get("labels")
    if labels is None:
        labels = [f"u{k + 1}" for k in range(len(controls))]
    if len(labels) != len(controls):
        raise SpecError(
            f"{len(labels)} labels given for {len(controls)} controls")
    mats = [("drift", drift)] + list(zip(labels, controls))
    for name, m in mats:
        if m.shape != (dim, dim):
            raise SpecError(f"{name}: shape {m.shape} does not match dim {dim}")
        if np.linalg.norm(m - m.conj().T) > 1e-8 * max(1.0, np.linalg.norm(m)):
            raise SpecError(f"{name} is not Hermitian at tolerance 1e-8")
    drift = (drift + drift.conj().T) / 2.0
    controls = [(c + c.conj().T) / 2.0 for c in controls]
    try:
        return ControlSystem(dim=dim, drift=drift, controls=tuple(controls),
                             labels=tuple(labels))
    except ValueError as err:
        raise SpecError(str(err)) from err


def load_schedule(path, n_controls):
    """Read a schedule file: {"segments": [{"duration", "u"}, ...]}."""
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as err:
        raise SpecError(f"cannot read schedule file: {err}") from err
    except json.JSONDecodeError as err:
        raise SpecError(f"schedule file is not valid JSON: {err}") from err
    if not isinstance(doc, dict) or "segments" not in doc:
        raise SpecError("schedule must be an object with a 'segments' list")
    segments = []
    for k, seg in enumerate(doc["segments"]):
        if not isinstance(seg, dict) or "duration" not in seg or "u" not in seg:
            raise SpecError(f"segment {k} needs 'duration' and 'u' fields")
        try:
            dur = float(seg["duration"])
            u = [float(v) for v in seg["u"]]
        except (TypeError, ValueError) as err:
            raise SpecError(f"segment {k}: malformed numbers") from err
        if dur <= 0.0:
            raise SpecError(f"segment {k}: duration must be positive")
        if len(u) != n_controls:
            raise SpecError(
                f"segment {k}: {len(u)} control values for {n_controls} "
                f"controls")
        segments.append((dur, u))
    try:
        return ControlSchedule(segments=tuple(segments))
    except ValueError as err:
        raise SpecError(str(err)) from err


# ---------------------------------------------------------------------------
# report builders

def build_structure_report(analysis):
    """Structure report document with canonical key order."""
    levi = analysis.levi
    residuals = structure_residuals(analysis)
    status = "ok" if all(v <= 1e-8 for v in residuals.values()) else "degraded"
    doc = {
        "format": STRUCTURE_FORMAT,
        "version": 1,
        "status": status,
        "system": {
            "dim": analysis.system.dim,
            "labels": list(analysis.system.labels),
        },
        "algebra_dim": analysis.closure.dim,
        "closure_depth": analysis.closure.depth_reached,
        "controllability": analysis.verdict,
        "radical_dim": levi.radical.dim,
        "radical_line_count": len(levi.radical_lines),
        "semisimple_dim": levi.semisimple.dim,
        "cartan_dim": (analysis.cartan.cartan.dim
                       if analysis.cartan is not None else 0),
    }
    if analysis.primary is not None:
        doc["splitting"] = {
            "coefficients": [float(c)
                             for c in analysis.primary.splitting.coeffs],
            "frequencies": [float(f)
                            for f in analysis.primary.splitting.frequencies],
        }
    else:
        doc["splitting"] = None
    flags = su2_flags(analysis)
    doc["components"] = [
        {"kind": kind, "dim": basis.dim,
         "su2": bool(flag) if kind == KIND_SIMPLE else False}
        for (kind, basis), flag in zip(analysis.decomposition.components,
                                       flags)
    ]
    doc["residuals"] = {k: float(v) for k, v in sorted(residuals.items())}
    return doc


def build_propagation_report(decomp, result):
    """Propagation report: total, factors, and the certification numbers."""
    n = result.total.shape[0]
    eye = np.eye(n)
    unit = max(
        [float(np.linalg.norm(f.conj().T @ f - eye)) for f in result.factors]
        + [float(np.linalg.norm(result.total.conj().T @ result.total - eye))]
    )
    doc = {
        "format": PROPAGATION_FORMAT,
        "version": 1,
        "final_time": float(result.times),
        "factorization_error": float(result.factorization_error),
        "commutation_residual": float(result.commutation_residual),
        "unitarity_residual": unit,
        "total": matrix_to_pairs(result.total),
        "factors": [
            {"kind": kind, "dim": basis.dim, "matrix": matrix_to_pairs(f)}
            for (kind, basis), f in zip(decomp.components, result.factors)
        ],
    }
    return doc
