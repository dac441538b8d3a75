"""JSON wire formats.

Frame files are ``{"d": ..., "n": ..., "vectors": [[[re, im] x d] x n]}``;
dynamical systems are ``{"n": ..., "f1": [[re, im] x d], "T": row-major
[[re, im] x d*d]}``.  All floats are emitted with 17 significant digits so
that every double round-trips exactly and reports diff reproducibly.
Indices in wire formats are 1-based.
"""

from __future__ import annotations

import json

import numpy as np

from .cyclic import CyclicReport, NormBoundReport
from .dynamical import DynamicalSystem, WindowReport
from .erasure import ErasureRecord, ErasureReport
from .frames import AnalysisReport, Frame, FrameBounds


def _format(obj, indent: int | None, level: int) -> str:
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        x = float(obj)
        return f"{x:.17g}" if np.isfinite(x) else "null"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        sep = ": " if indent is not None else ":"
        parts = [json.dumps(str(k)) + sep + _format(v, indent, level + 1) for k, v in obj.items()]
        return _join(parts, "{}", indent, level)
    if isinstance(obj, (list, tuple)):
        parts = [_format(v, indent, level + 1) for v in obj]
        return _join(parts, "[]", indent, level)
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _join(parts: list[str], braces: str, indent: int | None, level: int) -> str:
    if not parts:
        return braces
    if indent is None:
        return braces[0] + ",".join(parts) + braces[1]
    inner = " " * (indent * (level + 1))
    body = (",\n" + inner).join(parts)
    return braces[0] + "\n" + inner + body + "\n" + " " * (indent * level) + braces[1]


def dumps(obj, pretty: bool = False) -> str:
    """Serialize to JSON with 17-significant-digit floats."""
    return _format(obj, 2 if pretty else None, 0)


def complex_pair(z: complex) -> list[float]:
    return [float(np.real(z)), float(np.imag(z))]


def _pair_to_complex(pair) -> complex:
    if not isinstance(pair, (list, tuple)) or len(pair) != 2:
        raise ValueError(f"expected an [re, im] pair, got {pair!r}")
    return complex(float(pair[0]), float(pair[1]))


def frame_to_dict(frame: Frame) -> dict:
    return {
        "d": frame.d,
        "n": frame.n,
        "vectors": [
            [complex_pair(frame.synthesis[i, k]) for i in range(frame.d)]
            for k in range(frame.n)
        ],
    }


def frame_from_dict(data: dict) -> Frame:
    d = int(data["d"])
    n = int(data["n"])
    vectors = data["vectors"]
    if len(vectors) != n:
        raise ValueError(f"expected {n} vectors, found {len(vectors)}")
    cols = np.empty((d, n), dtype=np.complex128)
    for k, vec in enumerate(vectors):
        if len(vec) != d:
            raise ValueError(f"vector {k + 1} has length {len(vec)}, expected {d}")
        cols[:, k] = [_pair_to_complex(p) for p in vec]
    return Frame(cols)


def save_frame(frame: Frame, path, pretty: bool = False):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(frame_to_dict(frame), pretty) + "\n")


def load_frame(path) -> Frame:
    with open(path, "r", encoding="utf-8") as fh:
        return frame_from_dict(json.load(fh))


def system_to_dict(system: DynamicalSystem) -> dict:
    d = system.d
    return {
        "n": system.length,
        "f1": [complex_pair(z) for z in system.seed],
        "T": [complex_pair(system.operator[i, j]) for i in range(d) for j in range(d)],
    }


def system_from_dict(data: dict) -> DynamicalSystem:
    n = int(data["n"])
    seed = np.array([_pair_to_complex(p) for p in data["f1"]], dtype=np.complex128)
    d = seed.size
    flat = data["T"]
    if len(flat) != d * d:
        raise ValueError(f"operator needs {d * d} entries, found {len(flat)}")
    op = np.array([_pair_to_complex(p) for p in flat], dtype=np.complex128).reshape(d, d)
    return DynamicalSystem(operator=op, seed=seed, length=n)


def bounds_to_dict(bounds: FrameBounds) -> dict:
    return {"lower": bounds.lower, "upper": bounds.upper}


def analysis_to_dict(report: AnalysisReport) -> dict:
    stats = report.gram_offdiag
    return {
        "bounds": bounds_to_dict(report.bounds),
        "is_frame": report.is_frame,
        "is_tight": report.is_tight,
        "is_parseval": report.is_parseval,
        "is_uniform": report.is_uniform,
        "uniform_norm": report.uniform_norm,
        "is_equiangular": report.is_equiangular,
        "equiangular_modulus": report.equiangular_modulus,
        "gram_offdiagonal": {
            "count": stats.count,
            "min": stats.smallest,
            "max": stats.largest,
            "mean": stats.mean,
            "std": stats.std,
        },
    }


def cyclic_report_to_dict(report: CyclicReport) -> dict:
    return {
        "is_cyclic": report.is_cyclic,
        "minimal_period": report.minimal_period,
        "eigenvalues": None
        if report.eigenvalues is None
        else [complex_pair(w) for w in report.eigenvalues],
        "diagonalizable": report.diagonalizable,
        "eigenvector_condition": report.eigenvector_condition,
        "distinctness": report.distinctness,
        "distinct_eigenvalues": report.distinct_eigenvalues,
        "all_roots_of_unity": report.all_roots_of_unity,
        "primitive_root_present": report.primitive_root_present,
        "seed_coordinates_nonzero": report.seed_coordinates_nonzero,
        "is_cyclic_frame": report.is_cyclic_frame,
        "failing_clauses": list(report.failing_clauses),
    }


def window_report_to_dict(report: WindowReport) -> dict:
    return {
        "windows": list(report.windows),
        "operator_surjective": report.operator_surjective,
    }


def norm_bounds_to_dict(report: NormBoundReport) -> dict:
    return {
        "operator_norm": report.operator_norm,
        "inverse_norm": report.inverse_norm,
        "lower": report.lower,
        "upper": report.upper,
        "ratio": report.ratio,
        "operator_ok": report.operator_ok,
        "inverse_ok": report.inverse_ok,
        "holds": report.holds,
    }


def _erasure_record_to_dict(record: ErasureRecord) -> dict:
    return {
        "erased_indices": [k + 1 for k in record.erased],
        "survivor_is_frame": record.survivor_is_frame,
        "survivor_bounds": bounds_to_dict(record.survivor_bounds),
        "error_norm": record.error_norm,
    }


def erasure_report_to_dict(report: ErasureReport) -> dict:
    return {
        "max_erasures": report.max_erasures,
        "tightened": report.tightened,
        "records": [_erasure_record_to_dict(r) for r in report.records],
        "worst_case_by_size": {
            str(m): _erasure_record_to_dict(report.worst_case[m])
            for m in sorted(report.worst_case)
        },
    }
