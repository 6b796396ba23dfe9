"""Full-analysis reports and deterministic JSON emission.

Reports are plain dicts with a fixed key order.  Floats are rendered with
17 significant digits and rationals as exact "num/den" strings, so a fixed
(input, seed, version) triple always serializes to identical bytes.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from . import __version__
from .asymptotics import (
    BallCertificate,
    BoundedRegionLikely,
    cmc_obstruction_audit,
    compactness_bound,
    leading_form_verdict,
)
from .calculus import homogeneous_parts
from .curvature import CurvatureReport, is_cmc
from .parser import VarConvention, format_poly
from .polynomial import Polynomial
from .quadrics import QuadricClass, quadric_regularity


class InternalValidationError(RuntimeError):
    """A supposedly-exact artifact failed its recheck (reported as exit 3)."""


def fmt_float(x: float) -> str:
    return format(float(x), ".17g")


def _ser(value):
    """Recursive JSON-ready conversion (Fractions to strings, floats tagged)."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, float):
        return _RawFloat(value)
    if isinstance(value, (np.floating,)):
        return _RawFloat(float(value))
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, np.ndarray):
        return [_ser(v) for v in value.tolist()]
    if isinstance(value, (list, tuple)):
        return [_ser(v) for v in value]
    if isinstance(value, dict):
        return {k: _ser(v) for k, v in value.items()}
    return value


class _RawFloat:
    __slots__ = ("value",)

    def __init__(self, value: float):
        self.value = value


def _emit(obj, out: list[str], indent: int) -> None:
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{\n")
        for i, (key, value) in enumerate(obj.items()):
            out.append(f'{pad}  "{key}": ')
            _emit(value, out, indent + 1)
            out.append(",\n" if i < len(obj) - 1 else "\n")
        out.append(pad + "}")
    elif isinstance(obj, list):
        if not obj:
            out.append("[]")
            return
        out.append("[\n")
        for i, value in enumerate(obj):
            out.append(pad + "  ")
            _emit(value, out, indent + 1)
            out.append(",\n" if i < len(obj) - 1 else "\n")
        out.append(pad + "]")
    elif isinstance(obj, _RawFloat):
        # JSON has no NaN/inf literals; absent numerics become null
        if math.isfinite(obj.value):
            out.append(fmt_float(obj.value))
        else:
            out.append("null")
    elif isinstance(obj, bool):
        out.append("true" if obj else "false")
    elif isinstance(obj, int):
        out.append(str(obj))
    elif obj is None:
        out.append("null")
    elif isinstance(obj, str):
        escaped = (
            obj.replace("\\", "\\\\")
            .replace('"', '\\"')
            .replace("\n", "\\n")
            .replace("\t", "\\t")
        )
        out.append(f'"{escaped}"')
    else:
        raise TypeError(f"cannot serialize {type(obj)!r}")


def to_json(report) -> str:
    """Deterministic pretty JSON with fixed float/rational formatting."""
    out: list[str] = []
    _emit(_ser(report), out, 0)
    return "".join(out)


def curvature_report_dict(report: CurvatureReport, conv: VarConvention) -> dict:
    return {
        "verdict": report.verdict,
        "c_estimate": report.c_estimate,
        "c_exact": str(report.c_exact) if report.c_exact is not None else None,
        "tolerance": report.tolerance,
        "max_deviation": report.max_deviation,
        "certificate": (
            format_poly(report.certificate, conv) if report.certificate is not None else None
        ),
        "n_requested": report.n_requested,
        "n_samples": len(report.samples),
        "n_filtered": report.n_filtered,
        "note": report.note,
        "samples": [
            {
                "point": list(s.point),
                "h": s.h,
                "residual": s.residual,
                "gradient_norm": s.gradient_norm,
            }
            for s in report.samples
        ],
    }


def quadric_class_dict(cls: QuadricClass) -> dict:
    return {
        "kind": cls.kind,
        "description": cls.description,
        "center": [str(c) for c in cls.center] if cls.center is not None else None,
        "radius_sq": str(cls.radius_sq) if cls.radius_sq is not None else None,
        "k": cls.k,
        "scale": str(cls.scale) if cls.scale is not None else None,
        "projector": (
            [[str(x) for x in row] for row in cls.projector]
            if cls.projector is not None
            else None
        ),
        "mean_curvature_sq": (
            str(cls.mean_curvature_sq) if cls.mean_curvature_sq is not None else None
        ),
        "predicted_mean_curvature": cls.predicted_mean_curvature(),
    }


def ball_result_dict(result: BallCertificate | BoundedRegionLikely) -> dict:
    if isinstance(result, BoundedRegionLikely):
        return {
            "result": "bounded_region_likely",
            "requested_sign": result.requested_sign,
            "leading_form": sign_verdict_dict(result.leading_verdict),
        }
    return {
        "result": "ball",
        "ball": {
            "center": list(result.ball.center),
            "radius": result.ball.radius,
            "sign": result.ball.sign,
        },
        "cone": {
            "apex_direction": list(result.cone.w),
            "cos_theta": result.cone.cos_theta,
            "t0": result.cone.t0,
            "margin": result.cone.margin,
            "homogeneous_degree": result.cone.homogeneous_degree,
            "heuristic": result.cone.heuristic,
        },
        "validation": {
            "n_samples": result.n_validation_samples,
            "min_abs_value": result.min_abs_value,
        },
    }


def sign_verdict_dict(verdict) -> dict:
    return {
        "kind": verdict.kind,
        "evidence": verdict.evidence,
        "witness_pos": list(verdict.witness_pos) if verdict.witness_pos else None,
        "witness_neg": list(verdict.witness_neg) if verdict.witness_neg else None,
        "n_samples": verdict.n_samples,
        "n_descents": verdict.n_descents,
    }


def _regularity_dict(p: Polynomial, report: CurvatureReport) -> dict:
    if p.degree is not None and p.degree <= 2:
        reg = quadric_regularity(p)
        return {
            "method": "exact",
            "status": reg.status,
            "witness": [str(c) for c in reg.witness] if reg.witness else None,
        }
    if report.samples:
        min_grad = min(s.gradient_norm for s in report.samples)
        status = "regular_at_samples"
    else:
        min_grad = None
        status = "no_samples"
    return {
        "method": "sampled",
        "status": status,
        "min_gradient_norm": min_grad,
        "n_filtered": report.n_filtered,
    }


def analyze(
    p: Polynomial,
    conv: VarConvention,
    text: str,
    seed: int = 0,
    sample_count: int = 200,
    tolerance: float = 1e-6,
) -> dict:
    """Run the full pipeline on one polynomial and assemble the report."""
    decomp = homogeneous_parts(p)
    verdict = leading_form_verdict(p, seed=seed)
    curvature = is_cmc(p, sample_count=sample_count, tolerance=tolerance, seed=seed)
    if curvature.certificate is not None:
        recheck = curvature.certificate * p
        from .curvature import cmc_defect

        if recheck != cmc_defect(p, curvature.c_exact):
            raise InternalValidationError("CMC certificate failed multiplication recheck")
    audit = cmc_obstruction_audit(p, curvature)
    quadric = None
    if p.degree <= 2:
        from .quadrics import classify_quadric

        quadric = quadric_class_dict(classify_quadric(p))
    bound = compactness_bound(p, seed=seed)
    return {
        "tool": {"name": "cmcsurf", "version": __version__},
        "seed": seed,
        "input": {
            "text": text,
            "dim": p.dim,
            "vars": conv.mode,
            "degree": p.degree,
            "canonical": format_poly(p, conv),
        },
        "homogeneous_degrees": [
            i for i, part in enumerate(decomp.parts) if not part.is_zero
        ],
        "regularity": _regularity_dict(p, curvature),
        "leading_form": sign_verdict_dict(verdict),
        "curvature": curvature_report_dict(curvature, conv),
        "quadric": quadric,
        "obstruction_audit": [
            {
                "severity": f.severity,
                "check": f.check,
                "detail": f.detail,
                "witness_pos": list(f.witness_pos) if f.witness_pos else None,
                "witness_neg": list(f.witness_neg) if f.witness_neg else None,
            }
            for f in audit
        ],
        "compactness_bound": (
            {
                "radius": bound.radius,
                "alpha_sampled": bound.alpha_sampled,
                "alpha_is_sampled_minimum": bound.alpha_is_sampled_minimum,
                "leading_evidence": bound.leading_verdict.evidence,
            }
            if bound is not None
            else None
        ),
    }
