"""cmcsurf: exact and numerical analysis of algebraic hypersurfaces.

The zero set M of a polynomial P is studied through exact rational
arithmetic (sparse polynomials, sphere-quadric division, quadric
classification) and seeded numerics (implicit mean curvature, CMC testing
with exact certificates, sign-region geometry of the leading form).
"""

__version__ = "0.1.0"

from .polynomial import (
    Polynomial,
    SphereQuadric,
    divide_by_sphere_quadric,
    exact_divide,
)
from .parser import ParseError, VarConvention, default_convention, format_poly, parse
from .calculus import (
    HomogeneousDecomposition,
    affine_substitute,
    gradient,
    hessian,
    homogeneous_parts,
    laplacian,
)
from .curvature import (
    CurvatureReport,
    NearestPointResult,
    NoConvergenceError,
    VarietyNotFoundError,
    VarietySample,
    cmc_defect,
    cmc_numerator,
    is_cmc,
    mean_curvature_at,
    mean_curvature_many,
    nearest_point,
    sample_variety,
)
from .asymptotics import (
    AuditFinding,
    Ball,
    BallCertificate,
    BallSearchError,
    BoundedRegionLikely,
    CompactnessBound,
    ConeCertificate,
    SignVerdict,
    cmc_obstruction_audit,
    compactness_bound,
    find_sign_ball,
    leading_form_verdict,
    tail_bound_t0,
)
from .quadrics import (
    QuadricClass,
    RegularityResult,
    classify_quadric,
    lineality_split,
    predicted_vs_numeric,
    quadric_regularity,
)
from .corpus import CORPUS, CorpusEntry, get_entry

__all__ = [
    "Polynomial",
    "SphereQuadric",
    "divide_by_sphere_quadric",
    "exact_divide",
    "ParseError",
    "VarConvention",
    "default_convention",
    "format_poly",
    "parse",
    "HomogeneousDecomposition",
    "affine_substitute",
    "gradient",
    "hessian",
    "homogeneous_parts",
    "laplacian",
    "CurvatureReport",
    "NearestPointResult",
    "NoConvergenceError",
    "VarietyNotFoundError",
    "VarietySample",
    "cmc_defect",
    "cmc_numerator",
    "is_cmc",
    "mean_curvature_at",
    "mean_curvature_many",
    "nearest_point",
    "sample_variety",
    "AuditFinding",
    "Ball",
    "BallCertificate",
    "BallSearchError",
    "BoundedRegionLikely",
    "CompactnessBound",
    "ConeCertificate",
    "SignVerdict",
    "cmc_obstruction_audit",
    "compactness_bound",
    "find_sign_ball",
    "leading_form_verdict",
    "tail_bound_t0",
    "QuadricClass",
    "RegularityResult",
    "classify_quadric",
    "lineality_split",
    "predicted_vs_numeric",
    "quadric_regularity",
    "CORPUS",
    "CorpusEntry",
    "get_entry",
]
