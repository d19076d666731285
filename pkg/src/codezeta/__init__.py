"""Zeta polynomials of linear codes and function fields over finite fields."""

from .code import (
    CodeProfile,
    LinearCode,
    WeightDistribution,
    build_code,
    code_profile,
    dual_code,
    macwilliams,
    weight_distribution,
)
from .duality import FsdReport, fsd_report
from .errors import CodeZetaError, ConsistencyError, ValidationError
from .field import FieldElement, FieldSpec, make_field
from .funcfield import FunctionFieldProfile, profile_from_lpoly, profile_from_point_counts
from .poly import RationalPoly
from .report import AnalysisReport, analyze_code
from .rha import QuadRingElement, RhaVerdict, rha_check
from .zeta import ZetaProfile, zeta_profile

__version__ = "0.1.0"
