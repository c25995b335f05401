"""Invariant curves of degree one of Abel equations x' = A x^3 + B x^2 + C x.

Coefficients live in Q[t], Q(i)[t] or the real trigonometric ring
Q[cos t, sin t]. All algebra is exact; :mod:`abelcurves.numeric` adds
floating-point cross-checks.
"""

from .classify import BoundReport, audit, classify_bounds, classify_equation
from .curves import InvariantCurve, cofactor_of, find_invariant_curves, verify_invariance
from .darboux import DarbouxCertificate, cofactor_dependence, first_integral, integrability_threshold
from .equation import AbelEquation, load_equation, save_equation
from .errors import (AbelError, InternalInconsistency, NotInvariantError, OutOfScopeError,
                     ParseError, PreconditionError)
from .families import gen_pair, gen_proportional, gen_single, random_instance
from .frontend import POLY_GAUSSIAN, POLY_RATIONAL, TRIG, parse_expression, render
from .poly import Poly
from .report import analyze
from .scalars import Gauss, QuadraticSurd
from .trig import TrigPoly

__all__ = [
    "AbelEquation", "AbelError", "BoundReport", "DarbouxCertificate", "Gauss", "InternalInconsistency",
    "InvariantCurve", "NotInvariantError", "OutOfScopeError", "ParseError", "Poly", "POLY_GAUSSIAN",
    "POLY_RATIONAL", "PreconditionError", "QuadraticSurd", "TRIG", "TrigPoly", "analyze", "audit",
    "classify_bounds", "classify_equation", "cofactor_dependence", "cofactor_of",
    "find_invariant_curves", "first_integral", "gen_pair", "gen_proportional", "gen_single",
    "integrability_threshold", "load_equation", "parse_expression", "random_instance", "render",
    "save_equation", "verify_invariance",
]
