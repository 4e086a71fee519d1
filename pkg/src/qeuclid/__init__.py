"""Exact M1-Euclidean division in real quadratic fields Q(sqrt(m)).

The division algorithm rests on a covering of the square [0,1/2]^2 by
hyperbolic regions; this package builds such coverings, stores them as
certificates and checks them with exact arithmetic.
"""

from .covering import (Certificate, cover_set, load_certificate, parse_certificate, serialize_certificate,
                       shipped_certificate, verify)
from .division import DivisionResult, divide, gcd, round_half
from .exact import ExactNumber, sign_of
from .field import SUPPORTED, FieldData, FieldElement, RingElement, builtin_field
from .hyperbola import BranchSpec, Level, curve_intersections, dominates, eval_at

__version__ = "0.1.0"

__all__ = [
    "BranchSpec", "Certificate", "DivisionResult", "ExactNumber", "FieldData", "FieldElement", "Level",
    "RingElement", "SUPPORTED", "builtin_field", "cover_set", "curve_intersections", "divide", "dominates",
    "eval_at", "gcd", "load_certificate", "parse_certificate", "round_half", "serialize_certificate",
    "shipped_certificate", "sign_of", "verify",
]
