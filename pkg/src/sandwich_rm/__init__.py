"""Sandwiched and generalized Reed-Muller codes over GF(q)."""

from __future__ import annotations

from .codes import Code, build_code, dual, reed_muller, sandwich
from .exponents import ExponentSpace, exponent_space
from .field import FieldCtx, build_field, field_for_q
from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Code",
    "ExponentSpace",
    "FieldCtx",
    "__version__",
    "build_code",
    "build_field",
    "dual",
    "exponent_space",
    "field_for_q",
    "reed_muller",
    "sandwich",
]
