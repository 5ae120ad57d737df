"""Exact and high-precision arithmetic used throughout the package."""

from .cyclotomic import Cyclotomic, euler_phi, sqrt_integer
from .numbers import GaussianRational, I, PiLaurent, PiMultiple, bernoulli
from .numfield import QQ, NumberField, NumberFieldElement
from .series import (
    BivariateQExpansion,
    Bounded,
    QExpansion,
    complex_eval,
    mul_dense_int,
    pow_dense_int,
    series_invert,
    series_mul,
)

__all__ = [
    "BivariateQExpansion",
    "Bounded",
    "Cyclotomic",
    "GaussianRational",
    "I",
    "NumberField",
    "NumberFieldElement",
    "PiLaurent",
    "PiMultiple",
    "QExpansion",
    "QQ",
    "bernoulli",
    "complex_eval",
    "euler_phi",
    "mul_dense_int",
    "pow_dense_int",
    "series_invert",
    "series_mul",
    "sqrt_integer",
]
