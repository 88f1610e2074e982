"""Quaternionic spinors, spin-decorated horospheres and lambda lengths in hyperbolic 4-space."""

from .clifford import INF, CliffordMatrix, Mat2, act_spinor, compose, is_parabolic, mobius_apply, pdet
from .errors import (
    DegenerateConfigurationError,
    DomainError,
    HoroSpinorError,
    NotASpinorError,
    NotCliffordError,
    NumericalDriftError,
    UndefinedQuasideterminantError,
)
from .horosphere import boundary_to_uhs, decorated_horosphere_from_spinor, phi2
from .lambda_length import lambda_geometric, lambda_pdet, ptolemy_residual, reduce_to_standard, triangle_holonomy
from .minkowski_flags import act_minkowski, dphi1, minkowski_inner, multiflag_from_spinor, phi1
from .quasiplucker import quasi_plucker, quasidet_2x2
from .quaternion import Quaternion
from .spinor import Spinor, bracket, random_spinor

__version__ = "0.1.0"

__all__ = [
    "CliffordMatrix",
    "DegenerateConfigurationError",
    "DomainError",
    "HoroSpinorError",
    "INF",
    "Mat2",
    "NotASpinorError",
    "NotCliffordError",
    "NumericalDriftError",
    "Quaternion",
    "Spinor",
    "UndefinedQuasideterminantError",
    "act_minkowski",
    "act_spinor",
    "boundary_to_uhs",
    "bracket",
    "compose",
    "decorated_horosphere_from_spinor",
    "dphi1",
    "is_parabolic",
    "lambda_geometric",
    "lambda_pdet",
    "minkowski_inner",
    "mobius_apply",
    "multiflag_from_spinor",
    "pdet",
    "phi1",
    "phi2",
    "ptolemy_residual",
    "quasi_plucker",
    "quasidet_2x2",
    "random_spinor",
    "reduce_to_standard",
    "triangle_holonomy",
]
