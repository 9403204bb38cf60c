"""Coefficient problems for starlike functions associated with the balloon kernel.

``B(z) = 1 / (1 - log(1 + z))``. The package provides a truncated power-series
engine, Carathéodory / Schwarz parameterizations, the class members and their
coefficient functionals, the disk-maximum used in the Hankel estimates, and a
grid-based certifier for the sharp bounds.
"""

from .balloon import (
    TIP,
    ClassMember,
    CoefficientSet,
    Region,
    boundary_curve,
    extremal,
    kernel_eval,
    kernel_series,
    member_from_schwarz,
    membership,
)
from .diskmax import YInput, YResult, y_exact, y_oracle
from .errors import BalloonError
from .functionals import FUNCTIONALS, FunctionalId, evaluate, functional_id
from .series import PowerSeries
from .verifier import BoundCheck, SweepConfig, full_report, sweep_bound

__version__ = "0.1.0"

__all__ = [
    "TIP",
    "BalloonError",
    "BoundCheck",
    "ClassMember",
    "CoefficientSet",
    "FUNCTIONALS",
    "FunctionalId",
    "PowerSeries",
    "Region",
    "SweepConfig",
    "YInput",
    "YResult",
    "boundary_curve",
    "evaluate",
    "extremal",
    "full_report",
    "functional_id",
    "kernel_eval",
    "kernel_series",
    "member_from_schwarz",
    "membership",
    "sweep_bound",
    "y_exact",
    "y_oracle",
]
