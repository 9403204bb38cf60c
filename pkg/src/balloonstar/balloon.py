"""The balloon kernel ``B(z) = 1 / (1 - log(1 + z))`` and its starlike class.

A function ``f(z) = z + a2 z^2 + ...`` belongs to the class when
``z f'(z) / f(z) = B(w(z))`` for a Schwarz function ``w``; equivalently
``f(z) = z exp(int_0^z (B(w(t)) - 1) / t dt)``. This module builds class members
from Schwarz series, maps Carathéodory / Schwarz coefficients to ``a2..a5``,
derives the logarithmic coefficients of ``f`` and of ``f^{-1}``, and samples the
boundary of the image domain ``B(D)``.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from . import series as ps
from .caratheodory import CaratheodoryPrefix, SchwarzPrefix
from .errors import OriginExcluded, SchwarzViolation
from .export import dumps_csv, dumps_json
from .series import PowerSeries

DEFAULT_ORDER = 12
MEMBER_TOL = 1e-10
BOUNDARY_TOL = 1e-10
CUSP_MARGIN = 1e-2

#: right-most point of the domain, B(1)
TIP = 1.0 / (1.0 - math.log(2.0))


@dataclass(frozen=True)
class BalloonKernel:
    series: PowerSeries

    def __post_init__(self):
        if self.series[0] != 1 or not self.series[1].real > 0:
            raise ValueError("kernel must satisfy B(0) = 1 and B'(0) > 0")


def kernel_series(order: int = DEFAULT_ORDER) -> BalloonKernel:
    if order < 1:
        raise ValueError("order must be >= 1")
    z = PowerSeries.variable(order)
    s = 1 / (1 - ps.log(1 + z))
    # exact by construction; remove rounding noise in the two normalization terms
    c = s.coeffs.copy()
    c[0], c[1] = 1, 1
    return BalloonKernel(PowerSeries(c))


def kernel_eval(z):
    """Pointwise ``B(z)``; the principal log branch requires ``Re(1 + z) > 0``."""
    z = np.asarray(z, dtype=complex)
    if np.any((1 + z).real <= 0):
        raise ValueError("1 + z must lie in the right half-plane")
    out = 1 / (1 - np.log1p(z))
    return out if out.ndim else complex(out)


# --- coefficients -----------------------------------------------------------------


@dataclass(frozen=True)
class CoefficientSet:
    """Initial, logarithmic and inverse-logarithmic coefficients of one member.

    Fields may be numpy arrays, in which case every functional evaluates
    elementwise.
    """

    a2: Any
    a3: Any
    a4: Any
    a5: Any
    gamma1: Any
    gamma2: Any
    gamma3: Any
    Gamma1: Any
    Gamma2: Any
    Gamma3: Any

    def a_stream(self) -> dict:
        return {1: 1.0, 2: self.a2, 3: self.a3, 4: self.a4, 5: self.a5}

    def gamma_stream(self) -> dict:
        return {1: self.gamma1, 2: self.gamma2, 3: self.gamma3}

    def Gamma_stream(self) -> dict:
        return {1: self.Gamma1, 2: self.Gamma2, 3: self.Gamma3}

    def rotated(self, theta: float) -> "CoefficientSet":
        """Coefficients of ``e^{-i theta} f(e^{i theta} z)``."""
        r = np.exp(1j * theta)
        return full_coefficient_set(self.a2 * r, self.a3 * r**2, self.a4 * r**3, self.a5 * r**4)


def full_coefficient_set(a2, a3, a4, a5=0.0) -> CoefficientSet:
    return CoefficientSet(
        a2=a2,
        a3=a3,
        a4=a4,
        a5=a5,
        gamma1=a2 / 2,
        gamma2=(a3 - a2**2 / 2) / 2,
        gamma3=(a4 - a2 * a3 + a2**3 / 3) / 2,
        Gamma1=-a2 / 2,
        Gamma2=-(a3 - 1.5 * a2**2) / 2,
        Gamma3=-(a4 - 4 * a2 * a3 + (10 / 3) * a2**3) / 2,
    )


def coeffs_from_p(p) -> tuple:
    """``(a2, a3, a4, a5)`` from Carathéodory coefficients (``a5`` needs ``p4``).

    ``p`` is a :class:`CaratheodoryPrefix` or a tuple ``(p1, p2, p3[, p4])`` of
    scalars or arrays.
    """
    if isinstance(p, CaratheodoryPrefix):
        p = p.as_tuple()
    p1, p2, p3 = p[:3]
    p4 = p[3] if len(p) > 3 else None
    a2 = p1 / 2
    a3 = (p1**2 + 4 * p2) / 16
    a4 = (p1**3 + 12 * p1 * p2 + 48 * p3) / 288
    a5 = None
    if p4 is not None:
        a5 = -(7 * p1**4 - 24 * p1**2 * p2 - 96 * p1 * p3 - 576 * p4) / 4608
    return a2, a3, a4, a5


def coeffs_from_b(b, check: bool = True) -> tuple:
    """``(a2, a3, a4, a5)`` from Schwarz coefficients (``a5`` needs ``b4``).

    ``b`` is a :class:`SchwarzPrefix` (validated against the Schwarz coefficient
    inequalities unless ``check`` is false) or a tuple of scalars or arrays.
    """
    if isinstance(b, SchwarzPrefix):
        if check and not b.satisfies_coefficient_bounds(MEMBER_TOL):
            raise SchwarzViolation(f"{b} violates the Schwarz coefficient bounds")
        b = (b.b1, b.b2, b.b3, b.b4)
    b1, b2, b3 = b[:3]
    b4 = b[3] if len(b) > 3 else None
    a2 = b1
    a3 = 3 * b1**2 / 4 + b2 / 2
    a4 = 19 * b1**3 / 36 + 5 * b1 * b2 / 6 + b3 / 3
    a5 = None
    if b4 is not None:
        a5 = 101 * b1**4 / 288 + 23 * b1**2 * b2 / 24 + 7 * b1 * b3 / 12 + b2**2 / 4 + b4 / 4
    return a2, a3, a4, a5


# --- class members ----------------------------------------------------------------


@dataclass(frozen=True)
class ClassMember:
    f: PowerSeries
    w: PowerSeries
    provenance: str = ""

    def a(self, n: int) -> complex:
        return complex(self.f[n]) if n <= self.f.order else 0j

    def coefficient_set(self) -> CoefficientSet:
        return full_coefficient_set(self.a(2), self.a(3), self.a(4), self.a(5))

    def starlike_quotient(self) -> PowerSeries:
        """Series of ``z f'(z) / f(z)``."""
        h = self.f.shift_down()
        return 1 + ps.div(ps.derivative(h), h).shift_up().truncate(h.order)


def member_from_schwarz(
    w: PowerSeries, order: int = DEFAULT_ORDER, provenance: str = "", check: bool = True
) -> ClassMember:
    """Class member with ``z f'/f = B(w)``, to truncation ``order``."""
    if w[0] != 0:
        raise SchwarzViolation("a Schwarz function must vanish at 0")
    if w.order < order:
        w = w.truncate(order)
    b = [complex(w[k]) if k <= w.order else 0j for k in (1, 2, 3)]
    if check and not SchwarzPrefix(*b).satisfies_coefficient_bounds(MEMBER_TOL):
        raise SchwarzViolation(f"coefficients {b} violate the Schwarz coefficient bounds")
    w = w.truncate(order)
    bw = ps.compose(kernel_series(order).series, w)
    integrand = (bw - 1).shift_down()
    h = ps.exp(ps.integrate(integrand)).truncate(order - 1)
    f = h.shift_up()
    member = ClassMember(f=f, w=w, provenance=provenance)
    resid = member.starlike_quotient().coeffs - bw.coeffs[: order]
    if np.max(np.abs(resid)) > MEMBER_TOL:
        raise ArithmeticError(f"z f'/f residual {np.max(np.abs(resid))} exceeds tolerance")
    return member


EXTREMAL_SCHWARZ = {"f1": (1, 1), "f2": (2, 1), "f3": (1, 1j)}


def extremal(label: str, order: int = DEFAULT_ORDER) -> ClassMember:
    """``f1``: ``w = z``; ``f2``: ``w = z^2``; ``f3``: ``w = i z``."""
    try:
        power, scale = EXTREMAL_SCHWARZ[label]
    except KeyError:
        raise ValueError(f"unknown extremal function {label!r}; use f1, f2 or f3") from None
    c = np.zeros(order + 1, dtype=complex)
    if power <= order:
        c[power] = scale
    return member_from_schwarz(PowerSeries(c), order, provenance=label)


def log_coefficients_series(f: PowerSeries, count: int = 3) -> np.ndarray:
    """``gamma_1..gamma_count`` from ``log(f(z)/z) / 2`` computed as a series."""
    lg = ps.log(f.shift_down())
    return lg.coeffs[1 : count + 1] / 2


def inverse_log_coefficients_series(f: PowerSeries, count: int = 3) -> np.ndarray:
    """``Gamma_1..Gamma_count`` from ``log(F(w)/w) / 2`` with ``F = f^{-1}``."""
    inv = ps.revert(f)
    return log_coefficients_series(inv, count)


# --- domain geometry --------------------------------------------------------------


class Region(enum.Enum):
    INSIDE = "inside"
    BOUNDARY = "boundary"
    OUTSIDE = "outside"


def membership_value(w) -> np.ndarray | float:
    """``|exp(1 - 1/w) - 1|``; less than 1 exactly on the domain."""
    w = np.asarray(w, dtype=complex)
    if np.any(w == 0):
        raise OriginExcluded("w = 0 is excluded from the domain")
    v = np.abs(np.exp(1 - 1 / w) - 1)
    return v if v.ndim else float(v)


def membership(w: complex, tol: float = BOUNDARY_TOL) -> Region:
    v = membership_value(w)
    if abs(v - 1) <= tol:
        return Region.BOUNDARY
    return Region.INSIDE if v < 1 else Region.OUTSIDE


@dataclass(frozen=True)
class BoundaryPoint:
    theta: float
    w: complex


def boundary_w(theta):
    """``w(theta) = 1 / (1 - log(2 cos(theta/2)) - i theta/2)`` = B(e^{i theta})."""
    theta = np.asarray(theta, dtype=float)
    out = 1 / (1 - np.log(2 * np.cos(theta / 2)) - 0.5j * theta)
    return out if out.ndim else complex(out)


def boundary_curve(samples: int, cusp_margin: float = CUSP_MARGIN) -> list[BoundaryPoint]:
    if samples < 2:
        raise ValueError("need at least 2 samples")
    theta = np.linspace(-np.pi + cusp_margin, np.pi - cusp_margin, samples)
    # exact conjugate symmetry: mirror the negative half
    theta = np.where(np.arange(samples) >= samples - samples // 2, -theta[::-1], theta)
    w = boundary_w(theta)
    return [BoundaryPoint(float(t), complex(v)) for t, v in zip(theta, w)]


def boundary_csv(points: list[BoundaryPoint]) -> str:
    return dumps_csv(["theta", "re_w", "im_w"], [(p.theta, p.w.real, p.w.imag) for p in points])


def boundary_json(points: list[BoundaryPoint]) -> str:
    return dumps_json([{"theta": p.theta, "re_w": p.w.real, "im_w": p.w.imag} for p in points])


@dataclass(frozen=True)
class StarlikenessReport:
    verdict: bool | None
    samples: int
    min_increment: float
    total_winding: float


def starlikeness_probe(samples: int = 4096, cusp_margin: float = CUSP_MARGIN) -> StarlikenessReport:
    """Discrete check that ``arg(w(theta) - 1)`` increases along the boundary.

    Fewer than 16 samples gives an indeterminate verdict (``None``).
    """
    theta = np.linspace(-np.pi + cusp_margin, np.pi - cusp_margin, max(samples, 2))
    arg = np.unwrap(np.angle(boundary_w(theta) - 1))
    inc = np.diff(arg)
    verdict = None if samples < 16 else bool(np.all(inc > 0))
    return StarlikenessReport(verdict, samples, float(inc.min()), float(arg[-1] - arg[0]))


def cusp_circle_deviation(theta):
    """Distance of ``w(theta)`` from the circle ``|w - 1/2| = 1/2``."""
    return np.abs(np.abs(boundary_w(theta) - 0.5) - 0.5)


QUOTED_LEFT_EXTENT = complex(-0.181, 0.678)


def leftmost_point(samples: int = 4096, cusp_margin: float = CUSP_MARGIN) -> dict:
    """Sampled boundary point of least real part, compared with the quoted extent.

    ``Re(1/w) = 1 - log(2 cos(theta/2)) > 0`` on the whole boundary, so the real
    part stays positive and decreases toward the cusp at the origin.
    """
    pts = boundary_curve(samples, cusp_margin)
    upper = [p for p in pts if p.theta >= 0]
    best = min(upper, key=lambda p: (p.w.real, p.theta))
    quoted = QUOTED_LEFT_EXTENT
    return {
        "theta": best.theta,
        "w": best.w,
        "quoted": quoted,
        "deviation": abs(best.w - quoted),
        "min_re_over_samples": min(p.w.real for p in pts),
    }
