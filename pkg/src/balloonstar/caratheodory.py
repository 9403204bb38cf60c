"""Carathéodory functions and Schwarz functions from disk parameters.

Three routes to a member of the Carathéodory class (``p(0) = 1``, ``Re p > 0``):

* the coefficient parameterization ``p1, p2, p3`` in terms of three points of
  the closed unit disk (:func:`p_coefficients`);
* the two closed-form extremal families (:func:`p_series_extremal_first`,
  :func:`p_series_extremal_second`);
* an explicit Schwarz function built by the Schur recursion
  ``w(z) = z * omega_0(z)``, ``omega_k = (s_k + z omega_{k+1}) / (1 + conj(s_k) z omega_{k+1})``
  (:func:`schwarz_from_schur`), mapped through ``p = (1 + w) / (1 - w)``.

The first three Schur parameters of the last route coincide with the disk
parameters of the first, so the routes agree on ``p1..p3``; the Schur route is
the one used whenever ``p4`` / ``b4`` is needed.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import ParamOutOfDisk
from .series import PowerSeries, div

DISK_TOL = 1e-12


def _check_disk(*values: complex) -> None:
    for v in values:
        if abs(v) > 1 + DISK_TOL:
            raise ParamOutOfDisk(f"|{v}| = {abs(v)} exceeds 1")


@dataclass(frozen=True)
class SchwarzParams:
    zeta1: complex = 0j
    zeta2: complex = 0j
    zeta3: complex = 0j

    def __post_init__(self):
        _check_disk(self.zeta1, self.zeta2, self.zeta3)


@dataclass(frozen=True)
class CaratheodoryPrefix:
    p1: complex
    p2: complex
    p3: complex
    p4: complex | None = None

    def as_tuple(self) -> tuple:
        return (self.p1, self.p2, self.p3) + (() if self.p4 is None else (self.p4,))


@dataclass(frozen=True)
class SchwarzPrefix:
    b1: complex
    b2: complex
    b3: complex
    b4: complex | None = None

    def coefficient_slack(self) -> tuple[float, float, float]:
        """Right-hand side minus left-hand side of the three coefficient bounds."""
        r1, r2 = abs(self.b1), abs(self.b2)
        return (
            1 - r1,
            1 - r1**2 - r2,
            1 - r1**2 - r2**2 / (1 + r1) - abs(self.b3),
        )

    def satisfies_coefficient_bounds(self, tol: float = 1e-10) -> bool:
        return all(s >= -tol for s in self.coefficient_slack())


def p_coefficients(z1, z2, z3):
    """``(p1, p2, p3)`` from disk parameters; works elementwise on arrays.

    With ``t = 1 - |z1|**2``::

        p1 = 2 z1
        p2 = 2 z1**2 + 2 t z2
        p3 = 2 z1**3 + 4 t z1 z2 - 2 t conj(z1) z2**2 + 2 t (1 - |z2|**2) z3
    """
    t = 1 - np.abs(z1) ** 2
    p1 = 2 * z1
    p2 = 2 * z1**2 + 2 * t * z2
    p3 = (
        2 * z1**3
        + 4 * t * z1 * z2
        - 2 * t * np.conj(z1) * z2**2
        + 2 * t * (1 - np.abs(z2) ** 2) * z3
    )
    return p1, p2, p3


def p_from_params(s: SchwarzParams) -> CaratheodoryPrefix:
    p1, p2, p3 = p_coefficients(complex(s.zeta1), complex(s.zeta2), complex(s.zeta3))
    return CaratheodoryPrefix(complex(p1), complex(p2), complex(p3))


def p_series_extremal_first(zeta1: complex, order: int = 12) -> PowerSeries:
    """``(1 + zeta1 z) / (1 - zeta1 z)`` for ``|zeta1| = 1``."""
    if abs(abs(zeta1) - 1) > DISK_TOL:
        raise ParamOutOfDisk(f"need |zeta1| = 1, got {abs(zeta1)}")
    k = np.arange(order + 1)
    c = 2 * complex(zeta1) ** k
    c[0] = 1
    return PowerSeries(c)


def p_series_extremal_second(zeta1: complex, zeta2: complex, order: int = 12) -> PowerSeries:
    """The unique Carathéodory function with ``|zeta1| < 1`` and ``|zeta2| = 1``."""
    if abs(zeta1) >= 1 or abs(abs(zeta2) - 1) > DISK_TOL:
        raise ParamOutOfDisk("need |zeta1| < 1 and |zeta2| = 1")
    cz = np.conj(zeta1) * zeta2
    num = PowerSeries([1, cz + zeta1, zeta2], order)
    den = PowerSeries([1, cz - zeta1, -zeta2], order)
    return div(num, den)


def schwarz_from_p(p: PowerSeries) -> PowerSeries:
    """``w = (p - 1) / (p + 1)``; the constant term is forced to exactly 0."""
    if abs(p[0] - 1) > 1e-12:
        raise ValueError(f"p(0) must be 1, got {p[0]}")
    w = div(p - 1, p + 1)
    return PowerSeries(np.concatenate([[0], w.coeffs[1:]]))


def p_from_schwarz(w: PowerSeries) -> PowerSeries:
    return div(1 + w, 1 - w)


def schwarz_from_schur(params: Sequence[complex], order: int = 12) -> PowerSeries:
    """Series of the Schwarz function with Schur parameters ``params``.

    The innermost function is the constant ``params[-1]``; parameters after one of
    unit modulus have no effect.
    """
    params = [complex(s) for s in params] or [0j]
    _check_disk(*params)
    omega = PowerSeries.constant(params[-1], order - 1)
    for s in reversed(params[:-1]):
        u = omega.shift_up().truncate(order - 1)
        omega = div(s + u, 1 + np.conj(s) * u)
    return omega.shift_up()


def schwarz_eval(params: Sequence[complex], z):
    """Evaluate the Schur-parameter Schwarz function at points ``z``."""
    params = [complex(s) for s in params] or [0j]
    z = np.asarray(z, dtype=complex)
    omega = np.full_like(z, params[-1])
    for s in reversed(params[:-1]):
        u = z * omega
        omega = (s + u) / (1 + np.conj(s) * u)
    return z * omega


def schur_prefix(s0, s1, s2, s3):
    """``(b1, b2, b3, b4)`` of the Schur-parameter Schwarz function, elementwise.

    Uses ``omega = s + (1 - |s|^2) (u - conj(s) u^2 + conj(s)^2 u^3 - ...)`` with
    ``u = z * omega_next`` at each level.
    """

    def level(s, c0, c1, c2):
        # omega_next = c0 + c1 z + c2 z^2 ; u = z * omega_next
        t = 1 - np.abs(s) ** 2
        sb = np.conj(s)
        return (
            s,
            t * c0,
            t * (c1 - sb * c0**2),
            t * (c2 - 2 * sb * c0 * c1 + sb**2 * c0**3),
        )

    zero = np.zeros_like(np.asarray(s3, dtype=complex))
    w3 = (s3, zero, zero, zero)
    w2 = level(s2, *w3[:3])
    w1 = level(s1, *w2[:3])
    w0 = level(s0, *w1[:3])
    return w0


def p_series_from_params(s: SchwarzParams, order: int = 12, zeta4: complex = 0j) -> PowerSeries:
    """Full Carathéodory series whose first three coefficients match :func:`p_from_params`."""
    w = schwarz_from_schur([s.zeta1, s.zeta2, s.zeta3, zeta4], order)
    return p_from_schwarz(w)


def check_lemma3(p: CaratheodoryPrefix, rho: float = 1.0, mu: complex = 1.0, tol: float = 1e-12) -> dict:
    """Evaluate the Carathéodory coefficient inequalities on a prefix.

    Returns a mapping from inequality label to ``(lhs, rhs, holds)``. The two-index
    families are evaluated for every index combination available in the prefix.
    """
    if not 0 <= rho <= 1:
        raise ValueError("rho must lie in [0, 1]")
    coeffs = {k + 1: v for k, v in enumerate(p.as_tuple())}
    out = {}

    def record(label, lhs, rhs):
        out[label] = (lhs, rhs, lhs <= rhs + tol)

    for t, pt in coeffs.items():
        record(f"|p{t}|<=2", abs(pt), 2.0)
    for t in coeffs:
        for k in coeffs:
            if t + 2 * k in coeffs:
                lhs = abs(coeffs[t + 2 * k] - rho * coeffs[t] * coeffs[k] ** 2)
                record(f"|p{t + 2 * k}-rho*p{t}*p{k}^2|", lhs, 2 * (1 + 2 * rho))
    p1, p2 = coeffs[1], coeffs[2]
    record("|p2-p1^2/2|", abs(p2 - p1**2 / 2), 2 - abs(p1) ** 2 / 2)
    for n in coeffs:
        for k in coeffs:
            if n <= k and n + k in coeffs:
                lhs = abs(coeffs[n + k] - mu * coeffs[n] * coeffs[k])
                record(f"|p{n + k}-mu*p{n}*p{k}|", lhs, 2 * max(1.0, abs(2 * mu - 1)))
    return out
