"""Maximum of ``|A + B z + C z^2| + 1 - |z|^2`` over the closed unit disk.

:func:`y_exact` evaluates the closed-form case analysis for real ``A, B, C``;
:func:`y_oracle` is an independent brute-force maximum over a polar grid and
therefore a lower bound for the exact value.

The module also carries the ``(A, B, C)`` triples that arise when the second
Hankel determinants of the balloon class are reduced to this maximum problem
(one per determinant, as functions of the first disk parameter ``t`` in
``(0, 1)``), together with the scalar sign conditions that select the branch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

SEAM_TOL = 1e-12


@dataclass(frozen=True)
class YInput:
    A: float
    B: float
    C: float

    def __post_init__(self):
        if not all(np.all(np.isfinite(v)) for v in (self.A, self.B, self.C)):
            raise ValueError("A, B, C must be finite")


@dataclass(frozen=True)
class YResult:
    value: float
    branch: str


BRANCHES = (
    "case1:sum",  # |A| + |B| + |C|
    "case1:interior",  # 1 + |A| + B^2 / (4 (1 - |C|))
    "case2:interior-minus",  # 1 - |A| + B^2 / (4 (1 - |C|))
    "case2:interior-plus",  # 1 + |A| + B^2 / (4 (1 + |C|))
    "R:plus-minus",  # |A| + |B| - |C|
    "R:minus-plus",  # -|A| + |B| + |C|
    "R:sqrt",  # (|C| + |A|) sqrt(1 - B^2 / (4 A C))
)


def _cmp(x: float, y: float, tol: float) -> int:
    # purely relative band: tiny inputs must not all look like seams
    d = x - y
    if abs(d) <= tol * max(abs(x), abs(y)):
        return 0
    return 1 if d > 0 else -1


def _le(x, y, tol):
    """Tri-state ``x <= y``: 1 holds, 0 on the seam, -1 fails."""
    return 1 if _cmp(x, y, tol) < 0 else (0 if _cmp(x, y, tol) == 0 else -1)


def _lt(x, y, tol):
    return _le(x, y, tol)


def _all(*states):
    return min(states)


def y_exact(A, B: float | None = None, C: float | None = None, seam_tol: float = SEAM_TOL) -> YResult:
    """Closed-form ``Y(A, B, C)`` with the branch that produced it.

    Where a branch condition holds with equality (within ``seam_tol``) every
    adjacent formula is evaluated and the largest value is returned.
    """
    if isinstance(A, YInput):
        A, B, C = A.A, A.B, A.C
    A, B, C = float(A), float(B), float(C)
    a, b, c = abs(A), abs(B), abs(C)
    cands: list[tuple[float, str]] = []

    def add(label, value):
        cands.append((value, label))

    if A * C >= 0:
        s = _cmp(b, 2 * (1 - c), seam_tol)
        if s >= 0:
            add("case1:sum", a + b + c)
        if s <= 0 and c < 1:
            add("case1:interior", 1 + a + B * B / (4 * (1 - c)))
    else:
        K = -4 * A * (1 / C - C)  # -4 A C (C^-2 - 1) without squaring a tiny C
        first = _all(_le(K, B * B, seam_tol), _lt(b, 2 * (1 - c), seam_tol))
        second = _all(_lt(B * B, 4 * (1 + c) ** 2, seam_tol), _lt(B * B, K, seam_tol))
        if first >= 0 and c < 1:
            add("case2:interior-minus", 1 - a + B * B / (4 * (1 - c)))
        if second >= 0:
            add("case2:interior-plus", 1 + a + B * B / (4 * (1 + c)))
        if first < 1 and second < 1:
            r1 = _le(c * (b + 4 * a), a * b, seam_tol)
            r2 = _le(a * b, c * (b - 4 * a), seam_tol)
            if r1 >= 0:
                add("R:plus-minus", a + b - c)
            if r2 >= 0:
                add("R:minus-plus", -a + b + c)
            if r1 < 1 and r2 < 1:
                add("R:sqrt", (c + a) * math.sqrt(1 - B * B / (4 * A * C)))
    if not cands:  # pragma: no cover - every input reaches a branch
        raise AssertionError(f"no branch selected for {(A, B, C)}")
    order = {name: i for i, name in enumerate(BRANCHES)}
    value, label = max(cands, key=lambda vl: (vl[0], -order[vl[1]]))
    return YResult(value, label)


def y_oracle(A, B: float | None = None, C: float | None = None, grid: int = 500) -> float:
    """Max of the target over ``grid`` radii times ``4 * grid`` angles.

    Real coefficients make the target symmetric under conjugation, so only the
    angles in ``[0, pi]`` matter. On each circle ``|A + B z + C z^2|^2`` is a
    quadratic in ``cos(theta)``; its maximum over the sampled cosines is at an
    end (``theta = 0`` or ``pi``) or at a sample adjacent to the vertex, so only
    those candidates are evaluated. :func:`y_grid_direct` evaluates the same grid
    exhaustively.
    """
    if isinstance(A, YInput):
        A, B, C = A.A, A.B, A.C
    if grid < 2:
        raise ValueError("grid must be >= 2")
    A, B, C = float(A), float(B), float(C)
    r = np.linspace(0.0, 1.0, grid)
    theta = 2 * np.pi * np.arange(2 * grid + 1) / (4 * grid)
    cos_desc = np.cos(theta)  # decreasing from 1 to -1
    cos_asc = cos_desc[::-1]
    # |F|^2 = q2 c^2 + q1 c + q0 with c = cos(theta)
    q2 = 4 * A * C * r * r
    q1 = 2 * r * (A * B + B * C * r * r)
    q0 = A * A + (B * r) ** 2 + (C * r * r) ** 2 - 2 * A * C * r * r

    def quad(c):
        return (q2[:, None] * c + q1[:, None]) * c + q0[:, None]

    with np.errstate(divide="ignore", invalid="ignore", over="ignore"):
        vertex = np.where(q2 < 0, -q1 / (2 * q2), 1.0)
    vertex = np.clip(np.nan_to_num(vertex, nan=1.0), -1.0, 1.0)
    idx = np.searchsorted(cos_asc, vertex)
    near = np.stack(
        [cos_asc[np.clip(idx - 1, 0, cos_asc.size - 1)], cos_asc[np.clip(idx, 0, cos_asc.size - 1)]],
        axis=1,
    )
    ends = np.broadcast_to(np.array([1.0, -1.0]), (grid, 2))
    sq = quad(np.concatenate([ends, near], axis=1)).max(axis=1)
    return float(np.max(np.sqrt(np.maximum(sq, 0.0)) + 1 - r * r))


def y_grid_direct(A: float, B: float, C: float, grid: int) -> float:
    """Same grid as :func:`y_oracle`, evaluated with complex arithmetic on the full circle."""
    r = np.linspace(0.0, 1.0, grid)[:, None]
    theta = 2 * np.pi * np.arange(4 * grid) / (4 * grid)
    z = r * np.exp(1j * theta)[None, :]
    return float(np.max(np.abs(A + B * z + C * z * z) + 1 - np.abs(z) ** 2))


# --- determinant reductions -------------------------------------------------------

ZETA_PRIME_LOG = math.sqrt((6 / 47) * (8 * math.sqrt(2) - 9))
ZETA_PRIME_INVLOG = math.sqrt((2 / 149) * (2 * math.sqrt(1261) - 53))

CASES = ("h22", "h21_log", "h21_invlog")


def _check_open_unit(t):
    t = np.asarray(t, dtype=float)
    if np.any((t <= 0) | (t >= 1)):
        raise DomainError("the substitution is defined for t in (0, 1) only")
    return t


def _C(t):
    return -(3 + t * t) / (4 * t)


def abc_h22(t) -> YInput:
    t = _check_open_unit(t)
    return YInput(-5 * t**3 / (48 * (1 - t * t)), t / 4, _C(t))


def abc_h21_log(t) -> YInput:
    t = _check_open_unit(t)
    return YInput(7 * t**3 / (48 * (1 - t * t)), t / 4, _C(t))


def abc_h21_invlog(t) -> YInput:
    t = _check_open_unit(t)
    return YInput(43 * t**3 / (48 * (1 - t * t)), -5 * t / 4, _C(t))


ABC = {"h22": abc_h22, "h21_log": abc_h21_log, "h21_invlog": abc_h21_invlog}

#: the determinant equals ``prefactor(t) * (A + B z2 + C z2^2 + (1 - |z2|^2) z3)``
PREFACTOR_DENOM = {"h22": 3, "h21_log": 12, "h21_invlog": 12}


def prefactor(case: str, t):
    return t * (1 - t * t) / PREFACTOR_DENOM[case]


def h22_conditions(t) -> tuple:
    """``(A C >= 0, |B| >= 2 (1 - |C|))`` for the ``H22`` triple."""
    y = abc_h22(t)
    return (np.asarray(y.A * y.C >= 0), np.asarray(np.abs(y.B) >= 2 * (1 - np.abs(y.C))))


def proof_scalars(case: str, t) -> dict:
    """Branch-selection scalars computed directly from the triple."""
    y = ABC[case](t)
    A, B, C = y.A, y.B, y.C
    a, b, c = np.abs(A), np.abs(B), np.abs(C)
    K = -4 * A * C * (1 / C**2 - 1)
    return {
        "T1": b - 2 * (1 - c),
        "T2": K - B**2,
        "T3": 4 * (1 + c) ** 2,
        "T4": K,
        "T5": a * b - c * (b + 4 * a),
        "T6": a * b - c * (b - 4 * a),
    }


def printed_proof_scalars(case: str, t) -> dict:
    """The same scalars as closed rational expressions in ``t``."""
    t = _check_open_unit(t)
    s = t * t
    common_t3 = (3 + 4 * t + s) ** 2 / (4 * s)
    if case == "h21_log":
        return {
            "T1": 3 / (2 * t) + 3 * t / 4 - 2,
            "T2": -s * (18 - s) / (12 * (3 + s)),
            "T3": common_t3,
            "T4": -7 * s * (9 - s) / (48 * (3 + s)),
            "T5": -(12 + 20 * s + 3 * s * s) / (64 * (1 - s)),
            "T6": -(36 - 108 * s - 47 * s * s) / (192 * (1 - s)),
        }
    if case == "h21_invlog":
        return {
            "T1": 3 / (2 * t) + 7 * t / 4 - 2,
            "T2": -s * (153 + 8 * s) / (12 * (3 + s)),
            "T3": common_t3,
            "T4": -43 * s * (9 - s) / (48 * (3 + s)),
            "T5": -(180 + 396 * s - 103 * s * s) / (192 * (1 - s)),
            "T6": -(60 - 212 * s - 149 * s * s) / (64 * (1 - s)),
        }
    raise ValueError(f"no printed scalars for case {case!r}")


def reduction_bound(case: str, t: float) -> float:
    """``prefactor * Y(A, B, C)``: the bound the reduction gives at one ``t``."""
    return float(prefactor(case, t) * y_exact(ABC[case](t)).value)


# envelopes: prefactor times a branch value, as functions of t

def envelope_sum(case: str, t):
    """``prefactor * (|A| + |B| + |C|)``."""
    y = ABC[case](t)
    return prefactor(case, t) * (np.abs(y.A) + np.abs(y.B) + np.abs(y.C))


def envelope_minus_plus(case: str, t):
    """``prefactor * (-|A| + |B| + |C|)``."""
    y = ABC[case](t)
    return prefactor(case, t) * (-np.abs(y.A) + np.abs(y.B) + np.abs(y.C))


def envelope_sqrt(case: str, t):
    """``prefactor * (|C| + |A|) sqrt(1 - B^2 / (4 A C))``."""
    y = ABC[case](t)
    return prefactor(case, t) * (np.abs(y.C) + np.abs(y.A)) * np.sqrt(1 - y.B**2 / (4 * y.A * y.C))


def printed_envelope(name: str, t):
    """Envelope polynomials exactly as displayed in the source derivation."""
    t = np.asarray(t, dtype=float)
    s = t * t
    if name == "h22":
        return t * (1 - s) / 3 * (5 * t**3 / (48 * (1 - s)) + t / 4 + (3 + s) / (4 * t))
    if name == "h21_log":
        return (36 - 12 * s - 31 * s * s) / 576
    if name == "h21_invlog":
        return (36 + 36 * s - 115 * s * s) / 576
    if name == "phi2_log":
        return np.sqrt((6 + s) / (21 + 7 * s)) * (5 * s * s + 24 * s - 36) / 168
    if name == "phi2_invlog":
        return np.sqrt((51 - 8 * s) / (3 + s)) * (36 - 24 * s + 31 * s * s) / (288 * math.sqrt(43))
    raise ValueError(f"unknown envelope {name!r}")


def seam_values(A: float, C: float) -> list[float]:
    """Positive values of ``|B|`` at which the branch selection of ``Y`` switches."""
    a, c = abs(A), abs(C)
    out = []
    if c < 1:
        out.append(2 * (1 - c))
    if A * C < 0:
        K = -4 * A * (1 / C - C)
        if K > 0:
            out.append(math.sqrt(K))
        out.append(2 * (1 + c))
        if a != c:
            out.append(4 * a * c / abs(a - c))
    return sorted(v for v in out if v > 0)


def seam_jump(A: float, B: float, C: float, h: float = 1e-8) -> float:
    """``|Y(B + h) - Y(B - h)|`` with ``A`` and ``C`` fixed."""
    return abs(y_exact(A, B + h, C).value - y_exact(A, B - h, C).value)
