"""Coefficient functionals: Fekete-Szegő, second-order Hankel and Toeplitz.

Every evaluator takes a :class:`~balloonstar.balloon.CoefficientSet` whose fields
may be numpy arrays, so sweeps evaluate whole grids at once. The generic
determinants accept any coefficient stream (a mapping or sequence indexed by
coefficient number).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Mapping, Sequence, Union

import numpy as np

from .balloon import CoefficientSet
from .errors import InsufficientCoefficients

Stream = Union[Mapping[int, object], Sequence]


def fekete_szego(c: CoefficientSet, mu: complex):
    return c.a3 - mu * c.a2**2


def hankel21(c: CoefficientSet):
    return fekete_szego(c, 1.0)


def hankel22(c: CoefficientSet):
    return c.a2 * c.a4 - c.a3**2


def hankel21_log(c: CoefficientSet):
    """``gamma1 gamma3 - gamma2^2`` in terms of ``a2, a3, a4``."""
    return (c.a2 * c.a4 - c.a3**2 + c.a2**4 / 12) / 4


def hankel21_invlog(c: CoefficientSet):
    """``Gamma1 Gamma3 - Gamma2^2`` in terms of ``a2, a3, a4``."""
    a2, a3, a4 = c.a2, c.a3, c.a4
    return (13 * a2**4 - 12 * a2**2 * a3 - 12 * a3**2 + 12 * a2 * a4) / 48


def toeplitz_initial(c: CoefficientSet, n: int):
    if n == 1:
        return 1 - c.a2**2
    if n == 2:
        return c.a2**2 - c.a3**2
    if n == 3:
        return c.a3**2 - c.a4**2
    raise ValueError(f"n must be 1, 2 or 3, got {n}")


def toeplitz_log(c: CoefficientSet):
    a2, a3 = c.a2, c.a3
    return (4 * a2**2 - a2**4 - 4 * a3**2 + 4 * a2**2 * a3) / 16


def toeplitz_invlog(c: CoefficientSet):
    a2, a3 = c.a2, c.a3
    return -(9 * a2**4 - 4 * a2**2 + 4 * a3**2 - 12 * a2**2 * a3) / 16


# --- generic determinants -------------------------------------------------------


def _entry(seq: Stream, k: int):
    try:
        v = seq[k]
    except (KeyError, IndexError):
        raise InsufficientCoefficients(f"coefficient index {k} not available") from None
    if v is None:
        raise InsufficientCoefficients(f"coefficient index {k} is unset")
    return v


def _det(m: list[list]):
    q = len(m)
    if q == 1:
        return m[0][0]
    if q == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if q == 3:
        return (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
    # LAPACK LU with partial pivoting; stacked when entries are arrays
    arr = np.array(np.broadcast_arrays(*[np.asarray(x, dtype=complex) for row in m for x in row]))
    arr = np.moveaxis(arr.reshape((q, q) + arr.shape[1:]), (0, 1), (-2, -1))
    return np.linalg.det(arr)


def generic_hankel(seq: Stream, q: int, n: int):
    """Determinant of ``[seq[n + i + j]]_{i,j < q}``."""
    if q < 1:
        raise ValueError("q must be >= 1")
    return _det([[_entry(seq, n + i + j) for j in range(q)] for i in range(q)])


def generic_toeplitz(seq: Stream, q: int, n: int):
    """Determinant of the symmetric Toeplitz matrix ``[seq[n + |i - j|]]``."""
    if q < 1:
        raise ValueError("q must be >= 1")
    return _det([[_entry(seq, n + abs(i - j)) for j in range(q)] for i in range(q)])


# --- registry -------------------------------------------------------------------


@dataclass(frozen=True)
class FunctionalId:
    """Identifier of one studied functional.

    ``depth`` is the highest ``a_k`` index the functional reads; ``route`` names
    the parameterization used when sweeping it (``"p"``, ``"b"`` or ``"schur"``).
    """

    name: str
    mu: complex | None = None
    rotation_invariant: bool = True
    depth: int = 3
    route: str = "p"
    evaluator: Callable = field(default=None, compare=False, repr=False)

    @property
    def label(self) -> str:
        if self.name != "FS":
            return self.name
        mu = complex(self.mu)
        if mu.imag == 0:
            return f"FS(mu={mu.real:g})"
        return f"FS(mu={mu.real:g}{mu.imag:+g}i)"

    def __call__(self, c: CoefficientSet):
        if self.name == "FS":
            return fekete_szego(c, self.mu)
        return self.evaluator(c)


def _fid(name, evaluator, rotation_invariant=True, depth=3, route="p"):
    return FunctionalId(name, None, rotation_invariant, depth, route, evaluator)


FUNCTIONALS: dict[str, FunctionalId] = {
    f.name: f
    for f in [
        _fid("a2", lambda c: c.a2, depth=2),
        _fid("a3", lambda c: c.a3, depth=3),
        _fid("a4", lambda c: c.a4, depth=4),
        _fid("a5", lambda c: c.a5, depth=5, route="schur"),
        _fid("gamma1", lambda c: c.gamma1, depth=2),
        _fid("gamma2", lambda c: c.gamma2, depth=3),
        _fid("gamma3", lambda c: c.gamma3, depth=4),
        _fid("H21", hankel21, depth=3),
        _fid("H22", hankel22, depth=4),
        _fid("H21_log", hankel21_log, depth=4),
        _fid("H21_invlog", hankel21_invlog, depth=4),
        _fid("T21", lambda c: toeplitz_initial(c, 1), False, depth=2),
        _fid("T22", lambda c: toeplitz_initial(c, 2), False, depth=3),
        _fid("T23", lambda c: toeplitz_initial(c, 3), False, depth=4, route="b"),
        _fid("T21_log", toeplitz_log, False, depth=3, route="b"),
        _fid("T21_invlog", toeplitz_invlog, False, depth=3, route="b"),
    ]
}


def fekete_szego_id(mu: complex) -> FunctionalId:
    return FunctionalId("FS", complex(mu), True, 3, "p", None)


def functional_id(name: str, mu: complex | None = None) -> FunctionalId:
    """Look up a functional by name; ``FS`` needs ``mu``."""
    if name == "FS":
        if mu is None:
            raise ValueError("FS requires a value of mu")
        return fekete_szego_id(mu)
    try:
        return FUNCTIONALS[name]
    except KeyError:
        known = ", ".join(["FS"] + list(FUNCTIONALS))
        raise ValueError(f"unknown functional {name!r}; known: {known}") from None


def evaluate(fid: FunctionalId | str, c: CoefficientSet, mu: complex | None = None):
    if isinstance(fid, str):
        fid = functional_id(fid, mu)
    return fid(c)
