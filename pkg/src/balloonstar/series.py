"""Truncated power series with complex coefficients.

A :class:`PowerSeries` of order ``N`` stores ``c[0] ... c[N]`` and stands for
``c[0] + c[1] z + ... + c[N] z**N + O(z**(N+1))``. Binary operations truncate to
the smaller of the two orders. Values are immutable; every operation returns a
new series.

    >>> z = PowerSeries.variable(4)
    >>> log(1 + z).coeffs.real
    array([ 0.        ,  1.        , -0.5       ,  0.33333333, -0.25      ])
"""

from __future__ import annotations

import cmath
from typing import Iterable, Union

import numpy as np

from .errors import BranchViolation, DivisionByNonUnit, NonUnitDerivative, NonvanishingInner

#: threshold below which a constant term / linear coefficient counts as zero
UNIT_EPS = 1e-9

Scalar = Union[int, float, complex]


class PowerSeries:
    """Immutable truncated Taylor series ``sum c[k] z**k, k = 0..order``."""

    __slots__ = ("_c",)
    __array_priority__ = 100.0

    def __init__(self, coeffs: Iterable[Scalar], order: int | None = None):
        c = np.array(list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs, dtype=complex)
        if c.ndim != 1:
            raise ValueError("coefficients must be one-dimensional")
        if order is None:
            if c.size == 0:
                raise ValueError("empty coefficient list")
            order = c.size - 1
        if order < 0:
            raise ValueError(f"order must be >= 0, got {order}")
        out = np.zeros(order + 1, dtype=complex)
        n = min(order + 1, c.size)
        out[:n] = c[:n]
        out.flags.writeable = False
        self._c = out

    @classmethod
    def constant(cls, value: Scalar, order: int) -> "PowerSeries":
        return cls([value], order)

    @classmethod
    def variable(cls, order: int) -> "PowerSeries":
        """The series ``z`` truncated at ``order``."""
        return cls([0, 1], order)

    @property
    def coeffs(self) -> np.ndarray:
        return self._c

    @property
    def order(self) -> int:
        return self._c.size - 1

    def __len__(self) -> int:
        return self._c.size

    def __getitem__(self, k):
        return self._c[k]

    def __iter__(self):
        return iter(self._c)

    def __repr__(self) -> str:
        return f"PowerSeries({self._c.tolist()!r})"

    def truncate(self, order: int) -> "PowerSeries":
        return PowerSeries(self._c, order)

    def shift_up(self, k: int = 1) -> "PowerSeries":
        """Multiply by ``z**k``; the order grows by ``k``."""
        return PowerSeries(np.concatenate([np.zeros(k, complex), self._c]))

    def shift_down(self, k: int = 1) -> "PowerSeries":
        """Divide by ``z**k``. The first ``k`` coefficients are discarded."""
        if k > self.order:
            raise ValueError("cannot shift below order 0")
        return PowerSeries(self._c[k:])

    def __call__(self, z):
        """Evaluate the stored polynomial at ``z`` (scalar or array)."""
        z = np.asarray(z, dtype=complex)
        acc = np.zeros_like(z)
        for ck in self._c[::-1]:
            acc = acc * z + ck
        return acc if acc.ndim else complex(acc)

    def allclose(self, other: "PowerSeries", atol: float = 1e-12) -> bool:
        n = min(self.order, other.order) + 1
        return bool(np.all(np.abs(self._c[:n] - other._c[:n]) <= atol))

    # operators -------------------------------------------------------------
    def __neg__(self):
        return PowerSeries(-self._c)

    def __pos__(self):
        return self

    def __add__(self, other):
        other = _coerce(other, self.order)
        return other if other is NotImplemented else add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other, self.order)
        return other if other is NotImplemented else add(self, -other)

    def __rsub__(self, other):
        other = _coerce(other, self.order)
        return other if other is NotImplemented else add(other, -self)

    def __mul__(self, other):
        if _is_scalar(other):
            return PowerSeries(self._c * other)
        if isinstance(other, PowerSeries):
            return mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if _is_scalar(other):
            return PowerSeries(self._c / other)
        if isinstance(other, PowerSeries):
            return div(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        other = _coerce(other, self.order)
        return other if other is NotImplemented else div(other, self)

    def __pow__(self, n: int):
        if not isinstance(n, (int, np.integer)) or n < 0:
            raise ValueError("only non-negative integer powers are supported")
        result = PowerSeries.constant(1, self.order)
        base = self
        while n:
            if n & 1:
                result = mul(result, base)
            base = mul(base, base)
            n >>= 1
        return result


def _is_scalar(x) -> bool:
    return isinstance(x, (int, float, complex, np.number))


def _coerce(x, order: int) -> PowerSeries:
    if isinstance(x, PowerSeries):
        return x
    if _is_scalar(x):
        return PowerSeries.constant(x, order)
    return NotImplemented


def _common(a: PowerSeries, b: PowerSeries) -> int:
    return min(a.order, b.order)


def add(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    n = _common(a, b) + 1
    return PowerSeries(a.coeffs[:n] + b.coeffs[:n])


def mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    n = _common(a, b) + 1
    return PowerSeries(np.convolve(a.coeffs[:n], b.coeffs[:n])[:n])


def div(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Series quotient ``a / b``; requires ``|b[0]| > UNIT_EPS``."""
    if abs(b[0]) <= UNIT_EPS:
        raise DivisionByNonUnit(f"divisor constant term {b[0]} is not a unit")
    n = _common(a, b) + 1
    ac, bc = a.coeffs, b.coeffs
    q = np.zeros(n, dtype=complex)
    for k in range(n):
        q[k] = (ac[k] - np.dot(q[:k], bc[k:0:-1])) / bc[0]
    return PowerSeries(q)


def derivative(a: PowerSeries) -> PowerSeries:
    if a.order == 0:
        return PowerSeries([0])
    k = np.arange(1, a.order + 1)
    return PowerSeries(a.coeffs[1:] * k)


def integrate(a: PowerSeries) -> PowerSeries:
    """Antiderivative with zero constant term; order grows by one."""
    k = np.arange(1, a.order + 2)
    return PowerSeries(np.concatenate([[0], a.coeffs / k]))


def exp(a: PowerSeries) -> PowerSeries:
    # y' = a' y  =>  k y_k = sum_{j=1..k} j a_j y_{k-j}
    c = a.coeffs
    if not np.isfinite(c[0]):
        raise ValueError("constant term must be finite")
    n = a.order + 1
    y = np.zeros(n, dtype=complex)
    y[0] = cmath.exp(c[0])
    j = np.arange(1, n)
    for k in range(1, n):
        y[k] = np.dot(j[:k] * c[1 : k + 1], y[k - 1 :: -1][:k]) / k
    return PowerSeries(y)


def log(a: PowerSeries) -> PowerSeries:
    """Principal-branch logarithm; requires ``Re a[0] > 0``."""
    c = a.coeffs
    if not c[0].real > 0:
        raise BranchViolation(f"log needs Re(a0) > 0, got a0 = {c[0]}")
    # a l' = a'  =>  k a_0 l_k = k a_k - sum_{j=1..k-1} j l_j a_{k-j}
    n = a.order + 1
    lg = np.zeros(n, dtype=complex)
    lg[0] = cmath.log(c[0])
    for k in range(1, n):
        j = np.arange(1, k)
        s = np.dot(j * lg[1:k], c[k - 1 : 0 : -1]) if k > 1 else 0.0
        lg[k] = (k * c[k] - s) / (k * c[0])
    return PowerSeries(lg)


def compose(outer: PowerSeries, inner: PowerSeries) -> PowerSeries:
    """``outer(inner(z))`` by Horner's rule; ``inner[0]`` must be exactly 0."""
    if inner[0] != 0:
        raise NonvanishingInner(f"inner constant term {inner[0]} is nonzero")
    n = _common(outer, inner)
    inner = inner.truncate(n)
    acc = PowerSeries.constant(outer[n], n)
    for k in range(n - 1, -1, -1):
        acc = mul(acc, inner) + outer[k]
    return acc


def revert(f: PowerSeries) -> PowerSeries:
    """Compositional inverse by Lagrange inversion.

    ``g[n] = (1/n) [z**(n-1)] (z / f(z))**n``; needs ``f[0] = 0`` and a unit
    linear coefficient.
    """
    if f[0] != 0:
        raise NonvanishingInner(f"f(0) = {f[0]} must vanish")
    if f.order < 1 or abs(f[1]) <= UNIT_EPS:
        raise NonUnitDerivative("linear coefficient is not a unit")
    n = f.order
    h = div(PowerSeries.constant(1, n - 1), f.shift_down())  # z / f(z)
    g = np.zeros(n + 1, dtype=complex)
    hp = PowerSeries.constant(1, n - 1)
    for k in range(1, n + 1):
        hp = mul(hp, h)
        g[k] = hp[k - 1] / k
    return PowerSeries(g)
