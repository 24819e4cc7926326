"""Truncated Taylor expansions about the origin.

A :class:`TaylorPoly` of degree ``N`` stores the coefficients ``c_0 .. c_N``
of ``sum c_k z**k``.  Coefficients beyond ``N`` are unknown, not zero, so
every operation returns a result of the same degree and binary operations
refuse operands of different degree instead of silently promoting.

``log_series`` and ``exp_series`` use the derivative recurrences
``b' = a'/a`` and ``b' = a' b`` solved term by term, which is O(N**2) and
never forms factorials.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from numbers import Number

import numpy as np

from .errors import BranchAnchorError, DegreeMismatchError, DomainError, SingularDivisionError

DEFAULT_DEGREE = 64
COEFF_ATOL = 1e-12
EVAL_RADIUS_WARN = 0.95


@dataclass(frozen=True, eq=False)
class TaylorPoly:
    coeffs: np.ndarray
    normalized: bool = False

    def __post_init__(self):
        c = np.array(self.coeffs, dtype=complex).ravel()
        if c.size < 2:
            raise DomainError("a TaylorPoly needs degree >= 1")
        if not np.all(np.isfinite(c)):
            raise DomainError("TaylorPoly coefficients must be finite")
        if self.normalized and not (c[0] == 0 and c[1] == 1):
            raise DomainError("normalized TaylorPoly requires c0 = 0 and c1 = 1")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    # -- constructors -------------------------------------------------
    @classmethod
    def zeros(cls, degree=DEFAULT_DEGREE):
        return cls(np.zeros(degree + 1, dtype=complex))

    @classmethod
    def constant(cls, value, degree=DEFAULT_DEGREE):
        c = np.zeros(degree + 1, dtype=complex)
        c[0] = value
        return cls(c)

    @classmethod
    def one(cls, degree=DEFAULT_DEGREE):
        return cls.constant(1.0, degree)

    @classmethod
    def identity(cls, degree=DEFAULT_DEGREE):
        """The series of ``z``."""
        c = np.zeros(degree + 1, dtype=complex)
        c[1] = 1.0
        return cls(c, normalized=True)

    @classmethod
    def from_coeffs(cls, coeffs, degree=None, normalized=False):
        c = np.asarray(coeffs, dtype=complex).ravel()
        if degree is not None:
            out = np.zeros(degree + 1, dtype=complex)
            m = min(degree + 1, c.size)
            out[:m] = c[:m]
            c = out
        return cls(c, normalized=normalized)

    @classmethod
    def binomial(cls, mu, degree=DEFAULT_DEGREE):
        """Series of ``(1 - z)**mu`` on the principal branch (value 1 at 0)."""
        c = np.empty(degree + 1, dtype=complex)
        c[0] = 1.0
        for k in range(1, degree + 1):
            c[k] = c[k - 1] * (k - 1 - mu) / k
        return cls(c)

    # -- basic protocol -----------------------------------------------
    @property
    def degree(self):
        return self.coeffs.size - 1

    def __len__(self):
        return self.coeffs.size

    def __getitem__(self, k):
        return self.coeffs[k]

    def __repr__(self):
        head = ", ".join(f"{c:.6g}" for c in self.coeffs[:6])
        tail = ", ..." if self.degree >= 6 else ""
        return f"TaylorPoly([{head}{tail}], degree={self.degree})"

    def __call__(self, z):
        return evaluate(self, z)

    def __add__(self, other):
        if isinstance(other, TaylorPoly):
            _check_same_degree(self, other)
            return TaylorPoly(self.coeffs + other.coeffs)
        if isinstance(other, Number):
            c = self.coeffs.copy()
            c[0] += other
            return TaylorPoly(c)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return TaylorPoly(-self.coeffs)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TaylorPoly):
            return mul(self, other)
        if isinstance(other, Number):
            return TaylorPoly(self.coeffs * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, TaylorPoly):
            return div(self, other)
        if isinstance(other, Number):
            return TaylorPoly(self.coeffs / other)
        return NotImplemented

    def is_identity_z(self):
        c = self.coeffs
        return c[1] == 1 and c[0] == 0 and not np.any(c[2:])

    def as_normalized(self, atol=COEFF_ATOL):
        """Return a copy tagged normalized, snapping c0 and c1 if within ``atol``."""
        c = self.coeffs.copy()
        if abs(c[0]) > atol or abs(c[1] - 1) > atol:
            raise DomainError(f"series is not normalized: c0={c[0]!r}, c1={c[1]!r}")
        c[0], c[1] = 0.0, 1.0
        return TaylorPoly(c, normalized=True)

    def to_json(self):
        """JSON-ready list of ``[re, im]`` pairs, index = power."""
        return [[float(c.real), float(c.imag)] for c in self.coeffs]

    @classmethod
    def from_json(cls, pairs):
        return cls(np.array([complex(re, im) for re, im in pairs]))


def _check_same_degree(a, b):
    if a.degree != b.degree:
        raise DegreeMismatchError(f"degree mismatch: {a.degree} vs {b.degree}")


def coeff_allclose(a, b, atol=COEFF_ATOL):
    """Coefficient-wise comparison with the tolerance scaled by operand magnitude."""
    ca = a.coeffs if isinstance(a, TaylorPoly) else np.asarray(a, dtype=complex)
    cb = b.coeffs if isinstance(b, TaylorPoly) else np.asarray(b, dtype=complex)
    if ca.shape != cb.shape:
        return False
    scale = max(1.0, float(np.max(np.abs(ca), initial=0.0)), float(np.max(np.abs(cb), initial=0.0)))
    return bool(np.all(np.abs(ca - cb) <= atol * scale))


def mul(a: TaylorPoly, b: TaylorPoly) -> TaylorPoly:
    """Cauchy product truncated at the common degree."""
    _check_same_degree(a, b)
    n = a.degree + 1
    return TaylorPoly(np.convolve(a.coeffs, b.coeffs)[:n])


def shift_down(a: TaylorPoly) -> TaylorPoly:
    """``a(z) / z`` for a series with ``a_0 = 0``; the new top coefficient is padded with 0."""
    if a.coeffs[0] != 0:
        raise SingularDivisionError("division by z needs a zero constant term")
    c = np.zeros_like(a.coeffs)
    c[:-1] = a.coeffs[1:]
    return TaylorPoly(c)


def div(a: TaylorPoly, b: TaylorPoly) -> TaylorPoly:
    """Quotient ``a / b``.

    When ``b`` is exactly the series of ``z`` and ``a_0 = 0`` the quotient is an
    index shift.  Otherwise ``b_0`` must be nonzero.
    """
    _check_same_degree(a, b)
    if b.coeffs[0] == 0:
        if b.is_identity_z():
            return shift_down(a)
        raise SingularDivisionError("divisor has zero constant term")
    ac, bc = a.coeffs, b.coeffs
    n = a.degree + 1
    q = np.zeros(n, dtype=complex)
    inv_b0 = 1.0 / bc[0]
    for k in range(n):
        # q_k = (a_k - sum_{j=1..k} b_j q_{k-j}) / b_0
        s = ac[k] - np.dot(bc[1:k + 1], q[k - 1::-1][:k]) if k else ac[0]
        q[k] = s * inv_b0
    return TaylorPoly(q)


def differentiate(a: TaylorPoly) -> TaylorPoly:
    c = np.zeros_like(a.coeffs)
    k = np.arange(1, a.degree + 1)
    c[:-1] = k * a.coeffs[1:]
    return TaylorPoly(c)


def integrate(a: TaylorPoly) -> TaylorPoly:
    """Antiderivative vanishing at 0.  The top coefficient of ``a`` falls off the end."""
    c = np.zeros_like(a.coeffs)
    k = np.arange(1, a.degree + 1)
    c[1:] = a.coeffs[:-1] / k
    return TaylorPoly(c)


def log_series(a: TaylorPoly) -> TaylorPoly:
    """Logarithm anchored at ``log a_0 = 0``; requires ``a_0 = 1``."""
    ac = a.coeffs
    if ac[0] != 1:
        raise BranchAnchorError(f"log_series needs a_0 = 1, got {ac[0]!r}")
    n = a.degree + 1
    b = np.zeros(n, dtype=complex)
    jb = np.zeros(n, dtype=complex)  # j * b_j
    for k in range(1, n):
        # k a_k = sum_{j=1..k} j b_j a_{k-j}
        s = np.dot(jb[1:k], ac[k - 1:0:-1]) if k > 1 else 0.0
        jb[k] = k * ac[k] - s
        b[k] = jb[k] / k
    return TaylorPoly(b)


def exp_series(a: TaylorPoly) -> TaylorPoly:
    """Exponential of a series with ``a_0 = 0``; the result has constant term 1."""
    ac = a.coeffs
    if ac[0] != 0:
        raise BranchAnchorError(f"exp_series needs a_0 = 0, got {ac[0]!r}")
    n = a.degree + 1
    ja = np.arange(n) * ac
    b = np.zeros(n, dtype=complex)
    b[0] = 1.0
    for k in range(1, n):
        # k b_k = sum_{j=1..k} j a_j b_{k-j}
        b[k] = np.dot(ja[1:k + 1], b[k - 1::-1][:k]) / k
    return TaylorPoly(b)


def cpow(a: TaylorPoly, gamma) -> TaylorPoly:
    """``a ** gamma`` on the branch with value 1 at the origin."""
    gamma = complex(gamma)
    if a.coeffs[0] != 1:
        raise BranchAnchorError(f"cpow needs a_0 = 1, got {a.coeffs[0]!r}")
    if gamma == 0:
        return TaylorPoly.one(a.degree)
    return exp_series(log_series(a) * gamma)


def evaluate(a: TaylorPoly, z):
    """Horner evaluation; accepts scalars or arrays."""
    zz = np.asarray(z, dtype=complex)
    if zz.size and np.max(np.abs(zz)) > EVAL_RADIUS_WARN:
        warnings.warn(
            f"evaluating a truncated series at |z| > {EVAL_RADIUS_WARN}; truncation error may dominate",
            RuntimeWarning,
            stacklevel=2,
        )
    acc = np.zeros_like(zz)
    for c in a.coeffs[::-1]:
        acc = acc * zz + c
    if np.ndim(z) == 0:
        return complex(acc)
    return acc
