"""Functional calculus of the two-sided multiplication operators.

A :class:`TwoSidedOperator` represents ``A = L_X + sign * R_Y`` for
Hermitian ``X`` and ``Y``.  Scalar maps ``f`` act on it through the
spectral Schur-multiplier realization: in the eigenbases of ``X`` and
``Y``, ``f(A)`` multiplies entrywise by the kernel ``f(x_i + sign*y_j)``.
A brute-force flattened matrix of ``A`` serves as an independent oracle.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import rng
from .errors import DomainError, ShapeMismatch, SizeLimit
from .linalg import DIM_CAP, SpectralDecomposition, as_matrix, hermitian_eigendecompose
from .norms import NormSpec, norm


@dataclass(frozen=True)
class TwoSidedOperator:
    """Spectral data of ``L_X + sign * R_Y`` on rectangular matrices."""

    left: SpectralDecomposition
    right: SpectralDecomposition
    sign: int  # +1 or -1

    @classmethod
    def from_matrices(cls, x, y, sign: int = 1) -> "TwoSidedOperator":
        if sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {sign}")
        return cls(
            left=hermitian_eigendecompose(x),
            right=hermitian_eigendecompose(y),
            sign=sign,
        )

    @property
    def shape(self) -> tuple[int, int]:
        return (self.left.dim, self.right.dim)

    def kernel_arguments(self) -> np.ndarray:
        """Outer grid ``x_i + sign * y_j`` carrying the operator spectrum."""
        return np.add.outer(
            self.left.eigenvalues, self.sign * self.right.eigenvalues
        )


def apply_calculus(f, op: TwoSidedOperator, t) -> np.ndarray:
    """Evaluate ``f(L_X + sign*R_Y)`` on the matrix ``t``."""
    t = as_matrix(t)
    if t.shape != op.shape:
        raise ShapeMismatch(f"operand shape {t.shape} != operator shape {op.shape}")
    kernel = np.asarray(f(op.kernel_arguments()), dtype=np.complex128)
    if not np.all(np.isfinite(kernel)):
        raise DomainError("kernel map not finite on the operator spectrum")
    u, v = op.left.unitary, op.right.unitary
    return u @ (kernel * (u.conj().T @ t @ v)) @ v.conj().T


def superop_flatten(op: TwoSidedOperator) -> np.ndarray:
    """Matrix of ``T -> XT + sign*TY`` in row-major flattened coordinates."""
    n, m = op.shape
    if n * m > DIM_CAP:
        raise SizeLimit(f"flattened dimension {n * m} exceeds cap {DIM_CAP}")
    x = op.left.reconstruct()
    y = op.right.reconstruct()
    return np.kron(x, np.eye(m)) + op.sign * np.kron(np.eye(n), y.T)


def apply_via_flatten(f, op: TwoSidedOperator, t) -> np.ndarray:
    """Oracle route: eigendecompose the flattened operator and apply ``f``."""
    t = as_matrix(t)
    if t.shape != op.shape:
        raise ShapeMismatch(f"operand shape {t.shape} != operator shape {op.shape}")
    big = hermitian_eigendecompose(superop_flatten(op))
    vals = np.asarray(f(big.eigenvalues), dtype=np.complex128)
    u = big.unitary
    vec = u @ (vals * (u.conj().T @ t.reshape(-1)))
    return vec.reshape(op.shape)


def sinhc(x: np.ndarray) -> np.ndarray:
    """sinh(x)/x with the removable singularity realized by a short series."""
    x = np.asarray(x, dtype=np.complex128)
    small = np.abs(x) < 1e-4
    xs = np.where(small, 0.0, x)
    with np.errstate(invalid="ignore", divide="ignore"):
        direct = np.sinh(xs) / np.where(small, 1.0, xs)
    x2 = x * x
    series = 1.0 + x2 / 6.0 * (
        1.0 + x2 / 20.0 * (1.0 + x2 / 42.0 * (1.0 + x2 / 72.0))
    )
    out = np.where(small, series, direct)
    return out.real if np.all(np.asarray(x).imag == 0.0) else out


def exp_divided_difference(lam: np.ndarray, mu: np.ndarray) -> np.ndarray:
    """Kernel (e^x - e^y)/(x - y) with diagonal limit e^x.

    Near-degenerate pairs switch to e^{(x+y)/2} * sinhc((x-y)/2) so the
    difference quotient never cancels catastrophically.
    """
    diff = np.subtract.outer(lam, mu)
    avg = np.add.outer(lam, mu) / 2.0
    small = np.abs(diff) < 1e-4
    safe = np.where(small, 1.0, diff)
    direct = (np.exp(np.add(avg, diff / 2.0)) - np.exp(avg - diff / 2.0)) / safe
    series = np.exp(avg) * sinhc(diff / 2.0)
    return np.where(small, series, direct)


def integral_mean(x, y, t) -> np.ndarray:
    """The mean ``int_0^1 e^{(1-s)X} T e^{sY} ds`` via its spectral kernel."""
    t = as_matrix(t)
    dx = hermitian_eigendecompose(x)
    dy = hermitian_eigendecompose(y)
    if t.shape != (dx.dim, dy.dim):
        raise ShapeMismatch(f"operand shape {t.shape} incompatible with X, Y")
    kernel = exp_divided_difference(dx.eigenvalues, dy.eigenvalues)
    u, v = dx.unitary, dy.unitary
    return u @ (kernel * (u.conj().T @ t @ v)) @ v.conj().T


def dexp(x, y) -> np.ndarray:
    """Derivative of the matrix exponential at Hermitian ``x`` applied to ``y``."""
    return integral_mean(x, x, y)


def induced_norm_p2(f, op: TwoSidedOperator) -> float:
    """Exact induced norm of ``f(A)`` on the Hilbert-Schmidt ideal."""
    kernel = np.asarray(f(op.kernel_arguments()), dtype=np.complex128)
    if not np.all(np.isfinite(kernel)):
        raise DomainError("kernel map not finite on the operator spectrum")
    return float(np.max(np.abs(kernel)))


def induced_norm_lower_estimate(
    f, op: TwoSidedOperator, spec: NormSpec, trials: int, seed: int
) -> float:
    """Sampled lower bound for the induced norm of ``f(A)`` on the ideal.

    Maximizes ``norm(f(A) T, spec)`` over ``trials`` unit-norm matrices
    drawn deterministically from ``seed``; monotone in ``trials``.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    n, m = op.shape
    best = 0.0
    for i in range(trials):
        z = rng.standard_complex_normals(rng.sub_seed(seed, i), n * m)
        t = z.reshape(n, m)
        denom = norm(t, spec)
        if denom == 0.0:  # pragma: no cover - measure zero
            continue
        best = max(best, norm(apply_calculus(f, op, t), spec) / denom)
    return best
