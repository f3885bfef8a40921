"""Dense complex matrix arithmetic and decompositions at desk scale.

All operations are pure functions of their inputs and deterministic for
identical input bytes.  Matrices are plain ``numpy`` complex arrays; the
helpers here validate shape, finiteness and the dimension cap before any
decomposition runs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    ConvergenceFailure,
    DomainError,
    NonHermitianInput,
    NotPositiveDefinite,
    PoleError,
    ShapeMismatch,
    SingularMatrix,
    SizeLimit,
)

DIM_CAP = 64
HERMITIAN_RTOL = 1e-10


def as_matrix(a, *, square: bool = False) -> np.ndarray:
    """Validate and return ``a`` as a finite complex matrix within the cap."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise ShapeMismatch(f"expected a 2-d matrix, got ndim={m.ndim}")
    rows, cols = m.shape
    if rows < 1 or cols < 1:
        raise ShapeMismatch("matrix dimensions must be >= 1")
    if rows > DIM_CAP or cols > DIM_CAP:
        raise SizeLimit(f"dimension {max(rows, cols)} exceeds cap {DIM_CAP}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise DomainError("matrix entries must be finite")
    if square and rows != cols:
        raise ShapeMismatch(f"expected a square matrix, got {rows}x{cols}")
    return m


def check_hermitian(h: np.ndarray) -> np.ndarray:
    """Validate the Hermitian tolerance and return the symmetrized matrix."""
    h = as_matrix(h, square=True)
    defect = np.linalg.norm(h - h.conj().T)
    if defect > HERMITIAN_RTOL * (1.0 + np.linalg.norm(h)):
        raise NonHermitianInput(f"symmetry defect {defect:.3e} exceeds tolerance")
    return (h + h.conj().T) / 2.0


@dataclass(frozen=True)
class SpectralDecomposition:
    """Eigenvalues (real, descending) and unitary of a Hermitian matrix."""

    eigenvalues: np.ndarray
    unitary: np.ndarray

    @property
    def dim(self) -> int:
        return self.eigenvalues.shape[0]

    def reconstruct(self) -> np.ndarray:
        u = self.unitary
        return (u * self.eigenvalues) @ u.conj().T


def hermitian_eigendecompose(h) -> SpectralDecomposition:
    """Eigendecomposition of a Hermitian matrix, eigenvalues descending."""
    hs = check_hermitian(h)
    try:
        w, u = np.linalg.eigh(hs)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - tiny dense inputs
        raise ConvergenceFailure(str(exc)) from exc
    order = slice(None, None, -1)
    w = np.ascontiguousarray(w[order])
    u = np.ascontiguousarray(u[:, order])
    return SpectralDecomposition(eigenvalues=w, unitary=u)


def singular_values(a) -> np.ndarray:
    """Singular values of ``a``, nonnegative and descending."""
    m = as_matrix(a)
    try:
        return np.linalg.svd(m, compute_uv=False)
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise ConvergenceFailure(str(exc)) from exc


def polar_decompose(a, side: str = "right") -> tuple[np.ndarray, np.ndarray]:
    """Polar factors of a square invertible matrix.

    ``right`` returns (P, U) with A = U P and P = (A^* A)^{1/2};
    ``left`` returns (P, U) with A = P U and P = (A A^*)^{1/2}.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', got {side!r}")
    m = as_matrix(a, square=True)
    try:
        w, s, vh = np.linalg.svd(m)
    except np.linalg.LinAlgError as exc:  # pragma: no cover
        raise ConvergenceFailure(str(exc)) from exc
    if s[-1] < 1e-10 * s[0]:
        raise SingularMatrix(f"singular value ratio {s[-1] / s[0]:.3e} below 1e-10")
    unitary = w @ vh
    if side == "right":
        positive = (vh.conj().T * s) @ vh
    else:
        positive = (w * s) @ w.conj().T
    return positive, unitary


def matrix_function_hermitian(f, h) -> np.ndarray:
    """Apply the scalar map ``f`` to a Hermitian matrix spectrally.

    ``f`` must accept a real numpy array of eigenvalues; when all values
    it returns are real the result is re-symmetrized to stay Hermitian.
    """
    dec = hermitian_eigendecompose(h)
    with np.errstate(all="ignore"):
        vals = np.asarray(f(dec.eigenvalues), dtype=np.complex128)
    if vals.shape != dec.eigenvalues.shape:
        raise DomainError("scalar map must return one value per eigenvalue")
    if not np.all(np.isfinite(vals)):
        raise DomainError("scalar map is not finite on the spectrum")
    u = dec.unitary
    out = (u * vals) @ u.conj().T
    if np.all(vals.imag == 0.0):
        out = (out + out.conj().T) / 2.0
    return out


def _require_positive(dec: SpectralDecomposition, what: str) -> None:
    if dec.eigenvalues[-1] <= 0.0:
        raise NotPositiveDefinite(
            f"{what} needs a positive definite matrix "
            f"(smallest eigenvalue {dec.eigenvalues[-1]:.3e})"
        )


def matrix_exp_hermitian(h) -> np.ndarray:
    """exp of a Hermitian matrix (Hermitian positive definite result)."""
    return matrix_function_hermitian(np.exp, h)


def matrix_log_positive(p) -> np.ndarray:
    """log of a Hermitian positive definite matrix."""
    dec = hermitian_eigendecompose(p)
    _require_positive(dec, "matrix logarithm")
    u = dec.unitary
    out = (u * np.log(dec.eigenvalues)) @ u.conj().T
    return (out + out.conj().T) / 2.0


def matrix_power_positive(p, t: float) -> np.ndarray:
    """Real power of a Hermitian positive definite matrix."""
    dec = hermitian_eigendecompose(p)
    if t != int(t) or t < 0:
        _require_positive(dec, "fractional matrix power")
    u = dec.unitary
    out = (u * np.power(dec.eigenvalues.astype(np.complex128), t)) @ u.conj().T
    return (out + out.conj().T) / 2.0


# Lanczos approximation, g = 7, nine fixed coefficients; together with the
# reflection formula this covers the whole plane away from the poles.
_LANCZOS_G = 7.0
_LANCZOS_COEFFS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def complex_gamma(z: complex) -> complex:
    """Gamma function on the complex plane (poles at nonpositive integers)."""
    z = complex(z)
    nearest = round(z.real)
    if nearest <= 0 and abs(z - nearest) <= 1e-12:
        raise PoleError(f"gamma pole at {nearest}")
    if z.real < 0.5:
        # reflection: gamma(z) gamma(1-z) = pi / sin(pi z)
        return math.pi / (np.sin(math.pi * z) * complex_gamma(1.0 - z))
    w = z - 1.0
    acc = _LANCZOS_COEFFS[0]
    for k, coeff in enumerate(_LANCZOS_COEFFS[1:], start=1):
        acc += coeff / (w + k)
    t = w + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (w + 0.5) * np.exp(-t) * acc


def reciprocal_gamma(z: complex) -> complex:
    """1 / gamma(z); exactly zero at the poles of gamma."""
    z = complex(z)
    nearest = round(z.real)
    if nearest <= 0 and abs(z - nearest) <= 1e-12:
        return 0.0 + 0.0j
    return 1.0 / complex_gamma(z)


def matrix_to_json(m) -> dict:
    """Serialize a matrix to the shared JSON wire format."""
    m = as_matrix(m)
    return {
        "rows": int(m.shape[0]),
        "cols": int(m.shape[1]),
        "re": m.real.tolist(),
        "im": m.imag.tolist(),
    }


def matrix_from_json(obj: dict) -> np.ndarray:
    """Load a matrix from the shared JSON wire format."""
    rows, cols = int(obj["rows"]), int(obj["cols"])
    re = np.asarray(obj["re"], dtype=np.float64)
    im = np.asarray(obj["im"], dtype=np.float64)
    if re.shape != (rows, cols) or im.shape != (rows, cols):
        raise ShapeMismatch("re/im arrays do not match the declared shape")
    return as_matrix(re + 1j * im)
