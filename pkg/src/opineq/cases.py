"""Registry of executable norm-inequality cases.

Each case packages typed inputs, a left/right-hand-side evaluator over a
chosen unitarily invariant norm, the expected relation, the default
parameter grid swept by campaigns, and (where one exists) a canonical
equality witness.  Inequalities are registered in the form that is both
provable by the factorization machinery and numerically sound; places
where a traditional printed form had to be corrected are documented in
the case descriptions.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .calculus import (
    TwoSidedOperator,
    apply_calculus,
    dexp,
    induced_norm_p2,
    integral_mean,
    sinhc,
)
from .errors import (
    InvalidParameter,
    NotPositiveDefinite,
    SignatureMismatch,
    SingularMatrix,
    UnknownCase,
    NoWitness,
)
from .functions import (
    EntireFunctionSpec,
    cosh_fn,
    cpr_constants,
    cpr_function,
    cpr_is_admissible,
    exp_minus,
    gamma_reciprocal_fn,
    sinh_over_z,
)
from .linalg import (
    as_matrix,
    check_hermitian,
    complex_gamma,
    hermitian_eigendecompose,
    matrix_log_positive,
    singular_values,
)
from .norms import NormSpec, norm

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Margin:
    """Evaluated inequality sides with the signed, scale-aware margin."""

    lhs: float
    rhs: float
    signed_margin: float
    scale: float


def make_margin(lhs: float, rhs: float, relation: str) -> Margin:
    signed = lhs - rhs if relation == "ge" else rhs - lhs
    return Margin(lhs=lhs, rhs=rhs, signed_margin=signed, scale=max(lhs, rhs, 1.0))


@dataclass(frozen=True)
class ParamSpec:
    """One scalar parameter: admissible interval and default grid."""

    name: str
    lo: float
    hi: float
    lo_open: bool = False
    hi_open: bool = False

    def contains(self, value: float) -> bool:
        if not np.isfinite(value):
            return False
        above = value > self.lo if self.lo_open else value >= self.lo
        below = value < self.hi if self.hi_open else value <= self.hi
        return above and below

    def describe(self) -> str:
        return f"{self.name} in {'(' if self.lo_open else '['}{self.lo:g}, " \
               f"{self.hi:g}{')' if self.hi_open else ']'}"


@dataclass(frozen=True)
class InequalityCase:
    """One registered inequality with its evaluators and metadata."""

    id: str
    description: str
    relation: str  # 'ge' | 'le'
    signature: tuple  # ((name, kind), ...); kind: hermitian|positive|invertible|general|ideal
    params: tuple = ()  # ParamSpec, ...
    param_grid: tuple = ({},)  # dicts cycled by the campaign
    evaluator: Callable = None
    witness: Optional[Callable] = None
    norms: Optional[tuple] = None  # restriction; None = full sweep
    search_check: Optional[Callable] = None  # looser gate for falsification runs

    def validate_params(self, params: dict, mode: str = "verify") -> None:
        names = {p.name for p in self.params}
        extra = set(params) - names
        if extra:
            raise InvalidParameter(f"{self.id}: unknown parameters {sorted(extra)}")
        missing = names - set(params)
        if missing:
            raise InvalidParameter(f"{self.id}: missing parameters {sorted(missing)}")
        if mode == "search" and self.search_check is not None:
            self.search_check(params)
            return
        for p in self.params:
            if not p.contains(params[p.name]):
                raise InvalidParameter(
                    f"{self.id}: {p.name}={params[p.name]:g} outside {p.describe()}"
                )


def _validate_inputs(case: InequalityCase, inputs: dict) -> dict:
    got = set(inputs)
    want = {name for name, _ in case.signature}
    if got != want:
        raise SignatureMismatch(
            f"{case.id}: expected inputs {sorted(want)}, got {sorted(got)}"
        )
    clean = {}
    dims = {}
    for name, kind in case.signature:
        m = as_matrix(inputs[name])
        if kind in ("hermitian", "positive", "invertible") and m.shape[0] != m.shape[1]:
            raise SignatureMismatch(f"{case.id}: {name} must be square")
        if kind == "hermitian":
            m = check_hermitian(m)
        elif kind == "positive":
            m = check_hermitian(m)
            if np.linalg.eigvalsh(m)[0] <= 0.0:
                raise NotPositiveDefinite(f"{case.id}: {name} must be positive definite")
        elif kind == "invertible":
            s = singular_values(m)
            if s[-1] < 1e-10 * s[0]:
                raise SingularMatrix(f"{case.id}: {name} is numerically singular")
        dims[name] = m.shape
        clean[name] = m
    return clean


# ---------------------------------------------------------------------------
# shared evaluator helpers

def _fmat(dec, f) -> np.ndarray:
    u = dec.unitary
    return (u * np.asarray(f(dec.eigenvalues), dtype=np.complex128)) @ u.conj().T


def _power(dec, t: float) -> np.ndarray:
    return _fmat(dec, lambda w: np.power(w.astype(np.complex128), t))


def _heinz_sum(da, db, t: float, T: np.ndarray) -> np.ndarray:
    return _power(da, 1 - t) @ T @ _power(db, t) + _power(da, t) @ T @ _power(db, 1 - t)


def _heinz_diff(da, db, t: float, T: np.ndarray) -> np.ndarray:
    return _power(da, 1 - t) @ T @ _power(db, t) - _power(da, t) @ T @ _power(db, 1 - t)


def _log_of_positive(dec):
    if dec.eigenvalues[-1] <= 0.0:
        raise NotPositiveDefinite("input must be positive definite")
    return _fmat(dec, np.log)


_W2 = np.array([[1.0, 0.5 - 0.25j], [-0.75j, 2.0]])
_H2 = np.array([[1.0, 0.5 + 0.5j], [0.5 - 0.5j, -1.0]])
_Z2 = np.zeros((2, 2))
_I2 = np.eye(2)


# ---------------------------------------------------------------------------
# evaluators (each returns (lhs, rhs) as plain floats)

def _ev_cpr_general(inp, par, spec):
    r, theta = par["r"], par["theta"]
    f0 = cmath.exp(1j * theta) * (r + 1.0) + 1.0
    b = r * (1.0 - math.cos(theta)) / abs(f0) ** 2
    op = TwoSidedOperator.from_matrices(inp["X"], inp["Y"], 1)
    lhs = norm(apply_calculus(
        lambda x: cmath.exp(1j * theta) * (r + np.exp(x)) + np.exp(-x), op, inp["T"]
    ), spec)
    rhs = abs(f0) * norm(apply_calculus(lambda x: np.exp(b * x), op, inp["T"]), spec)
    return lhs, rhs


def _cpr_general_verify(par):
    r, theta = par["r"], par["theta"]
    if not cpr_is_admissible(r, theta):
        raise InvalidParameter(
            f"cpr_general: (r={r:g}, theta={theta:g}) has no purely imaginary "
            "root system (admissible only for theta=0 or r=0)"
        )
    if abs(cmath.exp(1j * theta) * (r + 1.0) + 1.0) <= 1e-12:
        raise InvalidParameter(
            "cpr_general: degenerate point handled by the exception cases"
        )


def _cpr_general_search(par):
    r, theta = par["r"], par["theta"]
    if not (-2.0 <= r <= 2.0):
        raise InvalidParameter(f"cpr_general: r={r:g} outside [-2, 2]")
    if not (0.0 <= theta < TWO_PI):
        raise InvalidParameter(f"cpr_general: theta={theta:g} outside [0, 2pi)")
    if abs(cmath.exp(1j * theta) * (r + 1.0) + 1.0) <= 1e-12:
        raise InvalidParameter("cpr_general: degenerate point")


def _ev_cpr_sinh_exception(inp, par, spec):
    op = TwoSidedOperator.from_matrices(inp["X"], inp["Y"], -1)
    lhs = norm(apply_calculus(lambda x: 2.0 * np.sinh(x), op, inp["T"]), spec)
    rhs = 2.0 * norm(inp["X"] @ inp["T"] - inp["T"] @ inp["Y"], spec)
    return lhs, rhs


def _ev_cpr_cosh_exception(inp, par, spec):
    X, Y, T = inp["X"], inp["Y"], inp["T"]
    op = TwoSidedOperator.from_matrices(X, Y, -1)
    lhs = norm(apply_calculus(lambda x: 2.0 * np.cosh(x) - 2.0, op, T), spec)
    rhs = norm(X @ X @ T - 2.0 * X @ T @ Y + T @ Y @ Y, spec)
    return lhs, rhs


def _ev_cpr_invertible(inp, par, spec):
    theta = par["theta"]
    S, R, T = inp["S"], inp["R"], inp["T"]
    lhs = norm(
        cmath.exp(1j * theta) * S @ T @ np.linalg.inv(R)
        + np.linalg.inv(S.conj().T) @ T @ R.conj().T,
        spec,
    )
    rhs = math.sqrt(2.0 * (1.0 + math.cos(theta))) * norm(T, spec)
    return lhs, rhs


def _ev_agm(inp, par, spec):
    A, B, T = inp["A"], inp["B"], inp["T"]
    lhs = norm(A @ A.conj().T @ T + T @ B @ B.conj().T, spec)
    rhs = 2.0 * norm(A.conj().T @ T @ B, spec)
    return lhs, rhs


def _ev_zhan(inp, par, spec):
    r = par["r"]
    op = TwoSidedOperator.from_matrices(inp["X"], inp["Y"], 1)
    lhs = norm(apply_calculus(lambda x: r + 2.0 * np.cosh(x), op, inp["T"]), spec)
    rhs = abs(r + 2.0) * norm(inp["T"], spec)
    return lhs, rhs


def _zhan_search(par):
    if not np.isfinite(par["r"]):
        raise InvalidParameter("zhan: r must be finite")


def _ev_exp_minus_id(inp, par, spec):
    theta = par["theta"]
    op = TwoSidedOperator.from_matrices(inp["X"], inp["Y"], -1)
    T = inp["T"]
    if theta <= 1e-12:
        lhs = norm(apply_calculus(
            lambda x: 2.0 * np.exp(x / 2.0) * np.sinh(x / 2.0), op, T), spec)
        rhs = norm(apply_calculus(lambda x: x * np.exp(x / 2.0), op, T), spec)
    else:
        phase = cmath.exp(1j * theta)
        lhs = norm(apply_calculus(lambda x: np.exp(x) - phase, op, T), spec)
        rhs = math.sqrt(2.0 * (1.0 - math.cos(theta))) * norm(
            apply_calculus(lambda x: np.exp(x / 2.0), op, T), spec)
    return lhs, rhs


def _ev_sinh_lower(inp, par, spec):
    X, Y, T = inp["X"], inp["Y"], inp["T"]
    dx = hermitian_eigendecompose(X)
    dy = hermitian_eigendecompose(Y)
    lhs = norm(
        _fmat(dx, np.sinh) @ T @ _fmat(dy, np.cosh)
        - _fmat(dx, np.cosh) @ T @ _fmat(dy, np.sinh),
        spec,
    )
    rhs = norm(X @ T - T @ Y, spec)
    return lhs, rhs


def _sinh_s_over_s(s: float):
    if s == 0.0:
        return lambda x: np.asarray(x, dtype=float)
    return lambda x: np.sinh(s * x) / s


def _sign_of(par: dict) -> int:
    sign = par["sign"]
    if sign not in (1, -1, 1.0, -1.0):
        raise InvalidParameter(f"sign must be +1 or -1, got {sign}")
    return int(sign)


def _ev_ratio_sinh(inp, par, spec):
    s, sign = par["s"], _sign_of(par)
    op = TwoSidedOperator.from_matrices(inp["X"], inp["Y"], sign)
    lhs = norm(apply_calculus(_sinh_s_over_s(s), op, inp["T"]), spec)
    rhs = norm(apply_calculus(np.sinh, op, inp["T"]), spec)
    return lhs, rhs


def _ev_ratio_cosh(inp, par, spec):
    s, sign = par["s"], _sign_of(par)
    op = TwoSidedOperator.from_matrices(inp["X"], inp["Y"], sign)
    lhs = norm(apply_calculus(lambda x: np.cosh(s * x), op, inp["T"]), spec)
    rhs = norm(apply_calculus(np.cosh, op, inp["T"]), spec)
    return lhs, rhs


def _ev_ratio_sinh_cosh(inp, par, spec):
    s, r_, sign = par["s"], par["r"], _sign_of(par)
    if s > r_:
        raise InvalidParameter(f"ratio_sinh_cosh: needs s <= r, got s={s}, r={r_}")
    op = TwoSidedOperator.from_matrices(inp["X"], inp["Y"], sign)
    lhs = norm(apply_calculus(_sinh_s_over_s(s), op, inp["T"]), spec)
    rhs = norm(apply_calculus(lambda x: x * np.cosh(r_ * x), op, inp["T"]), spec)
    return lhs, rhs


def _ev_ratio_reverse(inp, par, spec):
    s, r_, sign = par["s"], par["r"], _sign_of(par)
    if 2.0 * r_ > s:
        raise InvalidParameter(f"ratio_reverse: needs 2r <= s, got s={s}, r={r_}")
    op = TwoSidedOperator.from_matrices(inp["X"], inp["Y"], sign)
    lhs = norm(apply_calculus(lambda x: s * x * np.cosh(r_ * x), op, inp["T"]), spec)
    rhs = norm(apply_calculus(lambda x: np.sinh(s * x), op, inp["T"]), spec)
    return lhs, rhs


def _ev_heinz_sum(inp, par, spec):
    t = par["t"]
    da = hermitian_eigendecompose(inp["A"])
    db = hermitian_eigendecompose(inp["B"])
    T = inp["T"]
    lhs = norm(_heinz_sum(da, db, t, T), spec)
    rhs = norm(inp["A"] @ T + T @ inp["B"], spec)
    return lhs, rhs


def _ev_heinz_diff(inp, par, spec):
    t = par["t"]
    da = hermitian_eigendecompose(inp["A"])
    db = hermitian_eigendecompose(inp["B"])
    T = inp["T"]
    lhs = norm(_heinz_diff(da, db, t, T), spec)
    rhs = abs(2.0 * t - 1.0) * norm(inp["A"] @ T - T @ inp["B"], spec)
    return lhs, rhs


def _ev_means_left(inp, par, spec):
    t = par["t"]
    da = hermitian_eigendecompose(inp["A"])
    db = hermitian_eigendecompose(inp["B"])
    T = inp["T"]
    lhs = norm(_power(da, 0.5) @ T @ _power(db, 0.5), spec)
    rhs = 0.5 * norm(_heinz_sum(da, db, t, T), spec)
    return lhs, rhs


def _mean_integral(inp) -> np.ndarray:
    da = hermitian_eigendecompose(inp["A"])
    db = hermitian_eigendecompose(inp["B"])
    return integral_mean(_log_of_positive(da), _log_of_positive(db), inp["T"])


def _ev_means_mid(inp, par, spec):
    t = par["t"]
    da = hermitian_eigendecompose(inp["A"])
    db = hermitian_eigendecompose(inp["B"])
    lhs = 0.5 * norm(_heinz_sum(da, db, t, inp["T"]), spec)
    rhs = norm(_mean_integral(inp), spec)
    return lhs, rhs


def _means_mid_search(par):
    if not (0.0 <= par["t"] <= 1.0):
        raise InvalidParameter("means_chain_mid: t outside [0, 1]")


def _ev_means_right(inp, par, spec):
    lhs = norm(_mean_integral(inp), spec)
    rhs = 0.5 * norm(inp["A"] @ inp["T"] + inp["T"] @ inp["B"], spec)
    return lhs, rhs


def _ev_emi(inp, par, spec):
    X, Y = inp["X"], inp["Y"]
    dx = hermitian_eigendecompose(X)
    half = _fmat(dx, lambda w: np.exp(-w / 2.0))
    lhs = norm(half @ dexp(X, Y) @ half, spec)
    rhs = norm(Y, spec)
    return lhs, rhs


def _ev_sin_upper(inp, par, spec):
    X, Y, T = inp["X"], inp["Y"], inp["T"]
    dx = hermitian_eigendecompose(X)
    dy = hermitian_eigendecompose(Y)
    lhs = norm(
        _fmat(dx, np.sin) @ T @ _fmat(dy, np.cos)
        - _fmat(dx, np.cos) @ T @ _fmat(dy, np.sin),
        spec,
    )
    rhs = norm(X @ T - T @ Y, spec)
    return lhs, rhs


def _ev_tan_roots(inp, par, spec):
    X, Y, T = inp["X"], inp["Y"], inp["T"]
    op = TwoSidedOperator.from_matrices(X, Y, -1)
    lhs = norm(apply_calculus(
        lambda x: 2.0 * np.cosh(x) - 2.0 * sinhc(x), op, T), spec)
    rhs = (2.0 / 3.0) * norm(X @ X @ T - 2.0 * X @ T @ Y + T @ Y @ Y, spec)
    return lhs, rhs


def _ev_gamma_contraction(inp, par, spec):
    X, T = inp["X"], inp["T"]
    dx = hermitian_eigendecompose(X)
    vals = np.array([complex_gamma(1.0 + 1j * lam) for lam in dx.eigenvalues])
    factor = (dx.unitary * vals) @ dx.unitary.conj().T
    lhs = norm(factor @ T, spec)
    rhs = norm(T, spec)
    return lhs, rhs


def _abs_lipschitz_sides(inp, spec):
    S, R, T = inp["S"], inp["R"], inp["T"]
    lhs = norm(S @ T @ np.linalg.inv(R) - np.linalg.inv(S.conj().T) @ T @ R.conj().T, spec)
    sum_norm = norm(S @ T @ np.linalg.inv(R) + np.linalg.inv(S.conj().T) @ T @ R.conj().T, spec)
    dS = hermitian_eigendecompose(S.conj().T @ S)
    dR = hermitian_eigendecompose(R.conj().T @ R)
    x = _log_of_positive(dS) / 2.0  # log of the right polar positive part
    y = _log_of_positive(dR) / 2.0
    return lhs, sum_norm, x, y


def _ev_abs_lipschitz_p2(inp, par, spec):
    lhs, sum_norm, x, y = _abs_lipschitz_sides(inp, spec)
    op = TwoSidedOperator.from_matrices(x, y, -1)
    return lhs, induced_norm_p2(np.tanh, op) * sum_norm


def _ev_abs_lipschitz_bound(inp, par, spec):
    lhs, sum_norm, x, y = _abs_lipschitz_sides(inp, spec)
    mult = float(np.max(np.abs(np.linalg.eigvalsh(x)))
                 + np.max(np.abs(np.linalg.eigvalsh(y))))
    return lhs, mult * sum_norm


def _ev_lowner_heinz(inp, par, spec):
    t = par["t"]
    X, Y = inp["X"], inp["Y"]
    dx = hermitian_eigendecompose(X)
    dy = hermitian_eigendecompose(Y)

    def log_word(tau: float) -> np.ndarray:
        e = _fmat(dx, lambda w: np.exp(-tau * w / 2.0))
        inner = e @ _fmat(dy, lambda w: np.exp(tau * w)) @ e
        return _log_of_positive(hermitian_eigendecompose(inner))

    lhs = norm(log_word(t), spec)
    rhs = t * norm(log_word(1.0), spec)
    return lhs, rhs


#: Catalog functions with F(0) != 0 used by the invertibility and scaling
#: cases; indexed by the integer parameter ``fn``.
def _nonvanishing_catalog() -> tuple:
    entries = [sinh_over_z(), cosh_fn(), gamma_reciprocal_fn()]
    for theta in (math.pi / 2.0, math.pi, 3.0 * math.pi / 2.0):
        entries.append(exp_minus(theta))
    for r in (-1.0, 0.0, 1.0, 2.0):
        entries.append(cpr_function(r, 0.0))
    for theta in (math.pi / 4.0, math.pi / 2.0, 3.0 * math.pi / 4.0,
                  5.0 * math.pi / 4.0, 3.0 * math.pi / 2.0, 7.0 * math.pi / 4.0):
        entries.append(cpr_function(0.0, theta))
    return tuple(entries)


_NONVANISHING: tuple = _nonvanishing_catalog()


def nonvanishing_function(index: int) -> EntireFunctionSpec:
    """Indexed access to the F(0) != 0 catalog list used in parameter grids."""
    idx = int(index)
    if not (0 <= idx < len(_NONVANISHING)):
        raise InvalidParameter(f"fn index {index} outside 0..{len(_NONVANISHING) - 1}")
    return _NONVANISHING[idx]


def _ev_invertibility_p2(inp, par, spec):
    fn = nonvanishing_function(par["fn"])
    op = TwoSidedOperator.from_matrices(inp["X"], inp["Y"], 1)
    lam = fn.leading
    b = fn.exponent.real if isinstance(fn.exponent, complex) else float(fn.exponent)
    lhs = induced_norm_p2(lambda x: 1.0 / fn.closed_form(x), op)
    ex = float(np.max(np.exp(-b * op.left.eigenvalues)))
    ey = float(np.max(np.exp(-b * op.right.eigenvalues)))
    rhs = ex * ey / abs(lam)
    return lhs, rhs


def _ev_ratio_scaling(inp, par, spec):
    s = par["s"]
    fn = nonvanishing_function(par["fn"])
    b = fn.exponent.real if isinstance(fn.exponent, complex) else float(fn.exponent)
    op = TwoSidedOperator.from_matrices(inp["X"], inp["Y"], 1)
    lhs = norm(apply_calculus(
        lambda x: fn.closed_form(s * x) / fn.closed_form(x), op, inp["T"]), spec)
    rhs = norm(apply_calculus(lambda x: np.exp(b * (s - 1.0) * x), op, inp["T"]), spec)
    return lhs, rhs


#: Frozen interlaced root configurations for the generic comparison case:
#: denominators w_k, numerator roots z_k = ratio_k * w_k with ratios > 1.
_INTERLACED_VARIANTS = (
    (np.array([0.8, 1.9, 3.1, 4.4, 6.0, 7.7]),
     np.array([1.6, 1.3, 1.5, 1.2, 1.4, 1.1])),
    (np.array([0.5, 1.2, 2.5, 5.0]), np.array([1.9, 1.8, 1.6, 1.5])),
    (np.array([1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0]),
     np.array([1.25, 1.25, 1.25, 1.25, 1.25, 1.25, 1.25, 1.25])),
    (np.array([0.3, 0.9, 2.7, 8.1]), np.array([1.1, 1.2, 1.3, 1.4])),
    (np.array([2.0, 4.0, 8.0]), np.array([2.0, 1.5, 1.1])),
)


def interlaced_variant(index: int) -> tuple:
    idx = int(index)
    if not (0 <= idx < len(_INTERLACED_VARIANTS)):
        raise InvalidParameter(f"variant index {index} outside "
                               f"0..{len(_INTERLACED_VARIANTS) - 1}")
    w, ratios = _INTERLACED_VARIANTS[idx]
    return w * ratios, w  # (numerator roots z_k, denominator roots w_k)


def _paired_product(roots: np.ndarray):
    def f(x):
        x = np.asarray(x, dtype=float)
        out = np.ones_like(x)
        for a in roots:
            out = out * (1.0 + (x * x) / (a * a))
        return out
    return f


def _ev_interlaced(inp, par, spec):
    z, w = interlaced_variant(par["variant"])
    sign = _sign_of(par)
    op = TwoSidedOperator.from_matrices(inp["X"], inp["Y"], sign)
    lhs = norm(apply_calculus(_paired_product(z), op, inp["T"]), spec)
    rhs = norm(apply_calculus(_paired_product(w), op, inp["T"]), spec)
    return lhs, rhs


# ---------------------------------------------------------------------------
# witnesses (canonical equality inputs)

def _wit_zero_XYT(params):
    return lambda: ({"X": _Z2, "Y": _Z2, "T": _W2.copy()}, dict(params))


def _wit_identity_SRT(params):
    return lambda: ({"S": _I2.astype(complex), "R": _I2.astype(complex),
                     "T": _W2.copy()}, dict(params))


def _wit_cpr_sinhlike():
    return {"X": _H2.copy(), "Y": _H2.copy(), "T": _I2.astype(complex)}, {}


def _wit_heinz(t):
    A = np.diag([1.0, 3.0]).astype(complex)
    B = np.diag([2.0, 0.5]).astype(complex)
    return lambda: ({"A": A, "B": B, "T": _W2.copy()}, {"t": t})


def _wit_identity_ABT(params):
    return lambda: ({"A": _I2.astype(complex), "B": _I2.astype(complex),
                     "T": _W2.copy()}, dict(params))


# ---------------------------------------------------------------------------
# the registry

_THETA_GRID = tuple(k * math.pi / 4.0 for k in range(8))
_T_GRID = (0.0, 0.25, 0.5, 0.75, 1.0)


def _build_registry() -> tuple:
    herm_T = (("X", "hermitian"), ("Y", "hermitian"), ("T", "ideal"))
    pos_T = (("A", "positive"), ("B", "positive"), ("T", "ideal"))
    inv_T = (("S", "invertible"), ("R", "invertible"), ("T", "ideal"))

    cpr_grid = tuple(
        {"r": r, "theta": 0.0} for r in (-1.0, 0.0, 1.0, 2.0)
    ) + tuple(
        {"r": 0.0, "theta": th}
        for th in _THETA_GRID[1:] if abs(th - math.pi) > 1e-12
    )

    ratio_pair_grid = tuple(
        {"s": s, "sign": sg} for s in _T_GRID for sg in (1, -1)
    )

    fn_indices = range(len(_NONVANISHING))

    cases = [
        InequalityCase(
            id="cpr_general",
            description=(
                "three-term rotated perturbation: "
                "||e^{it}rT + e^{it}STR^-1 + S^-1TR|| >= |e^{it}(r+1)+1| "
                "||S^b T R^-b|| with S=e^X, R=e^-Y, b = Re alpha; asserted on "
                "the admissible cross theta=0 or r=0 where the root system "
                "is purely imaginary"
            ),
            relation="ge",
            signature=herm_T,
            params=(ParamSpec("r", -2.0, 2.0), ParamSpec("theta", 0.0, TWO_PI, hi_open=True)),
            param_grid=cpr_grid,
            evaluator=_ev_cpr_general,
            witness=_wit_zero_XYT({"r": 1.0, "theta": 0.0}),
            search_check=_cpr_general_search,
        ),
        InequalityCase(
            id="cpr_sinh_exception",
            description=(
                "degenerate three-term point (r,theta)=(0,pi): "
                "||STR^-1 - S^-1TR|| >= 2||XT - TY|| with S=e^X, R=e^Y"
            ),
            relation="ge",
            signature=herm_T,
            evaluator=_ev_cpr_sinh_exception,
            witness=lambda: _wit_cpr_sinhlike(),
        ),
        InequalityCase(
            id="cpr_cosh_exception",
            description=(
                "degenerate three-term point (r,theta)=(-2,0), double root at "
                "the origin: ||STR^-1 + S^-1TR - 2T|| >= ||X^2 T - 2XTY + T Y^2|| "
                "with S=e^X, R=e^Y (second-order form; the first-order variant "
                "2||XT-TY|| fails already for scalars)"
            ),
            relation="ge",
            signature=herm_T,
            evaluator=_ev_cpr_cosh_exception,
            witness=lambda: _wit_cpr_sinhlike(),
        ),
        InequalityCase(
            id="cpr_invertible",
            description=(
                "merely invertible S, R via polar reduction: "
                "||e^{it}STR^-1 + (S*)^-1TR*|| >= sqrt(2(1+cos t)) ||T||"
            ),
            relation="ge",
            signature=inv_T,
            params=(ParamSpec("theta", 0.0, TWO_PI, hi_open=True),),
            param_grid=tuple({"theta": th} for th in _THETA_GRID
                             if abs(th - math.pi) > 1e-12),
            evaluator=_ev_cpr_invertible,
            witness=_wit_identity_SRT({"theta": 0.0}),
        ),
        InequalityCase(
            id="agm",
            description=(
                "arithmetic-geometric mean bound for arbitrary (possibly "
                "singular) A, B: ||AA*T + TBB*|| >= 2||A*TB||"
            ),
            relation="ge",
            signature=(("A", "general"), ("B", "general"), ("T", "ideal")),
            evaluator=_ev_agm,
            witness=_wit_identity_ABT({}),
        ),
        InequalityCase(
            id="zhan",
            description=(
                "shifted two-sided bound: ||rT + STR^-1 + S^-1TR|| >= "
                "|r+2| ||T|| for r in (-2, 2]; falsifiable outside the range"
            ),
            relation="ge",
            signature=herm_T,
            params=(ParamSpec("r", -2.0, 2.0, lo_open=True),),
            param_grid=tuple({"r": r} for r in (-1.0, 0.0, 1.0, 2.0)),
            evaluator=_ev_zhan,
            witness=_wit_zero_XYT({"r": 0.0}),
            search_check=_zhan_search,
        ),
        InequalityCase(
            id="exp_minus_id",
            description=(
                "exponential-minus-rotation family with S=e^X, R=e^Y: at "
                "theta=0, ||STR^-1 - T|| >= ||S^1/2(XT-TY)R^-1/2||; otherwise "
                "||STR^-1 - e^{it}T|| >= sqrt(2(1-cos t)) ||S^1/2 T R^-1/2|| "
                "(exponent Re alpha = 1/2 for every theta)"
            ),
            relation="ge",
            signature=herm_T,
            params=(ParamSpec("theta", 0.0, TWO_PI, hi_open=True),),
            param_grid=tuple({"theta": th} for th in _THETA_GRID),
            evaluator=_ev_exp_minus_id,
            witness=_wit_zero_XYT({"theta": math.pi / 2.0}),
        ),
        InequalityCase(
            id="sinh_lower",
            description=(
                "hyperbolic expansivity: ||sinh(X)T cosh(Y) - cosh(X)T sinh(Y)||"
                " >= ||XT - TY||"
            ),
            relation="ge",
            signature=herm_T,
            evaluator=_ev_sinh_lower,
            witness=lambda: _wit_cpr_sinhlike(),
        ),
        InequalityCase(
            id="ratio_sinh",
            description="contraction family ||sinh(sA)T||/s <= ||sinh(A)T||, s in [0,1]",
            relation="le",
            signature=herm_T,
            params=(ParamSpec("s", 0.0, 1.0), ParamSpec("sign", -1, 1)),
            param_grid=ratio_pair_grid,
            evaluator=_ev_ratio_sinh,
            witness=_wit_zero_XYT({"s": 1.0, "sign": 1}),
        ),
        InequalityCase(
            id="ratio_cosh",
            description="contraction family ||cosh(sA)T|| <= ||cosh(A)T||, s in [0,1]",
            relation="le",
            signature=herm_T,
            params=(ParamSpec("s", 0.0, 1.0), ParamSpec("sign", -1, 1)),
            param_grid=ratio_pair_grid,
            evaluator=_ev_ratio_cosh,
            witness=_wit_zero_XYT({"s": 1.0, "sign": 1}),
        ),
        InequalityCase(
            id="ratio_sinh_cosh",
            description=(
                "contraction family ||sinh(sA)T||/s <= ||A cosh(rA)T|| for "
                "0 <= s <= r (s=0 read as ||AT||)"
            ),
            relation="le",
            signature=herm_T,
            params=(ParamSpec("s", 0.0, 1.0), ParamSpec("r", 0.0, 1.0),
                    ParamSpec("sign", -1, 1)),
            param_grid=tuple(
                {"s": s, "r": r_, "sign": sg}
                for (s, r_) in ((0.0, 0.0), (0.0, 0.5), (0.25, 0.5),
                                (0.5, 0.5), (0.5, 1.0), (1.0, 1.0))
                for sg in (1, -1)
            ),
            evaluator=_ev_ratio_sinh_cosh,
            witness=_wit_zero_XYT({"s": 0.0, "r": 0.0, "sign": 1}),
        ),
        InequalityCase(
            id="ratio_reverse",
            description=(
                "reverse contraction family ||sA cosh(rA)T|| <= ||sinh(sA)T|| "
                "for 0 <= 2r <= s"
            ),
            relation="le",
            signature=herm_T,
            params=(ParamSpec("s", 0.0, 1.0), ParamSpec("r", 0.0, 0.5),
                    ParamSpec("sign", -1, 1)),
            param_grid=tuple(
                {"s": s, "r": r_, "sign": sg}
                for (s, r_) in ((0.5, 0.0), (0.5, 0.25), (1.0, 0.25), (1.0, 0.5))
                for sg in (1, -1)
            ),
            evaluator=_ev_ratio_reverse,
            witness=_wit_zero_XYT({"s": 0.5, "r": 0.0, "sign": 1}),
        ),
        InequalityCase(
            id="heinz_sum",
            description="Heinz mean bound ||A^{1-t}TB^t + A^tTB^{1-t}|| <= ||AT + TB||",
            relation="le",
            signature=pos_T,
            params=(ParamSpec("t", 0.0, 1.0),),
            param_grid=tuple({"t": t} for t in _T_GRID),
            evaluator=_ev_heinz_sum,
            witness=_wit_identity_ABT({"t": 0.5}),
        ),
        InequalityCase(
            id="heinz_diff",
            description=(
                "Heinz difference bound ||A^{1-t}TB^t - A^tTB^{1-t}|| <= "
                "|2t-1| ||AT - TB|| (coefficient in absolute value so both "
                "halves of [0,1] are covered)"
            ),
            relation="le",
            signature=pos_T,
            params=(ParamSpec("t", 0.0, 1.0),),
            param_grid=tuple({"t": t} for t in _T_GRID),
            evaluator=_ev_heinz_diff,
            witness=_wit_heinz(1.0),
        ),
        InequalityCase(
            id="means_chain_left",
            description="||A^1/2 T B^1/2|| <= (1/2)||A^{1-t}TB^t + A^tTB^{1-t}||",
            relation="le",
            signature=pos_T,
            params=(ParamSpec("t", 0.0, 1.0),),
            param_grid=tuple({"t": t} for t in _T_GRID),
            evaluator=_ev_means_left,
            witness=_wit_heinz(0.5),
        ),
        InequalityCase(
            id="means_chain_mid",
            description=(
                "(1/2)||A^{1-t}TB^t + A^tTB^{1-t}|| <= ||int_0^1 A^{1-s}TB^s ds||"
                " for t in [1/4, 3/4] (sharp interval; outside it the margin "
                "goes negative and is only recorded)"
            ),
            relation="le",
            signature=pos_T,
            params=(ParamSpec("t", 0.25, 0.75),),
            param_grid=tuple({"t": t} for t in (0.25, 0.4, 0.5, 0.6, 0.75)),
            evaluator=_ev_means_mid,
            witness=_wit_identity_ABT({"t": 0.5}),
            search_check=_means_mid_search,
        ),
        InequalityCase(
            id="means_chain_right",
            description="||int_0^1 A^{1-s}TB^s ds|| <= (1/2)||AT + TB||",
            relation="le",
            signature=pos_T,
            evaluator=_ev_means_right,
            witness=_wit_identity_ABT({}),
        ),
        InequalityCase(
            id="emi",
            description=(
                "exponential metric increasing property: "
                "||e^{-X/2} dexp_X(Y) e^{-X/2}|| >= ||Y||"
            ),
            relation="ge",
            signature=(("X", "hermitian"), ("Y", "hermitian")),
            evaluator=_ev_emi,
            witness=lambda: ({"X": _Z2, "Y": _H2.copy()}, {}),
        ),
        InequalityCase(
            id="sin_upper",
            description=(
                "trigonometric contraction for Hermitian arguments: "
                "||sin(X)T cos(Y) - cos(X)T sin(Y)|| <= ||XT - TY||"
            ),
            relation="le",
            signature=herm_T,
            evaluator=_ev_sin_upper,
            witness=lambda: _wit_cpr_sinhlike(),
        ),
        InequalityCase(
            id="tan_roots",
            description=(
                "tan(x)=x root family: ||STR^-1 + S^-1TR - "
                "2 int_0^1 S^{2t-1}TR^{1-2t} dt|| >= (2/3)||X^2T - 2XTY + TY^2|| "
                "with S=e^X, R=e^Y"
            ),
            relation="ge",
            signature=herm_T,
            evaluator=_ev_tan_roots,
            witness=_wit_zero_XYT({}),
        ),
        InequalityCase(
            id="gamma_contraction",
            description=(
                "gamma contraction for skew-adjoint H=iX: ||Gamma(H+1)T|| <= ||T||"
            ),
            relation="le",
            signature=(("X", "hermitian"), ("T", "ideal")),
            evaluator=_ev_gamma_contraction,
            witness=lambda: ({"X": _Z2, "T": _W2.copy()}, {}),
        ),
        InequalityCase(
            id="abs_lipschitz_p2",
            description=(
                "absolute-value Lipschitz bound with the exact Hilbert-Schmidt "
                "multiplier: ||STR^-1 - (S*)^-1TR*||_2 <= max|tanh(x_i - y_j)| "
                "||STR^-1 + (S*)^-1TR*||_2, |S|=e^X, |R|=e^Y (right polar)"
            ),
            relation="le",
            signature=inv_T,
            evaluator=_ev_abs_lipschitz_p2,
            witness=_wit_identity_SRT({}),
            norms=("s2",),
        ),
        InequalityCase(
            id="abs_lipschitz_bound",
            description=(
                "absolute-value Lipschitz bound with the additive multiplier "
                "||X|| + ||Y|| valid for every norm in the sweep"
            ),
            relation="le",
            signature=inv_T,
            evaluator=_ev_abs_lipschitz_bound,
            witness=_wit_identity_SRT({}),
        ),
        InequalityCase(
            id="lowner_heinz",
            description=(
                "log-word convexity: ||log(e^{-tX/2}e^{tY}e^{-tX/2})|| <= "
                "t ||log(e^{-X/2}e^{Y}e^{-X/2})||, t in [0,1]"
            ),
            relation="le",
            signature=(("X", "hermitian"), ("Y", "hermitian")),
            params=(ParamSpec("t", 0.0, 1.0),),
            param_grid=tuple({"t": t} for t in _T_GRID),
            evaluator=_ev_lowner_heinz,
            witness=lambda: ({"X": _H2.copy(), "Y": _H2.copy() * 0.5}, {"t": 1.0}),
        ),
        InequalityCase(
            id="invertibility_bound_p2",
            description=(
                "inverse bound on the Hilbert-Schmidt ideal: max 1/|F(x_i+y_j)| "
                "<= |F(0)|^-1 ||e^{-bX}|| ||e^{-bY}|| over the nonvanishing "
                "catalog (fn indexes the function list)"
            ),
            relation="le",
            signature=(("X", "hermitian"), ("Y", "hermitian")),
            params=(ParamSpec("fn", 0, len(_NONVANISHING) - 1),),
            param_grid=tuple({"fn": float(i)} for i in fn_indices),
            evaluator=_ev_invertibility_p2,
            witness=lambda: ({"X": _Z2, "Y": _Z2}, {"fn": 0.0}),
            norms=("s2",),
        ),
        InequalityCase(
            id="ratio_scaling",
            description=(
                "scaling comparison ||F(sA)F(A)^-1 T|| <= ||e^{b(s-1)A}T|| for "
                "s in (0,1), b = Re alpha(F), over the nonvanishing catalog"
            ),
            relation="le",
            signature=herm_T,
            params=(ParamSpec("s", 0.0, 1.0, lo_open=True, hi_open=True),
                    ParamSpec("fn", 0, len(_NONVANISHING) - 1)),
            param_grid=tuple(
                {"s": s, "fn": float(i)}
                for s in (0.2, 0.4, 0.6, 0.8)
                for i in (0, 1, 2, 4, 7, 9)
            ),
            evaluator=_ev_ratio_scaling,
            witness=lambda: ({"X": _Z2, "Y": _Z2, "T": _W2.copy()},
                             {"s": 0.5, "fn": 0.0}),
        ),
        InequalityCase(
            id="interlaced_generic",
            description=(
                "generic interlaced finite products: ||F(A)T|| <= ||G(A)T|| "
                "when each root of F dominates its paired root of G "
                "(variant indexes frozen interlaced configurations)"
            ),
            relation="le",
            signature=herm_T,
            params=(ParamSpec("variant", 0, len(_INTERLACED_VARIANTS) - 1),
                    ParamSpec("sign", -1, 1)),
            param_grid=tuple(
                {"variant": float(v), "sign": sg}
                for v in range(len(_INTERLACED_VARIANTS)) for sg in (1, -1)
            ),
            evaluator=_ev_interlaced,
            witness=_wit_zero_XYT({"variant": 0.0, "sign": 1}),
        ),
    ]
    return tuple(cases)


_REGISTRY: tuple = _build_registry()
_BY_ID: dict = {c.id: c for c in _REGISTRY}


def registry() -> tuple:
    """All registered inequality cases, in registration order."""
    return _REGISTRY


def get_case(case_id: str) -> InequalityCase:
    try:
        return _BY_ID[case_id]
    except KeyError:
        raise UnknownCase(f"no case named {case_id!r}") from None


def evaluate_case(
    case_id: str,
    inputs: dict,
    params: dict,
    spec: NormSpec,
    mode: str = "verify",
) -> Margin:
    """Evaluate one case on explicit inputs and return its margin."""
    case = get_case(case_id)
    case.validate_params(params, mode=mode)
    clean = _validate_inputs(case, inputs)
    lhs, rhs = case.evaluator(clean, params, spec)
    if not (np.isfinite(lhs) and np.isfinite(rhs)):
        raise InvalidParameter(f"{case_id}: non-finite margin sides")
    return make_margin(float(lhs), float(rhs), case.relation)


def equality_audit(case_id: str, spec: Optional[NormSpec] = None) -> Margin:
    """Margin at the case's canonical equality witness (should be ~0)."""
    case = get_case(case_id)
    if case.witness is None:
        raise NoWitness(f"{case_id} has no equality witness")
    if spec is None:
        spec = NormSpec(kind="schatten", p=2)
        if case.norms is not None and "s2" not in case.norms:
            from .norms import parse_norm

            spec = parse_norm(case.norms[0])
    inputs, params = case.witness()
    return evaluate_case(case_id, inputs, params, spec)
