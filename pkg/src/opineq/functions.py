"""Catalog of entire functions with purely imaginary roots.

Each catalog entry carries its closed form, the order of its zero at the
origin, the leading coefficient ``leading = F(z)/z^n`` at 0, the exponent
of the exponential factor, and a generator of the real numbers ``z_k``
parameterizing its root factors ``(1 - i z / z_k) e^{i z / z_k}`` (so the
corresponding root of ``F`` sits at ``-i z_k``).  Symmetric entries list
positive ``z_k`` and implicitly pair them with ``-z_k``; asymmetric
entries list signed ``z_k``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .calculus import sinhc
from .errors import DomainError, InvalidParameter, UnknownFunction
from .linalg import reciprocal_gamma

EULER_GAMMA = float(np.euler_gamma)


@dataclass(frozen=True)
class EntireFunctionSpec:
    """Closed form plus factorization data of one catalog function."""

    id: str
    closed_form: Callable[[np.ndarray], np.ndarray]
    zero_order: int
    leading: complex
    exponent: complex
    roots: Optional[Callable[[int], np.ndarray]]
    symmetric: bool
    _root_cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def has_roots(self) -> bool:
        return self.roots is not None

    def first_roots(self, count: int) -> np.ndarray:
        """First ``count`` root parameters ``z_k`` (cached)."""
        if self.roots is None:
            raise InvalidParameter(
                f"{self.id}: root system is not purely imaginary"
            )
        if count < 1:
            raise InvalidParameter("count must be >= 1")
        have = self._root_cache.get("n", 0)
        if count > have:
            self._root_cache["roots"] = np.asarray(self.roots(count), dtype=float)
            self._root_cache["n"] = count
        return self._root_cache["roots"][:count]


def _bisect(f, lo, hi, iters: int = 80) -> np.ndarray:
    """Vectorized bisection; brackets must change sign."""
    lo = np.asarray(lo, dtype=float).copy()
    hi = np.asarray(hi, dtype=float).copy()
    flo = np.asarray(f(lo), dtype=float)
    for _ in range(iters):
        mid = 0.5 * (lo + hi)
        fm = np.asarray(f(mid), dtype=float)
        same = flo * fm > 0
        lo = np.where(same, mid, lo)
        flo = np.where(same, fm, flo)
        hi = np.where(same, hi, mid)
    return 0.5 * (lo + hi)


def alpha_of(spec: EntireFunctionSpec) -> complex:
    """Exponent by Richardson-extrapolated central differencing.

    Differentiates ``log(F(z)/z^n)`` at the origin with radius 1e-5.
    """
    n = spec.zero_order

    def logval(z: complex) -> complex:
        v = complex(np.asarray(spec.closed_form(np.array([z])))[0])
        v = v / z**n
        if abs(v) < 1e-13:
            raise DomainError(f"{spec.id}: F(z)/z^n vanishes near 0")
        return cmath.log(v)

    def central(h: float) -> complex:
        diff = logval(h) - logval(-h)
        # the principal branch can jump by 2 pi i across the negative axis;
        # the true difference is O(h), so fold the imaginary part back
        diff = complex(diff.real, math.remainder(diff.imag, 2.0 * math.pi))
        return diff / (2.0 * h)

    h = 1e-5
    return (4.0 * central(h / 2.0) - central(h)) / 3.0


def weierstrass_truncated(spec: EntireFunctionSpec, z: complex, terms: int) -> complex:
    """Truncated factorization: prefix times the first ``terms`` root factors.

    Symmetric entries multiply paired factors ``(1 + z^2/z_k^2)`` (the
    compensating exponentials cancel); asymmetric entries multiply the
    literal ``(1 - i z/z_k) e^{i z/z_k}``.
    """
    if terms < 1:
        raise InvalidParameter("terms must be >= 1")
    z = complex(z)
    zs = spec.first_roots(terms).astype(complex)
    prefix = spec.leading * cmath.exp(spec.exponent * z) * z**spec.zero_order
    if spec.symmetric:
        factors = 1.0 + (z * z) / (zs * zs)
    else:
        factors = (1.0 - 1j * z / zs) * np.exp(1j * z / zs)
    return complex(prefix * np.prod(factors))


# ---------------------------------------------------------------------------
# catalog entries


def sinh_over_z() -> EntireFunctionSpec:
    def closed(z):
        return sinhc(np.asarray(z, dtype=np.complex128))

    def roots(count):
        k = np.arange(1, count + 1)
        return _bisect(np.sin, (k - 0.5) * math.pi, (k + 0.5) * math.pi)

    return EntireFunctionSpec(
        id="sinh_over_z", closed_form=closed, zero_order=0,
        leading=1.0, exponent=0.0, roots=roots, symmetric=True,
    )


def cosh_fn() -> EntireFunctionSpec:
    def roots(count):
        k = np.arange(1, count + 1)
        return _bisect(np.cos, (k - 1) * math.pi, k * math.pi)

    return EntireFunctionSpec(
        id="cosh", closed_form=np.cosh, zero_order=0,
        leading=1.0, exponent=0.0, roots=roots, symmetric=True,
    )


def z_cosh_minus_sinh() -> EntireFunctionSpec:
    def closed(z):
        z = np.asarray(z, dtype=np.complex128)
        small = np.abs(z) < 0.1
        zs = np.where(small, 1.0, z)
        direct = zs * np.cosh(zs) - np.sinh(zs)
        z2 = z * z
        # z cosh z - sinh z = z^3/3 (1 + z^2/10 + z^4/280 + z^6/15120 + ...)
        series = (z * z2 / 3.0) * (
            1.0 + z2 / 10.0 + z2 * z2 / 280.0 + z2 * z2 * z2 / 15120.0
        )
        return np.where(small, series, direct)

    def roots(count):
        # k-th root of tan(x) = x lies in (k pi, (k + 1/2) pi)
        k = np.arange(1, count + 1)
        return _bisect(
            lambda x: np.sin(x) - x * np.cos(x),
            k * math.pi + 1e-9,
            (k + 0.5) * math.pi,
        )

    return EntireFunctionSpec(
        id="z_cosh_minus_sinh", closed_form=closed, zero_order=3,
        leading=1.0 / 3.0, exponent=0.0, roots=roots, symmetric=True,
    )


def exp_minus(theta: float) -> EntireFunctionSpec:
    theta = float(theta)
    if not (0.0 <= theta < 2.0 * math.pi):
        raise InvalidParameter(f"theta must lie in [0, 2pi), got {theta}")
    if theta == 0.0:

        def closed(z):
            z = np.asarray(z, dtype=np.complex128)
            return 2.0 * np.exp(z / 2.0) * np.sinh(z / 2.0)

        def roots(count):
            k = np.arange(1, count + 1)
            return _bisect(
                lambda t: np.sin(t / 2.0),
                2.0 * k * math.pi - math.pi,
                2.0 * k * math.pi + math.pi,
            )

        return EntireFunctionSpec(
            id="exp_minus:theta=0", closed_form=closed, zero_order=1,
            leading=1.0, exponent=0.5, roots=roots, symmetric=True,
        )

    phase = cmath.exp(1j * theta)

    def closed(z):
        return np.exp(np.asarray(z, dtype=np.complex128)) - phase

    def roots(count):
        # roots of F at i(theta + 2 pi m); stored root parameters are the
        # negatives, enumerated by increasing magnitude
        ms = _signed_indices(count, lambda m: theta + 2.0 * math.pi * m)
        ts = _bisect(
            lambda t: np.sin((t - theta) / 2.0),
            theta + 2.0 * math.pi * ms - math.pi,
            theta + 2.0 * math.pi * ms + math.pi,
        )
        return -ts

    return EntireFunctionSpec(
        id=f"exp_minus:theta={theta:g}", closed_form=closed, zero_order=0,
        leading=1.0 - phase, exponent=1.0 / (1.0 - phase),
        roots=roots, symmetric=False,
    )


def gamma_reciprocal_fn() -> EntireFunctionSpec:
    def closed(w):
        w = np.asarray(w, dtype=np.complex128)
        flat = [reciprocal_gamma(1.0 + 1j * t) for t in w.ravel()]
        return np.asarray(flat, dtype=np.complex128).reshape(w.shape)

    def roots(count):
        return -np.arange(1.0, count + 1.0)

    return EntireFunctionSpec(
        id="gamma_reciprocal", closed_form=closed, zero_order=0,
        leading=1.0, exponent=1j * EULER_GAMMA, roots=roots, symmetric=False,
    )


def _signed_indices(count: int, value) -> np.ndarray:
    """First ``count`` integers m ordered by |value(m)| (ties: positive first)."""
    span = count + 2
    ms = np.arange(-span, span + 1)
    vals = np.abs([value(m) for m in ms])
    order = np.lexsort((ms < 0, vals))
    return ms[order][:count]


def cpr_is_admissible(r: float, theta: float) -> bool:
    """True when the three-term family has a purely imaginary root system.

    The root condition reduces to ``r e^{i theta/2} + 2 cos(t + theta/2)``
    having a real zero, which forces ``r sin(theta/2) = 0``: the system is
    purely imaginary exactly on the cross ``{theta = 0}`` union ``{r = 0}``
    of the parameter rectangle.
    """
    if not (-2.0 <= r <= 2.0):
        return False
    return abs(r) <= 1e-12 or min(theta, 2.0 * math.pi - theta) <= 1e-12


def cpr_constants(r: float, theta: float) -> dict:
    """Both constant conventions for the three-term family.

    ``c_impl``/``b_impl`` are the factorization-derived values |F(0)| and
    Re(alpha); ``c_printed``/``b_printed`` are the squared-modulus variants
    that circulate in the literature (c_printed = c_impl**2).
    """
    f0 = cmath.exp(1j * theta) * (r + 1.0) + 1.0
    c_impl = abs(f0)
    c_printed = (r + 1.0) ** 2 + 2.0 * (r + 1.0) * math.cos(theta) + 1.0
    b_impl = r * (1.0 - math.cos(theta)) / c_impl**2 if c_impl > 0 else math.nan
    b_printed = (
        r * (1.0 - math.cos(theta)) / c_printed**2 if c_printed > 0 else math.nan
    )
    return {
        "c_impl": c_impl,
        "b_impl": b_impl,
        "c_printed": c_printed,
        "b_printed": b_printed,
    }


def cpr_function(r: float, theta: float) -> EntireFunctionSpec:
    """Three-term family ``e^{i theta}(r + e^z) + e^{-z}``.

    Requires ``r`` in [-2, 2].  The root generator exists only on the
    admissible cross (``theta = 0`` or ``r = 0``); elsewhere the local
    data (zero order, leading, exponent) is still returned with
    ``roots=None``.  At the two degenerate points (0, pi) and (-2, 0) the
    origin becomes a root of order 1 and 2 respectively.
    """
    r = float(r)
    theta = float(theta)
    if not (-2.0 <= r <= 2.0):
        raise InvalidParameter(
            f"r={r} outside [-2, 2]: roots are not purely imaginary"
        )
    if not (0.0 <= theta < 2.0 * math.pi):
        raise InvalidParameter(f"theta must lie in [0, 2pi), got {theta}")
    ident = f"cpr:r={r:g},theta={theta:g}"
    si = math.sin(theta)
    co = math.cos(theta)

    is_sinh_exception = abs(r) <= 1e-12 and abs(theta - math.pi) <= 1e-12
    is_cosh_exception = abs(r + 2.0) <= 1e-12 and min(theta, 2 * math.pi - theta) <= 1e-12

    if is_sinh_exception:
        def closed(z):
            return -2.0 * np.sinh(np.asarray(z, dtype=np.complex128))

        def roots(count):
            k = np.arange(1, count + 1)
            return _bisect(np.sin, (k - 0.5) * math.pi, (k + 0.5) * math.pi)

        return EntireFunctionSpec(
            id=ident, closed_form=closed, zero_order=1, leading=-2.0,
            exponent=0.0, roots=roots, symmetric=True,
        )

    if is_cosh_exception:
        def closed(z):
            s = np.sinh(np.asarray(z, dtype=np.complex128) / 2.0)
            return 4.0 * s * s

        def roots(count):
            # double roots at 2 k pi, each listed twice
            k = np.repeat(np.arange(1, count // 2 + 2), 2)[:count]
            return 2.0 * math.pi * k.astype(float)

        return EntireFunctionSpec(
            id=ident, closed_form=closed, zero_order=2, leading=1.0,
            exponent=0.0, roots=roots, symmetric=True,
        )

    phase = complex(co, si)

    def closed(z):
        z = np.asarray(z, dtype=np.complex128)
        return phase * (r + np.exp(z)) + np.exp(-z)

    f0 = phase * (r + 1.0) + 1.0
    alpha = (phase - 1.0) / f0

    roots: Optional[Callable]
    if abs(si) <= 1e-12 and co > 0:  # theta = 0
        if abs(abs(r) - 2.0) <= 1e-12:  # r = 2: double roots at odd multiples of pi
            def roots(count):
                k = np.repeat(np.arange(0, count // 2 + 2), 2)[:count]
                return math.pi * (2.0 * k + 1.0)
        else:
            def roots(count):
                k = np.arange(0, count)
                return _bisect(
                    lambda t: r + 2.0 * np.cos(t), k * math.pi, (k + 1) * math.pi
                )
        symmetric = True
    elif abs(r) <= 1e-12:  # r = 0, theta not in {0, pi}
        def roots(count):
            ms = _signed_indices(
                count, lambda m: (math.pi - theta) / 2.0 + math.pi * m
            )
            ts = _bisect(
                lambda t: np.cos(t + theta / 2.0),
                (math.pi - theta) / 2.0 + math.pi * ms - math.pi / 2.0,
                (math.pi - theta) / 2.0 + math.pi * ms + math.pi / 2.0,
            )
            return -ts
        symmetric = False
    else:
        roots = None
        symmetric = False

    return EntireFunctionSpec(
        id=ident, closed_form=closed, zero_order=0, leading=f0,
        exponent=alpha, roots=roots, symmetric=symmetric,
    )


# ---------------------------------------------------------------------------
# identifier parsing and root listing


def _parse_kv(body: str, names: tuple) -> dict:
    out = {}
    for part in body.split(","):
        if "=" not in part:
            raise UnknownFunction(f"malformed parameter {part!r}")
        key, _, val = part.partition("=")
        key = key.strip()
        if key not in names:
            raise UnknownFunction(f"unknown parameter {key!r}")
        try:
            out[key] = float(val)
        except ValueError as exc:
            raise UnknownFunction(f"bad numeric value {val!r}") from exc
    missing = [n for n in names if n not in out]
    if missing:
        raise UnknownFunction(f"missing parameters {missing}")
    return out


def parse_function(ident: str) -> EntireFunctionSpec:
    """Build a catalog function from its CLI identifier."""
    ident = ident.strip()
    if ident == "sinh_over_z":
        return sinh_over_z()
    if ident == "cosh":
        return cosh_fn()
    if ident == "z_cosh_minus_sinh":
        return z_cosh_minus_sinh()
    if ident == "gamma_reciprocal":
        return gamma_reciprocal_fn()
    if ident.startswith("cpr:"):
        kv = _parse_kv(ident[4:], ("r", "theta"))
        return cpr_function(kv["r"], kv["theta"])
    if ident.startswith("exp_minus:"):
        kv = _parse_kv(ident[10:], ("theta",))
        return exp_minus(kv["theta"])
    raise UnknownFunction(f"no catalog function named {ident!r}")


def catalog_roots(ident: str, count: int) -> np.ndarray:
    """First ``count`` root parameters of a catalog function."""
    spec = parse_function(ident)
    if not spec.has_roots:
        raise InvalidParameter(f"{ident}: root system is not purely imaginary")
    return spec.first_roots(count)
