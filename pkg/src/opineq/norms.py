"""Unitarily invariant norms: Schatten-p and Ky Fan-k families.

Norm specs have a compact string syntax used by the CLI and in reports:
``s1``, ``s1.5``, ``s2``, ``s3``, ``sinf`` for Schatten-p and ``kfK`` for
Ky Fan-k.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InvalidParameter
from .linalg import singular_values


@dataclass(frozen=True)
class NormSpec:
    """Selector for one unitarily invariant norm."""

    kind: str  # 'schatten' | 'kyfan'
    p: float = math.inf
    k: int = 1

    def __post_init__(self):
        if self.kind == "schatten":
            if not (self.p >= 1.0):
                raise InvalidParameter(f"schatten requires p >= 1, got {self.p}")
        elif self.kind == "kyfan":
            if self.k < 1:
                raise InvalidParameter(f"kyfan requires k >= 1, got {self.k}")
        else:
            raise InvalidParameter(f"unknown norm kind {self.kind!r}")

    @property
    def id(self) -> str:
        if self.kind == "kyfan":
            return f"kf{self.k}"
        if math.isinf(self.p):
            return "sinf"
        if self.p == int(self.p):
            return f"s{int(self.p)}"
        return f"s{self.p:g}"

    def __str__(self) -> str:
        return self.id


def schatten(p: float) -> NormSpec:
    return NormSpec(kind="schatten", p=float(p))


def kyfan(k: int) -> NormSpec:
    return NormSpec(kind="kyfan", k=int(k))


def parse_norm(text: str) -> NormSpec:
    """Parse a norm spec string (``s<p>``, ``sinf`` or ``kf<k>``)."""
    t = text.strip().lower()
    if t.startswith("kf"):
        try:
            return kyfan(int(t[2:]))
        except ValueError as exc:
            raise InvalidParameter(f"bad Ky Fan spec {text!r}") from exc
    if t.startswith("s"):
        body = t[1:]
        if body == "inf":
            return schatten(math.inf)
        try:
            return schatten(float(body))
        except ValueError as exc:
            raise InvalidParameter(f"bad Schatten spec {text!r}") from exc
    raise InvalidParameter(f"unrecognized norm spec {text!r}")


#: Fixed sweep used by verification campaigns: trace class, an intermediate
#: non-integer p, Hilbert-Schmidt, p=3, operator norm, one Ky Fan member.
NORM_SWEEP = (
    schatten(1),
    schatten(1.5),
    schatten(2),
    schatten(3),
    schatten(math.inf),
    kyfan(2),
)


def norm(a, spec: NormSpec) -> float:
    """Evaluate the unitarily invariant norm selected by ``spec``."""
    sigma = singular_values(a)
    if spec.kind == "kyfan":
        if spec.k > sigma.shape[0]:
            raise InvalidParameter(
                f"kyfan k={spec.k} exceeds min dimension {sigma.shape[0]}"
            )
        return float(np.sum(sigma[: spec.k]))
    if math.isinf(spec.p):
        return float(sigma[0])
    if spec.p == 1.0:
        return float(np.sum(sigma))
    if spec.p == 2.0:
        return float(np.sqrt(np.sum(sigma * sigma)))
    return float(np.sum(sigma ** spec.p) ** (1.0 / spec.p))
