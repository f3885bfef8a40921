"""Deterministic counter-based random number generation.

Every random quantity in this package is a pure function of a 64-bit seed,
so campaigns replay bit-exactly.  The scheme (documented in the README so
other implementations can reproduce the sample streams):

* ``mix64(x)`` is one splitmix64 step: add the golden-ratio increment, then
  the xor/multiply finalizer.
* seeds for sample ``i`` of a (case, dim, norm) cell are derived by folding
  FNV-1a hashes of the string identifiers into the master seed with
  ``mix64``.
* the uniform stream of a seed is ``mix64((seed + (j+1)*STREAM_STEP) mod
  2^64)`` mapped to [0, 1) via the top 53 bits; normal deviates come from
  Box-Muller on consecutive pairs.
"""

from __future__ import annotations

import numpy as np

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB
STREAM_STEP = 0xD1B54A32D192ED03
SUBSEED_STEP = 0xBEA225F9EB34556D

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3


def mix64(x: int) -> int:
    """Splitmix64 step of a 64-bit integer (Python-int reference path)."""
    x = (int(x) + _GOLDEN) & _MASK
    x ^= x >> 30
    x = (x * _MIX1) & _MASK
    x ^= x >> 27
    x = (x * _MIX2) & _MASK
    x ^= x >> 31
    return x


def fnv1a64(text: str) -> int:
    """FNV-1a hash of the UTF-8 encoding of ``text``."""
    h = _FNV_OFFSET
    for byte in text.encode("utf-8"):
        h ^= byte
        h = (h * _FNV_PRIME) & _MASK
    return h


def derive_seed(master: int, case_id: str, dim: int, norm_id: str, index: int) -> int:
    """Per-sample seed: fold case id, dimension, norm id and index into master."""
    h = int(master) & _MASK
    for token in (fnv1a64(case_id), int(dim), fnv1a64(norm_id), int(index)):
        h = mix64(h ^ (token & _MASK))
    return h


def sub_seed(seed: int, k: int) -> int:
    """Independent child seed ``k`` of ``seed`` (matrices within one sample)."""
    return mix64((int(seed) + (int(k) + 1) * SUBSEED_STEP) & _MASK)


def _mix64_vec(x: np.ndarray) -> np.ndarray:
    with np.errstate(over="ignore"):
        x = x + np.uint64(_GOLDEN)
        x ^= x >> np.uint64(30)
        x *= np.uint64(_MIX1)
        x ^= x >> np.uint64(27)
        x *= np.uint64(_MIX2)
        x ^= x >> np.uint64(31)
    return x


def uniforms(seed: int, count: int) -> np.ndarray:
    """``count`` doubles in [0, 1) from the counter stream of ``seed``."""
    idx = np.arange(1, count + 1, dtype=np.uint64)
    with np.errstate(over="ignore"):
        raw = _mix64_vec(np.uint64(int(seed) & _MASK) + idx * np.uint64(STREAM_STEP))
    return (raw >> np.uint64(11)).astype(np.float64) * (2.0 ** -53)


def standard_normals(seed: int, count: int) -> np.ndarray:
    """``count`` N(0,1) deviates via Box-Muller on the uniform stream."""
    pairs = (count + 1) // 2
    u = uniforms(seed, 2 * pairs)
    u1, u2 = u[0::2], u[1::2]
    radius = np.sqrt(-2.0 * np.log1p(-u1))
    angle = 2.0 * np.pi * u2
    out = np.empty(2 * pairs)
    out[0::2] = radius * np.cos(angle)
    out[1::2] = radius * np.sin(angle)
    return out[:count]


def standard_complex_normals(seed: int, count: int) -> np.ndarray:
    """``count`` standard complex normal deviates (E|z|^2 = 1)."""
    g = standard_normals(seed, 2 * count)
    return (g[0::2] + 1j * g[1::2]) / np.sqrt(2.0)
