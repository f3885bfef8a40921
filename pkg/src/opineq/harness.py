"""Seeded input generation, verification campaigns and counterexample search.

Sampling is a pure function of (master seed, case id, dim, norm id, sample
index) through the counter-based generator in :mod:`opineq.rng`, so reports
are reproducible bit-for-bit and any reported witness replays exactly from
its serialized matrices.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import __version__, rng
from .cases import InequalityCase, Margin, evaluate_case, get_case, registry
from .errors import InvalidParameter, SizeLimit
from .linalg import (
    as_matrix,
    hermitian_eigendecompose,
    matrix_from_json,
    matrix_to_json,
)
from .norms import NORM_SWEEP, parse_norm

DEFAULT_DIMS = (2, 3, 5, 8)
DEFAULT_SAMPLES = 200
DEFAULT_SEED = 42
DEFAULT_TOLERANCE = 1e-8
SEARCH_TOLERANCE = 1e-6
SAMPLE_SCALE = 1.0


# ---------------------------------------------------------------------------
# random matrix generation

def random_complex(dim: int, seed: int) -> np.ndarray:
    """dim x dim matrix of independent standard complex normal entries."""
    if not (1 <= dim <= 64):
        raise SizeLimit(f"dim {dim} outside [1, 64]")
    z = rng.standard_complex_normals(seed, dim * dim)
    return z.reshape(dim, dim)


def random_hermitian(dim: int, seed: int, scale: float = 1.0) -> np.ndarray:
    """Hermitian sample with spectrum rescaled into [-scale, scale].

    Symmetrizes a complex Gaussian matrix, then multiplies by
    ``scale / spectral_radius`` so the extreme eigenvalue lands exactly on
    the requested scale (a zero draw stays zero).
    """
    if scale < 0:
        raise InvalidParameter(f"scale must be >= 0, got {scale}")
    g = random_complex(dim, seed)
    h = (g + g.conj().T) / 2.0
    w = np.linalg.eigvalsh(h)
    rho = max(abs(w[0]), abs(w[-1]))
    if rho == 0.0:  # pragma: no cover - measure zero
        return h
    return h * (scale / rho)


def random_positive(dim: int, seed: int, scale: float = 1.0) -> np.ndarray:
    """exp of a random Hermitian sample; condition number <= e^{2 scale}."""
    h = random_hermitian(dim, seed, scale)
    dec = hermitian_eigendecompose(h)
    u = dec.unitary
    out = (u * np.exp(dec.eigenvalues)) @ u.conj().T
    return (out + out.conj().T) / 2.0


def random_invertible(dim: int, seed: int, scale: float = 1.0) -> np.ndarray:
    """Invertible sample: positive part times a random unitary phase."""
    p = random_positive(dim, rng.sub_seed(seed, 0), scale)
    h = random_hermitian(dim, rng.sub_seed(seed, 1), np.pi)
    dec = hermitian_eigendecompose(h)
    u = (dec.unitary * np.exp(1j * dec.eigenvalues)) @ dec.unitary.conj().T
    return p @ u


_KIND_SAMPLERS = {
    "hermitian": lambda dim, seed, scale: random_hermitian(dim, seed, scale),
    "positive": lambda dim, seed, scale: random_positive(dim, seed, scale),
    "invertible": lambda dim, seed, scale: random_invertible(dim, seed, scale),
    "general": lambda dim, seed, scale: random_complex(dim, seed),
    "ideal": lambda dim, seed, scale: random_complex(dim, seed),
}


def sample_inputs(case: InequalityCase, dim: int, seed: int,
                  scale: float = SAMPLE_SCALE) -> dict:
    """Draw one full input set for ``case`` at dimension ``dim``."""
    out = {}
    for k, (name, kind) in enumerate(case.signature):
        out[name] = _KIND_SAMPLERS[kind](dim, rng.sub_seed(seed, k), scale)
    return out


# ---------------------------------------------------------------------------
# campaign configuration and report

@dataclass(frozen=True)
class CampaignConfig:
    case_ids: tuple
    dims: tuple = DEFAULT_DIMS
    samples: int = DEFAULT_SAMPLES
    norms: tuple = tuple(s.id for s in NORM_SWEEP)
    seed: int = DEFAULT_SEED
    tolerance: float = DEFAULT_TOLERANCE
    param_overrides: dict = field(default_factory=dict)  # case id -> grid tuple

    def __post_init__(self):
        if self.samples < 1:
            raise InvalidParameter("samples must be >= 1")
        if self.tolerance <= 0:
            raise InvalidParameter("tolerance must be > 0")
        for d in self.dims:
            if not (2 <= d <= 64):
                raise InvalidParameter(f"dim {d} outside [2, 64]")
        for cid in self.case_ids:
            get_case(cid)
        for text in self.norms:
            parse_norm(text)


def _witness_dict(case, derived_seed, dim, norm_id, params, inputs, margin):
    return {
        "derived_seed": int(derived_seed),
        "dim": int(dim),
        "norm": norm_id,
        "params": {k: float(v) for k, v in params.items()},
        "margin": margin.signed_margin,
        "lhs": margin.lhs,
        "rhs": margin.rhs,
        "scale": margin.scale,
        "matrices": [matrix_to_json(inputs[name]) for name, _ in case.signature],
    }


def replay_witness(case_id: str, witness: dict) -> Margin:
    """Re-evaluate a serialized witness; must reproduce its margin exactly."""
    case = get_case(case_id)
    mats = [matrix_from_json(m) for m in witness["matrices"]]
    inputs = {name: m for (name, _), m in zip(case.signature, mats)}
    spec = parse_norm(witness["norm"])
    return evaluate_case(case_id, inputs, witness["params"], spec, mode="search")


def _case_grid(case: InequalityCase, config: CampaignConfig) -> tuple:
    grid = config.param_overrides.get(case.id, case.param_grid)
    if not grid:
        grid = ({},)
    for params in grid:
        case.validate_params(params, mode="verify")
    return tuple(grid)


def _case_norms(case: InequalityCase, config: CampaignConfig) -> tuple:
    if case.norms is None:
        return config.norms
    return tuple(n for n in config.norms if n in case.norms)


def _run_cell(case, dim, norm_id, grid, config):
    """Evaluate all samples of one (case, dim, norm) cell."""
    spec = parse_norm(norm_id)
    best = None  # (margin/scale, index, witness)
    violations = []
    for i in range(config.samples):
        derived = rng.derive_seed(config.seed, case.id, dim, norm_id, i)
        params = grid[i % len(grid)]
        inputs = sample_inputs(case, dim, derived)
        margin = evaluate_case(case.id, inputs, params, spec)
        rel = margin.signed_margin / margin.scale
        if best is None or rel < best[0]:
            best = (rel, i, _witness_dict(case, derived, dim, norm_id,
                                          params, inputs, margin))
        if margin.signed_margin < -config.tolerance * margin.scale:
            violations.append(_witness_dict(case, derived, dim, norm_id,
                                            params, inputs, margin))
    return best, violations, config.samples


def run_campaign(config: CampaignConfig, workers: int = 1) -> dict:
    """Run the verification campaign and return the report dictionary.

    The report aggregates by an order-independent minimum, so it is
    identical whether cells are evaluated serially or concurrently.
    """
    t0 = time.monotonic()
    cells = []
    for case_id in config.case_ids:
        case = get_case(case_id)
        grid = _case_grid(case, config)
        for dim in config.dims:
            for norm_id in _case_norms(case, config):
                cells.append((case, dim, norm_id, grid))

    def work(cell):
        case, dim, norm_id, grid = cell
        return _run_cell(case, dim, norm_id, grid, config)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(work, cells))
    else:
        results = [work(c) for c in cells]

    per_case = {}
    for (case, dim, norm_id, grid), (best, violations, count) in zip(cells, results):
        rec = per_case.setdefault(case.id, {
            "id": case.id,
            "params": [dict(p) for p in grid],
            "samples": 0,
            "norms": [],
            "min_margin": None,
            "_best_key": None,
            "witness": None,
            "violations": [],
        })
        rec["samples"] += count
        if norm_id not in rec["norms"]:
            rec["norms"].append(norm_id)
        key = (best[0], dim, norm_id, best[1])
        if rec["_best_key"] is None or key < rec["_best_key"]:
            rec["_best_key"] = key
            rec["min_margin"] = best[0]
            rec["witness"] = best[2]
        rec["violations"].extend(violations)

    cases_out = []
    for case_id in config.case_ids:
        rec = per_case[case_id]
        rec.pop("_best_key")
        cases_out.append(rec)

    return {
        "version": __version__,
        "seed": int(config.seed),
        "tolerance": config.tolerance,
        "dims": list(config.dims),
        "samples_per_cell": config.samples,
        "norm_sweep": list(config.norms),
        "cases": cases_out,
        "violation_count": sum(len(r["violations"]) for r in cases_out),
        "wallclock_ms": (time.monotonic() - t0) * 1e3,
    }


# ---------------------------------------------------------------------------
# counterexample search

def search_schedule(dims=(2, 3), norms=None, scales=(1.0, 2.0, 3.0)) -> tuple:
    """Round-robin phase list: small dims at the operator norm first, then
    the full (scale, dim, norm) sweep."""
    if norms is None:
        norms = tuple(s.id for s in NORM_SWEEP)
    phases = [(d, "sinf", 1.0) for d in dims if "sinf" in norms]
    for scale in scales:
        for d in dims:
            for n in norms:
                phases.append((d, n, scale))
    return tuple(phases)


def counterexample_search(
    case_id: str,
    params: dict,
    budget: int,
    seed: int,
    dims=(2, 3),
    norms=None,
    scales=(1.0, 2.0, 3.0),
) -> dict:
    """Iterate seeded samples until a decisive violation or budget exhaustion.

    The evaluation order is a fixed round-robin over the phase schedule and
    does not depend on the budget, so enlarging the budget never loses a
    previously found witness.  Returns a report dictionary whose ``witness``
    field is None when the budget is exhausted.
    """
    if budget < 1:
        raise InvalidParameter("budget must be >= 1")
    case = get_case(case_id)
    case.validate_params(params, mode="search")
    phases = search_schedule(dims=dims, norms=norms, scales=scales)
    t0 = time.monotonic()
    witness = None
    evaluations = 0
    best = None
    for k in range(budget):
        dim, norm_id, scale = phases[k % len(phases)]
        derived = rng.derive_seed(seed, case_id, dim, norm_id, k)
        inputs = sample_inputs(case, dim, derived, scale=scale)
        spec = parse_norm(norm_id)
        margin = evaluate_case(case_id, inputs, params, spec, mode="search")
        evaluations += 1
        rel = margin.signed_margin / margin.scale
        if best is None or rel < best:
            best = rel
        if margin.signed_margin < -SEARCH_TOLERANCE * margin.scale:
            witness = _witness_dict(case, derived, dim, norm_id, params,
                                    inputs, margin)
            break
    return {
        "version": __version__,
        "seed": int(seed),
        "case": case_id,
        "params": {k: float(v) for k, v in params.items()},
        "budget": int(budget),
        "evaluations": evaluations,
        "min_margin": best,
        "witness": witness,
        "wallclock_ms": (time.monotonic() - t0) * 1e3,
    }
