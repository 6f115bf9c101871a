"""Experiment sweeps: Monte Carlo replication over privacy parameters.

Every sweep enumerates its parameter lists left to right with the
replicate index innermost, and emits one record per cell per replicate
in exactly that order. The random seed of a record is
``base_seed + replicate``, so a given replicate reuses one stream across
all cells: within a replicate of a simulation sweep the sampled graph at
a given n is shared by every privacy cell (the non-private error is then
constant across cells), while distinct replicates draw fresh graphs and
fresh noise. Runs are fully deterministic: the same configuration and
base seed produce byte-identical output files.

Failed cells (for example an unsatisfiable noise calibration) become
status-tagged records with empty metric fields instead of aborting the
sweep.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, fields, replace

import numpy as np

from .classify import loocv_error
from .embedding import ase, procrustes_align
from .graphs import LabeledGraph, SbmParams, sample_sbm
from .privacy import CalibrationError, PrivacyBudget, dp_ase

CSV_COLUMNS = [
    "experiment", "n", "d", "alpha", "delta", "k", "replicate", "seed",
    "error_dp", "error_ase", "fnorm", "fnorm_per_vertex", "status",
]

_INT_COLUMNS = {"n", "d", "k", "replicate", "seed"}


@dataclass(frozen=True)
class SweepRecord:
    """One experimental cell: parameters, both pipeline errors, distances."""

    experiment: str
    n: int
    d: int
    alpha: float
    delta: float
    k: int
    replicate: int
    seed: int
    error_dp: float | None = None
    error_ase: float | None = None
    fnorm: float | None = None
    fnorm_per_vertex: float | None = None
    status: str = "ok"


@dataclass(frozen=True)
class SimulationSource:
    """Draws a fresh blockmodel graph for every record."""

    params: SbmParams

    fixed = False

    def realize(self, n: int, rng: np.random.Generator) -> LabeledGraph:
        return sample_sbm(self.params, n, rng)


@dataclass(frozen=True)
class DatasetSource:
    """A fixed real graph: only the privacy noise resamples per replicate."""

    graph: LabeledGraph

    fixed = True

    def realize(self, n: int, rng: np.random.Generator) -> LabeledGraph:
        if n != self.graph.n:
            raise ValueError(f"dataset has {self.graph.n} vertices, requested {n}")
        return self.graph


def _compute_record(
    experiment: str,
    source,
    n: int,
    d: int,
    alpha: float,
    delta: float,
    k: int,
    replicate: int,
    base_seed: int,
    cache: dict | None = None,
) -> SweepRecord:
    seed = base_seed + replicate
    record = SweepRecord(
        experiment=experiment, n=n, d=d, alpha=alpha, delta=delta,
        k=k, replicate=replicate, seed=seed,
    )
    rng = np.random.default_rng(seed)
    try:
        data = source.realize(n, rng)
        # Check calibration feasibility before budget range validation so an
        # unsatisfiable cell is tagged as such rather than as a bad budget.
        if delta > 0 and d / delta <= 1.0:
            raise CalibrationError(f"d/delta must exceed 1, got {d / delta!r}")
        budget = PrivacyBudget(alpha, delta)
        if cache is not None and source.fixed:
            if d not in cache:
                embedded = ase(data.adjacency, d)
                cache[d] = (embedded, loocv_error(embedded, data.labels, k).error_rate)
            reference, error_ase = cache[d]
        else:
            reference = ase(data.adjacency, d)
            error_ase = loocv_error(reference, data.labels, k).error_rate
        private = dp_ase(data.adjacency, d, budget, rng)
        error_dp = loocv_error(private, data.labels, k).error_rate
        fnorm = procrustes_align(private, reference).aligned_distance
    except CalibrationError:
        return replace(record, status="calibration_error")
    except np.linalg.LinAlgError:
        return replace(record, status="eigen_error")
    except ValueError:
        return replace(record, status="invalid_cell")
    return replace(
        record,
        error_dp=error_dp,
        error_ase=error_ase,
        fnorm=fnorm,
        fnorm_per_vertex=fnorm / math.sqrt(n),
    )


def run_n_sweep(
    source: SimulationSource,
    n_list: list[int],
    d: int,
    alpha: float,
    delta: float,
    k: int,
    replicates: int,
    base_seed: int,
) -> list[SweepRecord]:
    """Fixed privacy budget, growing graphs: one record per (n, replicate)."""
    _check_sweep(n_list, replicates)
    return [
        _compute_record("n-sweep", source, n, d, alpha, delta, k, rep, base_seed)
        for n in n_list
        for rep in range(replicates)
    ]


def run_privacy_grid(
    source,
    n: int,
    d: int,
    alpha_list: list[float],
    delta_list: list[float],
    k: int,
    replicates: int,
    base_seed: int,
) -> list[SweepRecord]:
    """Full alpha x delta Cartesian grid at fixed n, replicated per cell."""
    _check_sweep(alpha_list, replicates)
    _check_sweep(delta_list, replicates)
    cache: dict = {}
    return [
        _compute_record(
            "privacy-grid", source, n, d, alpha, delta, k, rep, base_seed, cache
        )
        for alpha in alpha_list
        for delta in delta_list
        for rep in range(replicates)
    ]


def run_dim_sweep(
    source,
    n: int,
    d_list: list[int],
    alpha: float,
    delta: float,
    k: int,
    replicates: int,
    base_seed: int,
) -> list[SweepRecord]:
    """Fixed budget, varying embedding dimension."""
    _check_sweep(d_list, replicates)
    cache: dict = {}
    return [
        _compute_record("dim-sweep", source, n, d, alpha, delta, k, rep, base_seed, cache)
        for d in d_list
        for rep in range(replicates)
    ]


def run_alpha_tradeoff(
    source,
    n: int,
    d: int,
    alpha_list: list[float],
    delta: float,
    k: int,
    replicates: int,
    base_seed: int,
) -> list[SweepRecord]:
    """Fixed delta, varying alpha; the non-private error rides along."""
    _check_sweep(alpha_list, replicates)
    cache: dict = {}
    return [
        _compute_record(
            "alpha-tradeoff", source, n, d, alpha, delta, k, rep, base_seed, cache
        )
        for alpha in alpha_list
        for rep in range(replicates)
    ]


def _check_sweep(values, replicates: int) -> None:
    if not values:
        raise ValueError("sweep list must be nonempty")
    if replicates < 1:
        raise ValueError(f"replicates must be at least 1, got {replicates}")


def _format_value(name: str, value) -> str:
    if value is None:
        return ""
    if name in _INT_COLUMNS:
        return str(int(value))
    if isinstance(value, float):
        return format(value, ".9g")
    return str(value)


def _json_value(name: str, value):
    if value is None or name in _INT_COLUMNS or not isinstance(value, float):
        return value
    return float(format(value, ".9g"))


def emit_results(records: list[SweepRecord], format: str, path) -> None:
    """Write records as CSV or JSON with a fixed column order.

    Floats are printed with 9 significant digits in both formats; CSV
    rows follow ``CSV_COLUMNS`` exactly and missing metrics of failed
    cells are left empty (``null`` in JSON).
    """
    assert [f.name for f in fields(SweepRecord)] == CSV_COLUMNS
    if format == "csv":
        with open(path, "w", newline="\n") as fh:
            fh.write(",".join(CSV_COLUMNS) + "\n")
            for record in records:
                row = [_format_value(c, getattr(record, c)) for c in CSV_COLUMNS]
                fh.write(",".join(row) + "\n")
    elif format == "json":
        payload = [
            {c: _json_value(c, getattr(record, c)) for c in CSV_COLUMNS}
            for record in records
        ]
        with open(path, "w", newline="\n") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    else:
        raise ValueError(f"unknown output format {format!r}")
