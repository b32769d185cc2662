"""Field sweeps of the nearest-neighbour negativity and peak analysis."""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .entanglement import thermal_pair_negativity
from .model import ChainSpec, FieldPattern

MAX_GRID_POINTS = 10**6
PEAK_THRESHOLD = 1e-4
CSV_HEADER = ["pattern", "gamma", "n_sites", "temperature", "B", "negativity"]

BOTH = (FieldPattern.UNIFORM, FieldPattern.STAGGERED)


@dataclass(frozen=True)
class SweepConfig:
    gammas: tuple[float, ...]
    temperature: float
    n_sites: int
    patterns: tuple[FieldPattern, ...] = BOTH
    b_min: float = -2.0
    b_max: float = 2.0
    b_step: float = 0.01
    pair: int = 1
    threshold: float = PEAK_THRESHOLD

    def __post_init__(self):
        object.__setattr__(self, "gammas", tuple(float(g) for g in self.gammas))
        object.__setattr__(self, "patterns", tuple(FieldPattern(p) for p in self.patterns))
        if not self.gammas:
            raise ValueError("at least one gamma is required")
        if not self.patterns:
            raise ValueError("at least one field pattern is required")
        if not self.b_min < self.b_max:
            raise ValueError(f"b_min ({self.b_min}) must be below b_max ({self.b_max})")
        if not self.b_step > 0:
            raise ValueError(f"b_step must be positive, got {self.b_step}")
        if not self.temperature > 0:
            raise ValueError(f"temperature must be positive, got {self.temperature}")
        n_points = self.n_fields * len(self.gammas) * len(self.patterns)
        if n_points > MAX_GRID_POINTS:
            raise ValueError(f"grid of {n_points} points exceeds {MAX_GRID_POINTS}")
        # validates n_sites early
        ChainSpec(self.n_sites, 0.0, 0.0)
        if not 1 <= self.pair <= self.n_sites:
            raise ValueError(f"pair index {self.pair} out of range 1..{self.n_sites}")

    @property
    def n_fields(self) -> int:
        return int(np.floor((self.b_max - self.b_min) / self.b_step + 1e-9)) + 1

    def fields(self) -> np.ndarray:
        b = self.b_min + self.b_step * np.arange(self.n_fields)
        # snap away accumulated rounding so that +B and -B hit the same magnitudes
        return np.round(b, 12) + 0.0

    def to_dict(self) -> dict:
        return {
            "patterns": [p.value for p in self.patterns],
            "gammas": list(self.gammas),
            "b_min": self.b_min,
            "b_max": self.b_max,
            "b_step": self.b_step,
            "temperature": self.temperature,
            "n_sites": self.n_sites,
            "pair": self.pair,
            "threshold": self.threshold,
        }


@dataclass
class Series:
    pattern: FieldPattern
    gamma: float
    fields: np.ndarray
    values: np.ndarray
    peaks: list[float] = field(default_factory=list)


@dataclass
class SweepResult:
    config: SweepConfig
    series: list[Series]

    def get(self, pattern, gamma: float) -> Series:
        pattern = FieldPattern(pattern)
        for s in self.series:
            if s.pattern is pattern and s.gamma == gamma:
                return s
        raise KeyError((pattern, gamma))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_HEADER)
        c = self.config
        for s in self.series:
            for b, v in zip(s.fields, s.values):
                w.writerow([s.pattern.value, _fmt(s.gamma), c.n_sites, _fmt(c.temperature), _fmt(b), _fmt(v)])
        return buf.getvalue()

    def to_json(self) -> str:
        c = self.config
        doc = {
            "config": c.to_dict(),
            "series": [
                {
                    "pattern": s.pattern.value,
                    "gamma": s.gamma,
                    "n_sites": c.n_sites,
                    "temperature": c.temperature,
                    "samples": [[float(_fmt(b)), float(_fmt(v))] for b, v in zip(s.fields, s.values)],
                    "peaks": [float(_fmt(p)) for p in s.peaks],
                }
                for s in self.series
            ],
        }
        return json.dumps(doc, indent=2) + "\n"

    def write(self, path, fmt: str = "csv") -> None:
        text = self.to_csv() if fmt == "csv" else self.to_json()
        with open(path, "w", newline="\n") as f:
            f.write(text)


def _fmt(x: float) -> str:
    s = f"{float(x):.12g}"
    return "0" if s == "-0" else s


def count_peaks(fields, values, threshold: float = PEAK_THRESHOLD) -> list[float]:
    """Field locations of interior strict local maxima above ``threshold``.

    A run of equal values is treated as a single point located at the run's
    midpoint. Runs touching either end of the grid are never peaks.
    """
    fields = np.asarray(fields, dtype=float)
    values = np.asarray(values, dtype=float)
    if fields.shape != values.shape or fields.ndim != 1:
        raise ValueError("fields and values must be 1-D arrays of equal length")
    if len(values) < 3:
        raise ValueError("need at least three samples to locate peaks")

    # run-length encode equal neighbours
    starts = [0] + [k for k in range(1, len(values)) if values[k] != values[k - 1]]
    ends = starts[1:] + [len(values)]
    peaks = []
    for r in range(1, len(starts) - 1):
        v = values[starts[r]]
        if v > threshold and values[starts[r - 1]] < v and values[starts[r + 1]] < v:
            peaks.append(0.5 * (fields[starts[r]] + fields[ends[r] - 1]))
    return peaks


def _point(args) -> float:
    n_sites, gamma, b, pattern, temperature, pair = args
    spec = ChainSpec(n_sites, gamma, b, pattern)
    return thermal_pair_negativity(spec, temperature, pair).value


def run_sweep(config: SweepConfig, workers: int = 1) -> SweepResult:
    fields = config.fields()
    jobs = [
        (config.n_sites, g, float(b), p, config.temperature, config.pair)
        for p in config.patterns
        for g in config.gammas
        for b in fields
    ]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            # map preserves submission order, so output stays deterministic
            flat = list(pool.map(_point, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        flat = [_point(j) for j in jobs]

    values = np.array(flat).reshape(len(config.patterns), len(config.gammas), len(fields))
    series = []
    for ip, p in enumerate(config.patterns):
        for ig, g in enumerate(config.gammas):
            v = values[ip, ig]
            series.append(Series(p, g, fields.copy(), v, count_peaks(fields, v, config.threshold)))
    return SweepResult(config, series)


def symmetry_defect(series: Series) -> float:
    """max |N(B) - N(-B)| over grid points whose mirror image is also on the grid."""
    lookup = {round(float(b), 9): v for b, v in zip(series.fields, series.values)}
    diffs = [abs(v - lookup[round(-float(b), 9)]) for b, v in zip(series.fields, series.values) if round(-float(b), 9) in lookup]
    if not diffs:
        raise ValueError("grid has no mirror-symmetric points")
    return max(diffs)
