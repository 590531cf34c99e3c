"""Colored Markovian noise samplers: telegraph and Ornstein-Uhlenbeck.

Both processes are stationary with zero mean and autocorrelation
sigma^2 * exp(-|tau|/tau_c):

* telegraph: two-state Markov jump process on {-sigma, +sigma}; flip rate
  1/(2*tau_c) is the unique stationary two-state match to the exponential
  correlation function, and flips are drawn per grid interval with the exact
  transition probability (1 - exp(-dt/tau_c))/2.

* Ornstein-Uhlenbeck: exact one-step update
  x(t+dt) = x(t)*exp(-dt/tau_c) + sigma*sqrt(1 - exp(-2dt/tau_c))*xi.

Sampling is reproducible: one path is a pure function of
(spec, grid, trajectory_index) through an independently derived sub-stream
per (seed, trajectory_index).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "NoiseSpec",
    "NoisePath",
    "GridTooCoarseError",
    "sample_telegraph_path",
    "sample_ou_path",
    "sample_flip_time",
    "default_t0_window",
]

_KINDS = ("telegraph", "gaussian-ou")


class GridTooCoarseError(ValueError):
    """Sampling grid spacing exceeds tau_c/10."""


@dataclass(frozen=True)
class NoiseSpec:
    """Noise process description.

    kind is "telegraph" or "gaussian-ou"; sigma is the amplitude
    (sqrt of the variance; the telegraph process takes values +-sigma).
    """

    kind: str
    tau_c: float
    sigma: float
    seed: int = 0

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"kind must be one of {_KINDS}, got {self.kind!r}")
        if not (self.tau_c > 0):
            raise ValueError(f"tau_c must be positive, got {self.tau_c}")
        if self.sigma < 0:
            raise ValueError(f"sigma must be nonnegative, got {self.sigma}")


@dataclass(frozen=True)
class NoisePath:
    """A sampled noise realization on a strictly increasing time grid."""

    times: np.ndarray
    values: np.ndarray
    spec: NoiseSpec

    def to_csv(self, path) -> None:
        """Write columns t,value with 17 significant digits and UNIX newlines."""
        with open(path, "w", newline="\n") as fh:
            fh.write("t,value\n")
            for t, v in zip(self.times, self.values):
                fh.write(f"{t:.17g},{v:.17g}\n")


def _substream(spec: NoiseSpec, trajectory_index: int) -> np.random.Generator:
    return np.random.default_rng([spec.seed, trajectory_index])


def _checked_grid(spec: NoiseSpec, grid) -> np.ndarray:
    t = np.asarray(grid, dtype=float)
    if t.ndim != 1 or t.size < 2:
        raise ValueError("grid must be a 1-d array with at least two points")
    dt = np.diff(t)
    if not np.all(dt > 0):
        raise ValueError("grid must be strictly increasing")
    if dt.max() > spec.tau_c / 10.0 + 1e-12:
        raise GridTooCoarseError(
            f"grid spacing {dt.max():.3g} exceeds tau_c/10 = {spec.tau_c / 10.0:.3g}"
        )
    return t


def sample_telegraph_path(
    spec: NoiseSpec, grid, trajectory_index: int = 0
) -> NoisePath:
    """Stationary two-state telegraph path on the given grid.

    Initial sign is equiprobable; each interval flips with the exact Markov
    probability for rate 1/(2*tau_c).
    """
    if spec.kind != "telegraph":
        raise ValueError(f"spec.kind must be 'telegraph', got {spec.kind!r}")
    t = _checked_grid(spec, grid)
    rng = _substream(spec, trajectory_index)
    p_flip = 0.5 * (1.0 - np.exp(-np.diff(t) / spec.tau_c))
    flips = rng.random(t.size - 1) < p_flip
    start = 1.0 if rng.random() < 0.5 else -1.0
    signs = start * np.concatenate(([1.0], np.cumprod(np.where(flips, -1.0, 1.0))))
    return NoisePath(times=t, values=spec.sigma * signs, spec=spec)


def sample_ou_path(spec: NoiseSpec, grid, trajectory_index: int = 0) -> NoisePath:
    """Stationary Ornstein-Uhlenbeck path via the exact one-step update."""
    if spec.kind != "gaussian-ou":
        raise ValueError(f"spec.kind must be 'gaussian-ou', got {spec.kind!r}")
    t = _checked_grid(spec, grid)
    rng = _substream(spec, trajectory_index)
    xi = rng.standard_normal(t.size)
    dt = np.diff(t)
    decay = np.exp(-dt / spec.tau_c)
    x = np.empty(t.size)
    x[0] = spec.sigma * xi[0]
    if dt.size and np.allclose(dt, dt[0], rtol=1e-12, atol=0.0):
        # uniform grid: the recurrence is a first-order linear filter
        from scipy.signal import lfilter

        dstd = spec.sigma * math.sqrt(1.0 - decay[0] ** 2)
        driven = lfilter([1.0], [1.0, -decay[0]], dstd * xi[1:])
        x[1:] = decay[0] ** np.arange(1, t.size) * x[0] + driven
    else:
        for k in range(1, t.size):
            dstd = spec.sigma * math.sqrt(1.0 - decay[k - 1] ** 2)
            x[k] = x[k - 1] * decay[k - 1] + dstd * xi[k]
    return NoisePath(times=t, values=x, spec=spec)


def sample_flip_time(
    spec: NoiseSpec, window: tuple[float, float], trajectory_index: int = 0
) -> float:
    """Uniform draw of the single switch time over a finite window.

    The naive 1/tau_c switch-time measure over the whole axis does not
    normalize, so averages use a finite window (see
    :func:`default_t0_window`) with the uniform measure on it.
    """
    lo, hi = float(window[0]), float(window[1])
    if not (math.isfinite(lo) and math.isfinite(hi)):
        raise ValueError("window must be finite")
    if hi < lo:
        raise ValueError(f"empty window: {window}")
    if hi == lo:
        return lo
    rng = _substream(spec, trajectory_index)
    return lo + (hi - lo) * rng.random()


def default_t0_window(tau_c: float) -> tuple[float, float]:
    """Default switch-time averaging window [-5*tau_c, +5*tau_c]."""
    return (-5.0 * tau_c, 5.0 * tau_c)
