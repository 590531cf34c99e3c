"""Deterministic averages over the switch time and the coupling distribution,
plus Monte-Carlo trajectory-ensemble averaging.

* ``average_over_t0``: Romberg (trapezoid + Richardson) refinement of the
  switch-time average over a finite window, either normalized by the window
  length (the default, bounded estimator) or carrying the literal 1/tau_c
  prefactor for direct figure-shape comparison.

* ``average_over_j``: Gauss-Hermite quadrature of a zero-mean Gaussian
  coupling distribution with order doubling until convergence.

* ``monte_carlo_survival``: ensemble mean and standard error of the survival
  over independently sampled noise paths; the default engine is the
  vectorized unitary stepper, the "oracle" engine routes every trajectory
  through the adaptive propagator on a sampled path.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .analytic import SurvivalResult
from .model import DKParams
from .noise import NoiseSpec, sample_ou_path, sample_telegraph_path
from .propagator import (
    PROVENANCE_MC,
    ensemble_survival,
    sampled_path_coupling,
    survival_numeric,
)

__all__ = [
    "AverageSpec",
    "AveragingConvergenceError",
    "average_over_t0",
    "average_over_j",
    "monte_carlo_survival",
]


class AveragingConvergenceError(RuntimeError):
    """Quadrature refinement hit its cap before reaching the tolerance."""


@dataclass(frozen=True)
class AverageSpec:
    """Averaging controls.

    t0_window : switch-time window (defaults to [-5, 5], i.e. 5*tau_c at
                tau_c = 1)
    t0_points : starting trapezoid point count (>= 3)
    j_sigma   : standard deviation of the zero-mean coupling distribution
    quad_order: starting Gauss-Hermite order (>= 2)
    mc_trajectories : default Monte-Carlo ensemble size (>= 1)
    """

    t0_window: tuple[float, float] = (-5.0, 5.0)
    t0_points: int = 9
    j_sigma: float = 1.0
    quad_order: int = 16
    mc_trajectories: int = 1000
    seed: int = 0

    def __post_init__(self):
        if self.t0_points < 3:
            raise ValueError("t0_points must be at least 3")
        if self.quad_order < 2:
            raise ValueError("quad_order must be at least 2")
        if self.mc_trajectories < 1:
            raise ValueError("mc_trajectories must be at least 1")
        lo, hi = self.t0_window
        if not (math.isfinite(lo) and math.isfinite(hi) and hi > lo):
            raise ValueError(f"t0_window must be a finite nonempty interval, got {self.t0_window}")


def average_over_t0(
    q_of_t0: Callable[[float], float],
    spec: AverageSpec,
    normalized: bool = True,
    tau_c: float = 1.0,
    tol: float = 1e-6,
    max_refinements: int = 14,
) -> float:
    """Switch-time average of q over the window by Romberg refinement.

    normalized=True divides the integral by the window length (so a constant
    integrand averages to itself); normalized=False divides by tau_c, the
    literal unnormalized switch-time measure.
    """
    lo, hi = spec.t0_window
    length = hi - lo
    n = spec.t0_points - 1  # panel count, refined by doubling
    xs = np.linspace(lo, hi, n + 1)
    vals = np.array([q_of_t0(float(x)) for x in xs])
    trap = float(np.trapezoid(vals, dx=length / n))
    rows = [[trap]]
    for _ in range(max_refinements):
        mids = (xs[:-1] + xs[1:]) / 2.0
        mid_vals = np.array([q_of_t0(float(x)) for x in mids])
        trap = 0.5 * trap + (length / n) * 0.5 * float(mid_vals.sum())
        n *= 2
        xs = np.linspace(lo, hi, n + 1)
        merged = np.empty(n + 1)
        merged[0::2] = vals
        merged[1::2] = mid_vals
        vals = merged
        row = [trap]
        for m, prev in enumerate(rows[-1], start=1):
            row.append(row[m - 1] + (row[m - 1] - prev) / (4.0**m - 1.0))
        best, prev_best = row[-1], rows[-1][-1]
        rows.append(row)
        if abs(best - prev_best) < tol:
            return best / length if normalized else best / tau_c
    raise AveragingConvergenceError(
        f"switch-time average did not converge to {tol} within {max_refinements} refinements"
    )


def _gauss_hermite_estimate(q_of_j, j_sigma: float, order: int) -> float:
    from scipy.special import roots_hermite

    nodes, weights = roots_hermite(order)
    scale = math.sqrt(2.0) * j_sigma
    return math.fsum(
        w * q_of_j(float(scale * x)) for x, w in zip(nodes, weights)
    ) / math.sqrt(math.pi)


def average_over_j(
    q_of_j: Callable[[float], float],
    spec: AverageSpec,
    tol: float = 1e-6,
    max_order: int = 1024,
    order: int | None = None,
) -> float:
    """Expectation of q(J) over J ~ N(0, j_sigma^2) by Gauss-Hermite quadrature.

    By default the order is doubled until two consecutive estimates agree
    within tol.  Passing ``order`` evaluates one fixed rule instead: along a
    parameter sweep a fixed node set makes the quadrature error a smooth
    function of the swept parameter, which keeps qualitative features
    (monotonicity, orderings) intact even where the integrand develops a
    weak-coupling boundary layer and the adaptive rule converges only
    algebraically.
    """
    if spec.j_sigma <= 0:
        raise ValueError("j_sigma must be positive")
    if order is not None:
        return _gauss_hermite_estimate(q_of_j, spec.j_sigma, order)
    n = spec.quad_order
    prev = None
    while n <= max_order:
        total = _gauss_hermite_estimate(q_of_j, spec.j_sigma, n)
        if prev is not None and abs(total - prev) < tol:
            return total
        prev = total
        n *= 2
    raise AveragingConvergenceError(
        f"coupling average did not converge to {tol} by order {max_order}"
    )


def monte_carlo_survival(
    p: DKParams,
    spec: NoiseSpec,
    n: int | None = None,
    t_max: float | None = None,
    tol: float = 1e-8,
    seed: int | None = None,
    engine: str = "ensemble",
) -> SurvivalResult:
    """Mean and standard error of the survival over n noisy trajectories.

    engine="ensemble" (default) uses the vectorized fixed-step unitary
    stepper; engine="oracle" samples one noise path per trajectory and runs
    the adaptive propagator on it (slow; used to cross-validate the ensemble
    engine).
    """
    if n is None:
        n = 1000
    if n < 1:
        raise ValueError("n must be at least 1")
    if engine == "ensemble":
        qs = ensemble_survival(p, spec, n, t_max=t_max, seed=seed)
    elif engine == "oracle":
        qs = _oracle_trajectories(p, spec, n, t_max, tol, seed)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    mean = float(qs.mean())
    stderr = float(qs.std(ddof=1) / math.sqrt(n)) if n > 1 else 0.0
    return SurvivalResult(q=mean, provenance=PROVENANCE_MC, stderr=stderr)


def _oracle_trajectories(
    p: DKParams,
    spec: NoiseSpec,
    n: int,
    t_max: float | None,
    tol: float,
    seed: int | None,
) -> np.ndarray:
    if t_max is None:
        t_max = 15.0 * p.t_cap
    if seed is not None and seed != spec.seed:
        spec = NoiseSpec(kind=spec.kind, tau_c=spec.tau_c, sigma=spec.sigma, seed=seed)
    spacing = min(spec.tau_c / 50.0, p.t_cap / 10.0)
    npts = int(math.ceil(2.0 * t_max / spacing)) + 1
    grid = np.linspace(-t_max, t_max, npts)
    sampler = sample_telegraph_path if spec.kind == "telegraph" else sample_ou_path
    qs = np.empty(n)
    for i in range(n):
        try:
            path = sampler(spec, grid, trajectory_index=i)
            profile = sampled_path_coupling(path.times, path.values)
            qs[i] = survival_numeric(p, profile, t_max=t_max, tol=tol).q
        except Exception as exc:
            raise RuntimeError(f"trajectory {i} failed: {exc}") from exc
    return qs
