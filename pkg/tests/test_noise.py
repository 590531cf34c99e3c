import math

import numpy as np
import pytest

from dkmodel.noise import (
    GridTooCoarseError,
    NoiseSpec,
    default_t0_window,
    sample_flip_time,
    sample_ou_path,
    sample_telegraph_path,
)


def test_spec_validation():
    with pytest.raises(ValueError):
        NoiseSpec(kind="pink", tau_c=1.0, sigma=1.0)
    with pytest.raises(ValueError):
        NoiseSpec(kind="telegraph", tau_c=0.0, sigma=1.0)
    with pytest.raises(ValueError):
        NoiseSpec(kind="telegraph", tau_c=1.0, sigma=-1.0)


def test_kind_and_grid_checks():
    tele = NoiseSpec(kind="telegraph", tau_c=1.0, sigma=2.0, seed=1)
    ou = NoiseSpec(kind="gaussian-ou", tau_c=1.0, sigma=2.0, seed=1)
    grid = np.linspace(0.0, 1.0, 11)
    with pytest.raises(ValueError):
        sample_telegraph_path(ou, grid)
    with pytest.raises(ValueError):
        sample_ou_path(tele, grid)
    with pytest.raises(GridTooCoarseError):
        sample_telegraph_path(tele, np.linspace(0.0, 10.0, 11))


def test_telegraph_values_and_reproducibility():
    spec = NoiseSpec(kind="telegraph", tau_c=0.5, sigma=3.0, seed=42)
    grid = np.linspace(0.0, 5.0, 201)
    path = sample_telegraph_path(spec, grid)
    assert set(np.unique(path.values)) <= {-3.0, 3.0}
    again = sample_telegraph_path(spec, grid)
    assert np.array_equal(path.values, again.values)
    other = sample_telegraph_path(spec, grid, trajectory_index=1)
    assert not np.array_equal(path.values, other.values)

    zero = sample_telegraph_path(
        NoiseSpec(kind="telegraph", tau_c=0.5, sigma=0.0, seed=42), grid
    )
    assert np.all(zero.values == 0.0)


def test_telegraph_ensemble_statistics():
    spec = NoiseSpec(kind="telegraph", tau_c=1.0, sigma=1.0, seed=7)
    # grid fine enough (tau_c/100) that double flips within one interval are
    # rare and the observed sign-change count tracks the underlying rate
    grid = np.linspace(0.0, 3.0, 301)
    n = 20000
    lag = 100  # grid step is tau_c/100, so 100 steps = one correlation time
    x0 = np.empty(n)
    x_lag = np.empty(n)
    flips = np.empty(n)
    for i in range(n):
        path = sample_telegraph_path(spec, grid, trajectory_index=i)
        x0[i] = path.values[0]
        x_lag[i] = path.values[lag]
        flips[i] = np.count_nonzero(np.diff(path.values))

    se_mean = x0.std(ddof=1) / math.sqrt(n)
    assert abs(x0.mean()) < 4 * se_mean

    prod = x0 * x_lag
    se_corr = prod.std(ddof=1) / math.sqrt(n)
    assert abs(prod.mean() - math.exp(-1.0)) < 4 * se_corr

    # flip count over duration D has mean ~ D / (2 tau_c)
    se_flips = flips.std(ddof=1) / math.sqrt(n)
    assert abs(flips.mean() - 3.0 / 2.0) < 4 * se_flips


def test_ou_statistics_and_reproducibility():
    spec = NoiseSpec(kind="gaussian-ou", tau_c=2.0, sigma=1.5, seed=5)
    grid = np.linspace(0.0, 8.0, 81)
    path = sample_ou_path(spec, grid)
    again = sample_ou_path(spec, grid)
    assert np.array_equal(path.values, again.values)

    n = 20000
    # grid step 0.1 and tau_c = 2.0: one correlation time is 20 steps
    lags = {10: 0.5, 20: 1.0, 40: 2.0}  # steps -> lag in units of tau_c
    x0 = np.empty(n)
    xl = {k: np.empty(n) for k in lags}
    for i in range(n):
        v = sample_ou_path(spec, grid, trajectory_index=i).values
        x0[i] = v[0]
        for k in lags:
            xl[k][i] = v[k]

    var = x0**2
    se = var.std(ddof=1) / math.sqrt(n)
    assert abs(var.mean() - spec.sigma**2) < 4 * se
    for k, tau_over_tc in lags.items():
        prod = x0 * xl[k]
        se = prod.std(ddof=1) / math.sqrt(n)
        want = spec.sigma**2 * math.exp(-tau_over_tc)
        assert abs(prod.mean() - want) < 4 * se

    zero = sample_ou_path(
        NoiseSpec(kind="gaussian-ou", tau_c=2.0, sigma=0.0, seed=5), grid
    )
    assert np.all(zero.values == 0.0)


def test_ou_nonuniform_grid():
    spec = NoiseSpec(kind="gaussian-ou", tau_c=3.0, sigma=1.0, seed=9)
    grid = np.concatenate([np.linspace(0, 1, 21), np.linspace(1.05, 2, 41)])
    path = sample_ou_path(spec, grid)
    assert path.values.shape == grid.shape


def test_flip_time_window_contracts():
    spec = NoiseSpec(kind="telegraph", tau_c=1.0, sigma=1.0, seed=0)
    assert sample_flip_time(spec, (2.0, 2.0)) == 2.0
    with pytest.raises(ValueError):
        sample_flip_time(spec, (1.0, 0.0))
    with pytest.raises(ValueError):
        sample_flip_time(spec, (0.0, math.inf))


def test_flip_time_uniformity():
    spec = NoiseSpec(kind="telegraph", tau_c=1.0, sigma=1.0, seed=23)
    lo, hi = default_t0_window(1.0)
    n = 100000
    draws = np.array(
        [sample_flip_time(spec, (lo, hi), trajectory_index=i) for i in range(n)]
    )
    se = draws.std(ddof=1) / math.sqrt(n)
    assert abs(draws.mean() - 0.5 * (lo + hi)) < 4 * se

    u = np.sort((draws - lo) / (hi - lo))
    ks = np.max(np.abs(u - np.arange(1, n + 1) / n))
    assert ks < 0.01


def test_path_csv_round_trip(tmp_path):
    spec = NoiseSpec(kind="gaussian-ou", tau_c=1.0, sigma=1.0, seed=2)
    grid = np.linspace(0.0, 1.0, 21)
    path = sample_ou_path(spec, grid)
    out = tmp_path / "path.csv"
    path.to_csv(out)
    body = out.read_text().splitlines()
    assert body[0] == "t,value"
    data = np.array([[float(x) for x in line.split(",")] for line in body[1:]])
    assert np.array_equal(data[:, 0], grid)
    assert np.array_equal(data[:, 1], path.values)
