import math

import numpy as np
import pytest

from dkmodel.averaging import (
    AverageSpec,
    AveragingConvergenceError,
    average_over_j,
    average_over_t0,
    monte_carlo_survival,
)
from dkmodel.model import DKParams
from dkmodel.noise import NoiseSpec


def test_average_spec_validation():
    with pytest.raises(ValueError):
        AverageSpec(t0_points=2)
    with pytest.raises(ValueError):
        AverageSpec(quad_order=1)
    with pytest.raises(ValueError):
        AverageSpec(mc_trajectories=0)
    with pytest.raises(ValueError):
        AverageSpec(t0_window=(1.0, 1.0))


def test_t0_average_constant_integrand():
    spec = AverageSpec(t0_window=(-5.0, 5.0))
    assert average_over_t0(lambda t0: 0.37, spec) == pytest.approx(0.37, abs=1e-12)
    # literal (unnormalized) switch-time measure carries the window/tau_c scale
    lit = average_over_t0(lambda t0: 0.37, spec, normalized=False, tau_c=2.0)
    assert lit == pytest.approx(0.37 * 10.0 / 2.0, abs=1e-9)


def test_t0_average_gaussian_bump_closed_form():
    spec = AverageSpec(t0_window=(-5.0, 5.0))
    got = average_over_t0(lambda t0: math.exp(-0.5 * t0 * t0), spec)
    want = math.sqrt(2.0 * math.pi) * math.erf(5.0 / math.sqrt(2.0)) / 10.0
    assert got == pytest.approx(want, abs=1e-8)


def test_t0_average_nonconvergence_error():
    spec = AverageSpec(t0_window=(-5.0, 5.0))
    with pytest.raises(AveragingConvergenceError):
        average_over_t0(
            lambda t0: math.cos(1e6 * t0) + math.cos(777.7 * t0),
            spec, tol=1e-12, max_refinements=3,
        )


def test_j_average_moments():
    spec = AverageSpec(j_sigma=1.7)
    assert average_over_j(lambda j: 3.25, spec) == pytest.approx(3.25, abs=1e-12)
    assert average_over_j(lambda j: j * j, spec) == pytest.approx(1.7**2, rel=1e-10)


def test_j_average_requires_positive_sigma():
    with pytest.raises(ValueError):
        average_over_j(lambda j: 1.0, AverageSpec(j_sigma=0.0))


def test_monte_carlo_zero_noise():
    p = DKParams(0.0, 5.0, math.pi / 2)
    spec = NoiseSpec(kind="telegraph", tau_c=1.0, sigma=0.0, seed=1)
    r = monte_carlo_survival(p, spec, n=128, t_max=12.0)
    assert r.q == pytest.approx(1.0, abs=1e-12)
    assert r.stderr == pytest.approx(0.0, abs=1e-14)
    assert r.provenance == "monte-carlo"


def test_monte_carlo_stderr_scaling():
    p = DKParams(0.0, 5.0, math.pi / 2)
    spec = NoiseSpec(kind="telegraph", tau_c=1.0, sigma=math.pi / 2, seed=6)
    ns = [100, 1000, 10000]
    errs = [monte_carlo_survival(p, spec, n=n, t_max=12.0).stderr for n in ns]
    slope = np.polyfit(np.log(ns), np.log(errs), 1)[0]
    assert -0.6 <= slope <= -0.4
    for n, e in zip(ns, errs):
        r = monte_carlo_survival(p, spec, n=n, t_max=12.0)
        assert 0.0 <= r.q <= 1.0
