import math

import numpy as np
import pytest
from scipy.integrate import solve_ivp

from dkmodel.analytic import survival_ae
from dkmodel.model import DKParams
from dkmodel.noise import NoiseSpec
from dkmodel.propagator import (
    CouplingProfile,
    _rhs,
    constant_coupling,
    ensemble_survival,
    propagate,
    sampled_path_coupling,
    single_flip_coupling,
    survival_gaussian_numeric,
    survival_numeric,
    tanh_offset_coupling,
)


def test_profile_validation():
    with pytest.raises(ValueError):
        CouplingProfile(kind="bogus")
    with pytest.raises(ValueError):
        sampled_path_coupling([0.0, 1.0, 0.5], [1.0, 1.0, 1.0])
    with pytest.raises(ValueError):
        sampled_path_coupling([0.0], [1.0])


def test_zero_coupling_closed_form_phase():
    # decoupled diagonal evolution: C1 = exp(-i * int D dt), |C1| = 1
    p = DKParams(1.3, 2.1, 0.0, t_cap=0.7)
    t0, t1 = -2.0, 3.0
    c1, c2 = propagate(p, constant_coupling(0.0), t0, t1, tol=1e-12)
    integral = p.delta0 * (t1 - t0) + p.delta1 * p.t_cap * (
        math.log(math.cosh(t1 / p.t_cap)) - math.log(math.cosh(t0 / p.t_cap))
    )
    want = complex(math.cos(integral), -math.sin(integral))
    assert abs(c1 - want) < 1e-9
    assert abs(c2) == 0.0


def test_constant_hamiltonian_rabi_formula():
    # freeze the time dependence by feeding a sampled path that cancels the
    # sech envelope: delta1 = 0 and J_noisy(t) = J*cosh(t/T)
    delta, j = 1.1, 0.9
    p = DKParams(delta, 0.0, j)
    t_end = 2.0
    grid = np.linspace(0.0, t_end, 4001)
    path = j * np.cosh(grid / p.t_cap)
    prof = sampled_path_coupling(grid, path)
    c1, _ = propagate(p, prof, 0.0, t_end, tol=1e-11)
    omega = math.hypot(j, delta)
    want = 1.0 - (j**2 / omega**2) * math.sin(omega * t_end) ** 2
    assert abs(c1) ** 2 == pytest.approx(want, abs=1e-5)


def test_norm_conservation_and_self_convergence():
    p = DKParams(4.0, 5.0, math.pi / 2)
    prof = constant_coupling(p.j)
    tol = 1e-10
    c1, c2 = propagate(p, prof, -15.0, 15.0, tol=tol)
    assert abs(abs(c1) ** 2 + abs(c2) ** 2 - 1.0) < 10 * tol

    # the default 15T window carries a genuine ~1.5e-7 truncation tail
    # (oscillatory-integral estimate 2J e^{-15}/|1 - i(delta0+delta1)|),
    # well under the 1e-6 validation tolerance; beyond 20T the tail decays
    # exponentially
    q0 = survival_numeric(p, prof, t_max=15.0, tol=1e-10).q
    q_far = survival_numeric(p, prof, t_max=20.0, tol=1e-10).q
    q_farther = survival_numeric(p, prof, t_max=30.0, tol=1e-10).q
    q_tight = survival_numeric(p, prof, t_max=15.0, tol=1e-11).q
    assert abs(q0 - q_far) < 1e-6
    assert abs(q_far - q_farther) < 1e-8
    assert abs(q0 - q_tight) < 1e-7


def test_survival_numeric_contracts():
    p = DKParams(4.0, 5.0, 0.0)
    assert survival_numeric(p, constant_coupling(0.0)).q == pytest.approx(1.0, abs=1e-9)
    with pytest.raises(ValueError):
        survival_numeric(p, constant_coupling(0.0), t_max=5.0)

    p = DKParams(0.0, 5.0, math.pi / 2)
    q_num = survival_numeric(p, constant_coupling(p.j), tol=1e-10).q
    assert q_num == pytest.approx(survival_ae(p).q, abs=1e-6)

    # doubling the window from 20T leaves only the exponentially small tail
    q20 = survival_numeric(p, constant_coupling(p.j), t_max=20.0, tol=1e-10).q
    q40 = survival_numeric(p, constant_coupling(p.j), t_max=40.0, tol=1e-10).q
    assert abs(q20 - q40) < 1e-8
    assert abs(q_num - q40) < 1e-6


def test_time_reversal_round_trip():
    p = DKParams(2.0, 3.0, 1.2)
    prof = constant_coupling(1.2)
    tol = 1e-10
    mid = propagate(p, prof, -6.0, 6.0, tol=tol)
    back = propagate(p, prof, 6.0, -6.0, initial=mid, tol=tol)
    assert abs(back[0] - 1.0) < 100 * tol
    assert abs(back[1]) < 100 * tol


def test_single_flip_breakpoint_honored():
    p = DKParams(4.0, 5.0, math.pi / 2)
    t0 = 0.7
    direct = propagate(p, single_flip_coupling(p.j, t0), -15.0, 15.0, tol=1e-11)
    stage1 = propagate(p, constant_coupling(p.j), -15.0, t0, tol=1e-11)
    stage2 = propagate(p, constant_coupling(-p.j), t0, 15.0, initial=stage1, tol=1e-11)
    assert abs(direct[0] - stage2[0]) < 1e-8
    assert abs(direct[1] - stage2[1]) < 1e-8


def test_order_of_accuracy_matches_nominal():
    # force fixed steps with huge tolerances and a hard step cap; DOP853 is
    # nominally 8th order, so halving the cap should shrink the error ~2^8
    p = DKParams(1.0, 2.0, 0.8)
    prof = constant_coupling(0.8)
    ref = propagate(p, prof, -3.0, 3.0, tol=1e-12)
    rhs = _rhs(p, prof)
    hs = [0.5, 0.35, 0.25, 0.18]
    errs = []
    for h in hs:
        sol = solve_ivp(
            rhs, (-3.0, 3.0), [1, 0, 0, 0], method="DOP853",
            rtol=1e6, atol=1e6, max_step=h, first_step=h,
        )
        y = sol.y[:, -1]
        err = abs(complex(y[0], y[1]) - ref[0]) + abs(complex(y[2], y[3]) - ref[1])
        errs.append(err)
    slope = np.polyfit(np.log(hs), np.log(errs), 1)[0]
    assert 7.5 <= slope <= 8.5


def test_sampled_path_coverage_check():
    p = DKParams(1.0, 1.0, 1.0)
    prof = sampled_path_coupling([-1.0, 0.0, 1.0], [1.0, 1.0, 1.0])
    with pytest.raises(ValueError):
        propagate(p, prof, -2.0, 2.0)


def test_tanh_offset_profile_shape():
    p = DKParams(4.0, 5.0, 1.0)
    prof = tanh_offset_coupling(1.0, 0.5)
    assert prof.offdiagonal(0.5, p) == pytest.approx(0.0, abs=1e-15)
    assert prof.offdiagonal(10.0, p) == pytest.approx(
        1.0 * (math.tanh(10.0) - math.tanh(0.5)), rel=1e-12
    )


def test_gaussian_numeric_trivial_and_branch():
    assert survival_gaussian_numeric(DKParams(4.0, 5.0, 0.0), 0.0).q == 1.0
    # values pinned against the rotated-frame closed form elsewhere; here
    # just check the branch bookkeeping returns a probability
    q = survival_gaussian_numeric(DKParams(4.0, 5.0, 1.0), 0.0, tol=1e-9).q
    assert 0.0 <= q <= 1.0


def test_ensemble_sigma_zero_is_trivial():
    spec = NoiseSpec(kind="telegraph", tau_c=1.0, sigma=0.0, seed=3)
    qs = ensemble_survival(DKParams(0.0, 5.0, math.pi / 2), spec, n=64, t_max=12.0)
    assert np.allclose(qs, 1.0, atol=1e-12)


def test_ensemble_reproducible_and_consistent_with_oracle_engine():
    from dkmodel.averaging import monte_carlo_survival

    p = DKParams(0.0, 5.0, math.pi / 2)
    spec = NoiseSpec(kind="telegraph", tau_c=1.0, sigma=math.pi / 2, seed=12)
    r1 = monte_carlo_survival(p, spec, n=400, t_max=12.0)
    r2 = monte_carlo_survival(p, spec, n=400, t_max=12.0)
    assert r1.q == r2.q and r1.stderr == r2.stderr

    r_orc = monte_carlo_survival(p, spec, n=48, t_max=12.0, tol=1e-7, engine="oracle")
    gap = abs(r1.q - r_orc.q)
    assert gap < 4.0 * math.hypot(r1.stderr, r_orc.stderr)
