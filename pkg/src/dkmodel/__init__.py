"""Exactly solvable two-level transition dynamics for hyperbolic-secant pulses
with telegraph and Ornstein-Uhlenbeck coupling noise.

The library exposes closed-form survival probabilities (each in an
``as-printed`` and an oracle-``validated`` variant), an adaptive Schrodinger
propagator that serves as ground truth, colored-noise samplers, deterministic
switch-time and coupling-distribution averages, and a Monte-Carlo trajectory
ensemble.  See the README for usage and the ``dkmodel`` CLI for table
generation and verification.
"""

__version__ = "0.1.0"

from .analytic import (
    AsymptoticGaps,
    DiscrepancyRecord,
    MatchedCoefficients,
    RotatedFrameError,
    SurvivalResult,
    TransformedParams,
    asymptotic_gaps,
    discrepancy_ledger,
    matched_coefficients,
    matching_residual,
    survival_ae,
    survival_gaussian,
    survival_noise_free,
    survival_rz,
    survival_telegraph_single_flip,
    transformed_params,
    wavefunction_pre_switch,
)
from .averaging import (
    AverageSpec,
    AveragingConvergenceError,
    average_over_j,
    average_over_t0,
    monte_carlo_survival,
)
from .model import (
    DKParams,
    HypergeomParams,
    adiabatic_gap,
    dk_hypergeometric_params,
    hamiltonian_at,
    level_crossing_time,
    z_of_t,
)
from .noise import (
    GridTooCoarseError,
    NoisePath,
    NoiseSpec,
    default_t0_window,
    sample_flip_time,
    sample_ou_path,
    sample_telegraph_path,
)
from .propagator import (
    CouplingProfile,
    PropagationError,
    constant_coupling,
    ensemble_survival,
    propagate,
    sampled_path_coupling,
    single_flip_coupling,
    survival_gaussian_numeric,
    survival_numeric,
    tanh_offset_coupling,
)
from .specfun import (
    DegenerateConnectionError,
    GammaPoleError,
    Hyp2F1ConvergenceError,
    Hyp2F1DomainError,
    SpecialFunctionError,
    UnitySummationError,
    complex_gamma,
    hyp2f1,
    hyp2f1_at_unity,
)

__all__ = [
    "__version__",
    # model
    "DKParams",
    "HypergeomParams",
    "dk_hypergeometric_params",
    "z_of_t",
    "hamiltonian_at",
    "level_crossing_time",
    "adiabatic_gap",
    # specfun
    "complex_gamma",
    "hyp2f1",
    "hyp2f1_at_unity",
    "SpecialFunctionError",
    "GammaPoleError",
    "Hyp2F1DomainError",
    "Hyp2F1ConvergenceError",
    "DegenerateConnectionError",
    "UnitySummationError",
    # analytic
    "SurvivalResult",
    "MatchedCoefficients",
    "TransformedParams",
    "AsymptoticGaps",
    "DiscrepancyRecord",
    "RotatedFrameError",
    "survival_noise_free",
    "survival_ae",
    "survival_rz",
    "survival_telegraph_single_flip",
    "survival_gaussian",
    "wavefunction_pre_switch",
    "matched_coefficients",
    "matching_residual",
    "transformed_params",
    "asymptotic_gaps",
    "discrepancy_ledger",
    # propagator
    "CouplingProfile",
    "constant_coupling",
    "single_flip_coupling",
    "tanh_offset_coupling",
    "sampled_path_coupling",
    "propagate",
    "survival_numeric",
    "survival_gaussian_numeric",
    "ensemble_survival",
    "PropagationError",
    # noise
    "NoiseSpec",
    "NoisePath",
    "GridTooCoarseError",
    "sample_telegraph_path",
    "sample_ou_path",
    "sample_flip_time",
    "default_t0_window",
    # averaging
    "AverageSpec",
    "AveragingConvergenceError",
    "average_over_t0",
    "average_over_j",
    "monte_carlo_survival",
]
