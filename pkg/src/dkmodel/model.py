"""Model parameters, Hamiltonian geometry, and the t <-> z coordinate map.

Conventions: hbar = 1, all energies in units of 1/t_cap.  The pulse duration
t_cap defaults to 1 so energy parameters read directly as dimensionless
products (energy * t_cap).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "DKParams",
    "HypergeomParams",
    "dk_hypergeometric_params",
    "z_of_t",
    "hamiltonian_at",
    "level_crossing_time",
    "adiabatic_gap",
]


@dataclass(frozen=True)
class DKParams:
    """Deterministic pulse parameters.

    delta0 : static detuning
    delta1 : chirp detuning (amplitude of the tanh sweep)
    j      : nominal coupling amplitude of the sech pulse
    t_cap  : pulse time scale T (> 0)
    """

    delta0: float
    delta1: float
    j: float
    t_cap: float = 1.0

    def __post_init__(self):
        for name in ("delta0", "delta1", "j", "t_cap"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise ValueError(f"{name} must be finite, got {v}")
        if self.t_cap <= 0:
            raise ValueError(f"t_cap must be positive, got {self.t_cap}")


@dataclass(frozen=True)
class HypergeomParams:
    """Hypergeometric parameters (lam, mu, nu) derived from DKParams.

    Identities: lam + mu = 2i*T*delta1 and lam*mu = -(T*j)^2.
    """

    lam: complex
    mu: complex
    nu: complex


def dk_hypergeometric_params(p: DKParams) -> HypergeomParams:
    """Map pulse parameters onto the hypergeometric-equation parameters.

    Uses the principal branch of sqrt(delta1^2 - j^2); for j > |delta1| the
    root is imaginary and the cosh -> cos continuation in the closed-form
    survival probabilities emerges automatically from complex arithmetic.
    """
    t = p.t_cap
    root = cmath.sqrt(complex(p.delta1 * p.delta1 - p.j * p.j))
    lam = 1j * t * (root + p.delta1)
    mu = 1j * t * (p.delta1 - root)
    nu = 0.5 - 1j * t * (p.delta0 - p.delta1)
    return HypergeomParams(lam=lam, mu=mu, nu=nu)


def z_of_t(t: float, t_cap: float) -> float:
    """Compactified time variable z = (1 + tanh(t/T)) / 2 in [0, 1]."""
    if math.isinf(t):
        return 1.0 if t > 0 else 0.0
    return 0.5 * (1.0 + math.tanh(t / t_cap))


def hamiltonian_at(p: DKParams, coupling: float, t: float) -> np.ndarray:
    """2x2 Hamiltonian at time t for the instantaneous coupling value.

    Diagonal +-(delta0 + delta1*tanh(t/T)), off-diagonal coupling*sech(t/T).
    t = +-inf is handled as an explicit limit (off-diagonal -> 0) rather than
    through large-float tanh/sech evaluation.
    """
    if math.isinf(t):
        d = p.delta0 + (p.delta1 if t > 0 else -p.delta1)
        k = 0.0
    else:
        x = t / p.t_cap
        d = p.delta0 + p.delta1 * math.tanh(x)
        k = coupling / math.cosh(x)
    return np.array([[d, k], [k, -d]], dtype=complex)


def level_crossing_time(p: DKParams) -> float | None:
    """Time where the diabatic detuning vanishes, if it exists.

    Returns T*atanh(-delta0/delta1) when |delta0| < |delta1|, else None.
    """
    if abs(p.delta0) < abs(p.delta1):
        return p.t_cap * math.atanh(-p.delta0 / p.delta1)
    return None


def adiabatic_gap(p: DKParams, coupling: float, t: float) -> float:
    """Instantaneous eigenvalue splitting 2*sqrt(D(t)^2 + K(t)^2)."""
    if math.isinf(t):
        d = p.delta0 + (p.delta1 if t > 0 else -p.delta1)
        return 2.0 * abs(d)
    x = t / p.t_cap
    d = p.delta0 + p.delta1 * math.tanh(x)
    k = coupling / math.cosh(x)
    return 2.0 * math.hypot(d, k)
