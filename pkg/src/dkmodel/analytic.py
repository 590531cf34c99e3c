"""Closed-form survival probabilities and the printed-vs-validated variant policy.

Every closed-form survival probability here comes in two variants:

* ``as-printed``: the expression in its commonly printed literature form,
  evaluated literally (complex cosh where roots go imaginary, real part
  taken).  Several of these forms fail basic forcing limits: they do not
  return Q = 1 at zero coupling, and the constant-coupling (rotated-frame)
  formula turns out to be the probability of *leaving* the initial adiabatic
  branch rather than staying on it.

* ``validated``: the form fixed by requiring (i) J -> 0 implies Q -> 1 and
  (ii) agreement with the numerical Schrodinger oracle across the acceptance
  grid.  Validated survival values are asserted to lie within 1e-9 of [0, 1]
  and clamped to [0, 1].

``discrepancy_ledger`` evaluates both variants at the forcing limits that
expose each deviation and returns machine-readable records; the CLI ``verify``
command emits them alongside the oracle comparison.

All functions are pure; safe to call concurrently.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

from .model import (
    DKParams,
    HypergeomParams,
    dk_hypergeometric_params,
    z_of_t,
)
from .specfun import complex_gamma, hyp2f1, hyp2f1_at_unity

__all__ = [
    "PROVENANCE_PRINTED",
    "PROVENANCE_VALIDATED",
    "SurvivalResult",
    "MatchedCoefficients",
    "TransformedParams",
    "AsymptoticGaps",
    "DiscrepancyRecord",
    "RotatedFrameError",
    "survival_noise_free",
    "survival_ae",
    "survival_rz",
    "wavefunction_pre_switch",
    "matched_coefficients",
    "matching_residual",
    "switch_basis_values",
    "survival_telegraph_single_flip",
    "transformed_params",
    "asymptotic_gaps",
    "survival_gaussian",
    "discrepancy_ledger",
]

PROVENANCE_PRINTED = "analytic-as-printed"
PROVENANCE_VALIDATED = "analytic-validated"

# z0 closer to an endpoint than this is treated as the degenerate asymptotic
# case of the switch matching: the matched pair is exactly (1, 0).  With
# t_cap = 1 the threshold is reached near |t0| ~ 13.7*T, so the +-15*T
# asymptotic probes land on this path.
_Z_EDGE = 1e-12

_RANGE_TOL = 1e-9


class RotatedFrameError(ValueError):
    """delta1 = 0 makes the rotated-frame parameters singular.

    Callers should fall back to the numerical propagator in that case.
    """


@dataclass(frozen=True)
class SurvivalResult:
    """Scalar survival probability with provenance.

    provenance is one of "analytic-as-printed", "analytic-validated",
    "numeric-oracle", "monte-carlo".  Only the as-printed variant may carry
    values outside [0, 1] (that is the point of keeping it).
    """

    q: float
    provenance: str
    stderr: float | None = None


@dataclass(frozen=True)
class MatchedCoefficients:
    """Superposition weights (A, B) after a coupling sign flip at t0."""

    a_coef: complex
    b_coef: complex
    t0: float


@dataclass(frozen=True)
class TransformedParams:
    """Rotated-frame parameters for the smooth (tanh-offset) coupling form."""

    theta: float
    delta0p: float
    delta1p: float
    jp: float


@dataclass(frozen=True)
class AsymptoticGaps:
    """Half-gaps of the rotated-frame problem at t -> -inf (e_a) and +inf (e_e)."""

    e_a: float
    e_e: float


@dataclass(frozen=True)
class DiscrepancyRecord:
    """One printed-vs-validated deviation, pinned at the forcing limit that exposes it."""

    formula: str
    as_printed: float
    validated: float
    deviation: float
    forcing_limit: str
    params: dict = field(default_factory=dict)


def _validated_result(q: float) -> SurvivalResult:
    if not (-_RANGE_TOL <= q <= 1.0 + _RANGE_TOL):
        raise ArithmeticError(f"validated survival {q} outside [0, 1] tolerance")
    return SurvivalResult(q=min(max(q, 0.0), 1.0), provenance=PROVENANCE_VALIDATED)


def _asymptotic_amplitudes(hp: HypergeomParams) -> tuple[complex, complex]:
    """z -> 1 limits of the two independent reduced solutions' first components."""
    f0 = hyp2f1_at_unity(hp.lam, hp.mu, hp.nu)
    f1 = hyp2f1_at_unity(hp.lam + 1 - hp.nu, hp.mu + 1 - hp.nu, 2 - hp.nu)
    return f0, f1


def _survival_from_switch_coefficients(
    a_coef: complex, b_coef: complex, p: DKParams
) -> SurvivalResult:
    """|A*F0(1) + B*F1(1)|^2: the single shared validated survival path."""
    hp = dk_hypergeometric_params(p)
    f0, f1 = _asymptotic_amplitudes(hp)
    q = abs(a_coef * f0 + b_coef * f1) ** 2
    return _validated_result(q)


# ---------------------------------------------------------------------------
# Noise-free survival and its special cases
# ---------------------------------------------------------------------------


def survival_noise_free(p: DKParams, variant: str = "validated") -> SurvivalResult:
    """Survival probability of the noise-free pulse.

    The as-printed form carries cosh(2*pi*T*delta1) in the numerator and
    fails the J -> 0 forcing limit; the validated form is the zero-switch
    case of the matched-coefficient survival (A = 1, B = 0).
    """
    _check_variant(variant)
    t = p.t_cap
    if variant == "as-printed":
        root = cmath.sqrt(complex(p.delta1**2 - p.j**2))
        num = math.cosh(2 * math.pi * t * p.delta1) + cmath.cosh(2 * math.pi * t * root).real
        den = math.cosh(2 * math.pi * t * p.delta0) + math.cosh(2 * math.pi * t * p.delta1)
        return SurvivalResult(q=num / den, provenance=PROVENANCE_PRINTED)
    return _survival_from_switch_coefficients(1.0, 0.0, p)


def survival_ae(p: DKParams, variant: str = "validated") -> SurvivalResult:
    """Symmetric-sweep special case (delta0 = 0)."""
    _check_variant(variant)
    if p.delta0 != 0.0:
        raise ValueError("survival_ae requires delta0 = 0")
    if variant == "as-printed":
        t = p.t_cap
        root = cmath.sqrt(complex(p.delta1**2 - p.j**2))
        q = 1.0 - (cmath.sinh(math.pi * t * root) ** 2).real / math.cosh(
            math.pi * t * p.delta1
        ) ** 2
        return SurvivalResult(q=q, provenance=PROVENANCE_PRINTED)
    return _survival_from_switch_coefficients(1.0, 0.0, p)


def survival_rz(p: DKParams, variant: str = "validated") -> SurvivalResult:
    """Constant-detuning special case (delta1 = 0)."""
    _check_variant(variant)
    if p.delta1 != 0.0:
        raise ValueError("survival_rz requires delta1 = 0")
    if variant == "as-printed":
        t = p.t_cap
        q = math.cos(math.pi * t * p.j) ** 2 / math.cosh(math.pi * t * p.delta0) ** 2
        return SurvivalResult(q=q, provenance=PROVENANCE_PRINTED)
    return _survival_from_switch_coefficients(1.0, 0.0, p)


# ---------------------------------------------------------------------------
# Pre-switch wavefunction and the continuity matching
# ---------------------------------------------------------------------------


def wavefunction_pre_switch(p: DKParams, t: float) -> tuple[complex, complex]:
    """Diabatic amplitudes (C1, C2) of the exact pre-switch solution at time t.

    Includes the unimodular prefactor z^(-i*T*(d0-d1)/2) * (1-z)^(i*T*(d0+d1)/2)
    that carries the asymptotic dynamical phase; with it the pair matches the
    numerically propagated state componentwise once the global phase is fixed.
    """
    t_cap = p.t_cap
    z = z_of_t(t, t_cap)
    if z <= _Z_EDGE:
        return (1.0 + 0.0j, 0.0 + 0.0j)
    if z >= 1.0:
        raise ValueError(
            "t is so deep in the asymptotic tail that z rounds to 1; the "
            "amplitudes have no pointwise limit there, use the survival "
            "probabilities instead"
        )
    hp = dk_hypergeometric_params(p)
    d = p.delta0 - p.delta1
    s = p.delta0 + p.delta1
    phase = cmath.exp(-0.5j * t_cap * d * math.log(z))
    if z < 1.0:
        phase *= cmath.exp(0.5j * t_cap * s * math.log(1.0 - z))
    c1 = phase * hyp2f1(hp.lam, hp.mu, hp.nu, z)
    if p.j == 0.0:
        return (c1, 0.0 + 0.0j)
    deriv = (hp.lam * hp.mu / hp.nu) * hyp2f1(hp.lam + 1, hp.mu + 1, hp.nu + 1, z)
    c2 = phase * (1j / (t_cap * p.j)) * math.sqrt(z * (1.0 - z)) * deriv
    return (c1, c2)


def switch_basis_values(
    p: DKParams, t0: float
) -> tuple[complex, complex, complex, complex]:
    """Component values (F0, F1, G0, G1) of the two reduced solutions at z0.

    The pre-switch state is (F0, G0); the post-switch family is
    A*(F0, -G0) + B*(F1, -G1).  The square-root branch of lam*mu cancels
    between G0 and G1, so any fixed branch is consistent.
    """
    hp = dk_hypergeometric_params(p)
    lam, mu, nu = hp.lam, hp.mu, hp.nu
    z0 = z_of_t(t0, p.t_cap)
    sq = cmath.sqrt(lam * mu)
    w = math.sqrt(z0 * (1.0 - z0))
    f0 = hyp2f1(lam, mu, nu, z0)
    f1 = z0 ** (1 - nu) * hyp2f1(lam + 1 - nu, mu + 1 - nu, 2 - nu, z0)
    g0 = (sq / nu) * w * hyp2f1(lam + 1, mu + 1, nu + 1, z0)
    g1 = (1.0 / sq) * w * (1 - nu) * z0 ** (-nu) * hyp2f1(
        lam + 1 - nu, mu + 1 - nu, 1 - nu, z0
    )
    return f0, f1, g0, g1


def matched_coefficients(p: DKParams, t0: float) -> MatchedCoefficients:
    """(A, B) fixed by amplitude continuity at the switch time t0.

    For z0 within 1e-12 of an endpoint the matching is degenerate and the
    asymptotic pair (1, 0) is returned: a flip outside the pulse leaves the
    survival at its noise-free value.  (For t0 -> -inf the matched pair truly
    converges to (1, 0); for t0 -> +inf it oscillates without a limit while
    the survival still converges, so (1, 0) is the convention there.)
    """
    if p.j == 0.0:
        # Flipping the sign of a vanishing coupling is the identity.
        return MatchedCoefficients(1.0 + 0.0j, 0.0 + 0.0j, t0)
    z0 = z_of_t(t0, p.t_cap)
    if z0 <= _Z_EDGE or z0 >= 1.0 - _Z_EDGE:
        return MatchedCoefficients(1.0 + 0.0j, 0.0 + 0.0j, t0)
    hp = dk_hypergeometric_params(p)
    lam, mu, nu = hp.lam, hp.mu, hp.nu
    r1 = hyp2f1(lam + 1 - nu, mu + 1 - nu, 1 - nu, z0) / hyp2f1(
        lam + 1, mu + 1, nu + 1, z0
    )
    r2 = hyp2f1(lam + 1 - nu, mu + 1 - nu, 2 - nu, z0) / hyp2f1(lam, mu, nu, z0)
    w = lam * mu * z0 / (nu * (1 - nu))
    a = (r1 + w * r2) / (r1 - w * r2)
    b = 2.0 / (
        -(nu * (1 - nu) / (lam * mu)) * z0 ** (-nu) * r1 + z0 ** (1 - nu) * r2
    )
    return MatchedCoefficients(a, b, t0)


def matching_residual(p: DKParams, coeffs: MatchedCoefficients) -> float:
    """Continuity defect of (A, B): exact matching gives zero.

    Returns |A*F0 + B*F1 - F0| + |A*G0 + B*G1 + G0| at z0(t0).
    """
    f0, f1, g0, g1 = switch_basis_values(p, coeffs.t0)
    a, b = coeffs.a_coef, coeffs.b_coef
    return abs(a * f0 + b * f1 - f0) + abs(a * g0 + b * g1 + g0)


# ---------------------------------------------------------------------------
# Telegraph single-flip survival
# ---------------------------------------------------------------------------


def _cross_term_literature(p: DKParams, reading: str = "as-printed") -> complex:
    """The printed Gamma-ratio coefficient of the A*B cross term.

    The printed expression is internally inconsistent (mismatched
    parentheses, a sqrt(J^2 - delta1^2) / sqrt(J^2 + delta1^2) asymmetry, and
    an apparently real delta1*T term); both root readings are implemented so
    the verify report can show that neither matches the oracle.
    """
    t = p.t_cap
    d0, d1, j = p.delta0, p.delta1, p.j
    num = (
        complex_gamma(0.5 - 0.5j * (d0 + d1) * t)
        * complex_gamma(0.5 - 0.5j * (d0 - d1) * t)
        * complex_gamma(1.5 - 0.5j * (d0 - d1) * t)
        * complex_gamma(0.5 + 0.5j * (d0 + d1) * t)
    )
    root_plus = math.sqrt(j * j + d1 * d1)
    if reading == "as-printed":
        root_minus = cmath.sqrt(complex(j * j - d1 * d1))
    elif reading == "uniform-root":
        root_minus = complex(root_plus)
    else:
        raise ValueError(f"unknown cross-term reading {reading!r}")
    den = (
        complex_gamma((1 - t * root_plus + 1j * d0 * t) / 2)
        * complex_gamma((1 + t * root_plus + 1j * d0 * t) / 2)
        * complex_gamma((2 - t * root_minus - d1 * t) / 2)
        * complex_gamma((2 + t * root_minus - d1 * t) / 2)
    )
    return num / den


def survival_telegraph_single_flip(
    p: DKParams, t0: float, variant: str = "validated"
) -> SurvivalResult:
    """Survival probability when the coupling flips sign once at t0.

    validated: |A*F0(1) + B*F1(1)|^2, the squared asymptotic amplitude of the
    matched post-switch state.  Forcing (A, B) = (1, 0) through this same
    path reproduces the noise-free survival exactly.

    as-printed: the literature three-term form |A|^2(...) + |B|^2(...) +
    (A* B Gamma-ratio + h.c.), with "+h.c." read as twice the real part.  Its
    |B|^2 coefficient [1 - (delta0-delta1)^2 T^2] and its Gamma block both
    deviate from the matched asymptotics (see the discrepancy ledger).
    """
    _check_variant(variant)
    coeffs = matched_coefficients(p, t0)
    a, b = coeffs.a_coef, coeffs.b_coef
    if variant == "validated":
        return _survival_from_switch_coefficients(a, b, p)
    t = p.t_cap
    d0, d1, j = p.delta0, p.delta1, p.j
    root = cmath.sqrt(complex(d1 * d1 - j * j))
    cosh_root = cmath.cosh(2 * math.pi * t * root).real
    den = math.cosh(2 * math.pi * t * d0) + math.cosh(2 * math.pi * t * d1)
    term1 = abs(a) ** 2 * (math.cosh(2 * math.pi * t * d0) + cosh_root) / den
    if b == 0:
        term2 = 0.0
        cross = 0.0
    else:
        term2 = (
            abs(b) ** 2
            * (1.0 - (d0 - d1) ** 2 * t * t)
            * (math.cosh(2 * math.pi * t * d1) - cosh_root)
            / (j * j * t * t * den)
        )
        cross = 2.0 * (a.conjugate() * b * _cross_term_literature(p)).real
    return SurvivalResult(q=term1 + term2 + cross, provenance=PROVENANCE_PRINTED)


# ---------------------------------------------------------------------------
# Smooth (tanh-offset) coupling: rotated frame and survival
# ---------------------------------------------------------------------------


def transformed_params(p: DKParams, t0: float) -> TransformedParams:
    """Rotated-frame parameters for the coupling J*(tanh(t/T) - tanh(t0/T)).

    The rotation angle satisfies tan(2*theta) = J/delta1 with theta in
    (-pi/4, pi/4); delta1 = 0 pushes theta to pi/4 where the frame parameters
    are singular, so that case raises :class:`RotatedFrameError` and callers
    must use the numerical propagator.
    """
    if p.delta1 == 0.0:
        raise RotatedFrameError(
            "delta1 = 0: rotated-frame parameters are singular (theta = pi/4); "
            "use the numerical propagator"
        )
    two_theta = math.atan(p.j / p.delta1)
    c2t = math.cos(two_theta)
    s2t = math.sin(two_theta)
    th0 = math.tanh(t0 / p.t_cap)
    delta0p = (p.delta0 * c2t * c2t - p.delta1 * s2t * s2t * th0) / c2t
    delta1p = p.delta1 / c2t
    jp = (p.delta0 + p.delta1 * th0) * s2t
    return TransformedParams(theta=0.5 * two_theta, delta0p=delta0p, delta1p=delta1p, jp=jp)


def asymptotic_gaps(tp: TransformedParams) -> AsymptoticGaps:
    """Half-gaps of the rotated-frame problem at t -> -inf and t -> +inf."""
    e_a = math.hypot(tp.delta0p - tp.delta1p, tp.jp)
    e_e = math.hypot(tp.delta0p + tp.delta1p, tp.jp)
    return AsymptoticGaps(e_a=e_a, e_e=e_e)


def _log_sinh(x: float) -> float:
    """log(sinh(x)) for x > 0, overflow-safe."""
    return x + math.log1p(-math.exp(-2.0 * x)) - math.log(2.0)


def _cosh_difference_ratio(xn: float, yn: float, xd: float, yd: float) -> float:
    """(cosh(xn) - cosh(yn)) / (cosh(xd) - cosh(yd)) for xn >= yn >= 0, xd > yd >= 0.

    Evaluated in the log domain via cosh(a) - cosh(b) =
    2*sinh((a+b)/2)*sinh((a-b)/2) so that arguments of hundreds do not
    overflow.
    """
    if xn == yn:
        return 0.0
    if xd <= yd:
        raise ArithmeticError("degenerate rotated-frame gaps (vanishing denominator)")
    log_num = _log_sinh(0.5 * (xn + yn)) + _log_sinh(0.5 * (xn - yn))
    log_den = _log_sinh(0.5 * (xd + yd)) + _log_sinh(0.5 * (xd - yd))
    return math.exp(log_num - log_den)


def _transition_rotated_frame(p: DKParams, t0: float) -> float:
    """The printed sinh-product value for the tanh-offset coupling model.

    Equals [cosh(2*pi*T*|delta1'|) - cosh(pi*T*|Ee - Ea|)] /
    [cosh(pi*T*(Ea + Ee)) - cosh(pi*T*|Ee - Ea|)], which always lies in
    [0, 1].  The oracle shows this is the probability of leaving the initial
    adiabatic branch, not of staying on it.
    """
    tp = transformed_params(p, t0)
    gaps = asymptotic_gaps(tp)
    t = p.t_cap
    xn = 2.0 * math.pi * t * abs(tp.delta1p)
    yn = math.pi * t * abs(gaps.e_e - gaps.e_a)
    xd = math.pi * t * (gaps.e_a + gaps.e_e)
    return _cosh_difference_ratio(xn, yn, xd, yn)


def survival_gaussian(p: DKParams, t0: float, variant: str = "validated") -> SurvivalResult:
    """Survival on the initial adiabatic branch for the tanh-offset coupling.

    The coupling J*(tanh(t/T) - tanh(t0/T)) does not vanish asymptotically,
    so survival is defined in the adiabatic basis (same-sign energy branch).
    The oracle pins the printed sinh-product formula to the *complementary*
    probability: validated Q = 1 - as-printed.  At J = 0 the coupling term
    vanishes identically and the problem is trivial: validated Q = 1 (the
    J -> 0 limit of the branch survival is discontinuous in the
    level-crossing regime; that is physical, not numerical).
    """
    _check_variant(variant)
    if p.delta1 == 0.0:
        raise RotatedFrameError(
            "delta1 = 0: no rotated-frame closed form; use the numerical propagator"
        )
    if variant == "as-printed":
        return SurvivalResult(q=_transition_rotated_frame(p, t0), provenance=PROVENANCE_PRINTED)
    if p.j == 0.0:
        return _validated_result(1.0)
    return _validated_result(1.0 - _transition_rotated_frame(p, t0))


# ---------------------------------------------------------------------------
# Discrepancy ledger
# ---------------------------------------------------------------------------


def _check_variant(variant: str) -> None:
    if variant not in ("as-printed", "validated"):
        raise ValueError(f"variant must be 'as-printed' or 'validated', got {variant!r}")


def discrepancy_ledger() -> list[DiscrepancyRecord]:
    """Printed-vs-validated deviations at the forcing limits that expose them."""
    records = []

    p = DKParams(delta0=4.0, delta1=5.0, j=0.0)
    records.append(
        _record(
            "noise-free-survival",
            survival_noise_free(p, "as-printed").q,
            survival_noise_free(p, "validated").q,
            "zero coupling forces Q = 1; printed numerator uses the chirp "
            "detuning where the static detuning belongs",
            {"delta0": 4.0, "delta1": 5.0, "j": 0.0, "t_cap": 1.0},
        )
    )

    p = DKParams(delta0=0.0, delta1=5.0, j=0.0)
    records.append(
        _record(
            "symmetric-sweep-survival",
            survival_ae(p, "as-printed").q,
            survival_ae(p, "validated").q,
            "zero coupling forces Q = 1; printed form gives sech^2(pi*T*delta1)",
            {"delta0": 0.0, "delta1": 5.0, "j": 0.0, "t_cap": 1.0},
        )
    )

    p = DKParams(delta0=4.0, delta1=0.0, j=0.0)
    records.append(
        _record(
            "constant-detuning-survival",
            survival_rz(p, "as-printed").q,
            survival_rz(p, "validated").q,
            "zero coupling forces Q = 1; printed form gives sech^2(pi*T*delta0)",
            {"delta0": 4.0, "delta1": 0.0, "j": 0.0, "t_cap": 1.0},
        )
    )

    p = DKParams(delta0=4.0, delta1=3.0, j=0.0)
    records.append(
        _record(
            "tanh-offset-coupling-survival",
            survival_gaussian(p, 0.0, "as-printed").q,
            survival_gaussian(p, 0.0, "validated").q,
            "zero coupling forces Q = 1; printed sinh-product gives 0 (it is "
            "the branch-transition probability, validated Q = 1 - printed)",
            {"delta0": 4.0, "delta1": 3.0, "j": 0.0, "t0": 0.0, "t_cap": 1.0},
        )
    )

    # T*|delta0 - delta1| = 1 zeroes the printed |B|^2 coefficient
    # [1 - (delta0-delta1)^2 T^2]; the matched asymptotics carry
    # [1/4 + (delta0-delta1)^2 T^2] instead.
    p = DKParams(delta0=4.0, delta1=5.0, j=math.pi / 2)
    records.append(
        _record(
            "single-flip-survival",
            survival_telegraph_single_flip(p, 0.0, "as-printed").q,
            survival_telegraph_single_flip(p, 0.0, "validated").q,
            "T*|delta0-delta1| = 1 kills the printed |B|^2 coefficient and the "
            "printed Gamma cross term matches no reading of the text",
            {"delta0": 4.0, "delta1": 5.0, "j": math.pi / 2, "t0": 0.0, "t_cap": 1.0},
        )
    )
    return records


def _record(
    formula: str, printed: float, validated: float, forcing: str, params: dict
) -> DiscrepancyRecord:
    return DiscrepancyRecord(
        formula=formula,
        as_printed=printed,
        validated=validated,
        deviation=abs(printed - validated),
        forcing_limit=forcing,
        params=params,
    )
