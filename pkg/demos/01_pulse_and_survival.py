"""Tour of the noise-free pulse model.

A two-level system driven by a hyperbolic-secant coupling pulse
J*sech(t/T) while the detuning sweeps as delta0 + delta1*tanh(t/T).
The survival probability (population left in the initial bare state after
the pulse) has an exact closed form; here we evaluate it, check it against
direct integration of the Schrodinger equation, and visit the two classic
special cases.
"""

import math

import numpy as np

from dkmodel import (
    DKParams,
    adiabatic_gap,
    constant_coupling,
    hamiltonian_at,
    level_crossing_time,
    survival_ae,
    survival_noise_free,
    survival_numeric,
    survival_rz,
)

p = DKParams(delta0=4.0, delta1=5.0, j=math.pi / 2)

print("== pulse geometry ==")
print(f"parameters: delta0={p.delta0}, delta1={p.delta1}, J={p.j:.4f}, T={p.t_cap}")
t_star = level_crossing_time(p)
print(f"bare levels cross at t* = {t_star:.4f} (detuning zero)")
print(f"minimal adiabatic gap there: {adiabatic_gap(p, p.j, t_star):.4f}")
print("Hamiltonian at t = 0:")
print(np.array_str(hamiltonian_at(p, p.j, 0.0), precision=4))

print()
print("== exact survival vs. numerical integration ==")
analytic = survival_noise_free(p)
oracle = survival_numeric(p, constant_coupling(p.j), t_max=20.0)
print(f"closed form (validated): {analytic.q:.10f}")
print(f"Schrodinger integration: {oracle.q:.10f}")
print(f"difference:              {abs(analytic.q - oracle.q):.2e}")

printed = survival_noise_free(p, "as-printed")
print(f"literature form as printed: {printed.q:.6f}  <- exceeds 1; see the")
print("discrepancy ledger emitted by `dkmodel verify` for the catalog of")
print("printed-vs-validated deviations")

print()
print("== special cases ==")
p_sym = DKParams(delta0=0.0, delta1=5.0, j=math.pi / 2)
print(f"symmetric sweep (delta0 = 0):   Q = {survival_ae(p_sym).q:.8f}")
p_flat = DKParams(delta0=1.0, delta1=0.0, j=0.5)
q_rz = survival_rz(p_flat).q
print(f"constant detuning (delta1 = 0): Q = {q_rz:.8f}")
print(f"  closed form 1 - sin^2(pi T J) sech^2(pi T delta0) = "
      f"{1 - math.sin(math.pi * 0.5) ** 2 / math.cosh(math.pi) ** 2:.8f}")

print()
print("== survival across the coupling strength ==")
print(" J      Q(exact)     Q(oracle)")
for j in (0.5, 1.0, math.pi / 2, 2.5, 3.0):
    pj = DKParams(4.0, 5.0, j)
    qa = survival_noise_free(pj).q
    qo = survival_numeric(pj, constant_coupling(j), t_max=20.0).q
    print(f"{j:5.3f}  {qa:.8f}  {qo:.8f}")
