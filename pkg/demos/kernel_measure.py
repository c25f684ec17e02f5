"""Representing Fox-Wright functions as integrals against a kernel on (0, t*].

With mu = 0 the measure has a point mass eta at t* = 1/rho; the rest is a
density.  Run with ``python demos/kernel_measure.py``.
"""
import math

from foxh import FoxWrightSpec, eval_fw, exp_shifted_rep, integral_rep_fw, kernel_support, stieltjes_rep

step = FoxWrightSpec(upper=((1, 1),), lower=((2, 1),))
print("kernel of (e^z - 1)/z is the indicator of (0, 1]; t* =", kernel_support(step))
for z in (-2.0, 0.5):
    print(f"  z={z:+}: integral {integral_rep_fw(step, z):.14f}  series {eval_fw(step, z):.14f}")

print("\nStieltjes form at sigma = 2, z = 0.5, against 1/(1+z)")
# int_0^1 (1 + t z)^-2 dt = 1/(1+z)
print(f"  {stieltjes_rep(step, 2.0, 0.5):.14f}  {1 / 1.5:.14f}")

atom = FoxWrightSpec(upper=((1, 0.5), (1.3, 0.5)), lower=((1.8, 1),))
print("\nmu =", round(atom.mu, 12), "so the measure has an atom")
for z in (0.3, 1.0, 4.0):
    dens, c = exp_shifted_rep(atom, z, nodes=64)
    total = c.eta * math.exp(-c.t_star * z) + dens
    print(f"  z={z}: eta e^(-t* z) + density = {total:.12f}   series {eval_fw(atom, -z):.12f}")
print(f"  eta = {c.eta:.10f}, rho = {c.rho:g}, t* = {c.t_star:g}")
