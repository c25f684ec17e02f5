"""Evaluate a few H-functions by both routes and compare with closed forms.

Run with ``python demos/evaluate_routes.py``.
"""
import numpy as np
import scipy.special as sc

from foxh import (
    FoxWrightSpec,
    eval_h,
    eval_h_series,
    exp_spec,
    from_fox_wright,
    laplace_numeric,
    laplace_of_h,
    mittag_leffler,
    mittag_leffler_spec,
)

z = np.array([0.1, 1.0, 4.0])

print("exp(-z) as an H-function")
print("  contour:", eval_h(exp_spec(), z))
print("  series: ", eval_h_series(exp_spec(), z))
print("  exact:  ", np.exp(-z))

# E_{1/2}(-x) = erfcx(x); the H form carries the negated argument
ml = mittag_leffler_spec(0.5, 1.0, 1.0)
print("\nMittag-Leffler E_1/2(-x)")
print("  H contour:   ", eval_h(ml, z))
print("  series route:", [mittag_leffler(0.5, 1.0, 1.0, -x) for x in z])
print("  erfcx:       ", sc.erfcx(z))

# (1 - e^{-z}) / z through its Fox-Wright image
fw = FoxWrightSpec(upper=((1, 1),), lower=((2, 1),))
print("\n1Psi1[(1,1);(2,1)](-z) = (1 - e^-z)/z")
print("  H image:", eval_h(from_fox_wright(fw), z))
print("  exact:  ", (1 - np.exp(-z)) / z)

print("\nLaplace transform of exp(-t): closed image vs quadrature vs 1/(1+s)")
for s in (0.5, 2.0):
    print(f"  s={s}: {laplace_of_h(exp_spec())(s):.15f} {laplace_numeric(exp_spec(), s):.15f} {1 / (1 + s):.15f}")
