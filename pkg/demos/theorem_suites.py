"""Run property suites and look at the one that does not hold numerically.

Run with ``python demos/theorem_suites.py`` (about half a minute).
"""
import numpy as np

from foxh import eval_fw, h8_spec, hypothesis_constants, run_theorem_suite

for tid in ("H1", "H2", "example-kummer"):
    rep = run_theorem_suite(tid, samples=5, seed=42)
    print(f"{tid:15s} passed={rep.passed}  worst margin {rep.worstMargin:.3g}")

rep = run_theorem_suite("H8", samples=3, seed=42)
print(f"{'H8':15s} passed={rep.passed}  worst margin {rep.worstMargin:.3g}")

# At d = 2 the first function is already negative, so it cannot be completely monotone.
tau = 0.5325092200481576
fw = h8_spec(tau, 2)
c = hypothesis_constants("H8", {"tau": tau, "d": 2})
print(f"\nd=2, tau={tau}: eta1={c.etaVariant:.6f}, t*={c.t_star}")
for z in (1.0, 4.0, 8.0):
    print(f"  g1({z}) = {eval_fw(fw, -z):+.12f}")

# At d = 3 the first function is an exact exponential with rate t* = 1/2
fw3 = h8_spec(0.4, 3)
c3 = hypothesis_constants("H8", {"tau": 0.4, "d": 3})
z = np.array([0.5, 2.0])
print("\nd=3: g1 vs eta1 exp(-z/2):", [eval_fw(fw3, -x) for x in z], c3.etaVariant * np.exp(-z / 2))
