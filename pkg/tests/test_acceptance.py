"""Acceptance criteria 1-8.

Each criterion is a function returning ``(passed, detail)``; the pytest test
asserts it and records a one-line verdict that ``conftest.py`` prints at the
end of the run.  ``python tests/test_acceptance.py`` prints the same lines
without pytest.
"""

from __future__ import annotations

import math
import os
import sys
import tempfile
import time
import warnings

import numpy as np
import pytest

from foxh import (
    FoxWrightSpec,
    GridSpec,
    HFunctionSpec,
    chebyshev_check,
    check_complete_monotonicity,
    check_log_cm,
    check_positive_definite,
    eval_fw,
    eval_h,
    eval_h_series,
    evaluate,
    exp_spec,
    from_fox_wright,
    hankel_numeric,
    hankel_of_h,
    invert_argument,
    laplace_numeric,
    laplace_of_h,
    mittag_leffler,
    mittag_leffler_spec,
    radial,
    reduce_matching_pair,
    run_theorem_suite,
    scale_argument,
    shift_power,
    bessel_kernel,
    e1_spec,
)
from foxh.cli import main as cli_main

RESULTS: dict[int, tuple[bool, str]] = {}


def _record(n: int, ok: bool, detail: str) -> None:
    RESULTS[n] = (ok, detail)
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}")


def _rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


def oracle_fw_specs(count: int = 20, seed: int = 7) -> list[FoxWrightSpec]:
    """Fox-Wright specs whose H image has D > 0 and Delta >= 0.6.

    Smaller Delta makes the alternating series at z = 4 lose digits to
    cancellation (the series evaluators warn), so such specs are not admissible
    for a 1e-7 comparison.
    """
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        p, q = int(rng.integers(1, 3)), int(rng.integers(1, 3))
        up = [(float(rng.uniform(0.2, 3.0)), float(rng.uniform(0.3, 1.5))) for _ in range(p)]
        lo = [(float(rng.uniform(0.5, 3.0)), float(rng.uniform(0.3, 1.5))) for _ in range(q)]
        fw = FoxWrightSpec(up, lo)
        sa, sb = sum(A for _, A in up), sum(B for _, B in lo)
        if fw.delta >= 0.6 and 1 + sa - sb > 0.3:
            out.append(fw)
    return out


# ---------------------------------------------------------------------------


def criterion_1():
    t0 = time.perf_counter()
    worst = 0.0
    for fw in oracle_fw_specs():
        img = from_fox_wright(fw)
        for z in (0.25, 1.0, 4.0):
            c = eval_h(img, z, tol=1e-12)
            s = eval_h_series(img, z)
            f = eval_fw(fw, -z)
            worst = max(worst, _rel(c, s), _rel(c, f), _rel(s, f))
    dt = time.perf_counter() - t0
    return worst <= 1e-7 and dt < 60, f"20 specs x 3 points, worst pairwise rel {worst:.2e}, {dt:.1f}s"


def criterion_2():
    xs = np.linspace(0.1, 5.0, 10)
    e1 = float(np.max(np.abs(np.asarray(evaluate(exp_spec(), xs)) - np.exp(-xs))))
    e2 = max(abs(mittag_leffler(1, 1, 1, z) - math.exp(z)) for z in (-2.0, -0.5, 0.5, 1.0, 3.0))
    e3 = abs(mittag_leffler(2, 1, 1, 1.0) - math.cosh(1.0))
    ok = max(e1, e2, e3) <= 1e-9
    return ok, f"exp spec {e1:.1e}, E(1,1) {e2:.1e}, E(2,1)(1) {e3:.1e}"


def _h(spec, z):
    return evaluate(spec, z, tol=1e-12)


def reducible_specs() -> list[tuple[HFunctionSpec, HFunctionSpec]]:
    base = from_fox_wright(FoxWrightSpec([(1.3, 0.7)], [(2.1, 0.5)]))
    extra = (0.7, 0.6)
    # pattern 1: numerator a-pair equal to a denominator b-pair
    s1 = HFunctionSpec(base.m, base.n + 1, (extra,) + base.upper, base.lower + (extra,))
    # pattern 2: numerator b-pair equal to a denominator a-pair
    s2 = HFunctionSpec(base.m + 1, base.n, base.upper + ((0.4, 0.8),), ((0.4, 0.8),) + base.lower)
    base3 = exp_spec()
    s3 = HFunctionSpec(base3.m, base3.n + 1, ((1.5, 1.0),) + base3.upper, base3.lower + ((1.5, 1.0),))
    return [(s1, base), (s2, base), (s3, base3)]


def criterion_3():
    specs = [from_fox_wright(fw) for fw in oracle_fw_specs(10, seed=11)]
    worst = 0.0
    for spec in specs:
        for z in (0.5, 2.0):
            h = _h(spec, z)
            worst = max(worst, _rel(_h(invert_argument(spec), 1.0 / z), h))
            out, k = scale_argument(spec, 1.7)
            worst = max(worst, _rel(k * _h(out, z**k), h))
            worst = max(worst, _rel(_h(shift_power(spec, 0.6), z), z**0.6 * h))
    worst3 = 0.0
    for big, small in reducible_specs():
        red = reduce_matching_pair(big)
        assert red == small
        for z in (0.5, 2.0):
            worst3 = max(worst3, _rel(_h(big, z), _h(small, z)))
    ok = worst <= 1e-7 and worst3 <= 1e-7
    return ok, f"properties 1/2/4 on 10 specs worst rel {worst:.1e}; property 3 on 3 specs worst rel {worst3:.1e}"


def laplace_specs() -> list[HFunctionSpec]:
    fws = oracle_fw_specs(2, seed=3)
    return [
        exp_spec(),
        mittag_leffler_spec(0.5, 1.0, 1.0),
        from_fox_wright(fws[0]),
        from_fox_wright(fws[1]),
        invert_argument(e1_spec(0.5, 0.5, 1.0, 1.0, 1.0)),
    ]


def criterion_4():
    worst = 0.0
    for spec in laplace_specs():
        img = laplace_of_h(spec)
        for s in (0.5, 1.0, 2.0):
            worst = max(worst, abs(laplace_numeric(spec, s) - img(s)))
    return worst <= 1e-5, f"5 specs x 3 points, worst abs diff {worst:.1e}"


def hankel_tuples():
    return [
        (exp_spec(), 1.0, 0.5, 1.0, 1.0),
        (mittag_leffler_spec(0.5, 1.0, 1.0), 1.0, 0.0, 1.0, 1.3),
        (from_fox_wright(FoxWrightSpec([(1.0, 1.0)], [(1.5, 0.5)])), 1.5, 1.0, 1.0, 0.8),
    ]


def criterion_5():
    t0 = time.perf_counter()
    worst = 0.0
    for spec, rho, nu, sigma, x in hankel_tuples():
        lhs = hankel_numeric(spec, rho, nu, sigma, 1.0, x, tol=1e-8)
        rhs = hankel_of_h(spec, rho, nu, sigma)(x)
        worst = max(worst, abs(lhs - rhs))
    dt = time.perf_counter() - t0
    return worst <= 1e-4 and dt < 120, f"3 tuples, worst abs diff {worst:.1e}, {dt:.1f}s"


SUITES = ("H1", "H2", "H3", "H8", "example-kummer")


def run_suite_timed(tid: str):
    t0 = time.perf_counter()
    rep = run_theorem_suite(tid, samples=10, seed=42)
    return rep, time.perf_counter() - t0


def criterion_6():
    parts, ok = [], True
    for tid in SUITES:
        rep, dt = run_suite_timed(tid)
        good = rep.passed and dt < 300 and (tid not in ("H1", "H2") or rep.worstMargin >= -1e-6)
        ok &= good
        parts.append(f"{tid} {'pass' if good else 'FAIL'} (margin {rep.worstMargin:.2g}, {dt:.0f}s)")
    return ok, "; ".join(parts)


def _mixtures(n=20, seed=5):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(n):
        k = int(rng.integers(1, 6))
        c = rng.uniform(0.0, 2.0, k)
        lam = rng.uniform(0.0, 5.0, k)
        out.append(lambda x, c=c, lam=lam: sum(ci * np.exp(-li * np.asarray(x)) for ci, li in zip(c, lam)))
    return out


def _random_pairs(n=50, seed=9):
    rng = np.random.default_rng(seed)
    pairs = []
    for _ in range(n):
        # monotone increasing polynomials on [0,1]: positive coefficients
        cf = rng.uniform(0.1, 2.0, 3)
        cg = rng.uniform(0.1, 2.0, 3)
        cw = rng.uniform(0.1, 2.0, 2)
        f = lambda t, c=cf: c[0] * t + c[1] * t**2 + c[2] * t**3  # noqa: E731
        g = lambda t, c=cg: c[0] * t + c[1] * t**3 + c[2] * t**5  # noqa: E731
        w = lambda t, c=cw: c[0] + c[1] * t  # noqa: E731
        pairs.append((w, f, g))
    return pairs


def criterion_7():
    grid = GridSpec(0.01, 10.0, 100)
    mix_ok = all(check_complete_monotonicity(f, grid).passed for f in _mixtures())
    exp_rej = not check_complete_monotonicity(np.exp, grid).passed
    pd_ok = check_positive_definite(np.cos, 1, 8, seed=1).passed
    pd_ok &= check_positive_definite(radial(lambda r: np.exp(-(r**2))), 3, seed=2).passed
    for nu in (0.5, 1.0, 2.0):
        pd_ok &= check_positive_definite(radial(lambda r, nu=nu: bessel_kernel(nu, r)), 1, seed=3).passed
    pd_rej = not check_positive_definite(radial(lambda r: r**2), 2, seed=4).passed
    sync = all(chebyshev_check(w, f, g, 0.0, 1.0)[2] for w, f, g in _random_pairs())
    asyn = all(not chebyshev_check(w, f, lambda t, g=g: -g(t), 0.0, 1.0)[2] for w, f, g in _random_pairs())
    cands = _mixtures(5, seed=13) + [lambda x: np.exp(-x), lambda x: (1 + x) ** -2.0, lambda x: 1 / (1 + x), lambda x: x + 1.0]
    cons = True
    n_logcm = 0
    for f in cands:
        if check_log_cm(f, grid, 6).passed:
            n_logcm += 1
            cons &= check_complete_monotonicity(f, grid, 6, min_order=1).passed
    ok = mix_ok and exp_rej and pd_ok and pd_rej and sync and asyn and cons
    detail = (f"mixtures {mix_ok}, rejects e^x {exp_rej}, PD cos/gauss/bessel {pd_ok}, rejects |x|^2 {pd_rej}, "
              f"Chebyshev sync {sync} async-reversed {asyn}, logCM=>CM on {n_logcm} functions {cons}")
    return ok, detail


def criterion_8():
    with tempfile.TemporaryDirectory() as tmp:
        blobs = []
        for run in range(2):
            out = os.path.join(tmp, f"run{run}.json")
            code = cli_main(["verify", "H3", "--samples", "3", "--seed", "5", "--out", out])
            with open(out, "rb") as fh:
                j = fh.read()
            with open(out[:-5] + ".csv", "rb") as fh:
                c = fh.read()
            blobs.append((code, j, c))
    r1 = run_theorem_suite("H1", samples=3, seed=9).to_json(seed=9)
    r2 = run_theorem_suite("H1", samples=3, seed=9).to_json(seed=9)
    ok = blobs[0] == blobs[1] and r1 == r2
    return ok, "verify H3 JSON+CSV and H1 report byte-identical across repeated runs" if ok else "reports differ"


CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4, 5: criterion_5, 6: criterion_6, 7: criterion_7, 8: criterion_8}


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_acceptance_criterion(n):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        ok, detail = CRITERIA[n]()
    _record(n, ok, detail)
    assert ok, detail


if __name__ == "__main__":
    fails = 0
    for n, fn in sorted(CRITERIA.items()):
        with warnings.catch_warnings():
            warnings.simplefilter("ignore")
            ok, detail = fn()
        _record(n, ok, detail)
        fails += not ok
    sys.exit(1 if fails else 0)
