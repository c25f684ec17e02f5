"""Numerical surrogates for non-negativity, (log-)complete monotonicity,
positive definiteness, ratio monotonicity and the Chebyshev integral
inequality.

Every checker returns a :class:`PropertyReport` whose ``worstMargin`` is the
most negative value of the quantity the property says should be
non-negative, after normalization, and ``passed`` is ``worstMargin >= -eps``.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy import integrate

from .errors import ConvergenceError, FoxHError, PreconditionError
from .evaluate import evaluate
from .spec import HFunctionSpec, asymptotic_exponent, shift_power

__all__ = [
    "GridSpec",
    "PropertyReport",
    "check_nonnegativity",
    "check_complete_monotonicity",
    "check_log_cm",
    "check_positive_definite",
    "check_ratio_monotone",
    "kappa_ratio",
    "kappa_ratio_direct",
    "chebyshev_check",
    "radial",
]

_TINY = np.finfo(float).tiny


@dataclass(frozen=True)
class GridSpec:
    lo: float
    hi: float
    count: int = 100
    spacing: str = "linear"

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"grid needs lo < hi (got {self.lo}, {self.hi})")
        if self.count < 2:
            raise ValueError("grid needs at least 2 points")
        if self.spacing not in ("linear", "log"):
            raise ValueError(f"unknown spacing {self.spacing!r}")
        if self.spacing == "log" and self.lo <= 0:
            raise ValueError("log spacing needs lo > 0")

    def points(self) -> np.ndarray:
        if self.spacing == "log":
            return np.geomspace(self.lo, self.hi, self.count)
        return np.linspace(self.lo, self.hi, self.count)

    @property
    def span(self) -> float:
        return self.hi - self.lo


@dataclass
class PropertyReport:
    """Outcome of one checker run or one theorem suite.

    ``failures`` holds ``(sample, point, value)`` triples; ``samples`` holds one
    entry per parameter sample for suite runs (index, params, margin, passed).
    """

    theoremId: str
    samplesTested: int
    worstMargin: float
    failures: list = field(default_factory=list)
    passed: bool = True
    eps: float = 0.0
    samples: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    def to_json(self, seed: int | None = None, config: dict | None = None) -> str:
        """Deterministic JSON: sorted keys, no timings, floats in repr form."""
        doc = {
            "theoremId": self.theoremId,
            "seed": seed,
            "config": config or {},
            "samplesTested": self.samplesTested,
            "worstMargin": _jsonable(self.worstMargin),
            "passed": self.passed,
            "eps": self.eps,
            "failures": _jsonable(self.failures),
            "samples": _jsonable(self.samples),
            "details": _jsonable(self.details),
        }
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["theorem", "sample_index", "param_json", "worst_margin", "passed"])
        for s in self.samples:
            w.writerow([
                self.theoremId,
                s["index"],
                json.dumps(_jsonable(s["params"]), sort_keys=True),
                repr(float(s["margin"])),
                str(bool(s["passed"])).lower(),
            ])
        return buf.getvalue()


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, (np.floating, float)):
        x = float(obj)
        return x if math.isfinite(x) else repr(x)
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, np.bool_):
        return bool(obj)
    if isinstance(obj, np.ndarray):
        return _jsonable(obj.tolist())
    return obj


def _safe_eval(f: Callable, x: np.ndarray) -> tuple[np.ndarray, list]:
    """Vectorized call with a pointwise fallback; failures become NaN."""
    try:
        with np.errstate(all="ignore"):
            vals = np.asarray(f(x), dtype=float)
        if vals.shape == x.shape:
            return vals, []
    except (FoxHError, ArithmeticError, ValueError):
        pass
    out = np.empty(x.shape)
    errs = []
    for i, xi in np.ndenumerate(x):
        try:
            out[i] = float(f(float(xi)))
        except (FoxHError, ArithmeticError, ValueError) as exc:
            out[i] = math.nan
            errs.append((float(xi), f"{type(exc).__name__}: {exc}"))
    return out, errs


def _finish(theorem_id, margins, points, eps, failures, keep: int = 20) -> PropertyReport:
    margins = np.asarray(margins, dtype=float)
    bad = np.isnan(margins)
    worst = -math.inf if bad.any() else float(np.min(margins))
    idx = np.flatnonzero(bad | (margins < -eps))
    for i in idx[:keep]:
        failures.append((None, float(points[i]), float(margins[i])))
    return PropertyReport(
        theoremId=theorem_id,
        samplesTested=1,
        worstMargin=worst,
        failures=failures,
        passed=bool(worst >= -eps),
        eps=eps,
    )


def check_nonnegativity(f: Callable, grid: GridSpec, eps: float = 1e-6, theorem_id: str = "nonnegativity") -> PropertyReport:
    """``worstMargin = min f`` over the grid; a point that fails to evaluate counts as a failure."""
    x = grid.points()
    vals, errs = _safe_eval(f, x)
    failures = [(None, p, msg) for p, msg in errs]
    return _finish(theorem_id, vals, x, eps, failures)


def _alternation_margins(vals: np.ndarray, orders: range, scale: np.ndarray) -> np.ndarray:
    """Rows: grid points; ``vals[:, j] = f(x + j h)``.  Returns min over orders of
    ``(-1)^k Delta^k f / scale``."""
    worst = np.full(vals.shape[0], np.inf)
    diff = vals.copy()
    for k in range(0, max(orders) + 1):
        if k:
            diff = diff[:, 1:] - diff[:, :-1]
        if k in orders:
            m = ((-1) ** k) * diff[:, 0] / scale
            worst = np.minimum(worst, m)
    return worst


def check_complete_monotonicity(
    f: Callable,
    interval: GridSpec,
    maxOrder: int = 6,
    eps: float = 1e-6,
    theorem_id: str = "complete-monotonicity",
    min_order: int = 0,
) -> PropertyReport:
    """Forward-difference test ``(-1)^k Delta_h^k f(x) >= -eps * local|f|``.

    ``h = span / (count * maxOrder)``; each grid point needs ``f`` at
    ``x, x + h, ..., x + maxOrder h``, so the interval is extended to the
    right by ``maxOrder`` steps.  Orders ``min_order..maxOrder`` are tested.
    """
    x = interval.points()
    h = interval.span / (interval.count * maxOrder)
    offsets = h * np.arange(maxOrder + 1)
    xs = x[:, None] + offsets[None, :]
    vals, errs = _safe_eval(f, xs)
    return _cm_report(vals, x, maxOrder, eps, theorem_id, min_order, errs, h)


def _cm_report(vals, x, maxOrder, eps, theorem_id, min_order, errs, h, floor: float = 0.0):
    scale = np.maximum(np.max(np.abs(vals), axis=1), max(floor, _TINY))
    margins = _alternation_margins(vals, range(min_order, maxOrder + 1), scale)
    margins = np.where(np.isnan(vals).any(axis=1), np.nan, margins)
    failures = [(None, p, msg) for p, msg in errs]
    rep = _finish(theorem_id, margins, x, eps, failures)
    rep.details = {"h": h, "maxOrder": maxOrder}
    return rep


def check_log_cm(
    f: Callable,
    interval: GridSpec,
    maxOrder: int = 6,
    eps: float = 1e-6,
    theorem_id: str = "log-complete-monotonicity",
) -> PropertyReport:
    """Alternation of ``log f`` from order 1.

    Margins are scaled by ``max(local |log f|, 1)``, since ``log f`` may
    vanish.  Raises :class:`PreconditionError` if ``f <= 0`` somewhere.
    """
    x = interval.points()
    h = interval.span / (interval.count * maxOrder)
    xs = x[:, None] + h * np.arange(maxOrder + 1)[None, :]
    vals, errs = _safe_eval(f, xs)
    if np.any(vals[~np.isnan(vals)] <= 0):
        i = np.argwhere(vals <= 0)[0]
        raise PreconditionError("f > 0", f"f({xs[tuple(i)]:.6g}) = {vals[tuple(i)]:.3g}")
    return _cm_report(np.log(vals), x, maxOrder, eps, theorem_id, 1, errs, h, floor=1.0)


def radial(g: Callable) -> Callable:
    """Lift a profile ``g(r)`` to ``x -> g(|x|)`` for :func:`check_positive_definite`."""

    def f(diff):
        diff = np.asarray(diff, dtype=float)
        r = np.abs(diff) if diff.ndim == 2 else np.linalg.norm(diff, axis=-1)
        return g(r)

    return f


def check_positive_definite(
    f: Callable,
    d: int = 1,
    numPoints: int = 16,
    trials: int = 20,
    eps: float = 1e-8,
    seed: int = 0,
    spread: float = 5.0,
    theorem_id: str = "positive-definite",
) -> PropertyReport:
    """Random Gram-matrix test of ``[f(x_j - x_k)]``.

    For ``d == 1`` ``f`` receives the ``(N, N)`` array of signed differences,
    otherwise the ``(N, N, d)`` array of difference vectors.  Points are
    uniform in ``[-spread, spread]^d``; a draw with two points closer than
    ``1e-6 * spread`` is redrawn (at most 10 times).  The margin of a trial is
    ``lambda_min / max|lambda|``.  A failing trial records the point set and
    the eigenvector; when a 2x2 principal minor is already indefinite the pair
    is recorded as a certificate.
    """
    streams = np.random.SeedSequence(seed).spawn(trials)
    worst = math.inf
    failures = []
    for t, ss in enumerate(streams):
        rng = np.random.default_rng(ss)
        for _ in range(10):
            pts = rng.uniform(-spread, spread, size=(numPoints, d))
            dist = np.linalg.norm(pts[:, None, :] - pts[None, :, :], axis=-1)
            np.fill_diagonal(dist, np.inf)
            if dist.min() > 1e-6 * spread:
                break
        else:
            raise PreconditionError("distinct points", "10 degenerate draws in a row")
        diff = pts[:, None, :] - pts[None, :, :]
        gram = np.asarray(f(diff[..., 0] if d == 1 else diff), dtype=complex)
        gram = 0.5 * (gram + gram.conj().T)
        lam, vec = np.linalg.eigh(gram)
        top = max(np.max(np.abs(lam)), _TINY)
        margin = float(lam[0] / top)
        worst = min(worst, margin)
        if margin < -eps:
            cert = {"trial": t, "points": pts.tolist(), "eigenvalue": float(lam[0]), "vector": np.real_if_close(vec[:, 0]).real.tolist()}
            pair = _indefinite_pair(gram)
            if pair is not None:
                cert["pair"] = pair
            failures.append((t, None, cert))
    return PropertyReport(
        theoremId=theorem_id,
        samplesTested=trials,
        worstMargin=worst,
        failures=failures,
        passed=bool(worst >= -eps),
        eps=eps,
    )


def _indefinite_pair(gram: np.ndarray):
    diag = gram.diagonal().real
    det = diag[:, None] * diag[None, :] - np.abs(gram) ** 2
    np.fill_diagonal(det, np.inf)
    i, j = np.unravel_index(np.argmin(det), det.shape)
    return [int(i), int(j)] if det[i, j] < 0 else None


def check_ratio_monotone(
    num: Callable,
    den: Callable,
    interval: GridSpec,
    direction: str = "decreasing",
    eps: float = 1e-10,
    theorem_id: str = "ratio-monotone",
) -> PropertyReport:
    """Consecutive ratios ``r = num/den`` move in ``direction`` up to ``eps * max|r|``."""
    if direction not in ("increasing", "decreasing"):
        raise ValueError(f"direction must be increasing or decreasing, not {direction!r}")
    x = interval.points()
    nv, e1 = _safe_eval(num, x)
    dv, e2 = _safe_eval(den, x)
    failures = [(None, p, msg) for p, msg in e1 + e2]
    zero = dv == 0
    for p in x[zero]:
        failures.append((None, float(p), "zero denominator"))
    with np.errstate(divide="ignore", invalid="ignore"):
        r = np.where(zero, np.nan, nv / dv)
    step = np.diff(r)
    if direction == "decreasing":
        step = -step
    scale = max(float(np.nanmax(np.abs(r))) if np.isfinite(r).any() else 1.0, _TINY)
    rep = _finish(theorem_id, step / scale, x[:-1], eps, failures)
    rep.details = {"direction": direction}
    return rep


_GL32 = leggauss(32)


def _log_rule(lo: float, hi: float, panels: int):
    """Gauss-Legendre nodes in ``u = log t`` on ``[lo, hi]``; weights include ``dt/t``."""
    x, w = _GL32
    edges = np.linspace(math.log(lo), math.log(hi), panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[1:] + edges[:-1])
    u = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    wu = (half[:, None] * w[None, :]).ravel()
    return np.exp(u), wu


def kappa_ratio(
    spec: HFunctionSpec,
    delta: float,
    sigma: float,
    psi: Callable,
    a: float,
    b: float,
    z,
    tol: float = 1e-10,
) -> float | np.ndarray:
    r"""Ratio of weighted kernel integrals

    .. math:: \frac{\int_a^b t^{\delta-1} H(t)\,\psi(zt)^\sigma dt}
                   {\int_a^b t^{-1} H(t)\,\psi(zt)^\sigma dt}

    which is the shifted-parameter ratio after the power-shift rewrite.  The
    integrals use Gauss-Legendre panels in ``log t``; for ``a == 0`` the lower
    end is cut where ``t^c`` (``c`` the small-argument exponent) drops below
    ``tol``.  The kernel is checked for non-negativity on the nodes.
    """
    if not b > a >= 0:
        raise PreconditionError("0 <= a < b", f"a={a:g}, b={b:g}")
    if sigma == 0:
        raise PreconditionError("sigma != 0")
    lo = a
    if a == 0:
        c = asymptotic_exponent(spec, "zero")
        if not c > 0:
            raise ConvergenceError(f"t^-1 H(t) is not integrable at 0 (small-argument exponent {c:g})")
        lo = b * tol ** (1.0 / c)
    panels = max(4, int(math.ceil(math.log(b / lo))))
    t, w = _log_rule(lo, b, panels)
    h = np.asarray(evaluate(spec, t, tol=tol), dtype=float)
    if np.min(h) < -1e-8 * max(np.max(np.abs(h)), _TINY):
        i = int(np.argmin(h))
        raise PreconditionError("kernel non-negative", f"H({t[i]:.6g}) = {h[i]:.3g}")
    zz = np.atleast_1d(np.asarray(z, dtype=float))
    pw = np.asarray(psi(zz[:, None] * t[None, :]), dtype=float) ** sigma
    den = pw @ (w * h)
    num = pw @ (w * h * t**delta)
    if not (np.all(np.isfinite(num)) and np.all(np.isfinite(den))) or np.any(den == 0):
        raise ConvergenceError("kappa integrals are not finite")
    out = num / den
    return float(out[0]) if np.ndim(z) == 0 else out


def kappa_ratio_direct(spec: HFunctionSpec, delta: float, sigma: float, psi: Callable, a: float, b: float, z: float, tol: float = 1e-10) -> float:
    """Same ratio with the numerator kernel built by shifting the parameters by ``delta``.

    Numerator kernel ``t^-1 H'(t)`` with ``H' = shift_power(spec, delta)``,
    so both routes should agree; used to check the rewrite.
    """
    shifted = shift_power(spec, delta)
    lo = a if a > 0 else b * tol ** (1.0 / asymptotic_exponent(spec, "zero"))
    t, w = _log_rule(lo, b, max(4, int(math.ceil(math.log(b / lo)))))
    pw = np.asarray(psi(z * t), dtype=float) ** sigma
    num = np.dot(w, np.asarray(evaluate(shifted, t, tol=tol)) * pw)
    den = np.dot(w, np.asarray(evaluate(spec, t, tol=tol)) * pw)
    return float(num / den)


def chebyshev_check(p: Callable, f: Callable, g: Callable, a: float, b: float, eps: float = 1e-10) -> tuple[float, float, bool]:
    """``lhs = int p f * int p g`` and ``rhs = int p * int p f g`` on ``[a, b]``.

    ``holds`` is ``lhs <= rhs + eps * max(|lhs|, |rhs|, 1)``; synchronous
    ``f, g`` make it hold and asynchronous ones reverse it.
    """

    def q(fn):
        val, err = integrate.quad(fn, a, b, limit=200, epsabs=1e-13, epsrel=1e-12)
        if not math.isfinite(val):
            raise ConvergenceError("Chebyshev integrals are not finite")
        return val

    ip = q(p)
    ipf = q(lambda t: p(t) * f(t))
    ipg = q(lambda t: p(t) * g(t))
    ipfg = q(lambda t: p(t) * f(t) * g(t))
    lhs, rhs = ipf * ipg, ip * ipfg
    return lhs, rhs, bool(lhs <= rhs + eps * max(abs(lhs), abs(rhs), 1.0))
