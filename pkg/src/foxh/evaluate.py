"""Numerical evaluation of H-functions on the positive real ray.

Two independent routes are provided.  :func:`eval_h` integrates the Mellin
kernel along a vertical line that separates the two pole lattices;
:func:`eval_h_series` sums residues at the left poles.  They share nothing
except the kernel and are used to cross-check each other.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from numpy.polynomial.legendre import leggauss

from .errors import ContourError, ConvergenceError, ImaginaryResidueWarning, MultiplePoleError, ToleranceWarning
from .gamma import log_abs_gamma
from .spec import (
    _factor_table,
    HFunctionSpec,
    asymptotic_exponent,
    convergence_params,
    lattice_gap,
    log_mellin_kernel,
)

__all__ = [
    "ContourSpec",
    "HEvaluator",
    "choose_contour",
    "eval_h",
    "eval_h_series",
    "evaluate",
    "asymptotic_exponent",
]

_MIN_GAP = 1e-9
_PANEL_ORDER = 16
_GL_X, _GL_W = leggauss(_PANEL_ORDER)
_MAX_HALF_HEIGHT = 1e5
_MAX_PANELS = 4096
_PHASE_CELLS = 1 << 21
_MAX_MAGNIFICATION = math.log(1e4)


@dataclass(frozen=True)
class ContourSpec:
    """Vertical line ``Re s = abscissa`` truncated to ``|Im s| <= halfHeight``.

    ``nodes`` is the starting node count for the refinement loop and ``scale``
    the width of the sinh map that clusters nodes near the real axis.
    """

    abscissa: float
    halfHeight: float
    nodes: int
    tol: float
    scale: float = 1.0

    def __post_init__(self):
        if self.nodes < 32:
            raise ValueError("a contour needs at least 32 nodes")
        if not self.halfHeight > 0:
            raise ValueError("halfHeight must be positive")


def _abscissa(spec: HFunctionSpec) -> tuple[float, float]:
    lo, hi = lattice_gap(spec)
    if math.isinf(hi) and math.isinf(lo):  # pragma: no cover - excluded by m + n >= 1
        return 0.0, 2.0
    if math.isinf(hi):
        return lo + 0.5, 1.0
    if math.isinf(lo):
        return hi - 0.5, 1.0
    gap = hi - lo
    if gap <= _MIN_GAP:
        raise ContourError(
            f"no separating vertical line: left poles reach {lo:.6g}, right poles start at {hi:.6g}"
        )
    return 0.5 * (lo + hi), gap


def choose_contour(spec: HFunctionSpec, tol: float = 1e-10) -> ContourSpec:
    """Plan a contour for ``spec``.

    The abscissa is the midpoint of the gap between the lattices (half a unit
    to the side of the only lattice when one is empty).  The half-height is
    doubled until the kernel, and the exponential tail beyond it, fall below
    ``tol * 1e-2`` of the peak kernel magnitude on the line.
    """
    if not tol > 0:
        raise ValueError("tol must be positive")
    c, gap = _abscissa(spec)
    rep = convergence_params(spec)
    scale = float(np.clip(gap / 2.0, 1e-3, 1.0))
    probe = np.linspace(0.0, 8.0, 65)
    peak = float(np.max(np.exp(np.real(log_mellin_kernel(spec, c + 1j * probe)))))
    T = 8.0
    if rep.bigD > 0:
        rate = 0.5 * math.pi * rep.bigD
        while T < _MAX_HALF_HEIGHT:
            edge = np.exp(np.real(log_mellin_kernel(spec, np.array([c + 1j * T, c - 1j * T]))))
            if np.max(edge) * (1.0 + 1.0 / rate) <= tol * 1e-2 * peak:
                break
            T *= 2.0
    return ContourSpec(abscissa=c, halfHeight=T, nodes=8 * _PANEL_ORDER, tol=tol, scale=scale)


def _panel_rule(U: float, panels: int) -> tuple[np.ndarray, np.ndarray]:
    edges = np.linspace(-U, U, panels + 1)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1:] - edges[:-1])
    u = (mid[:, None] + half[:, None] * _GL_X[None, :]).ravel()
    w = (half[:, None] * _GL_W[None, :]).ravel()
    return u, w


class HEvaluator:
    """Contour evaluator for one spec, reusable across many arguments.

    The kernel is tabulated once per refinement level; evaluating a new ``z``
    costs one matrix-vector product per level.
    """

    def __init__(self, spec: HFunctionSpec, contour: ContourSpec | None = None, tol: float = 1e-10):
        rep = convergence_params(spec)
        if not rep.bigD > 0:
            raise ConvergenceError(f"nonconvergent integrand: need D > 0 for contour evaluation (D={rep.bigD:g})")
        self.spec = spec
        self.tol = tol
        self.contour = contour if contour is not None else choose_contour(spec, tol)
        self._levels: dict[int, tuple[np.ndarray, np.ndarray, np.ndarray]] = {}
        # the residue series converges everywhere when C > 0
        self.series_ok = spec.n > 0 and rep.bigC > 0

    def _level(self, panels: int):
        if panels not in self._levels:
            ct = self.contour
            h = ct.scale
            U = math.asinh(ct.halfHeight / h)
            u, w = _panel_rule(U, panels)
            t = h * np.sinh(u)
            jac = h * np.cosh(u) * w
            lk = log_mellin_kernel(self.spec, ct.abscissa + 1j * t)
            kern = np.where(np.isneginf(lk.real), 0.0, np.exp(lk)) * jac / (2.0 * math.pi)
            self._levels[panels] = (t, kern, np.abs(kern))
        return self._levels[panels]

    def _integrate(self, logz: np.ndarray, panels: int) -> tuple[np.ndarray, np.ndarray]:
        t, kern, akern = self._level(panels)
        c = self.contour.abscissa
        # bound the phase matrix to about 32 MB
        rows = max(1, _PHASE_CELLS // t.size)
        acc = np.empty(logz.shape, dtype=complex)
        for i in range(0, logz.size, rows):
            acc[i:i + rows] = np.exp(-1j * np.outer(logz[i:i + rows], t)) @ kern
        vals = np.exp(-c * logz) * acc
        l1 = np.exp(-c * logz) * akern.sum()
        return vals, l1

    def __call__(self, z, full_output: bool = False):
        zz = np.asarray(z, dtype=float)
        flat = np.atleast_1d(zz).ravel()
        if np.any(~(flat > 0)):
            raise ValueError("contour evaluation needs z > 0")
        series = self._series_mask(flat)
        if series.all():
            return self._finish(zz, np.zeros(0, dtype=complex), np.zeros(0), np.zeros(0), True, 0, series, flat, full_output)
        logz = np.log(flat[~series])
        panels = max(self.contour.nodes // _PANEL_ORDER, 2)
        prev, _ = self._integrate(logz, panels)
        err = np.full(flat.shape, np.inf)
        converged = False
        while panels < _MAX_PANELS:
            panels *= 2
            cur, l1 = self._integrate(logz, panels)
            err = np.abs(cur - prev)
            thresh = self.tol * np.abs(cur.real) + 64 * np.finfo(float).eps * l1
            prev = cur
            if np.all(err <= thresh):
                converged = True
                break
        return self._finish(zz, prev, err, l1, converged, panels, series, flat, full_output)

    def _series_mask(self, flat: np.ndarray) -> np.ndarray:
        # z^-c magnifies quadrature rounding; past 1e4 the residue series is the better tool
        c = self.contour.abscissa
        if not (self.series_ok and c > 0):
            return np.zeros(flat.shape, dtype=bool)
        return -c * np.log(flat) > _MAX_MAGNIFICATION

    def _finish(self, zz, prev, err, l1, converged, panels, series, flat, full_output):
        if not converged:
            warnings.warn(
                f"contour quadrature stopped at {panels * _PANEL_ORDER} nodes; worst error estimate {err.max():.3g}",
                ToleranceWarning,
                stacklevel=3,
            )
        imag = np.abs(prev.imag)
        floor = 64 * np.finfo(float).eps * l1
        if np.any(imag > 10 * self.tol * np.maximum(1.0, np.abs(prev.real)) + floor):
            warnings.warn(f"imaginary residue {imag.max():.3g} on the real ray", ImaginaryResidueWarning, stacklevel=3)
        if np.any(floor > 1e-6 * np.maximum(np.abs(prev.real), 1e-300) + self.tol):
            warnings.warn(
                f"contour rounding floor {floor.max():.3g} is large against the value; result is unreliable",
                ToleranceWarning,
                stacklevel=3,
            )
        values = np.empty(flat.shape)
        values[~series] = prev.real
        n_series = int(series.sum())
        if n_series:
            try:
                values[series] = eval_h_series(self.spec, flat[series], tol=min(self.tol, 1e-12))
            except (ConvergenceError, MultiplePoleError):
                self.series_ok = False
                return self(zz, full_output=full_output)
        value = values.reshape(zz.shape)
        out = float(value) if zz.ndim == 0 else value
        if not full_output:
            return out
        info = {
            "method": "contour" if not n_series else ("series" if n_series == flat.size else "contour+series"),
            "error": float(err.max()) if err.size else 0.0,
            "imag_residue": float(imag.max()) if imag.size else 0.0,
            "nodes": panels * _PANEL_ORDER,
            "series_points": n_series,
            "abscissa": self.contour.abscissa,
            "half_height": self.contour.halfHeight,
            "converged": converged,
        }
        return out, info


def eval_h(spec: HFunctionSpec, z, contour: ContourSpec | None = None, tol: float = 1e-10, full_output: bool = False):
    """Evaluate ``H(z)`` for ``z > 0`` by Mellin-Barnes quadrature.

    Parameters
    ----------
    spec : HFunctionSpec
    z : float or array_like
        Positive arguments.
    contour : ContourSpec, optional
        Defaults to :func:`choose_contour`.
    tol : float
        Relative tolerance for the node-doubling loop.
    full_output : bool
        Also return a dict with the error estimate, node count and contour.

    Raises
    ------
    ConvergenceError
        When ``D <= 0`` so the kernel does not decay along the line.
    ContourError
        When the pole lattices interlace.
    """
    return HEvaluator(spec, contour, tol)(z, full_output=full_output)


# ---------------------------------------------------------------------------
# Residue series


def _left_terms(spec: HFunctionSpec, emax: float):
    """Residue data at every left pole with exponent ``(a_i + l)/A_i <= emax``.

    Returns exponents, log-magnitudes and signs of the residues of the kernel
    (without the power of ``z``).
    """
    exps, logs, signs = [], [], []
    for i in range(spec.n):
        a, A = spec.upper[i]
        lmax = int(math.floor(A * emax - a))
        if lmax < 0:
            continue
        ell = np.arange(lmax + 1, dtype=float)
        e = (a + ell) / A
        s = -e
        # residue of Gamma(a + A s) at s = -(a + l)/A
        la = -np.log(A) - log_abs_gamma(ell + 1.0)[0]
        sg = np.where(ell % 2 == 0, 1.0, -1.0)
        for kind, idx, c0, c1, numer in _factor_table(spec):
            if kind == "upper" and idx == i:
                continue
            w = c0 + c1 * s
            lg, sgn = log_abs_gamma(w)
            if numer:
                if np.any(sgn == 0):
                    k = int(np.flatnonzero(sgn == 0)[0])
                    raise MultiplePoleError(f"left pole s={s[k]:.12g} is also a pole of the {kind}[{idx}] factor")
                la = la + lg
                sg = sg * sgn
            else:
                la = np.where(sgn == 0, -np.inf, la - lg)
                sg = sg * np.where(sgn == 0, 0.0, sgn)
        exps.append(e)
        logs.append(la)
        signs.append(sg)
    if not exps:
        return np.empty(0), np.empty(0), np.empty(0)
    e = np.concatenate(exps)
    order = np.argsort(e, kind="stable")
    e, la, sg = e[order], np.concatenate(logs)[order], np.concatenate(signs)[order]
    if e.size > 1:
        close = np.flatnonzero(np.diff(e) < 1e-10)
        if close.size:
            k = int(close[0])
            raise MultiplePoleError(f"coincident left poles near s={-e[k]:.12g}")
    return e, la, sg


def _power_terms(e: np.ndarray, z: float) -> tuple[np.ndarray, np.ndarray]:
    """log|z|^e and sign of z**e, for real z (negative z only with integer e)."""
    if z > 0:
        return e * math.log(z), np.ones_like(e)
    if z == 0:
        if np.any(e < 0):
            raise ConvergenceError("residue series has negative powers and cannot be evaluated at z=0")
        return np.where(e == 0, 0.0, -np.inf), np.ones_like(e)
    ei = np.round(e)
    if np.any(np.abs(e - ei) > 1e-12):
        raise ValueError("negative z needs integer exponents in the residue series")
    return e * math.log(-z), np.where(ei % 2 == 0, 1.0, -1.0)


class _ResidueTable:
    """Residue coefficients of one spec, extended on demand and shared across arguments."""

    def __init__(self, spec: HFunctionSpec):
        self.spec = spec
        self.lo_exp = min(a / A for a, A in spec.upper[: spec.n])
        self.emax = -math.inf
        self.data = (np.empty(0), np.empty(0), np.empty(0))

    def upto(self, emax: float):
        if emax > self.emax:
            self.data = _left_terms(self.spec, emax)
            self.emax = emax
        e, la, sg = self.data
        k = int(np.searchsorted(e, emax, side="right"))
        return e[:k], la[:k], sg[:k]


def _series_scalar(table: _ResidueTable, z: float, tol: float, max_terms: int, bigC: float):
    lo_exp = table.lo_exp
    emax = lo_exp + 32.0
    while True:
        e, la, sg = table.upto(emax)
        lz, sz = _power_terms(e, z)
        with np.errstate(invalid="ignore"):
            logt = la + lz
        terms = np.where(np.isneginf(logt) | (sg == 0), 0.0, sg * sz * np.exp(np.where(np.isfinite(logt), logt, -np.inf)))
        if not np.all(np.isfinite(terms)):
            raise ConvergenceError(f"residue series overflowed at z={z:g}")
        total = math.fsum(terms)
        mags = np.abs(terms)
        n = mags.size
        if z == 0:
            return total, n
        if bigC == 0 and n > 40:
            growth = np.diff(mags[-21:])
            if np.all(growth > 0):
                raise ConvergenceError(f"residue series diverges at z={z:g} (terms grew for 20 indices)", estimate=total)
        small = mags < tol * max(abs(total), np.finfo(float).tiny)
        tail = max(n // 4, 3)
        if n >= 12 and np.all(small[-tail:]):
            cancel = 16 * np.finfo(float).eps * mags.max()
            if cancel > 1e-6 * abs(total):
                warnings.warn(
                    f"residue series at z={z:g} lost accuracy to cancellation (error about {cancel:.2g})",
                    ToleranceWarning,
                    stacklevel=3,
                )
            return total, n
        if n >= max_terms:
            raise ConvergenceError(f"residue series did not converge in {n} terms at z={z:g}", estimate=total)
        emax = lo_exp + 2.0 * (emax - lo_exp)


def eval_h_series(spec: HFunctionSpec, z, tol: float = 1e-14, max_terms: int = 100_000, full_output: bool = False):
    """Evaluate ``H(z)`` as the sum of residues at the left poles.

    The series converges for every ``z`` when ``C > 0`` and for ``|z| <
    radius`` when ``C == 0``; ``C < 0`` gives only an asymptotic series and is
    rejected.  Negative ``z`` is accepted when every exponent is an integer,
    which makes Fox-Wright images usable at both signs of the series argument.

    Raises
    ------
    MultiplePoleError
        When two left poles coincide (within 1e-10).
    ConvergenceError
        Outside the convergence domain or when the term budget runs out.
    """
    if spec.n == 0:
        raise ConvergenceError("no left poles: the residue series is empty (n = 0)")
    rep = convergence_params(spec)
    if rep.bigC < 0:
        raise ConvergenceError(f"residue series diverges for C < 0 (C={rep.bigC:g})")
    zz = np.asarray(z, dtype=float)
    flat = np.atleast_1d(zz).ravel()
    if rep.bigC == 0 and np.any(np.abs(flat) >= rep.radius):
        raise ConvergenceError(f"residue series needs |z| < {rep.radius:.10g} when C = 0")
    table = _ResidueTable(spec)
    vals, counts = [], []
    for x in flat:
        v, k = _series_scalar(table, float(x), tol, max_terms, rep.bigC)
        vals.append(v)
        counts.append(k)
    out = np.array(vals).reshape(zz.shape)
    out = float(out) if zz.ndim == 0 else out
    if full_output:
        return out, {"method": "series", "terms": int(max(counts))}
    return out


def evaluate(spec: HFunctionSpec, z, tol: float = 1e-10, full_output: bool = False):
    """Contour evaluation when ``D > 0``, otherwise the residue series."""
    if convergence_params(spec).bigD > 0:
        return eval_h(spec, z, tol=tol, full_output=full_output)
    return eval_h_series(spec, z, full_output=full_output)
