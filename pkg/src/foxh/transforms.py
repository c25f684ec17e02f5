r"""Transform identities for H-functions and Fox-Wright kernel representations.

The rewrites (:func:`laplace_of_h`, :func:`hankel_of_h`) return a
:class:`TransformImage`: a spec plus the prefactor and argument maps, so that
``image(x) == coefficient(x) * H_image(argument(x))``.  The ``*_numeric``
functions evaluate the left-hand sides by direct quadrature and exist to
check the rewrites.

For a Fox-Wright spec with ``sum(A) == sum(B)`` the kernel
:math:`K(t) = H^{p,0}_{q,p}(t)` has Mellin transform
:math:`\prod\Gamma(a+As)/\prod\Gamma(b+Bs)` and is supported on
``(0, t_star]`` with ``t_star = prod A**A / prod B**B``, the reciprocal of the
Fox-Wright radius.  :func:`kernel_measure` integrates against it.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Callable

import numpy as np
from numpy.polynomial.legendre import leggauss
from scipy.special import jv, roots_jacobi

from .errors import PreconditionError, ToleranceWarning
from .evaluate import HEvaluator, eval_h_series, evaluate
from .gamma import gamma
from .spec import FoxWrightSpec, HFunctionSpec, convergence_params

__all__ = [
    "TransformImage",
    "RepresentationConstants",
    "laplace_of_h",
    "laplace_numeric",
    "hankel_of_h",
    "hankel_numeric",
    "radial_fourier",
    "bessel_kernel",
    "kernel_spec",
    "kernel_support",
    "eta_constant",
    "kernel_measure",
    "integral_rep_fw",
    "stieltjes_rep",
    "exp_shifted_rep",
]

_GL16 = leggauss(16)


@dataclass(frozen=True)
class TransformImage:
    """``x -> coefficient(x) * H_spec(argument(x))``."""

    spec: HFunctionSpec
    coefficient: Callable[[np.ndarray], np.ndarray]
    argument: Callable[[np.ndarray], np.ndarray]
    description: str = ""

    def __call__(self, x, tol: float = 1e-10):
        xx = np.asarray(x, dtype=float)
        val = np.asarray(self.coefficient(xx)) * np.asarray(evaluate(self.spec, self.argument(xx), tol=tol))
        return float(val) if val.ndim == 0 else val


@dataclass(frozen=True)
class RepresentationConstants:
    """Atom weight ``eta`` at ``t_star`` and the Fox-Wright radius ``rho``.

    ``etaVariant`` / ``rhoVariant`` carry the closed forms attached to a named
    hypothesis set, when one applies.
    """

    eta: float
    rho: float
    t_star: float
    etaVariant: float | None = None
    rhoVariant: float | None = None


# ---------------------------------------------------------------------------
# Laplace


def _min_ratio(pairs) -> float:
    return min((v / w for v, w in pairs), default=math.inf)


def laplace_of_h(spec: HFunctionSpec) -> TransformImage:
    """Laplace transform ``s -> int_0^inf exp(-s t) H(t) dt`` as an H-function.

    The image is ``(1/s) * H'(1/s)`` where ``H'`` has ``(0, 1)`` prepended to
    ``lower`` and ``m + 1``.  Requires ``D > 0`` (or ``D == 0`` with
    ``C >= 0``) and ``min_{i<n} a_i/A_i + 1 > 0``.
    """
    rep = convergence_params(spec)
    if not (rep.bigD > 0 or (rep.bigD == 0 and rep.bigC >= 0)):
        raise PreconditionError("D > 0 or (D = 0 and C >= 0)", f"C={rep.bigC:g}, D={rep.bigD:g}")
    c = _min_ratio(spec.upper[: spec.n])
    if not c + 1 > 0:
        raise PreconditionError("min a_i/A_i + 1 > 0", f"min a_i/A_i = {c:g}")
    img = HFunctionSpec(m=spec.m + 1, n=spec.n, upper=spec.upper, lower=((0.0, 1.0),) + spec.lower)
    return TransformImage(img, lambda s: 1.0 / s, lambda s: 1.0 / s, "Laplace image")


def _log_panels(lo: float, hi: float, panels: int):
    x, w = _GL16
    edges = np.linspace(lo, hi, panels + 1)
    mid = 0.5 * (edges[1:] + edges[:-1])
    half = 0.5 * (edges[1:] - edges[:-1])
    return (mid[:, None] + half[:, None] * x).ravel(), (half[:, None] * w).ravel()


def laplace_numeric(spec: HFunctionSpec, s, tol: float = 1e-9) -> np.ndarray | float:
    """Direct quadrature of ``int_0^inf exp(-s t) H(t) dt`` for ``s > 0``.

    Integrates in ``u = log t``.  The lower cut comes from the small-``t``
    exponent ``c`` and the upper cut from ``exp(-s t)``; both tails are below
    ``1e-3 * tol``.
    """
    ss = np.atleast_1d(np.asarray(s, dtype=float))
    if np.any(ss <= 0):
        raise ValueError("Laplace quadrature needs s > 0")
    c = _min_ratio(spec.upper[: spec.n])
    c = 0.0 if math.isinf(c) else c
    if not c + 1 > 0:
        raise PreconditionError("min a_i/A_i + 1 > 0", f"min a_i/A_i = {c:g}")
    small = 1e-3 * tol
    u_lo = math.log(small) / (c + 1.0) - 2.0
    t_hi = (-math.log(small) + 40.0) / ss.min()
    u_hi = math.log(t_hi)
    rep = convergence_params(spec)
    ev = HEvaluator(spec, tol=tol * 1e-2) if rep.bigD > 0 else None
    prev = None
    panels = 16
    while True:
        u, w = _log_panels(u_lo, u_hi, panels)
        t = np.exp(u)
        h = ev(t) if ev is not None else eval_h_series(spec, t)
        vals = (np.exp(-np.outer(ss, t)) * (h * t)) @ w
        if prev is not None and np.all(np.abs(vals - prev) <= tol * np.maximum(np.abs(vals), 1e-300)):
            break
        if panels >= 1024:
            warnings.warn("Laplace quadrature did not settle", ToleranceWarning, stacklevel=2)
            break
        prev, panels = vals, panels * 2
    return float(vals[0]) if np.ndim(s) == 0 else vals


# ---------------------------------------------------------------------------
# Hankel


def _hankel_check(spec: HFunctionSpec, rho_p: float, nu: float, sigma: float):
    if not sigma > 0:
        raise PreconditionError("sigma > 0", f"sigma={sigma:g}")
    rep = convergence_params(spec)
    if not rep.bigD > 0:
        raise PreconditionError("D > 0", f"D={rep.bigD:g}")
    c = _min_ratio(spec.upper[: spec.n])
    if not rho_p + nu + sigma * c > 0:
        raise PreconditionError(
            "rho + nu + sigma * min(a_i/A_i) > 0", f"rho={rho_p:g}, nu={nu:g}, min a/A={c:g}"
        )
    if spec.m:
        r = min((1.0 - b) / B for b, B in spec.lower[: spec.m])
        if not rho_p - sigma * r < 1.5:
            raise PreconditionError(
                "rho - sigma * min((1 - b_j)/B_j) < 3/2", f"rho={rho_p:g}, min (1-b)/B={r:g}"
            )


def hankel_of_h(spec: HFunctionSpec, rho_p: float, nu: float, sigma: float = 1.0, b: float = 1.0) -> TransformImage:
    r"""Closed form of ``x -> int_0^inf r^(rho-1) J_nu(x r) H(b r^sigma) dr``.

    The image is ``2^(rho-1) / x^rho * H'(b (2/x)^sigma)`` where ``H'`` has
    ``(1 - (rho+nu)/2, sigma/2)`` prepended and ``(1 - (rho-nu)/2, sigma/2)``
    appended to ``lower`` and ``m + 1``.

    Preconditions: ``D > 0``, ``rho + nu + sigma * min_{i<n} a_i/A_i > 0`` and
    ``rho - sigma * min_{j<m} (1 - b_j)/B_j < 3/2``.
    """
    _hankel_check(spec, rho_p, nu, sigma)
    lower = ((1.0 - 0.5 * (rho_p + nu), 0.5 * sigma),) + spec.lower + ((1.0 - 0.5 * (rho_p - nu), 0.5 * sigma),)
    img = HFunctionSpec(m=spec.m + 1, n=spec.n, upper=spec.upper, lower=lower)
    return TransformImage(
        img,
        lambda x: 2.0 ** (rho_p - 1.0) / x**rho_p,
        lambda x: b * (2.0 / x) ** sigma,
        f"Hankel image (rho={rho_p:g}, nu={nu:g}, sigma={sigma:g})",
    )


def _hankel_rhs(spec, rho_p, nu, sigma, b, x, tol):
    return hankel_of_h(spec, rho_p, nu, sigma, b)(np.asarray(x, dtype=float), tol=tol)


def _wynn(partial: np.ndarray) -> float:
    """Wynn epsilon extrapolation of a sequence of partial sums."""
    eps_prev = np.zeros(partial.size + 1)
    eps = np.asarray(partial, dtype=float).copy()
    best = eps[-1]
    k = 0
    while eps.size > 1:
        diff = np.diff(eps)
        with np.errstate(divide="ignore", invalid="ignore"):
            nxt = eps_prev[1: eps.size] + 1.0 / diff
        if not np.all(np.isfinite(nxt)):
            break
        eps_prev, eps = eps, nxt
        k += 1
        if k % 2 == 0:
            best = eps[-1]
    return float(best)


def hankel_numeric(
    spec: HFunctionSpec,
    rho_p: float,
    nu: float,
    sigma: float,
    b: float,
    x: float,
    tol: float = 1e-8,
    max_cells: int = 200,
) -> float:
    """Left side ``int_0^inf r^(rho-1) J_nu(x r) H(b r^sigma) dr`` by quadrature.

    The range is split at McMahon approximations of the Bessel zeros; the
    first cell is graded geometrically toward ``r = 0`` and every other cell
    uses 32-point Gauss-Legendre.  Partial sums over cells are accelerated with
    the Wynn epsilon algorithm.  A :class:`ToleranceWarning` is issued when
    ``max_cells`` cells do not reach ``tol``.
    """
    _hankel_check(spec, rho_p, nu, sigma)
    if not (b > 0 and x > 0):
        raise ValueError("b and x must be positive")
    rep = convergence_params(spec)
    ev = HEvaluator(spec, tol=min(tol * 1e-2, 1e-10)) if rep.bigD > 0 else None

    def h_of(r):
        arg = b * r**sigma
        return ev(arg) if ev is not None else eval_h_series(spec, arg)

    def integrand(r):
        return r ** (rho_p - 1.0) * jv(nu, x * r) * h_of(r)

    zeros = (np.arange(1, max_cells + 2) + 0.5 * nu - 0.25) * math.pi / x
    zeros = zeros[zeros > 0]
    first = zeros[0]
    gx, gw = leggauss(32)
    # geometric grading on (0, first]
    edges = first * 2.0 ** -np.arange(0, 60)[::-1]
    lo = np.concatenate(([0.0], edges[:-1]))
    hi = edges
    mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
    r0 = (mid[:, None] + half[:, None] * gx).ravel()
    w0 = (half[:, None] * gw).ravel()
    head = float(np.dot(integrand(r0), w0))
    a_edges, b_edges = zeros[:-1], zeros[1:]
    mid, half = 0.5 * (a_edges + b_edges), 0.5 * (b_edges - a_edges)
    r = (mid[:, None] + half[:, None] * gx).ravel()
    cells = (integrand(r).reshape(mid.size, -1) * (half[:, None] * gw)).sum(axis=1)
    partial = head + np.cumsum(cells)
    # extrapolate on growing windows until two estimates agree
    prev = None
    for k in range(20, partial.size + 1, 10):
        est = _wynn(partial[:k])
        if prev is not None and abs(est - prev) <= tol * max(abs(est), 1e-300):
            return est
        prev = est
    if abs(cells[-1]) <= tol * max(abs(partial[-1]), 1e-300):
        return float(partial[-1])
    warnings.warn(
        f"Hankel quadrature stopped after {max_cells} cells (last change {abs(prev - partial[-1]):.3g})",
        ToleranceWarning,
        stacklevel=2,
    )
    return float(prev)


def radial_fourier(
    spec: HFunctionSpec,
    d: int,
    xi,
    sigma: float = 1.0,
    b: float = 1.0,
    method: str = "closed",
    tol: float = 1e-8,
):
    """Radial Fourier transform of the profile ``f(r) = H(b r^sigma)`` in ``d`` dimensions.

    ``F(xi) = xi^((2-d)/2) int_0^inf r^(d/2) J_((d-2)/2)(r xi) f(r) dr``, which is
    the Hankel transform with ``rho = d/2 + 1`` and ``nu = (d-2)/2``.  With
    ``method="closed"`` the Hankel image is evaluated; ``"numeric"`` uses
    :func:`hankel_numeric`.
    """
    if int(d) != d or d < 1:
        raise ValueError("d must be a positive integer")
    rho_p, nu = d / 2.0 + 1.0, (d - 2.0) / 2.0
    xx = np.asarray(xi, dtype=float)
    if np.any(xx <= 0):
        raise ValueError("xi must be positive")
    if method == "closed":
        val = _hankel_rhs(spec, rho_p, nu, sigma, b, xx, tol)
    elif method == "numeric":
        flat = np.atleast_1d(xx).ravel()
        val = np.array([hankel_numeric(spec, rho_p, nu, sigma, b, float(v), tol) for v in flat]).reshape(xx.shape)
    else:
        raise ValueError("method must be 'closed' or 'numeric'")
    out = xx ** ((2.0 - d) / 2.0) * val
    return float(out) if np.ndim(out) == 0 else out


def bessel_kernel(nu: float, x):
    """Normalised Bessel kernel ``2^nu Gamma(nu+1) J_nu(x) / x^nu`` (equal to 1 at 0)."""
    if not nu > -0.5:
        raise ValueError("the normalised Bessel kernel needs nu > -1/2")
    xx = np.abs(np.asarray(x, dtype=float))
    with np.errstate(divide="ignore", invalid="ignore"):
        val = 2.0**nu * gamma(nu + 1.0) * jv(nu, xx) / xx**nu
    val = np.where(xx < 1e-8, 1.0 - xx**2 / (4.0 * (nu + 1.0)), val)
    return float(val) if np.ndim(val) == 0 else val


# ---------------------------------------------------------------------------
# Fox-Wright kernel representations


def kernel_spec(fw: FoxWrightSpec) -> HFunctionSpec:
    """The kernel ``H^{p,0}_{q,p}`` with Mellin transform ``prod Gamma(a+As) / prod Gamma(b+Bs)``."""
    return HFunctionSpec(m=0, n=fw.p, upper=fw.upper, lower=fw.lower)


def kernel_support(fw: FoxWrightSpec) -> float:
    """Right end ``t_star = prod A**A / prod B**B`` of the kernel's support."""
    return 1.0 / fw.radius


def eta_constant(fw: FoxWrightSpec) -> float:
    """``(2 pi)^((p-q)/2) prod A_i^(a_i - 1/2) prod B_j^(1/2 - b_j)``."""
    log_eta = 0.5 * (fw.p - fw.q) * math.log(2.0 * math.pi)
    log_eta += sum((a - 0.5) * math.log(A) for a, A in fw.upper)
    log_eta += sum((0.5 - b) * math.log(B) for b, B in fw.lower)
    return math.exp(log_eta)


def _lemma_hypotheses(fw: FoxWrightSpec, mu_rule: str):
    if fw.p == 0 or any(A <= 0 for _, A in fw.upper) or any(B <= 0 for _, B in fw.lower):
        raise PreconditionError("positive weights", "kernel representation needs A, B > 0")
    sa, sb = sum(A for _, A in fw.upper), sum(B for _, B in fw.lower)
    if abs(sa - sb) > 1e-12 * max(1.0, sa):
        raise PreconditionError("sum(A) = sum(B)", f"sum(A)={sa:g}, sum(B)={sb:g}")
    g = min(a / A for a, A in fw.upper)
    if not g >= 1 - 1e-12:
        raise PreconditionError("min(a/A) >= 1", f"min(a/A)={g:g}")
    mu = fw.mu
    if mu_rule == "positive" and not mu > 1e-12:
        raise PreconditionError("mu > 0", f"mu={mu:g}")
    if mu_rule == "zero" and abs(mu) > 1e-12:
        raise PreconditionError("mu = 0", f"mu={mu:g}")
    return g, mu


def kernel_measure(fw: FoxWrightSpec, weight: Callable[[np.ndarray], np.ndarray], nodes: int = 32) -> float:
    """``int_0^t_star weight(t) K(t) dt / t`` by Gauss-Jacobi quadrature.

    The Jacobi weight absorbs ``t^(g-1)`` at the left end (``g = min a/A``)
    and ``(t_star - t)^(mu-1)`` at the right end (exponent 0 when ``mu <= 0``);
    the kernel comes from its residue series, which converges on the open
    support.
    """
    g = min(a / A for a, A in fw.upper)
    mu = fw.mu
    if abs(mu) < 1e-12:  # round-off from the weights would send the Jacobi exponent to -1
        mu = 0.0
    t_star = kernel_support(fw)
    right = mu - 1.0 if mu > 0 else 0.0
    left = g - 1.0
    x, w = roots_jacobi(nodes, right, left)  # weight (1-x)^right (1+x)^left
    t = 0.5 * t_star * (x + 1.0)
    ks = kernel_spec(fw)
    k = eval_h_series(ks, t, tol=1e-13, max_terms=4_000_000)
    smooth = weight(t) * k / t / (t**left * (t_star - t) ** right)
    return float(np.dot(w, smooth) * (0.5 * t_star) ** (left + right + 1.0))


def integral_rep_fw(fw: FoxWrightSpec, z: float, nodes: int = 32) -> float:
    """``int_0^t_star exp(z t) K(t) dt / t``, equal to ``pPsi_q(z)``.

    Needs ``mu > 0``, ``min(a/A) >= 1`` and ``sum(A) == sum(B)``.
    """
    _lemma_hypotheses(fw, "positive")
    return kernel_measure(fw, lambda t: np.exp(z * t), nodes)


def _kernel_nonnegative(fw: FoxWrightSpec, floor: float = -1e-8):
    t_star = kernel_support(fw)
    grid = np.geomspace(t_star * 1e-4, t_star * (1 - 1e-3), 200)
    vals = eval_h_series(kernel_spec(fw), grid, tol=1e-12, max_terms=4_000_000)
    if np.min(vals) < floor:
        i = int(np.argmin(vals))
        raise PreconditionError("kernel non-negative", f"K({grid[i]:.6g}) = {vals[i]:.3g}")


def stieltjes_rep(fw: FoxWrightSpec, sigma: float, z: float, nodes: int = 32) -> float:
    """``int_0^t_star (1 + t z)^(-sigma) K(t) dt / t``.

    This equals ``Gamma(sigma)^(-1) * {}_{p+1}Psi_q[(sigma,1), a; b](-z)``.  The
    kernel is checked to be non-negative on a 200-point grid first.
    """
    _lemma_hypotheses(fw, "positive")
    if not 0 <= z < 1:
        raise PreconditionError("0 <= z < 1", f"z={z:g}")
    _kernel_nonnegative(fw)
    return kernel_measure(fw, lambda t: (1.0 + t * z) ** (-sigma), nodes)


def exp_shifted_rep(fw: FoxWrightSpec, z: float, nodes: int = 32) -> tuple[float, RepresentationConstants]:
    """Absolutely continuous part of the kernel measure at ``mu = 0``.

    Returns ``(int_0^t_star exp(-z t) K(t) dt / t, constants)`` where
    ``pPsi_q(-z) = eta * exp(-t_star z) + integral``.  The point mass sits at
    ``t_star`` (the reciprocal of the Fox-Wright radius ``rho``).
    """
    _lemma_hypotheses(fw, "zero")
    val = kernel_measure(fw, lambda t: np.exp(-z * t), nodes)
    consts = RepresentationConstants(eta=eta_constant(fw), rho=fw.radius, t_star=kernel_support(fw))
    return val, consts
