"""Series evaluation of Fox-Wright and three-parameter Mittag-Leffler functions."""

from __future__ import annotations

import math
import warnings

import numpy as np

from .errors import ConvergenceError, SpecError, ToleranceWarning
from .gamma import gamma, log_abs_gamma
from .spec import ConvergenceReport, FoxWrightSpec, HFunctionSpec, convergence_params, from_fox_wright

__all__ = [
    "classify",
    "eval_fw",
    "mittag_leffler",
    "mittag_leffler_spec",
    "to_generalized_hypergeometric",
]

_MAX_TERMS = 100_000


def classify(fw: FoxWrightSpec) -> ConvergenceReport:
    """Convergence parameters of ``fw``.

    ``delta = 1 + sum(B) - sum(A)``, ``radius = prod A**-A * prod B**B`` and
    ``mu = sum(b) - sum(a) + (p - q)/2``.  C, D and the exponents come from the
    H-function image and are NaN/None when some weight is zero.
    """
    try:
        img = convergence_params(from_fox_wright(fw))
        big_c, big_d, c, d = img.bigC, img.bigD, img.zeroExponent, img.infExponent
    except SpecError:
        big_c = big_d = math.nan
        c = d = None
    return ConvergenceReport(
        delta=fw.delta,
        radius=fw.radius,
        mu=fw.mu,
        bigC=big_c,
        bigD=big_d,
        zeroExponent=c,
        infExponent=d,
        weight_balance=fw.delta - 1.0,
    )


def _sum_log_terms(log_mag: np.ndarray, sign: np.ndarray, z: float, tol: float, what: str):
    """Shared truncation logic: returns (value, terms_used) or None if more terms are needed."""
    if not np.all(np.isfinite(log_mag[sign != 0])):
        raise ConvergenceError(f"{what}: a numerator gamma factor hit a pole")
    with np.errstate(over="ignore"):
        terms = np.where(sign == 0, 0.0, sign * np.exp(np.where(sign == 0, 0.0, log_mag)))
    if not np.all(np.isfinite(terms)):
        raise ConvergenceError(f"{what}: terms overflow at z={z:g}")
    total = math.fsum(terms)
    mags = np.abs(terms)
    tail = max(mags.size // 4, 3)
    if np.all(mags[-tail:] < tol * max(abs(total), np.finfo(float).tiny)):
        cancel = 16 * np.finfo(float).eps * mags.max()
        if cancel > 1e-6 * abs(total):
            warnings.warn(
                f"{what} at z={z:g} lost accuracy to cancellation (error about {cancel:.2g})",
                ToleranceWarning,
                stacklevel=3,
            )
        return total, int(mags.size)
    return None


def _fw_log_terms(fw: FoxWrightSpec, k: np.ndarray, z: float):
    la = np.zeros(k.shape)
    sg = np.ones(k.shape)
    for a, A in fw.upper:
        lg, s = log_abs_gamma(a + k * A)
        la = la + np.where(s == 0, np.inf, lg)
        sg = sg * np.where(s == 0, 1.0, s)
    for b, B in fw.lower:
        lg, s = log_abs_gamma(b + k * B)
        la = la - np.where(s == 0, 0.0, lg)
        sg = sg * s
    la = la - log_abs_gamma(k + 1.0)[0]
    if z != 0:
        la = la + k * math.log(abs(z))
        if z < 0:
            sg = sg * np.where(k % 2 == 0, 1.0, -1.0)
    else:
        la = np.where(k == 0, la, -np.inf)
        sg = np.where(k == 0, sg, 0.0)
    return la, sg


def eval_fw(fw: FoxWrightSpec, z: float, tol: float = 1e-15, full_output: bool = False):
    """Sum the Fox-Wright series at real ``z``.

    Converges everywhere when ``delta > 0`` and for ``|z| < radius`` when
    ``delta == 0``.  Terms are built from log-gamma sums with sign tracking, in
    doubling blocks, until the last quarter of the computed terms is below
    ``tol`` relative to the sum.  A zero reciprocal gamma in the denominator
    gives a zero term.

    Raises
    ------
    ConvergenceError
        Outside the convergence domain, or after 100000 terms.
    """
    z = float(z)
    delta = fw.delta
    if abs(delta) < 1e-14:
        delta = 0.0
    if delta < 0 and z != 0:
        raise ConvergenceError(f"Fox-Wright series diverges for delta < 0 (delta={delta:g})")
    if delta == 0 and abs(z) >= fw.radius:
        raise ConvergenceError(f"Fox-Wright series needs |z| < {fw.radius:.10g} when delta = 0 (z={z:g})")
    n = 64
    while True:
        k = np.arange(n, dtype=float)
        la, sg = _fw_log_terms(fw, k, z)
        res = _sum_log_terms(la, sg, z, tol, "Fox-Wright series")
        if res is not None:
            value, used = res
            return (value, {"method": "series", "terms": used}) if full_output else value
        if n >= _MAX_TERMS:
            raise ConvergenceError(f"Fox-Wright series did not converge within {_MAX_TERMS} terms at z={z:g}")
        n = min(2 * n, _MAX_TERMS)


def mittag_leffler(alpha: float, beta: float, gamma_p: float, z: float, tol: float = 1e-15, full_output: bool = False):
    r"""Three-parameter Mittag-Leffler function :math:`E^{\gamma}_{\alpha,\beta}(z)`.

    The coefficient :math:`(\gamma)_k/k!` is accumulated as a running
    log-product with signs, so ``gamma_p`` may be zero or a negative integer
    (the series then terminates).
    """
    if not alpha > 0:
        raise ConvergenceError(f"Mittag-Leffler series needs alpha > 0 (alpha={alpha:g})")
    z = float(z)
    n = 64
    while True:
        k = np.arange(n, dtype=float)
        fac = gamma_p + k[:-1]
        with np.errstate(divide="ignore"):
            steps = np.log(np.abs(fac)) - np.log(k[1:])
        la = np.concatenate(([0.0], np.cumsum(steps)))
        sg = np.concatenate(([1.0], np.cumprod(np.sign(fac))))
        lg, s = log_abs_gamma(beta + alpha * k)
        la = la - np.where(s == 0, 0.0, lg)
        sg = sg * s
        if z != 0:
            la = la + k * math.log(abs(z))
            if z < 0:
                sg = sg * np.where(k % 2 == 0, 1.0, -1.0)
        else:
            sg = np.where(k == 0, sg, 0.0)
        la = np.where(np.isneginf(la), 0.0, la)
        res = _sum_log_terms(la, sg, z, tol, "Mittag-Leffler series")
        if res is not None:
            value, used = res
            return (value, {"method": "series", "terms": used}) if full_output else value
        if n >= _MAX_TERMS:
            raise ConvergenceError(f"Mittag-Leffler series did not converge within {_MAX_TERMS} terms at z={z:g}")
        n = min(2 * n, _MAX_TERMS)


def mittag_leffler_spec(alpha: float, beta: float, gamma_p: float) -> HFunctionSpec:
    """H-function ``H`` with ``H(x) = Gamma(gamma) * E(-x)`` for ``x > 0``."""
    return from_fox_wright(FoxWrightSpec(upper=((gamma_p, 1.0),), lower=((beta, alpha),)))


def to_generalized_hypergeometric(fw: FoxWrightSpec) -> tuple[float, tuple[tuple[float, ...], tuple[float, ...]]]:
    """Unit-weight reduction ``pPsi_q = coefficient * pF_q``.

    Returns ``(prod Gamma(a) / prod Gamma(b), (a_list, b_list))``.
    """
    if any(A != 1.0 for _, A in fw.upper) or any(B != 1.0 for _, B in fw.lower):
        raise SpecError("hypergeometric reduction needs every weight equal to 1")
    a = tuple(x for x, _ in fw.upper)
    b = tuple(x for x, _ in fw.lower)
    coef = 1.0
    for x in a:
        coef *= gamma(x)
    for x in b:
        lg, s = log_abs_gamma(x)
        coef *= 0.0 if s == 0 else s * math.exp(-lg)
    return coef, (a, b)
