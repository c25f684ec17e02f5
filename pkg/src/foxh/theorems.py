"""Hypothesis sets H1..H10, the target functions built from them, and the
suite runner that samples parameters and applies the checkers.

Parameter names follow the Greek letters of the statements: ``alpha``,
``beta``, ``gamma``, ``tau``, ``d``, ``sigma``, ``delta``.  H3 also carries
the lists ``a``, ``b`` and ``A``.

Five of the sets (H5, H6, H7, H9, H10) are contradictory as stated; they are
kept for validation and constants, but sampling them raises
:class:`EmptyHypothesisError` with the reason.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .checks import (
    GridSpec,
    PropertyReport,
    check_complete_monotonicity,
    check_log_cm,
    check_nonnegativity,
    check_ratio_monotone,
)
from .errors import EmptyHypothesisError, FoxHError, HypothesisError, UnknownTheoremError
from .evaluate import evaluate
from .foxwright import eval_fw
from .spec import FoxWrightSpec, HFunctionSpec, invert_argument
from .transforms import RepresentationConstants, eta_constant, kernel_support, laplace_of_h

__all__ = [
    "Constraint",
    "HypothesisSet",
    "Theorem",
    "HYPOTHESES",
    "THEOREMS",
    "DEFAULT_CONFIG",
    "get_theorem",
    "list_theorems",
    "run_theorem_suite",
    "hypothesis_constants",
    "e1_spec",
    "e2_spec",
    "cm_target_spec",
    "h8_spec",
]

_SQRT_PI = math.sqrt(math.pi)


@dataclass(frozen=True)
class Constraint:
    text: str
    test: Callable[[dict], bool]

    def holds(self, p: dict) -> bool:
        try:
            return bool(self.test(p))
        except (KeyError, TypeError, ValueError, ZeroDivisionError):
            return False


@dataclass(frozen=True)
class HypothesisSet:
    """Named constraint list plus a sampler over a parameter box.

    ``draw(rng)`` proposes one parameter map; :meth:`sample` keeps proposals
    that satisfy every constraint.  ``empty_reason`` is set for sets whose
    constraints contradict each other.
    """

    id: str
    constraints: tuple[Constraint, ...]
    draw: Callable[[np.random.Generator], dict] | None = None
    empty_reason: str = ""
    box: str = ""

    def violated(self, params: dict) -> list[str]:
        return [c.text for c in self.constraints if not c.holds(params)]

    def validate(self, params: dict) -> dict:
        if self.empty_reason:
            raise EmptyHypothesisError(f"{self.id} admits no parameters: {self.empty_reason}")
        bad = self.violated(params)
        if bad:
            raise HypothesisError(f"{self.id}: {bad[0]}", _fmt_params(params))
        return params

    def sample(self, count: int, seed: int, fixed: dict | None = None) -> list[dict]:
        """``count`` admissible samples; sample ``i`` uses its own spawned stream."""
        if self.empty_reason:
            raise EmptyHypothesisError(f"{self.id} admits no parameters: {self.empty_reason}")
        out = []
        for ss in np.random.SeedSequence(seed).spawn(count):
            rng = np.random.default_rng(ss)
            for _ in range(10_000):
                p = self.draw(rng)
                if fixed:
                    p.update(fixed)
                if not self.violated(p):
                    out.append(p)
                    break
            else:
                raise EmptyHypothesisError(f"{self.id}: sampler found no admissible point in 10000 draws")
        return out


def _fmt_params(p: dict) -> str:
    return ", ".join(f"{k}={v}" for k, v in sorted(p.items()))


def _u(rng, lo, hi):
    # uniform on (lo, hi]; the closed end matters for boxes like tau in (0, 2]
    return float(hi - (hi - lo) * rng.random())


def _c(text, fn):
    return Constraint(text, fn)


# ---------------------------------------------------------------------------
# hypothesis sets


def _draw_h1(rng):
    return {
        "tau": _u(rng, 0.0, 2.0),
        "alpha": _u(rng, 0.0, 1.0),
        "beta": _u(rng, 0.0, 1.0),
        "gamma": _u(rng, 0.0, 4.0),
        "d": int(rng.integers(1, 4)),
    }


def _draw_h2(rng):
    alpha = _u(rng, 0.1, 1.0)
    beta = _u(rng, 1.0 / alpha - 1.0, 1.0 / alpha + 2.0)
    return {
        "tau": _u(rng, 0.0, 2.0),
        "alpha": alpha,
        "beta": beta,
        "gamma": _u(rng, -1.0 - beta, 3.0),
        "d": int(rng.integers(1, 4)),
    }


def _draw_h3(rng):
    p = int(rng.integers(1, 3))
    a = np.sort(rng.uniform(0.1, 3.0, p))
    b = np.sort(a + rng.uniform(0.0, 2.0, p))
    return {
        "a": a.tolist(),
        "b": b.tolist(),
        "A": rng.uniform(0.2, 2.0, p).tolist(),
        "sigma": _u(rng, 0.0, 3.0),
        "delta": _u(rng, 0.0, 2.0),
    }


def _h3_partial(p):
    s = np.cumsum(np.asarray(p["b"]) - np.asarray(p["a"]))
    return bool(np.all(s >= 0))


def _draw_kummer(rng):
    b = _u(rng, 0.0, 3.0)
    return {"b": b, "c": b + _u(rng, 0.0, 3.0), "tau": _u(rng, 0.0, 2.0), "delta": _u(rng, 0.0, 2.0)}


def _draw_h4(rng):
    d = int(rng.integers(2, 4))
    return {
        "tau": _u(rng, 0.0, 1.0),
        "d": d,
        "beta": d / 2 + 0.5 + _u(rng, 0.0, 3.0),
        "sigma": _u(rng, 0.0, 3.0),
        "delta": _u(rng, 0.0, 2.0),
    }


def _draw_h8(rng):
    return {"tau": _u(rng, 0.0, 1.0), "d": int(rng.integers(2, 4))}


_POS_SD = [_c("sigma > 0", lambda p: p["sigma"] > 0), _c("delta > 0", lambda p: p["delta"] > 0)]
_GOLDEN = (3.0 - math.sqrt(5.0)) / 2.0

HYPOTHESES: dict[str, HypothesisSet] = {
    "H1": HypothesisSet(
        "H1",
        (
            _c("0 < tau <= 2", lambda p: 0 < p["tau"] <= 2),
            _c("alpha in (0,1)", lambda p: 0 < p["alpha"] < 1),
            _c("beta in (0,1)", lambda p: 0 < p["beta"] < 1),
            _c("gamma > 0", lambda p: p["gamma"] > 0),
            _c("beta >= alpha*gamma", lambda p: p["beta"] >= p["alpha"] * p["gamma"]),
            _c("d positive integer", lambda p: int(p["d"]) == p["d"] >= 1),
        ),
        _draw_h1,
        box="tau in (0,2], alpha, beta in (0,1), gamma in (0,4], d in {1,2,3}",
    ),
    "H2": HypothesisSet(
        "H2",
        (
            _c("0 < tau <= 2", lambda p: 0 < p["tau"] <= 2),
            _c("alpha in (0,1]", lambda p: 0 < p["alpha"] <= 1),
            _c("1/alpha - 1 < beta", lambda p: 1 / p["alpha"] - 1 < p["beta"]),
            # not printed; without it the contour has no gap (see ledger)
            _c("gamma > -1 - beta", lambda p: p["gamma"] > -1 - p["beta"]),
            _c("d positive integer", lambda p: int(p["d"]) == p["d"] >= 1),
        ),
        _draw_h2,
        box="alpha in (0.1,1], beta in (1/alpha-1, 1/alpha+2], gamma in (-1-beta, 3], tau in (0,2], d in {1,2,3}",
    ),
    "H3": HypothesisSet(
        "H3",
        (
            _c("0 < a_1 <= ... <= a_p", lambda p: p["a"][0] > 0 and all(np.diff(p["a"]) >= 0)),
            _c("0 < b_1 <= ... <= b_p", lambda p: p["b"][0] > 0 and all(np.diff(p["b"]) >= 0)),
            _c("partial sums of b - a >= 0", _h3_partial),
            _c("A > 0", lambda p: len(p["A"]) == len(p["a"]) == len(p["b"]) and min(p["A"]) > 0),
            *_POS_SD,
        ),
        _draw_h3,
        box="p in {1,2}, a in (0.1,3), b - a in (0,2), A in (0.2,2), sigma in (0,3], delta in (0,2]",
    ),
    "kummer": HypothesisSet(
        "kummer",
        (
            _c("c > b > 0", lambda p: p["c"] > p["b"] > 0),
            _c("tau > 0", lambda p: p["tau"] > 0),
            _c("delta > 0", lambda p: p["delta"] > 0),
        ),
        _draw_kummer,
        box="b in (0,3], c - b in (0,3], tau in (0,2], delta in (0,2]",
    ),
    "H4": HypothesisSet(
        "H4",
        (
            _c("tau in (0,1)", lambda p: 0 < p["tau"] < 1),
            _c("d - tau >= 1", lambda p: p["d"] - p["tau"] >= 1),
            _c("beta > d/2 + 1/2", lambda p: p["beta"] > p["d"] / 2 + 0.5),
            *_POS_SD,
        ),
        _draw_h4,
        box="tau in (0,1), d in {2,3}, beta - d/2 - 1/2 in (0,3], sigma in (0,3], delta in (0,2]",
    ),
    "H5": HypothesisSet(
        "H5",
        (
            _c("alpha in [(3-sqrt5)/2, 1)", lambda p: _GOLDEN <= p["alpha"] < 1),
            _c("min(d-2, 2(gamma + 1/(1-alpha))) >= 1",
               lambda p: min(p["d"] - 2, 2 * (p["gamma"] + 1 / (1 - p["alpha"]))) >= 1),
            _c("5/2 > (1 + gamma(1-alpha)^2)/alpha + d/2",
               lambda p: 2.5 > (1 + p["gamma"] * (1 - p["alpha"]) ** 2) / p["alpha"] + p["d"] / 2),
            *_POS_SD,
        ),
        empty_reason="d >= 3 and the last inequality force gamma + 1/(1-alpha) < 0",
    ),
    "H6": HypothesisSet(
        "H6",
        (
            _c("tau in (0,2]", lambda p: 0 < p["tau"] <= 2),
            _c("tau/2 - 1 < beta", lambda p: p["tau"] / 2 - 1 < p["beta"]),
            _c("1/tau = 1/2 + 1/(2 beta)", lambda p: abs(1 / p["tau"] - 0.5 - 0.5 / p["beta"]) < 1e-12),
            _c("min(2 beta - beta tau, d - tau) >= 1",
               lambda p: min(2 * p["beta"] - p["beta"] * p["tau"], p["d"] - p["tau"]) >= 1),
            _c("tau > d/2 + 1/2", lambda p: p["tau"] > p["d"] / 2 + 0.5),
            *_POS_SD,
        ),
        empty_reason="d - tau >= 1 and tau > d/2 + 1/2 force tau > 2",
    ),
    "H7": HypothesisSet(
        "H7",
        (
            _c("alpha in (0,1]", lambda p: 0 < p["alpha"] <= 1),
            _c("2(gamma + beta) >= 1", lambda p: 2 * (p["gamma"] + p["beta"]) >= 1),
            _c("1/alpha = 1 + 1/(alpha beta)",
               lambda p: abs(1 / p["alpha"] - 1 - 1 / (p["alpha"] * p["beta"])) < 1e-12),
            _c("1/alpha - 1 < beta", lambda p: 1 / p["alpha"] - 1 < p["beta"]),
            _c("1 + 1/(alpha beta) > 1/alpha", lambda p: 1 + 1 / (p["alpha"] * p["beta"]) > 1 / p["alpha"]),
            *_POS_SD,
        ),
        empty_reason="1/alpha = 1 + 1/(alpha beta) and 1 + 1/(alpha beta) > 1/alpha cannot both hold",
    ),
    "H8": HypothesisSet(
        "H8",
        (
            _c("tau in (0,1)", lambda p: 0 < p["tau"] < 1),
            _c("d - tau >= 1", lambda p: p["d"] - p["tau"] >= 1),
        ),
        _draw_h8,
        box="tau in (0,1), d in {2,3}",
    ),
    "H9": HypothesisSet(
        "H9",
        (
            _c("alpha in [(3-sqrt5)/2, 1)", lambda p: _GOLDEN <= p["alpha"] < 1),
            _c("min(d-2, 2(gamma + 1/(1-alpha))) >= 1",
               lambda p: min(p["d"] - 2, 2 * (p["gamma"] + 1 / (1 - p["alpha"]))) >= 1),
            _c("(1 + gamma(1-alpha)^2)/alpha + d/2 = 5/2",
               lambda p: abs((1 + p["gamma"] * (1 - p["alpha"]) ** 2) / p["alpha"] + p["d"] / 2 - 2.5) < 1e-12),
        ),
        empty_reason="d >= 3 and the equality force gamma + 1/(1-alpha) <= 0",
    ),
    "H10": HypothesisSet(
        "H10",
        (
            _c("alpha in (0,1]", lambda p: 0 < p["alpha"] <= 1),
            _c("1/alpha - 1 < beta", lambda p: 1 / p["alpha"] - 1 < p["beta"]),
            _c("2(gamma + beta) >= 1", lambda p: 2 * (p["gamma"] + p["beta"]) >= 1),
            _c("1 + (gamma/beta)(1 - 1/alpha) = 1 + 1/(alpha beta) = 1/alpha",
               lambda p: abs(1 + p["gamma"] / p["beta"] * (1 - 1 / p["alpha"]) - 1 / p["alpha"]) < 1e-12
               and abs(1 + 1 / (p["alpha"] * p["beta"]) - 1 / p["alpha"]) < 1e-12),
        ),
        empty_reason="the equality chain forces gamma = -beta, so 2(gamma + beta) = 0 < 1",
    ),
}


# ---------------------------------------------------------------------------
# target builders


def e1_spec(alpha: float, beta: float, gamma: float, tau: float, d: float) -> HFunctionSpec:
    """Fourier-side kernel of the H1 theorem, as a function of ``x = |xi|^-tau``."""
    return HFunctionSpec(
        m=2,
        n=1,
        upper=((1.0, 1.0), (alpha - beta + 1.0, alpha)),
        lower=((1.0 - d / 2 + tau / 2, tau / 2), (2.0 - gamma, 1.0), (tau / 2, tau / 2)),
    )


def e2_spec(alpha: float, beta: float, gamma: float, tau: float, d: float) -> HFunctionSpec:
    """Fourier-side kernel of the H2 theorem; the second weight is ``1/beta`` (see ledger)."""
    return HFunctionSpec(
        m=2,
        n=1,
        upper=((1.0, 1.0), (-gamma / beta, 1.0 / beta)),
        lower=(
            (1.0 - d / 2 + tau / 2, tau / 2),
            (1.0 - (gamma + beta) / (alpha * beta), 1.0 / (alpha * beta)),
            (tau / 2, tau / 2),
        ),
    )


def cm_target_spec(base: HFunctionSpec) -> HFunctionSpec:
    """``T`` with ``(1/s) T(s)`` the Laplace transform of ``r -> base(1/r)``."""
    return invert_argument(laplace_of_h(invert_argument(base)).spec)


def _fourier_target(builder):
    def f(p, tol):
        spec = builder(p["alpha"], p["beta"], p["gamma"], p["tau"], p["d"])
        return lambda xi: evaluate(spec, np.asarray(xi, dtype=float) ** (-p["tau"]), tol=tol)

    return f


def _laplace_target(builder):
    def f(p, tol):
        spec = cm_target_spec(builder(p["alpha"], p["beta"], p["gamma"], 1.0, 1.0))
        return lambda s: evaluate(spec, s, tol=tol) / np.asarray(s, dtype=float)

    return f


def _fw_fun(fw: FoxWrightSpec, tol: float):
    def f(z):
        zz = np.asarray(z, dtype=float)
        out = np.vectorize(lambda x: eval_fw(fw, -x, tol=tol), otypes=[float])(zz)
        return float(out) if out.ndim == 0 else out

    return f


def _h3_pair(p):
    sig = p["sigma"]
    A = p["A"]
    up = [(sig, 1.0)] + [(a, w) for a, w in zip(p["a"], A)]
    lo = [(b, w) for b, w in zip(p["b"], A)]
    sh = p["delta"]
    up2 = [(sig, 1.0)] + [(a + sh * w, w) for a, w in zip(p["a"], A)]
    lo2 = [(b + sh * w, w) for b, w in zip(p["b"], A)]
    return FoxWrightSpec(up2, lo2), FoxWrightSpec(up, lo)


def _kummer_pair(p):
    t, dl = p["tau"], p["delta"]
    num = FoxWrightSpec([(p["b"] + dl * t, t)], [(p["c"] + dl * t, t)])
    den = FoxWrightSpec([(p["b"], t)], [(p["c"], t)])
    return num, den


def _h4_pair(p):
    s, dl, t, d, b = p["sigma"], p["delta"], p["tau"], p["d"], p["beta"]
    num = FoxWrightSpec(
        [(s + dl, 1.0), (d / 2 - t / 2 + dl / 2, 0.5), (1 - t / 2 + dl / 2, 0.5)],
        [(b - t + dl, 1.0)],
    )
    den = FoxWrightSpec([(s, 1.0), (d / 2 - t / 2, 0.5), (1 - t / 2, 0.5)], [(b - t, 1.0)])
    return num, den


def h8_spec(tau: float, d: float) -> FoxWrightSpec:
    return FoxWrightSpec([(d / 2 - tau / 2, 0.5), (1 - tau / 2, 0.5)], [(d / 2 + 0.5 - tau, 1.0)])


# ---------------------------------------------------------------------------
# registry


DEFAULT_CONFIG = {
    "tol": 1e-10,
    "gridCount": 100,
    "eps_nonneg": 1e-6,
    "eps_cm": 1e-6,
    "eps_ratio": 1e-10,
    "maxOrder": 6,
}


@dataclass(frozen=True)
class Theorem:
    """A registered claim: which hypothesis set to sample and how to check one sample.

    ``check(params, config)`` returns ``(margin, passed, info)`` for one sample.
    """

    id: str
    hypothesis: str
    aliases: tuple[str, ...]
    claim: str
    check: Callable[[dict, dict], tuple[float, bool, dict]] | None = None
    fixed: dict = field(default_factory=dict)
    notes: str = ""


def _merge(reports: list[tuple[str, PropertyReport]]):
    margin = min(r.worstMargin for _, r in reports)
    passed = all(r.passed for _, r in reports)
    info = {name: {"worstMargin": r.worstMargin, "passed": r.passed, "failures": r.failures[:5]} for name, r in reports}
    return margin, passed, info


def _nonneg_check(builder):
    target = _fourier_target(builder)

    def run(p, cfg):
        grid = GridSpec(1e-2, 1e2, cfg["gridCount"], "log")
        rep = check_nonnegativity(target(p, cfg["tol"]), grid, cfg["eps_nonneg"])
        return _merge([("nonnegativity", rep)])

    return run


def _laplace_cm_check(builder):
    target = _laplace_target(builder)

    def run(p, cfg):
        grid = GridSpec(0.1, 10.0, cfg["gridCount"])
        rep = check_complete_monotonicity(target(p, cfg["tol"]), grid, cfg["maxOrder"], cfg["eps_cm"])
        return _merge([("complete-monotonicity", rep)])

    return run


def _ratio_check(pair, log_cm_den: bool = False, count: int | None = None):
    def run(p, cfg):
        num, den = pair(p)
        n = count or cfg["gridCount"]
        grid = GridSpec(0.01, 0.95, n)
        fn, fd = _fw_fun(num, 1e-15), _fw_fun(den, 1e-15)
        out = [("ratio-decreasing", check_ratio_monotone(fn, fd, grid, "decreasing", cfg["eps_ratio"]))]
        if log_cm_den:
            out.append(("denominator-log-cm", check_log_cm(fd, GridSpec(0.01, 0.9, n), cfg["maxOrder"], cfg["eps_cm"])))
        return _merge(out)

    return run


def _h8_check(p, cfg):
    fw = h8_spec(p["tau"], p["d"])
    eta1 = hypothesis_constants("H8", p).etaVariant
    g1 = _fw_fun(fw, 1e-15)

    def g2(z):
        return g1(z) - eta1 * np.exp(-2.0 * np.asarray(z, dtype=float))

    grid = GridSpec(0.01, 10.0, cfg["gridCount"])
    r1 = check_complete_monotonicity(g1, grid, cfg["maxOrder"], cfg["eps_cm"])
    r2 = check_complete_monotonicity(g2, grid, cfg["maxOrder"], cfg["eps_cm"])
    margin, passed, info = _merge([("g1-cm", r1), ("g2-cm", r2)])
    info["eta1"] = eta1
    info["g1(0)"] = g1(0.0)
    return margin, passed, info


_THEOREM_LIST = [
    Theorem("H1", "H1", ("thm-3.1",), "Fourier-side kernel e1 is non-negative", _nonneg_check(e1_spec)),
    Theorem("H2", "H2", ("thm-3.2",), "Fourier-side kernel e2 is non-negative", _nonneg_check(e2_spec)),
    Theorem(
        "thm-4.1", "H1", (), "(1/s) H^{2,2}_{3,3}(s) from e1 is completely monotonic",
        _laplace_cm_check(e1_spec), {"tau": 1.0, "d": 1},
        notes="PD claim not checked: the kernel has a double pole at s = -1 and diverges at 0",
    ),
    Theorem(
        "thm-4.3", "H2", (), "(1/s) H^{2,2}_{3,3}(s) from e2 is completely monotonic",
        _laplace_cm_check(e2_spec), {"tau": 1.0, "d": 1},
        notes="PD claim not checked, as for thm-4.1",
    ),
    Theorem("H3", "H3", ("thm-4.5",), "shifted p+1Psi_p ratio is decreasing on (0,1)", _ratio_check(_h3_pair)),
    Theorem("example-kummer", "kummer", ("kummer",), "tau-Kummer ratio is decreasing on (0,1)",
            _ratio_check(_kummer_pair, count=50)),
    Theorem("H4", "H4", ("cor-4.7",), "3Psi1 ratio decreasing and denominator log-CM on (0,1)",
            _ratio_check(_h4_pair, log_cm_den=True)),
    Theorem("H5", "H5", ("cor-4.8",), "3Psi1 ratio decreasing (empty hypothesis set)"),
    Theorem("H6", "H6", ("cor-4.9",), "3Psi1 ratio decreasing (empty hypothesis set)"),
    Theorem("H7", "H7", ("cor-4.10",), "3Psi2 ratio decreasing (empty hypothesis set)"),
    Theorem("H8", "H8", ("thm-eta1",), "g1 and g1 - eta1 exp(-2z) are completely monotonic", _h8_check),
    Theorem("H9", "H9", ("thm-eta2",), "g3, g4 completely monotonic (empty hypothesis set)"),
    Theorem("H10", "H10", ("thm-eta3",), "g5, g6 completely monotonic (empty hypothesis set)"),
]

THEOREMS: dict[str, Theorem] = {}
for _t in _THEOREM_LIST:
    THEOREMS[_t.id] = _t
    for _a in _t.aliases:
        THEOREMS[_a] = _t


def get_theorem(theorem_id: str) -> Theorem:
    try:
        return THEOREMS[theorem_id]
    except KeyError:
        raise UnknownTheoremError(f"unknown theorem {theorem_id!r}; known: {', '.join(t.id for t in _THEOREM_LIST)}") from None


def list_theorems() -> list[Theorem]:
    return list(_THEOREM_LIST)


def run_theorem_suite(
    theoremId: str,
    samples: int = 10,
    seed: int = 42,
    config: dict | None = None,
    params: list[dict] | None = None,
) -> PropertyReport:
    """Sample the hypothesis set, check each sample, aggregate.

    Explicit ``params`` replace sampling; each one is validated before any
    evaluation.  An evaluation failure inside a sample makes that sample fail
    with margin ``-inf`` and the error text recorded.
    """
    thm = get_theorem(theoremId)
    hyp = HYPOTHESES[thm.hypothesis]
    cfg = dict(DEFAULT_CONFIG)
    cfg.update(config or {})
    if params is None:
        draws = hyp.sample(samples, seed, thm.fixed)
    else:
        draws = [hyp.validate({**p, **thm.fixed}) for p in params]
    if thm.check is None:
        raise EmptyHypothesisError(f"{thm.id} has no checker")
    rows = []
    failures = []
    worst = math.inf
    for i, p in enumerate(draws):
        try:
            margin, ok, info = thm.check(p, cfg)
        except FoxHError as exc:
            margin, ok, info = -math.inf, False, {"error": f"{type(exc).__name__}: {exc}"}
        worst = min(worst, margin)
        rows.append({"index": i, "params": p, "margin": margin, "passed": ok, "info": info})
        if not ok:
            failures.append((i, p, info))
    return PropertyReport(
        theoremId=thm.id,
        samplesTested=len(draws),
        worstMargin=worst,
        failures=failures,
        passed=all(r["passed"] for r in rows),
        eps=cfg["eps_nonneg"],
        samples=rows,
        details={"claim": thm.claim, "hypothesis": thm.hypothesis, "config": cfg, "notes": thm.notes},
    )


def hypothesis_constants(theoremId: str, params: dict, check: bool = True) -> RepresentationConstants:
    """Atom weights and rates attached to H8, H9 and H10.

    ``eta``/``rho``/``t_star`` come from the general kernel formulas for the
    underlying Fox-Wright function; ``etaVariant``/``rhoVariant`` are the
    closed forms as printed (eta1 with rate 2, (eta2, rho2), (eta3, rho3)).
    ``check=False`` skips hypothesis validation, which is needed to evaluate
    the formulas outside (or, for H9/H10, in the absence of) admissible sets.
    """
    thm = get_theorem(theoremId)
    hid = thm.hypothesis
    if check:
        HYPOTHESES[hid].validate(params)
    if hid == "H8":
        tau, d = params["tau"], params["d"]
        fw = h8_spec(tau, d)
        eta1 = _SQRT_PI * 2.0 ** (tau - d / 2 + 0.5)
        return RepresentationConstants(eta_constant(fw), fw.radius, kernel_support(fw), eta1, 2.0)
    if hid == "H9":
        a, g, d = params["alpha"], params["gamma"], params["d"]
        r = (1 - a) / (2 * a)
        eta2 = (
            math.sqrt(2 * math.pi)
            * 0.5 ** (d / 2 - 1.5)
            * r ** ((2 + 2 * g * (1 - a) - a) / (2 * a))
            * (1 / (2 * a)) ** (g * (a - 1) - 0.5)
        )
        rho2 = math.sqrt(2) * (1 / (2 * a)) ** (1 / (2 * a)) * r ** ((a - 1) / (2 * a))
        fw = FoxWrightSpec([(d / 2 - 1, 0.5), ((1 + g * (1 - a)) / a, (1 - a) / (2 * a))], [(1 + g * (1 - a), 1 / (2 * a))])
        return _with_kernel(fw, eta2, rho2)
    if hid == "H10":
        a, b, g = params["alpha"], params["beta"], params["gamma"]
        eta3 = math.sqrt(2) * (1 / (2 * a)) ** (-0.5 - g / b) * (1 / (2 * a * b)) ** ((g + b) / (a * b) - 0.5)
        rho3 = math.sqrt(0.5) * (1 / (2 * a)) ** (1 / (2 * a)) * (1 / (2 * a * b)) ** (1 / (2 * a * b))
        fw = FoxWrightSpec([(1.0, 1.0), ((g + b) / (a * b), 1 / (2 * a * b))], [(1 + g / b, 1 / (2 * a)), (1.0, 0.5)])
        return _with_kernel(fw, eta3, rho3)
    raise UnknownTheoremError(f"{theoremId!r} has no representation constants")


def _with_kernel(fw: FoxWrightSpec, eta_v: float, rho_v: float) -> RepresentationConstants:
    try:
        return RepresentationConstants(eta_constant(fw), fw.radius, kernel_support(fw), eta_v, rho_v)
    except (ValueError, ZeroDivisionError, FoxHError):
        return RepresentationConstants(math.nan, math.nan, math.nan, eta_v, rho_v)
