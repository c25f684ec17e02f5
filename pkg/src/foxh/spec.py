r"""Parameter algebra for Fox H-functions.

An :class:`HFunctionSpec` stores the orders ``(m, n)`` and two lists of
``(value, weight)`` pairs.  ``upper`` holds the ``(a_i, A_i)`` pairs and
``lower`` the ``(b_j, B_j)`` pairs, and the Mellin kernel is

.. math::

    \mathcal{H}(s) = \frac{\prod_{i\le n}\Gamma(a_i + A_i s)\,
                           \prod_{j\le m}\Gamma(1 - b_j - B_j s)}
                          {\prod_{j>m}\Gamma(b_j + B_j s)\,
                           \prod_{i>n}\Gamma(1 - a_i - A_i s)},

with :math:`H(z) = \frac{1}{2\pi i}\int_L \mathcal{H}(s) z^{-s}\,ds`.

Note the index placement: ``n`` counts numerator factors from ``upper`` and
``m`` counts numerator factors from ``lower``.  This is transposed relative to
the common :math:`H^{m,n}_{p,q}` layout; use :meth:`HFunctionSpec.from_standard`
or the ``"standard"`` JSON convention to enter parameters in that layout.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .errors import GammaOverflowError, KernelPoleError, MatchingPairError, PreconditionError, SpecError
from .gamma import _log_gamma_array, _nearest_pole

__all__ = [
    "Pair",
    "HFunctionSpec",
    "FoxWrightSpec",
    "MeijerGSpec",
    "Lattice",
    "ConvergenceReport",
    "exp_spec",
    "mellin_kernel",
    "log_mellin_kernel",
    "pole_sets",
    "lattice_gap",
    "convergence_params",
    "asymptotic_exponent",
    "invert_argument",
    "scale_argument",
    "reduce_matching_pair",
    "shift_power",
    "from_fox_wright",
    "to_meijer_g",
    "load_spec",
    "parse_spec",
]

Pair = tuple[float, float]


def _pairs(items: Iterable[Sequence[float]], name: str, *, strict: bool) -> tuple[Pair, ...]:
    out = []
    for k, item in enumerate(items):
        try:
            value, weight = item
            value, weight = float(value), float(weight)
        except (TypeError, ValueError) as exc:
            raise SpecError(f"{name}[{k}] must be a (value, weight) pair of numbers") from exc
        if not (math.isfinite(value) and math.isfinite(weight)):
            raise SpecError(f"{name}[{k}] has a non-finite entry")
        if strict and weight <= 0:
            raise SpecError(f"{name}[{k}]: positive weights required (got {weight})")
        if not strict and weight < 0:
            raise SpecError(f"{name}[{k}]: weights must be non-negative (got {weight})")
        out.append((value, weight))
    return tuple(out)


@dataclass(frozen=True)
class FoxWrightSpec:
    """Parameters of the Fox-Wright function ``pPsi_q``.

    ``upper`` holds the numerator pairs ``(a_l, A_l)`` and ``lower`` the
    denominator pairs ``(b_l, B_l)``.  Zero weights are allowed here but not
    in the H-function image.
    """

    upper: tuple[Pair, ...]
    lower: tuple[Pair, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "upper", _pairs(self.upper, "upper", strict=False))
        object.__setattr__(self, "lower", _pairs(self.lower, "lower", strict=False))

    @property
    def p(self) -> int:
        return len(self.upper)

    @property
    def q(self) -> int:
        return len(self.lower)

    @property
    def delta(self) -> float:
        return 1.0 + sum(B for _, B in self.lower) - sum(A for _, A in self.upper)

    @property
    def radius(self) -> float:
        log_r = -sum(A * math.log(A) for _, A in self.upper if A > 0)
        log_r += sum(B * math.log(B) for _, B in self.lower if B > 0)
        return math.exp(log_r)

    @property
    def mu(self) -> float:
        return sum(b for b, _ in self.lower) - sum(a for a, _ in self.upper) + (self.p - self.q) / 2.0


@dataclass(frozen=True)
class HFunctionSpec:
    """Orders and parameter lists of one Fox H-function.

    ``preimage`` records the Fox-Wright spec this one was built from, if any;
    it does not take part in equality.
    """

    m: int
    n: int
    upper: tuple[Pair, ...] = ()
    lower: tuple[Pair, ...] = ()
    preimage: FoxWrightSpec | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "upper", _pairs(self.upper, "upper", strict=True))
        object.__setattr__(self, "lower", _pairs(self.lower, "lower", strict=True))
        if int(self.m) != self.m or int(self.n) != self.n:
            raise SpecError("orders m, n must be integers")
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "n", int(self.n))
        if not 0 <= self.n <= self.p:
            raise SpecError(f"need 0 <= n <= p (n={self.n}, p={self.p})")
        if not 0 <= self.m <= self.q:
            raise SpecError(f"need 0 <= m <= q (m={self.m}, q={self.q})")
        if self.m + self.n < 1:
            raise SpecError("need m + n >= 1 (degenerate kernel)")

    @property
    def p(self) -> int:
        return len(self.upper)

    @property
    def q(self) -> int:
        return len(self.lower)

    @classmethod
    def from_standard(cls, m: int, n: int, upper, lower) -> "HFunctionSpec":
        """Build from the common ``H^{m,n}_{p,q}`` layout.

        There ``upper`` is the ``(a, A)`` row entering as ``Gamma(1 - a - A s)``
        (first ``n`` in the numerator) and ``lower`` is the ``(b, B)`` row
        entering as ``Gamma(b + B s)`` (first ``m`` in the numerator).
        """
        return cls(m=n, n=m, upper=tuple(lower), lower=tuple(upper))

    def to_standard(self) -> dict:
        return {"m": self.n, "n": self.m, "upper": [list(x) for x in self.lower], "lower": [list(x) for x in self.upper]}

    def to_json(self) -> dict:
        return {
            "convention": "paper",
            "m": self.m,
            "n": self.n,
            "upper": [list(x) for x in self.upper],
            "lower": [list(x) for x in self.lower],
        }

    def with_preimage(self, fw: FoxWrightSpec | None) -> "HFunctionSpec":
        return HFunctionSpec(self.m, self.n, self.upper, self.lower, preimage=fw)


@dataclass(frozen=True)
class MeijerGSpec:
    """Meijer G parameters in the standard ``G^{m,n}_{p,q}`` layout.

    ``a`` enters as ``Gamma(1 - a_j - s)`` (first ``n`` on top) and ``b`` as
    ``Gamma(b_j + s)`` (first ``m`` on top), integrated against ``z^{-s}``.
    """

    m: int
    n: int
    a: tuple[float, ...]
    b: tuple[float, ...]

    def to_mpmath(self) -> tuple[list[list[float]], list[list[float]]]:
        """Argument lists in the form expected by ``mpmath.meijerg``."""
        a, b = list(self.a), list(self.b)
        return [a[: self.n], a[self.n:]], [b[: self.m], b[self.m:]]


@dataclass(frozen=True)
class Lattice:
    """Arithmetic progression of kernel poles, ``offset + k * step`` for k >= 0."""

    side: str  # "left" or "right"
    index: int  # position in ``upper`` (left) or ``lower`` (right)
    offset: float
    step: float

    def points(self, count: int) -> np.ndarray:
        return self.offset + self.step * np.arange(count)


@dataclass(frozen=True)
class ConvergenceReport:
    """Structural parameters of a spec.

    ``delta`` and ``radius`` follow the Fox-Wright reading (entire when
    ``delta > 0``, radius of the residue series when ``delta == 0``).
    ``weight_balance`` is ``delta - 1`` in Fox-Wright letters, exposed for the
    alternative boundary reading.  ``mu`` is ``None`` unless the spec carries a
    Fox-Wright preimage; the exponents are ``None`` when their index set is
    empty.
    """

    delta: float
    radius: float
    mu: float | None
    bigC: float
    bigD: float
    zeroExponent: float | None
    infExponent: float | None
    weight_balance: float

    def as_dict(self) -> dict:
        return {
            "delta": self.delta,
            "radius": self.radius,
            "mu": self.mu,
            "C": self.bigC,
            "D": self.bigD,
            "c": self.zeroExponent,
            "d": self.infExponent,
            "weight_balance": self.weight_balance,
        }


def exp_spec() -> HFunctionSpec:
    """The spec with kernel ``Gamma(s)``, i.e. ``H(z) = exp(-z)``."""
    return HFunctionSpec(m=0, n=1, upper=((0.0, 1.0),))


# ---------------------------------------------------------------------------
# Mellin kernel


def _factor_table(spec: HFunctionSpec):
    """Yield ``(kind, index, c0, c1, numerator)`` with factor ``Gamma(c0 + c1 s)``."""
    for i, (a, A) in enumerate(spec.upper):
        if i < spec.n:
            yield "upper", i, a, A, True
        else:
            yield "upper", i, 1.0 - a, -A, False
    for j, (b, B) in enumerate(spec.lower):
        if j < spec.m:
            yield "lower", j, 1.0 - b, -B, True
        else:
            yield "lower", j, b, B, False


def log_mellin_kernel(spec: HFunctionSpec, s) -> np.ndarray:
    """Log of the Mellin kernel; ``-inf`` real part where a denominator pole zeroes it.

    Raises :class:`KernelPoleError` when ``s`` hits a numerator pole.
    """
    ss = np.atleast_1d(np.asarray(s, dtype=complex)).ravel()
    total = np.zeros_like(ss)
    dead = np.zeros(ss.shape, dtype=bool)
    for kind, idx, c0, c1, numer in _factor_table(spec):
        w = c0 + c1 * ss
        hit, k = _nearest_pole(w)
        if numer and hit.any():
            t = int(np.flatnonzero(hit)[0])
            raise KernelPoleError(
                f"kernel pole: Gamma factor from {kind}[{idx}] at lattice index {int(-k[t])} (s={complex(ss[t])})",
                kind,
                idx,
                int(-k[t]),
            )
        vals = np.zeros_like(w)
        ok = ~hit
        vals[ok] = _log_gamma_array(w[ok])
        if numer:
            total += vals
        else:
            total -= vals
            dead |= hit
    total[dead] = -np.inf
    shape = np.shape(s)
    return total.reshape(shape) if shape else total[0]


def mellin_kernel(spec: HFunctionSpec, s):
    """Value of the Mellin kernel at ``s`` (scalar or array)."""
    lk = np.asarray(log_mellin_kernel(spec, s))
    if np.any(np.isfinite(lk.real) & (lk.real > 709.0)):
        raise GammaOverflowError("Mellin kernel magnitude exceeds float range")
    with np.errstate(invalid="ignore"):
        out = np.where(np.isneginf(lk.real), 0.0, np.exp(lk))
    return complex(out) if out.ndim == 0 else out


def pole_sets(spec: HFunctionSpec) -> tuple[list[Lattice], list[Lattice]]:
    """Left and right pole lattices of the kernel.

    Left: ``-(a_i + l)/A_i`` for ``i < n``.  Right: ``(1 - b_j + k)/B_j`` for
    ``j < m``.
    """
    left = [Lattice("left", i, -a / A, -1.0 / A) for i, (a, A) in enumerate(spec.upper[: spec.n])]
    right = [Lattice("right", j, (1.0 - b) / B, 1.0 / B) for j, (b, B) in enumerate(spec.lower[: spec.m])]
    return left, right


def lattice_gap(spec: HFunctionSpec) -> tuple[float, float]:
    """``(max left pole, min right pole)``, with infinities for empty sides."""
    left, right = pole_sets(spec)
    lo = max((L.offset for L in left), default=-math.inf)
    hi = min((R.offset for R in right), default=math.inf)
    return lo, hi


# ---------------------------------------------------------------------------
# Structural parameters


def _sum_weights(pairs) -> float:
    return math.fsum(w for _, w in pairs)


def convergence_params(spec: HFunctionSpec) -> ConvergenceReport:
    """Delta, radius, mu, C, D and the asymptotic exponents of ``spec``."""
    sa, sb = _sum_weights(spec.upper), _sum_weights(spec.lower)
    big_c = sa - sb
    big_d = (
        _sum_weights(spec.lower[: spec.m])
        - _sum_weights(spec.lower[spec.m:])
        + _sum_weights(spec.upper[: spec.n])
        - _sum_weights(spec.upper[spec.n:])
    )
    log_r = math.fsum(A * math.log(A) for _, A in spec.upper) - math.fsum(B * math.log(B) for _, B in spec.lower)
    mu = spec.preimage.mu if spec.preimage is not None else None
    c = min((a / A for a, A in spec.upper[: spec.n]), default=None)
    d = max(((b - 1.0) / B for b, B in spec.lower[: spec.m]), default=None)
    return ConvergenceReport(
        delta=big_c,
        radius=math.exp(log_r),
        mu=mu,
        bigC=big_c,
        bigD=big_d,
        zeroExponent=c,
        infExponent=d,
        weight_balance=big_c - 1.0,
    )


def asymptotic_exponent(spec: HFunctionSpec, regime: str) -> float:
    """Leading power of ``H`` at zero (``c``) or at infinity (``d``).

    ``c = min_{i<n} a_i/A_i`` and ``d = max_{j<m} (b_j - 1)/B_j``; the
    extremum picks the pole nearest the contour.  Requires ``C >= 0 or D > 0``
    at zero and ``C <= 0 or D > 0`` at infinity.
    """
    rep = convergence_params(spec)
    if regime == "zero":
        if not (rep.bigC >= 0 or rep.bigD > 0):
            raise PreconditionError("C >= 0 or D > 0", f"C={rep.bigC:g}, D={rep.bigD:g}")
        if rep.zeroExponent is None:
            raise PreconditionError("n >= 1", "minimum over an empty set")
        return rep.zeroExponent
    if regime == "infinity":
        if not (rep.bigC <= 0 or rep.bigD > 0):
            raise PreconditionError("C <= 0 or D > 0", f"C={rep.bigC:g}, D={rep.bigD:g}")
        if rep.infExponent is None:
            raise PreconditionError("m >= 1", "extremum over an empty set")
        return rep.infExponent
    raise ValueError(f"regime must be 'zero' or 'infinity', got {regime!r}")


# ---------------------------------------------------------------------------
# Transformation properties


def invert_argument(spec: HFunctionSpec) -> HFunctionSpec:
    """Spec of ``z -> H(1/z)``: orders swap, pairs become ``(1 - b, B)`` and ``(1 - a, A)``."""
    return HFunctionSpec(
        m=spec.n,
        n=spec.m,
        upper=tuple((1.0 - b, B) for b, B in spec.lower),
        lower=tuple((1.0 - a, A) for a, A in spec.upper),
    )


def scale_argument(spec: HFunctionSpec, k: float) -> tuple[HFunctionSpec, float]:
    """Return ``(out, k)`` with every weight times ``k``, so ``H_in(z) = k * H_out(z**k)``."""
    if not k > 0:
        raise PreconditionError("k > 0", f"k={k}")
    out = HFunctionSpec(
        m=spec.m,
        n=spec.n,
        upper=tuple((a, k * A) for a, A in spec.upper),
        lower=tuple((b, k * B) for b, B in spec.lower),
    )
    return out, float(k)


def shift_power(spec: HFunctionSpec, sigma: float) -> HFunctionSpec:
    """Spec of ``z**sigma * H(z)``: ``a -> a + sigma*A`` and ``b -> b + sigma*B``."""
    return HFunctionSpec(
        m=spec.m,
        n=spec.n,
        upper=tuple((a + sigma * A, A) for a, A in spec.upper),
        lower=tuple((b + sigma * B, B) for b, B in spec.lower),
    )


def _same(x: Pair, y: Pair, tol: float = 1e-12) -> bool:
    return abs(x[0] - y[0]) <= tol * max(1.0, abs(x[0])) and abs(x[1] - y[1]) <= tol * max(1.0, abs(x[1]))


def reduce_matching_pair(spec: HFunctionSpec) -> HFunctionSpec:
    """Cancel one numerator/denominator gamma pair.

    Two patterns cancel: a numerator ``upper`` pair (index < n) equal to a
    denominator ``lower`` pair (index >= m), which lowers ``n``; or a numerator
    ``lower`` pair (index < m) equal to a denominator ``upper`` pair
    (index >= n), which lowers ``m``.  The first pattern is tried first.
    """
    for i in range(spec.n):
        for j in range(spec.m, spec.q):
            if _same(spec.upper[i], spec.lower[j]):
                out = HFunctionSpec(
                    m=spec.m,
                    n=spec.n - 1,
                    upper=spec.upper[:i] + spec.upper[i + 1:],
                    lower=spec.lower[:j] + spec.lower[j + 1:],
                )
                return out
    for j in range(spec.m):
        for i in range(spec.n, spec.p):
            if _same(spec.lower[j], spec.upper[i]):
                return HFunctionSpec(
                    m=spec.m - 1,
                    n=spec.n,
                    upper=spec.upper[:i] + spec.upper[i + 1:],
                    lower=spec.lower[:j] + spec.lower[j + 1:],
                )
    raise MatchingPairError("no cancelling numerator/denominator pair in the spec")


def from_fox_wright(fw: FoxWrightSpec) -> HFunctionSpec:
    """H-function image of a Fox-Wright spec, evaluated at the negated argument.

    The result satisfies ``pPsi_q(-x) = H(x)`` for ``x > 0``: the kernel is
    ``Gamma(s) prod Gamma(a_l - A_l s) / prod Gamma(b_l - B_l s)``.  All weights
    must be strictly positive.
    """
    for k, (_, A) in enumerate(fw.upper):
        if A <= 0:
            raise SpecError(f"positive weights required (upper[{k}] has A={A})")
    for k, (_, B) in enumerate(fw.lower):
        if B <= 0:
            raise SpecError(f"positive weights required (lower[{k}] has B={B})")
    return HFunctionSpec(
        m=fw.p,
        n=1,
        upper=((0.0, 1.0),) + tuple((1.0 - b, B) for b, B in fw.lower),
        lower=tuple((1.0 - a, A) for a, A in fw.upper),
        preimage=fw,
    )


def to_meijer_g(spec: HFunctionSpec, tol: float = 1e-12) -> tuple[MeijerGSpec, float]:
    """Meijer G form when every weight equals a common ``A``.

    Returns ``(g, 1/A)`` with ``H(z) = (1/A) * G(z**(1/A))``.
    """
    weights = [w for _, w in spec.upper + spec.lower]
    A = weights[0]
    if any(abs(w - A) > tol * A for w in weights):
        raise SpecError("Meijer G reduction needs all weights equal")
    g = MeijerGSpec(
        m=spec.n,
        n=spec.m,
        a=tuple(b for b, _ in spec.lower),
        b=tuple(a for a, _ in spec.upper),
    )
    return g, 1.0 / A


# ---------------------------------------------------------------------------
# JSON documents


def parse_spec(doc: dict) -> HFunctionSpec | FoxWrightSpec:
    """Build a spec from a JSON-like mapping.

    ``{"convention": "paper"|"standard", "m", "n", "upper", "lower"}`` gives an
    :class:`HFunctionSpec`; ``{"convention": "fox-wright", "upper", "lower"}``
    gives a :class:`FoxWrightSpec`.  ``convention`` defaults to ``"paper"``.
    """
    if not isinstance(doc, dict):
        raise SpecError("spec document must be a JSON object")
    conv = doc.get("convention", "paper")
    try:
        if conv == "fox-wright":
            return FoxWrightSpec(upper=tuple(doc.get("upper", ())), lower=tuple(doc.get("lower", ())))
        m, n = doc["m"], doc["n"]
        upper, lower = tuple(doc.get("upper", ())), tuple(doc.get("lower", ()))
    except KeyError as exc:
        raise SpecError(f"spec document is missing key {exc.args[0]!r}") from exc
    if conv == "paper":
        return HFunctionSpec(m=m, n=n, upper=upper, lower=lower)
    if conv == "standard":
        return HFunctionSpec.from_standard(m, n, upper, lower)
    raise SpecError(f"unknown convention {conv!r}")


def load_spec(path: str) -> HFunctionSpec | FoxWrightSpec:
    """Read a spec from a JSON file (see :func:`parse_spec`)."""
    with open(path, encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SpecError(f"invalid JSON in {path}: {exc}") from exc
    return parse_spec(doc)
