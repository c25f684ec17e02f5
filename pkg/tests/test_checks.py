import json
import math

import numpy as np
import pytest
import scipy.special as sc
from hypothesis import given, settings
from hypothesis import strategies as st

from foxh import (
    GridSpec,
    chebyshev_check,
    check_complete_monotonicity,
    check_log_cm,
    check_nonnegativity,
    check_positive_definite,
    check_ratio_monotone,
    exp_spec,
    kappa_ratio,
    kappa_ratio_direct,
    radial,
)
from foxh.errors import PreconditionError


def test_grid_points():
    assert np.allclose(GridSpec(1, 3, 3).points(), [1, 2, 3])
    assert np.allclose(GridSpec(1, 100, 3, "log").points(), [1, 10, 100])


@settings(max_examples=20, deadline=None)
@given(st.lists(st.floats(0.05, 3.0), min_size=1, max_size=4), st.lists(st.floats(0.1, 2.0), min_size=4, max_size=4))
def test_exponential_mixtures_are_cm(rates, weights):
    f = lambda x: sum(w * np.exp(-r * x) for r, w in zip(rates, weights))  # noqa: E731
    assert check_complete_monotonicity(f, GridSpec(0.1, 5.0, 60)).passed


def test_growing_function_is_not_cm():
    rep = check_complete_monotonicity(np.exp, GridSpec(0.1, 5.0, 60))
    assert not rep.passed and rep.worstMargin < 0


def test_nonnegativity():
    assert check_nonnegativity(lambda x: x * x, GridSpec(-1, 1, 21)).passed
    rep = check_nonnegativity(np.sin, GridSpec(0.1, 6.0, 50))
    assert not rep.passed and rep.failures


def test_log_cm():
    # 1/(1+x) has CM log-derivative magnitude; sums of exponentials with distinct rates too
    assert check_log_cm(lambda x: 1 / (1 + x), GridSpec(0.1, 5, 50)).passed
    with pytest.raises(PreconditionError):
        check_log_cm(lambda x: x - 1, GridSpec(0.1, 5, 50))


@pytest.mark.parametrize(
    "profile, d",
    [(lambda r: np.exp(-r * r), 1), (lambda r: np.exp(-r), 3), (lambda r: sc.j0(r), 2)],
)
def test_positive_definite_kernels(profile, d):
    assert check_positive_definite(radial(profile), d=d, trials=5).passed


def test_cos_is_pd_and_square_is_not():
    assert check_positive_definite(np.cos, d=1, trials=5).passed
    rep = check_positive_definite(lambda x: x**2, d=1, trials=3)
    assert not rep.passed
    i, j = rep.failures[0][2]["pair"]
    pts = np.array(rep.failures[0][2]["points"]).ravel()
    # the certificate pair alone gives an indefinite 2x2 Gram matrix
    gram = np.array([[0.0, (pts[i] - pts[j]) ** 2], [(pts[i] - pts[j]) ** 2, 0.0]])
    assert np.linalg.eigvalsh(gram)[0] < 0


def test_positive_definite_is_seeded():
    a = check_positive_definite(radial(lambda r: np.exp(-r)), d=2, trials=3, seed=5)
    b = check_positive_definite(radial(lambda r: np.exp(-r)), d=2, trials=3, seed=5)
    assert a.worstMargin == b.worstMargin


def test_ratio_monotone():
    grid = GridSpec(0.1, 3.0, 40)
    assert check_ratio_monotone(lambda x: np.exp(-2 * x), np.exp, grid, "decreasing").passed
    assert not check_ratio_monotone(np.exp, lambda x: np.exp(-x), grid, "decreasing").passed


def test_chebyshev():
    lhs, rhs, ok = chebyshev_check(lambda x: 1.0, lambda x: x, lambda x: x, 0.0, 1.0)
    # (int x)^2 = 1/4 <= int x^2 = 1/3 for similarly ordered f, g
    assert lhs == pytest.approx(0.25) and rhs == pytest.approx(1 / 3) and ok
    assert not chebyshev_check(lambda x: 1.0, lambda x: x, lambda x: -x, 0.0, 1.0)[2]


def test_kappa_routes_agree():
    spec = exp_spec()
    psi = lambda t: np.ones_like(t)  # noqa: E731
    # t^-1 e^-t is not integrable at 0, so start at a = 0.1
    a = kappa_ratio(spec, 0.5, 1.0, psi, 0.1, 2.0, 0.7)
    b = kappa_ratio_direct(spec, 0.5, 1.0, psi, 0.1, 2.0, 0.7)
    assert a == pytest.approx(b, rel=1e-9)


def test_report_serialization():
    rep = check_nonnegativity(lambda x: x - 0.5, GridSpec(0, 1, 11))
    doc = json.loads(rep.to_json(seed=1, config={"k": 1}))
    assert doc["passed"] is False and doc["seed"] == 1
    assert rep.to_csv().splitlines()[0] == "theorem,sample_index,param_json,worst_margin,passed"
    assert math.isfinite(doc["worstMargin"])
