import math

import numpy as np
import pytest
import scipy.special as sc
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from foxh import (
    FoxWrightSpec,
    classify,
    eval_fw,
    evaluate,
    mittag_leffler,
    mittag_leffler_spec,
    to_generalized_hypergeometric,
)
from foxh.errors import ConvergenceError
from oracles import fox_wright


def test_exponential_series():
    assert eval_fw(FoxWrightSpec(upper=((1, 1),), lower=((1, 1),)), 1.0) == pytest.approx(math.e, rel=1e-15)


def test_geometric_series_on_boundary_case():
    # 1Psi0[(1,1)](z) = 1/(1-z), Delta = 0, radius 1
    fw = FoxWrightSpec(upper=((1, 1),))
    assert eval_fw(fw, 0.5) == pytest.approx(2.0, rel=1e-13)
    with pytest.raises(ConvergenceError):
        eval_fw(fw, 1.0)


@settings(max_examples=25, deadline=None)
@given(
    st.floats(0.2, 3.0), st.floats(0.3, 1.5), st.floats(0.5, 3.0), st.floats(0.3, 1.5), st.floats(-3.0, 3.0)
)
def test_series_against_mpmath(a, A, b, B, z):
    assume(1 + B - A >= 0.6)
    fw = FoxWrightSpec(upper=((a, A),), lower=((b, B),))
    ref = fox_wright([(a, A)], [(b, B)], z)
    assert eval_fw(fw, z) == pytest.approx(ref, rel=1e-10, abs=1e-12)


def test_classify_boundary_case():
    rep = classify(FoxWrightSpec(upper=((1, 1),)))
    assert rep.delta == 0.0 and rep.radius == 1.0


def test_hypergeometric_reduction():
    fw = FoxWrightSpec(upper=((0.5, 1), (1.5, 1)), lower=((2.5, 1),))
    coef, (num, den) = to_generalized_hypergeometric(fw)
    assert num == (0.5, 1.5) and den == (2.5,)
    z = 0.4
    assert coef * sc.hyp2f1(0.5, 1.5, 2.5, z) == pytest.approx(eval_fw(fw, z), rel=1e-13)


@pytest.mark.parametrize("z", [-3.0, -1.0, -0.2, 0.5])
def test_mittag_leffler_half(z):
    # E_{1/2}(z) = exp(z^2) erfc(-z); the series cancels like e^{z^2} for z < 0
    assert mittag_leffler(0.5, 1.0, 1.0, z) == pytest.approx(sc.erfcx(-z), rel=1e-12 * math.exp(z * z))


def test_mittag_leffler_special_cases():
    assert mittag_leffler(1.0, 1.0, 1.0, 1.0) == pytest.approx(math.e, rel=1e-14)
    assert mittag_leffler(2.0, 1.0, 1.0, 1.0) == pytest.approx(math.cosh(1.0), rel=1e-14)
    assert mittag_leffler(2.0, 1.0, 1.0, -1.0) == pytest.approx(math.cos(1.0), rel=1e-14)


@pytest.mark.parametrize("alpha, beta, g", [(0.5, 1.0, 1.0), (0.7, 1.2, 2.0)])
def test_mittag_leffler_h_form(alpha, beta, g):
    # H form carries Gamma(gamma) and evaluates at the negated argument
    x = 0.8
    h = evaluate(mittag_leffler_spec(alpha, beta, g), x)
    assert h == pytest.approx(math.gamma(g) * mittag_leffler(alpha, beta, g, -x), rel=1e-9)


def test_vector_argument():
    fw = FoxWrightSpec(upper=((1, 1),), lower=((1, 1),))
    z = np.array([0.0, 1.0, -1.0])
    assert np.allclose([eval_fw(fw, float(x)) for x in z], np.exp(z))
