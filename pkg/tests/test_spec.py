import json
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from foxh import (
    FoxWrightSpec,
    HFunctionSpec,
    convergence_params,
    eval_h_series,
    evaluate,
    exp_spec,
    from_fox_wright,
    gamma,
    invert_argument,
    lattice_gap,
    load_spec,
    mellin_kernel,
    parse_spec,
    pole_sets,
    reduce_matching_pair,
    scale_argument,
    shift_power,
    to_meijer_g,
)
from foxh.errors import MatchingPairError, SpecError


def test_validation():
    with pytest.raises(SpecError):
        HFunctionSpec(m=2, n=0, lower=((0, 1),))
    with pytest.raises(SpecError):
        HFunctionSpec(m=1, n=0, lower=((0, -1),))
    with pytest.raises(SpecError):
        HFunctionSpec(m=0, n=0, upper=((0, 1),))


def test_exp_kernel_is_gamma():
    s = np.array([0.3 + 1j, 2.0, 1.5 - 4j])
    assert np.allclose(mellin_kernel(exp_spec(), s), gamma(s), rtol=1e-13)


def test_exp_convergence_report():
    rep = convergence_params(exp_spec())
    assert (rep.bigC, rep.bigD, rep.delta) == (1.0, 1.0, 1.0)
    assert lattice_gap(exp_spec())[0] == 0.0
    left, right = pole_sets(exp_spec())
    assert len(left) == 1 and not right


def test_fox_wright_image_classification():
    # 1Psi1[(1,1);(2,1)](z) = (e^z - 1)/z
    fw = FoxWrightSpec(upper=((1, 1),), lower=((2, 1),))
    rep = convergence_params(from_fox_wright(fw))
    assert rep.delta == 1.0 and rep.radius == 1.0 and rep.mu == 1.0
    assert eval_h_series(from_fox_wright(fw), -1.0) == pytest.approx(math.e - 1, rel=1e-14)


def test_invert_is_involution():
    spec = HFunctionSpec(m=1, n=1, upper=((0.2, 1.0), (0.4, 0.5)), lower=((0.1, 0.7),))
    back = invert_argument(invert_argument(spec))
    assert (back.m, back.n) == (spec.m, spec.n)
    assert np.allclose(back.upper, spec.upper) and np.allclose(back.lower, spec.lower)


@pytest.mark.parametrize("z", [0.3, 1.0, 2.5])
def test_invert_values(z):
    spec = from_fox_wright(FoxWrightSpec(upper=((1, 1),), lower=((2, 1),)))
    assert evaluate(invert_argument(spec), 1 / z) == pytest.approx(evaluate(spec, z), rel=1e-9)


@settings(max_examples=20, deadline=None)
@given(st.floats(0.4, 3.0), st.floats(0.2, 3.0))
def test_scale_argument_property(k, z):
    out, coef = scale_argument(exp_spec(), k)
    assert coef * evaluate(out, z**k) == pytest.approx(math.exp(-z), rel=1e-8, abs=1e-12)


@settings(max_examples=20, deadline=None)
@given(st.floats(-0.8, 2.0), st.floats(0.2, 4.0))
def test_shift_power_property(sigma, z):
    assert evaluate(shift_power(exp_spec(), sigma), z) == pytest.approx(z**sigma * math.exp(-z), rel=1e-8, abs=1e-12)


def test_reduce_both_patterns():
    base = exp_spec()
    grown = HFunctionSpec(m=0, n=2, upper=((1.5, 1.0), (0.0, 1.0)), lower=((1.5, 1.0),))
    assert reduce_matching_pair(grown) == base
    grown2 = HFunctionSpec(m=1, n=1, upper=((0.0, 1.0), (0.3, 2.0)), lower=((0.3, 2.0),))
    assert reduce_matching_pair(grown2) == base
    with pytest.raises(MatchingPairError):
        reduce_matching_pair(base)


def test_meijer_reduction_of_exp():
    # exp(-z) = G^{1,0}_{0,1}(z | 0) in the standard Meijer layout
    g, coef = to_meijer_g(exp_spec())
    assert (g.m, g.n, g.a, g.b, coef) == (1, 0, (), (0.0,), 1.0)


def test_parse_and_load(tmp_path):
    doc = {"convention": "paper", "m": 0, "n": 1, "upper": [[0, 1]], "lower": []}
    assert parse_spec(doc) == exp_spec()
    path = tmp_path / "s.json"
    path.write_text(json.dumps({"convention": "fox-wright", "upper": [[1, 1]], "lower": [[2, 1]]}))
    assert isinstance(load_spec(str(path)), FoxWrightSpec)
    with pytest.raises(SpecError):
        parse_spec({"convention": "paper", "m": 0})
    with pytest.raises(SpecError):
        parse_spec({"convention": "weird", "m": 0, "n": 1, "upper": [[0, 1]]})
