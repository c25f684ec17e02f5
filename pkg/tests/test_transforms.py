import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from foxh import (
    FoxWrightSpec,
    bessel_kernel,
    eta_constant,
    eval_fw,
    exp_shifted_rep,
    exp_spec,
    hankel_numeric,
    hankel_of_h,
    integral_rep_fw,
    kernel_measure,
    kernel_support,
    laplace_numeric,
    laplace_of_h,
    mittag_leffler_spec,
    radial_fourier,
    stieltjes_rep,
)
from foxh.errors import PreconditionError
from oracles import fox_wright

# (e^z - 1)/z: kernel is the indicator of (0, 1), mu = 1
STEP = FoxWrightSpec(upper=((1, 1),), lower=((2, 1),))
# mu = 0 case with an atom at t* = 1/2
ATOM = FoxWrightSpec(upper=((1, 0.5), (1.3, 0.5)), lower=((1.8, 1),))


@settings(max_examples=20, deadline=None)
@given(st.floats(0.1, 10.0))
def test_laplace_of_exp(s):
    assert laplace_of_h(exp_spec())(s) == pytest.approx(1 / (1 + s), rel=1e-10)


@pytest.mark.parametrize("s", [0.5, 1.0, 3.0])
def test_laplace_numeric_vs_image(s):
    spec = mittag_leffler_spec(0.5, 1.0, 1.0)
    assert laplace_numeric(spec, s) == pytest.approx(laplace_of_h(spec)(s), abs=1e-9)


def test_laplace_numeric_needs_positive_s():
    with pytest.raises(ValueError):
        laplace_numeric(exp_spec(), 0.0)


def test_bessel_kernel_normalization():
    # Gamma(nu+1) (2/x)^nu J_nu(x): sin(x)/x at nu = 1/2, 1 at x = 0
    x = np.array([0.3, 1.0, 4.0])
    assert np.allclose(bessel_kernel(0.5, x), np.sin(x) / x, rtol=1e-13)
    assert bessel_kernel(1.3, np.array([0.0]))[0] == pytest.approx(1.0)


@pytest.mark.parametrize("rho, nu, x", [(1.0, 0.5, 1.0), (1.5, 0.0, 0.7), (2.0, 1.0, 2.0)])
def test_hankel_closed_vs_numeric(rho, nu, x):
    img = hankel_of_h(exp_spec(), rho, nu)
    assert img(x) == pytest.approx(hankel_numeric(exp_spec(), rho, nu, 1.0, 1.0, x), rel=1e-7)


@pytest.mark.parametrize("xi", [0.5, 1.0, 2.0])
def test_radial_fourier_of_exp_in_3d(xi):
    # (2 pi)^{-3/2} int e^{-|x|} e^{-i x.xi} dx = 8 pi / (1 + xi^2)^2 / (2 pi)^{3/2}
    expected = 8 * math.pi / (1 + xi * xi) ** 2 / (2 * math.pi) ** 1.5
    assert radial_fourier(exp_spec(), 3, xi) == pytest.approx(expected, rel=1e-9)
    assert radial_fourier(exp_spec(), 3, xi, method="numeric") == pytest.approx(expected, rel=1e-6)


def test_kernel_support_and_eta():
    assert kernel_support(STEP) == pytest.approx(1.0)
    assert kernel_support(ATOM) == pytest.approx(0.5)
    # (2 pi)^{1/2} prod A^{a-1/2} prod B^{1/2-b}
    assert eta_constant(ATOM) == pytest.approx(math.sqrt(2 * math.pi) * 0.5**0.5 * 0.5**0.8)


def test_kernel_measure_total_mass():
    assert kernel_measure(STEP, lambda t: np.ones_like(t)) == pytest.approx(eval_fw(STEP, 0.0), rel=1e-12)


@pytest.mark.parametrize("z", [-2.0, -0.5, 0.0, 0.7])
def test_integral_representation(z):
    assert integral_rep_fw(STEP, z) == pytest.approx(eval_fw(STEP, z), rel=1e-11)


@pytest.mark.parametrize("sigma", [0.5, 1.0, 2.5])
def test_stieltjes_representation(sigma):
    z = 0.5
    ref = fox_wright([(sigma, 1.0), (1.0, 1.0)], [(2.0, 1.0)], -z) / math.gamma(sigma)
    assert stieltjes_rep(STEP, sigma, z) == pytest.approx(ref, rel=1e-9)


def test_stieltjes_range():
    with pytest.raises(PreconditionError):
        stieltjes_rep(STEP, 1.0, 1.5)


@pytest.mark.parametrize("z", [0.3, 1.0, 4.0])
def test_atom_plus_density(z):
    # the density is not smooth at t*; 32 nodes give about 4e-9, 64 about 1e-10
    val, consts = exp_shifted_rep(ATOM, z, nodes=64)
    assert consts.t_star == pytest.approx(0.5) and consts.rho == pytest.approx(2.0)
    total = consts.eta * math.exp(-consts.t_star * z) + val
    assert total == pytest.approx(fox_wright([(1, 0.5), (1.3, 0.5)], [(1.8, 1)], -z), rel=1e-9)


def test_atom_requires_mu_zero():
    with pytest.raises(PreconditionError):
        exp_shifted_rep(STEP, 1.0)
