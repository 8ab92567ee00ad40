"""Series evaluator checks against closed forms, recurrences and scipy."""

import math

import numpy as np
import pytest
from scipy import special

from besselrad.bessel import MAX_TERMS, SeriesEval, _series, bessel_j, bessel_j_deriv
from besselrad.errors import DomainError, NonConvergent


def j_half_closed(x):
    return math.sqrt(2.0 / (math.pi * x)) * math.sin(x)


def j_half_deriv_closed(x):
    # d/dx sqrt(2/(pi x)) sin x, by hand
    return math.sqrt(2.0 / math.pi) * (math.cos(x) / math.sqrt(x) - 0.5 * math.sin(x) / x**1.5)


def test_value_at_zero():
    assert bessel_j(0.0, 0.0).value == 1.0
    assert bessel_j(1.0, 0.0).value == 0.0
    assert bessel_j(2.5, 0.0).value == 0.0


def test_half_order_closed_form_point():
    got = bessel_j(0.5, math.pi / 2.0, tol=1e-12).value
    assert abs(got - 2.0 / math.pi) < 1e-12


def test_deriv_examples():
    got = bessel_j_deriv(0.5, 1.0, 1).value
    assert abs(got - j_half_deriv_closed(1.0)) < 1e-12
    assert bessel_j_deriv(0.0, 0.0, 1).value == 0.0
    assert bessel_j_deriv(2.0, 0.0, 1).value == 0.0
    # J_0''(0) = -1/2 from the n=1 term
    assert abs(bessel_j_deriv(0.0, 0.0, 2).value + 0.5) < 1e-15


def test_deriv_singular_at_zero():
    with pytest.raises(DomainError):
        bessel_j_deriv(0.5, 0.0, 1)
    with pytest.raises(DomainError):
        bessel_j_deriv(1.5, 0.0, 2)


def test_deriv_order_validated():
    with pytest.raises(ValueError):
        bessel_j_deriv(1.0, 1.0, 0)
    with pytest.raises(ValueError):
        bessel_j_deriv(1.0, 1.0, 4)


def test_recurrence_random():
    rng = np.random.default_rng(1234)
    for _ in range(200):
        nu = rng.uniform(0.05, 5.0)
        x = rng.uniform(0.05, 10.0)
        lhs = bessel_j(nu - 1.0, x).value + bessel_j(nu + 1.0, x).value
        rhs = (2.0 * nu / x) * bessel_j(nu, x).value
        assert abs(lhs - rhs) < 1e-9


def test_derivative_vs_central_difference():
    rng = np.random.default_rng(99)
    h = 1e-6
    for _ in range(50):
        nu = rng.uniform(0.0, 4.0)
        x = rng.uniform(0.1, 10.0)
        fd = (bessel_j(nu, x + h).value - bessel_j(nu, x - h).value) / (2.0 * h)
        dv = bessel_j_deriv(nu, x, 1).value
        assert abs(fd - dv) <= 1e-6 * max(1.0, abs(dv))


def test_half_order_closed_form_sweep():
    xs = np.linspace(0.05, 10.0, 100)
    for x in xs:
        got = bessel_j(0.5, float(x), tol=1e-13).value
        assert abs(got - j_half_closed(float(x))) < 1e-10


def test_against_scipy_orders():
    rng = np.random.default_rng(7)
    for _ in range(60):
        nu = rng.uniform(0.0, 4.5)
        x = rng.uniform(0.1, 12.0)
        assert abs(bessel_j(nu, x).value - special.jv(nu, x)) < 1e-10
        for order in (1, 2, 3):
            ref = special.jvp(nu, x, order)
            assert abs(bessel_j_deriv(nu, x, order).value - ref) < 1e-9


def test_complex_argument_against_scipy():
    # scipy jv supports complex arguments; spot-check the principal branch
    for z in (0.5 + 0.5j, -0.7 + 0.2j, -1.0 + 0.0j, 2.0 - 1.0j):
        got = bessel_j(1.5, z).value
        ref = complex(special.jv(1.5, complex(z)))
        assert abs(got - ref) < 1e-10


def test_truncation_bound_and_terms():
    ev = bessel_j(0.5, 3.0, tol=1e-12)
    assert isinstance(ev, SeriesEval)
    assert ev.terms_used >= 1
    assert 0.0 <= ev.truncation_bound <= 1e-11
    # bound really covers the dropped tail
    ref = special.jv(0.5, 3.0)
    assert abs(ev.value - ref) <= ev.truncation_bound + 1e-13


def test_nonconvergent_far_out():
    with pytest.raises(NonConvergent):
        bessel_j(0.5, 500.0, tol=1e-12)


def test_array_evaluation_matches_scalar():
    z = np.array([0.3 + 0.1j, 1.0 + 0.0j, -0.5 + 0.8j])
    vals, terms, bound = _series(1.5, z, 1, 1e-12)
    for i, zi in enumerate(z):
        assert abs(vals[i] - bessel_j_deriv(1.5, complex(zi), 1).value) < 1e-13
    assert bound <= 1e-12
    assert terms <= MAX_TERMS
