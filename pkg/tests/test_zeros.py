"""Zero tables: bracketing, interlacing, products and power sums."""

import math

import numpy as np
import pytest
from scipy import optimize, special

from besselrad.errors import ScanExhausted
from besselrad.mercer import MercerParams, _largest_real_root, n_nu
from besselrad.zeros import (
    Which,
    check_interlacing,
    find_zeros,
    rayleigh_sums,
    residuals,
    scaled_target,
    weierstrass_partial,
)


def random_admissible(rng):
    """Admissible draw with nu in [max(0, nu0), 5]."""
    a = rng.uniform(0.3, 3.0)
    b = a + rng.uniform(0.25, 2.5)
    c = 0.0 if rng.random() < 0.5 else rng.uniform(0.3, 4.0)
    root = _largest_real_root(a, b, c)
    low = max(0.0, root) if root is not None else 0.0
    nu = min(low + rng.uniform(0.05, 4.5), 5.0)
    return MercerParams(a, b, c, nu)


def test_first_zero_of_z_j1prime():
    # N = z J_1' for (a,b,c) = (0,1,0); first positive zero found
    # independently by bisection on the scipy derivative
    p = MercerParams(0, 1, 0, 1.0)
    got = find_zeros(p, Which.N, 1, 1e-12).zeros[0]
    ref = optimize.brentq(lambda x: special.jvp(1.0, x), 1.2, 2.5, xtol=1e-13)
    assert abs(got - ref) < 1e-10


def test_first_zero_trig_equation():
    # for (1,2,0) at nu=1/2 the zero solves (1+4x^2) sin x = 4x cos x
    p = MercerParams(1, 2, 0, 0.5)
    got = find_zeros(p, Which.N, 1, 1e-12).zeros[0]
    ref = optimize.brentq(
        lambda x: (1.0 + 4.0 * x * x) * math.sin(x) - 4.0 * x * math.cos(x),
        0.3, 1.5, xtol=1e-14,
    )
    assert abs(got - ref) < 1e-10
    # well below pi/2: the first zero of this combination is not Bessel-like
    assert got < math.pi / 2.0


def test_zeros_strictly_increasing_and_bracketed():
    p = MercerParams(1, 2, 3, 1.3)
    table = find_zeros(p, Which.N, 8, 1e-10)
    zs = table.zeros
    assert all(zs[i] < zs[i + 1] for i in range(len(zs) - 1))
    assert all(z > 0 for z in zs)
    f = scaled_target(p, Which.N)
    for z in zs:
        w = max(table.accuracy, 1e-9)
        assert f(z - w) * f(z + w) < 0.0  # certified sign change


def test_zero_residual_scale():
    p = MercerParams(1, 2, 0, 0.5)
    table = find_zeros(p, Which.N, 10, 1e-10)
    f = scaled_target(p, Which.N)
    for z, r in zip(table.zeros, residuals(table)):
        local = max(abs(f(z - 0.4)), abs(f(z + 0.4)))
        assert abs(r) < 1e-10 * local


def test_interlacing_random_draws():
    rng = np.random.default_rng(318)
    for _ in range(6):
        p = random_admissible(rng)
        tn = find_zeros(p, Which.N, 10, 1e-10)
        tnp = find_zeros(p, Which.NPRIME, 10, 1e-10)
        assert check_interlacing(tn, tnp)


def test_interlacing_fixed_examples():
    for args in ((1, 2, 0, 0.5), (1, 3, 0, 2.0)):
        p = MercerParams(*args)
        tn = find_zeros(p, Which.N, 10)
        tnp = find_zeros(p, Which.NPRIME, 10)
        assert check_interlacing(tn, tnp)
        assert not check_interlacing(tnp, tn)  # swapped roles break the chain


def test_interlacing_input_validation():
    p = MercerParams(1, 2, 0, 0.5)
    q = MercerParams(1, 3, 0, 0.5)
    with pytest.raises(ValueError):
        check_interlacing(find_zeros(p, Which.N, 2), find_zeros(q, Which.NPRIME, 2))
    with pytest.raises(ValueError):
        check_interlacing(find_zeros(p, Which.N, 1), find_zeros(p, Which.NPRIME, 1))


def test_scan_exhausted():
    p = MercerParams(1, 2, 0, 0.5)
    with pytest.raises(ScanExhausted):
        find_zeros(p, Which.N, 50, 1e-8, x_max=10.0)


def test_weierstrass_partial():
    p = MercerParams(1, 2, 0, 0.5)
    table = find_zeros(p, Which.N, 12)
    # z^nu prefactor kills the value at the origin
    assert weierstrass_partial(p, Which.N, 0.0, 5, table=table) == 0.0
    # vanishes at a tabulated zero
    lam1 = table.zeros[0]
    assert abs(weierstrass_partial(p, Which.N, lam1, 12, table=table)) < 1e-10
    # approximates N; the truncated tail is the exponential of the dropped
    # power-sum pieces, so correcting with the exact sums gets ~1e-7
    z = 0.3
    got = weierstrass_partial(p, Which.N, z, 12, table=table)
    ref = n_nu(p, complex(z))
    assert abs(got - ref) / abs(ref) < 2e-3
    s1, s2 = rayleigh_sums(p, Which.N)
    t1 = s1 - sum(lam**-2 for lam in table.zeros)
    t2 = s2 - sum(lam**-4 for lam in table.zeros)
    corrected = got * np.exp(-(z**2) * t1 - 0.5 * z**4 * t2)
    assert abs(corrected - ref) / abs(ref) < 1e-7


def test_weierstrass_nprime():
    p = MercerParams(1, 2, 3, 0.8)
    table = find_zeros(p, Which.NPRIME, 12)
    z = 0.25
    got = weierstrass_partial(p, Which.NPRIME, z, 12, table=table)
    ref = n_nu(p, complex(z), 1)
    assert abs(got - ref) / abs(ref) < 2e-3


def test_mittag_leffler_identity():
    # z N'/N = nu - sum 2z^2/(lam^2 - z^2) at z = lam1/2; the partial sum
    # over 12 zeros plus the exact power-sum tail meets the 2e-3 budget
    # with orders of magnitude to spare
    p = MercerParams(1, 2, 0, 0.5)
    table = find_zeros(p, Which.N, 12)
    s1, s2 = rayleigh_sums(p, Which.N)
    z = 0.5 * table.zeros[0]
    part = sum(2 * z * z / (lam * lam - z * z) for lam in table.zeros)
    tail = 2 * z**2 * (s1 - sum(lam**-2 for lam in table.zeros))
    tail += 2 * z**4 * (s2 - sum(lam**-4 for lam in table.zeros))
    lhs = (z * n_nu(p, complex(z), 1) / n_nu(p, complex(z))).real
    assert abs(lhs - (p.nu - part - tail)) < 2e-3
    assert abs(lhs - (p.nu - part - tail)) < 1e-9


def test_rayleigh_sums_against_partials():
    # S1 must exceed every partial sum and the gap must match the 1/(pi^2 n)
    # spacing tail; S2 converges much faster
    p = MercerParams(1, 2, 3, 0.7)
    s1, s2 = rayleigh_sums(p, Which.N)
    table = find_zeros(p, Which.N, 30)
    p1 = sum(lam**-2 for lam in table.zeros)
    p2 = sum(lam**-4 for lam in table.zeros)
    assert 0 < s1 - p1 < 2.0 / (math.pi**2 * 30)
    assert 0 < s2 - p2 < 1e-5


def test_rayleigh_sums_bessel_reduction():
    # for N = z J_nu' the positive zeros are those of J_nu'; compare the
    # closed-form power sum against scipy's tabulated zeros
    nu = 1.0
    p = MercerParams(0, 1, 0, nu)
    s1, _ = rayleigh_sums(p, Which.N)
    zs = special.jnp_zeros(nu, 400)
    partial = float(np.sum(zs**-2.0))
    tail_hi = 1.0 / (math.pi**2 * 400)
    assert partial < s1 < partial + 2 * tail_hi


def test_hprime_zeros_live_in_h_domain():
    # gamma_n are squares of the scan-variable roots of (2-nu) N(s) + s N'(s)
    p = MercerParams(1, 2, 0, 0.5)
    table = find_zeros(p, Which.HPRIME, 3)
    for g in table.zeros:
        s = math.sqrt(g)
        val = (2.0 - p.nu) * n_nu(p, complex(s)) + s * n_nu(p, complex(s), 1)
        assert abs(val) < 1e-8


def test_gprime_zero_matches_direct_bisection():
    p = MercerParams(1, 2, 0, 0.5)
    got = find_zeros(p, Which.GPRIME, 1).zeros[0]

    def g_prime_combized(x):
        return ((1.0 - p.nu) * n_nu(p, complex(x)) + x * n_nu(p, complex(x), 1)).real

    ref = optimize.brentq(g_prime_combized, 0.1, 1.0, xtol=1e-13)
    assert abs(got - ref) < 1e-10
