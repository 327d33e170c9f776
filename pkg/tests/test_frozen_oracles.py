"""Independent re-derivation of every frozen constant.

The package itself is deliberately not used here: expressions are built
symbolically (sympy) or at 40-digit precision (mpmath) straight from the
model definitions, then compared against the literals in frozen.py and,
where symbolic, reduced to exact zero.  If one of these fails, the frozen
values (not the library) are wrong.
"""

import mpmath as mp
import sympy as sp

import frozen

mp.mp.dps = 40


def _spectrum_expr(om1, om2, u, eta, t, c):
    """General field-2 amplitude spectrum; u = e^{2r}, t = e^{-qa z},
    c = cos(qo z)."""
    w2 = om1 ** 2 + om2 ** 2
    w4 = w2 ** 2
    const = (-om2 ** 2 / w2 + om2 ** 2 * u * (om1 - om2) ** 2 / (2 * w4)
             + om2 ** 2 / u * (om1 + om2) ** 2 / (2 * w4))
    cross = (om1 * om2 / u * (om1 ** 2 - om2 ** 2) / w4
             + u * (om1 * om2 ** 3 - om1 ** 3 * om2) / w4)
    damped = (-om1 ** 2 / w2 + om1 ** 2 / u * (om1 - om2) ** 2 / (2 * w4)
              + om1 ** 2 * u * (om1 + om2) ** 2 / (2 * w4))
    return 1 + eta * (const + t * c * cross + t ** 2 * damped)


def test_zero_distance_collapse_is_algebraic():
    om1, om2, eta = sp.symbols("om1 om2 eta", real=True)
    u = sp.symbols("u", positive=True)  # e^{2r}
    s = _spectrum_expr(om1, om2, u, eta, 1, 1)
    collapsed = 1 + eta * ((u + 1 / u) / 2 - 1)
    assert sp.simplify(s - collapsed) == 0


def test_equal_drive_reduction_is_algebraic():
    om, eta = sp.symbols("om eta", real=True, nonzero=True)
    u = sp.symbols("u", positive=True)
    t = sp.symbols("t", positive=True)
    c = sp.symbols("c", real=True)
    s = _spectrum_expr(om, om, u, eta, t, c)
    reduced = 1 + eta * ((u - 1) * t ** 2 / 2 + (1 / u - 1) / 2)
    assert sp.simplify(s - reduced) == 0


def test_oscillation_branches_reduce_exactly():
    """On both drive ratios 1 +- sqrt(2) the undamped spectrum equals the
    oscillation closed form, for field 2 as quoted and for field 1 with
    the squeezing sign reversed; the cosine amplitude is sinh(2r)/2."""
    u = sp.symbols("u", positive=True)
    eta, c = sp.symbols("eta c", real=True)
    om1 = sp.Integer(1)
    closed = 1 + (eta / 4) * (1 - 1 / u) * ((u + 1) * c + u - 3)
    closed_swapped = closed.subs(u, 1 / u)
    for ratio in (1 - sp.sqrt(2), 1 + sp.sqrt(2)):
        om2 = ratio * om1
        s2 = _spectrum_expr(om1, om2, u, eta, 1, c)
        s1 = _spectrum_expr(om2, om1, u, eta, 1, c)  # field swap
        assert sp.simplify(s2 - closed) == 0
        assert sp.simplify(s1 - closed_swapped) == 0
        amp = sp.simplify(om1 * om2 * (om1 ** 2 - om2 ** 2)
                          / (om1 ** 2 + om2 ** 2) ** 2)
        assert amp == sp.Rational(-1, 4)
    assert abs(float((mp.e ** 2 - mp.e ** -2) / 4) - frozen.OSC_AMPLITUDE) < 1e-15


def _spec_num(om1, om2, r, t, c):
    """Field-2 spectrum at eta = 1 in mpmath arithmetic."""
    u = mp.e ** (2 * r)
    w2 = om1 ** 2 + om2 ** 2
    w4 = w2 ** 2
    const = (-om2 ** 2 / w2 + om2 ** 2 * u * (om1 - om2) ** 2 / (2 * w4)
             + om2 ** 2 / u * (om1 + om2) ** 2 / (2 * w4))
    cross = (om1 * om2 / u * (om1 ** 2 - om2 ** 2) / w4
             + u * (om1 * om2 ** 3 - om1 ** 3 * om2) / w4)
    damped = (-om1 ** 2 / w2 + om1 ** 2 / u * (om1 - om2) ** 2 / (2 * w4)
              + om1 ** 2 * u * (om1 + om2) ** 2 / (2 * w4))
    return 1 + const + t * c * cross + t ** 2 * damped


def test_strong_control_residual_is_first_order():
    """The strong-drive reduction converges linearly in the drive ratio,
    so the residual at ratio 1e-6 sits near 4e-6, not at rounding level."""
    r = mp.mpf(1)
    t = mp.e ** mp.mpf("-0.5")
    c = mp.cos(mp.mpf("0.7"))
    ref_field1 = 1 + (mp.cosh(2 * r) - 1)

    def dev(eps):
        # field 1 of drives (1, eps) is the swapped-argument spectrum
        return abs(_spec_num(eps, mp.mpf(1), r, t, c) - ref_field1)

    d3, d6 = dev(mp.mpf("1e-3")), dev(mp.mpf("1e-6"))
    assert 0.99e3 < d3 / d6 < 1.01e3
    assert abs(float(d6) - frozen.STRONG_CONTROL_DEV_1E6_S11) < 2e-9


def test_witness_coefficients_and_roots():
    e2, em2 = mp.e ** 2, mp.e ** -2
    h = -3
    c_exp = (e2 - 1) * (1 + h) ** 2 / 2 + (em2 - 1) / 2
    c_const = (em2 - 1) * (1 - h) ** 2 / 2 + (e2 - 1) / 2
    assert abs(float(c_exp) - frozen.I2_EXP_COEFF) < 1e-14
    assert abs(float(c_const) - frozen.I2_CONST) < 1e-14
    assert abs(float(mp.log(c_exp / (-c_const)) / 2) - frozen.I2_ROOT) < 1e-15

    i1_0 = 4 * (em2 - 1)
    assert abs(float(i1_0) - frozen.I1_AT_ZERO) < 1e-15

    s_exp = (2 * em2 - 2) + 2 * c_exp
    s_const = (2 * em2 - 2) + 2 * c_const
    assert abs(float(s_exp) - frozen.SUM_EXP_COEFF) < 1e-14
    assert abs(float(s_const) - frozen.SUM_CONST) < 1e-14
    root = mp.log(s_exp / (-8 - s_const)) / 2
    assert abs(float(root) - frozen.SUM_ROOT) < 1e-15


def test_optimal_gain_zero_crossing_matches_arccosh_law():
    """The vertex-minimized hybrid witness vanishes exactly where
    cosh 2x = cosh 2r - 2; verified symbolically."""
    a, b, t2 = sp.symbols("a b t2", real=True)
    h = (b - a * t2) / (b + a * t2)
    i2 = (a * (1 + h) ** 2 + b) * t2 + b * (1 - h) ** 2 + a
    numerator = sp.simplify(i2 * (b + a * t2) / t2)
    # numerator = ab (t2 + 1/t2 + 4) + a^2 + b^2 in disguise
    u = sp.symbols("u", positive=True)  # e^{2r}
    a_r = (u - 1) / 2
    b_r = (1 / u - 1) / 2
    cosh2r = (u + 1 / u) / 2
    expr = numerator.subs({a: a_r, b: b_r})
    # the witness factors as ab * (t2 + 1/t2 - 2(cosh 2r - 2)), so its
    # only zero in t2 sits at cosh 2x = cosh 2r - 2
    constraint = t2 + 1 / t2 - 2 * (cosh2r - 2)
    assert sp.simplify(expr - a_r * b_r * constraint) == 0

    for r in (mp.mpf(1), mp.mpf(2), mp.mpf(5)):
        x = mp.acosh(mp.cosh(2 * r) - 2) / 2
        if r == 5:
            assert abs(float(x) - frozen.ONSET_X_R5) < 1e-14
    x3 = mp.acosh(mp.cosh(6) - 2) / 2
    assert abs(float(abs(x3 - 3) / 3) - frozen.ONSET_RELDEV_R3) < 1e-12
    assert abs(float(mp.acosh(3) / 2) - frozen.ONSET_R_THRESHOLD) < 1e-15


def test_misc_constants():
    assert abs(float(mp.cosh(2)) - frozen.DIAG_R1) < 1e-15
    assert abs(float(mp.sinh(2)) - frozen.CROSS_R1) < 1e-15
    assert abs(float(mp.e ** -2) - frozen.OSC_MIN) < 1e-16
    assert abs(float((1 + mp.e ** -2) / 2) - frozen.ASYMPTOTE_0) < 1e-16
    assert abs(float((1 + mp.e ** 2) / 2) - frozen.ASYMPTOTE_P2) < 1e-15
    assert abs(float((mp.e ** -2 - 1) / 2) - frozen.CROSS_ASYMPTOTE_0) < 1e-16
    # detuning with a 7:1 dispersion-to-absorption ratio at drives 1, 1+sqrt2
    w2 = (1 + mp.sqrt(2)) ** 2 + 1
    d = (-7 + mp.sqrt(49 + 16 * w2)) / 4
    assert abs(float(d) - frozen.FIG3_DELTA) < 1e-15
    qa = d ** 2 / 2 / (((1 + 1 + mp.sqrt(2)) ** 2 / 4 - d ** 2) ** 2 + d ** 2 / 4)
    qo = d * (w2 - d ** 2) / (((1 + 1 + mp.sqrt(2)) ** 2 / 4 - d ** 2) ** 2 + d ** 2 / 4)
    assert abs(float(qo / qa) - 7.0) < 1e-12
