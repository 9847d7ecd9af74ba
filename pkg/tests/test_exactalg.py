"""Core exact-algebra layer: Gaussian rationals, polynomials, operators,
multipliers, substitutions and jets."""

import cmath
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hyperclass.exactalg import (
    DiffOperator,
    GaussRational,
    Jet,
    LinFactor,
    MultiPoly,
    Multiplier,
    RatFun,
    Substitution,
    jet_apply,
    op_compose,
    op_conjugate,
    op_substitute,
)

# ---------------------------------------------------------------------------
# GaussRational
# ---------------------------------------------------------------------------

rationals = st.fractions(
    min_value=-10, max_value=10,
    max_denominator=12)
gaussians = st.builds(GaussRational, rationals, rationals)


@given(gaussians, gaussians, gaussians)
@settings(max_examples=200, deadline=None)
def test_gauss_rational_ring_axioms(x, y, z):
    assert (x + y) + z == x + (y + z)
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x + y == y + x
    assert x * y == y * x


@given(gaussians)
@settings(max_examples=100, deadline=None)
def test_gauss_rational_inverse(x):
    if not x.is_zero():
        assert x / x == GaussRational(1)
    assert complex(x * x.conjugate()).imag == pytest.approx(0)


def test_gauss_rational_complex_embedding():
    z = GaussRational(Fraction(3, 4), Fraction(-1, 2))
    assert complex(z) == 0.75 - 0.5j
    assert (z ** 2) == z * z
    assert GaussRational(0, 1) ** 2 == GaussRational(-1)


# ---------------------------------------------------------------------------
# MultiPoly / RatFun
# ---------------------------------------------------------------------------

def _rand_poly(draw_coeffs):
    w = MultiPoly.var("w")
    a = MultiPoly.var("alpha")
    out = MultiPoly()
    for i, c in enumerate(draw_coeffs):
        out = out + (w ** (i % 3)) * (a ** (i // 3)).scale(c)
    return out


small_fracs = st.fractions(min_value=-5, max_value=5, max_denominator=6)
polys = st.builds(_rand_poly, st.lists(small_fracs, min_size=1, max_size=5))


@given(polys, polys, polys)
@settings(max_examples=100, deadline=None)
def test_multipoly_ring_axioms(p, q, r):
    assert (p + q) * r == p * r + q * r
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)


@given(polys, polys)
@settings(max_examples=100, deadline=None)
def test_multipoly_eval_is_homomorphism(p, q):
    assign = {"w": 0.3 + 0.7j, "alpha": -1.25 + 0.5j}
    lhs = (p * q).eval_numeric(assign)
    rhs = p.eval_numeric(assign) * q.eval_numeric(assign)
    assert abs(lhs - rhs) <= 1e-9 * max(1.0, abs(rhs))


def test_multipoly_derivative_leibniz():
    w = MultiPoly.var("w")
    a = MultiPoly.var("alpha")
    p = w * w * a + w.scale(3)
    q = w * a - MultiPoly.const(2)
    lhs = (p * q).deriv("w")
    rhs = p.deriv("w") * q + p * q.deriv("w")
    assert lhs == rhs


def test_ratfun_normalization():
    w = MultiPoly.var("w")
    r1 = RatFun(w * w - MultiPoly.const(1), w - MultiPoly.const(1))
    r2 = RatFun(w + MultiPoly.const(1))
    assert r1 == r2
    assert (r1 - r2).is_zero()


def test_ratfun_arithmetic():
    w = MultiPoly.var("w")
    half = RatFun(MultiPoly.const(1), MultiPoly.const(2))
    r = RatFun(MultiPoly.const(1), w)
    assert r * RatFun(w) == RatFun(MultiPoly.const(1))
    v = (r + half).eval_numeric({"w": 4.0})
    assert v == pytest.approx(0.75)


# ---------------------------------------------------------------------------
# DiffOperator
# ---------------------------------------------------------------------------

def _op(var, *coeffs):
    return DiffOperator(var, [RatFun.of(MultiPoly.of(c)) for c in coeffs])


def test_op_compose_product_rule():
    w = MultiPoly.var("w")
    D = DiffOperator.d("w")
    Mw = DiffOperator.mult("w", RatFun(w))
    # [d, w] = 1
    comm = op_compose(D, Mw) - op_compose(Mw, D)
    assert comm == DiffOperator.identity("w")


def test_op_compose_associative():
    w = MultiPoly.var("w")
    A = _op("w", w, MultiPoly.const(1))
    B = _op("w", MultiPoly.const(2), w * w)
    C = _op("w", w - MultiPoly.const(1), w, MultiPoly.const(3))
    assert op_compose(op_compose(A, B), C) == op_compose(A, op_compose(B, C))


def test_op_conjugate_power_multiplier():
    # x^-g o (x d) o x^g = x d + g
    g = MultiPoly.var("alpha")
    w = MultiPoly.var("w")
    m = Multiplier.power("w", 1, 0, g)
    F = _op("w", MultiPoly(), w)
    conj = op_conjugate(F, m)
    assert conj == _op("w", g, w)


def test_op_conjugate_exp_multiplier():
    # e^{-x} o d o e^{x} = d + 1
    m = Multiplier.exp("w", 0, 1, 0)
    conj = op_conjugate(DiffOperator.d("w"), m)
    assert conj == _op("w", MultiPoly.const(1), MultiPoly.const(1))


def test_op_conjugate_inverse_roundtrip():
    g = MultiPoly.var("alpha")
    w = MultiPoly.var("w")
    m = Multiplier.power("w", 1, -1, g) * Multiplier.exp("w", 0, 0, Fraction(1, 2))
    F = _op("w", g * g, w, w * w)
    back = op_conjugate(op_conjugate(F, m), m.inverse())
    assert back == F


def test_op_substitute_moebius_numeric():
    # w = 1 - v applied to (w d + 1): coefficient transport check by action
    sub = Substitution.moebius("w", "v", -1, 1, 0, 1)
    w = MultiPoly.var("w")
    F = _op("w", MultiPoly.const(1), w)
    G = op_substitute(F, sub)
    # act on g(v) = e^v; f(w) = g(phi^-1(w)) = e^{1-w}
    v0 = 0.3 + 0.2j
    w0 = 1 - v0
    g = Jet.variable(v0, 2).exp()
    lhs = jet_apply(G, g, {"v": v0})
    f = (1 - Jet.variable(w0, 2)).exp()
    rhs = jet_apply(F, f, {"w": w0})
    assert abs(lhs - rhs) < 1e-12 * abs(rhs)


def test_op_substitute_quadratic_numeric():
    sub = Substitution.quadratic("w", "v", 1, 0)   # w = v^2
    w = MultiPoly.var("w")
    F = _op("w", MultiPoly(), w)                   # w d/dw
    G = op_substitute(F, sub)                      # = (v/2) d/dv
    v0 = 0.7 + 0.1j
    g = (Jet.variable(v0, 2) * 3).exp()
    lhs = jet_apply(G, g, {"v": v0})
    assert abs(lhs - v0 / 2 * 3 * cmath.exp(3 * v0)) < 1e-12


# ---------------------------------------------------------------------------
# Jets
# ---------------------------------------------------------------------------

def test_jet_exp_derivatives():
    z0 = 0.4 + 0.3j
    j = Jet.variable(z0, 4).exp()
    for k in range(5):
        assert abs(j.derivative_value(k) - cmath.exp(z0)) < 1e-13


def test_jet_pow_log_roundtrip():
    z0 = 1.3 - 0.4j
    j = Jet.variable(z0, 4)
    assert abs((j.pow(0.3).log() * (1 / 0.3)).exp().value() - z0) < 1e-12


def test_jet_quotient_rule():
    z0 = 0.8 + 0.2j
    j = Jet.variable(z0, 3)
    q = j.exp() / (j * j + 1)
    f = lambda z: cmath.exp(z) / (z * z + 1)
    h = 1e-5
    num = (f(z0 + h) - f(z0 - h)) / (2 * h)
    assert abs(q.derivative_value(1) - num) < 1e-8


@given(st.complex_numbers(min_magnitude=0.1, max_magnitude=2,
                          allow_nan=False, allow_infinity=False))
@settings(max_examples=50, deadline=None)
def test_jet_sqrt_squares_back(z0):
    j = Jet.variable(z0, 3)
    sq = j.sqrt()
    assert abs((sq * sq).value() - z0) < 1e-10
    assert abs((sq * sq).derivative_value(1) - 1) < 1e-8


def test_jet_apply_second_order():
    # (d^2 + w d)(e^{2w}) = (4 + 2w)e^{2w}
    w = MultiPoly.var("w")
    F = _op("w", MultiPoly(), w, MultiPoly.const(1))
    w0 = 0.25 - 0.6j
    f = (Jet.variable(w0, 2) * 2).exp()
    got = jet_apply(F, f, {"w": w0})
    assert abs(got - (4 + 2 * w0) * cmath.exp(2 * w0)) < 1e-12


def test_multiplier_eval_numeric():
    g = MultiPoly.var("alpha")
    m = Multiplier.power("v", 1, -1, g) * Multiplier.exp("v", 0, Fraction(1, 2), 0)
    v0 = 2.5
    val = m.eval_numeric(v0, {"alpha": 0.3})
    assert val == pytest.approx((v0 - 1) ** 0.3 * math.exp(v0 / 2))
