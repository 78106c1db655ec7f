import math
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st
from scipy import integrate

from nsseq import reference as R
from nsseq.timefunc import ExpPolyTime, derivative, duhamel, evaluate_time, multiply_time

T1, T2 = R.numbered_time(1), R.numbered_time(2)


@st.composite
def time_functions(draw, max_terms=3):
    out = ExpPolyTime()
    for _ in range(draw(st.integers(1, max_terms))):
        c = draw(st.fractions(-5, 5, max_denominator=6).filter(bool))
        out = out + ExpPolyTime.term(c, draw(st.integers(0, 2)), draw(st.integers(0, 8)),
                                     draw(st.integers(-2, 2)), draw(st.integers(-2, 0)))
    return out


def _ode_residual(f, mu):
    d = duhamel(f, mu)
    return derivative(d) + d.shift(mu, pi=2, kappa=1) - f


def test_product_t1_t2():
    assert multiply_time(T1, T2) == R.time_function(R.PRODUCT_T1T2)


def test_product_t2_squared():
    assert multiply_time(T2, T2) == R.time_function(R.PRODUCT_T2T2)


def test_identity_product():
    assert multiply_time(ExpPolyTime.one(), T2) == T2


def test_duhamel_non_resonant():
    assert duhamel(ExpPolyTime.exp(4), 6) == T2


def test_duhamel_resonant():
    # int_0^t e^{-mu ...} ds = t e^{-mu ...} = (kappa t) e^{-mu ...} / kappa
    assert duhamel(ExpPolyTime.exp(6), 6) == ExpPolyTime.term(1, 1, 6, 0, -1)


def test_duhamel_creates_secular_term():
    d = duhamel(T1 * T2, 6)
    assert (1, 6) in d.rates()
    # the secular term carries the 2 pi^2 (kappa t) e^{-6 ...} structure over 2 pi^2 kappa * 2 pi^2 kappa
    lead = next(c for c, s, e in d.terms() if (s, e) == (1, 6))
    assert lead.terms == {(-2, -2): Fraction(1, 2)}


def test_duhamel_rejects_negative_rate():
    with pytest.raises(ValueError):
        duhamel(T1, -1)


def test_evaluate_examples():
    assert evaluate_time(T1, 0.0) == 1.0
    assert evaluate_time(T2, 0.0) == 0.0
    ref, _ = integrate.quad(lambda s: math.exp(-6 * math.pi ** 2 * (0.1 - s) - 4 * math.pi ** 2 * s),
                            0, 0.1, epsabs=1e-14, epsrel=1e-13)
    assert evaluate_time(T2, 0.1, 1.0) == pytest.approx(ref, abs=1e-10)


@pytest.mark.parametrize("t,kappa", [(-1.0, 1.0), (0.1, 0.0), (float("inf"), 1.0)])
def test_evaluate_rejects(t, kappa):
    with pytest.raises(ValueError):
        evaluate_time(T1, t, kappa)


@pytest.mark.parametrize("j", range(3, 14))
def test_reference_time_functions_round_trip(j):
    t = R.numbered_time(j)
    assert ExpPolyTime.from_json(t.to_json()) == t
    assert t.value_at_zero().is_zero()


@given(time_functions(), st.integers(0, 8))
def test_duhamel_solves_its_ode(f, mu):
    assert _ode_residual(f, mu).is_zero()
    assert duhamel(f, mu).value_at_zero().is_zero()


@given(time_functions(), st.integers(0, 8))
def test_duhamel_resonant_ode(f, mu):
    g = f * ExpPolyTime.exp(mu)
    # forcing at the mode's own rate exercises the polynomial-power increment
    assert _ode_residual(g, mu).is_zero()


@given(time_functions(2), time_functions(2), time_functions(2))
def test_product_ring_laws(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(time_functions(2), st.integers(0, 6), st.floats(0.01, 0.3), st.floats(0.2, 3.0))
def test_duhamel_against_quadrature(f, mu, t, kappa):
    ref, _ = integrate.quad(lambda s: math.exp(-mu * math.pi ** 2 * kappa * (t - s)) * evaluate_time(f, s, kappa),
                            0, t, epsabs=1e-13, epsrel=1e-11)
    assert evaluate_time(duhamel(f, mu), t, kappa) == pytest.approx(ref, rel=1e-8, abs=1e-10)
