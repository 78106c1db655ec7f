import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from nsseq import reference as R
from nsseq.fourier import TrigPoly, evaluate
from nsseq.spacetime import SpacetimeField, duhamel_solve, evaluate_field, heat_propagate
from nsseq.timefunc import ExpPolyTime

from strategies import solenoidal_fields, trig_polys


@pytest.mark.parametrize("v0,rate", [
    (R.taylor_v0(), R.TAYLOR_DECAY),
    (R.abc_velocity(1, 1, 1), R.ABC_DECAY),
    (R.example_v0(), R.EXAMPLE_FIRST_DECAY),
])
def test_heat_propagate_single_shell(v0, rate):
    assert heat_propagate(v0) == SpacetimeField.from_spatial(v0, ExpPolyTime.exp(rate))


def test_duhamel_solve_example_forcing():
    u0 = R.example_u0()
    forcing = SpacetimeField.from_spatial(u0, ExpPolyTime.exp(4))
    assert duhamel_solve(forcing) == SpacetimeField.from_spatial(u0, R.numbered_time(2))


def test_duhamel_solve_zero():
    z = SpacetimeField.zeros_like(heat_propagate(R.taylor_v0()))
    assert duhamel_solve(z).is_zero()


def test_duhamel_solve_resonant_against_quadrature():
    from scipy import integrate

    f = SpacetimeField.scalar(TrigPoly.sin(3, 0, 2) * ExpPolyTime.exp(4), 3)
    w = duhamel_solve(f)
    assert w == SpacetimeField.scalar(TrigPoly.sin(3, 0, 2) * ExpPolyTime.term(1, 1, 4, 0, -1), 3)
    rng = np.random.default_rng(3)
    for _ in range(10):
        x = rng.uniform(0, 2, 3)
        t, kappa = rng.uniform(0.01, 0.5), rng.uniform(0.5, 2)
        ref, _ = integrate.quad(lambda s: math.exp(-4 * math.pi ** 2 * kappa * (t - s))
                                * math.exp(-4 * math.pi ** 2 * kappa * s), 0, t)
        assert evaluate_field(w, x, t, kappa) == pytest.approx(math.sin(2 * math.pi * x[0]) * ref, abs=1e-12)


def test_evaluate_field_examples():
    v = heat_propagate(R.taylor_v0())
    for t in (0.0, 0.05, 1.0):
        assert evaluate_field(v, (0.5, 0.0), t, 0.7)[0] == pytest.approx(math.exp(-2 * math.pi ** 2 * 0.7 * t))
    v1 = heat_propagate(R.example_v0())
    direct = evaluate(R.example_v0()[0], R.EXAMPLE_PROBE) * math.exp(-2 * math.pi ** 2 * 0.01)
    assert evaluate_field(v1, R.EXAMPLE_PROBE, 0.01, 1.0)[0] == pytest.approx(direct, abs=1e-10)


def test_groups_reconstruct(frozen_run):
    o2 = frozen_run[1].o_correction
    for i in range(3):
        total = None
        for chi, t in o2.groups(i):
            total = chi * t if total is None else total + chi * t
        assert total == o2[i]


def test_json_round_trip(example_run):
    v = example_run[1].v
    assert SpacetimeField.from_json(v.to_json()) == v


def test_arity_errors():
    from nsseq.fourier import FieldError

    s = SpacetimeField.scalar(TrigPoly.sin(2, 0), 2)
    with pytest.raises(FieldError):
        s.divergence()
    with pytest.raises(FieldError):
        heat_propagate(R.taylor_v0()).gradient()
    with pytest.raises(FieldError):
        evaluate_field(s, (0.0,), 0.0, 1.0)


@given(st.sampled_from([2, 3]).flatmap(solenoidal_fields))
def test_heat_propagate_properties(v0):
    v = heat_propagate(v0)
    assert v.d_dt() == v.laplacian().times_kappa(1)
    assert v.at_t0() == v0
    assert v.divergence().is_zero()


@given(trig_polys(3, 2), st.integers(0, 6), st.integers(0, 1))
def test_duhamel_solve_properties(spatial, eps, sigma):
    q = SpacetimeField.scalar(spatial * ExpPolyTime.term(1, sigma, eps), 3)
    w = duhamel_solve(q)
    assert w.d_dt() == w.laplacian().times_kappa(1) + q
    assert w.at_t0().is_zero()


@given(trig_polys(3, 2))
def test_heat_commutes_with_derivatives(f):
    # heat propagation is diagonal on modes, so it commutes with every derivative
    v = heat_propagate(SpacetimeField.scalar(f, 3))
    for axis in range(3):
        assert v.partial(axis) == heat_propagate(SpacetimeField.scalar(f.partial(axis), 3))
