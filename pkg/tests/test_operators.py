from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from nsseq import reference as R
from nsseq._series import mpq
from nsseq.fourier import FieldError, curl_pairs
from nsseq.operators import (
    PressureField,
    gradient_part,
    inertial_term,
    ns_residual,
    pressure_from_g,
    pressure_from_hbar,
    residual_field,
    u_term,
)
from nsseq.spacetime import SpacetimeField, heat_propagate
from nsseq.timefunc import ExpPolyTime
from nsseq.verification import random_probes

from strategies import trig_polys


@st.composite
def vector_fields(draw, n=3):
    comps = [draw(trig_polys(n, 2)) * ExpPolyTime.exp(draw(st.integers(0, 4))) for _ in range(n)]
    return SpacetimeField(comps, True, n)


def _static(v0):
    return SpacetimeField.from_spatial(v0)


def test_taylor_inertial():
    g = inertial_term(_static(R.taylor_v0()))
    assert g == _static(R.taylor_g0())


def test_abc_inertial():
    g = inertial_term(_static(R.abc_velocity(2, 3, 5)))
    assert g == _static(R.abc_inertial(2, 3, 5))


def test_constant_velocity_has_no_inertia():
    from nsseq.fourier import TrigPoly, VectorField

    v = VectorField([TrigPoly.constant(3, c) for c in (1, 2, 3)])
    assert inertial_term(_static(v)).is_zero()


@pytest.mark.parametrize("v0", [R.taylor_v0(), R.abc_velocity(1, 1, 1), R.abc_velocity(2, 3, 5)])
def test_classical_fields_are_pure_gradients(v0):
    g = inertial_term(heat_propagate(v0))
    assert gradient_part(g) == g
    assert u_term(g).is_zero()


def test_divergence_free_input_has_no_gradient_part():
    v = heat_propagate(R.example_v0())
    assert gradient_part(v).is_zero()


def test_example_u_term():
    u = u_term(inertial_term(_static(R.example_v0())))
    assert u == _static(R.example_u0())


def test_taylor_pressure_magnitude():
    # the Poisson pressure is the negative of the integrated gradient part
    g = inertial_term(heat_propagate(R.taylor_v0()))
    published = SpacetimeField.from_spatial(R.taylor_pressure(), ExpPolyTime.exp(4))
    assert pressure_from_hbar(gradient_part(g)).body == published
    assert pressure_from_g(g).body == -published


def test_abc_pressure():
    g = inertial_term(heat_propagate(R.abc_velocity(2, 3, 5)))
    published = SpacetimeField.from_spatial(R.abc_pressure(2, 3, 5), ExpPolyTime.exp(2))
    assert pressure_from_hbar(gradient_part(g)).body == published


def test_pressure_of_solenoidal_field_vanishes():
    assert pressure_from_g(heat_propagate(R.example_v0())).body.is_zero()


def test_density_scales_pressure():
    g = inertial_term(heat_propagate(R.taylor_v0()))
    p1, p3 = pressure_from_g(g, 1), pressure_from_g(g, Fraction(3))
    assert p3.body == p1.body * 3
    assert p3.gradient_over_rho() == p1.gradient_over_rho()
    with pytest.raises(ValueError):
        pressure_from_g(g, 0)


@pytest.mark.parametrize("v0", [R.taylor_v0(), R.abc_velocity(1, 1, 1), R.abc_velocity(2, 3, 5)])
def test_exact_solutions_have_zero_residual(v0):
    v = heat_propagate(v0)
    g = inertial_term(v)
    assert residual_field(v, pressure_from_g(g), g).is_zero()
    rep = ns_residual(v, pressure_from_g(g), 0.3, random_probes(v.n))
    assert rep.max_norm < 1e-10


def test_residual_identity_second_sequence(example_run):
    # with the Poisson pressure of g(v2), the residual is U(g(v2)) - U(g(v1))
    r1, r2 = example_run[0], example_run[1]
    res = residual_field(r2.v, r2.pressure, r2.g)
    assert res == r2.u - r1.u
    probes = random_probes(3, 10)
    from nsseq.operators import evaluate_probes

    a = evaluate_probes(res, probes, 1.0)
    b = evaluate_probes(r2.u - r1.u, probes, 1.0)
    assert np.abs(a - b).max() < 1e-10


def test_residual_rejects_empty_probes():
    v = heat_propagate(R.taylor_v0())
    with pytest.raises(ValueError):
        ns_residual(v, pressure_from_g(inertial_term(v)), 1.0, [])


def test_pressure_must_be_scalar():
    with pytest.raises(FieldError):
        PressureField(heat_propagate(R.taylor_v0()))


def test_pressure_has_zero_mean():
    g = inertial_term(heat_propagate(R.example_v0()))
    assert pressure_from_g(g).has_zero_mean()


@given(vector_fields())
def test_gradient_part_idempotent(g):
    h = gradient_part(g)
    assert gradient_part(h) == h


@given(vector_fields())
def test_u_term_divergence_free(g):
    assert u_term(g).divergence().is_zero()


@given(vector_fields())
def test_gradient_part_is_curl_free(g):
    h = gradient_part(g)
    assert all(c.is_zero() for c in curl_pairs(list(h)))


@given(vector_fields(), st.fractions(1, 5, max_denominator=4))
def test_pressure_consistency(g, rho):
    assert pressure_from_hbar(gradient_part(g), rho).gradient_over_rho() == gradient_part(g)
    assert pressure_from_g(g, rho).gradient_over_rho() == -gradient_part(g)
    # Poisson equation: lap p = -rho div g
    p = pressure_from_g(g, rho).body
    assert p.laplacian() == g.divergence() * -mpq(rho.numerator, rho.denominator)
