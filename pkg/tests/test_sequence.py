import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from nsseq import reference as R
from nsseq.fourier import FieldError, TrigPoly, VectorField, evaluate
from nsseq.operators import gradient_part, u_term
from nsseq.sequence import ProbeGrid, next_velocity, plateau_metric, run_sequences
from nsseq.spacetime import SpacetimeField, evaluate_grid, heat_propagate
from nsseq.timefunc import ExpPolyTime

from strategies import solenoidal_fields


def test_taylor_plateaus_immediately():
    run = run_sequences(R.taylor_v0(), 0.5, 4, 1e-12)
    assert run.stopped == "plateau"
    assert len(run) == 1
    assert run[0].o_correction.is_zero()
    assert run[0].sup_correction == 0.0


def test_second_sequence_of_example(example_run):
    v1 = heat_propagate(R.example_v0())
    expected = v1 - SpacetimeField.from_spatial(R.example_u0(), R.numbered_time(2))
    assert example_run[1].v == expected


def test_first_forcing_decay(example_run):
    # U(1) = U(0) exp(-2 xi1 pi^2 kappa t) for single-shell data
    assert example_run[0].u == SpacetimeField.from_spatial(R.example_u0(), ExpPolyTime.exp(4))


def test_group_counts(example_run, frozen_run):
    # projected forcing: the gradient-only shells of the T2^2 coefficient drop out
    assert example_run[2].chi_groups == 9
    assert [len(frozen_run[1].o_correction.groups(i)) for i in range(3)] == [11, 11, 11]
    assert [r.time_index_offset for r in example_run] == [1, 2, 11]


def test_records_are_consistent(example_run):
    for a, b in zip(example_run.records, example_run.records[1:]):
        assert b.v == next_velocity(a)
        assert b.forcing == a.u
    assert example_run[2].shells == [2, 6, 8, 10, 14, 20, 22]


def test_rejects_bad_input():
    with pytest.raises(FieldError):
        run_sequences(VectorField([TrigPoly.sin(2, 0), TrigPoly(2)]), 1.0, 2, 1e-6)
    with pytest.raises(ValueError):
        run_sequences(R.taylor_v0(), 0.0, 2, 1e-6)
    with pytest.raises(ValueError):
        run_sequences(R.taylor_v0(), 1.0, 0, 1e-6)
    with pytest.raises(ValueError):
        run_sequences(R.taylor_v0(), 1.0, 2, 0.0)


def test_term_cap_stops_gracefully():
    run = run_sequences(R.example_v0(), 1.0, 3, 1e-300, term_cap=100)
    assert run.stopped == "term_cap"
    assert len(run) == 1
    assert "cap 100" in run.diagnostic


def test_plateau_metric_examples(example_run):
    grid = ProbeGrid.lattice(3)
    zero = SpacetimeField.zeros_like(example_run[0].v)
    assert plateau_metric(zero, grid, 1.0) == 0.0
    o1 = example_run[0].o_correction
    slow = plateau_metric(o1, grid, 1 / 0.06)
    v1_max = np.sqrt((evaluate_grid(example_run[0].v, grid.points, grid.times, 1 / 0.06) ** 2).sum(0)).max()
    assert slow < 1e-2 * v1_max
    assert plateau_metric(o1, grid, 1 / 50) > slow


def test_serialization(example_run):
    js = example_run[1].to_json()
    assert SpacetimeField.from_json(js["v"]) == example_run[1].v
    assert js["index"] == 2


@settings(max_examples=200)
@given(st.sampled_from([2, 3]).flatmap(solenoidal_fields))
def test_construction_invariants(v0):
    run = run_sequences(v0, 1.0, 2, 1e-300, count_groups=False)
    velocities = [(r.v, r.forcing) for r in run]
    if run.stopped == "l_max":
        velocities.append((next_velocity(run[-1]), run[-1].u))
    for v, forcing in velocities:
        assert v.divergence().is_zero()
        assert v.at_t0() == v0
        assert v.d_dt() == v.laplacian().times_kappa(1) - forcing
    for r in run:
        assert gradient_part(r.hbar) == r.hbar
        assert u_term(r.g).divergence().is_zero()
        assert r.pressure.gradient_over_rho() == -r.hbar


@settings(max_examples=30)
@given(solenoidal_fields(3), st.lists(st.floats(0, 2), min_size=3, max_size=3))
def test_initial_condition_pointwise(v0, x):
    run = run_sequences(v0, 1.0, 2, 1e-300, count_groups=False)
    for r in run:
        vals = evaluate_grid(r.v, [x], [0.0], 1.0)[:, 0, 0]
        assert np.allclose(vals, [evaluate(c, x) for c in v0], atol=1e-12)
