import math

import numpy as np
import pytest

from nsseq import reference as R
from nsseq import verification as V
from nsseq.fourier import TrigPoly, VectorField
from nsseq.operators import inertial_term, pressure_from_g
from nsseq.spacetime import SpacetimeField, heat_propagate
from nsseq.timefunc import ExpPolyTime


def _by_item(reports):
    return {r.item: r for r in reports}


def test_taylor_all_match():
    reps = V.check_taylor()
    assert all(r.match for r in reps), V.format_table(reps)


def test_taylor_injected_fault():
    v1, v2 = R.taylor_v0()
    reps = _by_item(V.check_taylor(v0=VectorField([v1 * 2, v2])))
    assert not reps["g1(0)"].match


def test_abc_all_match():
    for abc in [(1, 1, 1), (2, 3, 5), ("1/2", "2/3", "-3/4")]:
        reps = V.check_abc(*abc)
        assert all(r.match for r in reps), V.format_table(reps)


def test_abc_single_mode():
    v = heat_propagate(R.abc_velocity(1, 0, 0))
    g = inertial_term(v)
    assert g.is_zero()
    assert pressure_from_g(g).body.is_zero()


def test_abc_residual_value():
    reps = _by_item(V.check_abc(2, 3, 5))
    assert reps["momentum residual"].residual_norm < 1e-10


def test_pressure_sign_note():
    rep = _by_item(V.check_taylor())["pressure (integrated gradient part)"]
    assert "Poisson pressure (opposite sign) 0.00e+00" in rep.note


@pytest.fixture(scope="module")
def example_reports():
    return V.check_example_r3()


def test_example_first_two_sequences(example_reports):
    reps = _by_item(example_reports)
    for item in ("xi1", "xi2", "U1(0)", "U2(0)", "U3(0)", "O(1) = U(0) T2", "v(2) = v(1) - U(0) T2",
                 "T1 T2", "T2^2"):
        assert reps[item].match, item


def test_example_expansion_coefficients(example_reports):
    reps = _by_item(example_reports)
    for i in range(1, 4):
        for k in (1, 2):
            assert reps[f"alpha{i}{k}"].match
    assert reps["g(2) - g(1) = alpha1 T1T2 + alpha2 T2^2"].match


def test_example_divergence_claim(example_reports):
    reps = _by_item(example_reports)
    assert reps["div q(2), projected"].match
    held = reps["div q(2), gradient part held fixed"]
    assert not held.match and held.verdict == "engine"


def test_example_mismatches_side_with_engine(example_reports):
    bad = [r for r in example_reports if not r.match]
    assert {r.item for r in bad} == {
        "div q(2), gradient part held fixed", "T4 shape",
        *(f"chi{i},{j} T{j + 2}" for i in range(1, 4) for j in (1, 2, 4)),
    }
    assert all(r.verdict == "engine" for r in bad)
    assert not any(r.engine_defect for r in example_reports)


def test_third_time_function_is_rescaled(example_reports):
    assert _by_item(example_reports)["chi1,1 T3"].note == "reference = 3/4 x engine"


def test_quadrature_oracle_matches_closed_form():
    # single product sin(2 pi x1) forced by T1 T2 at its own rate 4
    prods = {(("sin", 2, 0),): [(1.0, 0)]}
    pi2 = math.pi ** 2

    def t1t2(s):
        return math.exp(-2 * pi2 * s) * (math.exp(-4 * pi2 * s) - math.exp(-6 * pi2 * s)) / (2 * pi2)

    x, t = (0.3, 0.0, 0.0), 0.2
    closed = (R.numbered_time(1) * R.numbered_time(2)).duhamel(4)
    from nsseq.timefunc import evaluate_time

    expected = math.sin(2 * math.pi * 0.3) * evaluate_time(closed, t, 1.0)
    assert V.duhamel_quadrature(prods, (t1t2,), x, t, 1.0) == pytest.approx(expected, rel=1e-10)


def test_report_serialization():
    r = V.check_taylor()[0]
    assert set(r.to_json()) == {"item", "expected", "computed", "match", "residual_norm", "verdict", "note"}
    assert "g1(0)" in V.format_table([r])


def test_cell_energy_taylor():
    v = heat_propagate(R.taylor_v0())
    assert V.cell_energy(v, 0.0, 1.0) == pytest.approx(1.0, abs=1e-14)
    # 2-D quadrature of 1/2 |v|^2 over the cell
    n = 64
    x = (np.arange(n) + 0.5) * 2 / n
    X1, X2 = np.meshgrid(x, x, indexing="ij")
    e = 0.5 * ((np.sin(np.pi * X1) * np.cos(np.pi * X2)) ** 2 + (np.cos(np.pi * X1) * np.sin(np.pi * X2)) ** 2)
    assert e.sum() * (2 / n) ** 2 == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("v0", [R.taylor_v0(), R.abc_velocity(2, 3, 5), R.example_v0()])
def test_cell_energy_decreases_under_heat_flow(v0):
    v = heat_propagate(v0)
    e = [V.cell_energy(v, t, 0.4) for t in (0.01, 0.1, 0.5)]
    assert e[0] > e[1] > e[2]


@pytest.mark.parametrize("n,k,coeff,eps", [(2, (1, 2), 3, 5), (3, (1, 0, -2), -2, 5), (3, (0, 1, 1), 1, 0)])
def test_cell_energy_single_mode(n, k, coeff, eps):
    # one complex mode c e^{i pi k.x} T(t): 1/2 |c|^2 |cell| T^2
    f = TrigPoly.exp_mode(n, k, coeff) * ExpPolyTime.exp(eps)
    comps = [f] + [TrigPoly(n)] * (n - 1)
    v = SpacetimeField(comps, True, n)
    t, kappa = 0.05, 0.7
    expected = 0.5 * coeff ** 2 * 2 ** n * math.exp(-eps * math.pi ** 2 * kappa * t) ** 2
    assert V.cell_energy(v, t, kappa) == pytest.approx(expected, rel=1e-14)


def test_cell_energy_rejects_negative_time():
    with pytest.raises(ValueError):
        V.cell_energy(heat_propagate(R.taylor_v0()), -1.0, 1.0)


def test_example_third_sequence_energy_bounded(example_run):
    v3 = example_run[2].v
    e0 = V.cell_energy(v3, 0.0, 1.0)
    energies = [V.cell_energy(v3, t, 1.0) for t in np.geomspace(1e-4, 10, 40)]
    assert max(energies) <= e0


def test_oracle_taylor_zero():
    v = heat_propagate(R.taylor_v0())
    p = pressure_from_g(inertial_term(v))
    assert V.numeric_oracle_residual(v, p, 0.5, V.random_probes(2, 10)) < 1e-6


def test_oracle_first_sequence_equals_forcing(example_run):
    # v1 solves the heat equation, so its momentum residual is U(g(v1))
    r1 = example_run[0]
    probes = V.random_probes(3, 10)
    kappa = 1 / 10
    vals, _ = V.oracle_residual_values(r1.v, r1.pressure, kappa, probes)
    from nsseq.operators import evaluate_probes

    assert np.abs(vals - evaluate_probes(r1.u, probes, kappa)).max() < 1e-6


def test_oracle_flags_pressure_sign_error(example_run):
    r2 = example_run[1]
    probes = V.random_probes(3, 10)
    good = V.cross_check_residual(r2.v, r2.pressure, 1.0, probes, r2.g)
    assert good.agree
    # the exact path sees the flipped pressure, the oracle is handed the right one
    sym = V.symbolic_residual_values(r2.v, -r2.pressure, 1.0, probes, r2.g)
    orc, _ = V.oracle_residual_values(r2.v, r2.pressure, 1.0, probes)
    assert np.linalg.norm(sym - orc, axis=1).max() > 1e-3


def test_oracle_rejects_empty_probes():
    v = heat_propagate(R.taylor_v0())
    with pytest.raises(ValueError):
        V.numeric_oracle_residual(v, pressure_from_g(inertial_term(v)), 1.0, [])
