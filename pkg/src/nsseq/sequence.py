"""Iterated linear-diffusion sequences for the incompressible momentum equation.

Sequence ``l`` solves the heat equation forced by the divergence-free part of
the previous inertial term,

    d_t v(l+1) = kappa lap v(l+1) - U(l),     v(l+1)(x, 0) = v0(x),

written as ``v(l+1) = v(l) - O(l)`` with ``O(l)`` the zero-data Duhamel solve of
``U(l) - U(l-1)``.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .fourier import FieldError, VectorField, divergence
from .operators import PressureField, gradient_part, inertial_term, pressure_from_g
from .spacetime import SpacetimeField, duhamel_solve, evaluate_grid, heat_propagate

log = logging.getLogger(__name__)

DEFAULT_TERM_CAP = 20000


@dataclass(frozen=True)
class ProbeGrid:
    """Spatial probe points crossed with a log-spaced time grid."""

    points: np.ndarray
    times: np.ndarray

    @classmethod
    def lattice(cls, n: int, per_axis: int = 3, t_min: float = 1e-4, t_max: float = 10.0,
                t_count: int = 40, offset: float = 0.137) -> "ProbeGrid":
        axis = offset + 2.0 * np.arange(per_axis) / per_axis
        pts = np.stack(np.meshgrid(*([axis] * n), indexing="ij"), axis=-1).reshape(-1, n)
        return cls(pts, np.geomspace(t_min, t_max, t_count))


@dataclass
class SequenceRecord:
    index: int
    v: SpacetimeField
    g: SpacetimeField
    hbar: SpacetimeField
    u: SpacetimeField
    q: SpacetimeField
    o_correction: SpacetimeField
    pressure: PressureField
    forcing: SpacetimeField          # the U driving this v (zero for l = 1)
    sup_correction: float
    plateaued: bool
    chi_groups: int = 0              # groups of the incoming correction, component 1
    time_index_offset: int = 0
    term_counts: dict = field(default_factory=dict)
    shells: list = field(default_factory=list)

    def summary(self) -> dict:
        return {
            "index": self.index,
            "sup_correction": self.sup_correction,
            "plateaued": self.plateaued,
            "chi_groups": self.chi_groups,
            "time_index_offset": self.time_index_offset,
            "term_counts": dict(self.term_counts),
            "shells": list(self.shells),
        }

    def to_json(self) -> dict:
        out = self.summary()
        out["v"] = self.v.to_json()
        out["o_correction"] = self.o_correction.to_json()
        return out


@dataclass
class SequenceRun:
    records: list
    stopped: str                     # "l_max", "plateau" or "term_cap"
    diagnostic: str = ""

    def __iter__(self):
        return iter(self.records)

    def __len__(self):
        return len(self.records)

    def __getitem__(self, i):
        return self.records[i]


def plateau_metric(o: SpacetimeField, probes: ProbeGrid, kappa: float) -> float:
    """Largest pointwise magnitude of ``o`` over the probe points and times."""
    if len(probes.points) == 0:
        raise ValueError("probe set is empty")
    if o.is_zero():
        return 0.0
    vals = evaluate_grid(o, probes.points, probes.times, kappa)
    return float(np.sqrt((vals ** 2).sum(axis=0)).max())


def _shells(f: SpacetimeField) -> list[int]:
    out = set()
    for c in f:
        out |= {sum(x * x for x in k) for k in c.modes()}
    return sorted(out)


def run_sequences(v0: VectorField, kappa: float, l_max: int, tol: float,
                  probes: ProbeGrid | None = None, rho=1, term_cap: int = DEFAULT_TERM_CAP,
                  freeze_gradient: bool = False, count_groups: bool = True) -> SequenceRun:
    """Build sequences 1..l_max from solenoidal data ``v0``.

    Record ``l`` holds ``v(l)``, its inertial term and projections, and the
    outgoing correction ``O(l)`` (so ``v(l+1) = v(l) - O(l)``).  Iteration stops
    once ``sup |O(l)| < tol`` on the probe grid.

    ``freeze_gradient=True`` keeps the gradient part of sequence 1 for all
    later sequences, so ``q(l) = g(l) - g(l-1)``.  That reproduces hand
    derivations which assume the gradient part does not change; the resulting
    fields are generally not solenoidal.
    """
    if l_max < 1:
        raise ValueError("l_max must be at least 1")
    if not tol > 0:
        raise ValueError("tol must be positive")
    if not kappa > 0:
        raise ValueError("kappa must be positive")
    if not divergence(v0).is_zero():
        raise FieldError("initial velocity is not divergence-free")
    probes = probes or ProbeGrid.lattice(v0.n)

    v = heat_propagate(v0)
    forcing = SpacetimeField.zeros_like(v)
    hbar_first = None
    records = []
    offset = 1
    incoming_groups = 0
    for l in range(1, l_max + 1):
        g = inertial_term(v)
        if freeze_gradient and hbar_first is not None:
            hbar = hbar_first
        else:
            hbar = gradient_part(g)
            if hbar_first is None:
                hbar_first = hbar
        u = g - hbar
        q = u - forcing
        o = duhamel_solve(q)
        sup = plateau_metric(o, probes, kappa)
        plateaued = sup < tol
        groups_out = len(o.groups(0)) if count_groups and not o.is_zero() else 0
        rec = SequenceRecord(
            index=l, v=v, g=g, hbar=hbar, u=u, q=q, o_correction=o,
            pressure=pressure_from_g(g, rho), forcing=forcing,
            sup_correction=sup, plateaued=plateaued,
            chi_groups=incoming_groups, time_index_offset=offset,
            term_counts={"v": v.term_count(), "g": g.term_count(), "q": q.term_count(), "o": o.term_count()},
            shells=_shells(v),
        )
        records.append(rec)
        log.info("sequence %d: sup|O| = %.3e, terms v=%d g=%d", l, sup, v.term_count(), g.term_count())
        if plateaued:
            return SequenceRun(records, "plateau")
        if l == l_max:
            break
        nxt = v - o
        if nxt.term_count() > term_cap:
            msg = f"sequence {l + 1} would carry {nxt.term_count()} terms (cap {term_cap})"
            log.warning(msg)
            return SequenceRun(records, "term_cap", msg)
        offset += groups_out
        incoming_groups = groups_out
        forcing = u
        v = nxt
    return SequenceRun(records, "l_max")


def next_velocity(record: SequenceRecord) -> SpacetimeField:
    """``v(l+1) = v(l) - O(l)``."""
    return record.v - record.o_correction
