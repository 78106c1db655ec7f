"""Exact iterated-diffusion sequences for periodic incompressible flow."""

from .fourier import FieldError, TrigCoefficient, TrigPoly, VectorField
from .operators import (
    PressureField,
    gradient_part,
    inertial_term,
    ns_residual,
    pressure_from_g,
    pressure_from_hbar,
    u_term,
)
from .sequence import ProbeGrid, SequenceRecord, SequenceRun, run_sequences
from .spacetime import SpacetimeField, duhamel_solve, heat_propagate
from .timefunc import ExpPolyTime

__all__ = [
    "ExpPolyTime",
    "FieldError",
    "PressureField",
    "ProbeGrid",
    "SequenceRecord",
    "SequenceRun",
    "SpacetimeField",
    "TrigCoefficient",
    "TrigPoly",
    "VectorField",
    "duhamel_solve",
    "gradient_part",
    "heat_propagate",
    "inertial_term",
    "ns_residual",
    "pressure_from_g",
    "pressure_from_hbar",
    "run_sequences",
    "u_term",
]
