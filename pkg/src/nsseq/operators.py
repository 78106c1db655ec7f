"""Inertial term, Helmholtz gradient part, pressure and momentum residual."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import _series as S
from ._series import Series, mpq
from .fourier import FieldError
from .spacetime import SpacetimeField, as_fraction, evaluate_grid


def _need_vector(v: SpacetimeField) -> None:
    if not v.vector:
        raise FieldError("vector field required")


def inertial_term(v: SpacetimeField) -> SpacetimeField:
    """``g_i = sum_j v_j d_j v_i``."""
    _need_vector(v)
    n = v.n
    out = []
    for i in range(n):
        total = Series(n)
        for j in range(n):
            d = v[i].partial(j)
            if not d.is_zero() and not v[j].is_zero():
                total = total + v[j] * d
        out.append(total)
    return SpacetimeField(out, True, n)


def _k_dot(g: SpacetimeField):
    """Per packed key: ``sum_j k_j g_j(key)`` as (re, im) dicts plus |k|^2 lookup."""
    n = g.n
    re: dict = {}
    im: dict = {}
    for j in range(n):
        field_j = S.K0 + j
        for src, dst in ((g[j].re, re), (g[j].im, im)):
            get = dst.get
            for key, val in src.items():
                kj = S.digit(key, field_j)
                if kj:
                    dst[key] = get(key, S.ZERO) + kj * val
    return re, im


def _norm2(key: int, n: int) -> int:
    return sum(x * x for x in S.unpack(key, n)[4])


def gradient_part(g: SpacetimeField) -> SpacetimeField:
    """Curl-free part: ``h(k) = k (k . g(k)) / |k|^2`` per mode, zero at k = 0."""
    _need_vector(g)
    n = g.n
    re, im = _k_dot(g)
    comps = []
    for i in range(n):
        fi = S.K0 + i
        out_re, out_im = {}, {}
        for src, dst in ((re, out_re), (im, out_im)):
            for key, val in src.items():
                ki = S.digit(key, fi)
                if ki and val:
                    dst[key] = val * mpq(ki, _norm2(key, n))
        comps.append(Series(n, out_re, out_im))
    return SpacetimeField(comps, True, n)


def u_term(g: SpacetimeField) -> SpacetimeField:
    """Divergence-free part ``g - gradient_part(g)``."""
    return g - gradient_part(g)


@dataclass(frozen=True)
class PressureField:
    body: SpacetimeField
    rho: Fraction = Fraction(1)

    def __post_init__(self):
        if self.body.vector:
            raise FieldError("pressure is a scalar field")
        if not self.rho > 0:
            raise ValueError("density must be positive")

    def has_zero_mean(self) -> bool:
        c = self.body[0]
        return not any(not any(S.unpack(k, c.n)[4]) for k in c.keys())

    def gradient_over_rho(self) -> SpacetimeField:
        """``(1/rho) grad p``."""
        r = self.rho
        return self.body.gradient() * mpq(r.denominator, r.numerator)

    def __neg__(self):
        return PressureField(-self.body, self.rho)


def _rho(rho) -> Fraction:
    r = as_fraction(rho)
    if r <= 0:
        raise ValueError("density must be positive")
    return r


def pressure_from_g(g: SpacetimeField, rho=1) -> PressureField:
    """Solve ``lap p = -rho div g`` mode by mode; the k = 0 mode is set to zero.

    ``p(k) = rho i (k . g(k)) / (pi |k|^2)`` so that ``grad p / rho = -gradient_part(g)``.
    """
    _need_vector(g)
    n = g.n
    r = _rho(rho)
    scale = mpq(r.numerator, r.denominator)
    re, im = _k_dot(g)
    dpi = -S.UNIT[S.PI]
    p_re, p_im = {}, {}
    # multiply by i: (re + i im) * i = -im + i re
    for key, val in im.items():
        if val:
            p_re[key + dpi] = -val * scale / _norm2(key, n)
    for key, val in re.items():
        if val:
            p_im[key + dpi] = val * scale / _norm2(key, n)
    return PressureField(SpacetimeField.scalar(Series(n, p_re, p_im), n), r)


def pressure_from_hbar(hbar: SpacetimeField, rho=1) -> PressureField:
    """Zero-mean potential ``p`` with ``grad p = rho * hbar`` (integration of the gradient part).

    Equals ``-pressure_from_g(g)`` when ``hbar = gradient_part(g)``.
    """
    _need_vector(hbar)
    n = hbar.n
    r = _rho(rho)
    scale = mpq(r.numerator, r.denominator)
    re, im = _k_dot(hbar)
    dpi = -S.UNIT[S.PI]
    p_re, p_im = {}, {}
    # divide by i: (re + i im) / i = im - i re
    for key, val in im.items():
        if val:
            p_re[key + dpi] = val * scale / _norm2(key, n)
    for key, val in re.items():
        if val:
            p_im[key + dpi] = -val * scale / _norm2(key, n)
    return PressureField(SpacetimeField.scalar(Series(n, p_re, p_im), n), r)


def residual_field(v: SpacetimeField, p: PressureField, g: SpacetimeField | None = None) -> SpacetimeField:
    """Exact ``dv/dt + g(v) - kappa lap v + grad p / rho``."""
    g = inertial_term(v) if g is None else g
    return v.d_dt() + g - v.laplacian().times_kappa(1) + p.gradient_over_rho()


@dataclass
class ResidualReport:
    probes: list
    values: np.ndarray          # (P, n) residual vectors
    max_norm: float
    mean_norm: float
    per_component: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "probes": [{"x": [float(c) for c in x], "t": float(t)} for x, t in self.probes],
            "max_norm": self.max_norm,
            "mean_norm": self.mean_norm,
            "per_component": self.per_component,
        }


def evaluate_probes(f: SpacetimeField, probes, kappa: float) -> np.ndarray:
    """Evaluate at ``(point, t)`` pairs -> (P, components)."""
    if not probes:
        raise ValueError("probe list is empty")
    out = np.empty((len(probes), len(f)))
    by_t: dict = {}
    for i, (x, t) in enumerate(probes):
        by_t.setdefault(float(t), []).append(i)
    for t, idx in by_t.items():
        X = np.array([probes[i][0] for i in idx], dtype=float)
        vals = evaluate_grid(f, X, [t], kappa)[:, :, 0]
        out[idx] = vals.T
    return out


def report_from_values(probes, vals: np.ndarray) -> ResidualReport:
    norms = np.linalg.norm(vals, axis=1)
    return ResidualReport(
        probes=list(probes),
        values=vals,
        max_norm=float(norms.max()),
        mean_norm=float(norms.mean()),
        per_component=[float(x) for x in np.abs(vals).max(axis=0)],
    )


def ns_residual(v: SpacetimeField, p: PressureField, kappa: float, probes, g: SpacetimeField | None = None) -> ResidualReport:
    """Momentum-equation residual, built exactly then evaluated at the probes."""
    if not kappa > 0:
        raise ValueError("kappa must be positive")
    if not probes:
        raise ValueError("probe list is empty")
    r = residual_field(v, p, g)
    return report_from_values(probes, evaluate_probes(r, probes, kappa))
