"""Exact time functions: finite sums of ``c (kappa t)^sigma exp(-eps pi^2 kappa t)``.

The class is closed under products and under the heat-mode Duhamel integral,
including the resonant case where the forcing decays at the mode's own rate.
"""

from __future__ import annotations

import math

import numpy as np

from . import _series as S
from ._series import Series
from .fourier import TrigCoefficient, _coeff_from


class ExpPolyTime(Series):
    """Real time function with viscosity carried symbolically."""

    __slots__ = ()

    def __init__(self, n=0, re=None, im=None, clean=True):
        if n:
            raise ValueError("time functions carry no spatial dimension")
        if im and any(im.values()):
            raise ValueError("time functions are real")
        Series.__init__(self, 0, re, {}, clean)

    def _new(self, n, re, im, clean=True, cls=None):
        cls = cls or type(self)
        if cls is ExpPolyTime and (n or im):
            cls = Series
        obj = object.__new__(cls)
        Series.__init__(obj, n, re, im, clean)
        return obj

    @classmethod
    def term(cls, coeff=1, sigma: int = 0, epsilon: int = 0, pi: int = 0, kappa: int = 0) -> "ExpPolyTime":
        if sigma < 0 or epsilon < 0:
            raise ValueError("sigma and epsilon must be non-negative")
        if isinstance(coeff, TrigCoefficient):
            out = cls()
            for (a, b), r in coeff.terms.items():
                out = out + cls.term(r, sigma, epsilon, pi + a, kappa + b)
            return out
        return cls(0, {S.pack(pi, kappa, sigma, epsilon): S.as_mpq(coeff)})

    @classmethod
    def exp(cls, epsilon: int) -> "ExpPolyTime":
        """``exp(-epsilon pi^2 kappa t)``."""
        return cls.term(1, 0, epsilon)

    @classmethod
    def one(cls) -> "ExpPolyTime":
        return cls.term(1)

    def terms(self) -> list[tuple[TrigCoefficient, int, int]]:
        """Canonical ``(coeff, sigma, epsilon)`` triples sorted by (epsilon, sigma)."""
        groups: dict = {}
        for key, v in self.re.items():
            a, b, sg, e, _ = S.unpack(key, 0)
            groups.setdefault((sg, e), {})[(a, b)] = v
        return [(_coeff_from(groups[se]), se[0], se[1]) for se in sorted(groups, key=lambda p: (p[1], p[0]))]

    def rates(self) -> set[tuple[int, int]]:
        """Observed ``(sigma, epsilon)`` pairs."""
        return {(s, e) for _, s, e in self.terms()}

    def value_at_zero(self) -> TrigCoefficient:
        return _coeff_from({S.unpack(k, 0)[:2]: v for k, v in self.at_t0().re.items()})

    def __call__(self, t, kappa=1.0):
        return evaluate_time(self, t, kappa)

    def __str__(self):
        from .notation import render_time

        return render_time(self)

    def to_json(self) -> list[dict]:
        return [{"coeff": str(c), "sigma": s, "epsilon": e} for c, s, e in self.terms()]

    @classmethod
    def from_json(cls, data) -> "ExpPolyTime":
        out = cls()
        for entry in data:
            out = out + cls.term(TrigCoefficient.parse(entry["coeff"]), int(entry["sigma"]), int(entry["epsilon"]))
        return out


def multiply_time(a: ExpPolyTime, b: ExpPolyTime) -> ExpPolyTime:
    return a * b


def duhamel(f: ExpPolyTime, mu: int) -> ExpPolyTime:
    """``int_0^t exp(-mu pi^2 kappa (t - s)) f(s) ds`` in closed form."""
    if mu < 0:
        raise ValueError("decay rate must be non-negative")
    return f.duhamel(mu)


def derivative(f: ExpPolyTime) -> ExpPolyTime:
    return f.d_dt()


def evaluate_time(f: ExpPolyTime, t, kappa: float = 1.0):
    """Float value(s) at ``t`` (scalar or array) for viscosity ``kappa``."""
    if not kappa > 0:
        raise ValueError("kappa must be positive")
    tt = np.asarray(t, dtype=float)
    if np.any(tt < 0) or not np.all(np.isfinite(tt)):
        raise ValueError("t must be finite and non-negative")
    kt = kappa * tt
    out = np.zeros_like(kt)
    for key, v in f.re.items():
        a, b, sg, e, _ = S.unpack(key, 0)
        c = float(v) * math.pi ** a * kappa ** b
        with np.errstate(under="ignore"):
            out = out + (c * kt ** sg) * np.exp(-e * math.pi ** 2 * kt)
    return float(out) if out.ndim == 0 else out


__all__ = [
    "ExpPolyTime",
    "multiply_time",
    "duhamel",
    "derivative",
    "evaluate_time",
]
