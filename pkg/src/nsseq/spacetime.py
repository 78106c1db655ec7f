"""Space-time fields: sums of spatial Fourier modes times exact time functions."""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from . import _series as S
from ._series import Series
from .fourier import FieldError, TrigPoly, VectorField
from .notation import real_terms
from .timefunc import ExpPolyTime


class SpacetimeField:
    """Scalar or vector field ``sum_m c_m pi^a kappa^b (kappa t)^s e^{-eps pi^2 kappa t} e^{i pi k.x}``.

    Components are exact :class:`~nsseq._series.Series` in ``n`` spatial
    dimensions.  A scalar field has one component and ``vector=False``.
    """

    __slots__ = ("components", "vector", "n")

    def __init__(self, components, vector: bool | None = None, n: int | None = None):
        comps = tuple(components)
        if not comps:
            raise FieldError("field needs at least one component")
        dims = {c.n for c in comps if not c.is_zero()}
        if n is None:
            n = max(dims) if dims else comps[0].n
        if len(dims - {n}) > 0:
            raise FieldError("components disagree on the spatial dimension")
        if vector is None:
            vector = len(comps) > 1
        if vector and len(comps) != n:
            raise FieldError(f"vector field in {n} dimensions needs {n} components")
        if not vector and len(comps) != 1:
            raise FieldError("scalar field has exactly one component")
        self.components = tuple(_as_series(c, n) for c in comps)
        self.vector = vector
        self.n = n

    # -- construction ------------------------------------------------
    @classmethod
    def scalar(cls, s: Series, n: int | None = None) -> "SpacetimeField":
        return cls((s,), vector=False, n=n if n is not None else s.n)

    @classmethod
    def from_spatial(cls, f, temporal: ExpPolyTime | None = None) -> "SpacetimeField":
        """Separable field ``f(x) T(t)``; ``T`` defaults to 1."""
        t = temporal if temporal is not None else ExpPolyTime.one()
        if isinstance(f, VectorField):
            return cls([c * t for c in f], vector=True, n=f.n)
        return cls.scalar(f * t, f.n)

    @classmethod
    def zeros_like(cls, other: "SpacetimeField") -> "SpacetimeField":
        return cls([Series(other.n) for _ in other.components], other.vector, other.n)

    # -- access ------------------------------------------------------
    @property
    def arity(self) -> str:
        return "vector" if self.vector else "scalar"

    def __len__(self):
        return len(self.components)

    def __getitem__(self, i) -> Series:
        return self.components[i]

    def __iter__(self):
        return iter(self.components)

    def term_count(self) -> int:
        return sum(len(c) for c in self.components)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.components)

    def __eq__(self, other):
        if not isinstance(other, SpacetimeField):
            return NotImplemented
        return self.vector == other.vector and self.components == other.components

    def __hash__(self):
        return hash((self.vector, self.components))

    def __repr__(self):
        return f"SpacetimeField({self.arity}, n={self.n}, terms={self.term_count()})"

    # -- algebra -----------------------------------------------------
    def _zip(self, other, op):
        if not isinstance(other, SpacetimeField):
            return NotImplemented
        if other.vector != self.vector or len(other) != len(self):
            raise FieldError("arity mismatch")
        return SpacetimeField([op(a, b) for a, b in zip(self, other)], self.vector, self.n)

    def __add__(self, other):
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._zip(other, lambda a, b: a - b)

    def __neg__(self):
        return self.map(lambda c: -c)

    def __mul__(self, other):
        """Scalar, time function or scalar field factor (applied componentwise)."""
        if isinstance(other, SpacetimeField):
            if other.vector:
                raise FieldError("componentwise product needs a scalar factor")
            other = other.components[0]
        return self.map(lambda c: c * other)

    __rmul__ = __mul__

    def map(self, fn) -> "SpacetimeField":
        return SpacetimeField([fn(c) for c in self.components], self.vector, self.n)

    def d_dt(self):
        return self.map(lambda c: c.d_dt())

    def laplacian(self):
        return self.map(lambda c: c.laplacian())

    def partial(self, axis: int):
        if not 0 <= axis < self.n:
            raise FieldError(f"axis {axis} out of range for dimension {self.n}")
        return self.map(lambda c: c.partial(axis))

    def times_kappa(self, power: int = 1):
        return self.map(lambda c: c.shift(kappa=power))

    def divergence(self) -> "SpacetimeField":
        if not self.vector:
            raise FieldError("divergence needs a vector field")
        total = self.components[0].partial(0)
        for i in range(1, self.n):
            total = total + self.components[i].partial(i)
        return SpacetimeField.scalar(total, self.n)

    def gradient(self) -> "SpacetimeField":
        if self.vector:
            raise FieldError("gradient needs a scalar field")
        c = self.components[0]
        return SpacetimeField([c.partial(i) for i in range(self.n)], True, self.n)

    def at_t0(self):
        """Initial spatial slice: VectorField or TrigPoly."""
        parts = [TrigPoly(self.n, c.at_t0().re, c.at_t0().im) for c in self.components]
        return VectorField(parts) if self.vector else parts[0]

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.components)

    # -- presentation ------------------------------------------------
    def terms(self, component: int = 0) -> list[tuple[TrigPoly, ExpPolyTime]]:
        """Canonical ``(spatial, temporal)`` pairs of one component.

        Spatial modes multiplying one elementary time factor ``(kappa t)^s e^{-eps ...}``
        are grouped; the pi/kappa prefactors stay with the spatial part.
        """
        c = self.components[component]
        groups = c.split_by(lambda key: S.unpack(key, c.n)[2:4])
        out = []
        for (sg, e) in sorted(groups, key=lambda p: (p[1], p[0])):
            g = groups[(sg, e)]
            strip = S.pack(sigma=sg, eps=e)
            spatial = TrigPoly(c.n, {k - strip: v for k, v in g.re.items()},
                               {k - strip: v for k, v in g.im.items()})
            out.append((spatial, ExpPolyTime.term(1, sg, e)))
        return out

    def groups(self, component: int = 0) -> list[tuple[TrigPoly, ExpPolyTime]]:
        """Split one component into ``chi_j(x) T_j(t)`` with pairwise non-proportional ``T_j``.

        Each real sin/cos product carries its own time function; products whose
        time functions differ only by a constant factor ``r pi^a kappa^b`` share
        a group.  ``T_j`` is normalized so its leading term (smallest decay
        rate, then highest power) has coefficient 1.
        """
        c = self.components[component]
        by_product: dict = {}
        for (factors, sg, e), coeffs in real_terms(c).items():
            tf = by_product.setdefault(factors, {})
            for (a, b), r in coeffs.items():
                tf[(e, -sg, a, b)] = r
        bucket: dict = {}
        for factors, tf in by_product.items():
            lead = min(tf)
            r0 = tf[lead]
            _, _, a0, b0 = lead
            norm = frozenset(((e, s, a - a0, b - b0), r / r0) for (e, s, a, b), r in tf.items())
            bucket.setdefault(norm, []).append((factors, r0, a0, b0))
        out = []
        for norm, members in bucket.items():
            temporal = ExpPolyTime()
            for (e, s, a, b), r in norm:
                temporal = temporal + ExpPolyTime.term(r.numerator, -s, e, a, b) * S.mpq(1, r.denominator)
            chi = TrigPoly(c.n)
            for factors, r0, a0, b0 in members:
                chi = chi + _product(c.n, factors) * TrigPoly.monomial(c.n, S.mpq(r0.numerator, r0.denominator), pi=a0, kappa=b0)
            out.append((chi, temporal))
        out.sort(key=lambda ct: _group_order(ct[1]))
        return out

    # -- serialization ---------------------------------------------------
    def to_json(self) -> dict:
        return {
            "arity": self.arity,
            "n": self.n,
            "components": [
                [{"spatial": s.to_json(), "temporal": t.to_json()} for s, t in self.terms(i)]
                for i in range(len(self))
            ],
        }

    @classmethod
    def from_json(cls, data) -> "SpacetimeField":
        n = int(data["n"])
        comps = []
        for terms in data["components"]:
            total = Series(n)
            for entry in terms:
                total = total + TrigPoly.from_json(entry["spatial"], n) * ExpPolyTime.from_json(entry["temporal"])
            comps.append(total)
        return cls(comps, data["arity"] == "vector", n)


def _group_order(t: ExpPolyTime):
    return tuple((e, -s) for _, s, e in t.terms())


def _product(n: int, factors) -> TrigPoly:
    out = TrigPoly.constant(n)
    for fn, m, ax in factors:
        out = out * (TrigPoly.sin(n, ax, m) if fn == "sin" else TrigPoly.cos(n, ax, m))
    return out


def _as_series(c, n: int) -> Series:
    if isinstance(c, Series):
        return c
    if hasattr(c, "as_series"):
        return c.as_series(Series, n)
    return Series(n, {0: S.as_mpq(c)}, {})


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def _heat(c: Series) -> Series:
    n = c.n

    def f(key):
        k = S.unpack(key, n)[4]
        return [(key + sum(x * x for x in k) * S.UNIT[S.EPS], 1)]

    return c.map_terms(f)


def heat_propagate(v0) -> SpacetimeField:
    """Attach ``exp(-|k|^2 pi^2 kappa t)`` to each mode of time-independent data."""
    if isinstance(v0, SpacetimeField):
        return v0.map(_heat)
    return SpacetimeField.from_spatial(v0).map(_heat)


def duhamel_solve(forcing: SpacetimeField) -> SpacetimeField:
    """Zero-initial-data solution ``w`` of ``w_t = kappa lap w + forcing``, mode by mode."""
    return forcing.map(lambda c: c.duhamel())


def _check_eval_args(t, kappa):
    if not kappa > 0:
        raise ValueError("kappa must be positive")
    if np.any(np.asarray(t, dtype=float) < 0):
        raise ValueError("t must be non-negative")


def evaluate_grid(f: SpacetimeField, points, times, kappa: float, backend: str | None = None) -> np.ndarray:
    """Values on points x times -> array (components, P, NT)."""
    from .kernels import compile_series, eval_grid

    _check_eval_args(times, kappa)
    X = np.atleast_2d(np.asarray(points, dtype=float))
    if X.shape[1] != f.n:
        raise FieldError(f"points must have {f.n} coordinates")
    return np.stack([eval_grid(compile_series(c), X, times, kappa, backend) for c in f.components])


def evaluate_field(f: SpacetimeField, point, t: float, kappa: float):
    """Float value at one (x, t): tuple for vectors, float for scalars."""
    x = np.asarray(point, dtype=float)
    if x.shape != (f.n,) or not np.all(np.isfinite(x)):
        raise FieldError(f"point must be {f.n} finite coordinates")
    vals = evaluate_grid(f, x[None, :], [float(t)], kappa)[:, 0, 0]
    return tuple(float(v) for v in vals) if f.vector else float(vals[0])


def as_fraction(x) -> Fraction:
    """Exact rational from int/Fraction/str; floats go through their shortest repr."""
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(x)
