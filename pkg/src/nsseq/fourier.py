"""Exact periodic fields as finite Fourier series on the period-2 cell.

Fields are stored as complex-exponential modes ``exp(i pi k.x)`` with exact
coefficients in the ring  Q[i][pi, 1/pi, kappa, 1/kappa].  The sin/cos form is
only a presentation layer (see :mod:`nsseq.notation`).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
import re as _re

import numpy as np

from . import _series as S
from ._series import Series, mpq


class FieldError(ValueError):
    """Malformed field input: dimension mismatch, bad axis, non-finite point."""


# ---------------------------------------------------------------------------
# coefficients
# ---------------------------------------------------------------------------

_MONO_RE = _re.compile(
    r"([-+]?)(\d+(?:/\d+)?)?(\*?pi(?:\^\(?(-?\d+)\)?)?)?(\*?kappa(?:\^\(?(-?\d+)\)?)?)?"
)


class TrigCoefficient:
    """Exact scalar: a finite sum of ``rational * pi^a * kappa^b`` monomials.

    A single monomial is the usual case; sums of unlike monomials appear once
    time functions with different viscosity powers are merged into one mode.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for (a, b), r in (terms or {}).items():
            r = Fraction(r)
            if r:
                clean[(int(a), int(b))] = clean.get((int(a), int(b)), 0) + r
        self.terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def monomial(cls, rational_part=1, pi_power=0, kappa_power=0):
        return cls({(pi_power, kappa_power): rational_part})

    @classmethod
    def parse(cls, text: str) -> "TrigCoefficient":
        """Parse ``"p/q*pi^a*kappa^b"`` monomials joined by ``+``/``-``."""
        text = "".join(text.split())
        if text in ("", "0"):
            return cls()
        terms = {}
        pos = 0
        while pos < len(text):
            m = _MONO_RE.match(text, pos)
            if m is None or m.end() == pos or not (m[2] or m[3] or m[5]):
                raise FieldError(f"cannot parse coefficient {text!r}")
            r = Fraction(m[2] or 1) * (-1 if m[1] == "-" else 1)
            a = (int(m[4]) if m[4] else 1) if m[3] else 0
            b = (int(m[6]) if m[6] else 1) if m[5] else 0
            terms[(a, b)] = terms.get((a, b), 0) + r
            pos = m.end()
        return cls(terms)

    # monomial view
    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def _mono(self):
        if len(self.terms) != 1:
            raise ValueError("coefficient is not a single monomial")
        return next(iter(self.terms.items()))

    @property
    def rational_part(self) -> Fraction:
        return self._mono()[1] if self.terms else Fraction(0)

    @property
    def pi_power(self) -> int:
        return self._mono()[0][0] if self.terms else 0

    @property
    def kappa_power(self) -> int:
        return self._mono()[0][1] if self.terms else 0

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = TrigCoefficient.monomial(other)
        if not isinstance(other, TrigCoefficient):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = _as_coeff(other)
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return TrigCoefficient(t)

    __radd__ = __add__

    def __neg__(self):
        return TrigCoefficient({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-_as_coeff(other))

    def __mul__(self, other):
        if isinstance(other, Series):
            return NotImplemented
        other = _as_coeff(other)
        t = {}
        for (a1, b1), r1 in self.terms.items():
            for (a2, b2), r2 in other.terms.items():
                k = (a1 + a2, b1 + b2)
                t[k] = t.get(k, 0) + r1 * r2
        return TrigCoefficient(t)

    __rmul__ = __mul__

    def value(self, kappa: float = 1.0) -> float:
        return float(sum(float(r) * math.pi ** a * kappa ** b for (a, b), r in self.terms.items()))

    def __float__(self):
        if any(b for _, b in self.terms):
            raise ValueError("coefficient depends on kappa; use value(kappa)")
        return self.value()

    def as_series(self, cls=Series, n=0):
        return cls(n, {S.pack(a, b): mpq(r.numerator, r.denominator) for (a, b), r in self.terms.items()}, {})

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for (a, b), r in sorted(self.terms.items()):
            s = str(abs(r))
            if a:
                s += "*pi" + (f"^{a}" if a != 1 else "")
            if b:
                s += "*kappa" + (f"^{b}" if b != 1 else "")
            out.append(("-" if r < 0 else "+", s))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, s in out[1:]:
            text += f" {sign} {s}"
        return text

    def __repr__(self):
        return f"TrigCoefficient({str(self)!r})"


def _as_coeff(x) -> TrigCoefficient:
    if isinstance(x, TrigCoefficient):
        return x
    if isinstance(x, float):
        raise TypeError("exact coefficients only")
    return TrigCoefficient.monomial(Fraction(x))


def _coeff_from(parts: dict) -> TrigCoefficient:
    """``{(pi, kappa): mpq}`` -> TrigCoefficient."""
    return TrigCoefficient({k: Fraction(int(v.numerator), int(v.denominator)) for k, v in parts.items()})


# ---------------------------------------------------------------------------
# wavevectors and polynomials
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class WaveVector:
    components: tuple[int, ...]

    @property
    def norm2(self) -> int:
        return sum(k * k for k in self.components)

    def __neg__(self):
        return WaveVector(tuple(-k for k in self.components))


class TrigPoly(Series):
    """Time-independent real periodic scalar field on R^n (period 2 per axis)."""

    __slots__ = ()

    @classmethod
    def constant(cls, n: int, value=1) -> "TrigPoly":
        return cls.monomial(n, value)

    @classmethod
    def exp_mode(cls, n: int, k, coeff=1, imag=False) -> "TrigPoly":
        return cls.monomial(n, coeff, int(imag), k=tuple(k))

    @classmethod
    def cos(cls, n: int, axis: int, m: int = 1) -> "TrigPoly":
        _check_axis(axis, n)
        k = [0] * n
        k[axis] = m
        kn = [0] * n
        kn[axis] = -m
        return cls(n, {S.pack(k=k): mpq(1, 2), S.pack(k=kn): mpq(1, 2)} if m else {0: mpq(1)}, {})

    @classmethod
    def sin(cls, n: int, axis: int, m: int = 1) -> "TrigPoly":
        _check_axis(axis, n)
        if m == 0:
            return cls(n)
        k = [0] * n
        k[axis] = m
        kn = [0] * n
        kn[axis] = -m
        return cls(n, {}, {S.pack(k=k): mpq(-1, 2), S.pack(k=kn): mpq(1, 2)})

    @classmethod
    def parse(cls, text: str, n: int) -> "TrigPoly":
        from .notation import parse_trig

        return parse_trig(text, n, cls)

    def coefficient(self, k) -> tuple[TrigCoefficient, TrigCoefficient]:
        """Real and imaginary parts of the coefficient of ``exp(i pi k.x)``."""
        k = tuple(k)
        re, im = {}, {}
        for key, v in self.re.items():
            a, b, _, _, kk = S.unpack(key, self.n)
            if kk == k:
                re[(a, b)] = v
        for key, v in self.im.items():
            a, b, _, _, kk = S.unpack(key, self.n)
            if kk == k:
                im[(a, b)] = v
        return _coeff_from(re), _coeff_from(im)

    def wavevectors(self) -> list[WaveVector]:
        return [WaveVector(k) for k in sorted(self.modes())]

    def shells(self) -> set[int]:
        return {sum(x * x for x in k) for k in self.modes()}

    def __str__(self):
        from .notation import render_trig

        return render_trig(self)

    # serialization
    def to_json(self) -> list[dict]:
        out = []
        for k in sorted(self.modes()):
            re, im = self.coefficient(k)
            out.append({"k": list(k), "re": str(re), "im": str(im)})
        return out

    @classmethod
    def from_json(cls, data, n: int | None = None) -> "TrigPoly":
        if n is None:
            if not data:
                raise FieldError("dimension required for an empty field")
            n = len(data[0]["k"])
        re, im = {}, {}
        for entry in data:
            k = tuple(int(x) for x in entry["k"])
            if len(k) != n:
                raise FieldError(f"wavevector {k} has wrong dimension (expected {n})")
            for part, dst in (("re", re), ("im", im)):
                c = TrigCoefficient.parse(str(entry.get(part, "0")))
                for (a, b), r in c.terms.items():
                    dst[S.pack(a, b, k=k)] = mpq(r.numerator, r.denominator)
        return cls(n, re, im)


class VectorField(tuple):
    """n-component bundle of TrigPoly sharing the dimension n."""

    def __new__(cls, components):
        comps = tuple(components)
        if not comps:
            raise FieldError("vector field needs at least one component")
        n = comps[0].n
        if any(c.n != n for c in comps) or len(comps) != n:
            raise FieldError(f"vector field must have {n} components of dimension {n}")
        return super().__new__(cls, comps)

    @property
    def n(self) -> int:
        return self[0].n

    def __add__(self, other):
        return VectorField(a + b for a, b in zip(self, other, strict=True))

    def __sub__(self, other):
        return VectorField(a - b for a, b in zip(self, other, strict=True))

    def __neg__(self):
        return VectorField(-a for a in self)

    def scale(self, c):
        return VectorField(a * c for a in self)

    def to_json(self):
        return [c.to_json() for c in self]

    @classmethod
    def from_json(cls, data):
        n = len(data)
        return cls(TrigPoly.from_json(c, n) for c in data)


def _check_axis(axis: int, n: int) -> None:
    if not 0 <= axis < n:
        raise FieldError(f"axis {axis} out of range for dimension {n}")


def _check_same_dim(a: Series, b: Series) -> None:
    if a.n != b.n and a.n and b.n:
        raise FieldError(f"dimension mismatch: {a.n} vs {b.n}")


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def multiply(a: TrigPoly, b: TrigPoly) -> TrigPoly:
    _check_same_dim(a, b)
    return a * b


def partial_derivative(f: Series, axis: int) -> Series:
    _check_axis(axis, f.n)
    return f.partial(axis)


def gradient(f: TrigPoly) -> VectorField:
    return VectorField(f.partial(i) for i in range(f.n))


def divergence(v) -> Series:
    total = v[0].partial(0)
    for i in range(1, len(v)):
        total = total + v[i].partial(i)
    return total


def laplacian(f: Series) -> Series:
    return f.laplacian()


def curl_pairs(v) -> list[Series]:
    """All antisymmetrized derivative pairs ``d_i v_j - d_j v_i`` for i < j."""
    n = len(v)
    return [v[j].partial(i) - v[i].partial(j) for i in range(n) for j in range(i + 1, n)]


def evaluate(f: TrigPoly, point, kappa: float = 1.0) -> float:
    """Float value of a time-independent field at ``point``."""
    x = np.asarray(point, dtype=float)
    if x.shape != (f.n,):
        raise FieldError(f"point must have {f.n} coordinates")
    if not np.all(np.isfinite(x)):
        raise FieldError("point must be finite")
    from .kernels import compile_series, eval_points

    return float(eval_points(compile_series(f), x[None, :], kappa)[0])
