"""Sparse exact series with packed exponent keys.

Every object in the engine is a finite sum of monomials

    c * pi^a * kappa^b * (kappa t)^sigma * exp(-eps pi^2 kappa t) * exp(i pi k.x)

with ``c`` a Gaussian rational.  The integer exponents ``(a, b, sigma, eps, k)``
are packed into one Python int using balanced mixed-radix digits, so that
multiplying two monomials is a single integer addition of their keys.  Real and
imaginary parts of ``c`` live in two separate dicts of ``gmpy2.mpq`` values.
"""

from __future__ import annotations

import math
from functools import lru_cache

from gmpy2 import mpq

WIDTH = 10
BASE = 1 << WIDTH
HALF = BASE >> 1
MASK = BASE - 1

PI, KAPPA, SIGMA, EPS, K0 = 0, 1, 2, 3, 4
MAX_DIM = 6
NFIELDS = K0 + MAX_DIM

UNIT = tuple(1 << (WIDTH * f) for f in range(NFIELDS))
_OFFSET = sum(HALF * u for u in UNIT)

ZERO = mpq(0)
ONE = mpq(1)


class TermOverflow(OverflowError):
    """An exponent left the packable range."""


def pack(pi: int = 0, kappa: int = 0, sigma: int = 0, eps: int = 0, k=()) -> int:
    key = pi * UNIT[PI] + kappa * UNIT[KAPPA] + sigma * UNIT[SIGMA] + eps * UNIT[EPS]
    for j, kj in enumerate(k):
        key += kj * UNIT[K0 + j]
    return key


def digit(key: int, field: int) -> int:
    return (((key + _OFFSET) >> (WIDTH * field)) & MASK) - HALF


@lru_cache(maxsize=None)
def unpack(key: int, n: int) -> tuple[int, int, int, int, tuple[int, ...]]:
    s = key + _OFFSET
    out = []
    for _ in range(K0 + n):
        out.append((s & MASK) - HALF)
        s >>= WIDTH
    return out[PI], out[KAPPA], out[SIGMA], out[EPS], tuple(out[K0:])


def kpart(key: int, n: int) -> int:
    """The spatial (wavevector) share of a packed key."""
    _, _, _, _, k = unpack(key, n)
    return pack(k=k)


def _clean(d: dict) -> dict:
    return {k: v for k, v in d.items() if v}


def _conv(a: dict, b: dict, out: dict, sign: int) -> None:
    if len(a) < len(b):
        a, b = b, a
    get = out.get
    bi = list(b.items())
    if sign > 0:
        for ka, ca in a.items():
            for kb, cb in bi:
                k = ka + kb
                out[k] = get(k, ZERO) + ca * cb
    else:
        for ka, ca in a.items():
            for kb, cb in bi:
                k = ka + kb
                out[k] = get(k, ZERO) - ca * cb


def _merge(out: dict, d: dict, sign: int = 1) -> None:
    get = out.get
    if sign > 0:
        for k, v in d.items():
            out[k] = get(k, ZERO) + v
    else:
        for k, v in d.items():
            out[k] = get(k, ZERO) - v


def _join(a, b):
    ta, tb = type(a), type(b)
    return ta if ta is tb else Series


def as_mpq(x) -> mpq:
    if isinstance(x, float):
        raise TypeError("exact coefficients only; got float %r" % x)
    return mpq(x)


class Series:
    """Canonical sparse sum of monomials in ``n`` spatial dimensions.

    ``re`` and ``im`` map packed keys to nonzero ``mpq`` values.  Instances are
    treated as immutable; every operation returns a new object.
    """

    __slots__ = ("n", "re", "im", "_hash", "_ext", "cache")

    def __init__(self, n: int, re: dict | None = None, im: dict | None = None, clean: bool = True):
        if not 0 <= n <= MAX_DIM:
            raise ValueError(f"dimension must be in [0, {MAX_DIM}], got {n}")
        self.n = n
        re = re or {}
        im = im or {}
        self.re = _clean(re) if clean else re
        self.im = _clean(im) if clean else im
        self._hash = None
        self._ext = None
        self.cache = {}

    # -- construction -------------------------------------------------
    def _new(self, n, re, im, clean=True, cls=None):
        obj = object.__new__(cls or type(self))
        Series.__init__(obj, n, re, im, clean)
        return obj

    @classmethod
    def monomial(cls, n, coeff=1, imag=0, pi=0, kappa=0, sigma=0, eps=0, k=None):
        key = pack(pi, kappa, sigma, eps, k or ())
        c = as_mpq(coeff)
        re, im = ({key: c}, {}) if not imag else ({}, {key: c})
        obj = object.__new__(cls)
        Series.__init__(obj, n, re, im)
        return obj

    # -- inspection ---------------------------------------------------
    def __len__(self):
        return len(self.re) + len(self.im)

    def is_zero(self) -> bool:
        return not self.re and not self.im

    def keys(self):
        return set(self.re) | set(self.im)

    def items(self):
        """Yield ``(pi, kappa, sigma, eps, k, re, im)`` for every monomial."""
        for key in sorted(self.keys()):
            a, b, s, e, k = unpack(key, self.n)
            yield a, b, s, e, k, self.re.get(key, ZERO), self.im.get(key, ZERO)

    def extent(self):
        if self._ext is None:
            lo = [0] * (K0 + self.n)
            hi = [0] * (K0 + self.n)
            for key in self.keys():
                a, b, s, e, k = unpack(key, self.n)
                for f, v in enumerate((a, b, s, e) + k):
                    if v < lo[f]:
                        lo[f] = v
                    if v > hi[f]:
                        hi[f] = v
            self._ext = (tuple(lo), tuple(hi))
        return self._ext

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self.re == other.re and self.im == other.im and (
            self.n == other.n or self.is_zero()
        )

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((frozenset(self.re.items()), frozenset(self.im.items())))
        return self._hash

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, terms={len(self)})"

    # -- ring operations ---------------------------------------------
    def _coerce(self, other):
        if isinstance(other, Series):
            return other
        if hasattr(other, "as_series"):
            return other.as_series(type(self), self.n)
        return self._new(self.n, {0: as_mpq(other)}, {})

    def __add__(self, other):
        other = self._coerce(other)
        re, im = dict(self.re), dict(self.im)
        _merge(re, other.re)
        _merge(im, other.im)
        return self._new(max(self.n, other.n), re, im, cls=_join(self, other))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        re, im = dict(self.re), dict(self.im)
        _merge(re, other.re, -1)
        _merge(im, other.im, -1)
        return self._new(max(self.n, other.n), re, im, cls=_join(self, other))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return self._new(self.n, {k: -v for k, v in self.re.items()},
                         {k: -v for k, v in self.im.items()}, clean=False)

    def __mul__(self, other):
        if hasattr(other, "as_series"):
            other = other.as_series(type(self), self.n)
        if not isinstance(other, Series):
            c = as_mpq(other)
            if not c:
                return self._new(self.n, {}, {})
            return self._new(self.n, {k: v * c for k, v in self.re.items()},
                             {k: v * c for k, v in self.im.items()}, clean=False)
        self._check_sum(other)
        re: dict = {}
        im: dict = {}
        _conv(self.re, other.re, re, 1)
        _conv(self.im, other.im, re, -1)
        _conv(self.re, other.im, im, 1)
        _conv(self.im, other.re, im, 1)
        return self._new(max(self.n, other.n), re, im, cls=_join(self, other))

    __rmul__ = __mul__

    def _check_sum(self, other):
        (lo1, hi1), (lo2, hi2) = self.extent(), other.extent()
        for f in range(min(len(lo1), len(lo2))):
            if lo1[f] + lo2[f] < -HALF or hi1[f] + hi2[f] >= HALF:
                raise TermOverflow(f"exponent field {f} exceeds packable range")

    def times_i(self):
        return self._new(self.n, {k: -v for k, v in self.im.items()}, dict(self.re), clean=False)

    def conj(self):
        """Complex conjugate as a function of x (k -> -k, c -> conj c)."""
        re, im = {}, {}
        for key, v in self.re.items():
            re[key - 2 * kpart(key, self.n)] = v
        for key, v in self.im.items():
            im[key - 2 * kpart(key, self.n)] = -v
        return self._new(self.n, re, im, clean=False)

    def is_real(self) -> bool:
        return self.conj() == self

    def shift(self, factor=1, pi=0, kappa=0, sigma=0, eps=0):
        """Multiply by ``factor * pi^pi * kappa^kappa * (kappa t)^sigma * exp(-eps ...)``."""
        d = pack(pi, kappa, sigma, eps)
        c = as_mpq(factor)
        return self._new(self.n, {k + d: v * c for k, v in self.re.items()},
                         {k + d: v * c for k, v in self.im.items()})

    def map_terms(self, fn):
        """Rebuild from ``fn(key) -> list[(new_key, factor)]`` applied to each monomial."""
        re: dict = {}
        im: dict = {}
        for src, dst in ((self.re, re), (self.im, im)):
            get = dst.get
            for key, v in src.items():
                for nk, f in fn(key):
                    dst[nk] = get(nk, ZERO) + v * f
        return self._new(self.n, re, im)

    # -- differential operators --------------------------------------
    def partial(self, axis: int):
        if not 0 <= axis < self.n:
            raise ValueError(f"axis {axis} out of range for dimension {self.n}")
        field = K0 + axis
        d = UNIT[PI]
        re = {}
        im = {}
        for key, v in self.re.items():
            kj = digit(key, field)
            if kj:
                im[key + d] = v * kj
        for key, v in self.im.items():
            kj = digit(key, field)
            if kj:
                re[key + d] = -v * kj
        return self._new(self.n, re, im, clean=False)

    def laplacian(self):
        d = 2 * UNIT[PI]
        n = self.n

        def f(key):
            k2 = sum(x * x for x in unpack(key, n)[4])
            return [(key + d, -k2)] if k2 else []

        return self.map_terms(f)

    def d_dt(self):
        n = self.n
        up_k = UNIT[KAPPA]

        def f(key):
            _, _, s, e, _ = unpack(key, n)
            out = []
            if s:
                out.append((key + up_k - UNIT[SIGMA], s))
            if e:
                out.append((key + up_k + 2 * UNIT[PI], -e))
            return out

        return self.map_terms(f)

    def at_t0(self):
        """Drop every monomial with a positive power of t (value at t = 0)."""
        n = self.n
        keep = lambda key: unpack(key, n)[2] == 0
        strip = lambda key: key - unpack(key, n)[3] * UNIT[EPS]
        re, im = {}, {}
        for src, dst in ((self.re, re), (self.im, im)):
            for key, v in src.items():
                if keep(key):
                    nk = strip(key)
                    dst[nk] = dst.get(nk, ZERO) + v
        return self._new(n, re, im)

    def duhamel(self, mu: int | None = None):
        """Return ``int_0^t exp(-mu pi^2 kappa (t - s)) f(s) ds`` term by term.

        ``mu=None`` uses ``|k|^2`` of each monomial's own wavevector, i.e. the
        heat-semigroup decay rate of that Fourier mode.
        """
        n = self.n
        fixed_mu = mu

        def f(key):
            _, _, s, e, k = unpack(key, n)
            m = fixed_mu if fixed_mu is not None else sum(x * x for x in k)
            base = key - s * UNIT[SIGMA] - e * UNIT[EPS] - UNIT[KAPPA]
            if e == m:
                return [(base + (s + 1) * UNIT[SIGMA] + m * UNIT[EPS], mpq(1, s + 1))]
            c = e - m
            fs = math.factorial(s)
            out = [(base - 2 * (s + 1) * UNIT[PI] + m * UNIT[EPS], mpq(fs, c ** (s + 1)))]
            for j in range(s + 1):
                p = s + 1 - j
                out.append((base - 2 * p * UNIT[PI] + j * UNIT[SIGMA] + e * UNIT[EPS],
                            -mpq(fs, math.factorial(j) * c ** p)))
            return out

        return self.map_terms(f)

    # -- regrouping ---------------------------------------------------
    def split_by(self, fn):
        """Partition monomials by ``fn(key)``; returns ``{label: Series}``."""
        groups: dict = {}
        for src, part in ((self.re, 0), (self.im, 1)):
            for key, v in src.items():
                lab = fn(key)
                g = groups.setdefault(lab, ({}, {}))
                g[part][key] = v
        return {lab: self._new(self.n, re, im, clean=False) for lab, (re, im) in groups.items()}

    def modes(self):
        """Distinct wavevectors present."""
        return {unpack(key, self.n)[4] for key in self.keys()}
