"""Conversion between exponential modes and sin/cos product notation.

The text grammar accepted by :func:`parse_trig` is the one the renderer emits::

    2/3*pi cos(2 pi x1) cos(pi x2) sin(pi x3) - 5/6*pi^2 sin(3 pi x1) sin(pi x3)

Coefficients may also be written ``5pi^2/3`` or ``pi/2``.
"""

from __future__ import annotations

import re
from fractions import Fraction
from itertools import product
from math import gcd

from . import _series as S

_TOKEN = re.compile(
    r"\s*(?:"
    r"(?P<op>[-+])"
    r"|(?P<fn>sin|cos)\s*\(\s*(?P<m>\d*)\s*\*?\s*pi\s*\*?\s*x_?\{?(?P<ax>\d)\}?\s*\)"
    r"|(?P<num>\d+)"
    r"|(?P<pi>pi(?:\^\{?(?P<pp>-?\d+)\}?)?)"
    r"|(?P<slash>/)"
    r"|(?P<star>\*)"
    r"|(?P<paren>[()])"
    r")"
)


def _trig_factor(fn: str, m: int, axis: int, n: int, cls):
    return cls.sin(n, axis, m) if fn == "sin" else cls.cos(n, axis, m)


def parse_trig(text: str, n: int, cls):
    """Parse sin/cos notation into an exact field of type ``cls``."""
    pos = 0
    total = cls(n)
    sign, num, den, pi_pow, factors = 1, None, 1, 0, []
    pending_div = False
    started = False

    def flush():
        nonlocal total
        if not started:
            return
        coeff = Fraction(sign * (num if num is not None else 1), den)
        term = cls.monomial(n, S.mpq(coeff.numerator, coeff.denominator), pi=pi_pow)
        for fn, m, ax in factors:
            term = term * _trig_factor(fn, m, ax, n, cls)
        total = total + term

    text = text.strip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse trig expression near {text[pos:pos + 20]!r}")
        pos = m.end()
        if m["op"]:
            flush()
            sign, num, den, pi_pow, factors = (-1 if m["op"] == "-" else 1), None, 1, 0, []
            started = True
        elif m["fn"]:
            started = True
            ax = int(m["ax"]) - 1
            if not 0 <= ax < n:
                raise ValueError(f"axis x{ax + 1} out of range for dimension {n}")
            factors.append((m["fn"], int(m["m"] or 1), ax))
        elif m["num"]:
            started = True
            if pending_div:
                den *= int(m["num"])
                pending_div = False
            else:
                num = (num or 1) * int(m["num"])
        elif m["pi"]:
            started = True
            pi_pow += int(m["pp"]) if m["pp"] else 1
        elif m["slash"]:
            pending_div = True
    flush()
    return total


# ---------------------------------------------------------------------------
# real product basis
# ---------------------------------------------------------------------------

def _frac(v) -> Fraction:
    return Fraction(int(v.numerator), int(v.denominator)) if v is not None else Fraction(0)


def real_terms(series) -> dict:
    """Expand into real sin/cos products.

    Returns ``{(factors, sigma, eps): {(pi, kappa): Fraction}}`` where ``factors``
    is a tuple of ``(fn, m, axis)`` with ``m > 0`` sorted by axis.  Raises if the
    series is not real.
    """
    n = series.n
    orbits: dict = {}
    for key in series.keys():
        a, b, sg, e, k = S.unpack(key, n)
        mag = tuple(abs(x) for x in k)
        signs = tuple(1 if x > 0 else -1 for x in k if x)
        slot = orbits.setdefault((mag, sg, e), {}).setdefault((a, b), {})
        slot[signs] = (_frac(series.re.get(key)), _frac(series.im.get(key)))

    out: dict = {}
    for (mag, sg, e), by_mono in orbits.items():
        support = [j for j, mj in enumerate(mag) if mj]
        for kinds in product(("cos", "sin"), repeat=len(support)):
            sin_pos = [p for p, kind in enumerate(kinds) if kind == "sin"]
            q = len(sin_pos)
            factors = tuple((kind, mag[ax], ax) for kind, ax in zip(kinds, support))
            coeffs = {}
            for mono, table in by_mono.items():
                sre = Fraction(0)
                sim = Fraction(0)
                for signs, (re_part, im_part) in table.items():
                    w = 1
                    for p in sin_pos:
                        w *= signs[p]
                    sre += w * re_part
                    sim += w * im_part
                # multiply by i^q
                for _ in range(q % 4):
                    sre, sim = -sim, sre
                if sim:
                    raise ValueError("series is not real-valued")
                if sre:
                    coeffs[mono] = sre
            if coeffs:
                out[(factors, sg, e)] = coeffs
    return out


def _fmt_factor(fn, m, ax):
    return f"{fn}({'' if m == 1 else m}pi x{ax + 1})"


def _fmt_mono(r: Fraction, a: int, b: int, first: bool) -> str:
    sign = "-" if r < 0 else "+"
    mag = abs(r)
    body = "" if (mag == 1 and (a or b)) else str(mag)
    parts = [body] if body else []
    if a:
        parts.append("pi" + (f"^{a}" if a != 1 else ""))
    if b:
        parts.append("kappa" + (f"^{b}" if b != 1 else ""))
    text = "*".join(parts)
    if first:
        return ("-" if sign == "-" else "") + text
    return f" {sign} {text}"


def render_trig(series) -> str:
    terms = real_terms(series)
    if not terms:
        return "0"
    chunks = []
    for (factors, sg, e), coeffs in sorted(terms.items(), key=lambda kv: (kv[0][1], kv[0][2], _order(kv[0][0]))):
        trig = " ".join(_fmt_factor(*f) for f in factors)
        tfac = _time_factor(sg, e)
        tail = " ".join(x for x in (trig, tfac) if x)
        if len(coeffs) == 1:
            (a, b), r = next(iter(coeffs.items()))
            c = _fmt_mono(r, a, b, first=True)
            if tail and c in ("1", "-1"):
                c = c[:-1]
            chunks.append((c + (" " if tail and c not in ("", "-") else "") + tail).strip())
        else:
            c = "".join(_fmt_mono(r, a, b, first=(i == 0)) for i, ((a, b), r) in enumerate(sorted(coeffs.items())))
            chunks.append(f"({c}) {tail}".strip())
    text = chunks[0]
    for c in chunks[1:]:
        text += (" - " + c[1:]) if c.startswith("-") else (" + " + c)
    return text


def _order(factors):
    return tuple((ax, m, fn) for fn, m, ax in factors)


def _time_factor(sg, e) -> str:
    parts = []
    if sg:
        parts.append("(k t)" + (f"^{sg}" if sg != 1 else ""))
    if e:
        parts.append("e^{-" + ("" if e == 1 else f"{e} ") + "pi^2 k t}")
    return " ".join(parts)


# ---------------------------------------------------------------------------
# time functions
# ---------------------------------------------------------------------------

def render_time(series) -> str:
    """Render a real time function as ``(numerator)/(denominator)``.

    ``k`` stands for the viscosity.  Numerator coefficients are coprime
    integers; the common rational and the lowest pi/kappa powers are factored
    into the denominator.
    """
    terms = []
    for key, v in series.re.items():
        a, b, sg, e, _ = S.unpack(key, series.n)
        terms.append((_frac(v), a, b, sg, e))
    if not terms:
        return "0"

    amin = min(t[1] for t in terms)
    bmin = min(t[2] for t in terms)
    g = 0
    lcm = 1
    for r, *_ in terms:
        g = gcd(g, r.numerator)
        lcm = lcm * r.denominator // gcd(lcm, r.denominator)
    scale = Fraction(g, lcm)
    body = []
    for r, a, b, sg, e in sorted(terms, key=lambda t: (t[4], -t[3], t[1], t[2])):
        c = int(r / scale)
        parts = []
        if abs(c) != 1:
            parts.append(str(abs(c)))
        if a - amin:
            parts.append("pi" + (f"^{a - amin}" if a - amin != 1 else ""))
        if b - bmin:
            parts.append("k" + (f"^{b - bmin}" if b - bmin != 1 else ""))
        tf = _time_factor(sg, e)
        if tf:
            parts.append(tf)
        txt = " ".join(parts) or "1"
        body.append(("-" if c < 0 else "+", txt))
    num = ("-" if body[0][0] == "-" else "") + body[0][1]
    for sign, txt in body[1:]:
        num += f" {sign} {txt}"
    den_parts = []
    if scale.denominator != 1:
        den_parts.append(str(scale.denominator))
    if amin:
        den_parts.append("pi" + (f"^{-amin}" if -amin != 1 else ""))
    if bmin:
        den_parts.append("k" + (f"^{-bmin}" if -bmin != 1 else ""))
    lead = "" if scale.numerator == 1 else f"{scale.numerator}"
    if len(body) > 1:
        num = f"({num})"
    if lead:
        num = f"{lead}{num}" if len(body) > 1 else f"{lead} {num}"
    if not den_parts:
        return num
    return f"{num}/({' '.join(den_parts)})"
