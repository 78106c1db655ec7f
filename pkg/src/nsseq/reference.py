"""Golden reference data for the classical solutions and the worked 3-D example.

Spatial parts use the sin/cos grammar of :func:`nsseq.notation.parse_trig`;
``x1, x2, x3`` are the coordinates.  Time functions are
``(den, power, [(coeff, extra_pi, sigma, epsilon), ...])`` meaning
``sum coeff pi^extra_pi (kappa t)^sigma exp(-epsilon pi^2 kappa t) / (den (pi kappa)^power)``.

The transcription of the long expansion coefficients is kept verbatim,
including entries that the engine disagrees with; the verification module
reports those as discrepancies rather than silently correcting them.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .fourier import TrigPoly, VectorField
from .timefunc import ExpPolyTime

# --- Taylor vortex array (2-D) -------------------------------------------

TAYLOR_V0 = ("sin(pi x1) cos(pi x2)", "- cos(pi x1) sin(pi x2)")
TAYLOR_G0 = ("1/2*pi sin(2pi x1)", "1/2*pi sin(2pi x2)")
TAYLOR_DECAY = 2
# pressure: -(rho/4) e^{-4 pi^2 kappa t} [cos(2 pi x1) + cos(2 pi x2)]
TAYLOR_PRESSURE = ("- 1/4 cos(2pi x1) - 1/4 cos(2pi x2)", 4)

# --- ABC flow (3-D), coefficients a, b, c --------------------------------

ABC_DECAY = 1


def abc_velocity(a, b, c) -> VectorField:
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    s, co = TrigPoly.sin, TrigPoly.cos
    return VectorField([
        s(3, 2) * a - co(3, 1) * c,
        s(3, 0) * b - co(3, 2) * a,
        s(3, 1) * c - co(3, 0) * b,
    ])


def abc_inertial(a, b, c) -> VectorField:
    """g at t = 0: pi {bc sin sin - ab cos cos} and cyclic."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    s, co = TrigPoly.sin, TrigPoly.cos
    pi = TrigPoly.monomial(3, 1, pi=1)
    return VectorField([
        pi * (s(3, 0) * s(3, 1) * (b * c) - co(3, 0) * co(3, 2) * (a * b)),
        pi * (s(3, 1) * s(3, 2) * (a * c) - co(3, 0) * co(3, 1) * (b * c)),
        pi * (s(3, 0) * s(3, 2) * (a * b) - co(3, 1) * co(3, 2) * (a * c)),
    ])


def abc_pressure(a, b, c) -> TrigPoly:
    """Spatial factor of the published pressure, multiplied by e^{-2 pi^2 kappa t} rho."""
    a, b, c = Fraction(a), Fraction(b), Fraction(c)
    s, co = TrigPoly.sin, TrigPoly.cos
    return -(co(3, 0) * s(3, 1) * (b * c) + co(3, 2) * s(3, 0) * (a * b) + co(3, 1) * s(3, 2) * (a * c))


# --- worked 3-D example ---------------------------------------------------

EXAMPLE_V0 = (
    "sin(pi x1) sin(pi x3) + cos(pi x1) cos(pi x2)",
    "sin(pi x2) sin(pi x1) + cos(pi x2) cos(pi x3)",
    "sin(pi x3) sin(pi x2) + cos(pi x3) cos(pi x1)",
)
EXAMPLE_FIRST_DECAY = 2
EXAMPLE_SECOND_DECAY = 6
EXAMPLE_PROBE = (2 * math.pi / 3, 3 * math.pi / 5, 4 * math.pi / 9)

EXAMPLE_U0 = (
    "2/3*pi cos(2pi x1) cos(pi x2) sin(pi x3) - 2/3*pi sin(2pi x2) cos(pi x1) cos(pi x3) "
    "+ 2/3*pi sin(2pi x3) sin(pi x1) sin(pi x2)",
    "2/3*pi cos(2pi x2) sin(pi x1) cos(pi x3) - 2/3*pi sin(2pi x3) cos(pi x1) cos(pi x2) "
    "+ 2/3*pi sin(2pi x1) sin(pi x3) sin(pi x2)",
    "2/3*pi cos(2pi x3) cos(pi x1) sin(pi x2) - 2/3*pi sin(2pi x1) cos(pi x2) cos(pi x3) "
    "+ 2/3*pi sin(2pi x2) sin(pi x1) sin(pi x3)",
)

ALPHA = {
    (1, 1): (
        "1/3*pi^2 sin(pi x1) sin(pi x3) "
        "+ 1/3*pi^2 cos(pi x1) cos(pi x2) "
        "+ 1/3*pi^2 cos(pi x1) cos(pi x2) cos(2pi x3) "
        "- 1/3*pi^2 sin(pi x1) cos(2pi x2) sin(pi x3) "
        "- 5/3*pi^2 sin(2pi x1) sin(pi x2) cos(pi x3) "
        "- 2/3*pi^2 sin(2pi x2) sin(2pi x3) "
        "+ 5/6*pi^2 sin(3pi x1) sin(pi x3) "
        "- 5/6*pi^2 cos(3pi x1) cos(pi x2) "
        "+ 1/2*pi^2 cos(pi x1) cos(3pi x2) "
        "- 1/2*pi^2 sin(pi x1) sin(3pi x3) "
        "+ 1/6*pi^2 cos(3pi x1) cos(pi x2) cos(2pi x3) "
        "+ 1/6*pi^2 cos(pi x1) cos(3pi x2) cos(2pi x3) "
        "+ 1/6*pi^2 sin(pi x1) cos(2pi x2) sin(3pi x3) "
        "- 1/6*pi^2 sin(2pi x1) sin(pi x2) cos(3pi x3) "
        "+ 1/6*pi^2 sin(2pi x1) sin(3pi x2) cos(pi x3) "
        "+ 1/6*pi^2 sin(3pi x1) cos(2pi x2) sin(pi x3)"
    ),
    (2, 1): (
        "1/3*pi^2 sin(pi x2) sin(pi x1) "
        "+ 1/3*pi^2 cos(pi x2) cos(pi x3) "
        "+ 1/3*pi^2 cos(pi x2) cos(pi x3) cos(2pi x1) "
        "- 1/3*pi^2 sin(pi x2) cos(2pi x3) sin(pi x1) "
        "- 5/3*pi^2 sin(2pi x2) sin(pi x3) cos(pi x1) "
        "- 2/3*pi^2 sin(2pi x3) sin(2pi x1) "
        "+ 5/6*pi^2 sin(3pi x2) sin(pi x1) "
        "- 5/6*pi^2 cos(3pi x2) cos(pi x3) "
        "+ 1/2*pi^2 cos(pi x2) cos(3pi x3) "
        "- 1/2*pi^2 sin(pi x2) sin(3pi x1) "
        "+ 1/6*pi^2 cos(3pi x2) cos(pi x3) cos(2pi x1) "
        "+ 1/6*pi^2 cos(pi x2) cos(3pi x3) cos(2pi x1) "
        "+ 1/6*pi^2 sin(pi x2) cos(2pi x3) sin(3pi x1) "
        "- 1/6*pi^2 sin(2pi x2) sin(pi x3) cos(3pi x1) "
        "+ 1/6*pi^2 sin(2pi x2) sin(3pi x3) cos(pi x1) "
        "+ 1/6*pi^2 sin(3pi x2) cos(2pi x3) sin(pi x1)"
    ),
    (3, 1): (
        "1/3*pi^2 sin(pi x3) sin(pi x2) "
        "+ 1/3*pi^2 cos(pi x3) cos(pi x1) "
        "+ 1/3*pi^2 cos(pi x3) cos(pi x1) cos(2pi x2) "
        "- 1/3*pi^2 sin(pi x3) cos(2pi x1) sin(pi x2) "
        "- 5/3*pi^2 sin(2pi x3) sin(pi x1) cos(pi x2) "
        "- 2/3*pi^2 sin(2pi x1) sin(2pi x2) "
        "+ 5/6*pi^2 sin(3pi x3) sin(pi x2) "
        "- 5/6*pi^2 cos(3pi x3) cos(pi x1) "
        "+ 1/2*pi^2 cos(pi x3) cos(3pi x1) "
        "- 1/2*pi^2 sin(pi x3) sin(3pi x2) "
        "+ 1/6*pi^2 cos(3pi x3) cos(pi x1) cos(2pi x2) "
        "+ 1/6*pi^2 cos(pi x3) cos(3pi x1) cos(2pi x2) "
        "+ 1/6*pi^2 sin(pi x3) cos(2pi x1) sin(3pi x2) "
        "- 1/6*pi^2 sin(2pi x3) sin(pi x1) cos(3pi x2) "
        "+ 1/6*pi^2 sin(2pi x3) sin(3pi x1) cos(pi x2) "
        "+ 1/6*pi^2 sin(3pi x3) cos(2pi x1) sin(pi x2)"
    ),
    (1, 2): (
        "- 2/9*pi^3 sin(2pi x1) cos(2pi x2) "
        "- 2/9*pi^3 sin(2pi x1) cos(2pi x3) "
        "+ 1/3*pi^3 cos(3pi x2) sin(pi x3) "
        "+ 1/3*pi^3 cos(pi x2) sin(3pi x3) "
        "+ 1/3*pi^3 cos(3pi x1) sin(2pi x2) cos(pi x3) "
        "+ 1/3*pi^3 sin(3pi x1) sin(pi x2) sin(2pi x3) "
        "+ 1/9*pi^3 cos(2pi x1) cos(3pi x2) sin(pi x3) "
        "- 1/9*pi^3 cos(pi x1) sin(2pi x2) cos(3pi x3) "
        "- 1/9*pi^3 cos(2pi x1) cos(pi x2) sin(3pi x3) "
        "- 1/9*pi^3 sin(pi x1) sin(3pi x2) sin(2pi x3) "
        "- 2/9*pi^3 sin(4pi x1) "
        "+ 1/9*pi^3 sin(2pi x1) cos(4pi x3) "
        "+ 1/9*pi^3 sin(4pi x1) cos(2pi x3) "
        "- 1/9*pi^3 sin(4pi x1) cos(2pi x2) "
        "- 1/9*pi^3 sin(2pi x1) cos(4pi x2) "
        "+ 2/9*pi^3 cos(2pi x1) cos(3pi x2) sin(3pi x3)"
    ),
    (2, 2): (
        "- 2/9*pi^3 sin(2pi x2) cos(2pi x3) "
        "- 2/9*pi^3 sin(2pi x2) cos(2pi x1) "
        "+ 1/3*pi^3 cos(3pi x3) sin(pi x1) "
        "+ 1/3*pi^3 cos(pi x3) sin(3pi x1) "
        "+ 1/3*pi^3 cos(3pi x2) sin(2pi x3) cos(pi x1) "
        "+ 1/3*pi^3 sin(3pi x2) sin(pi x3) sin(2pi x1) "
        "+ 1/9*pi^3 cos(2pi x2) cos(3pi x3) sin(pi x1) "
        "- 1/9*pi^3 cos(pi x2) sin(2pi x3) cos(3pi x1) "
        "- 1/9*pi^3 cos(2pi x2) cos(pi x3) sin(3pi x1) "
        "- 1/9*pi^3 sin(pi x2) sin(3pi x3) sin(2pi x1) "
        "- 2/9*pi^3 sin(4pi x2) "
        "+ 1/9*pi^3 sin(2pi x2) cos(4pi x1) "
        "+ 1/9*pi^3 sin(4pi x2) cos(2pi x1) "
        "- 1/9*pi^3 sin(4pi x2) cos(2pi x3) "
        "- 1/9*pi^3 sin(2pi x2) cos(4pi x3) "
        "+ 2/9*pi^3 cos(2pi x2) cos(3pi x3) sin(3pi x1)"
    ),
    (3, 2): (
        "- 2/9*pi^3 sin(2pi x3) cos(2pi x1) "
        "- 2/9*pi^3 sin(2pi x3) cos(2pi x2) "
        "+ 1/3*pi^3 cos(3pi x1) sin(pi x2) "
        "+ 1/3*pi^3 cos(pi x1) sin(3pi x2) "
        "+ 1/3*pi^3 cos(3pi x3) sin(2pi x1) cos(pi x2) "
        "+ 1/3*pi^3 sin(3pi x3) sin(pi x1) sin(2pi x2) "
        "+ 1/9*pi^3 cos(2pi x3) cos(3pi x1) sin(pi x2) "
        "- 1/9*pi^3 cos(pi x3) sin(2pi x1) cos(3pi x2) "
        "- 1/9*pi^3 cos(2pi x3) cos(pi x1) sin(3pi x2) "
        "- 1/9*pi^3 sin(pi x3) sin(3pi x1) sin(2pi x2) "
        "- 2/9*pi^3 sin(4pi x3) "
        "+ 1/9*pi^3 sin(2pi x3) cos(4pi x2) "
        "+ 1/9*pi^3 sin(4pi x3) cos(2pi x2) "
        "- 1/9*pi^3 sin(4pi x3) cos(2pi x1) "
        "- 1/9*pi^3 sin(2pi x3) cos(4pi x1) "
        "+ 2/9*pi^3 cos(2pi x3) cos(3pi x1) sin(3pi x2)"
    ),
}


CHI = {
    (1, 1): (
        "sin(pi x1) sin(pi x3) "
        "+ cos(pi x1) cos(pi x2)"
    ),
    (1, 2): (
        "cos(pi x1) cos(pi x2) cos(2pi x3) "
        "- sin(pi x1) cos(2pi x2) sin(pi x3) "
        "- 5 sin(2pi x1) sin(pi x2) cos(pi x3)"
    ),
    (1, 3): (
        "- sin(2pi x2) sin(2pi x3)"
    ),
    (1, 4): (
        "sin(3pi x1) sin(pi x3) "
        "- cos(3pi x1) cos(pi x2) "
        "+ 3 cos(pi x1) cos(3pi x2) "
        "- 3 sin(pi x1) sin(3pi x3)"
    ),
    (1, 5): (
        "cos(3pi x1) cos(pi x2) cos(2pi x3) "
        "+ cos(pi x1) cos(3pi x2) cos(2pi x3) "
        "+ sin(pi x1) cos(2pi x2) sin(3pi x3) "
        "- sin(2pi x1) sin(pi x2) cos(3pi x3) "
        "+ sin(2pi x1) sin(3pi x2) cos(pi x3) "
        "+ sin(3pi x1) cos(2pi x2) sin(pi x3)"
    ),
    (1, 6): (
        "- sin(2pi x1) cos(2pi x2) "
        "- sin(2pi x1) cos(2pi x3)"
    ),
    (1, 7): (
        "cos(3pi x2) sin(pi x3) "
        "+ cos(pi x2) sin(3pi x3)"
    ),
    (1, 8): (
        "3 cos(3pi x1) sin(2pi x2) cos(pi x3) "
        "+ 3 sin(3pi x1) sin(pi x2) sin(2pi x3) "
        "+ cos(2pi x1) cos(3pi x2) sin(pi x3) "
        "- cos(pi x1) sin(2pi x2) cos(3pi x3) "
        "- cos(2pi x1) cos(pi x2) sin(3pi x3) "
        "- sin(pi x1) sin(3pi x2) sin(2pi x3)"
    ),
    (1, 9): (
        "- sin(4pi x1)"
    ),
    (1, 10): (
        "sin(2pi x1) cos(4pi x3) "
        "+ sin(4pi x1) cos(2pi x3) "
        "- sin(4pi x1) cos(2pi x2) "
        "- sin(2pi x1) cos(4pi x2)"
    ),
    (1, 11): (
        "cos(2pi x1) cos(3pi x2) sin(3pi x3)"
    ),
    (2, 1): (
        "sin(pi x2) sin(pi x1) "
        "+ cos(pi x2) cos(pi x3)"
    ),
    (2, 2): (
        "cos(pi x2) cos(pi x3) cos(2pi x1) "
        "- sin(pi x2) cos(2pi x3) sin(pi x1) "
        "- 5 sin(2pi x2) sin(pi x3) cos(pi x1)"
    ),
    (2, 3): (
        "- sin(2pi x3) sin(2pi x1)"
    ),
    (2, 4): (
        "sin(3pi x2) sin(pi x1) "
        "- cos(3pi x2) cos(pi x3) "
        "+ 3 cos(pi x2) cos(3pi x3) "
        "- 3 sin(pi x2) sin(3pi x1)"
    ),
    (2, 5): (
        "cos(3pi x2) cos(pi x3) cos(2pi x1) "
        "+ cos(pi x2) cos(3pi x3) cos(2pi x1) "
        "+ sin(pi x2) cos(2pi x3) sin(3pi x1) "
        "- sin(2pi x2) sin(pi x3) cos(3pi x1) "
        "+ sin(2pi x2) sin(3pi x3) cos(pi x1) "
        "+ sin(3pi x2) cos(2pi x3) sin(pi x1)"
    ),
    (2, 6): (
        "- sin(2pi x2) cos(2pi x3) "
        "- sin(2pi x2) cos(2pi x1)"
    ),
    (2, 7): (
        "cos(3pi x3) sin(pi x1) "
        "+ cos(pi x3) sin(3pi x1)"
    ),
    (2, 8): (
        "3 cos(3pi x2) sin(2pi x3) cos(pi x1) "
        "+ 3 sin(3pi x2) sin(pi x3) sin(2pi x1) "
        "+ cos(2pi x2) cos(3pi x3) sin(pi x1) "
        "- cos(pi x2) sin(2pi x3) cos(3pi x1) "
        "- cos(2pi x2) cos(pi x3) sin(3pi x1) "
        "- sin(pi x2) sin(3pi x3) sin(2pi x1)"
    ),
    (2, 9): (
        "- sin(4pi x2)"
    ),
    (2, 10): (
        "sin(2pi x2) cos(4pi x1) "
        "+ sin(4pi x2) cos(2pi x1) "
        "- sin(4pi x2) cos(2pi x3) "
        "- sin(2pi x2) cos(4pi x3)"
    ),
    (2, 11): (
        "cos(2pi x2) cos(3pi x3) sin(3pi x1)"
    ),
    (3, 1): (
        "sin(pi x3) sin(pi x2) "
        "+ cos(pi x3) cos(pi x1)"
    ),
    (3, 2): (
        "cos(pi x3) cos(pi x1) cos(2pi x2) "
        "- sin(pi x3) cos(2pi x1) sin(pi x2) "
        "- 5 sin(2pi x3) sin(pi x1) cos(pi x2)"
    ),
    (3, 3): (
        "- sin(2pi x1) sin(2pi x2)"
    ),
    (3, 4): (
        "sin(3pi x3) sin(pi x2) "
        "- cos(3pi x3) cos(pi x1) "
        "+ 3 cos(pi x3) cos(3pi x1) "
        "- 3 sin(pi x3) sin(3pi x2)"
    ),
    (3, 5): (
        "cos(3pi x3) cos(pi x1) cos(2pi x2) "
        "+ cos(pi x3) cos(3pi x1) cos(2pi x2) "
        "+ sin(pi x3) cos(2pi x1) sin(3pi x2) "
        "- sin(2pi x3) sin(pi x1) cos(3pi x2) "
        "+ sin(2pi x3) sin(3pi x1) cos(pi x2) "
        "+ sin(3pi x3) cos(2pi x1) sin(pi x2)"
    ),
    (3, 6): (
        "- sin(2pi x3) cos(2pi x1) "
        "- sin(2pi x3) cos(2pi x2)"
    ),
    (3, 7): (
        "cos(3pi x1) sin(pi x2) "
        "+ cos(pi x1) sin(3pi x2)"
    ),
    (3, 8): (
        "3 cos(3pi x3) sin(2pi x1) cos(pi x2) "
        "+ 3 sin(3pi x3) sin(pi x1) sin(2pi x2) "
        "+ cos(2pi x3) cos(3pi x1) sin(pi x2) "
        "- cos(pi x3) sin(2pi x1) cos(3pi x2) "
        "- cos(2pi x3) cos(pi x1) sin(3pi x2) "
        "- sin(pi x3) sin(3pi x1) sin(2pi x2)"
    ),
    (3, 9): (
        "- sin(4pi x3)"
    ),
    (3, 10): (
        "sin(2pi x3) cos(4pi x2) "
        "+ sin(4pi x3) cos(2pi x2) "
        "- sin(4pi x3) cos(2pi x1) "
        "- sin(2pi x3) cos(4pi x1)"
    ),
    (3, 11): (
        "cos(2pi x3) cos(3pi x1) sin(3pi x2)"
    ),
}


# time functions: (denominator, (pi kappa) power, [(coeff, extra pi power, sigma, epsilon)])
# the first two and the products are written over (pi^2 kappa)^p, the rest over (pi kappa)^p
TIME = {
    1: (1, 0, [(1, 0, 0, 2)]),
    2: (2, 1, [(1, -1, 0, 4), (-1, -1, 0, 6)]),
    3: (96, 2, [(1, 0, 0, 2), (-3, 0, 0, 6), (2, 0, 0, 8)]),
    4: (12, 2, [(2, 2, 1, 6), (1, 0, 0, 6), (-1, 0, 0, 8)]),
    5: (6, 2, [(1, 0, 0, 6), (-1, 0, 0, 8), (-2, 2, 1, 8)]),
    6: (48, 2, [(1, 0, 0, 6), (-2, 0, 0, 8), (1, 0, 0, 10)]),
    7: (288, 2, [(3, 0, 0, 6), (-4, 0, 0, 8), (1, 0, 0, 14)]),
    8: (72, 3, [(4, 2, 1, 8), (-3, 0, 0, 8), (4, 0, 0, 10), (-1, 0, 0, 12)]),
    9: (24, 3, [(1, 0, 0, 8), (-4, 2, 1, 10), (-1, 0, 0, 12)]),
    10: (216, 3, [(1, 0, 0, 8), (-3, 0, 0, 10), (3, 0, 0, 12), (-1, 0, 0, 14)]),
    11: (432, 3, [(3, 0, 0, 8), (-8, 0, 0, 10), (6, 0, 0, 12), (-1, 0, 0, 16)]),
    12: (4320, 3, [(10, 0, 0, 8), (-24, 0, 0, 10), (-1, 0, 0, 20), (15, 0, 0, 12)]),
    13: (3780, 3, [(15, 0, 0, 8), (-35, 0, 0, 10), (-1, 0, 0, 22), (21, 0, 0, 12)]),
}

# products used by the second sequence: T1*T2 and T2^2
PRODUCT_T1T2 = (2, 1, [(1, -1, 0, 6), (-1, -1, 0, 8)])
PRODUCT_T2T2 = (4, 2, [(1, -2, 0, 8), (-2, -2, 0, 10), (1, -2, 0, 12)])


def time_function(spec) -> ExpPolyTime:
    den, power, terms = spec
    out = ExpPolyTime()
    for coeff, pi_power, sigma, eps in terms:
        out = out + ExpPolyTime.term(Fraction(coeff, den), sigma, eps, pi_power - power, -power)
    return out


def numbered_time(j: int) -> ExpPolyTime:
    return time_function(TIME[j])


def example_v0() -> VectorField:
    return VectorField(TrigPoly.parse(s, 3) for s in EXAMPLE_V0)


def example_u0() -> VectorField:
    return VectorField(TrigPoly.parse(s, 3) for s in EXAMPLE_U0)


def alpha(i: int, k: int) -> TrigPoly:
    return TrigPoly.parse(ALPHA[(i, k)], 3)


def chi(i: int, j: int) -> TrigPoly:
    return TrigPoly.parse(CHI[(i, j)], 3)


def taylor_v0() -> VectorField:
    return VectorField(TrigPoly.parse(s, 2) for s in TAYLOR_V0)


def taylor_g0() -> VectorField:
    return VectorField(TrigPoly.parse(s, 2) for s in TAYLOR_G0)


def taylor_pressure() -> TrigPoly:
    return TrigPoly.parse(TAYLOR_PRESSURE[0], 2)
