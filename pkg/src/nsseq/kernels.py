"""Float evaluation of exact series on point/time grids.

Two interchangeable backends compute

    out[p, j] = Re sum_m c_m exp(i pi k_m . x_p) (kappa t_j)^sigma_m exp(-eps_m pi^2 kappa t_j)

* a numba ``@njit`` loop (default when numba imports), and
* a pure numpy path (``NSSEQ_DISABLE_NUMBA=1`` or numba missing).

Both agree to rounding; ``benchmarks/bench_kernels.py`` times them.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

import numpy as np

from . import _series as S

_WANT_NUMBA = os.environ.get("NSSEQ_DISABLE_NUMBA", "0").lower() in ("", "0", "false", "no")

try:
    if not _WANT_NUMBA:
        raise ImportError
    from numba import njit
except ImportError:  # pragma: no cover - exercised via env flag
    njit = None

USE_NUMBA = njit is not None


@dataclass(frozen=True)
class Compiled:
    """Flat float arrays for one exact series."""

    k: np.ndarray          # (M, n) wavevectors, float64
    coef_re: np.ndarray    # (M,) rational part, real
    coef_im: np.ndarray    # (M,) rational part, imaginary
    pi_pow: np.ndarray     # (M,)
    kappa_pow: np.ndarray  # (M,)
    sigma: np.ndarray      # (M,)
    eps: np.ndarray        # (M,)

    @property
    def n(self) -> int:
        return self.k.shape[1]

    def scaled(self, kappa: float):
        f = np.power(math.pi, self.pi_pow) * np.power(float(kappa), self.kappa_pow)
        return self.coef_re * f, self.coef_im * f


def compile_series(s: S.Series) -> Compiled:
    hit = s.cache.get("compiled")
    if hit is not None:
        return hit
    keys = sorted(s.keys())
    m = len(keys)
    k = np.zeros((m, s.n))
    arr = np.zeros((6, m))
    for i, key in enumerate(keys):
        a, b, sg, e, kk = S.unpack(key, s.n)
        k[i] = kk
        arr[0, i] = float(s.re.get(key, 0))
        arr[1, i] = float(s.im.get(key, 0))
        arr[2:, i] = (a, b, sg, e)
    out = Compiled(k, arr[0], arr[1], arr[2], arr[3], arr[4], arr[5])
    s.cache["compiled"] = out
    return out


def _grid_numpy(k, cre, cim, sig, eps, X, T, kappa):
    theta = math.pi * (X @ k.T)
    spatial = np.cos(theta) * cre - np.sin(theta) * cim
    kt = kappa * T
    with np.errstate(under="ignore"):
        temporal = np.power(kt[None, :], sig[:, None]) * np.exp(-np.outer(eps, math.pi ** 2 * kt))
    return spatial @ temporal


if USE_NUMBA:
    @njit(cache=True, nogil=True)
    def _grid_numba(k, cre, cim, sig, eps, X, T, kappa):  # pragma: no cover - jitted
        P = X.shape[0]
        M = k.shape[0]
        NT = T.shape[0]
        n = k.shape[1]
        pi2 = math.pi * math.pi
        tf = np.empty((M, NT))
        for m in range(M):
            for j in range(NT):
                kt = kappa * T[j]
                tf[m, j] = kt ** sig[m] * math.exp(-eps[m] * pi2 * kt)
        out = np.zeros((P, NT))
        for p in range(P):
            for m in range(M):
                th = 0.0
                for d in range(n):
                    th += k[m, d] * X[p, d]
                th *= math.pi
                s = cre[m] * math.cos(th) - cim[m] * math.sin(th)
                if s == 0.0:
                    continue
                for j in range(NT):
                    out[p, j] += s * tf[m, j]
        return out
else:
    _grid_numba = None


def eval_grid(c: Compiled, X, T, kappa: float, backend: str | None = None) -> np.ndarray:
    """Values on the outer product of points ``X`` (P, n) and times ``T`` -> (P, NT)."""
    X = np.ascontiguousarray(np.atleast_2d(np.asarray(X, dtype=float)))
    T = np.ascontiguousarray(np.atleast_1d(np.asarray(T, dtype=float)))
    if c.k.shape[0] == 0:
        return np.zeros((X.shape[0], T.shape[0]))
    cre, cim = c.scaled(kappa)
    use = backend or ("numba" if USE_NUMBA else "numpy")
    if use == "numba":
        if _grid_numba is None:
            raise RuntimeError("numba backend unavailable")
        return _grid_numba(c.k, cre, cim, c.sigma, c.eps, X, T, float(kappa))
    return _grid_numpy(c.k, cre, cim, c.sigma, c.eps, X, T, float(kappa))


def eval_points(c: Compiled, X, kappa: float = 1.0, t: float = 0.0) -> np.ndarray:
    return eval_grid(c, X, [t], kappa)[:, 0]
