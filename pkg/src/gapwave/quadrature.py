"""Numerical quadrature used by the phase model.

Both schemes take a vectorised integrand ``func(x: ndarray) -> ndarray``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import QuadratureError

METHODS = ("adaptive-simpson", "fixed-gauss")


@dataclass(frozen=True)
class QuadratureSpec:
    method: str = "adaptive-simpson"
    abs_tolerance: float = 1e-6
    max_subdivisions: int = 20

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"method must be one of {METHODS}, got {self.method!r}")
        if not self.abs_tolerance > 0:
            raise ValueError("abs_tolerance > 0 violated")
        if int(self.max_subdivisions) != self.max_subdivisions or self.max_subdivisions < 8:
            raise ValueError("max_subdivisions >= 8 violated")


def adaptive_simpson(func, a, b, tol=1e-6, max_depth=20):
    """Adaptive Simpson integration of ``func`` over [a, b].

    The classic recursive scheme, processed one refinement level at a time so
    every level costs a single vectorised call to ``func``. An interval at
    depth k carries tolerance tol / 2**k and is accepted once
    |S_left + S_right - S_whole| <= tol_k; accepted pieces get the Richardson
    correction. Refinement also stops early once the committed error plus the
    |S_left + S_right - S_whole| of every open interval fits in ``tol``. Raises QuadratureError if neither test passes within
    ``max_depth`` levels.
    """
    a, b = float(a), float(b)
    if a == b:
        return 0.0
    m = 0.5 * (a + b)
    fa, fm, fb = (float(v) for v in np.asarray(func(np.array([a, m, b])), dtype=float))

    lo = np.array([a])
    hi = np.array([b])
    flo, fmid, fhi = np.array([fa]), np.array([fm]), np.array([fb])
    whole = (b - a) / 6.0 * (flo + 4.0 * fmid + fhi)
    eps = tol
    accepted = []
    spent = 0.0
    for _ in range(max_depth):
        mid = 0.5 * (lo + hi)
        xl = 0.5 * (lo + mid)
        xr = 0.5 * (mid + hi)
        fx = np.asarray(func(np.concatenate([xl, xr])), dtype=float)
        fl, fr = fx[: lo.size], fx[lo.size:]
        h = (hi - lo) / 12.0
        left = h * (flo + 4.0 * fl + fmid)
        right = h * (fmid + 4.0 * fr + fhi)
        delta = left + right - whole
        # |delta| rather than |delta| / 15 as the error bound: the 1/15 factor
        # assumes h^4 convergence, which a sqrt-type endpoint does not have
        done = np.abs(delta) <= eps
        accepted.extend((left + right + delta / 15.0)[done].tolist())
        spent += float(np.sum(np.abs(delta[done])))
        keep = ~done
        if not keep.any():
            return math.fsum(accepted)
        if spent + float(np.sum(np.abs(delta[keep]))) <= tol:
            accepted.extend((left + right)[keep].tolist())
            return math.fsum(accepted)
        # children are interleaved (left, right) to keep summation order fixed
        lo = np.column_stack([lo[keep], mid[keep]]).ravel()
        hi = np.column_stack([mid[keep], hi[keep]]).ravel()
        new_flo = np.column_stack([flo[keep], fmid[keep]]).ravel()
        new_fmid = np.column_stack([fl[keep], fr[keep]]).ravel()
        new_fhi = np.column_stack([fmid[keep], fhi[keep]]).ravel()
        whole = np.column_stack([left[keep], right[keep]]).ravel()
        flo, fmid, fhi = new_flo, new_fmid, new_fhi
        eps *= 0.5
    raise QuadratureError(
        f"adaptive Simpson: {lo.size} intervals unresolved after {max_depth} levels "
        f"(tol={tol:g})")


_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(8)


def _composite_gauss(func, a, b, panels):
    edges = np.linspace(a, b, panels + 1)
    half = 0.5 * np.diff(edges)
    centre = 0.5 * (edges[:-1] + edges[1:])
    x = centre[:, None] + half[:, None] * _GL_NODES[None, :]
    fx = np.asarray(func(x.ravel()), dtype=float).reshape(x.shape)
    return math.fsum((half[:, None] * fx * _GL_WEIGHTS[None, :]).ravel())


def fixed_gauss(func, a, b, tol=1e-6, max_levels=20):
    """Composite 8-point Gauss-Legendre with panel doubling.

    Stops when two successive panel counts agree to ``tol``.
    """
    prev = _composite_gauss(func, a, b, 1)
    for level in range(1, max_levels + 1):
        cur = _composite_gauss(func, a, b, 2 ** level)
        if abs(cur - prev) <= tol:
            return cur
        prev = cur
    raise QuadratureError(
        f"fixed Gauss: no convergence to {tol:g} with {2 ** max_levels} panels")


def integrate(func, a, b, spec: QuadratureSpec | None = None):
    spec = spec or QuadratureSpec()
    if spec.method == "adaptive-simpson":
        return adaptive_simpson(func, a, b, spec.abs_tolerance, spec.max_subdivisions)
    return fixed_gauss(func, a, b, spec.abs_tolerance, spec.max_subdivisions)
