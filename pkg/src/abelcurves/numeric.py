"""Floating-point cross-checks: residuals of rational solutions, Poincare maps and d'(0)."""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import cumulative_trapezoid, quad, solve_ivp

from .errors import BlowUpError, PreconditionError
from .scalars import to_float
from .trig import TrigPoly

TWO_PI = 2 * math.pi
BLOW_UP = 1e8


@dataclass(frozen=True)
class TrajectoryConfig:
    rtol: float = 1e-10
    atol: float = 1e-12
    x0: float = 0.0
    period: float = TWO_PI

    def __post_init__(self):
        if not (self.rtol > 0 and self.atol > 0):
            raise PreconditionError("tolerances must be strictly positive")


@dataclass(frozen=True)
class DisplacementProbe:
    h: float
    d_plus: float
    d_minus: float
    d_zero: float
    estimate: float
    reference: float

    @property
    def rel_error(self):
        return abs(self.estimate - self.reference) / abs(self.reference)

    def to_dict(self):
        return {"h": self.h, "d_plus": self.d_plus, "d_minus": self.d_minus,
                "d_zero": self.d_zero, "estimate": self.estimate,
                "reference": self.reference, "rel_error": self.rel_error}


class _Fourier:
    """Float coefficients of a trig polynomial for fast repeated evaluation."""

    def __init__(self, x: TrigPoly):
        self.a0 = to_float(x.a0)
        self.a = np.array([to_float(c) for c in x.a], dtype=float)
        self.b = np.array([to_float(c) for c in x.b], dtype=float)
        self.k = np.arange(1, len(self.a) + 1, dtype=float)

    def __call__(self, t):
        if not len(self.a):
            return self.a0
        kt = self.k * t
        return self.a0 + float(self.a @ np.cos(kt) + self.b @ np.sin(kt))


def _domain(x, n):
    if isinstance(x, TrigPoly):
        return np.linspace(0.0, TWO_PI, n, endpoint=False)
    return np.linspace(-10.0, 10.0, n)


def residual_sample(eq, p, n=1000, points=None):
    """Max of ``|(1/p)' - (A/p^3 + B/p^2 + C/p)|`` over sample points.

    ``p`` may be a ring element or an :class:`InvariantCurve`. Polynomial
    equations are sampled on ``[-10, 10]``, trigonometric ones on one period.
    """
    p = getattr(p, "p", p)
    ts = np.asarray(points, dtype=float) if points is not None else _domain(p, n)
    pv = np.asarray(p.evaluate(ts))
    if np.any(pv == 0):
        raise PreconditionError("p vanishes at a sample point")
    dp = np.asarray(p.deriv().evaluate(ts))
    A, B, C = (np.asarray(x.evaluate(ts)) for x in (eq.A, eq.B, eq.C))
    lhs = -dp / pv ** 2
    rhs = A / pv ** 3 + B / pv ** 2 + C / pv
    return float(np.max(np.abs(lhs - rhs)))


def _rhs(eq):
    if not eq.is_trig:
        raise PreconditionError("Poincare maps need a trigonometric equation")
    A, B, C = (_Fourier(x) for x in (eq.A, eq.B, eq.C))

    def f(t, y):
        x = y[0]
        return [((A(t) * x + B(t)) * x + C(t)) * x]

    return f


def _escape(t, y):
    return abs(y[0]) - BLOW_UP


_escape.terminal = True


def flow(eq, x0: float, t0: float, t1: float, config: TrajectoryConfig | None = None) -> float:
    """Value at ``t1`` of the solution through ``(t0, x0)``; ``t1 < t0`` integrates backwards."""
    cfg = config or TrajectoryConfig()
    sol = solve_ivp(_rhs(eq), (t0, t1), [float(x0)], method="DOP853",
                    rtol=cfg.rtol, atol=cfg.atol, events=_escape, dense_output=False)
    if sol.status == 1:
        t_esc = float(sol.t_events[0][0])
        raise BlowUpError(f"solution from x0={x0} escapes |x| > {BLOW_UP:g} at t={t_esc:.6g}",
                          t_esc)
    if sol.status != 0:
        raise BlowUpError(f"integration failed from x0={x0}: {sol.message}", float(sol.t[-1]))
    return float(sol.y[0, -1])


def poincare_map(eq, x0: float | None = None, config: TrajectoryConfig | None = None,
                 inverse: bool = False) -> float:
    """``x(2 pi)`` for the solution with ``x(0) = x0``; raise :class:`BlowUpError` on escape.

    ``x0`` defaults to ``config.x0``. With ``inverse=True`` the equation is
    integrated from ``2 pi`` back to ``0``, which evaluates the inverse map.
    """
    cfg = config or TrajectoryConfig()
    if x0 is None:
        x0 = cfg.x0
    if inverse:
        return flow(eq, x0, cfg.period, 0.0, cfg)
    return flow(eq, x0, 0.0, cfg.period, cfg)


def displacement(eq, x0, config=None):
    return poincare_map(eq, x0, config) - x0


def displacement_derivative(eq, h=1e-4, config=None) -> DisplacementProbe:
    """Central difference ``(d(h) - d(-h)) / 2h`` next to ``exp(2 pi c) - 1``."""
    if not eq.is_trig or not eq.C.is_constant():
        raise PreconditionError("displacement_derivative needs a trigonometric equation with constant C")
    if not 1e-6 <= h <= 1e-3:
        raise PreconditionError("finite-difference step must lie in [1e-6, 1e-3]")
    c = to_float(eq.C.a0)
    dp = displacement(eq, h, config)
    dm = displacement(eq, -h, config)
    d0 = displacement(eq, 0.0, config)
    return DisplacementProbe(h, dp, dm, d0, (dp - dm) / (2 * h), math.expm1(TWO_PI * c))


def floquet_exponent(eq, curve):
    """``int_0^{2 pi} df/dx`` along ``x = 1/p``; the periodic orbit repels when it is positive."""
    p = getattr(curve, "p", curve)
    A, B, C = (_Fourier(x) for x in (eq.A, eq.B, eq.C))
    P = _Fourier(p)

    def dfdx(t):
        x = 1.0 / P(t)
        return (3 * A(t) * x + 2 * B(t)) * x + C(t)

    return quad(dfdx, 0.0, TWO_PI, limit=200)[0]


def _stretch(eq, p, n):
    """Grid and cumulative ``int df/dx`` along ``x = 1/p`` over one period."""
    ts = np.linspace(0.0, TWO_PI, n + 1)
    x = 1.0 / p.evaluate(ts)
    rate = (3 * eq.A.evaluate(ts) * x + 2 * eq.B.evaluate(ts)) * x + eq.C.evaluate(ts)
    return ts, cumulative_trapezoid(rate, ts, initial=0.0)


def shooting_segments(eq, curve, budget=3.0, n=4096):
    """Split one period so each piece amplifies errors by at most ``exp(budget)``.

    Returns ``[(t0, t1, inverse), ...]``. Forward integration over ``[a, b]``
    amplifies by ``exp(max_{s<t} G(t) - G(s))`` and backward integration by
    ``exp(max_{s<t} G(s) - G(t))``, with ``G`` the cumulative stretching
    rate; each piece uses the cheaper direction.
    """
    p = getattr(curve, "p", curve)
    ts, G = _stretch(eq, p, n)
    segs, i = [], 0
    while i < n:
        lo = hi = G[i]
        fwd = bwd = 0.0
        j = i
        while j < n:
            g = G[j + 1]
            nf, nb = max(fwd, g - min(lo, g)), max(bwd, max(hi, g) - g)
            if min(nf, nb) > budget and j > i:
                break
            fwd, bwd, lo, hi = nf, nb, min(lo, g), max(hi, g)
            j += 1
        segs.append((float(ts[i]), float(ts[j]), bwd < fwd))
        i = j
    return segs


def periodicity_defect(eq, curve, config=None, budget=3.0):
    """Fixed-point check of the Poincare map at ``x0 = 1/p(0)`` for an invariant curve ``p x - 1``.

    A well-conditioned orbit is checked with one integration over the
    period, forwards or on the inverse map, whichever amplifies rounding
    less. Otherwise the period is cut into :func:`shooting_segments` and
    each piece is integrated from the exact orbit value ``1/p(t_k)`` and
    compared with ``1/p(t_{k+1})``; the composition of the pieces is the
    Poincare map. Returns ``(defect, x0, method, exponent)`` with ``defect``
    the largest mismatch.
    """
    p = getattr(curve, "p", curve)
    x0 = 1.0 / float(p.evaluate(0.0))
    mu = floquet_exponent(eq, p)
    segs = shooting_segments(eq, p, budget)
    if len(segs) == 1:
        inverse = segs[0][2]
        x1 = poincare_map(eq, x0, config, inverse=inverse)
        return abs(x1 - x0), x0, "inverse" if inverse else "forward", mu
    worst = 0.0
    for a, b, inverse in segs:
        start, end = (b, a) if inverse else (a, b)
        xs = 1.0 / float(p.evaluate(start))
        xe = 1.0 / float(p.evaluate(end))
        worst = max(worst, abs(flow(eq, xs, start, end, config) - xe))
    return worst, x0, f"segmented:{len(segs)}", mu


def displacement_grid(eq, x0s, config=None):
    """Rows ``(x0, d(x0))``; a row holds ``nan`` when the trajectory escapes."""
    rows = []
    for x0 in x0s:
        try:
            rows.append((float(x0), displacement(eq, x0, config)))
        except BlowUpError:
            rows.append((float(x0), float("nan")))
    return rows


def write_grid_csv(rows, path):
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(["x0", "d"])
        w.writerows(rows)


__all__ = ["TrajectoryConfig", "DisplacementProbe", "residual_sample", "poincare_map",
           "displacement", "displacement_derivative", "floquet_exponent", "flow",
           "periodicity_defect", "shooting_segments",
           "displacement_grid", "write_grid_csv"]
