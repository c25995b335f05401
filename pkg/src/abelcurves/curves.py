"""Invariant curves ``p(t) x - 1 = 0`` of an Abel equation.

A curve is stored as ``p = K * base`` where ``base`` is a monic divisor of
``A`` with coefficients in the input field and ``K`` a nonzero constant from
that field or a quadratic extension of it. Substituting ``p = K*base`` in

    -B = A/p + p' + p*C

and multiplying by ``K`` gives ``A/base + K*B + K^2 (base' + base*C) = 0``,
one quadratic in ``K`` per coefficient. The admissible ``K`` are the roots of
the gcd of all of them.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import product

from .equation import AbelEquation
from .errors import NotInvariantError, OutOfScopeError
from .frontend import render
from .poly import Poly, factor, gcd, nonvanishing_on_reals
from .scalars import (
    GAUSSIAN,
    RATIONAL,
    Gauss,
    QuadraticSurd,
    format_scalar,
    gaussian_sqrt,
    rational_sqrt,
    reciprocal,
    sort_key,
)
from .trig import TrigPoly, nonvanishing_divisors, trig_divisor_orbits


@dataclass(frozen=True)
class Cofactor:
    """``K(t, x) = K2 x^2 + K1 x + K0``."""

    K2: object
    K1: object
    K0: object


@dataclass(frozen=True)
class InvariantCurve:
    base: object
    K: object = 1

    @property
    def p(self):
        return self.base if self.K == 1 else self.base.scale(self.K)

    @property
    def degree(self):
        return self.base.degree

    def divide(self, x):
        """Exact ``x / p``; the division by ``base`` stays in the base field."""
        q = x.exact_div(self.base)
        return q if self.K == 1 else q.scale(reciprocal(self.K))

    def sort_key(self):
        return (self.degree, [sort_key(c) for c in _coeffs_high_first(self.base)], sort_key(self.K))

    def __str__(self):
        if self.K == 1:
            return f"({render(self.base)})*x - 1"
        k = format_scalar(self.K)
        if isinstance(self.K, (Gauss, QuadraticSurd)) and not k.lstrip("-").replace("/", "").isdigit():
            k = f"({k})"
        return f"{k}*({render(self.base)})*x - 1"


def _coeffs_high_first(x):
    return list(reversed(x.coeff_vector()))


@dataclass
class DivisorCandidate:
    base: object
    complement: object
    constants: list = field(default_factory=list)


# divisor enumeration ---------------------------------------------------------

def _is_nonvanishing(x):
    from .trig import trig_nonvanishing

    return trig_nonvanishing(x) if isinstance(x, TrigPoly) else nonvanishing_on_reals(x)


def enumerate_divisors(A, ring=None):
    """Monic, non-constant divisors of ``A`` that do not vanish on R, one per proportionality class."""
    if A.is_zero() or A.is_constant():
        raise OutOfScopeError("out-of-scope: divisor enumeration needs a non-constant A")
    if isinstance(A, TrigPoly):
        divisors = nonvanishing_divisors(trig_divisor_orbits(A))
    else:
        good = [(f, m) for f, m in factor(A) if nonvanishing_on_reals(f)]
        divisors = []
        for exps in product(*[range(m + 1) for _, m in good]):
            if not any(exps):
                continue
            d = Poly.const(1, A.field)
            for (f, _), e in zip(good, exps):
                d = d * f ** e
            divisors.append(d)
    out = [DivisorCandidate(d, A.exact_div(d)) for d in divisors]
    out.sort(key=lambda c: (c.base.degree, [sort_key(x) for x in _coeffs_high_first(c.base)]))
    return out


# constant solving ------------------------------------------------------------

def quadratic_roots(g: Poly, real_only: bool):
    """Exact roots of a polynomial of degree 1 or 2 (Fractions, Gauss or surds)."""
    if g.degree == 1:
        return [-g.coeff(0) / g.coeff(1)]
    if g.degree != 2:
        raise ValueError("quadratic_roots expects degree 1 or 2")
    a, b, c = g.coeff(2), g.coeff(1), g.coeff(0)
    disc = b * b - 4 * a * c
    if disc == 0:
        return [-b / (2 * a)]
    if g.field == RATIONAL:
        root = rational_sqrt(disc)
        if isinstance(root, QuadraticSurd) and root.D < 0 and real_only:
            return []
    else:
        root = gaussian_sqrt(disc)
        if root is None:
            return []
    return [(-b + root) / (2 * a), (-b - root) / (2 * a)]


def constant_equations(base, complement, eq: AbelEquation):
    """The per-coefficient quadratics ``w_j K^2 + B_j K + m_j`` as polynomials in ``K``."""
    w = base.deriv() + base * eq.C
    n = max(len(x.coeff_vector()) for x in (w, eq.B, complement))
    W, B, M = (x.coeff_vector(_top(x, n)) for x in (w, eq.B, complement))
    return [Poly((m, b, ww), eq.field) for m, b, ww in zip(M, B, W)]


def _top(x, n):
    # coeff_vector index bound: poly takes degree, trig takes harmonic count
    return n - 1 if isinstance(x, Poly) else (n - 1) // 2


def solve_constant(candidate: DivisorCandidate, eq: AbelEquation):
    """All nonzero ``K`` making ``K*base`` an invariant curve."""
    g = None
    for q in constant_equations(candidate.base, candidate.complement, eq):
        if q.is_zero():
            continue
        g = q if g is None else gcd(g, q)
        if g.is_constant():
            return []
    if g is None or g.is_constant():
        return []
    real_only = eq.field == RATIONAL
    roots = [k for k in quadratic_roots(g.monic(), real_only) if k != 0]
    return sorted(roots, key=sort_key)


# the finder ------------------------------------------------------------------

def _curves_for(candidate, eq):
    ks = solve_constant(candidate, eq)
    candidate.constants = ks
    return [InvariantCurve(candidate.base, k) for k in ks]


def find_invariant_curves(eq: AbelEquation, jobs: int = 1):
    """Every invariant curve of degree one in ``x``, canonically ordered and verified."""
    eq.validate()
    candidates = enumerate_divisors(eq.A, eq.ring)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(lambda c: _curves_for(c, eq), candidates))
    else:
        chunks = [_curves_for(c, eq) for c in candidates]
    curves = sorted((c for chunk in chunks for c in chunk), key=InvariantCurve.sort_key)
    for c in curves:
        ok, _ = verify_invariance(c.p, -1, eq)
        if not ok:
            raise AssertionError(f"finder produced a non-invariant curve {c}")
    return curves


def cofactor_of(curve, eq: AbelEquation) -> Cofactor:
    p = curve.p if isinstance(curve, InvariantCurve) else curve
    ok, _ = verify_invariance(p, -1, eq)
    if not ok:
        raise NotInvariantError("not invariant")
    return Cofactor(eq.A, -(p.deriv() + p * eq.C), eq.const(0))


def verify_invariance(p, c, eq: AbelEquation):
    """Check ``p x + c = 0`` against the invariance identity; return ``(ok, residual)``.

    With ``q = c`` constant the coefficient equations force ``K0 = 0``,
    ``K1 = (p' + pC)/c``, ``K2 = A``; the remaining one is
    ``c^2 A = (c B - (p' + p C)) p`` and the residual is the difference.
    A zero ``c`` never gives a curve of the required form.
    """
    if p.is_zero():
        raise ValueError("p must be nonzero")
    if c == 0:
        return False, eq.A
    w = p.deriv() + p * eq.C
    residual = eq.A.scale(c * c) - (eq.B.scale(c) - w) * p
    return residual.is_zero(), residual


__all__ = [
    "Cofactor", "InvariantCurve", "DivisorCandidate", "enumerate_divisors", "solve_constant",
    "find_invariant_curves", "cofactor_of", "verify_invariance", "quadratic_roots",
    "GAUSSIAN", "Gauss",
]
