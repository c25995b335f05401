"""Abel equations with prescribed invariant curves.

Three constructions, each followed by an exact invariance check:

* ``gen_single``: ``A = p m``, ``B = -(m + p' + p C)``.
* ``gen_pair``: ``p1 = q s1``, ``p2 = q (s1 + k qhat)``, ``A = q s1 s2 s`` with
  ``s = q' + q (C + qhat'/qhat)``.
* ``gen_proportional``: ``A = K p (p' + p C)``, ``B = -(K + 1)(p' + p C)``.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .curves import InvariantCurve, verify_invariance
from .equation import AbelEquation
from .errors import InternalInconsistency, PreconditionError
from .frontend import POLY_GAUSSIAN, POLY_RATIONAL, TRIG, ring_of
from .poly import Poly, gcd as poly_gcd, nonvanishing_on_reals
from .scalars import Gauss
from .trig import TrigPoly, trig_divides, trig_gcd, trig_nonvanishing

MAX_RETRIES = 256


def _nonvanishing(x):
    return trig_nonvanishing(x) if isinstance(x, TrigPoly) else nonvanishing_on_reals(x)


def _check_curve_poly(p, name="p"):
    if p.is_zero() or p.is_constant():
        raise PreconditionError(f"{name} must be non-constant")
    if not _nonvanishing(p):
        raise PreconditionError(f"{name} vanishes somewhere on R")


def _curve(p):
    base = p.monic()
    return InvariantCurve(base, p.lc if not base == p else 1)


def _verify(eq, curves):
    for c in curves:
        if not verify_invariance(c.p, -1, eq)[0]:
            raise InternalInconsistency(f"constructed curve {c} is not invariant")


def gen_single(p, m, C):
    """Equation for which ``p x - 1 = 0`` is invariant."""
    _check_curve_poly(p)
    if m.is_zero():
        raise PreconditionError("m must be nonzero")
    if C.is_zero():
        raise PreconditionError("C must be nonzero")
    A = p * m
    B = -(m + p.deriv() + p * C)
    if B.is_zero():
        raise PreconditionError("construction gives B = 0")
    eq = AbelEquation(A, B, C, ring_of(p)).validate()
    _verify(eq, [_curve(p)])
    return eq


def _divides(a, b):
    return trig_divides(a, b) if isinstance(a, TrigPoly) else a.divides(b)


def _gcd(a, b):
    return trig_gcd(a, b) if isinstance(a, TrigPoly) else poly_gcd(a, b)


def gen_pair(q, s1, k, qhat, C):
    """Equation with the two invariant curves ``q s1 x - 1`` and ``q (s1 + k qhat) x - 1``."""
    if k == 0:
        raise PreconditionError("k must be nonzero")
    if C.is_zero():
        raise PreconditionError("C must be nonzero")
    if qhat.is_zero():
        raise PreconditionError("qhat must be nonzero")
    if not qhat.is_constant():
        if q.is_constant() or not _divides(qhat, q ** int(qhat.degree))[0]:
            raise PreconditionError("qhat must be a product of irreducible factors of q")
    s2 = s1 + qhat.scale(k)
    if s1.is_zero() or s2.is_zero():
        raise PreconditionError("s1 and s2 must be nonzero")
    if not _gcd(s1, s2).is_constant():
        raise PreconditionError("gcd(s1, s1 + k qhat) must be 1")
    p1, p2 = q * s1, q * s2
    _check_curve_poly(p1, "p1 = q s1")
    _check_curve_poly(p2, "p2 = q s2")
    ok, log_term = _divides(qhat, q * qhat.deriv())
    if not ok:
        raise PreconditionError("q qhat'/qhat is not a ring element")
    s = q.deriv() + q * C + log_term
    if s.is_zero():
        raise PreconditionError("construction gives s = 0")
    A = q * s1 * s2 * s
    B = -(A.exact_div(p1) + p1.deriv() + p1 * C)
    if B.is_zero():
        raise PreconditionError("construction gives B = 0")
    eq = AbelEquation(A, B, C, ring_of(A)).validate()
    try:
        _verify(eq, [_curve(p1), _curve(p2)])
    except InternalInconsistency as exc:
        raise InternalInconsistency("sign-resolution inconsistency") from exc
    return eq


def gen_proportional(p, K, C):
    """Equation with the proportional curves ``p x - 1`` and ``K p x - 1``."""
    K = Fraction(K) if not isinstance(K, Gauss) else K
    if K in (0, 1):
        raise PreconditionError("K must differ from 0 and 1")
    if K == -1:
        raise PreconditionError("K = -1 forces B = 0 (Bernoulli case, excluded)")
    _check_curve_poly(p)
    w = p.deriv() + p * C
    if w.is_zero():
        raise PreconditionError("p' + p C must be nonzero")
    A = (p * w).scale(K)
    B = w.scale(-(K + 1))
    eq = AbelEquation(A, B, C, ring_of(p)).validate()
    c1 = _curve(p)
    _verify(eq, [c1, InvariantCurve(c1.base, c1.K * K)])
    return eq


# random instances ---------------------------------------------------------

@dataclass(frozen=True)
class GeneratorSpec:
    ring: str
    mode: str = "random"
    seed: int = 0
    max_deg_A: int = 8


def _rat(rng, lo=-4, hi=4, dens=(1, 1, 2)):
    return Fraction(rng.randint(lo, hi), rng.choice(dens))


def _nz(rng, lo=-4, hi=4):
    while True:
        x = _rat(rng, lo, hi)
        if x:
            return x


def _scalar(rng, ring):
    if ring == POLY_GAUSSIAN and rng.random() < 0.5:
        return Gauss(_rat(rng, -3, 3), _rat(rng, -3, 3))
    return _rat(rng)


def _field(ring):
    return "gaussian" if ring == POLY_GAUSSIAN else "rational"


def _rand_elem(rng, ring, deg, nonzero=True):
    """Random element of exact degree ``deg`` (``deg >= 0``)."""
    if ring == TRIG:
        a = [_rat(rng) for _ in range(deg)]
        b = [_rat(rng) for _ in range(deg)]
        if deg:
            while a[-1] == 0 and b[-1] == 0:
                a[-1], b[-1] = _rat(rng), _rat(rng)
        a0 = _nz(rng) if deg == 0 and nonzero else _rat(rng)
        return TrigPoly(a0, a, b)
    cs = [_scalar(rng, ring) for _ in range(deg)] + [_nz(rng)]
    return Poly(cs, _field(ring))


def _rand_irreducible_nonvanishing(rng, ring):
    """Cheap certified nonvanishing building block (degree 1 or 2 poly, degree 1 trig)."""
    if ring == TRIG:
        a, b = _rat(rng, -2, 2), _rat(rng, -2, 2)
        if a == 0 and b == 0:
            a = Fraction(1)
        c = Fraction(rng.randint(1, 3)) + abs(a) + abs(b)
        return TrigPoly(c * rng.choice((1, -1)), [a], [b])
    if ring == POLY_GAUSSIAN and rng.random() < 0.6:
        re, im = _rat(rng, -3, 3), _nz(rng, -3, 3)
        return Poly([Gauss(-re, -im), 1], "gaussian")
    a = _rat(rng, -4, 4)
    b = a * a / 4 + Fraction(rng.randint(1, 4), rng.choice((1, 2)))
    return Poly([b, a, 1], _field(ring))


def _rand_nonvanishing(rng, ring, max_deg):
    p = None
    while True:
        f = _rand_irreducible_nonvanishing(rng, ring)
        if p is not None and p.degree + f.degree > max_deg:
            break
        p = f if p is None else p * f
        if rng.random() < 0.5:
            break
    return p


def _const(ring, c=1):
    return TrigPoly(c) if ring == TRIG else Poly.const(c, _field(ring))


def _single(rng, ring, cap):
    p = _rand_nonvanishing(rng, ring, max(cap - 1, 1))
    if p.degree >= cap:
        raise PreconditionError("cap too small")
    m = _rand_elem(rng, ring, rng.randint(0, cap - p.degree))
    C = _rand_elem(rng, ring, rng.randint(0, 2))
    return gen_single(p, m, C), [_curve(p)]


def _pair(rng, ring, cap):
    C = _rand_elem(rng, ring, rng.randint(0, 1 if ring == TRIG else 2))
    if rng.random() < 0.5:
        q = _const(ring)
        s1 = _rand_nonvanishing(rng, ring, 2)
        qhat = _const(ring)
    else:
        q = _rand_irreducible_nonvanishing(rng, ring)
        s1 = _const(ring, _nz(rng)) if rng.random() < 0.5 else _rand_irreducible_nonvanishing(rng, ring)
        qhat = q if rng.random() < 0.5 else _const(ring)
    k = _nz(rng)
    eq = gen_pair(q, s1, k, qhat, C)
    if eq.A.degree > cap:
        raise PreconditionError("degree cap exceeded")
    s2 = s1 + qhat.scale(k)
    return eq, [_curve(q * s1), _curve(q * s2)]


def _proportional(rng, ring, cap):
    C = _rand_elem(rng, ring, rng.randint(0, 2))
    p = _rand_nonvanishing(rng, ring, max(1, (cap - C.degree) // 2))
    K = _nz(rng)
    eq = gen_proportional(p, K, C)
    if eq.A.degree > cap:
        raise PreconditionError("degree cap exceeded")
    c1 = _curve(p)
    return eq, [c1, InvariantCurve(c1.base, c1.K * K)]


_MODES = {"single": _single, "pair": _pair, "proportional": _proportional}


def random_instance(seed, ring=POLY_RATIONAL, max_deg_A=None, mode="random"):
    """Reproducible ``(equation, prescribed_curves)``; ``mode`` in single/pair/proportional/random."""
    if ring not in (POLY_RATIONAL, POLY_GAUSSIAN, TRIG):
        raise ValueError(f"unknown ring {ring!r}")
    cap = max_deg_A if max_deg_A is not None else (4 if ring == TRIG else 8)
    if cap < 1:
        raise PreconditionError("degree cap must be at least 1")
    rng = random.Random(f"{ring}:{mode}:{seed}")
    for _ in range(MAX_RETRIES):
        m = mode if mode != "random" else rng.choice(sorted(_MODES))
        try:
            eq, curves = _MODES[m](rng, ring, cap)
        except PreconditionError:
            continue
        if eq.A.degree <= cap:
            return eq, sorted(curves, key=InvariantCurve.sort_key)
    raise PreconditionError(f"no valid {mode} instance for cap {cap} after {MAX_RETRIES} retries")
