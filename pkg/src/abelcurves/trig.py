"""Real trigonometric polynomials ``a0 + sum a_n cos(nt) + b_n sin(nt)``.

Ring arithmetic works on the Fourier coefficients directly and accepts any
real exact scalar (rationals or real quadratic surds). Divisibility, gcd,
factorization and the nonvanishing test go through the Laurent model

    T(t) = z**(-N) * P(z),    z = exp(i t),

where ``P`` has Gaussian-rational coefficients with Hermitian symmetry
``P[N+k] == conj(P[N-k])``. These operations need rational coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .errors import GcdAmbiguousError, PreconditionError
from .poly import Poly, count_real_roots, factor, gcd as poly_gcd
from .scalars import GAUSSIAN, NEG_INFINITY, RATIONAL, Gauss, frac, is_base_scalar, reciprocal, to_float

_I = Gauss(0, 1)


class TrigPoly:
    """Immutable real trigonometric polynomial."""

    field = RATIONAL

    def __init__(self, a0=0, a=(), b=()):
        n = max(len(a), len(b))
        a = list(a) + [0] * (n - len(a))
        b = list(b) + [0] * (n - len(b))
        a = [_real(x) for x in a]
        b = [_real(x) for x in b]
        while a and a[-1] == 0 and b[-1] == 0:
            a.pop()
            b.pop()
        self.a0 = _real(a0)
        self.a = tuple(a)
        self.b = tuple(b)

    @classmethod
    def const(cls, c):
        return cls(c)

    @classmethod
    def cos(cls, n=1, c=1):
        if n == 0:
            return cls(c)
        return cls(0, [0] * (n - 1) + [c])

    @classmethod
    def sin(cls, n=1, c=1):
        if n == 0:
            return cls(0)
        return cls(0, (), [0] * (n - 1) + [c])

    @classmethod
    def from_dict(cls, terms):
        """Build from ``{("c", n): coeff, ("s", n): coeff}`` with ``("c", 0)`` the constant."""
        out = cls(0)
        for (kind, n), c in terms.items():
            out = out + (cls.cos(n, c) if kind == "c" else cls.sin(n, c))
        return out

    def like(self, coeffs):
        """Rebuild from a :meth:`coeff_vector`-style flat list."""
        a0 = coeffs[0] if coeffs else 0
        return TrigPoly(a0, coeffs[1::2], coeffs[2::2])

    # properties ------------------------------------------------------------

    @property
    def degree(self):
        if self.a:
            return len(self.a)
        return 0 if self.a0 != 0 else NEG_INFINITY

    @property
    def N(self):
        return len(self.a)

    def is_zero(self):
        return not self.a and self.a0 == 0

    def is_constant(self):
        return not self.a

    def is_base(self):
        return all(is_base_scalar(x) for x in (self.a0, *self.a, *self.b))

    def harmonic(self, n):
        """``(a_n, b_n)``; ``n = 0`` gives ``(a0, 0)``."""
        if n == 0:
            return self.a0, Fraction(0)
        if n <= len(self.a):
            return self.a[n - 1], self.b[n - 1]
        return Fraction(0), Fraction(0)

    def coeff_vector(self, n=None):
        """``[a0, a1, b1, ..., an, bn]``."""
        n = self.N if n is None else n
        out = [self.a0]
        for k in range(1, n + 1):
            out.extend(self.harmonic(k))
        return out

    @property
    def lc(self):
        """First nonzero entry of the highest harmonic pair."""
        if self.is_zero():
            raise PreconditionError("zero trigonometric polynomial has no leading coefficient")
        if not self.a:
            return self.a0
        an, bn = self.a[-1], self.b[-1]
        return an if an != 0 else bn

    def monic(self):
        """Canonical representative: highest harmonic pair has first nonzero entry 1."""
        if self.is_zero():
            return self
        lc = self.lc
        return self if lc == 1 else self.scale(1 / lc)

    # arithmetic --------------------------------------------------------------

    def _lift(self, other):
        if isinstance(other, TrigPoly):
            return other
        return TrigPoly(other)

    def __add__(self, other):
        o = self._lift(other)
        n = max(self.N, o.N)
        return self.like([x + y for x, y in zip(self.coeff_vector(n), o.coeff_vector(n))])

    __radd__ = __add__

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c):
        return TrigPoly(c * self.a0, [c * x for x in self.a], [c * x for x in self.b])

    def _fourier(self):
        # c_k = (a_k - i b_k)/2 for k >= 1, stored as (re, im) pairs over the real scalars
        out = [(self.a0, 0)]
        for an, bn in zip(self.a, self.b):
            out.append((an / 2, -bn / 2))
        return out

    def __mul__(self, other):
        if not isinstance(other, TrigPoly):
            return self.scale(other)
        if self.is_zero() or other.is_zero():
            return TrigPoly(0)
        f, g = self._fourier(), other._fourier()
        n, m = len(f) - 1, len(g) - 1

        def coef(c, k):
            re, im = c[abs(k)]
            return (re, im) if k >= 0 else (re, -im)

        out = []
        for s in range(n + m + 1):
            re, im = 0, 0
            for j in range(max(-n, s - m), min(n, s + m) + 1):
                x, y = coef(f, j), coef(g, s - j)
                if x == (0, 0) or y == (0, 0):
                    continue
                re = re + x[0] * y[0] - x[1] * y[1]
                im = im + x[0] * y[1] + x[1] * y[0]
            out.append((re, im))
        a0 = out[0][0]
        return TrigPoly(a0, [2 * c[0] for c in out[1:]], [-2 * c[1] for c in out[1:]])

    __rmul__ = __mul__

    def __pow__(self, n):
        result = TrigPoly(1)
        for _ in range(n):
            result = result * self
        return result

    def deriv(self):
        n = range(1, self.N + 1)
        return TrigPoly(0, [k * bk for k, bk in zip(n, self.b)], [-k * ak for k, ak in zip(n, self.a)])

    def __eq__(self, other):
        if isinstance(other, TrigPoly):
            return (self.a0, self.a, self.b) == (other.a0, other.a, other.b)
        if is_base_scalar(other):
            return self == TrigPoly(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.a0, self.a, self.b))

    def __bool__(self):
        return not self.is_zero()

    def evaluate(self, t):
        """Floating-point value at ``t`` (scalar or numpy array)."""
        import numpy as np

        acc = to_float(self.a0) + 0 * np.asarray(t, dtype=float)
        for k, (an, bn) in enumerate(zip(self.a, self.b), start=1):
            acc = acc + to_float(an) * np.cos(k * t) + to_float(bn) * np.sin(k * t)
        return acc

    def __call__(self, t):
        return self.evaluate(t)

    def exact_div(self, other):
        ok, q = trig_divides(other, self)
        if not ok:
            raise PreconditionError("trigonometric division is not exact")
        return q

    def divides(self, other):
        return trig_divides(self, other)

    def __str__(self):
        from .frontend import render
        return render(self)

    def __repr__(self):
        return f"TrigPoly({self.a0!r}, {list(self.a)!r}, {list(self.b)!r})"


def _real(x):
    if isinstance(x, Gauss):
        if x.im != 0:
            raise PreconditionError("trigonometric coefficients must be real")
        return x.re
    if isinstance(x, (int, Fraction)):
        return frac(x)
    return x


def trig_mul(a: TrigPoly, b: TrigPoly) -> TrigPoly:
    return a * b


def trig_derivative(a: TrigPoly) -> TrigPoly:
    return a.deriv()


# Laurent model -----------------------------------------------------------

def _require_base(*xs):
    for x in xs:
        if not x.is_base():
            raise PreconditionError("Laurent-model operations need rational coefficients")


def to_laurent(a: TrigPoly) -> Poly:
    """``P(z)`` of degree ``2N`` with ``T = z**-N * P``."""
    _require_base(a)
    N = a.N
    c = [Gauss(0)] * (2 * N + 1)
    c[N] = Gauss(a.a0)
    for k in range(1, N + 1):
        ak, bk = a.harmonic(k)
        c[N + k] = Gauss(ak / 2, -bk / 2)
        c[N - k] = Gauss(ak / 2, bk / 2)
    return Poly(c, GAUSSIAN)


def from_laurent(P: Poly, N: int | None = None) -> TrigPoly:
    """Inverse of :func:`to_laurent`; ``P`` must be Hermitian about offset ``N``."""
    if P.is_zero():
        return TrigPoly(0)
    if N is None:
        if P.degree % 2:
            raise PreconditionError("Laurent model of odd degree has no trig counterpart")
        N = P.degree // 2
    c = lambda j: P.coeff(j) if j >= 0 else Gauss(0)
    if c(N).im != 0:
        raise PreconditionError("Laurent model is not Hermitian (complex constant term)")
    a, b = [], []
    for k in range(1, N + 1):
        hi, lo = Gauss.lift(c(N + k)), Gauss.lift(c(N - k))
        if hi.conjugate() != lo:
            raise PreconditionError("Laurent model is not Hermitian")
        a.append(2 * hi.re)
        b.append(-2 * hi.im)
    if P.degree > 2 * N:
        raise PreconditionError("Laurent model exceeds its offset")
    return TrigPoly(c(N).re, a, b)


def reciprocal_conjugate(P: Poly) -> Poly:
    """``z**deg * conj(P(1/conj(z)))``: reversed, conjugated coefficients."""
    return Poly([Gauss.lift(x).conjugate() for x in reversed(P.coeffs)], GAUSSIAN)


def _hermitian_from_self_reciprocal(g: Poly) -> TrigPoly:
    """Scale a self-reciprocal ``g`` (``g* = lam*g``) so it is Hermitian, then read it as a trig polynomial."""
    gs = reciprocal_conjugate(g)
    lam = gs.lc / g.lc
    if g.scale(lam) != gs:
        raise PreconditionError("polynomial is not self-reciprocal")
    mu = _I if lam == -1 else 1 + lam
    return from_laurent(g.scale(mu))


def trig_divides(a: TrigPoly, b: TrigPoly):
    """``(True, q)`` when ``b == a*q`` for a trigonometric polynomial ``q``, else ``(False, None)``."""
    if a.is_zero():
        raise PreconditionError("zero divides nothing")
    if b.is_zero():
        return True, TrigPoly(0)
    if a.is_constant():
        return True, b.scale(reciprocal(a.a0))
    if b.N < a.N:
        return False, None
    _require_base(a, b)
    q, r = to_laurent(b).divrem(to_laurent(a))
    if not r.is_zero():
        return False, None
    return True, from_laurent(q, b.N - a.N)


def trig_nonvanishing(a: TrigPoly) -> bool:
    """True iff ``a(t) != 0`` for every real ``t``.

    Uses the half-angle substitution ``u = tan(t/2)``: ``(1+u^2)^N a(t)`` is a
    real polynomial ``Q(u)``; ``a`` vanishes iff ``Q`` has a real root or
    ``a(pi) == 0``.
    """
    if a.is_zero():
        raise PreconditionError("the zero polynomial vanishes everywhere")
    if a.is_constant():
        return True
    _require_base(a)
    N = a.N
    at_pi = a.a0 + sum(an * (-1) ** k for k, an in enumerate(a.a, start=1))
    if at_pi == 0:
        return False
    P = to_laurent(a)
    plus = Poly([1, _I], GAUSSIAN)
    minus = Poly([1, -_I], GAUSSIAN)
    plus_pows = [plus ** j for j in range(2 * N + 1)]
    minus_pows = [minus ** j for j in range(2 * N + 1)]
    Q = Poly.zero(GAUSSIAN)
    for k in range(-N, N + 1):
        ck = P.coeff(N + k)
        if ck == 0:
            continue
        Q = Q + (plus_pows[N + k] * minus_pows[N - k]).scale(ck)
    if not Q.imag_part().is_zero():
        raise AssertionError("half-angle polynomial is not real")
    return count_real_roots(Q.real_part()) == 0


# gcd and orbit factorization ----------------------------------------------

def trig_gcd(a: TrigPoly, b: TrigPoly) -> TrigPoly:
    """Greatest common divisor, normalized with :meth:`TrigPoly.monic`.

    Defined when at least one input is nonvanishing on R; when both vanish and
    the common Laurent factor has unit-circle roots the result is not
    well defined and :class:`GcdAmbiguousError` is raised.
    """
    if a.is_zero() and b.is_zero():
        raise PreconditionError("gcd(0, 0) is undefined")
    if a.is_zero():
        return b.monic()
    if b.is_zero():
        return a.monic()
    if a.is_constant() or b.is_constant():
        return TrigPoly(1)
    _require_base(a, b)
    g = poly_gcd(to_laurent(a), to_laurent(b))
    if g.degree == 0:
        return TrigPoly(1)
    if g.degree % 2:
        raise GcdAmbiguousError("common factor has an unpaired unit-circle root")
    out = _hermitian_from_self_reciprocal(g).monic()
    if not trig_nonvanishing(out) and not (trig_nonvanishing(a) or trig_nonvanishing(b)):
        raise GcdAmbiguousError("both inputs vanish on R and share unit-circle roots")
    return out


@dataclass(frozen=True)
class OrbitFactor:
    """One block of the Laurent root orbit factorization.

    ``laurent`` holds the Q(i)-irreducible factors of ``P(z)`` closed under
    ``rho -> 1/conj(rho)``; ``trig`` is the monic real factor they generate.
    """

    laurent: tuple
    multiplicity: int
    trig: TrigPoly
    vanishing: bool
    numeric: bool = False

    @property
    def orbit_size(self):
        return len(self.laurent)


def trig_divisor_orbits(a: TrigPoly):
    """Complete orbit factorization of a non-constant rational trig polynomial.

    Nonvanishing orbits are the building blocks of every nonvanishing divisor.
    Unit-circle factors of odd degree cannot be grouped canonically (the ring
    is only half-factorial there), so they are lumped into one vanishing
    block.
    """
    if a.is_zero() or a.is_constant():
        raise PreconditionError("orbit factorization needs a non-constant element")
    _require_base(a)
    P = to_laurent(a)
    factors = factor(P)
    remaining = dict(factors)
    orbits = []
    odd_block = []
    for f, m in factors:
        if f not in remaining:
            continue
        del remaining[f]
        fs = reciprocal_conjugate(f).monic()
        if fs == f:
            if f.degree % 2:
                odd_block.append((f, m))
                continue
            tp = _hermitian_from_self_reciprocal(f).monic()
            orbits.append(OrbitFactor((f,), m, tp, not trig_nonvanishing(tp)))
        else:
            ms = remaining.pop(fs, None)
            if ms != m:
                raise AssertionError("conjugate-reciprocal partner missing from factorization")
            tp = _hermitian_from_self_reciprocal(f * fs).monic()
            orbits.append(OrbitFactor((f, fs), m, tp, False))
    if odd_block:
        g = Poly.const(1, GAUSSIAN)
        for f, m in odd_block:
            g = g * f ** m
        tp = _hermitian_from_self_reciprocal(g).monic()
        orbits.append(OrbitFactor(tuple(f for f, _ in odd_block), 1, tp, True))
    orbits.sort(key=lambda o: (o.vanishing, o.trig.N, [float(x) for x in o.trig.coeff_vector()]))
    return orbits


def orbit_unit(a: TrigPoly, orbits) -> Fraction:
    """The constant ``u`` with ``a == u * prod(orbit.trig ** multiplicity)``."""
    prod_ = TrigPoly(1)
    for o in orbits:
        prod_ = prod_ * o.trig ** o.multiplicity
    return a.lc / prod_.lc


def nonvanishing_divisors(orbits):
    """All monic non-constant products of nonvanishing orbit factors."""
    good = [o for o in orbits if not o.vanishing]
    out = []
    for exps in product(*[range(o.multiplicity + 1) for o in good]):
        if not any(exps):
            continue
        d = TrigPoly(1)
        for o, e in zip(good, exps):
            d = d * o.trig ** e
        out.append(d.monic())
    return out


def sample_points(n: int):
    """``n`` equispaced points on ``[0, 2*pi)``."""
    return [2 * math.pi * j / n for j in range(n)]
