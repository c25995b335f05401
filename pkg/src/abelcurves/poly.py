"""Dense univariate polynomials over Q and Q(i).

Coefficients are stored low degree first. Arithmetic is generic over the
scalar kinds of :mod:`abelcurves.scalars`, so a polynomial over Q may be
scaled by a quadratic surd and keep working; factorization and real-root
queries require base-field coefficients.
"""

from __future__ import annotations

from fractions import Fraction

import sympy

from .errors import FieldMismatchError, PreconditionError
from .scalars import (
    GAUSSIAN,
    NEG_INFINITY,
    RATIONAL,
    Gauss,
    coerce,
    format_scalar,
    frac,
    is_base_scalar,
    sign,
    to_complex,
)

_T = sympy.Symbol("t")


class Poly:
    """Immutable polynomial ``sum(coeffs[k] * t**k)`` over ``field``."""

    def __init__(self, coeffs=(), field: str = RATIONAL):
        if field not in (RATIONAL, GAUSSIAN):
            raise ValueError(f"unknown field {field!r}")
        cs = [coerce(c, field) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self.field = field

    # construction helpers ------------------------------------------------

    @classmethod
    def zero(cls, field=RATIONAL):
        return cls((), field)

    @classmethod
    def const(cls, c, field=RATIONAL):
        return cls((c,), field)

    @classmethod
    def t(cls, field=RATIONAL):
        return cls((0, 1), field)

    @classmethod
    def from_roots(cls, roots, field=RATIONAL):
        p = cls.const(1, field)
        for r in roots:
            p = p * cls((-r, 1), field)
        return p

    def like(self, coeffs):
        return Poly(coeffs, self.field)

    # basic properties ----------------------------------------------------

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INFINITY

    @property
    def lc(self):
        if not self.coeffs:
            raise PreconditionError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    def is_base(self):
        """True when every coefficient lies in Q (resp. Q(i)), no surds."""
        return all(is_base_scalar(c) for c in self.coeffs)

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else coerce(0, self.field)

    def coeff_vector(self, n=None):
        """Coefficients of ``t**0 .. t**n`` (default: up to the degree)."""
        n = len(self.coeffs) - 1 if n is None else n
        return [self.coeff(k) for k in range(n + 1)]

    # arithmetic ----------------------------------------------------------

    def _check(self, other):
        if not isinstance(other, Poly):
            return None
        if other.field != self.field:
            raise FieldMismatchError(f"cannot combine {self.field} and {other.field} polynomials")
        return other

    def _lift(self, other):
        if isinstance(other, Poly):
            return self._check(other)
        return Poly.const(other, self.field)

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return self.like([self.coeff(k) + o.coeff(k) for k in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return self.like([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        o = self._check(other)
        if self.is_zero() or o.is_zero():
            return self.like(())
        out = [0] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(o.coeffs):
                out[i + j] = a * b + out[i + j]
        return self.like(out)

    __rmul__ = __mul__

    def scale(self, c):
        return self.like([c * a for a in self.coeffs])

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = Poly.const(1, self.field), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.field == other.field and self.coeffs == other.coeffs
        if is_base_scalar(other):
            return self == Poly.const(other, self.field)
        return NotImplemented

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __bool__(self):
        return bool(self.coeffs)

    def deriv(self):
        return self.like([k * c for k, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evaluate(self, x):
        """Floating-point evaluation (complex for Gaussian fields, broadcasting over numpy arrays)."""
        acc = 0
        cs = [to_complex(c) for c in self.coeffs]
        if all(c.imag == 0 for c in cs):
            cs = [c.real for c in cs]
        for c in reversed(cs):
            acc = acc * x + c
        return acc

    def monic(self):
        if self.is_zero():
            return self
        return self.scale(1 / self.lc) if self.lc != 1 else self

    def conjugate(self):
        """Coefficient-wise complex conjugate (identity over Q)."""
        if self.field == RATIONAL:
            return self
        return self.like([c.conjugate() for c in self.coeffs])

    def real_part(self):
        return Poly([_re(c) for c in self.coeffs], RATIONAL)

    def imag_part(self):
        return Poly([_im(c) for c in self.coeffs], RATIONAL)

    def to_field(self, field):
        return Poly(self.coeffs, field)

    # division ------------------------------------------------------------

    def divrem(self, other):
        return divrem(self, other)

    def exact_div(self, other):
        q, r = divrem(self, other)
        if not r.is_zero():
            raise PreconditionError("division is not exact")
        return q

    def divides(self, other):
        """``(True, quotient)`` when ``self`` divides ``other`` exactly."""
        if self.is_zero():
            raise PreconditionError("zero polynomial divides nothing")
        q, r = divrem(other, self)
        return (True, q) if r.is_zero() else (False, None)

    def __str__(self):
        from .frontend import render
        return render(self)

    def __repr__(self):
        return f"Poly([{', '.join(format_scalar(c) for c in self.coeffs)}], {self.field!r})"


def _re(c):
    return c.re if isinstance(c, Gauss) else frac(c)


def _im(c):
    return c.im if isinstance(c, Gauss) else Fraction(0)


def divrem(a: Poly, b: Poly):
    """Euclidean division ``a = q*b + r`` with ``deg r < deg b``."""
    if a.field != b.field:
        raise FieldMismatchError(f"cannot divide {a.field} by {b.field} polynomial")
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    r = list(a.coeffs)
    db = len(b.coeffs) - 1
    inv = 1 / b.lc
    q = [0] * max(len(r) - db, 0)
    for k in range(len(r) - 1 - db, -1, -1):
        c = r[k + db] * inv
        q[k] = c
        if c == 0:
            continue
        for j, bc in enumerate(b.coeffs):
            r[k + j] = r[k + j] - c * bc
    return a.like(q), a.like(r[:db])


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    if a.field != b.field:
        raise FieldMismatchError("gcd of polynomials over different fields")
    if a.is_zero() and b.is_zero():
        raise PreconditionError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, divrem(a, b)[1]
    return a.monic()


def derivative(a: Poly) -> Poly:
    return a.deriv()


# conversion to / from sympy (used for factorization only) -----------------

def _to_sympy_scalar(c):
    if isinstance(c, Gauss):
        return sympy.Rational(c.re.numerator, c.re.denominator) + sympy.I * sympy.Rational(
            c.im.numerator, c.im.denominator)
    c = frac(c)
    return sympy.Rational(c.numerator, c.denominator)


def _from_sympy_scalar(c, field):
    re, im = sympy.re(c), sympy.im(c)
    g = Gauss(Fraction(int(re.p), int(re.q)), Fraction(int(im.p), int(im.q)))
    return coerce(g, field)


def to_sympy(a: Poly):
    if not a.is_base():
        raise PreconditionError("sympy conversion needs base-field coefficients")
    domain = "QQ_I" if a.field == GAUSSIAN else "QQ"
    return sympy.Poly([_to_sympy_scalar(c) for c in reversed(a.coeffs)] or [0], _T, domain=domain)


def from_sympy(p, field) -> Poly:
    return Poly([_from_sympy_scalar(c, field) for c in reversed(p.all_coeffs())], field)


def factor(a: Poly):
    """Irreducible monic factors with multiplicities; ``a == a.lc * prod(f**m)``.

    Over Q the factors are irreducible over Q; over Q(i) they are irreducible
    over Q(i).
    """
    if a.is_zero() or a.is_constant():
        raise PreconditionError("factor needs a non-constant polynomial")
    if a.field == RATIONAL:
        _, fl = to_sympy(a).factor_list()
        out = [(from_sympy(f, a.field).monic(), m) for f, m in fl]
    else:
        out = [(f, m) for g, m in squarefree_decomposition(a) for f in _gaussian_squarefree_factors(g)]
    out.sort(key=lambda fm: (fm[0].degree, [_key(c) for c in fm[0].coeffs], fm[1]))
    return out


def taylor_shift(a: Poly, c) -> Poly:
    """``a(t + c)``."""
    out = Poly.zero(a.field)
    lin = Poly((c, 1), a.field)
    for coef in reversed(a.coeffs):
        out = out * lin + coef
    return out


def _gaussian_squarefree_factors(g: Poly):
    """Irreducible factors over Q(i) of a square-free ``g`` (Trager's norm method).

    For a shift ``s`` making ``N(t) = h(t) * conj(h)(t)``, ``h = g(t - s i)``,
    square-free over Q, each Q-irreducible factor ``n_j`` of ``N`` gives the
    Q(i)-irreducible factor ``gcd(h, n_j)`` of ``h``.
    """
    if g.degree == 1:
        return [g.monic()]
    for shift in (0, 1, -1, 2, -2, 3, -3, 4, -4, 5, -5):
        h = taylor_shift(g, Gauss(0, -shift))
        norm = h * h.conjugate()
        norm_q = norm.real_part()
        if not gcd(norm_q, norm_q.deriv()).is_constant():
            continue
        _, fl = to_sympy(norm_q).factor_list()
        out = []
        for f, _ in fl:
            fg = from_sympy(f, RATIONAL).to_field(GAUSSIAN)
            piece = gcd(h, fg)
            if not piece.is_constant():
                out.append(taylor_shift(piece, Gauss(0, shift)).monic())
        return out
    _, fl = to_sympy(g).factor_list()
    return [from_sympy(f, GAUSSIAN).monic() for f, _ in fl]


def _key(c):
    g = Gauss.lift(c) if not isinstance(c, Gauss) else c
    return (g.re, g.im)


def expand_factors(lc, factors, field=RATIONAL) -> Poly:
    p = Poly.const(lc, field)
    for f, m in factors:
        p = p * f ** m
    return p


def squarefree_decomposition(a: Poly):
    """Yun's algorithm: ``[(g_1, 1), (g_2, 2), ...]`` with pairwise coprime square-free ``g_k``."""
    if a.is_constant():
        return []
    out = []
    a = a.monic()
    b = gcd(a, a.deriv())
    c = a.exact_div(b)
    d = a.deriv().exact_div(b) - c.deriv()
    k = 1
    while not c.is_constant():
        g = gcd(c, d)
        if not g.is_constant():
            out.append((g, k))
        c = c.exact_div(g)
        d = d.exact_div(g) - c.deriv()
        k += 1
    return out


# real roots -------------------------------------------------------------

def sturm_sequence(a: Poly):
    if a.field != RATIONAL or not a.is_base():
        raise PreconditionError("Sturm sequences need rational coefficients")
    seq = [a, a.deriv()]
    while not seq[-1].is_zero():
        r = divrem(seq[-2], seq[-1])[1]
        seq.append(-r)
    return [s for s in seq if not s.is_zero()]


def _variations(signs):
    signs = [s for s in signs if s != 0]
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def _sign_at(p: Poly, x):
    if x == "+inf":
        return sign(p.lc)
    if x == "-inf":
        return sign(p.lc) * (-1 if p.degree % 2 else 1)
    return sign(p(frac(x)))


def count_real_roots(a: Poly, lo=None, hi=None) -> int:
    """Number of distinct real roots of a rational polynomial in ``(lo, hi]`` (default: all of R)."""
    if a.is_zero():
        raise PreconditionError("the zero polynomial vanishes everywhere")
    if a.is_constant():
        return 0
    seq = sturm_sequence(a)
    lo = "-inf" if lo is None else lo
    hi = "+inf" if hi is None else hi
    return _variations([_sign_at(s, lo) for s in seq]) - _variations([_sign_at(s, hi) for s in seq])


def real_part_gcd(a: Poly) -> Poly:
    """Rational polynomial whose real roots are exactly the real roots of ``a``."""
    if a.field == RATIONAL:
        return a
    re, im = a.real_part(), a.imag_part()
    if im.is_zero():
        return re
    if re.is_zero():
        return im
    return gcd(re, im)


def nonvanishing_on_reals(a: Poly) -> bool:
    """True iff ``a`` has no real root."""
    if a.is_zero():
        raise PreconditionError("the zero polynomial vanishes everywhere")
    if not a.is_base():
        raise PreconditionError("real-root test needs base-field coefficients")
    return count_real_roots(real_part_gcd(a)) == 0
