"""Exact scalars: rationals, Gaussian rationals and quadratic surds.

Rationals are plain :class:`fractions.Fraction`. :class:`Gauss` is an element
of Q(i), and :class:`QuadraticSurd` is ``a + b*sqrt(D)`` with ``a, b`` in Q or
Q(i) and ``D`` a square-free integer. Arithmetic between a surd and a base
element is closed; two surds only combine when they share ``D``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational

from sympy.ntheory.factor_ import core as _squarefree_core

from .errors import FieldMismatchError

RATIONAL = "rational"
GAUSSIAN = "gaussian"
FIELDS = (RATIONAL, GAUSSIAN)

NEG_INFINITY = float("-inf")


def frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


class Gauss:
    """Gaussian rational ``re + im*i``."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = frac(re)
        self.im = frac(im)

    @staticmethod
    def _mk(re, im):
        g = object.__new__(Gauss)
        g.re = re
        g.im = im
        return g

    @staticmethod
    def lift(x) -> "Gauss":
        if isinstance(x, Gauss):
            return x
        return Gauss(x, 0)

    def conjugate(self):
        return Gauss._mk(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_real(self):
        return self.im == 0

    def __add__(self, other):
        if isinstance(other, Gauss):
            return Gauss._mk(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return Gauss._mk(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Gauss._mk(-self.re, -self.im)

    def __sub__(self, other):
        if isinstance(other, (Gauss, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return Gauss(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, Gauss):
            return Gauss._mk(self.re * other.re - self.im * other.im,
                             self.re * other.im + self.im * other.re)
        if isinstance(other, (int, Fraction)):
            return Gauss._mk(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("Gaussian rational division by zero")
        return Gauss(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, Gauss):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("Gaussian rational division by zero")
            return Gauss(self.re / other, self.im / other)
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = Gauss(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Gauss):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"Gauss({self.re}, {self.im})"

    def __str__(self):
        return format_scalar(self)


def _is_base(x):
    return isinstance(x, (int, Fraction, Gauss))


def squarefree_part(n: int) -> tuple[int, int]:
    """Split a nonzero integer as ``n = s * f**2`` with ``s`` square-free; return ``(s, f)``."""
    if n == 0:
        raise ValueError("zero has no square-free part")
    sign = -1 if n < 0 else 1
    s = int(_squarefree_core(abs(n), 2))
    f = math.isqrt(abs(n) // s)
    return sign * s, f


class QuadraticSurd:
    """``a + b*sqrt(D)``; ``D`` square-free, ``D != 1``; ``b != 0`` for a live instance.

    Build instances through :func:`surd`, which collapses ``b == 0`` back to
    the base field. Over Q(i) the radicand is kept positive (``sqrt(-3)`` is
    stored as ``i*sqrt(3)``).
    """

    __slots__ = ("a", "b", "D")

    def __init__(self, a, b, D: int):
        self.a = a
        self.b = b
        self.D = int(D)

    def _coerce(self, other):
        if isinstance(other, QuadraticSurd):
            if other.D != self.D:
                raise FieldMismatchError(
                    f"surds over different radicands sqrt({self.D}) and sqrt({other.D})")
            return other.a, other.b
        if _is_base(other):
            return other, 0
        return None

    def __add__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return surd(self.a + c[0], self.b + c[1], self.D)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticSurd(-self.a, -self.b, self.D)

    def __sub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return surd(self.a - c[0], self.b - c[1], self.D)

    def __rsub__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        return surd(c[0] - self.a, c[1] - self.b, self.D)

    def __mul__(self, other):
        c = self._coerce(other)
        if c is None:
            return NotImplemented
        a2, b2 = c
        return surd(self.a * a2 + self.b * b2 * self.D, self.a * b2 + self.b * a2, self.D)

    __rmul__ = __mul__

    def conjugate_surd(self):
        """The Galois conjugate ``a - b*sqrt(D)``."""
        return QuadraticSurd(self.a, -self.b, self.D)

    def inverse(self):
        n = self.a * self.a - self.b * self.b * self.D
        if n == 0:
            raise ZeroDivisionError("surd division by zero")
        return surd(self.a / n, -self.b / n, self.D)

    def __truediv__(self, other):
        if isinstance(other, QuadraticSurd):
            return self * other.inverse()
        if _is_base(other):
            if other == 0:
                raise ZeroDivisionError("surd division by zero")
            return surd(self.a / other, self.b / other, self.D)
        return NotImplemented

    def __rtruediv__(self, other):
        if _is_base(other):
            return self.inverse() * other
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = 1, self
        while n:
            if n & 1:
                result = base * result
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QuadraticSurd):
            return self.D == other.D and self.a == other.a and self.b == other.b
        if _is_base(other):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.D))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def is_real(self):
        real = lambda x: not isinstance(x, Gauss) or x.im == 0
        return real(self.a) and real(self.b) and self.D > 0

    def sign(self) -> int:
        """Exact sign of a real surd."""
        if not self.is_real():
            raise ValueError("sign of a non-real surd")
        a, b = frac(_real(self.a)), frac(_real(self.b))
        sa, sb = _sgn(a), _sgn(b)
        if sa == 0 or sa == sb:
            return sb if sa == 0 else sa
        if sb == 0:
            return sa
        # opposite signs: compare a^2 with b^2 D
        return sa if a * a > b * b * self.D else -sa

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __float__(self):
        return float(_real(self.a)) + float(_real(self.b)) * math.sqrt(self.D)

    def __complex__(self):
        root = complex(math.sqrt(self.D)) if self.D > 0 else complex(0, math.sqrt(-self.D))
        return complex(self.a) + complex(self.b) * root

    def __repr__(self):
        return f"QuadraticSurd({self.a!r}, {self.b!r}, {self.D})"

    def __str__(self):
        return format_scalar(self)


def _real(x):
    return x.re if isinstance(x, Gauss) else x


def _sgn(x):
    return (x > 0) - (x < 0)


def surd(a, b, D):
    """``a + b*sqrt(D)`` with ``D`` reduced to its square-free part."""
    if b == 0:
        return a
    D, f = squarefree_part(int(D))
    if f != 1:
        b = b * f
    if D == 1:
        return a + b
    return QuadraticSurd(a, b, D)


def reciprocal(x):
    """Exact ``1/x``; plain ints become Fractions instead of floats."""
    if isinstance(x, int):
        return Fraction(1, x)
    return 1 / x


def sign(x) -> int:
    """Exact sign of a real scalar (Fraction, real Gauss or real surd)."""
    if isinstance(x, QuadraticSurd):
        return x.sign()
    if isinstance(x, Gauss):
        if x.im != 0:
            raise ValueError("sign of a non-real Gaussian rational")
        x = x.re
    return _sgn(x)


def is_rational_square(x: Fraction):
    """Return the rational square root of ``x`` or ``None``."""
    x = frac(x)
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def rational_sqrt(x: Fraction):
    """Exact square root of a rational: a Fraction, or a surd (``D`` may be negative)."""
    x = frac(x)
    if x == 0:
        return Fraction(0)
    r = is_rational_square(abs(x))
    if r is not None and x > 0:
        return r
    # sqrt(n/d) = sqrt(n*d)/d
    s, f = squarefree_part(x.numerator * x.denominator)
    if s == 1:
        return Fraction(f, x.denominator)
    return QuadraticSurd(Fraction(0), Fraction(f, x.denominator), s)


def gaussian_sqrt_exact(z: Gauss):
    """Square root inside Q(i), or ``None`` when ``z`` is not a square there."""
    z = Gauss.lift(z)
    if not z:
        return Gauss(0)
    modulus = is_rational_square(z.norm())
    if modulus is None:
        return None
    x2 = (z.re + modulus) / 2
    y2 = (modulus - z.re) / 2
    x, y = is_rational_square(x2), is_rational_square(y2)
    if x is None or y is None:
        return None
    if z.im < 0:
        y = -y
    root = Gauss(x, y)
    if root * root != z:
        root = Gauss(x, -y)
    return root if root * root == z else None


def gaussian_sqrt(z: Gauss):
    """Square root of a Gaussian rational as an element of Q(i) or Q(i)(sqrt D), D > 1.

    Returns ``None`` when the root lives in no such extension (the radicand's
    modulus is irrational).
    """
    z = Gauss.lift(z)
    exact = gaussian_sqrt_exact(z)
    if exact is not None:
        return exact
    modulus = is_rational_square(z.norm())
    if modulus is None:
        return None
    half = (z.re + modulus) / 2
    if half == 0:
        half = (modulus - z.re) / 2
    s, _ = squarefree_part(half.numerator * half.denominator)
    if s <= 1:
        return None
    b = gaussian_sqrt_exact(z / s)
    if b is None:
        return None
    return QuadraticSurd(Gauss(0), b, s)


def coerce(x, field: str):
    """Bring an int/Fraction/Gauss/surd into the representation used by ``field``."""
    if isinstance(x, QuadraticSurd):
        return x
    if field == RATIONAL:
        if isinstance(x, Gauss):
            if x.im != 0:
                raise FieldMismatchError(f"{x} is not rational")
            return x.re
        return frac(x)
    if field == GAUSSIAN:
        return Gauss.lift(x if isinstance(x, Gauss) else frac(x))
    raise ValueError(f"unknown field {field!r}")


def is_base_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, Gauss))


def to_complex(x) -> complex:
    if isinstance(x, (int, Fraction)):
        return complex(float(x))
    return complex(x)


def to_float(x) -> float:
    c = to_complex(x)
    if c.imag != 0:
        raise ValueError(f"{x} is not real")
    return c.real


def sort_key(x):
    """Deterministic total-order key for any scalar kind."""
    if isinstance(x, QuadraticSurd):
        c = complex(x)
        return (c.real, c.imag, 1, str(x))
    if isinstance(x, Gauss):
        return (float(x.re), float(x.im), 0, (x.re, x.im))
    return (float(x), 0.0, 0, (frac(x), Fraction(0)))


def _format_rational(x: Fraction) -> str:
    x = frac(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def format_scalar(x) -> str:
    """Canonical text: ``n/d``, ``a+b*i``, or ``(a)+(b)*sqrt(D)``."""
    if isinstance(x, QuadraticSurd):
        return f"({format_scalar(x.a)})+({format_scalar(x.b)})*sqrt({x.D})"
    if isinstance(x, Gauss):
        if x.im == 0:
            return _format_rational(x.re)
        if x.re == 0:
            return f"{_format_rational(x.im)}*i"
        sep = "+" if x.im > 0 else "-"
        return f"{_format_rational(x.re)}{sep}{_format_rational(abs(x.im))}*i"
    return _format_rational(x)


def parse_scalar(text: str, field: str = RATIONAL):
    """Inverse of :func:`format_scalar`."""
    text = text.strip().replace(" ", "")
    if "sqrt(" in text:
        head, _, radicand = text.rpartition("*sqrt(")
        D = int(radicand.rstrip(")"))
        a_text, _, b_text = head.partition(")+(")
        a = parse_scalar(a_text.lstrip("("), field)
        b = parse_scalar(b_text.rstrip(")"), field)
        return surd(a, b, D)
    if text.endswith("*i") or text == "i":
        body = text[:-2] if text.endswith("*i") else "1"
        split = max(body.rfind("+"), body.rfind("-"))
        if split > 0:
            re, im = Fraction(body[:split]), Fraction(body[split:])
        else:
            re, im = Fraction(0), Fraction(body)
        return coerce(Gauss(re, im), field)
    return coerce(Fraction(text), field)
