"""Linear dependence of cofactors and Darboux first integrals.

For curves ``p_i x - 1`` the cofactor combination ``sum a_i K_i`` vanishes
(with ``a_0`` attached to ``x = 0``) exactly when ``a_0 = 0``,
``sum a_i = 0`` and ``sum a_i A/p_i = 0``. The last two conditions form a
linear system whose columns are the coefficient vectors of ``A/p_i`` with a
row of ones appended.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .curves import verify_invariance
from .equation import AbelEquation
from .errors import FieldMismatchError, NotInvariantError, OutOfScopeError, PreconditionError
from .scalars import format_scalar, reciprocal, sort_key


# exact linear algebra --------------------------------------------------------

def rref(rows):
    """Reduced row echelon form over any exact field; returns ``(matrix, pivot_columns)``."""
    m = [list(r) for r in rows]
    if not m:
        return m, []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = reciprocal(m[r][c])
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def nullspace(rows, ncols):
    """Basis of ``{v : M v = 0}``, one vector per free column."""
    red, pivots = rref(rows)
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        v = [Fraction(0)] * ncols
        v[free] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -red[i][free]
        basis.append(v)
    return basis


def canonical_vector(v):
    """Scale ``v`` so a rational vector has coprime integer entries and a positive leading entry.

    Vectors with non-rational entries are scaled to a leading entry of 1.
    """
    lead = next(x for x in v if x != 0)
    if all(isinstance(x, (int, Fraction)) for x in v):
        den = math.lcm(*(Fraction(x).denominator for x in v))
        ints = [int(Fraction(x) * den) for x in v]
        g = math.gcd(*ints)
        s = 1 if lead > 0 else -1
        return [Fraction(s * x, g) for x in ints]
    return [x / lead for x in v]


def _lex_key(v):
    return [sort_key(x) for x in v]


# certificates ----------------------------------------------------------------

@dataclass(frozen=True)
class CofactorMatrix:
    """Columns are coefficient vectors of ``A/p_i``; the last row is all ones."""

    columns: tuple
    quotients: tuple

    @property
    def rows(self):
        n = len(self.columns[0])
        body = [[col[j] for col in self.columns] for j in range(n)]
        return body + [[Fraction(1)] * len(self.columns)]


@dataclass(frozen=True)
class DarbouxCertificate:
    alpha0: object
    alphas: tuple
    curves: tuple

    @property
    def integral(self):
        return first_integral(self, self.curves)


def _coeff_len(x):
    return len(x.coeff_vector())


def cofactor_matrix(eq: AbelEquation, curves) -> CofactorMatrix:
    quotients = tuple(c.divide(eq.A) for c in curves)
    n = max(_coeff_len(q) for q in quotients)
    top = n - 1 if not eq.is_trig else (n - 1) // 2
    cols = tuple(tuple(q.coeff_vector(top)) for q in quotients)
    return CofactorMatrix(cols, quotients)


def _check_curves(eq, curves):
    if len(curves) < 1:
        raise PreconditionError("need at least one curve")
    seen = set()
    for c in curves:
        key = (c.base, c.K)
        if key in seen:
            raise PreconditionError("curves must be pairwise distinct")
        seen.add(key)
        if not verify_invariance(c.p, -1, eq)[0]:
            raise NotInvariantError(f"{c} is not an invariant curve")


def dependence_from_quotients(columns):
    """Canonical nonzero ``alpha`` with ``sum alpha_i = 0`` and ``sum alpha_i col_i = 0``, or ``None``."""
    r = len(columns)
    n = len(columns[0])
    rows = [[col[j] for col in columns] for j in range(n)] + [[Fraction(1)] * r]
    try:
        basis = nullspace(rows, r)
    except FieldMismatchError as exc:
        raise OutOfScopeError(
            "out-of-scope: cofactor system mixes different quadratic extensions") from exc
    if not basis:
        return None
    return min((canonical_vector(v) for v in basis), key=_lex_key)


def cofactor_dependence(eq: AbelEquation, curves):
    """A :class:`DarbouxCertificate` when the cofactors of ``curves`` are dependent, else ``None``."""
    curves = tuple(curves)
    _check_curves(eq, curves)
    mat = cofactor_matrix(eq, curves)
    alphas = dependence_from_quotients(mat.columns)
    if alphas is None:
        return None
    cert = DarbouxCertificate(Fraction(0), tuple(alphas), curves)
    verify_certificate(eq, cert)
    return cert


def verify_certificate(eq: AbelEquation, cert: DarbouxCertificate):
    """Re-check both the reduced conditions and the full cofactor identity; raise on failure."""
    if cert.alpha0 != 0:
        raise PreconditionError("alpha0 must vanish")
    if all(a == 0 for a in cert.alphas):
        raise PreconditionError("exponents must not all vanish")
    if sum(cert.alphas) != 0:
        raise PreconditionError("exponents must sum to zero")
    zero = eq.const(0)
    total = zero
    lin = zero
    for a, c in zip(cert.alphas, cert.curves):
        total = total + c.divide(eq.A).scale(a)
        p = c.p
        lin = lin - (p.deriv() + p * eq.C).scale(a)
    if not total.is_zero():
        raise PreconditionError("sum alpha_i A/p_i is not zero")
    # full identity: x^2 block is A * sum(alpha) = 0; x^1 block below; x^0 block is alpha0 C
    if not lin.is_zero():
        raise PreconditionError("sum alpha_i K_i has a nonzero x coefficient")
    return True


def first_integral(cert: DarbouxCertificate, curves=None):
    """The formal product ``prod (p_i x - 1)^alpha_i`` as a dict with a rendered ``expr``."""
    curves = tuple(curves if curves is not None else cert.curves)
    if cert.alpha0 != 0:
        raise PreconditionError("a first integral with a nonzero exponent on x is not admissible")
    if len(curves) != len(cert.alphas):
        raise PreconditionError("one exponent per curve is required")
    if sum(cert.alphas) != 0 or all(a == 0 for a in cert.alphas):
        raise PreconditionError("exponents must be nonzero and sum to zero")
    factors, parts = [], []
    for a, c in zip(cert.alphas, curves):
        if a == 0:
            continue
        factors.append({"curve": str(c), "exponent": format_scalar(a)})
        base = f"({c})"
        parts.append(base if a == 1 else f"{base}^({format_scalar(a)})")
    return {"factors": factors, "expr": "*".join(parts)}


# thresholds ------------------------------------------------------------------

INTEGRABLE_IF_REACHED = "integrable-if-reached"
LIMIT_CYCLE_BOUND = "rational-limit-cycle-bound"
STRICT_CURVE_BOUND = "strict-invariant-curve-bound"


def integrability_threshold(eq: AbelEquation):
    """``(threshold, meaning)`` for equations past the two-curve cases."""
    dA, dB, dC = eq.degrees()
    if dA - dC <= 1:
        raise PreconditionError("threshold not applicable: at most one invariant curve")
    if eq.is_trig and eq.C_is_constant:
        return 4 * dA, STRICT_CURVE_BOUND
    if (dA - dC) % 2 or dA + dC < 2 * dB:
        raise PreconditionError("threshold not applicable: at most two invariant curves")
    if eq.is_trig:
        return 2 * dA + 2 * dC + 4, LIMIT_CYCLE_BOUND
    return dA + dC + 4, INTEGRABLE_IF_REACHED


def lambda_mu_alphas(columns):
    """Exponents from two independent relations, one per half of the columns.

    With ``n`` the column length and ``r >= 2(n + 1)`` columns, the first
    ``n + 1`` columns carry a relation ``lam`` and the rest a relation ``mu``.
    ``alpha = (sum(mu) lam, -sum(lam) mu)`` then sums to zero. If both sums
    vanish that vector is zero and ``(lam, 0)`` is used instead.
    """
    r, n = len(columns), len(columns[0])
    if r < 2 * (n + 1):
        raise PreconditionError(f"need at least {2 * (n + 1)} columns, got {r}")
    k = n + 1

    def relation(cols):
        rows = [[col[j] for col in cols] for j in range(n)]
        basis = nullspace(rows, len(cols))
        return basis[0]

    lam = relation(columns[:k])
    mu = relation(columns[k:])
    sl, sm = sum(lam), sum(mu)
    alphas = [sm * x for x in lam] + [-sl * x for x in mu]
    if all(a == 0 for a in alphas):
        alphas = list(lam) + [Fraction(0)] * len(mu)
    return alphas


def certificate_to_json(cert):
    if cert is None:
        return {"found": False, "alphas": [], "integral": None}
    return {
        "found": True,
        "alpha0": format_scalar(cert.alpha0),
        "alphas": [format_scalar(a) for a in cert.alphas],
        "integral": cert.integral,
    }


__all__ = [
    "CofactorMatrix", "DarbouxCertificate", "cofactor_matrix", "cofactor_dependence",
    "dependence_from_quotients", "verify_certificate", "first_integral",
    "integrability_threshold", "lambda_mu_alphas", "rref", "nullspace", "canonical_vector",
    "certificate_to_json",
]
