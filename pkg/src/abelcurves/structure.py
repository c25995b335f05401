"""Multi-curve structure: pair identity, degree laws, gcd parameterization, proportional groups."""

from __future__ import annotations

from dataclasses import dataclass, field

from .curves import InvariantCurve, verify_invariance
from .equation import AbelEquation
from .errors import InternalInconsistency, PreconditionError
from .poly import Poly, gcd as poly_gcd
from .scalars import reciprocal
from .trig import TrigPoly, trig_divides, trig_gcd

# Resolved by substituting candidates into the invariance identity of both
# curves; the printed forms with -q' fail that check.
S_FORMULA = "s = q' + q*(C + qhat'/qhat)"


@dataclass(frozen=True)
class CurvePair:
    p1: object
    p2: object
    r: object
    checks: dict


@dataclass(frozen=True)
class ParameterizedFamily:
    q: object
    s1: object
    s2: object
    k: object
    qhat: object
    s: object
    formula: str = S_FORMULA


@dataclass
class ProportionalGroup:
    base: object
    members: list
    K: object = None
    witnesses: dict = field(default_factory=dict)


def _p(c):
    return c.p if isinstance(c, InvariantCurve) else c


def pair_identity_check(eq: AbelEquation, c1, c2) -> CurvePair:
    """``A = C p1 p2 + r`` with ``r = (p2 - p1)' p1 p2 / (p2 - p1)``, verified exactly.

    ``r`` is computed as ``A - C p1 p2`` and checked against the fraction in
    cross-multiplied form, so no division by ``p2 - p1`` is needed.
    """
    p1, p2 = _p(c1), _p(c2)
    d = p2 - p1
    if d.is_zero():
        raise PreconditionError("pair_identity_check needs two distinct curves")
    for p in (p1, p2):
        if not verify_invariance(p, -1, eq)[0]:
            raise PreconditionError("pair_identity_check needs invariant curves")
    prod_ = p1 * p2
    r = eq.A - eq.C * prod_
    if r * d != d.deriv() * prod_:
        raise InternalInconsistency("A = C p1 p2 + (p2-p1)' p1 p2/(p2-p1) fails")
    checks = {"identity": True}
    bound = p1.degree + p2.degree - (0 if eq.is_trig else 1)
    if not r.is_zero() and r.degree > bound:
        raise InternalInconsistency("degree of r exceeds deg p1 + deg p2 (- 1 for polynomials)")
    checks["deg_r"] = r.degree
    checks["deg_r_bound"] = bound
    if not d.is_constant() and r.degree != bound:
        raise InternalInconsistency("deg r differs from its predicted value")
    if not eq.is_trig:
        quo, rem = eq.A.divrem(prod_)
        if (quo, rem) != (eq.C, r):
            raise InternalInconsistency("Euclidean division of A by p1 p2 is not (C, r)")
        checks["euclidean_division"] = True
    return CurvePair(p1, p2, r, checks)


def degree_laws_check(eq: AbelEquation, curves):
    """Evaluate every applicable degree law; raise on the first violation.

    Returns ``{"checks": [{"law": ..., "holds": True, ...}, ...]}``.
    """
    dA, dB, dC = eq.degrees()
    checks = []

    def record(law, holds, **info):
        checks.append({"law": law, "holds": bool(holds), **info})
        if not holds:
            raise InternalInconsistency(f"degree law violated: {law} {info}")

    strong = not eq.is_trig or not eq.C_is_constant
    n = len(curves)
    if dA - dC <= 1:
        record("deg A - deg C <= 1 implies at most one curve", n <= 1, count=n)
    for i in range(n):
        for j in range(i + 1, n):
            d1, d2 = curves[i].degree, curves[j].degree
            pair = [i, j]
            record("deg A - deg C <= deg p1 + deg p2", dA - dC <= d1 + d2, pair=pair)
            if strong:
                record("deg A - deg C == deg p1 + deg p2", dA - dC == d1 + d2, pair=pair)
            if d1 != d2:
                if strong:
                    record("distinct degrees: no third curve", n == 2, pair=pair, count=n)
                else:
                    record("distinct degrees, C constant: deg A == deg p1 + deg p2",
                           dA == d1 + d2, pair=pair)
    if strong and n >= 3:
        half = (dA - dC) / 2
        record("three or more curves share degree (deg A - deg C)/2",
               all(c.degree == half for c in curves), count=n)
    if strong and dA - dC > 1 and ((dA - dC) % 2 or 2 * dB > dA + dC):
        record("odd difference or 2 deg B > deg A + deg C: at most two curves", n <= 2, count=n)
    return {"checks": checks}


def _gcd(a, b):
    if isinstance(a, TrigPoly):
        return trig_gcd(a, b)
    return poly_gcd(a, b)


def _divides(a, b):
    if isinstance(a, TrigPoly):
        return trig_divides(a, b)
    return a.divides(b)


def parameterize_pair(c1: InvariantCurve, c2: InvariantCurve, eq: AbelEquation) -> ParameterizedFamily:
    """Write ``p_i = q s_i``, ``s2 = s1 + k qhat``, ``A = q s1 s2 s`` and verify the formula for ``s``."""
    if c1.base == c2.base and c1.K == c2.K:
        raise PreconditionError("parameterize_pair needs two distinct curves")
    q = _gcd(c1.base, c2.base).monic()
    t1, t2 = c1.base.exact_div(q), c2.base.exact_div(q)
    if not _gcd(t1, t2).is_constant():
        raise InternalInconsistency("s1 and s2 are not coprime")
    s1, s2 = t1.scale(c1.K), t2.scale(c2.K)
    d = s2 - s1
    if d.is_zero():
        raise InternalInconsistency("s1 == s2 for distinct curves")
    k = d.lc
    qhat = d.scale(reciprocal(k))
    if not qhat.is_base():
        raise InternalInconsistency("s2 - s1 has a factor outside the base field")
    if not qhat.is_constant():
        ok, _ = _divides(qhat, q ** int(qhat.degree))
        if not ok:
            raise InternalInconsistency("s2 - s1 has an irreducible factor not dividing q")
    # A / (q s1 s2) computed through base-field divisions only
    s = eq.A.exact_div(c1.base).exact_div(t2).scale(reciprocal(c1.K * c2.K))
    ok, log_term = _divides(qhat, q * qhat.deriv())
    if not ok:
        raise InternalInconsistency("q qhat'/qhat is not a ring element")
    predicted = q.deriv() + q * eq.C + log_term
    if s != predicted:
        raise InternalInconsistency(f"s does not match {S_FORMULA}")
    return ParameterizedFamily(q, s1, s2, k, qhat, s)


def proportional_groups(curves, eq: AbelEquation | None = None):
    """Partition curves by ``base``; verify the witness identities of every two-member class."""
    groups = {}
    for c in curves:
        groups.setdefault(c.base, []).append(c)
    out = []
    for base, members in groups.items():
        if len(members) > 2:
            raise InternalInconsistency("more than two proportional invariant curves")
        g = ProportionalGroup(base, members)
        if len(members) == 2 and eq is not None:
            p = members[0].p
            K = members[1].K / members[0].K
            if K in (0, 1):
                raise InternalInconsistency("degenerate proportionality constant")
            if K == -1:
                raise InternalInconsistency("curves p and -p force B = 0")
            w = p.deriv() + p * eq.C
            a_ok = eq.A == (p * w).scale(K)
            b_ok = eq.B == w.scale(-(K + 1))
            if not (a_ok and b_ok):
                raise InternalInconsistency("proportional pair witnesses fail")
            g.K = K
            g.witnesses = {"A = K p (p' + p C)": a_ok, "B = -(K+1)(p' + p C)": b_ok}
        out.append(g)
    return out
