"""Case analysis of the curve-count bounds and the audit of found curves against them."""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

from .errors import InternalInconsistency, PreconditionError
from .frontend import RINGS, TRIG
from .scalars import NEG_INFINITY

INVARIANT_CURVES = "invariant-curves"
RATIONAL_LIMIT_CYCLES = "rational-limit-cycles"

CASES = ("a", "b1", "b21", "b22", "c", "out-of-scope")


@dataclass(frozen=True)
class BoundReport:
    case: str
    value: int | None
    meaning: str | None
    degA: int
    degB: int
    degC: int
    ring: str
    C_is_constant: bool
    strict: bool = False
    threshold: int | None = None

    def to_dict(self):
        d = asdict(self)
        for k in ("degA", "degB", "degC"):
            if d[k] == NEG_INFINITY:
                d[k] = None
        return d


def binomial_bound(degA: int) -> int:
    """``binom(degA, floor(degA/2)) + 1``; equal to ``binom(degA, (degA+1)/2) + 1`` for odd ``degA``."""
    return math.comb(degA, degA // 2) + 1


def classify_bounds(degA, degB, degC, ring, C_is_constant) -> BoundReport:
    if ring not in RINGS:
        raise PreconditionError(f"unknown ring {ring!r}")
    if degC == NEG_INFINITY:
        raise PreconditionError("C must be nonzero")
    if C_is_constant != (degC == 0):
        raise PreconditionError(
            f"inconsistent flags: C_is_constant={C_is_constant} with deg C = {degC}")
    if not degA > 0:
        raise PreconditionError("deg A must be positive")
    echo = dict(degA=degA, degB=degB, degC=degC, ring=ring, C_is_constant=C_is_constant)
    trig = ring == TRIG
    diff = degA - degC
    if diff <= 1:
        return BoundReport("a", 1, INVARIANT_CURVES, **echo)
    if trig and C_is_constant:
        return BoundReport("c", 4 * degA, INVARIANT_CURVES, strict=True,
                           threshold=4 * degA, **echo)
    if diff % 2 or degA + degC < 2 * degB:
        return BoundReport("b1", 2, INVARIANT_CURVES, **echo)
    if not trig:
        return BoundReport("b21", binomial_bound(degA), INVARIANT_CURVES,
                           threshold=degA + degC + 4, **echo)
    value = 2 * degA + 2 * degC + 4
    return BoundReport("b22", value, RATIONAL_LIMIT_CYCLES, strict=True, threshold=value, **echo)


def classify_equation(eq) -> BoundReport:
    dA, dB, dC = eq.degrees()
    return classify_bounds(dA, dB, dC, eq.ring, eq.C_is_constant)


def linear_part_mean(eq):
    """Mean of ``C`` over a period; the first-order return map at ``x = 0`` is ``exp(2 pi mean)``."""
    return eq.C.a0


@dataclass(frozen=True)
class AuditResult:
    status: str
    count: int
    bound: int
    case: str
    note: str = ""

    @property
    def passed(self):
        return self.status == "pass"

    def to_dict(self):
        return {**asdict(self), "passed": self.passed}


def audit(eq, curves, report: BoundReport | None = None) -> AuditResult:
    """Compare the number of curves with the bound; raise :class:`InternalInconsistency` on a violation.

    In case ``b22`` the bound concerns limit cycles, so it is only applied to
    curves when ``x = 0`` is certainly not a center, that is when the mean of
    ``C`` is nonzero.
    """
    report = report or classify_equation(eq)
    n = len(curves)
    note = ""
    if report.case == "b22":
        if linear_part_mean(eq) == 0:
            return AuditResult("not auditable: center-possible", n, report.value, report.case)
        note = "non-center: mean of C is nonzero"
    ok = n < report.value if report.strict else n <= report.value
    if not ok:
        rel = "<" if report.strict else "<="
        raise InternalInconsistency(
            f"bound violated in case {report.case}: {n} curves, expected {rel} {report.value}")
    return AuditResult("pass", n, report.value, report.case, note)


__all__ = ["BoundReport", "AuditResult", "classify_bounds", "classify_equation", "audit",
           "binomial_bound", "INVARIANT_CURVES", "RATIONAL_LIMIT_CYCLES", "CASES"]
