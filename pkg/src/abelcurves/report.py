"""The analysis pipeline and its JSON report.

``analyze`` runs the finder, every structural check, the cofactor search,
the bound audit and a light numeric cross-check, and returns a plain dict
ready for ``json.dumps``. ``reverify_report`` reloads such a dict and checks
each listed curve again with exact arithmetic.
"""

from __future__ import annotations

import json
import math

from .classify import audit, classify_equation
from .curves import InvariantCurve, find_invariant_curves, verify_invariance
from .darboux import certificate_to_json, cofactor_dependence, integrability_threshold
from .equation import AbelEquation, element_from_json, element_to_json, load_equation
from .errors import BlowUpError, InternalInconsistency, PreconditionError
from .frontend import render
from .numeric import displacement_derivative, periodicity_defect, residual_sample
from .scalars import format_scalar, parse_scalar
from .structure import degree_laws_check, pair_identity_check, parameterize_pair, proportional_groups

REPORT_KEYS = ("equation", "curves", "bound", "pairs", "proportional_groups",
               "parameterization", "darboux", "numeric")


def curve_to_json(c: InvariantCurve):
    return {
        "expr": str(c),
        "degree": c.degree,
        "K": format_scalar(c.K),
        "base": element_to_json(c.base),
        "p": element_to_json(c.p),
    }


def curve_from_json(obj, ring):
    from .frontend import ring_field

    base = element_from_json(obj["base"], ring)
    return InvariantCurve(base, parse_scalar(obj["K"], ring_field(ring)))


def _json_scalar(x):
    return format_scalar(x)


def curves_section(curves):
    return [curve_to_json(c) for c in curves]


def bound_section(eq, curves):
    rep = classify_equation(eq)
    out = {"case": rep.case, "value": rep.value, "meaning": rep.meaning, "strict": rep.strict,
           "threshold": rep.threshold, "inputs": {
               "degA": rep.degA, "degB": rep.degB, "degC": rep.degC, "ring": rep.ring,
               "C_is_constant": rep.C_is_constant}}
    out["audit"] = audit(eq, curves, rep).to_dict()
    return out


def pairs_section(eq, curves):
    out = []
    for i in range(len(curves)):
        for j in range(i + 1, len(curves)):
            pr = pair_identity_check(eq, curves[i], curves[j])
            out.append({"curves": [i, j], "r": element_to_json(pr.r), "checks": pr.checks})
    return out


def parameterization_section(eq, curves):
    out = []
    for i in range(len(curves)):
        for j in range(i + 1, len(curves)):
            f = parameterize_pair(curves[i], curves[j], eq)
            out.append({
                "curves": [i, j],
                "q": render(f.q), "s1": render(f.s1), "s2": render(f.s2),
                "k": _json_scalar(f.k), "qhat": render(f.qhat), "s": render(f.s),
                "formula": f.formula,
            })
    return out


def proportional_section(eq, curves):
    index = {(c.base, c.K): n for n, c in enumerate(curves)}
    out = []
    for g in proportional_groups(curves, eq):
        if len(g.members) < 2:
            continue
        out.append({
            "base": render(g.base),
            "members": [index[(c.base, c.K)] for c in g.members],
            "K": _json_scalar(g.K),
            "witnesses": g.witnesses,
        })
    return out


def darboux_section(eq, curves):
    cert = cofactor_dependence(eq, curves) if curves else None
    out = certificate_to_json(cert)
    try:
        threshold, meaning = integrability_threshold(eq)
        out["threshold"] = {"value": threshold, "meaning": meaning}
    except PreconditionError as exc:
        out["threshold"] = {"value": None, "meaning": str(exc)}
    if cert is not None and eq.is_trig:
        out["note"] = "center-implied"
    return out


def _finite(x):
    return None if x is None or not math.isfinite(x) else x


def numeric_section(eq, curves, samples=200):
    out = {"residuals": [_finite(residual_sample(eq, c, samples)) for c in curves]}
    if eq.is_trig:
        defects = []
        for c in curves:
            try:
                d, x0, direction, mu = periodicity_defect(eq, c)
                defects.append({"x0": x0, "defect": _finite(d), "map": direction,
                                "floquet_exponent": mu})
            except BlowUpError as exc:
                defects.append({"blow_up": str(exc)})
        out["periodicity_defects"] = defects
        if eq.C.is_constant():
            try:
                out["displacement"] = displacement_derivative(eq).to_dict()
            except BlowUpError as exc:
                out["displacement"] = {"blow_up": str(exc), "escape_time": exc.escape_time}
    return out


def analyze(eq: AbelEquation, jobs: int = 1, numeric: bool = True):
    """Full report; an :class:`InternalInconsistency` propagates instead of a bad report."""
    curves = find_invariant_curves(eq, jobs=jobs)
    report = {
        "equation": eq.to_dict(),
        "curves": curves_section(curves),
        "bound": bound_section(eq, curves),
        "pairs": pairs_section(eq, curves),
        "degree_laws": degree_laws_check(eq, curves)["checks"],
        "proportional_groups": proportional_section(eq, curves),
        "parameterization": parameterization_section(eq, curves),
        "darboux": darboux_section(eq, curves),
        "numeric": numeric_section(eq, curves) if numeric else {},
    }
    reverify_report(report)
    return report


def reverify_report(report):
    """Reload the equation and curves of a report and check invariance exactly."""
    eq = load_equation(report["equation"])
    curves = [curve_from_json(c, eq.ring) for c in report["curves"]]
    for c, obj in zip(curves, report["curves"]):
        if not verify_invariance(c.p, -1, eq)[0]:
            raise InternalInconsistency(f"reported curve {obj['expr']} is not invariant")
    return eq, curves


def dumps(report) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def to_text(report) -> str:
    """Human-readable projection of a report."""
    lines = []
    e = report.get("equation")
    if e:
        lines.append(f"ring: {e['ring']}")
        lines.append(f"x' = ({e['A']})*x^3 + ({e['B']})*x^2 + ({e['C']})*x")
    if "curves" in report:
        lines.append(f"invariant curves: {len(report['curves'])}")
        lines.extend(f"  [{n}] {c['expr']}" for n, c in enumerate(report["curves"]))
    b = report.get("bound")
    if b:
        strict = " (strict)" if b.get("strict") else ""
        lines.append(f"case {b['case']}: bound {b['value']}{strict}, {b['meaning']}")
        if b.get("threshold") is not None:
            lines.append(f"  threshold {b['threshold']}")
        if "audit" in b:
            lines.append(f"  audit: {b['audit']['status']}")
    for p in report.get("pairs", []):
        i, j = p["curves"]
        lines.append(f"pair ({i},{j}): r = {p['r']['expr']}")
    for g in report.get("proportional_groups", []):
        lines.append(f"proportional: {g['members']} with K = {g['K']}")
    for f in report.get("parameterization", []):
        lines.append(f"pair {f['curves']}: q = {f['q']}, s1 = {f['s1']}, s2 = {f['s2']}, "
                     f"k = {f['k']}, qhat = {f['qhat']}, s = {f['s']}")
    d = report.get("darboux")
    if d is not None:
        if d["found"]:
            lines.append(f"darboux: alphas {d['alphas']}; integral {d['integral']['expr']}")
        else:
            lines.append("darboux: no certificate")
        t = d.get("threshold")
        if t and t["value"] is not None:
            lines.append(f"  threshold {t['value']} ({t['meaning']})")
    num = report.get("numeric")
    if num:
        for k, v in num.items():
            lines.append(f"numeric {k}: {v}")
    return "\n".join(lines) + "\n"


__all__ = ["analyze", "reverify_report", "curve_to_json", "curve_from_json", "dumps", "to_text",
           "REPORT_KEYS", "bound_section", "curves_section", "darboux_section", "numeric_section"]
