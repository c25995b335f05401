"""Build an equation with two prescribed curves and take it apart again.

Run with ``python3 demos/two_curves.py``.
"""

from abelcurves.classify import audit, classify_equation
from abelcurves.curves import find_invariant_curves
from abelcurves.families import gen_pair
from abelcurves.frontend import parse_expression, render
from abelcurves.structure import pair_identity_check, parameterize_pair


def P(text):
    return parse_expression(text, "poly-rational")


def main():
    # p1 = q s1 and p2 = q (s1 + k qhat) share the factor q = t^2 + 1
    q, s1, k, qhat, C = P("t^2+1"), P("t^2+2*t+3"), 2, P("t^2+1"), P("t")
    eq = gen_pair(q, s1, k, qhat, C)
    print("A =", render(eq.A))
    print("B =", render(eq.B))
    print("C =", render(eq.C))

    curves = find_invariant_curves(eq)
    print(f"\n{len(curves)} invariant curves:")
    for c in curves:
        print("  ", c)

    c1, c2 = curves[:2]
    pair = pair_identity_check(eq, c1, c2)
    print("\nA - C p1 p2 =", render(pair.r))
    fam = parameterize_pair(c1, c2, eq)
    print(f"q = {render(fam.q)}, k qhat = {fam.k}*({render(fam.qhat)}), s = {render(fam.s)}")

    rep = classify_equation(eq)
    print(f"\ncase {rep.case}: at most {rep.value} curves; audit {audit(eq, curves, rep).status}")


if __name__ == "__main__":
    main()
