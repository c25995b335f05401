"""Return map of a periodic equation near x = 0 and along a rational solution.

With constant ``C = c`` the derivative of the displacement at the origin is
``exp(2 pi c) - 1``, so ``x = 0`` is never a center. The script estimates
that derivative by central differences and then checks that ``x = 1/p`` is
periodic for each invariant curve. Run with ``python3 demos/return_map.py``.
"""

import math

from abelcurves.curves import find_invariant_curves
from abelcurves.families import gen_proportional
from abelcurves.frontend import parse_expression, render
from abelcurves.numeric import displacement_derivative, periodicity_defect


def main():
    p = parse_expression("cos(t)+2", "trig")
    c = parse_expression("1/10", "trig")
    eq = gen_proportional(p, 3, c)
    print("A =", render(eq.A))
    print("B =", render(eq.B))

    probe = displacement_derivative(eq, h=1e-4)
    print(f"\nd'(0) ~ {probe.estimate:.8f}   exp(2 pi/10) - 1 = {math.expm1(math.pi / 5):.8f}")

    for curve in find_invariant_curves(eq):
        defect, x0, method, mu = periodicity_defect(eq, curve)
        print(f"{curve}: x0 = {x0:.6f}, |P(x0) - x0| = {defect:.1e} ({method}, exponent {mu:+.3f})")


if __name__ == "__main__":
    main()
