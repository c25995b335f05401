"""Look for exponent vectors that turn products of curves into first integrals.

Scans generated equations in every ring, reports the ones with at least two
curves and whether their cofactors are linearly dependent. Run with
``python3 demos/cofactor_search.py [N]``.
"""

import sys

from abelcurves.curves import find_invariant_curves
from abelcurves.darboux import cofactor_dependence
from abelcurves.families import random_instance
from abelcurves.frontend import RINGS


def main(n=40):
    for ring in RINGS:
        multi = found = 0
        for seed in range(n):
            eq, _ = random_instance(seed, ring)
            curves = find_invariant_curves(eq)
            if len(curves) < 2:
                continue
            multi += 1
            cert = cofactor_dependence(eq, curves)
            if cert is not None:
                found += 1
                print(f"{ring} seed {seed}: {cert.integral['expr']}")
        print(f"{ring}: {multi} of {n} equations have two or more curves, {found} certificates")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 40)
