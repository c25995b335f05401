import math
from fractions import Fraction

import pytest

from abelcurves.curves import find_invariant_curves
from abelcurves.equation import AbelEquation, load_equation
from abelcurves.errors import BlowUpError, PreconditionError
from abelcurves.numeric import (TrajectoryConfig, displacement_derivative, displacement_grid,
                                floquet_exponent, periodicity_defect, poincare_map,
                                residual_sample, write_grid_csv)
from abelcurves.trig import TrigPoly
from test_curves import E1, E4, P, T


def test_residual_examples():
    assert residual_sample(E1, P("t^2+1"), points=[0.0]) == 0.0
    assert residual_sample(E1, P("t^2+1"), n=1000) <= 1e-9
    assert residual_sample(E1, P("t^2+2"), n=1000) > 0.01


def test_residual_accepts_curves():
    for c in find_invariant_curves(E4):
        assert residual_sample(E4, c) <= 1e-9


def test_residual_vanishing_p():
    with pytest.raises(PreconditionError):
        residual_sample(E1, P("t"), points=[0.0, 1.0])


def test_config_validation():
    with pytest.raises(PreconditionError):
        TrajectoryConfig(rtol=0)


def _linear(c):
    # A = B = 0 is out of scope for analysis but makes a closed-form test of the integrator
    z = TrigPoly(0)
    return AbelEquation(z, z, TrigPoly(c), "trig")


@pytest.mark.parametrize("c, x0", [(0.1, 0.3), (-0.25, 2.0), (0.5, -1.0)])
def test_linear_mode(c, x0):
    got = poincare_map(_linear(c), x0)
    assert abs(got - x0 * math.exp(2 * math.pi * c)) <= 1e-8 * abs(x0) * math.exp(2 * math.pi * abs(c))


def test_poincare_examples():
    assert abs(poincare_map(E4, 1 / 3) - 1 / 3) <= 1e-8
    assert abs(poincare_map(E4, 0.0)) <= 1e-12
    assert abs(poincare_map(E4, poincare_map(E4, 0.2), inverse=True) - 0.2) <= 1e-8


def test_poincare_needs_trig():
    with pytest.raises(PreconditionError):
        poincare_map(E1, 0.1)


def test_blow_up():
    eq = load_equation({"ring": "trig", "A": "3 + sin(t)", "B": "1", "C": "1"})
    with pytest.raises(BlowUpError) as info:
        poincare_map(eq, 10.0)
    assert 0 < info.value.escape_time < 2 * math.pi


@pytest.mark.parametrize("c, sign", [("1/10", 1), ("-1/10", -1)])
def test_displacement_derivative_sign(c, sign):
    eq = load_equation({"ring": "trig", "A": "1/100*sin(t)", "B": "1/100*cos(t)", "C": c})
    probe = displacement_derivative(eq)
    assert math.copysign(1, probe.estimate) == sign
    assert probe.rel_error <= 1e-4
    assert abs(probe.reference - math.expm1(2 * math.pi * float(Fraction(c)))) < 1e-15


def test_displacement_reference_value():
    eq = load_equation({"ring": "trig", "A": "1/50*(cos(t)+2)*(cos(t)+1)", "B": "-3/100*sin(t)", "C": "1/10"})
    probe = displacement_derivative(eq, h=1e-4)
    assert abs(probe.reference - 0.87446) < 1e-5
    assert abs(probe.estimate - probe.reference) <= 1e-4
    with pytest.raises(PreconditionError):
        displacement_derivative(eq, h=1e-2)
    with pytest.raises(PreconditionError):
        displacement_derivative(E4)


def test_periodicity_defect_e4():
    for c in find_invariant_curves(E4):
        defect, x0, method, mu = periodicity_defect(E4, c)
        assert defect <= 1e-8
        assert abs(x0 - 1 / float(c.p.evaluate(0.0))) < 1e-15
        assert abs(mu - floquet_exponent(E4, c)) < 1e-12


def test_grid_csv(tmp_path):
    rows = displacement_grid(E4, [-0.1, 0.0, 0.1])
    assert rows[1] == (0.0, 0.0)
    path = tmp_path / "grid.csv"
    write_grid_csv(rows, path)
    lines = path.read_text().splitlines()
    assert lines[0] == "x0,d" and len(lines) == 4
