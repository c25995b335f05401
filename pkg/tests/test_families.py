import pytest

from abelcurves.curves import find_invariant_curves, verify_invariance
from abelcurves.errors import PreconditionError
from abelcurves.families import gen_pair, gen_proportional, gen_single, random_instance
from abelcurves.frontend import POLY_GAUSSIAN, POLY_RATIONAL, TRIG
from abelcurves.structure import pair_identity_check
from test_curves import E1, E2, E3, E4, P, T


def test_gen_single_examples():
    assert gen_single(P("t^2+1"), P("t"), P("1")) == E1
    assert gen_single(T("cos(t)+2"), T("(cos(t)+3)*sin(t)"), T("sin(t)")) == E4
    eq = gen_single(P("t^2+1"), P("t^2+1"), P("1"))
    assert (eq.A, eq.B) == (P("(t^2+1)^2"), P("-(2*t^2+2*t+2)"))


def test_gen_single_errors():
    with pytest.raises(PreconditionError):
        gen_single(P("t"), P("1"), P("1"))
    with pytest.raises(PreconditionError):
        # m = -(p' + p C) makes B vanish
        gen_single(P("t^2+1"), P("-(t^2+2*t+1)"), P("1"))


def test_gen_pair_examples():
    assert gen_pair(P("1"), P("t^2+1"), 1, P("1"), P("t")) == E2
    eq = gen_pair(T("1"), T("cos(t)+2"), 1, T("1"), T("sin(t)"))
    assert eq == E4
    assert verify_invariance(T("cos(t)+3"), -1, eq)[0]
    with pytest.raises(PreconditionError, match="vanishes"):
        gen_pair(P("1"), P("t"), 1, P("1"), P("t"))
    with pytest.raises(PreconditionError):
        gen_pair(P("1"), P("t^2+1"), 0, P("1"), P("t"))


def test_gen_proportional_examples():
    assert gen_proportional(P("t^2+1"), 2, P("1")) == E3
    with pytest.raises(PreconditionError):
        gen_proportional(P("t^2+1"), -1, P("1"))
    eq = gen_proportional(T("cos(t)+2"), 2, T("1"))
    got = [str(c) for c in find_invariant_curves(eq)]
    assert got == ["(2 + cos(t))*x - 1", "2*(2 + cos(t))*x - 1"]


@pytest.mark.parametrize("ring", [POLY_RATIONAL, POLY_GAUSSIAN, TRIG])
def test_random_instance_contract(ring):
    for seed in range(40):
        eq, curves = random_instance(seed, ring)
        assert random_instance(seed, ring) == (eq, curves)
        found = find_invariant_curves(eq)
        assert all(c in found for c in curves)
        if len(curves) == 2:
            pair_identity_check(eq, *curves)


@pytest.mark.parametrize("mode", ["single", "pair", "proportional"])
def test_random_modes(mode):
    for seed in range(10):
        eq, curves = random_instance(seed, POLY_RATIONAL, mode=mode)
        assert len(curves) == (1 if mode == "single" else 2)


def test_small_cap_rejected():
    with pytest.raises(PreconditionError):
        random_instance(0, POLY_RATIONAL, max_deg_A=0)
