from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from verspec.chow import projective_space, formal_base, proj_bundle_ool, blowup_ci
from verspec.ring import GeneratorSpec, RewriteRule, RingSpec, Ring, Polynomial, invert_unit, grade_component, mul
from verspec.tests.utils.ring_tester import polynomials, check_ring_laws, check_confluence
from verspec.util.exception import VerspecException

P2 = projective_space(2)
B2 = formal_base(2)
bundle_P2 = proj_bundle_ool(P2, P2.hyperplane)
bundle_B2 = proj_bundle_ool(B2, B2.L)
blowup_P3 = blowup_ci(projective_space(3), [projective_space(3).hyperplane] * 2)

rings = [P2.ring, B2.ring, bundle_P2.ring, bundle_B2.ring, blowup_P3.ring]


@pytest.mark.parametrize("ring", rings, ids=str)
def test_ring_laws(ring):

    @settings(max_examples=50, deadline=None)
    @given(polynomials(ring), polynomials(ring), polynomials(ring))
    def laws(a, b, c):
        check_ring_laws(a, b, c)

    laws()


@settings(max_examples=200, deadline=None)
@given(st.tuples(st.integers(0, 4), st.integers(0, 5)))
def test_confluence(exponents):
    check_confluence(bundle_P2.ring, exponents)


@settings(max_examples=100, deadline=None)
@given(polynomials(bundle_B2.ring))
def test_invert_unit(a):
    unit = 1 + (a - a.constant_term)
    assert unit * invert_unit(unit) == 1


def test_invert_unit_rejects_non_units():
    H = P2.hyperplane
    with pytest.raises(VerspecException):
        invert_unit(2 + H)
    with pytest.raises(VerspecException):
        invert_unit(H)


def test_truncation():
    H = P2.hyperplane
    assert H ** 3 == 0
    assert (1 + H) ** 5 == 1 + 5 * H + 10 * H ** 2
    assert grade_component((1 + H) ** 5, 2) == 10 * H ** 2
    with pytest.raises(VerspecException):
        grade_component(H, 3)


def test_canonical_text():
    H = P2.hyperplane
    assert str(P2.ring.zero) == "0"
    assert str(Fraction(1, 2) * H - 3 * H ** 2) == "1/2*H - 3H^2"
    assert str(-H) == "-H"
    L, c1 = B2.L, B2.ring.gen("c1")
    assert str(3 * L * c1) == "3L*c1"
    assert str(c1 * c1 + B2.ring.gen("c2")) == "c1^2 + c2"


def test_floats_are_rejected():
    with pytest.raises(VerspecException):
        P2.ring.constant(0.5)
    with pytest.raises(TypeError):
        P2.hyperplane * 0.5


def test_mixed_rings():
    with pytest.raises(VerspecException):
        P2.hyperplane + projective_space(3).hyperplane
    with pytest.raises(VerspecException):
        mul(P2.hyperplane, 2)


def test_invalid_specs():
    # duplicate generator
    with pytest.raises(VerspecException):
        Ring(RingSpec([GeneratorSpec("H"), GeneratorSpec("H")], [], 2))
    # rule degree mismatch
    with pytest.raises(VerspecException):
        Ring(RingSpec([GeneratorSpec("H"), GeneratorSpec("z")], [RewriteRule("z", 2, [(1, (("H", 1),))])], 3))
    # replacement does not lower the exponent of z
    with pytest.raises(VerspecException):
        Ring(RingSpec([GeneratorSpec("z")], [RewriteRule("z", 2, [(1, (("z", 2),))])], 3))
    # rules feeding each other
    with pytest.raises(VerspecException):
        Ring(RingSpec(
            [GeneratorSpec("x"), GeneratorSpec("y")],
            [RewriteRule("x", 2, [(1, (("y", 2),))]), RewriteRule("y", 2, [(1, (("x", 2),))])],
            4,
        ))


def test_bound_kills_base_degree():
    # over a formal base of dimension 2, L^3 vanishes upstairs but zeta^2 L^2 does not
    L, zeta = bundle_B2.L, bundle_B2.zeta
    assert L ** 3 == 0
    assert str(zeta ** 2 * L ** 2) == "L^2*zeta^2"
    assert zeta ** 3 * L ** 2 == 0


def test_basis():
    assert [bundle_P2.ring.monomial_text(m) for m in bundle_P2.ring.basis(2)] == ["H*zeta", "H^2", "zeta^2"]
    assert all(bundle_P2.ring.is_reduced(m) for d in range(5) for m in bundle_P2.ring.basis(d))


def test_polynomial_is_hashable():
    H = P2.hyperplane
    assert len({H + H, 2 * H, Polynomial(P2.ring, {(1,): 2})}) == 1
