"""
Projection formula p_*(p^*(alpha) beta) = alpha p_*(beta) and the degree compatibility it implies,
for the projective bundle and the blowup pushforwards.
"""
from hypothesis import given, settings

from verspec.chow import projective_space, formal_base, proj_bundle_ool, blowup_ci
from verspec.tests.utils.ring_tester import polynomials, check_projection_formula, check_degree_compatibility

P3 = projective_space(3)
H = P3.hyperplane
B2 = formal_base(2)

bundle_P3 = proj_bundle_ool(P3, 2 * H)
bundle_B2 = proj_bundle_ool(B2, B2.L)
blowup_line = blowup_ci(P3, [H, 2 * H])
blowup_point = blowup_ci(P3, [H, H, H])


@settings(max_examples=1000, deadline=None)
@given(polynomials(P3.ring), polynomials(bundle_P3.ring))
def test_bundle_over_projective_space(alpha, beta):
    check_projection_formula(bundle_P3, alpha, beta)


@settings(max_examples=1000, deadline=None)
@given(polynomials(B2.ring, max_exponent=2), polynomials(bundle_B2.ring, max_exponent=2))
def test_bundle_over_formal_base(alpha, beta):
    check_projection_formula(bundle_B2, alpha, beta)


@settings(max_examples=1000, deadline=None)
@given(polynomials(P3.ring), polynomials(blowup_line.ring))
def test_blowup_along_a_curve(alpha, beta):
    check_projection_formula(blowup_line, alpha, beta)


@settings(max_examples=1000, deadline=None)
@given(polynomials(P3.ring), polynomials(blowup_point.ring))
def test_blowup_at_a_point(alpha, beta):
    check_projection_formula(blowup_point, alpha, beta)


@settings(max_examples=300, deadline=None)
@given(polynomials(P3.ring), polynomials(bundle_P3.ring))
def test_bundle_degrees(alpha, beta):
    check_degree_compatibility(bundle_P3, alpha, beta)


@settings(max_examples=300, deadline=None)
@given(polynomials(B2.ring, max_exponent=2), polynomials(bundle_B2.ring, max_exponent=2))
def test_formal_bundle_degrees(alpha, beta):
    check_degree_compatibility(bundle_B2, alpha, beta)


@settings(max_examples=300, deadline=None)
@given(polynomials(P3.ring), polynomials(blowup_line.ring))
def test_blowup_degrees(alpha, beta):
    check_degree_compatibility(blowup_line, alpha, beta)


def test_bundle_pushforward():
    zeta = bundle_P3.zeta
    assert bundle_P3.pushforward_to_base(zeta ** 2) == 1
    assert bundle_P3.pushforward_to_base(zeta) == 0
    assert bundle_P3.pushforward_to_base(zeta ** 3) == -2 * H
    assert bundle_P3.pushforward_to_base(zeta ** 4) == 4 * H ** 2


def test_blowup_pushforward():
    e = blowup_point.e
    assert blowup_point.pushforward_to_base(e) == 0
    assert blowup_point.pushforward_to_base(e ** 2) == 0
    assert blowup_point.integrate(e ** 3) == 1
    assert blowup_point.euler_characteristic() == 6
