from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from verspec.chow import projective_space, formal_base, proj_bundle_ool
from verspec.cclass import (
    HypersurfaceSpec,
    CISpec,
    csm_smooth_ci,
    fulton_hypersurface_class,
    csm_a1_hypersurface,
    csm_a1_resolution,
    pushforward_csm_hypersurface,
)
from verspec.util.exception import VerspecException


@settings(max_examples=100, deadline=None)
@given(st.integers(1, 4), st.integers(1, 8))
def test_fulton_is_csm_of_smooth_hypersurfaces(n, k):
    P = projective_space(n)
    D = k * P.hyperplane
    assert fulton_hypersurface_class(HypersurfaceSpec(P, D)) == csm_smooth_ci(CISpec(P, [D]))


@settings(max_examples=50, deadline=None)
@given(st.integers(1, 10))
def test_surfaces_in_P3(k):
    P3 = projective_space(3)
    chi = P3.integrate(fulton_hypersurface_class(HypersurfaceSpec(P3, k * P3.hyperplane)))
    assert chi == k ** 3 - 4 * k ** 2 + 6 * k


@settings(max_examples=50, deadline=None)
@given(st.integers(-3, 3), st.integers(-3, 3))
def test_fulton_over_formal_base(a, b):
    B = formal_base(2)
    L, c1 = B.L, B.ring.gen("c1")
    D = a * L + b * c1
    fulton = fulton_hypersurface_class(HypersurfaceSpec(B, D))
    assert fulton == csm_smooth_ci(CISpec(B, [D]))
    assert fulton.constant_term == 0
    assert fulton.grade(1) == D


def test_complete_intersections():
    P3 = projective_space(3)
    H = P3.hyperplane
    assert P3.integrate(csm_smooth_ci(CISpec(P3, []))) == 4
    assert P3.integrate(csm_smooth_ci(CISpec(P3, [2 * H, 2 * H]))) == 0
    assert csm_smooth_ci(CISpec(P3, [H, H, H, H])) == 0
    P2 = projective_space(2)
    assert P2.integrate(csm_smooth_ci(CISpec(P2, [3 * P2.hyperplane]))) == 0


def test_nodal_quartic():
    P3 = projective_space(3)
    H = P3.hyperplane
    quartic = HypersurfaceSpec(P3, 4 * H)
    center = [2 * H, 2 * H, 2 * H]
    assert P3.integrate(csm_a1_resolution(quartic, center)) == 24
    assert P3.integrate(csm_a1_hypersurface(quartic, center)) == 16


@settings(max_examples=30, deadline=None)
@given(st.permutations([1, 2, 3]))
def test_center_order_does_not_matter(degrees):
    P3 = projective_space(3)
    H = P3.hyperplane
    sextic = HypersurfaceSpec(P3, 6 * H)
    reference = csm_a1_hypersurface(sextic, [H, 2 * H, 3 * H])
    assert str(reference) == "6H - 12H^2 + 102H^3"
    assert csm_a1_hypersurface(sextic, [k * H for k in degrees]) == reference


def test_empty_center_is_smooth():
    P2 = projective_space(2)
    H = P2.hyperplane
    conic = HypersurfaceSpec(P2, 2 * H)
    assert csm_a1_hypersurface(conic, [H, H, H]) == fulton_hypersurface_class(conic)
    assert csm_a1_hypersurface(conic, []) == fulton_hypersurface_class(conic)


def test_degree_one_classes_only():
    P2 = projective_space(2)
    H = P2.hyperplane
    with pytest.raises(VerspecException):
        fulton_hypersurface_class(HypersurfaceSpec(P2, H ** 2))
    with pytest.raises(VerspecException):
        csm_smooth_ci(CISpec(P2, [1 + H]))


def test_pushforward_needs_a_bundle():
    P2 = projective_space(2)
    with pytest.raises(VerspecException):
        pushforward_csm_hypersurface(HypersurfaceSpec(P2, P2.hyperplane))


def test_elliptic_fibration_over_P1():
    # Y of class 3 zeta + 2 L in P(O + O + L): 12 deg L singular fibers
    P1 = projective_space(1)
    for degree in (1, 2, 3):
        X = proj_bundle_ool(P1, degree * P1.hyperplane)
        Y = HypersurfaceSpec(X, 3 * X.zeta + 2 * X.L)
        assert P1.integrate(pushforward_csm_hypersurface(Y)) == Fraction(12 * degree)
