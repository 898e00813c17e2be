"""
This file is part of verspec, relative Verdier specialization checks.

verspec is free software: you can redistribute it and/or modify it under the terms of the GNU Lesser General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

verspec is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with verspec.
If not, see <https://www.gnu.org/licenses/>.
"""
from __future__ import annotations
from typing import Sequence, Tuple, Union

from dataclasses import dataclass

from verspec.chow import Space, ProjBundleOOL, CenterSpec, blowup_ci
from verspec.ring import Polynomial, invert_unit
from verspec.util.exception import VerspecException
from verspec.util.log import debug, warning

"""
Characteristic classes of subvarieties, pushed into their ambient space.

All inputs are divisor classes: the subvarieties are assumed general in their class,
smoothness and singularity types are not checked.
"""


@dataclass(frozen=True)
class HypersurfaceSpec:
    """A hypersurface of class divisor_class in ambient."""

    ambient: Space
    divisor_class: Polynomial

    def __post_init__(self):
        object.__setattr__(self, "divisor_class", self.ambient.check(self.divisor_class))


@dataclass(frozen=True)
class CISpec:
    """The complete intersection of hypersurfaces of the given classes in ambient."""

    ambient: Space
    classes: Tuple[Polynomial, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(self.ambient.check(v) for v in self.classes))


def _check_degree_one(ambient: Space, v: Polynomial) -> None:
    if not v.is_homogeneous(1):
        raise VerspecException(f"Class {v} on {ambient} is not of pure degree 1")


def csm_smooth_ci(ci: CISpec) -> Polynomial:
    """
    CSM class of a smooth complete intersection, in the ambient ring:

        c(T ambient) * v1/(1+v1) * ... * vr/(1+vr)

    An empty class list gives the ambient tangent class.
    More equations than the dimension give 0 (empty locus).

    Examples:

        >>> from verspec.chow import projective_space
        >>> P3 = projective_space(3)
        >>> H = P3.hyperplane
        >>> P3.integrate(csm_smooth_ci(CISpec(P3, [2 * H])))
        Fraction(4, 1)
        >>> P3.integrate(csm_smooth_ci(CISpec(P3, [2 * H, 2 * H])))
        Fraction(0, 1)
        >>> P3.integrate(csm_smooth_ci(CISpec(P3, [3 * H])))
        Fraction(9, 1)
    """
    ambient = ci.ambient
    if len(ci.classes) > ambient.dim:
        debug(f"Complete intersection of {len(ci.classes)} classes in {ambient} is empty")
        return ambient.ring.zero
    result = ambient.tangent_class
    for v in ci.classes:
        _check_degree_one(ambient, v)
        result = result * v * invert_unit(1 + v)
    return result


def fulton_hypersurface_class(h: HypersurfaceSpec) -> Polynomial:
    """
    Chern-Fulton class c(T ambient) * D/(1+D) of a hypersurface of class D.

    It only depends on the class, and is the CSM class of the smooth members of the class.

    Examples:

        >>> from verspec.chow import projective_space
        >>> P3 = projective_space(3)
        >>> H = P3.hyperplane
        >>> P3.integrate(fulton_hypersurface_class(HypersurfaceSpec(P3, 4 * H)))
        Fraction(24, 1)
        >>> str(fulton_hypersurface_class(HypersurfaceSpec(P3, P3.ring.zero)))
        '0'
    """
    D = h.divisor_class
    _check_degree_one(h.ambient, D)
    return h.ambient.tangent_class * D * invert_unit(1 + D)


def _as_center(center: Union[CenterSpec, Sequence[Polynomial]]) -> CenterSpec:
    return center if isinstance(center, CenterSpec) else CenterSpec(tuple(center))


def csm_a1_resolution(h: HypersurfaceSpec, center: Union[CenterSpec, Sequence[Polynomial]]) -> Polynomial:
    """
    Pushforward to the base of the CSM class of the resolution of a hypersurface
    with a transversal A1 singularity along a complete intersection center.

    The resolution is the strict transform in the blowup along the center, of class D - 2e.
    If the center is empty, the hypersurface is smooth and this is its Chern-Fulton class.

    Example:

        >>> from verspec.chow import projective_space
        >>> P3 = projective_space(3)
        >>> H = P3.hyperplane
        >>> P3.integrate(csm_a1_resolution(HypersurfaceSpec(P3, 4 * H), [2 * H, 2 * H, 2 * H]))
        Fraction(24, 1)
    """
    base = h.ambient
    center = _as_center(center)
    if not center.codim or center.codim > base.dim:
        if center.codim:
            warning(f"Center of codimension {center.codim} is empty in {base}, the hypersurface is smooth")
        return fulton_hypersurface_class(h)

    _check_degree_one(base, h.divisor_class)
    blowup = blowup_ci(base, center)
    strict = blowup.pullback(h.divisor_class) - 2 * blowup.e
    csm = blowup.tangent_class * strict * invert_unit(1 + strict)
    return blowup.pushforward_to_base(csm)


def csm_a1_hypersurface(h: HypersurfaceSpec, center: Union[CenterSpec, Sequence[Polynomial]]) -> Polynomial:
    """
    CSM class of a hypersurface of base with a transversal A1 singularity along a smooth complete intersection center.

    The resolution maps isomorphically outside the center and with smooth conic fibers over it,
    so its CSM class pushes forward to c(D) + c(Z), and:

        c(D) = p_* c(D resolved) - c(Z)

    Whether the singularity really is a transversal A1 along the center can not be checked.

    Example:

        >>> from verspec.chow import projective_space
        >>> P3 = projective_space(3)
        >>> H = P3.hyperplane
        >>> P3.integrate(csm_a1_hypersurface(HypersurfaceSpec(P3, 4 * H), [2 * H, 2 * H, 2 * H]))
        Fraction(16, 1)
    """
    base = h.ambient
    center = _as_center(center)
    if not center.codim or center.codim > base.dim:
        return csm_a1_resolution(h, center)
    return csm_a1_resolution(h, center) - csm_smooth_ci(CISpec(base, center.classes))


def pushforward_csm_hypersurface(h: HypersurfaceSpec) -> Polynomial:
    """
    Pushforward to the base of the CSM class of a smooth hypersurface of a projective bundle P(O + O + L).

    Example:

        >>> from verspec.chow import formal_base, proj_bundle_ool
        >>> B = formal_base(1)
        >>> X = proj_bundle_ool(B, B.L)
        >>> str(pushforward_csm_hypersurface(HypersurfaceSpec(X, 3 * X.zeta + 2 * X.L)))
        '12L'
    """
    if not isinstance(h.ambient, ProjBundleOOL):
        raise VerspecException(f"{h.ambient} is not a projective bundle")
    return h.ambient.pushforward_to_base(fulton_hypersurface_class(h))
