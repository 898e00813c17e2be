"""
This file is part of verspec, relative Verdier specialization checks.

verspec is free software: you can redistribute it and/or modify it under the terms of the GNU Lesser General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

verspec is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with verspec.
If not, see <https://www.gnu.org/licenses/>.
"""
from __future__ import annotations
from typing import Any, Mapping, Union

from fractions import Fraction

from verspec.chow import projective_space, blowup_ci
from verspec.cclass.classes import (
    CISpec,
    HypersurfaceSpec,
    csm_smooth_ci,
    csm_a1_hypersurface,
    csm_a1_resolution,
)
from verspec.util.exception import VerspecException
from verspec.util.log import debug

"""
Euler characteristics of classical spaces, from descriptors.

A descriptor is a dict with a "kind" and an ambient projective space dimension "n":

    {'kind': 'projective', 'n': 3}                                      P3
    {'kind': 'ci', 'n': 3, 'degrees': [2, 2]}                           complete intersection of a quadric and a quadric
    {'kind': 'blowup', 'n': 3, 'center': [1, 1, 1]}                     P3 blown up along (H = H = H = 0), a point
    {'kind': 'a1', 'n': 3, 'degree': 4, 'center': [2, 2, 2]}            quartic with nodes along (2H = 2H = 2H = 0)
    {'kind': 'a1-resolved', 'n': 3, 'degree': 4, 'center': [2, 2, 2]}   its resolution

Named descriptors are configured in the model configuration (oracle_spaces).
"""


def _degrees(descriptor: Mapping[str, Any], key: str) -> list:
    values = descriptor.get(key)
    if not isinstance(values, (list, tuple)) or not all(isinstance(v, int) for v in values):
        raise VerspecException(f'Descriptor {dict(descriptor)} needs a list of integers "{key}"')
    return list(values)


def euler_characteristic_of(descriptor: Union[str, Mapping[str, Any]]) -> Fraction:
    """
    Euler characteristic of the space described by descriptor (or named in the configured oracle spaces).

    Examples:

        >>> euler_characteristic_of({'kind': 'ci', 'n': 2, 'degrees': [3]})
        Fraction(0, 1)
        >>> euler_characteristic_of({'kind': 'blowup', 'n': 2, 'center': [1, 1]})
        Fraction(4, 1)
        >>> euler_characteristic_of('nodal-quartic-P3')
        Fraction(16, 1)
    """
    if isinstance(descriptor, str):
        from verspec import conf

        spaces = conf.get("oracle_spaces") or {}
        if descriptor not in spaces:
            raise VerspecException(f'Unknown space "{descriptor}". Known spaces: {sorted(spaces)}')
        descriptor = spaces[descriptor]

    kind = descriptor.get("kind")
    n = descriptor.get("n")
    if not isinstance(n, int) or n < 0:
        raise VerspecException(f'Descriptor {dict(descriptor)} needs a non-negative integer "n"')
    P = projective_space(n)
    H = P.hyperplane
    debug(f"Euler characteristic of {dict(descriptor)}")

    if kind == "projective":
        return P.euler_characteristic()

    if kind == "ci":
        classes = [k * H for k in _degrees(descriptor, "degrees")]
        return P.integrate(csm_smooth_ci(CISpec(P, classes)))

    if kind == "blowup":
        return blowup_ci(P, [k * H for k in _degrees(descriptor, "center")]).euler_characteristic()

    if kind in ("a1", "a1-resolved"):
        degree = descriptor.get("degree")
        if not isinstance(degree, int):
            raise VerspecException(f'Descriptor {dict(descriptor)} needs an integer "degree"')
        hypersurface = HypersurfaceSpec(P, degree * H)
        center = [k * H for k in _degrees(descriptor, "center")]
        if kind == "a1":
            return P.integrate(csm_a1_hypersurface(hypersurface, center))
        return P.integrate(csm_a1_resolution(hypersurface, center))

    raise VerspecException(f'Unknown space kind "{kind}" in {dict(descriptor)}')
