"""
This file is part of verspec, relative Verdier specialization checks.

verspec is free software: you can redistribute it and/or modify it under the terms of the GNU Lesser General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

verspec is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with verspec.
If not, see <https://www.gnu.org/licenses/>.
"""
from __future__ import annotations

from verspec.chow.space import Space, Degree
from verspec.ring import Polynomial

"""
Function forms of the space maps.
"""


def integrate(space: Space, a: Polynomial) -> Degree:
    """
    Degree of a: a rational for numeric spaces, the top degree polynomial for formal ones.

    Examples:

        >>> from verspec.chow import projective_space, formal_base
        >>> P3 = projective_space(3)
        >>> integrate(P3, P3.hyperplane ** 2)
        Fraction(0, 1)
        >>> B = formal_base(1)
        >>> str(integrate(B, 12 * B.L + 3))
        '12L'
    """
    return space.integrate(a)


def pullback(space: Space, a: Polynomial) -> Polynomial:
    """
    The base class a, seen in space. Raises if space has no base.
    """
    return space.pullback(a)


def pushforward_to_base(space: Space, a: Polynomial) -> Polynomial:
    """
    Pushforward of a class of space to its base. Raises if space has no base.

    Example:

        >>> from verspec.chow import formal_base, proj_bundle_ool
        >>> B = formal_base(2)
        >>> X = proj_bundle_ool(B, B.L)
        >>> [str(pushforward_to_base(X, X.zeta ** k)) for k in (0, 1, 2, 3, 4)]
        ['0', '0', '1', '-L', 'L^2']
    """
    return space.pushforward_to_base(a)
