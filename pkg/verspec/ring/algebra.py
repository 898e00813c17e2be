"""
This file is part of verspec, relative Verdier specialization checks.

verspec is free software: you can redistribute it and/or modify it under the terms of the GNU Lesser General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

verspec is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with verspec.
If not, see <https://www.gnu.org/licenses/>.
"""
from __future__ import annotations

from verspec.ring.polynomial import Polynomial
from verspec.util.exception import VerspecException

"""
Function forms of the ring operations, used by the characteristic class formulas.
"""


def mul(a: Polynomial, b: Polynomial) -> Polynomial:
    """
    Normal form product of a and b, which must belong to the same ring.

    Example:

        >>> from verspec.chow import projective_space
        >>> H = projective_space(1).ring.gen('H')
        >>> str(mul(1 + H, 1 + H))
        '1 + 2H'
    """
    if not isinstance(a, Polynomial) or not isinstance(b, Polynomial):
        raise VerspecException(f"mul expects polynomials, got {type(a).__name__} and {type(b).__name__}")
    return a * b


def invert_unit(a: Polynomial) -> Polynomial:
    """
    Inverse of a polynomial with constant term 1, up to truncation.

    Computed as the geometric series 1 + x + x^2 + ... with x = 1 - a, which is nilpotent.

    Examples:

        >>> from verspec.chow import projective_space
        >>> H = projective_space(3).ring.gen('H')
        >>> str(invert_unit(1 + H))
        '1 - H + H^2 - H^3'
        >>> str(invert_unit(H.ring.one))
        '1'
        >>> invert_unit(2 + H)  # doctest: +IGNORE_EXCEPTION_DETAIL
        Traceback (most recent call last):
        ...
        verspec.util.exception.VerspecException: [VerspecException] Not a unit: constant term of 2 + H is 2, expected 1

    Args:
        a: the polynomial to invert

    Returns:
        b, with a * b == 1
    """
    if a.constant_term != 1:
        raise VerspecException(f"Not a unit: constant term of {a} is {a.constant_term}, expected 1")
    x = 1 - a
    result = a.ring.one
    power = a.ring.one
    for _ in range(a.ring.truncation):
        power = power * x
        if not power:
            break
        result = result + power
    return result


def grade_component(a: Polynomial, d: int) -> Polynomial:
    """
    The degree d part of a.

    Example:

        >>> from verspec.chow import projective_space
        >>> H = projective_space(3).ring.gen('H')
        >>> str(grade_component((1 + H) ** 4, 2))
        '6H^2'
    """
    if not isinstance(d, int) or d < 0 or d > a.ring.truncation:
        raise VerspecException(f"Degree {d!r} out of range 0..{a.ring.truncation} of {a.ring}")
    return a.grade(d)
