"""
This file is part of verspec, relative Verdier specialization checks.

verspec is free software: you can redistribute it and/or modify it under the terms of the GNU Lesser General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

verspec is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with verspec.
If not, see <https://www.gnu.org/licenses/>.
"""
from __future__ import annotations
from typing import Optional, Union

from fractions import Fraction

from verspec.ring import Ring, Polynomial
from verspec.util.exception import VerspecException

"""
Spaces.

A Space is a modeled variety: a Chow ring (a verspec Ring), a dimension, the total Chern class of its tangent
bundle, and, for spaces built over a base (projective bundles, blowups), a pushforward to that base.

The kinds are ProjectiveSpace, FormalBase (verspec.chow.base), ProjBundleOOL (verspec.chow.bundle)
and BlowupCI (verspec.chow.blowup).
"""

Degree = Union[Fraction, Polynomial]


class Space:
    """
    Base class of the modeled spaces.

    Subclasses implement integrate(), and pushforward_to_base() when they have a base.
    """

    kind = "space"

    def __init__(self, name: str, ring: Ring, dim: int, tangent_class: Polynomial, base: Optional[Space] = None):
        self.name = name
        self.ring = ring
        self.dim = dim
        self.base = base
        if tangent_class.ring != ring:
            raise VerspecException(f"{name}: tangent class lives in {tangent_class.ring}, not in {ring}")
        if tangent_class.constant_term != 1:
            raise VerspecException(f"{name}: tangent class {tangent_class} must have constant term 1")
        self.tangent_class = tangent_class

    @property
    def is_formal(self) -> bool:
        """True if integration returns a top degree polynomial instead of a number."""
        return self.base.is_formal if self.base else False

    def gen(self, name: str) -> Polynomial:
        return self.ring.gen(name)

    def check(self, a: Polynomial) -> Polynomial:
        """
        Returns a if it belongs to this space's ring, raises otherwise.
        Scalars are promoted to constants.
        """
        if not isinstance(a, Polynomial):
            return self.ring.constant(a)
        if a.ring != self.ring:
            raise VerspecException(f"Mixed rings: {a} belongs to {a.ring}, not to {self.name} ({self.ring})")
        return a

    def pullback(self, a: Polynomial) -> Polynomial:
        """
        The class a of the base, seen in this space.
        """
        if self.base is None:
            raise VerspecException(f"{self.name} has no base")
        a = self.base.check(a)
        return self.ring.coerce(a)

    def pushforward_to_base(self, a: Polynomial) -> Polynomial:
        raise VerspecException(f"{self.name} has no base")

    def integrate(self, a: Polynomial) -> Degree:
        raise NotImplementedError()

    def euler_characteristic(self) -> Degree:
        """
        The degree of the total Chern class (Gauss-Bonnet-Chern).
        For formal spaces, this is the top Chern class, as a polynomial.
        """
        return self.integrate(self.tangent_class)

    def __str__(self):
        return self.name

    def __repr__(self):
        return f"{self.__class__.__name__}({self.name})"
