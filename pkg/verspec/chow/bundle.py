"""
This file is part of verspec, relative Verdier specialization checks.

verspec is free software: you can redistribute it and/or modify it under the terms of the GNU Lesser General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

verspec is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with verspec.
If not, see <https://www.gnu.org/licenses/>.
"""
from __future__ import annotations

from verspec.chow.space import Space, Degree
from verspec.ring import GeneratorSpec, RewriteRule, DegreeBound, RingSpec, Polynomial, make_ring
from verspec.util.exception import VerspecException
from verspec.util.log import debug

"""
The projective bundle of lines P(O + O + L) over a base B.

zeta = c1(O(1)) satisfies the Grothendieck relation zeta^3 + L zeta^2 = 0,
and the Chow ring is a free module over A(B) with basis 1, zeta, zeta^2.
The pushforward keeps the zeta^2 coefficient.
"""

ZETA = "zeta"


class ProjBundleOOL(Space):
    """
    P(O + O + L) over base, for a degree 1 class Lclass on base.

    Example:

        >>> from verspec.chow.base import formal_base
        >>> B = formal_base(1)
        >>> X = ProjBundleOOL(B, B.L)
        >>> zeta = X.zeta
        >>> str(zeta ** 3)
        '-L*zeta^2'
        >>> str(X.pushforward_to_base((3 * zeta + 2 * X.L) * zeta ** 2))
        '-L'
    """

    kind = "bundle"

    def __init__(self, base: Space, Lclass: Polynomial):
        Lclass = base.check(Lclass)
        if not Lclass.is_homogeneous(1):
            raise VerspecException(f"L class {Lclass} on {base} is not of pure degree 1")
        if base.ring.has_generator(ZETA):
            raise VerspecException(f"{base} already has a generator named {ZETA!r}")
        self.Lclass = Lclass

        base_spec = base.ring.spec
        grothendieck = RewriteRule.from_polynomial(ZETA, 3, -Lclass, factor=((ZETA, 2),))
        spec = RingSpec(
            generators=base_spec.generators + (GeneratorSpec(ZETA, 1),),
            rules=base_spec.rules + (grothendieck,),
            truncation=base.dim + 2,
            bounds=base_spec.bounds + (DegreeBound(base.ring.names, base.dim),),
            name=f"A(P(O+O+L) over {base.name})",
        )
        ring = make_ring(spec)
        zeta = ring.gen(ZETA)
        L = ring.coerce(Lclass)
        tangent_class = ring.coerce(base.tangent_class) * (1 + zeta) ** 2 * (1 + zeta + L)
        super().__init__(f"P(O+O+L) -> {base.name}", ring, base.dim + 2, tangent_class, base=base)
        self._zeta_index = ring.index(ZETA)

        debug(f"Built {self.name} with L = {Lclass}")

    @property
    def zeta(self) -> Polynomial:
        return self.ring.gen(ZETA)

    @property
    def L(self) -> Polynomial:
        """The pullback of the L class."""
        return self.pullback(self.Lclass)

    def pushforward_to_base(self, a: Polynomial) -> Polynomial:
        """
        Writes a = a0 + a1 zeta + a2 zeta^2 and returns a2.
        """
        a = self.check(a)
        i = self._zeta_index
        terms = []
        for exponents, coefficient in a.items():
            if exponents[i] == 2:
                terms.append((coefficient, tuple(p for p in self.ring.named(exponents) if p[0] != ZETA)))
        return self.base.ring.from_named_terms(terms)

    def integrate(self, a: Polynomial) -> Degree:
        return self.base.integrate(self.pushforward_to_base(a))


def proj_bundle_ool(base: Space, Lclass: Polynomial) -> ProjBundleOOL:
    """
    The projective bundle of lines P(O + O + L) over base.

    Example:

        >>> from verspec.chow.base import projective_space
        >>> P1 = projective_space(1)
        >>> X = proj_bundle_ool(P1, P1.hyperplane)
        >>> X.dim, X.integrate(X.zeta ** 2 * X.L)
        (3, Fraction(1, 1))
    """
    return ProjBundleOOL(base, Lclass)
