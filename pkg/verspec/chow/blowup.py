"""
This file is part of verspec, relative Verdier specialization checks.

verspec is free software: you can redistribute it and/or modify it under the terms of the GNU Lesser General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

verspec is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with verspec.
If not, see <https://www.gnu.org/licenses/>.
"""
from __future__ import annotations
from typing import Dict, Sequence, Tuple

from dataclasses import dataclass

from verspec.chow.space import Space, Degree
from verspec.ring import GeneratorSpec, RingSpec, Polynomial, make_ring, invert_unit
from verspec.util.exception import VerspecException
from verspec.util.log import debug

"""
Blowup of a base along a smooth complete intersection center Z = (d1 = ... = dr = 0).

The ring is the base ring with a free exceptional class e, truncated at the dimension.
Only classes polynomial in pullbacks and e are ever built, so the pushforward
of e^k is all that is needed:

    p_*(e^k) = 0                                for 1 <= k < r
    p_*(e^k) = (-1)^(k-1) d1...dr s_(k-r)       for k >= r

where s = 1 / (1+d1)...(1+dr) is the inverse Chern class of the normal bundle of Z.
"""

EXCEPTIONAL = "e"


@dataclass(frozen=True)
class CenterSpec:
    """
    A complete intersection center, given by the degree 1 classes d1..dr of its equations on the base.
    """

    classes: Tuple[Polynomial, ...]

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(self.classes))

    @property
    def codim(self) -> int:
        return len(self.classes)

    def check(self, base: Space) -> None:
        """
        Raises if a class is not a degree 1 class of base.
        """
        for d in self.classes:
            d = base.check(d)
            if not d.is_homogeneous(1):
                raise VerspecException(f"Center class {d} on {base} is not of pure degree 1")

    def normal_chern_class(self, base: Space) -> Polynomial:
        """(1+d1)...(1+dr), on base."""
        result = base.ring.one
        for d in self.classes:
            result = result * (1 + base.check(d))
        return result

    def fundamental_class(self, base: Space) -> Polynomial:
        """d1...dr, on base."""
        result = base.ring.one
        for d in self.classes:
            result = result * base.check(d)
        return result


class BlowupCI(Space):
    """
    The blowup of base along a complete intersection center.

    Example:

        >>> from verspec.chow.base import projective_space
        >>> P2 = projective_space(2)
        >>> H = P2.hyperplane
        >>> X = BlowupCI(P2, CenterSpec((H, H)))
        >>> str(X.pushforward_to_base(X.e ** 2))
        '-H^2'
        >>> X.euler_characteristic()
        Fraction(4, 1)
    """

    kind = "blowup"

    def __init__(self, base: Space, center: CenterSpec):
        center.check(base)
        r = center.codim
        if r < 1:
            raise VerspecException(f"Blowup of {base}: the center needs at least one equation")
        if r > base.dim:
            raise VerspecException(f"Blowup of {base}: center of codimension {r} exceeds the dimension {base.dim}")
        if base.ring.has_generator(EXCEPTIONAL):
            raise VerspecException(f"{base} already has a generator named {EXCEPTIONAL!r}")
        self.center = center

        base_spec = base.ring.spec
        spec = RingSpec(
            generators=base_spec.generators + (GeneratorSpec(EXCEPTIONAL, 1),),
            rules=base_spec.rules,
            truncation=base.dim,
            bounds=base_spec.bounds,
            name=f"A(Bl {base.name})",
        )
        ring = make_ring(spec)
        e = ring.gen(EXCEPTIONAL)

        segre = invert_unit(center.normal_chern_class(base))
        tangent_class = ring.coerce(base.tangent_class) * (1 + e) * ring.coerce(segre)
        for d in center.classes:
            tangent_class = tangent_class * (1 + ring.coerce(d) - e)

        super().__init__(f"Bl({base.name}, {r})", ring, base.dim, tangent_class, base=base)
        self._e_index = ring.index(EXCEPTIONAL)
        self._exceptional_pushforwards = self._compute_exceptional_pushforwards(segre)

        debug(f"Built {self.name}: center classes {[str(d) for d in center.classes]}")

    def _compute_exceptional_pushforwards(self, segre: Polynomial) -> Dict[int, Polynomial]:
        base = self.base
        r = self.center.codim
        top = self.center.fundamental_class(base)
        pushforwards = {0: base.ring.one}
        for k in range(1, self.dim + 1):
            if k < r:
                pushforwards[k] = base.ring.zero
            else:
                pushforwards[k] = (-1) ** (k - 1) * top * segre.grade(k - r)
        return pushforwards

    @property
    def e(self) -> Polynomial:
        return self.ring.gen(EXCEPTIONAL)

    def exceptional_pushforward(self, k: int) -> Polynomial:
        """
        p_*(e^k), on the base.
        """
        return self._exceptional_pushforwards.get(k, self.base.ring.zero)

    def pushforward_to_base(self, a: Polynomial) -> Polynomial:
        a = self.check(a)
        i = self._e_index
        result = self.base.ring.zero
        for exponents, coefficient in a.items():
            alpha = self.base.ring.from_named_terms(
                [(coefficient, tuple(p for p in self.ring.named(exponents) if p[0] != EXCEPTIONAL))]
            )
            result = result + alpha * self.exceptional_pushforward(exponents[i])
        return result

    def integrate(self, a: Polynomial) -> Degree:
        return self.base.integrate(self.pushforward_to_base(a))


def blowup_ci(base: Space, center: CenterSpec | Sequence[Polynomial]) -> BlowupCI:
    """
    Blowup of base along the complete intersection center.

    Example:

        >>> from verspec.chow.base import projective_space
        >>> P3 = projective_space(3)
        >>> H = P3.hyperplane
        >>> X = blowup_ci(P3, [H, H, H])
        >>> X.integrate(X.e ** 3), X.euler_characteristic()
        (Fraction(1, 1), Fraction(6, 1))
    """
    if not isinstance(center, CenterSpec):
        center = CenterSpec(tuple(center))
    return BlowupCI(base, center)
