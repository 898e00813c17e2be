"""
This file is part of verspec, relative Verdier specialization checks.

verspec is free software: you can redistribute it and/or modify it under the terms of the GNU Lesser General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

verspec is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with verspec.
If not, see <https://www.gnu.org/licenses/>.
"""
from __future__ import annotations
from typing import Tuple, TYPE_CHECKING

from dataclasses import dataclass
from fractions import Fraction

if TYPE_CHECKING:
    from verspec.ring.polynomial import Polynomial

"""
Ring presentations.

A ring is a graded commutative polynomial ring over the rationals, in weighted generators,
modulo single generator power rewrites (H^4 -> 0, zeta^3 -> -L zeta^2),
modulo everything above a total degree (the truncation, i.e. the dimension of the space),
and optionally modulo everything above a partial degree in a group of generators (the bounds).

Presentations are plain frozen data; the Ring (verspec.ring.ring) validates and uses them.
"""

# ((name, exponent), ...) sorted by generator order
NamedMonomial = Tuple[Tuple[str, int], ...]
NamedTerms = Tuple[Tuple[Fraction, NamedMonomial], ...]


@dataclass(frozen=True)
class GeneratorSpec:
    """A named generator of cohomological degree (codimension) "degree"."""

    name: str
    degree: int = 1


@dataclass(frozen=True)
class RewriteRule:
    """
    Rewrites generator^exponent into replacement.

    The replacement is given as named terms, so that rules can be written before the ring exists.
    An empty replacement means generator^exponent = 0.

    Example:

        >>> RewriteRule('H', 4).leading
        ('H', 4)
    """

    generator: str
    exponent: int
    replacement: NamedTerms = ()

    def __post_init__(self):
        terms = tuple((Fraction(c), tuple(tuple(p) for p in m)) for c, m in self.replacement)
        object.__setattr__(self, "replacement", terms)

    @property
    def leading(self) -> Tuple[str, int]:
        return self.generator, self.exponent

    @classmethod
    def from_polynomial(
        cls, generator: str, exponent: int, polynomial: Polynomial, factor: NamedMonomial = ()
    ) -> RewriteRule:
        """
        Builds the rule generator^exponent -> polynomial * factor.

        Args:
            generator: the rewritten generator name
            exponent: the rewritten power
            polynomial: a Polynomial, in a ring whose generator names are valid in the new ring
            factor: a named monomial multiplied to every term, eg. (("zeta", 2),)

        Returns:
            a RewriteRule
        """
        terms = []
        for coefficient, monomial in polynomial.named_terms():
            merged = dict(monomial)
            for name, power in factor:
                merged[name] = merged.get(name, 0) + power
            terms.append((coefficient, tuple(merged.items())))
        return cls(generator, exponent, tuple(terms))


@dataclass(frozen=True)
class DegreeBound:
    """Monomials whose degree in "generators" exceeds "bound" vanish."""

    generators: Tuple[str, ...]
    bound: int

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))


@dataclass(frozen=True)
class RingSpec:
    """
    A ring presentation.

    Args:
        generators: GeneratorSpecs, the order is the generator order (used for text and rewrites)
        rules: RewriteRules, at most one per generator
        truncation: total degree bound (the dimension of the modeled space)
        bounds: DegreeBounds, eg. the base classes of a projective bundle over a formal base
        name: a display name, eg. "A(P3)"
    """

    generators: Tuple[GeneratorSpec, ...] = ()
    rules: Tuple[RewriteRule, ...] = ()
    truncation: int = 0
    bounds: Tuple[DegreeBound, ...] = ()
    name: str = ""

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "rules", tuple(self.rules))
        object.__setattr__(self, "bounds", tuple(self.bounds))
