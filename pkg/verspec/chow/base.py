"""
This file is part of verspec, relative Verdier specialization checks.

verspec is free software: you can redistribute it and/or modify it under the terms of the GNU Lesser General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

verspec is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with verspec.
If not, see <https://www.gnu.org/licenses/>.
"""
from __future__ import annotations

from fractions import Fraction

from verspec.chow.space import Space
from verspec.ring import GeneratorSpec, RewriteRule, RingSpec, Polynomial, make_ring
from verspec.util.caching import lru_cache
from verspec.util.exception import VerspecException
from verspec.util.log import debug

"""
Bases: projective spaces, with a numeric degree map, and formal bases, with none.
"""


class ProjectiveSpace(Space):
    """
    P^n, with Chow ring Q[H]/(H^(n+1)) and tangent class (1+H)^(n+1).

    The point P^0 has no generator.

    Examples:

        >>> P3 = ProjectiveSpace(3)
        >>> P3.integrate(P3.hyperplane ** 3)
        Fraction(1, 1)
        >>> P3.euler_characteristic()
        Fraction(4, 1)
        >>> ProjectiveSpace(0).integrate(ProjectiveSpace(0).ring.one)
        Fraction(1, 1)
    """

    kind = "projective"

    def __init__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise VerspecException(f"Projective space dimension must be a non-negative integer, got {n!r}")
        self.n = n
        if n:
            spec = RingSpec(
                generators=[GeneratorSpec("H", 1)],
                rules=[RewriteRule("H", n + 1)],
                truncation=n,
                name=f"A(P{n})",
            )
        else:
            spec = RingSpec(name="A(P0)")
        ring = make_ring(spec)
        H = ring.gen("H") if n else ring.zero
        super().__init__(f"P{n}", ring, n, (1 + H) ** (n + 1))

    @property
    def hyperplane(self) -> Polynomial:
        return self.ring.gen("H") if self.n else self.ring.zero

    def integrate(self, a: Polynomial) -> Fraction:
        a = self.check(a)
        return a.coefficient((self.n,) if self.n else ())


class FormalBase(Space):
    """
    A base of dimension d known only through L = c1(L) and its Chern classes c1..cd.

    The ring is free in L (degree 1) and c_i (degree i), truncated above d.
    Integration returns the top degree part, as a polynomial.

    Examples:

        >>> B = FormalBase(2)
        >>> str(B.tangent_class)
        '1 + c1 + c2'
        >>> str(B.integrate(B.tangent_class * (1 + B.L)))
        'L*c1 + c2'
    """

    kind = "formal"

    def __init__(self, d: int):
        if not isinstance(d, int) or d < 1:
            raise VerspecException(f"Formal base dimension must be an integer >= 1, got {d!r}")
        generators = [GeneratorSpec("L", 1)] + [GeneratorSpec(f"c{i}", i) for i in range(1, d + 1)]
        ring = make_ring(RingSpec(generators=generators, truncation=d, name=f"A(formal:{d})"))
        tangent_class = ring.one
        for i in range(1, d + 1):
            tangent_class = tangent_class + ring.gen(f"c{i}")
        super().__init__(f"formal:{d}", ring, d, tangent_class)

    @property
    def is_formal(self) -> bool:
        return True

    @property
    def L(self) -> Polynomial:
        return self.ring.gen("L")

    def integrate(self, a: Polynomial) -> Polynomial:
        return self.check(a).grade(self.dim)


@lru_cache
def projective_space(n: int) -> ProjectiveSpace:
    """
    Cached P^n.
    """
    debug(f"Building P{n}")
    return ProjectiveSpace(n)


@lru_cache
def formal_base(d: int) -> FormalBase:
    """
    Cached formal base of dimension d.

    Example:

        >>> B = formal_base(3)
        >>> sorted(B.ring.monomial_text(m) for m in B.ring.basis(3))
        ['L*c1^2', 'L*c2', 'L^2*c1', 'L^3', 'c1*c2', 'c1^3', 'c3']
    """
    debug(f"Building formal base of dimension {d}")
    return FormalBase(d)
