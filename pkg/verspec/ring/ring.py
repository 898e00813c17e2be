"""
This file is part of verspec, relative Verdier specialization checks.

verspec is free software: you can redistribute it and/or modify it under the terms of the GNU Lesser General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

verspec is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with verspec.
If not, see <https://www.gnu.org/licenses/>.
"""
from __future__ import annotations
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from fractions import Fraction

from verspec.ring.spec import RingSpec, NamedMonomial
from verspec.ring.polynomial import Polynomial, Exponents, as_coefficient
from verspec.util.caching import lru_cache
from verspec.util.exception import VerspecException
from verspec.util.log import debug

"""
The Ring: a validated RingSpec, that normalizes monomials.

A monomial is an exponent vector, in generator order.
Its normal form is obtained by applying the rewrite rules until no rule applies,
and by dropping everything above the truncation or above a degree bound.

Rules only rewrite single generator powers, and each rule lowers the power of its own generator.
Rules may introduce other ruled generators, as long as this never loops back (checked at creation).
"""


@lru_cache
def _normal_form(ring: Ring, exponents: Exponents) -> Tuple[Tuple[Exponents, Fraction], ...]:
    """
    Cached normal form of a monomial, in default rule order.
    Returned as a tuple of items, so that cached values can not be mutated.
    """
    return tuple(ring._rewrite(exponents, ring._rule_order, lambda m: dict(_normal_form(ring, m))).items())


class Ring:
    """
    A truncated graded commutative ring over the rationals.

    Example:

        >>> from verspec.ring.spec import GeneratorSpec, RewriteRule
        >>> ring = Ring(RingSpec(generators=[GeneratorSpec('H')], rules=[RewriteRule('H', 4)], truncation=3, name='A(P3)'))
        >>> H = ring.gen('H')
        >>> str((1 + H) ** 4)
        '1 + 4H + 6H^2 + 4H^3'
        >>> str(H ** 4)
        '0'
    """

    def __init__(self, spec: RingSpec):

        self.spec = spec
        self.names: Tuple[str, ...] = tuple(g.name for g in spec.generators)
        self.degrees: Tuple[int, ...] = tuple(g.degree for g in spec.generators)
        self.truncation = spec.truncation
        self.name = spec.name or "A({})".format(",".join(self.names))

        self._validate_generators()
        self._index = {name: i for i, name in enumerate(self.names)}
        self._rules: Dict[int, Tuple[int, Tuple[Tuple[Fraction, Exponents], ...]]] = self._compile_rules()
        self._rule_order = tuple(sorted(self._rules))
        self._bounds = tuple(
            (tuple(self.index(name) for name in bound.generators), bound.bound) for bound in spec.bounds
        )
        for bound in spec.bounds:
            if bound.bound < 0:
                raise VerspecException(f"Ring {self.name}: negative degree bound {bound}")
        self._check_termination()
        self._hash = hash(spec)

        debug(f"Created ring {self.name}: generators {self.names}, degrees {self.degrees}, truncation {self.truncation}")

    def _validate_generators(self) -> None:
        if not isinstance(self.truncation, int) or self.truncation < 0:
            raise VerspecException(f"Ring {self.name}: truncation must be a non-negative integer, got {self.truncation!r}")
        seen = set()
        for name, degree in zip(self.names, self.degrees):
            if not name or not isinstance(name, str):
                raise VerspecException(f"Ring {self.name}: invalid generator name {name!r}")
            if name in seen:
                raise VerspecException(f"Ring {self.name}: duplicate generator name {name!r}")
            seen.add(name)
            if not isinstance(degree, int) or degree < 1:
                raise VerspecException(f"Ring {self.name}: generator {name!r} has degree {degree!r}, expected >= 1")

    def _compile_rules(self) -> Dict[int, Tuple[int, Tuple[Tuple[Fraction, Exponents], ...]]]:
        rules = {}
        for rule in self.spec.rules:
            i = self.index(rule.generator)
            if i in rules:
                raise VerspecException(f"Ring {self.name}: more than one rule for {rule.generator!r}")
            if not isinstance(rule.exponent, int) or rule.exponent < 1:
                raise VerspecException(f"Ring {self.name}: rule {rule.leading} has a non positive exponent")
            leading_degree = rule.exponent * self.degrees[i]
            replacement = []
            for coefficient, named in rule.replacement:
                exponents = self.exponents(named)
                if self.degree(exponents) != leading_degree:
                    raise VerspecException(
                        f"Ring {self.name}: rule degree mismatch, {self.monomial_text(exponents)} "
                        f"has degree {self.degree(exponents)} but {rule.generator}^{rule.exponent} has degree {leading_degree}"
                    )
                if exponents[i] >= rule.exponent:
                    raise VerspecException(
                        f"Ring {self.name}: non-terminating rule order, {rule.generator}^{rule.exponent} "
                        f"is rewritten into {self.monomial_text(exponents)}"
                    )
                if coefficient:
                    replacement.append((coefficient, exponents))
            rules[i] = (rule.exponent, tuple(replacement))
        return rules

    def _check_termination(self) -> None:
        """
        Raises if a ruled generator can be reintroduced by the rules it triggers.
        """
        edges = {
            i: {j for _, m in replacement for j, power in enumerate(m) if power and j != i and j in self._rules}
            for i, (_, replacement) in self._rules.items()
        }
        done = set()

        def visit(i, path):
            if i in path:
                cycle = " -> ".join(self.names[j] for j in path + (i,))
                raise VerspecException(f"Ring {self.name}: non-terminating rule order ({cycle})")
            if i in done:
                return
            for j in sorted(edges[i]):
                visit(j, path + (i,))
            done.add(i)

        for i in sorted(edges):
            visit(i, ())

    # generators and monomials

    @property
    def ngens(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise VerspecException(f"Ring {self.name}: unknown generator {name!r}")

    def has_generator(self, name: str) -> bool:
        return name in self.names

    def exponents(self, monomial: Union[Mapping[str, int], NamedMonomial]) -> Exponents:
        """
        Exponent vector of a named monomial.

        Example:

            >>> from verspec.ring.spec import GeneratorSpec
            >>> ring = Ring(RingSpec(generators=[GeneratorSpec('L'), GeneratorSpec('zeta')], truncation=3))
            >>> ring.exponents({'zeta': 2, 'L': 1})
            (1, 2)
        """
        items = monomial.items() if isinstance(monomial, Mapping) else monomial
        exponents = [0] * self.ngens
        for name, power in items:
            exponents[self.index(name)] += power
        return tuple(exponents)

    def named(self, exponents: Exponents) -> NamedMonomial:
        return tuple((name, power) for name, power in zip(self.names, exponents) if power)

    def degree(self, exponents: Exponents) -> int:
        return sum(power * degree for power, degree in zip(exponents, self.degrees))

    def monomial_text(self, exponents: Exponents) -> str:
        return "*".join(name if power == 1 else f"{name}^{power}" for name, power in self.named(exponents))

    def is_admissible(self, exponents: Exponents) -> bool:
        """
        True if the monomial survives the truncation and the degree bounds.
        """
        if self.degree(exponents) > self.truncation:
            return False
        for indices, bound in self._bounds:
            if sum(exponents[i] * self.degrees[i] for i in indices) > bound:
                return False
        return True

    def is_reduced(self, exponents: Exponents) -> bool:
        if not self.is_admissible(exponents):
            return False
        return all(exponents[i] < k for i, (k, _) in self._rules.items())

    # normal forms

    def _rewrite(self, exponents: Exponents, order: Sequence[int], recurse) -> Dict[Exponents, Fraction]:
        """
        One rewrite step with the first applicable rule in "order", then recurse on the result.
        """
        if not self.is_admissible(exponents):
            return {}
        for i in order:
            k, replacement = self._rules[i]
            if exponents[i] < k:
                continue
            rest = list(exponents)
            rest[i] -= k
            result: Dict[Exponents, Fraction] = {}
            for coefficient, monomial in replacement:
                target = tuple(a + b for a, b in zip(rest, monomial))
                for reduced, value in recurse(target).items():
                    result[reduced] = result.get(reduced, 0) + coefficient * value
            return {m: c for m, c in result.items() if c}
        return {exponents: Fraction(1)}

    def reduce_monomial(self, exponents: Iterable[int], order: Optional[Sequence[str]] = None) -> Dict[Exponents, Fraction]:
        """
        Normal form of the monomial with the given exponents, as a {exponents: coefficient} dict.

        If "order" (generator names) is given, the rules are applied in that order, uncached.
        Otherwise the generator order is used, and the result is cached.

        Example:

            >>> from verspec.ring.spec import GeneratorSpec, RewriteRule
            >>> ring = Ring(RingSpec(
            ...     generators=[GeneratorSpec('L'), GeneratorSpec('zeta')],
            ...     rules=[RewriteRule('zeta', 3, [(-1, (('L', 1), ('zeta', 2)))])],
            ...     truncation=3))
            >>> ring.reduce_monomial((0, 3))
            {(1, 2): Fraction(-1, 1)}
        """
        exponents = tuple(exponents)
        if len(exponents) != self.ngens:
            raise VerspecException(f"Ring {self.name}: exponent vector {exponents} does not match {self.names}")
        if order is None:
            return dict(_normal_form(self, exponents))

        indices = [self.index(name) for name in order if self.index(name) in self._rules]
        indices += [i for i in self._rule_order if i not in indices]
        indices = tuple(indices)

        def recurse(m):
            return self._rewrite(m, indices, recurse)

        return recurse(exponents)

    def normal_form(self, terms: Mapping[Exponents, object]) -> Dict[Exponents, Fraction]:
        result: Dict[Exponents, Fraction] = {}
        for exponents, coefficient in terms.items():
            coefficient = as_coefficient(coefficient)
            if not coefficient:
                continue
            for reduced, value in self.reduce_monomial(exponents).items():
                result[reduced] = result.get(reduced, 0) + coefficient * value
        return {m: c for m, c in result.items() if c}

    def basis(self, d: int) -> List[Exponents]:
        """
        The reduced monomials of degree d, sorted by their text.

        Example:

            >>> from verspec.ring.spec import GeneratorSpec
            >>> ring = Ring(RingSpec(generators=[GeneratorSpec('L'), GeneratorSpec('c1'), GeneratorSpec('c2', 2)], truncation=2))
            >>> [ring.monomial_text(m) for m in ring.basis(2)]
            ['L*c1', 'L^2', 'c1^2', 'c2']
        """
        if d < 0 or d > self.truncation:
            return []

        found = []

        def walk(i, remaining, current):
            if i == self.ngens:
                if remaining == 0 and self.is_reduced(tuple(current)):
                    found.append(tuple(current))
                return
            top = remaining // self.degrees[i]
            if i in self._rules:
                top = min(top, self._rules[i][0] - 1)
            for power in range(top + 1):
                walk(i + 1, remaining - power * self.degrees[i], current + [power])

        walk(0, d, [])
        return sorted(found, key=self.monomial_text)

    # polynomial constructors

    @property
    def zero(self) -> Polynomial:
        return Polynomial(self, {}, reduce=False)

    @property
    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, value) -> Polynomial:
        return Polynomial(self, {(0,) * self.ngens: value})

    def gen(self, name: str) -> Polynomial:
        exponents = [0] * self.ngens
        exponents[self.index(name)] = 1
        return Polynomial(self, {tuple(exponents): 1})

    def gens(self) -> Tuple[Polynomial, ...]:
        return tuple(self.gen(name) for name in self.names)

    def monomial(self, monomial: Union[Mapping[str, int], NamedMonomial], coefficient=1) -> Polynomial:
        return Polynomial(self, {self.exponents(monomial): coefficient})

    def from_named_terms(self, terms: Iterable[Tuple[object, NamedMonomial]]) -> Polynomial:
        """
        Builds a polynomial from (coefficient, named monomial) pairs, eg. the named_terms() of another ring's polynomial.
        Generator names must exist in this ring.
        """
        collected: Dict[Exponents, Fraction] = {}
        for coefficient, named in terms:
            exponents = self.exponents(named)
            collected[exponents] = collected.get(exponents, 0) + as_coefficient(coefficient)
        return Polynomial(self, collected)

    def coerce(self, polynomial: Polynomial) -> Polynomial:
        """
        Reinterprets a polynomial of another ring in this one, by generator names.
        Each generator of the source ring must exist here, with the same degree.
        """
        if polynomial.ring == self:
            return polynomial
        for name, degree in zip(polynomial.ring.names, polynomial.ring.degrees):
            if self.degrees[self.index(name)] != degree:
                raise VerspecException(f"Generator {name!r} has different degrees in {polynomial.ring} and {self}")
        return self.from_named_terms(polynomial.named_terms())

    def __eq__(self, other):
        if self is other:
            return True
        if not isinstance(other, Ring):
            return False
        return self._hash == other._hash and self.spec == other.spec

    def __hash__(self):
        return self._hash

    def __str__(self):
        return self.name

    def __repr__(self):
        return f"Ring({self.name})"


def make_ring(spec: RingSpec) -> Ring:
    """
    Validates the ring presentation and returns the Ring.

    Raises VerspecException on duplicate generator names, rule degree mismatch, or non-terminating rules.

    Example:

        >>> from verspec.ring.spec import GeneratorSpec, RewriteRule
        >>> point = make_ring(RingSpec(name='A(pt)'))
        >>> str(point.one), point.basis(1)
        ('1', [])
    """
    return Ring(spec)


if __name__ == "__main__":

    from verspec.ring.spec import GeneratorSpec, RewriteRule
    from verspec.util import log

    log.setLevel(log.DEBUG)

    bundle = make_ring(
        RingSpec(
            generators=[GeneratorSpec("L"), GeneratorSpec("zeta")],
            rules=[RewriteRule("zeta", 3, [(-1, (("L", 1), ("zeta", 2)))])],
            truncation=3,
            name="A(P(O+O+L) over a curve)",
        )
    )
    zeta = bundle.gen("zeta")
    log.info(zeta**3)
    log.info(_normal_form.cache_info())
