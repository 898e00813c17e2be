"""
This file is part of verspec, relative Verdier specialization checks.

verspec is free software: you can redistribute it and/or modify it under the terms of the GNU Lesser General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

verspec is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with verspec.
If not, see <https://www.gnu.org/licenses/>.
"""
from __future__ import annotations
from typing import Dict, Iterator, List, Mapping, Optional, Tuple, Union, TYPE_CHECKING

from fractions import Fraction
from numbers import Rational

from verspec.util.exception import VerspecException

if TYPE_CHECKING:
    from verspec.ring.ring import Ring
    from verspec.ring.spec import NamedMonomial, NamedTerms

Exponents = Tuple[int, ...]
Scalar = Union[int, Fraction]


def as_coefficient(value) -> Fraction:
    """
    Returns value as an exact rational.

    Floats are refused: all arithmetic is exact.

    Examples:

        >>> as_coefficient(3)
        Fraction(3, 1)
        >>> as_coefficient(0.5)  # doctest: +IGNORE_EXCEPTION_DETAIL
        Traceback (most recent call last):
        ...
        verspec.util.exception.VerspecException: [VerspecException] Inexact coefficient 0.5
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, Rational):
        return Fraction(value)
    raise VerspecException(f"Inexact coefficient {value!r}")


def coefficient_text(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


class Polynomial:
    """
    An element of a Ring, kept in normal form.

    Terms map exponent vectors to non zero rationals.
    Polynomials are immutable, and compare equal when their rings and normal forms are equal.
    They compare to plain scalars as constants.

    Arithmetic with ints and Fractions is supported, mixing rings raises a VerspecException.
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: Ring, terms: Optional[Mapping[Exponents, Scalar]] = None, reduce: bool = True):
        """
        Args:
            ring: the Ring
            terms: {exponents: coefficient}
            reduce: if False, terms are trusted to be in normal form (internal use)
        """
        self.ring = ring
        if reduce:
            self._terms = ring.normal_form(terms or {})
        else:
            self._terms = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    # access

    @property
    def terms(self) -> Dict[Exponents, Fraction]:
        return dict(self._terms)

    def items(self) -> List[Tuple[Exponents, Fraction]]:
        """Terms in canonical order: by degree, then by monomial text."""
        return sorted(self._terms.items(), key=lambda item: (self.ring.degree(item[0]), self.ring.monomial_text(item[0])))

    def __iter__(self) -> Iterator[Tuple[Exponents, Fraction]]:
        return iter(self.items())

    def __len__(self):
        return len(self._terms)

    def named_terms(self) -> NamedTerms:
        return tuple((c, self.ring.named(m)) for m, c in self.items())

    def coefficient(self, monomial: Union[Exponents, Mapping[str, int], NamedMonomial] = ()) -> Fraction:
        """
        Coefficient of a reduced monomial, given as exponents or by names.

        Example:

            >>> from verspec.chow import projective_space
            >>> H = projective_space(3).ring.gen('H')
            >>> ((1 + H) ** 3).coefficient({'H': 2})
            Fraction(3, 1)
        """
        if isinstance(monomial, Mapping) or (monomial and not isinstance(monomial[0], int)):
            exponents = self.ring.exponents(monomial)
        else:
            exponents = tuple(monomial) or (0,) * self.ring.ngens
        return self._terms.get(exponents, Fraction(0))

    @property
    def constant_term(self) -> Fraction:
        return self._terms.get((0,) * self.ring.ngens, Fraction(0))

    def degrees(self) -> List[int]:
        return sorted({self.ring.degree(m) for m in self._terms})

    def grade(self, d: int) -> Polynomial:
        return Polynomial(self.ring, {m: c for m, c in self._terms.items() if self.ring.degree(m) == d}, reduce=False)

    def is_zero(self) -> bool:
        return not self._terms

    def is_homogeneous(self, d: Optional[int] = None) -> bool:
        """
        True if all terms have the same degree (d, if given). Zero is homogeneous of every degree.
        """
        degrees = self.degrees()
        if not degrees:
            return True
        return len(degrees) == 1 and (d is None or degrees[0] == d)

    # arithmetic

    def _lift(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise VerspecException(f"Mixed rings: {self.ring} and {other.ring}")
            return other
        return self.ring.constant(as_coefficient(other))

    def __add__(self, other) -> Polynomial:
        try:
            other = self._lift(other)
        except VerspecException:
            if isinstance(other, Polynomial):
                raise
            return NotImplemented
        terms = dict(self._terms)
        for m, c in other._terms.items():
            terms[m] = terms.get(m, 0) + c
        return Polynomial(self.ring, terms, reduce=False)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial(self.ring, {m: -c for m, c in self._terms.items()}, reduce=False)

    def __sub__(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            return self + (-other)
        return self + (-as_coefficient(other))

    def __rsub__(self, other) -> Polynomial:
        return (-self) + other

    def __mul__(self, other) -> Polynomial:
        if not isinstance(other, Polynomial):
            try:
                scalar = as_coefficient(other)
            except VerspecException:
                return NotImplemented
            return Polynomial(self.ring, {m: c * scalar for m, c in self._terms.items()}, reduce=False)

        other = self._lift(other)
        ring = self.ring
        truncation = ring.truncation
        right = [(m, c, ring.degree(m)) for m, c in other._terms.items()]
        result: Dict[Exponents, Fraction] = {}
        for m1, c1 in self._terms.items():
            d1 = ring.degree(m1)
            for m2, c2, d2 in right:
                if d1 + d2 > truncation:
                    continue
                product = tuple(a + b for a, b in zip(m1, m2))
                for reduced, value in ring.reduce_monomial(product).items():
                    result[reduced] = result.get(reduced, 0) + c1 * c2 * value
        return Polynomial(ring, result, reduce=False)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if not isinstance(n, int) or n < 0:
            raise VerspecException(f"Polynomial powers must be non-negative integers, got {n!r}")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # comparison

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        try:
            other = as_coefficient(other)
        except VerspecException:
            return NotImplemented
        return self._terms == ({(0,) * self.ring.ngens: other} if other else {})

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # text

    def __str__(self):
        """
        Canonical text: terms by degree then monomial text, eg. "1 + 4H + 6H^2", "12L", "1/2*H", "0".
        """
        if not self._terms:
            return "0"
        text = ""
        for m, c in self.items():
            monomial = self.ring.monomial_text(m)
            size = abs(c)
            if not monomial:
                term = coefficient_text(size)
            elif size == 1:
                term = monomial
            elif size.denominator == 1:
                term = f"{size.numerator}{monomial}"
            else:
                term = f"{coefficient_text(size)}*{monomial}"
            if not text:
                text = ("-" if c < 0 else "") + term
            else:
                text += (" - " if c < 0 else " + ") + term
        return text

    def __repr__(self):
        return f"Polynomial({self.ring.name}: {self})"
