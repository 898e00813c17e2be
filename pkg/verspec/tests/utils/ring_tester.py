"""
This file is part of verspec, relative Verdier specialization checks.

verspec is free software: you can redistribute it and/or modify it under the terms of the GNU Lesser General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

verspec is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with verspec.
If not, see <https://www.gnu.org/licenses/>.
"""
from itertools import permutations

from hypothesis import strategies as st

from verspec.chow.maps import integrate, pullback, pushforward_to_base
from verspec.ring import Polynomial, Ring
from verspec.util.log import DEBUG, get_logger

log = get_logger("verspec_tests", color=False)
log.setLevel(DEBUG)

small_fractions = st.fractions(min_value=-4, max_value=4, max_denominator=3)


def polynomials(ring: Ring, max_exponent: int = 3, max_terms: int = 5):
    """
    Hypothesis strategy of polynomials in ring.

    Exponent vectors may be above the truncation or reducible: the Polynomial constructor normalizes them.
    """
    exponents = st.tuples(*[st.integers(0, max_exponent) for _ in range(ring.ngens)])
    terms = st.dictionaries(exponents, small_fractions, max_size=max_terms)
    return terms.map(lambda t: Polynomial(ring, t))


def check_ring_laws(a: Polynomial, b: Polynomial, c: Polynomial) -> None:
    """
    Commutativity, associativity, distributivity, units, and truncation soundness.
    """
    ring = a.ring
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * ring.one == a
    assert a + ring.zero == a
    assert a - a == ring.zero
    for d in (a * b).degrees():
        assert d <= ring.truncation, f"{a * b} has degree {d} above {ring.truncation}"
    for exponents, _ in (a * b).items():
        assert ring.is_reduced(exponents)


def check_confluence(ring: Ring, exponents) -> None:
    """
    The normal form does not depend on the order the rewrite rules are applied in.
    """
    reference = ring.reduce_monomial(exponents)
    ruled = [rule.generator for rule in ring.spec.rules]
    for order in permutations(ruled):
        reduced = ring.reduce_monomial(exponents, order=order)
        if reduced != reference:
            log.error(f"{ring}: {exponents} reduces to {reduced} with {order}, {reference} by default")
        assert reduced == reference


def check_projection_formula(space, alpha: Polynomial, beta: Polynomial) -> None:
    """
    p_*(p^*(alpha) beta) = alpha p_*(beta)
    """
    lhs = space.pushforward_to_base(space.pullback(alpha) * beta)
    rhs = alpha * space.pushforward_to_base(beta)
    if lhs != rhs:
        log.error(f"{space}: projection formula fails for alpha = {alpha}, beta = {beta}: {lhs} != {rhs}")
    assert lhs == rhs


def check_degree_compatibility(space, alpha: Polynomial, beta: Polynomial) -> None:
    """
    deg(p^*(alpha) beta) on space = deg(alpha p_*(beta)) on the base
    """
    upstairs = integrate(space, pullback(space, alpha) * beta)
    downstairs = integrate(space.base, alpha * pushforward_to_base(space, beta))
    if upstairs != downstairs:
        log.error(f"{space}: degrees differ for alpha = {alpha}, beta = {beta}: {upstairs} != {downstairs}")
    assert upstairs == downstairs
