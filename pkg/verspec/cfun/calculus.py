"""
This file is part of verspec, relative Verdier specialization checks.

verspec is free software: you can redistribute it and/or modify it under the terms of the GNU Lesser General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

verspec is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with verspec.
If not, see <https://www.gnu.org/licenses/>.
"""
from __future__ import annotations
from typing import Mapping, Optional

from typing_extensions import Literal

from verspec.cfun.function import ConstructibleFunction
from verspec.cfun.strata import StrataRegistry, Chi
from verspec.cfun.tables import FibrationTable, NCDescriptor
from verspec.ring import Polynomial
from verspec.util.exception import VerspecException

"""
Constructible function calculus: stratified pushforward, specialization function, Euler characteristics, CSM classes.
"""

DeltaRule = Literal["definition-sd", "paper-printed"]


def pushforward_stratified(table: FibrationTable, registry: Optional[StrataRegistry] = None) -> ConstructibleFunction:
    """
    Pushforward of the indicator of the total space along a fibration table:

        sum of chi(Fi) (1_Vi - 1_Wi), with Wi the next stratum of the chain

    If a registry is given, the chain strata must have strictly increasing expected codimension.

    Examples:

        >>> str(pushforward_stratified(FibrationTable([('B', 2), ('O', 1)])))
        '2*1_B - 1_O'
        >>> pushforward_stratified(FibrationTable([('B', 2), ('D1', 4), ('S1', 3)])).to_dict(['B', 'D1', 'S1'])
        {'B': 2, 'D1': 2, 'S1': -1}
    """
    if registry is not None:
        codims = [registry.get(name).expected_codim for name in table.strata]
        if any(a >= b for a, b in zip(codims, codims[1:])):
            raise VerspecException(
                f"Fibration table chain is not strictly decreasing: {table.strata} has codimensions {codims}"
            )
    coeffs = {}
    previous = 0
    for name, chi in table.chain:
        coeffs[name] = chi - previous
        previous = chi
    return ConstructibleFunction(coeffs)


def specialization_function(nc: NCDescriptor, delta_rule: DeltaRule = "definition-sd") -> ConstructibleFunction:
    """
    The specialization function delta of a normal crossing central fiber.

    With "definition-sd", delta is m on points of a single component of multiplicity m, and 0 otherwise:
    sum of m_i (1_Di - 1_X). With "paper-printed", the intersection X has coefficient -1.

    Examples:

        >>> nc = NCDescriptor((('calD1', 1), ('calD2', 1)), 'X')
        >>> specialization_function(nc).to_dict(['calD1', 'calD2', 'X'])
        {'calD1': 1, 'calD2': 1, 'X': -2}
        >>> specialization_function(nc, 'paper-printed').to_dict(['calD1', 'calD2', 'X'])
        {'calD1': 1, 'calD2': 1, 'X': -1}
        >>> str(specialization_function(NCDescriptor((('D', 3),))))
        '3*1_D'
    """
    if delta_rule not in ("definition-sd", "paper-printed"):
        raise VerspecException(f"Unknown delta rule {delta_rule!r}")
    coeffs = {}
    for name, m in nc.components:
        coeffs[name] = coeffs.get(name, 0) + m
    if nc.intersection is not None and len(nc.components) > 1:
        if delta_rule == "definition-sd":
            coeffs[nc.intersection] = coeffs.get(nc.intersection, 0) - sum(m for _, m in nc.components)
        else:
            coeffs[nc.intersection] = coeffs.get(nc.intersection, 0) - 1
    return ConstructibleFunction(coeffs)


def pushforward_via_tables(
    f: ConstructibleFunction, tables: Mapping[str, FibrationTable], registry: Optional[StrataRegistry] = None
) -> ConstructibleFunction:
    """
    Pushforward of a constructible function on the central fiber, by linearity:
    each indicator 1_Z is pushed along the fibration table of Z.
    """
    result = ConstructibleFunction()
    for name, value in f:
        if name not in tables:
            raise VerspecException(f"No fibration table for {name!r}. Known tables: {sorted(tables)}")
        result = result + value * pushforward_stratified(tables[name], registry)
    return result


def euler_cf(f: ConstructibleFunction, registry: StrataRegistry) -> Chi:
    """
    Euler characteristic of f: the sum of its coefficients times the Euler characteristics of the strata.

    Example:

        >>> from verspec.cfun.strata import Stratum
        >>> registry = StrataRegistry(1, [Stratum('B', 2, None, 0), Stratum('O', 2, None, 1)])
        >>> euler_cf(ConstructibleFunction({'B': 2, 'O': -1}), registry)
        2
    """
    total = 0
    for name, value in f:
        total = registry.chi(name) * value + total
    return total


def csm_cf(f: ConstructibleFunction, registry: StrataRegistry) -> Polynomial:
    """
    CSM class of f: the sum of its coefficients times the CSM classes of the strata.
    """
    total = registry.ring.zero if registry.ring is not None else 0
    for name, value in f:
        total = registry.csm(name) * value + total
    if not isinstance(total, Polynomial):
        raise VerspecException("The CSM class of the zero function needs a registry with a ring")
    return total
