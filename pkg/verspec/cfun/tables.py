"""
This file is part of verspec, relative Verdier specialization checks.

verspec is free software: you can redistribute it and/or modify it under the terms of the GNU Lesser General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

verspec is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with verspec.
If not, see <https://www.gnu.org/licenses/>.
"""
from __future__ import annotations
from typing import Optional, Sequence, Tuple

from dataclasses import dataclass

from verspec.util.exception import VerspecException

"""
Fibration tables and normal crossing descriptors.

A fibration table describes a map Z -> B by a chain of closed strata V1 > V2 > ... > Vk of B,
and the Euler characteristic of the fibers over each Vi minus V(i+1), where they are topologically constant.
"""

# Euler characteristic of a plane conic, by rank of its quadratic form:
# smooth conic, two lines meeting at a point, double line.
CONIC_RANK_CHI = {3: 2, 2: 3, 1: 2}


@dataclass(frozen=True)
class FibrationTable:
    """
    Chain of (closed stratum, fiber Euler characteristic over the stratum minus the next one).

    Example:

        >>> FibrationTable([('B', 2), ('O', 1)]).strata
        ('B', 'O')
    """

    chain: Tuple[Tuple[str, int], ...]

    def __post_init__(self):
        chain = tuple((name, chi) for name, chi in self.chain)
        if not chain:
            raise VerspecException("A fibration table needs at least one stratum")
        names = [name for name, _ in chain]
        if len(set(names)) != len(names):
            raise VerspecException(f"Fibration table chain is not strictly decreasing: {names} repeats a stratum")
        for name, chi in chain:
            if isinstance(chi, bool) or not isinstance(chi, int):
                raise VerspecException(f"Fiber Euler characteristic over {name!r} must be an integer, got {chi!r}")
        object.__setattr__(self, "chain", chain)

    @property
    def strata(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.chain)

    def to_list(self) -> list:
        return [[name, chi] for name, chi in self.chain]


@dataclass(frozen=True)
class NCDescriptor:
    """
    A normal crossing divisor: components with multiplicities, and their mutual intersection (None if disjoint).
    """

    components: Tuple[Tuple[str, int], ...]
    intersection: Optional[str] = None

    def __post_init__(self):
        components = tuple((name, m) for name, m in self.components)
        if not components:
            raise VerspecException("A normal crossing divisor needs at least one component")
        for name, m in components:
            if isinstance(m, bool) or not isinstance(m, int) or m < 1:
                raise VerspecException(f"Component {name!r} has multiplicity {m!r}, expected an integer >= 1")
        object.__setattr__(self, "components", components)


def conic_fiber_table(chain: Sequence[Tuple[str, int]]) -> FibrationTable:
    """
    Fibration table of a conic fibration, from the rank of the conics over each stratum.

    Example:

        >>> conic_fiber_table([('B', 3), ('D2', 2), ('S2', 1)]).chain
        (('B', 2), ('D2', 3), ('S2', 2))
    """
    table = []
    for name, rank in chain:
        if rank not in CONIC_RANK_CHI:
            raise VerspecException(f"Conics over {name!r} have rank {rank!r}, expected one of {sorted(CONIC_RANK_CHI)}")
        table.append((name, CONIC_RANK_CHI[rank]))
    return FibrationTable(tuple(table))
