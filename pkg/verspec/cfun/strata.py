"""
This file is part of verspec, relative Verdier specialization checks.

verspec is free software: you can redistribute it and/or modify it under the terms of the GNU Lesser General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

verspec is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with verspec.
If not, see <https://www.gnu.org/licenses/>.
"""
from __future__ import annotations
from typing import Dict, Iterable, Iterator, List, Optional, Tuple, Union

from dataclasses import dataclass
from fractions import Fraction

from verspec.ring import Ring, Polynomial
from verspec.util.exception import VerspecException
from verspec.util.log import debug, warning

"""
Named strata of a base, with their invariants.

A stratum is a closed subvariety of the base, known by its Euler characteristic and its CSM class.
Either may be None when it could not be computed, in which case evaluating a function on it raises.
For formal bases, the Euler characteristic is the top degree part of the CSM class, a polynomial.
"""

Chi = Union[int, Fraction, Polynomial]


def _is_zero(value) -> bool:
    return value is None or not value


@dataclass(frozen=True)
class Stratum:
    """
    A named closed stratum.

    Args:
        name: the stratum name, eg. "D1"
        chi: its Euler characteristic (None if unknown)
        csm: its CSM class on the base (None if unknown)
        expected_codim: its codimension for general choices; above the base dimension, the stratum is empty
    """

    name: str
    chi: Optional[Chi] = None
    csm: Optional[Polynomial] = None
    expected_codim: int = 0

    def is_empty(self, dim: int) -> bool:
        return self.expected_codim > dim


class StrataRegistry:
    """
    The strata of a base of dimension dim, in registration order.

    Strata whose expected codimension exceeds dim are empty: their chi and csm are stored as 0.

    Example:

        >>> registry = StrataRegistry(1, [Stratum('B', 2, None, 0), Stratum('S1', None, None, 2)])
        >>> registry.chi('S1'), registry.names
        (0, ['B', 'S1'])
    """

    def __init__(self, dim: int, strata: Iterable[Stratum] = (), ring: Optional[Ring] = None):
        self.dim = dim
        self.ring = ring
        self._strata: Dict[str, Stratum] = {}
        for stratum in strata:
            self.register(stratum)

    def register(self, stratum: Stratum) -> Stratum:
        if stratum.name in self._strata:
            raise VerspecException(f"Stratum {stratum.name!r} is already registered")
        if stratum.is_empty(self.dim):
            if not _is_zero(stratum.chi) or not _is_zero(stratum.csm):
                raise VerspecException(
                    f"Stratum {stratum.name!r} of codimension {stratum.expected_codim} is empty in dimension {self.dim}, "
                    f"but has chi {stratum.chi} and csm {stratum.csm}"
                )
            stratum = Stratum(stratum.name, 0, self.ring.zero if self.ring else None, stratum.expected_codim)
            warning(f"Stratum {stratum.name} is empty in dimension {self.dim}")
        debug(f"Registered stratum {stratum.name}: chi {stratum.chi}, csm {stratum.csm}")
        self._strata[stratum.name] = stratum
        return stratum

    @property
    def names(self) -> List[str]:
        return list(self._strata)

    def get(self, name: str) -> Stratum:
        if name not in self._strata:
            raise VerspecException(f"Unknown stratum {name!r}. Registered strata: {self.names}")
        return self._strata[name]

    def chi(self, name: str) -> Chi:
        stratum = self.get(name)
        if stratum.is_empty(self.dim):
            return 0
        if stratum.chi is None:
            raise VerspecException(f"Stratum {name!r} has no Euler characteristic")
        return stratum.chi

    def csm(self, name: str) -> Polynomial:
        stratum = self.get(name)
        if stratum.is_empty(self.dim) and self.ring is not None:
            return self.ring.zero
        if stratum.csm is None:
            raise VerspecException(f"Stratum {name!r} has no CSM class")
        return stratum.csm

    def is_empty(self, name: str) -> bool:
        return self.get(name).is_empty(self.dim)

    def __contains__(self, name: str) -> bool:
        return name in self._strata

    def __iter__(self) -> Iterator[Stratum]:
        return iter(self._strata.values())

    def __len__(self):
        return len(self._strata)

    def items(self) -> List[Tuple[str, Stratum]]:
        return list(self._strata.items())
