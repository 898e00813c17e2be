"""
This file is part of verspec, relative Verdier specialization checks.

verspec is free software: you can redistribute it and/or modify it under the terms of the GNU Lesser General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

verspec is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with verspec.
If not, see <https://www.gnu.org/licenses/>.
"""
from __future__ import annotations
from typing import Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple, Union

from verspec.util.exception import VerspecException


def _as_int(value) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise VerspecException(f"Constructible function coefficients are integers, got {value!r}")
    return value


class ConstructibleFunction:
    """
    A finite integer combination of indicator functions of named closed strata.

    Zero coefficients are never stored, so equal functions have equal coefficient maps.

    Examples:

        >>> f = 2 * ConstructibleFunction.indicator('B') - ConstructibleFunction.indicator('O')
        >>> str(f)
        '2*1_B - 1_O'
        >>> f.value_at({'B', 'O'}), f.value_at({'B'})
        (1, 2)
        >>> str(f - f)
        '0'
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Optional[Union[Mapping[str, int], Iterable[Tuple[str, int]]]] = None):
        items = coeffs.items() if isinstance(coeffs, Mapping) else (coeffs or ())
        collected: Dict[str, int] = {}
        for name, value in items:
            collected[name] = collected.get(name, 0) + _as_int(value)
        self._coeffs = {name: value for name, value in collected.items() if value}

    @classmethod
    def indicator(cls, name: str) -> ConstructibleFunction:
        return cls({name: 1})

    @classmethod
    def zero(cls) -> ConstructibleFunction:
        return cls()

    @property
    def coeffs(self) -> Dict[str, int]:
        return dict(self._coeffs)

    def __getitem__(self, name: str) -> int:
        return self._coeffs.get(name, 0)

    def __iter__(self) -> Iterator[Tuple[str, int]]:
        return iter(sorted(self._coeffs.items()))

    def __len__(self):
        return len(self._coeffs)

    def names(self):
        return sorted(self._coeffs)

    def value_at(self, point: Iterable[str]) -> int:
        """
        Value at a symbolic point, given as the names of the closed strata that contain it.
        """
        point = set(point)
        return sum(value for name, value in self._coeffs.items() if name in point)

    # group structure

    def __add__(self, other: ConstructibleFunction) -> ConstructibleFunction:
        if not isinstance(other, ConstructibleFunction):
            if other == 0:
                return self
            return NotImplemented
        return ConstructibleFunction(list(self._coeffs.items()) + list(other._coeffs.items()))

    __radd__ = __add__

    def __neg__(self) -> ConstructibleFunction:
        return ConstructibleFunction({name: -value for name, value in self._coeffs.items()})

    def __sub__(self, other: ConstructibleFunction) -> ConstructibleFunction:
        if not isinstance(other, ConstructibleFunction):
            return NotImplemented
        return self + (-other)

    def __mul__(self, n: int) -> ConstructibleFunction:
        if isinstance(n, bool) or not isinstance(n, int):
            return NotImplemented
        return ConstructibleFunction({name: n * value for name, value in self._coeffs.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, ConstructibleFunction):
            return self._coeffs == other._coeffs
        if isinstance(other, Mapping):
            return self == ConstructibleFunction(other)
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._coeffs.items()))

    def __bool__(self):
        return bool(self._coeffs)

    # serialization

    def to_dict(self, order: Optional[Sequence[str]] = None) -> Dict[str, int]:
        """
        Coefficients as a dict, in the given stratum order (names not listed come last, sorted).

        Example:

            >>> ConstructibleFunction({'S1': -1, 'O': 2}).to_dict(['B', 'O', 'S1'])
            {'O': 2, 'S1': -1}
        """
        order = list(order or [])
        rank = {name: i for i, name in enumerate(order)}
        names = sorted(self._coeffs, key=lambda name: (rank.get(name, len(order)), name))
        return {name: self._coeffs[name] for name in names}

    def text(self, order: Optional[Sequence[str]] = None) -> str:
        if not self._coeffs:
            return "0"
        result = ""
        for name, value in self.to_dict(order).items():
            term = f"1_{name}" if abs(value) == 1 else f"{abs(value)}*1_{name}"
            if not result:
                result = ("-" if value < 0 else "") + term
            else:
                result += (" - " if value < 0 else " + ") + term
        return result

    def __str__(self):
        return self.text()

    def __repr__(self):
        return f"ConstructibleFunction({self._coeffs})"
