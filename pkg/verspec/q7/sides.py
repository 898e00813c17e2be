"""
This file is part of verspec, relative Verdier specialization checks.

verspec is free software: you can redistribute it and/or modify it under the terms of the GNU Lesser General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

verspec is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with verspec.
If not, see <https://www.gnu.org/licenses/>.
"""
from __future__ import annotations
from typing import Optional

from verspec.cclass import HypersurfaceSpec, pushforward_csm_hypersurface
from verspec.cfun import ConstructibleFunction, specialization_function, pushforward_via_tables, csm_cf
from verspec.q7.model import Q7Model
from verspec.q7.variants import VariantFlags
from verspec.ring import Polynomial

"""
The two sides of the identity.

The left side is computed upstairs, in the Chow ring of P(O + O + L).
The right side is computed downstairs, from the strata of the base and the fibration tables.
They share no intermediate result.
"""


def lhs_class(model: Q7Model) -> Polynomial:
    """
    Pushforward to the base of the CSM class of the general fiber Y.

    Example:

        >>> from verspec.q7.model import build_model
        >>> str(lhs_class(build_model('formal:1')))
        '12L'
    """
    return pushforward_csm_hypersurface(HypersurfaceSpec(model.ambient, model.Yclass))


def rhs_constructible(model: Q7Model, flags: Optional[VariantFlags] = None) -> ConstructibleFunction:
    """
    Pushforward to the base of the specialization function of the resolved central fiber.

    Examples:

        >>> from verspec.q7.model import build_model
        >>> model = build_model('P1', 1)
        >>> rhs_constructible(model).to_dict(model.registry.names)
        {'O': 2, 'D1': 2, 'S1': -1, 'D2': 1, 'S2': -1}
        >>> rhs_constructible(model, VariantFlags('paper-printed')).to_dict(model.registry.names)
        {'B': 2, 'O': 1, 'D1': 2, 'S1': -1, 'D2': 1, 'S2': -1}
    """
    flags = flags or VariantFlags()
    delta = specialization_function(model.nc, flags.delta_rule)
    return pushforward_via_tables(delta, flags.tables(model.tables), model.registry)


def rhs_class(model: Q7Model, cf: ConstructibleFunction) -> Polynomial:
    """
    CSM class of the pushed forward constructible function.
    """
    return csm_cf(cf, model.registry)
