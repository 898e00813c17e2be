"""
This file is part of verspec, relative Verdier specialization checks.

verspec is free software: you can redistribute it and/or modify it under the terms of the GNU Lesser General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

verspec is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with verspec.
If not, see <https://www.gnu.org/licenses/>.
"""
from __future__ import annotations
from typing import Any, Dict, Mapping, Optional, Union

from dataclasses import dataclass
from fractions import Fraction

from verspec import conf
from verspec.chow import Space, ProjBundleOOL, proj_bundle_ool
from verspec.cclass import HypersurfaceSpec, CISpec, csm_smooth_ci, csm_a1_hypersurface
from verspec.cfun import Stratum, StrataRegistry, FibrationTable, NCDescriptor
from verspec.q7.variants import BaseSpec, parse_fiber_tables
from verspec.ring import Polynomial
from verspec.util.exception import VerspecException
from verspec.util.log import debug

"""
The Q7 model: the fibration Y in P(O + O + L) over a base, and the strata of its limiting discriminant on the base.

The model data (classes, strata, fiber tables, normal crossing components) is read from the model configuration,
see verspec_q7_conf/verspec_model_conf.py.
"""


@dataclass(frozen=True, eq=False)
class Q7Model:
    """
    A populated model.

    Args:
        base_spec: the BaseSpec
        Ldegree: degree of L on P^n, None on formal bases
        base: the base Space
        Lclass: c1(L) on the base
        ambient: P(O + O + L)
        Yclass: the class of Y in the ambient
        registry: the strata of the base, with their Euler characteristics and CSM classes
        tables: fibration tables of the components of the resolved central fiber, and of their intersection
        nc: the resolved central fiber, as a normal crossing divisor
    """

    base_spec: BaseSpec
    Ldegree: Optional[int]
    base: Space
    Lclass: Polynomial
    ambient: ProjBundleOOL
    Yclass: Polynomial
    registry: StrataRegistry
    tables: Mapping[str, FibrationTable]
    nc: NCDescriptor

    @property
    def is_formal(self) -> bool:
        return self.base_spec.is_formal

    def config(self) -> Dict[str, Any]:
        return {"base": self.base_spec.to_dict(), "L": {"degree": self.Ldegree}}

    def __str__(self):
        if self.is_formal:
            return f"Q7 over {self.base_spec}"
        return f"Q7 over {self.base_spec}, deg L = {self.Ldegree}"


def resolve_L_degree(base_spec: BaseSpec, value: Union[int, str, None]) -> Optional[int]:
    """
    The degree of L on P^n: a positive integer, or "anticanonical" for n + 1. None on formal bases.

    Example:

        >>> resolve_L_degree(BaseSpec.parse('P2'), 'anticanonical')
        3
    """
    if base_spec.is_formal:
        return None
    if value == "anticanonical":
        return base_spec.dim + 1
    if isinstance(value, str) and value.strip().isdigit():
        value = int(value)
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise VerspecException(f'Degree of L must be an integer >= 1 or "anticanonical", got {value!r}')
    return value


def _number(value):
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


def build_registry(base: Space, Lclass: Polynomial, strata: Mapping[str, Mapping[str, Any]]) -> StrataRegistry:
    """
    Registers the configured strata, with classes given as multiples of L.

    A stratum is either a smooth complete intersection ({"classes": [2, 2]}),
    or a hypersurface with a transversal A1 singularity along a complete intersection
    ({"singular": {"class": 4, "center": [2, 2, 2]}}).
    """
    registry = StrataRegistry(base.dim, ring=base.ring)
    for name, definition in strata.items():
        if "singular" in definition:
            singular = definition["singular"]
            hypersurface = HypersurfaceSpec(base, singular["class"] * Lclass)
            center = [k * Lclass for k in singular["center"]]
            codim = 1
            csm = csm_a1_hypersurface(hypersurface, center) if codim <= base.dim else None
        elif "classes" in definition:
            classes = [k * Lclass for k in definition["classes"]]
            codim = len(classes)
            csm = csm_smooth_ci(CISpec(base, classes)) if codim <= base.dim else None
        else:
            raise VerspecException(f'Stratum {name!r} needs "classes" or "singular", got {dict(definition)}')

        if csm is None:
            registry.register(Stratum(name, None, None, codim))
        else:
            registry.register(Stratum(name, _number(base.integrate(csm)), csm, codim))
    return registry


def build_model(
    base_spec: Union[BaseSpec, str, Mapping[str, Any]],
    Ldegree: Union[int, str, None] = 1,
) -> Q7Model:
    """
    Builds the Q7 model over the base, with L of the given degree (ignored on formal bases).

    Examples:

        >>> model = build_model('P1', 1)
        >>> [(s.name, s.chi) for s in model.registry]
        [('B', 2), ('O', 2), ('D1', 2), ('S1', 0), ('D2', 4), ('S2', 0)]
        >>> str(build_model('formal:1').registry.csm('D2'))
        '4L'
    """
    base_spec = BaseSpec.parse(base_spec)
    base = base_spec.space()
    Ldegree = resolve_L_degree(base_spec, Ldegree)
    if base_spec.is_formal:
        Lclass = base.L
    else:
        Lclass = Ldegree * base.hyperplane

    ambient = proj_bundle_ool(base, Lclass)
    zeta_coefficient, L_coefficient = conf.hypersurface_class
    Yclass = zeta_coefficient * ambient.zeta + L_coefficient * ambient.L

    registry = build_registry(base, Lclass, conf.strata)
    tables = parse_fiber_tables(conf.fiber_tables)
    normal_crossing = conf.normal_crossing
    nc = NCDescriptor(
        tuple((name, m) for name, m in normal_crossing["components"]),
        normal_crossing.get("intersection"),
    )

    model = Q7Model(base_spec, Ldegree, base, Lclass, ambient, Yclass, registry, tables, nc)
    debug(f"Built {model}: Y = {Yclass}")
    return model
