"""
This file is part of verspec, relative Verdier specialization checks.

verspec is free software: you can redistribute it and/or modify it under the terms of the GNU Lesser General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

verspec is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with verspec.
If not, see <https://www.gnu.org/licenses/>.
"""
from __future__ import annotations
from typing import Any, Dict, List, Optional, Tuple

from dataclasses import dataclass
from fractions import Fraction

from typing_extensions import Literal

from verspec import conf
from verspec.cclass import CISpec, csm_smooth_ci
from verspec.cfun import ConstructibleFunction, euler_cf
from verspec.cfun.strata import Chi
from verspec.q7.model import Q7Model
from verspec.q7.sides import lhs_class, rhs_constructible, rhs_class
from verspec.q7.variants import VariantFlags
from verspec.ring import Polynomial
from verspec.util.exception import VerspecException
from verspec.util.log import debug, info


def as_json_value(value: Any) -> Any:
    """
    Integers stay integers, other rationals and classes become their text.

    Examples:

        >>> as_json_value(Fraction(12)), as_json_value(Fraction(1, 2))
        (12, '1/2')
    """
    if isinstance(value, bool):
        return value
    if isinstance(value, Fraction):
        return int(value) if value.denominator == 1 else str(value)
    if isinstance(value, Polynomial):
        return str(value)
    return value


@dataclass(frozen=True, eq=False)
class VerificationReport:
    """
    Both sides of the identity, per degree and at Euler characteristic level, and the verdict.

    The verdict is "pass" iff the classes agree in every degree and the Euler characteristics agree.
    """

    config: Dict[str, Any]
    variant: Dict[str, Any]
    dim: int
    lhs_class: Polynomial
    rhs_class: Polynomial
    rhs_cf: ConstructibleFunction
    lhs_chi: Chi
    rhs_chi: Chi
    strata: Dict[str, Chi]
    orientifold: Optional[Dict[str, Any]]
    double_cover: Optional[Dict[str, Any]]
    verdict: Literal["pass", "fail"]
    notes: Tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"

    def by_degree(self) -> List[Tuple[int, Polynomial, Polynomial, bool]]:
        """(degree, lhs part, rhs part, equal) for each degree of the base."""
        rows = []
        for d in range(self.dim + 1):
            lhs, rhs = self.lhs_class.grade(d), self.rhs_class.grade(d)
            rows.append((d, lhs, rhs, lhs == rhs))
        return rows

    def to_dict(self) -> Dict[str, Any]:
        """
        The report as plain data, with a fixed key order.
        """
        data: Dict[str, Any] = {
            "config": self.config,
            "variant": self.variant,
            "lhs": {
                "by_degree": {str(d): str(lhs) for d, lhs, _, _ in self.by_degree()},
                "chi": as_json_value(self.lhs_chi),
            },
            "rhs": {
                "cf": self.rhs_cf.to_dict(list(self.strata)),
                "by_degree": {str(d): str(rhs) for d, _, rhs, _ in self.by_degree()},
                "chi": as_json_value(self.rhs_chi),
            },
            "strata": {name: as_json_value(chi) for name, chi in self.strata.items()},
        }
        if self.orientifold is not None:
            data["orientifold"] = self.orientifold
        if self.double_cover is not None:
            data["double_cover"] = self.double_cover
        data["verdict"] = self.verdict
        data["notes"] = list(self.notes)
        return data


def orientifold_report(model: Q7Model, flags: Optional[VariantFlags] = None) -> Dict[str, Any]:
    """
    Orientifold Euler characteristics chi_o(D) = m chi(D) - chi(S), where S is the singular locus of D on the orientifold,
    and the tadpole total 2 chi(O) + sum chi_o(D).

    Only for numeric bases. "rhs_chi" is the pushed forward Euler characteristic under the given flags,
    so "consistent" compares against the identity the run actually checks.

    Example:

        >>> from verspec.q7.model import build_model
        >>> report = orientifold_report(build_model('P3', 1))
        >>> [brane['chi_o'] for brane in report['branes'].values()], report['total']
        ([8, 8], 24)
    """
    if model.is_formal:
        raise VerspecException(f"The orientifold report needs a numeric base, not {model.base_spec}")
    registry = model.registry
    chi_O = registry.chi(conf.orientifold)

    branes = {}
    for name, brane in conf.branes.items():
        m = brane["multiplicity"]
        singular = brane.get("singular_on_orientifold")
        chi_S = registry.chi(singular) if singular else 0
        branes[name] = {
            "multiplicity": m,
            "chi": as_json_value(registry.chi(name)),
            "singular_on_orientifold": singular,
            "chi_singular": as_json_value(chi_S),
            "chi_o": as_json_value(m * registry.chi(name) - chi_S),
        }
    total = 2 * chi_O + sum(brane["chi_o"] for brane in branes.values())
    tadpole = euler_cf(rhs_constructible(model, flags or VariantFlags()), registry)

    return {
        "orientifold": conf.orientifold,
        "chi_orientifold": as_json_value(chi_O),
        "branes": branes,
        "total": as_json_value(total),
        "rhs_chi": as_json_value(tadpole),
        "consistent": total == tadpole,
    }


def double_cover_report(model: Q7Model, chi_Y: Chi) -> Dict[str, Any]:
    """
    The double cover form of the tadpole relation, with transverse pullback numbers:

        chi(V bar) = 2 chi(V) - chi(V cap O), or chi(V) for V inside O.

    Informational: a brane pulling back tangentially to the ramification locus is not covered by these numbers.
    """
    if model.is_formal:
        raise VerspecException(f"The double cover report needs a numeric base, not {model.base_spec}")
    registry = model.registry
    base = model.base

    entries = {}
    rhs = 0
    for name, data in conf.double_cover.items():
        chi = registry.chi(name)
        if data.get("inside_orientifold"):
            lifted = chi
        elif "meets_orientifold" in data:
            lifted = 2 * chi - registry.chi(data["meets_orientifold"])
        elif "meets_orientifold_classes" in data:
            meet = CISpec(base, [k * model.Lclass for k in data["meets_orientifold_classes"]])
            lifted = 2 * chi - base.integrate(csm_smooth_ci(meet))
        else:
            raise VerspecException(f"Double cover entry {name!r} does not say how {name} meets the orientifold")
        coefficient = data.get("coefficient", 1)
        rhs = rhs + coefficient * lifted
        entries[name] = {
            "coefficient": coefficient,
            "chi": as_json_value(chi),
            "chi_cover": as_json_value(lifted),
            "tangent": bool(data.get("tangent", False)),
        }
    lhs = 2 * chi_Y
    return {
        "lhs": as_json_value(lhs),
        "rhs": as_json_value(rhs),
        "holds": lhs == rhs,
        "entries": entries,
        "informational": True,
    }


def verify(model: Q7Model, flags: Optional[VariantFlags] = None) -> VerificationReport:
    """
    Computes both sides, compares them degree by degree and at Euler characteristic level.

    A failed comparison is a verdict, not an error.

    Examples:

        >>> from verspec.q7.model import build_model
        >>> report = verify(build_model('P1', 1))
        >>> report.verdict, report.lhs_chi, report.rhs_chi
        ('pass', 12, 12)
        >>> report = verify(build_model('P1', 1), VariantFlags('paper-printed'))
        >>> report.verdict, report.lhs_chi, report.rhs_chi
        ('fail', 12, 14)
    """
    flags = flags or VariantFlags()
    registry = model.registry

    lhs = lhs_class(model)
    cf = rhs_constructible(model, flags)
    rhs = rhs_class(model, cf)

    lhs_chi = model.base.integrate(lhs)
    if isinstance(lhs_chi, Fraction) and lhs_chi.denominator == 1:
        lhs_chi = int(lhs_chi)
    rhs_chi = euler_cf(cf, registry)

    degrees_equal = True
    for d in range(model.base.dim + 1):
        equal = lhs.grade(d) == rhs.grade(d)
        debug(f"{model} degree {d}: {lhs.grade(d)} | {rhs.grade(d)} | {'equal' if equal else 'different'}")
        degrees_equal = degrees_equal and equal
    verdict = "pass" if degrees_equal and lhs_chi == rhs_chi else "fail"

    notes = [conf.notes["delta_rule"], conf.notes["calD2_table"]]
    if flags.fiber_tables == "override":
        notes.append("fiber tables overridden: {}".format(", ".join(name for name, _ in flags.table_overrides)))

    orientifold = None
    double_cover = None
    if not model.is_formal:
        orientifold = orientifold_report(model, flags)
        double_cover = double_cover_report(model, lhs_chi)
        notes.append(conf.notes["double_cover"])

    info(f"{model} [{flags.delta_rule}]: {verdict} (chi {as_json_value(lhs_chi)} vs {as_json_value(rhs_chi)})")

    return VerificationReport(
        config=model.config(),
        variant=flags.to_dict(),
        dim=model.base.dim,
        lhs_class=lhs,
        rhs_class=rhs,
        rhs_cf=cf,
        lhs_chi=lhs_chi,
        rhs_chi=rhs_chi,
        strata={stratum.name: stratum.chi for stratum in registry},
        orientifold=orientifold,
        double_cover=double_cover,
        verdict=verdict,
        notes=tuple(notes),
    )
