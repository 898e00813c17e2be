"""
This file is part of verspec, relative Verdier specialization checks.

verspec is free software: you can redistribute it and/or modify it under the terms of the GNU Lesser General Public License as published by the Free Software Foundation, either version 3 of the License, or (at your option) any later version.

verspec is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY; without even the implied warranty of MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the GNU Lesser General Public License for more details.

You should have received a copy of the GNU Lesser General Public License along with verspec.
If not, see <https://www.gnu.org/licenses/>.
"""
from verspec.conf.global_conf import __version__

try:
    from verspec import conf  # default config bootstrap

    from verspec.ring import RingSpec, GeneratorSpec, RewriteRule, DegreeBound, Ring, make_ring, Polynomial
    from verspec.ring import mul, invert_unit, grade_component

    from verspec.chow import Space, projective_space, formal_base, proj_bundle_ool, blowup_ci
    from verspec.chow import integrate, pullback, pushforward_to_base

    from verspec.cclass import HypersurfaceSpec, CISpec, csm_smooth_ci, fulton_hypersurface_class
    from verspec.cclass import csm_a1_hypersurface, pushforward_csm_hypersurface, euler_characteristic_of

    from verspec.cfun import ConstructibleFunction, StrataRegistry, FibrationTable, NCDescriptor
    from verspec.cfun import pushforward_stratified, specialization_function, euler_cf, csm_cf

    from verspec.q7 import BaseSpec, VariantFlags, build_model, verify, VerificationReport

    from verspec.util.exception import VerspecException, UsageError
    from verspec.util import log
    from verspec.util.log import setLevel, ERROR

    setLevel(ERROR)
except Exception as e:
    import traceback  # fmt: skip
    traceback.print_exc()
    raise Exception(
        "verspec is imported, but impossible to import verspec packages. \n Please check compatibility of your verspec_model_conf file."
    )
