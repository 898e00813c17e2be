from verspec.cfun.function import ConstructibleFunction
from verspec.cfun.strata import Stratum, StrataRegistry
from verspec.cfun.tables import FibrationTable, NCDescriptor, CONIC_RANK_CHI, conic_fiber_table
from verspec.cfun.calculus import (
    pushforward_stratified,
    specialization_function,
    pushforward_via_tables,
    euler_cf,
    csm_cf,
)
