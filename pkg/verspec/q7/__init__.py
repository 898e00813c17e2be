from verspec.q7.variants import BaseSpec, VariantFlags, resolve_delta_rule, parse_fiber_tables
from verspec.q7.model import Q7Model, build_model, build_registry, resolve_L_degree
from verspec.q7.sides import lhs_class, rhs_constructible, rhs_class
from verspec.q7.report import VerificationReport, verify, orientifold_report, double_cover_report, as_json_value
