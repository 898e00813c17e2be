from verspec.ring.spec import GeneratorSpec, RewriteRule, DegreeBound, RingSpec
from verspec.ring.polynomial import Polynomial, as_coefficient
from verspec.ring.ring import Ring, make_ring
from verspec.ring.algebra import mul, invert_unit, grade_component
