from verspec.cclass.classes import (
    HypersurfaceSpec,
    CISpec,
    csm_smooth_ci,
    fulton_hypersurface_class,
    csm_a1_hypersurface,
    csm_a1_resolution,
    pushforward_csm_hypersurface,
)
from verspec.cclass.oracles import euler_characteristic_of
