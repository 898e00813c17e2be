from verspec.chow.space import Space
from verspec.chow.base import ProjectiveSpace, FormalBase, projective_space, formal_base
from verspec.chow.bundle import ProjBundleOOL, proj_bundle_ool
from verspec.chow.blowup import CenterSpec, BlowupCI, blowup_ci
from verspec.chow.maps import integrate, pullback, pushforward_to_base
