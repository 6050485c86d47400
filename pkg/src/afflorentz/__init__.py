"""Left-invariant Lorentzian structures on the group Aff+(R): causal structure,
geodesics, distance, spheres, Killing fields and the flat embedding."""
from .causal import CausalClass, Stratum, classify, in_causal_future, in_causal_past, is_globally_hyperbolic
from .connection import levi_civita, sectional_curvature_numeric
from .errors import *  # noqa: F401,F403
from .geodesics import Geodesic, completeness_report, domain_bounds, exp_map, lightlike_curve, psi_of_t
from .group import IDENTITY, GroupPoint, TangentVector, group_inv, group_mul, left_translate, lie_exp, lie_log
from .isometry import KillingField, MinkowskiPoint, embed_flat, killing_basis, killing_residual, lie_bracket, minkowski_distance
from .oracles import brute_force_distance, finite_diff_jacobian, integrate_extremal
from .problem import CurvSign, ProblemSpec, make_problem, preset
from .synthesis import distance, distance_info, exp_inverse, jacobian_exp, sphere

__version__ = "0.1.0"
