"""Exact toric models of C*-action bordisms, pruning and Mori dream pair realization."""
from .action import (
    ActionAnalysis, analyze_action, admissible_quotients, extend_divisor, is_b_type,
    is_bordism, is_equalized_at_extremes, is_q_factorial, non_admissible_is_prefix_suffix,
)
from .errors import GeometryError, InputError, PreconditionError, VerificationError
from .geometry.cone import cone_over, generation_degree, hilbert_basis
from .geometry.fan import normal_fan, normally_equivalent
from .geometry.polytope import (
    LatticePolytope, RationalPolytope, canonicalize, faces, lattice_points, slice_polytope,
)
from .geometry.split import lattice_split, project_level_set
from .kernels import BACKEND
from .oracle import graded_section_counts, semigroup_generated_check, weight_subalgebra_model
from .pruning import prune, verify_pruning_theorem
from .quotients import (
    chamber_decomposition, extract_mdp, geometric_quotient, quotient_chain,
    semigeometric_quotient, verify_section_isomorphisms,
)
from .realization import (
    MDPInput, compare_realizations, realize, validate_mdp, verify_realization,
)

__version__ = "0.1.0"
