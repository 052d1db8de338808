"""Majorana point representation of permutation-symmetric multiqubit states.

Core objects: weight-indexed symmetric states, dense states, Majorana
constellations (roots of the state polynomial on the projective line), SLOCC
degeneracy configurations, reduced density matrices with two-marginal
reconstruction, and the geometric measure of entanglement over coherent
product states.
"""

from .geomeasure import (
    CoherentPoint,
    EntanglementReport,
    coherent_coefficients,
    coherent_overlap,
    dicke_closed_form,
    geometric_measure,
    overlap_gradient,
    overlap_landscape,
)
from .marginals import (
    InconsistentMarginalsError,
    MarginalRankError,
    ReconstructionResult,
    concurrence,
    dicke_basis_matrix,
    dnk_state,
    generalized_dicke_state,
    marginal_match_search,
    rdm_full,
    rdm_symmetric,
    reconstruct_from_two_marginals,
    three_tangle,
    to_computational,
    uniqueness_conditions,
    weight_combinations,
)
from .slocc import DegeneracyConfiguration, LocalOperation, apply_ilo, classify, same_family
from .states import (
    DensityMatrix,
    FullState,
    Spinor,
    SymmetricState,
    canonical_distance,
    dicke_state,
    expand_to_full,
    fidelity,
    ghz_state,
    overlap,
    project_to_symmetric,
    random_full_state,
    random_ilo,
    random_su2,
    random_symmetric_state,
    w_state,
)
from .stellar import (
    MajoranaConstellation,
    ProjectiveRoot,
    chordal_distance,
    constellation_from_spinors,
    euler_su2,
    majorana_points,
    majorana_polynomial,
    majorana_projection,
    mobius_root,
    state_from_constellation,
    su2_rotate,
    symmetrize,
    wigner_d_column,
)

__version__ = "0.1.0"

__all__ = [
    "CoherentPoint",
    "DegeneracyConfiguration",
    "DensityMatrix",
    "EntanglementReport",
    "FullState",
    "InconsistentMarginalsError",
    "LocalOperation",
    "MajoranaConstellation",
    "MarginalRankError",
    "ProjectiveRoot",
    "ReconstructionResult",
    "Spinor",
    "SymmetricState",
    "apply_ilo",
    "canonical_distance",
    "chordal_distance",
    "classify",
    "coherent_coefficients",
    "coherent_overlap",
    "concurrence",
    "constellation_from_spinors",
    "dicke_basis_matrix",
    "dicke_closed_form",
    "dicke_state",
    "dnk_state",
    "euler_su2",
    "expand_to_full",
    "fidelity",
    "generalized_dicke_state",
    "geometric_measure",
    "ghz_state",
    "majorana_points",
    "majorana_polynomial",
    "majorana_projection",
    "marginal_match_search",
    "mobius_root",
    "overlap",
    "overlap_gradient",
    "overlap_landscape",
    "project_to_symmetric",
    "random_full_state",
    "random_ilo",
    "random_su2",
    "random_symmetric_state",
    "rdm_full",
    "rdm_symmetric",
    "reconstruct_from_two_marginals",
    "same_family",
    "state_from_constellation",
    "su2_rotate",
    "symmetrize",
    "three_tangle",
    "to_computational",
    "uniqueness_conditions",
    "w_state",
    "weight_combinations",
    "wigner_d_column",
]
