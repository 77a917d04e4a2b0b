"""Exact-arithmetic toolkit for relative Poisson algebras: axiom checkers,
representations, matched pairs, Manin triples, bialgebras, Yang-Baxter
solutions, O-operators, pre-Poisson structures, and the construction of
Frobenius Jacobi algebras."""

from .algebra import (
    AxiomReport,
    BilinearOp,
    NoUnitError,
    PreconditionError,
    RelPoissonAlgebra,
    Violation,
    ad_map,
    bracket_from_derivation,
    check_comm_assoc,
    check_derivation,
    check_jacobi_algebra,
    check_lie,
    check_rel_poisson,
    check_relative_leibniz,
    combine_reports,
    find_unit,
)
from .coalgebra import (
    BialgebraData,
    Comultiplication,
    bialgebra_to_matched_pair,
    check_bialgebra,
    check_cocomm_coassoc,
    check_lie_coalgebra,
    check_rel_poisson_coalgebra,
    comult_to_dual_algebra,
    dual_algebra_to_comult,
    dual_rel_poisson_algebra,
    dualize_bialgebra,
    induced_matched_pair,
)
from .jacobi import (
    FrobeniusJacobiAlgebra,
    PipelineError,
    extend_jacobi,
    extend_representation,
    frobenius_jacobi_pipeline,
    lift_o_operator,
)
from .linalg import (
    LinearMap,
    Scalar,
    Space,
    Tensor2,
    Tensor3,
    dual_map,
    rotate_factors,
    swap_factors,
    tensor_as_map,
)
from .pairing import (
    BilinearForm,
    MatchedPairData,
    adjoint_of,
    bowtie,
    canonical_pairing,
    check_invariant_form,
    check_manin_triple,
    check_matched_pair,
    combine_matched_pair,
    is_nondegenerate,
)
from .prepoisson import (
    RelPrePoissonAlgebra,
    check_prelie,
    check_rel_pre_poisson,
    check_zinbiel,
    circ_from_derivation,
    prepoisson_to_rmatrix,
    subadjacent,
)
from .representations import (
    CompatibleStructure,
    RepData,
    adjoint_rep,
    check_compatible_structure,
    check_dual_rep_conditions,
    check_dually_represents,
    check_jacobi_representation,
    check_rep_equivalence,
    check_representation,
    dual_rep,
    semidirect_product,
    semidirect_structure,
)
from .yangbaxter import (
    OOperator,
    aybe_tensor,
    check_coboundary_conditions,
    check_rpybe,
    check_rpybe_via_maps,
    check_semidirect_dual_conditions,
    check_weak_o_operator,
    coboundary_comults,
    cybe_tensor,
    is_antisymmetric,
    o_operator_to_rmatrix,
    semidirect_codrv,
)

__version__ = "0.1.0"
