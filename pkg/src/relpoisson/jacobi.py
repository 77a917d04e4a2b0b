"""Unit extension and the end-to-end pipeline from a relative pre-Poisson
algebra to a Frobenius Jacobi algebra.

Every stage output is re-verified even where a theorem guarantees it, so
each construction doubles as an executable assertion; a failure raises
:class:`PipelineError` naming the stage.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    BilinearOp,
    PreconditionError,
    RelPoissonAlgebra,
    AxiomReport,
    check_jacobi_algebra,
    check_rel_poisson,
    find_unit,
)
from .coalgebra import (
    BialgebraData,
    check_bialgebra,
    dual_rel_poisson_algebra,
    induced_matched_pair,
)
from .linalg import (
    ONE,
    ZERO,
    LinearMap,
    Space,
    Tensor2,
    basis_vector,
    mat_is_zero,
)
from .pairing import (
    BilinearForm,
    canonical_pairing,
    check_invariant_form,
    check_manin_triple,
    check_matched_pair,
    combine_matched_pair,
    is_nondegenerate,
)
from .prepoisson import RelPrePoissonAlgebra, check_rel_pre_poisson, subadjacent
from .representations import RepData, check_jacobi_representation, check_representation
from .yangbaxter import (
    OOperator,
    check_rpybe,
    check_weak_o_operator,
    coboundary_comults,
    o_operator_to_rmatrix,
)


@dataclass(frozen=True)
class FrobeniusJacobiAlgebra:
    """A unital relative Poisson algebra whose derivation is the adjoint
    action of the unit, carrying a symmetric nondegenerate invariant form."""

    algebra: RelPoissonAlgebra
    form: BilinearForm
    unit: tuple


class PipelineError(RuntimeError):
    """A pipeline stage failed; carries the stage name and its report."""

    def __init__(self, stage: str, detail: str, report: AxiomReport | None = None):
        super().__init__(f"stage {stage}: {detail}")
        self.stage = stage
        self.report = report


def extend_jacobi(alg: RelPoissonAlgebra) -> RelPoissonAlgebra:
    """Adjoin a unit e (first basis slot): e.x = x, [e, x] = D(x), and the
    extended derivation kills e.  The result is a Jacobi algebra whose
    derivation is ad(e)."""
    report = check_rel_poisson(alg)
    if not report.ok:
        raise PreconditionError(
            f"not a relative Poisson algebra: {', '.join(report.axioms_failed())}",
            report,
        )
    n = alg.dim
    unit_label = "e"
    while unit_label in alg.space.labels:
        unit_label += "'"
    space = Space((unit_label,) + alg.space.labels)

    def pad(vec):
        return (ZERO,) + tuple(vec)

    size = n + 1
    unit_vec = basis_vector(size, 0)
    zero = (ZERO,) * size
    dot_table = [[zero] * size for _ in range(size)]
    br_table = [[zero] * size for _ in range(size)]
    dot_table[0][0] = unit_vec
    for i in range(n):
        ei = basis_vector(size, i + 1)
        dot_table[0][i + 1] = ei
        dot_table[i + 1][0] = ei
        der_col = pad(alg.derivation.column(i))
        br_table[0][i + 1] = der_col
        br_table[i + 1][0] = tuple(-x for x in der_col)
        for j in range(n):
            dot_table[i + 1][j + 1] = pad(alg.dot.product(i, j))
            br_table[i + 1][j + 1] = pad(alg.bracket.product(i, j))
    rows = [(ZERO,) * size]
    for i in range(n):
        rows.append((ZERO,) + tuple(alg.derivation.entries[i]))
    return RelPoissonAlgebra(
        space,
        BilinearOp(space, tuple(tuple(r) for r in dot_table)),
        BilinearOp(space, tuple(tuple(r) for r in br_table)),
        LinearMap(space, space, tuple(rows)),
    )


def extend_representation(rep: RepData) -> tuple[RelPoissonAlgebra, RepData]:
    """Extend a representation over the unit extension: the unit acts as
    the identity through the dot and as alpha through the bracket."""
    report = check_representation(rep)
    if not report.ok:
        raise PreconditionError(
            f"not a representation: {', '.join(report.axioms_failed())}", report
        )
    extended = extend_jacobi(rep.algebra)
    m = rep.space.dim
    identity = tuple(
        tuple(ONE if i == j else ZERO for j in range(m)) for i in range(m)
    )
    ext_rep = RepData(
        algebra=extended,
        space=rep.space,
        dot_action=(identity,) + rep.dot_action,
        bracket_action=(rep.der_action,) + rep.bracket_action,
        der_action=rep.der_action,
    )
    return extended, ext_rep


def lift_o_operator(rep: RepData, operator: LinearMap) -> OOperator:
    """Lift an O-operator T: V -> A to the unit extension (zero component
    on the new unit); the lift is again an O-operator."""
    pre = check_weak_o_operator(rep.algebra, rep, rep.der_action, operator)
    rep_ok = check_representation(rep)
    if not (pre.ok and rep_ok.ok):
        failed = ", ".join(pre.axioms_failed() + rep_ok.axioms_failed())
        raise PreconditionError(f"not an O-operator: {failed}", pre)
    extended, ext_rep = extend_representation(rep)
    lifted = LinearMap(
        rep.space,
        extended.space,
        ((ZERO,) * rep.space.dim,) + operator.entries,
    )
    post = check_weak_o_operator(extended, ext_rep, ext_rep.der_action, lifted)
    if not post.ok:
        raise PipelineError("lift-o-operator", "lifted operator failed verification", post)
    return OOperator(ext_rep, lifted)


def _relabel_algebra(alg: RelPoissonAlgebra, space: Space) -> RelPoissonAlgebra:
    return RelPoissonAlgebra(
        space,
        BilinearOp(space, alg.dot.table),
        BilinearOp(space, alg.bracket.table),
        LinearMap(space, space, alg.derivation.entries),
    )


def frobenius_jacobi_pipeline(
    pp: RelPrePoissonAlgebra,
) -> tuple[BialgebraData, FrobeniusJacobiAlgebra]:
    """End-to-end construction of a Frobenius Jacobi algebra:

    sub-adjacent algebra -> unit extension -> extended representation ->
    identity O-operator lift -> antisymmetric YBE solution in the
    semi-direct algebra -> coboundary bialgebra -> matched pair -> double
    with the canonical pairing form.

    Returns the intermediate bialgebra (on the relabelled semi-direct
    algebra E, E1, ..) and the final Frobenius Jacobi algebra of dimension
    2(2 dim + 1).
    """

    def stage(name: str, report: AxiomReport):
        if not report.ok:
            raise PipelineError(name, ", ".join(report.axioms_failed()), report)

    stage("pre-poisson", check_rel_pre_poisson(pp))
    sub, rep = subadjacent(pp)
    stage("sub-adjacent", check_rel_poisson(sub))
    stage("sub-adjacent", check_representation(rep))
    stage(
        "sub-adjacent",
        check_weak_o_operator(sub, rep, rep.der_action, LinearMap.identity(sub.space)),
    )

    lift = lift_o_operator(rep, LinearMap.identity(sub.space))
    extended = lift.rep.algebra
    stage("extend-jacobi", check_jacobi_algebra(extended.dot, extended.bracket))
    unit = find_unit(extended.dot)
    if unit is None:
        raise PipelineError("extend-jacobi", "extension has no unit")
    # derivation of the extension must be ad(unit)
    for j in range(extended.dim):
        if extended.bracket.apply(unit, basis_vector(extended.dim, j)) != extended.derivation.column(j):
            raise PipelineError("extend-jacobi", "derivation is not ad(unit)")
    stage("extend-representation", check_representation(lift.rep))
    stage(
        "extend-representation",
        check_jacobi_representation(
            extended.dot,
            extended.bracket,
            lift.rep.dot_action,
            lift.rep.bracket_action,
            lift.rep.space,
        ),
    )

    neg_alpha = tuple(tuple(-x for x in row) for row in lift.rep.der_action)
    neg_der = LinearMap(
        extended.space,
        extended.space,
        tuple(tuple(-x for x in row) for row in extended.derivation.entries),
    )
    semidirect, rmat = o_operator_to_rmatrix(lift.rep, neg_alpha, neg_der, lift.operator)

    # relabel to E, E1, .., E2n and rebuild r on the relabelled space
    dim = semidirect.dim
    labels = ("E",) + tuple(f"E{i}" for i in range(1, dim))
    space = Space(labels)
    semidirect = _relabel_algebra(semidirect, space)
    rmat = Tensor2(space, space, rmat.coeffs)
    codrv = LinearMap(
        space, space, tuple(tuple(-x for x in row) for row in semidirect.derivation.entries)
    )
    stage("yang-baxter", check_rpybe(semidirect, codrv, rmat))

    dot_comult, bracket_comult = coboundary_comults(semidirect, rmat)
    unit_vec = basis_vector(dim, 0)
    if not mat_is_zero(dot_comult.of(unit_vec)):
        raise PipelineError("coboundary", "comultiplication does not kill the unit")
    bialgebra = BialgebraData(semidirect, dot_comult, bracket_comult, codrv)
    stage("bialgebra", check_bialgebra(bialgebra))

    pair = induced_matched_pair(bialgebra)
    stage("matched-pair", check_matched_pair(pair))

    double = combine_matched_pair(pair)
    dual_alg = dual_rel_poisson_algebra(bialgebra)
    stage("double", check_manin_triple(semidirect, dual_alg, double))
    stage("double", check_jacobi_algebra(double.dot, double.bracket))
    double_unit = find_unit(double.dot)
    if double_unit is None or double_unit != basis_vector(double.dim, 0):
        raise PipelineError("double", "double is not unital with the expected unit")
    for j in range(double.dim):
        if double.bracket.apply(double_unit, basis_vector(double.dim, j)) != double.derivation.column(j):
            raise PipelineError("double", "derivation of the double is not ad(unit)")
    form = canonical_pairing(double.space)
    if not form.is_symmetric() or not is_nondegenerate(form):
        raise PipelineError("double", "pairing form is not symmetric nondegenerate")
    stage("double", check_invariant_form(double, form))
    return bialgebra, FrobeniusJacobiAlgebra(double, form, double_unit)


__all__ = [
    "FrobeniusJacobiAlgebra",
    "PipelineError",
    "extend_jacobi",
    "extend_representation",
    "lift_o_operator",
    "frobenius_jacobi_pipeline",
]
