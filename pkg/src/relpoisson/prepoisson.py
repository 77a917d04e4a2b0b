"""Zinbiel and pre-Lie algebras, relative pre-Poisson algebras, and their
sub-adjacent relative Poisson structure with its tautological O-operator.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    DEFAULT_VIOLATION_LIMIT,
    AxiomReport,
    BilinearOp,
    Collector,
    PreconditionError,
    RelPoissonAlgebra,
    check_derivation,
    combine_reports,
)
from .linalg import LinearMap, Space, Tensor2, vec_add, vec_sub
from .representations import RepData
from .yangbaxter import o_operator_to_rmatrix


@dataclass(frozen=True)
class RelPrePoissonAlgebra:
    """Candidate quadruple (space, star, circ, derivation); verified by
    :func:`check_rel_pre_poisson`."""

    space: Space
    star: BilinearOp
    circ: BilinearOp
    derivation: LinearMap

    def __post_init__(self):
        if not (
            self.star.space == self.space
            and self.circ.space == self.space
            and self.derivation.domain == self.space
            and self.derivation.codomain == self.space
        ):
            raise ValueError("algebra components live on different spaces")

    @property
    def dim(self) -> int:
        return self.space.dim


def check_zinbiel(m: BilinearOp, limit: int = DEFAULT_VIOLATION_LIMIT) -> AxiomReport:
    """x*(y*z) = (y*x)*z + (x*y)*z on basis triples."""
    n = m.space.dim
    coll = Collector(limit)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                lhs = m.apply_basis_left(x, m.product(y, z))
                rhs = vec_add(
                    m.apply_basis_right(m.product(y, x), z),
                    m.apply_basis_right(m.product(x, y), z),
                )
                coll.check("zinbiel", (x, y, z), vec_sub(lhs, rhs))
    return coll.report()


def check_prelie(m: BilinearOp, limit: int = DEFAULT_VIOLATION_LIMIT) -> AxiomReport:
    """(x o y) o z - x o (y o z) is symmetric in x and y on basis triples."""
    n = m.space.dim
    coll = Collector(limit)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                lhs = vec_sub(
                    m.apply_basis_right(m.product(x, y), z),
                    m.apply_basis_left(x, m.product(y, z)),
                )
                rhs = vec_sub(
                    m.apply_basis_right(m.product(y, x), z),
                    m.apply_basis_left(y, m.product(x, z)),
                )
                coll.check("pre-lie", (x, y, z), vec_sub(lhs, rhs))
    return coll.report()


def check_rel_pre_poisson(
    pp: RelPrePoissonAlgebra, limit: int = DEFAULT_VIOLATION_LIMIT
) -> AxiomReport:
    """Zinbiel + pre-Lie + derivation of both + the two mixed conditions."""
    star, circ, der = pp.star, pp.circ, pp.derivation
    n = pp.dim
    coll = Collector(limit)
    coll.merge(check_zinbiel(star, limit))
    coll.merge(check_prelie(circ, limit))
    coll.merge(check_derivation(star, der, limit), "star:")
    coll.merge(check_derivation(circ, der, limit), "circ:")
    dcols = [der.column(z) for z in range(n)]
    for x in range(n):
        for y in range(n):
            sym = vec_add(star.product(x, y), star.product(y, x))
            for z in range(n):
                # (x*y + y*x) o z - x*(y o z) - y*(x o z) + (x*y + y*x)*D(z)
                defect = circ.apply_basis_right(sym, z)
                defect = vec_sub(defect, star.apply_basis_left(x, circ.product(y, z)))
                defect = vec_sub(defect, star.apply_basis_left(y, circ.product(x, z)))
                defect = vec_add(defect, star.apply(sym, dcols[z]))
                coll.check("mixed-dot-side", (x, y, z), defect)
                # y o (x*z) - x*(y o z) + (x o y - y o x)*z - (x*D(y) + D(y)*x)*z
                defect = circ.apply_basis_left(y, star.product(x, z))
                defect = vec_sub(defect, star.apply_basis_left(x, circ.product(y, z)))
                anti = vec_sub(circ.product(x, y), circ.product(y, x))
                defect = vec_add(defect, star.apply_basis_right(anti, z))
                mixed = vec_add(
                    star.apply_basis_left(x, dcols[y]),
                    star.apply_basis_right(dcols[y], x),
                )
                defect = vec_sub(defect, star.apply_basis_right(mixed, z))
                coll.check("mixed-bracket-side", (x, y, z), defect)
    return coll.report()


def circ_from_derivation(star: BilinearOp, der: LinearMap) -> BilinearOp:
    """The pre-Lie product x o y = x*D(y) - D(x)*y of a Zinbiel algebra
    with derivation; the quadruple is then relative pre-Poisson."""
    pre = combine_reports(check_zinbiel(star), check_derivation(star, der))
    if not pre.ok:
        raise PreconditionError(
            f"input is not a Zinbiel algebra with derivation: "
            f"{', '.join(pre.axioms_failed())}",
            pre,
        )
    n = star.space.dim
    cols = [der.column(j) for j in range(n)]
    table = tuple(
        tuple(
            vec_sub(star.apply_basis_left(i, cols[j]), star.apply_basis_right(cols[i], j))
            for j in range(n)
        )
        for i in range(n)
    )
    return BilinearOp(star.space, table)


def subadjacent(pp: RelPrePoissonAlgebra) -> tuple[RelPoissonAlgebra, RepData]:
    """The sub-adjacent relative Poisson algebra (x.y = x*y + y*x,
    [x,y] = x o y - y o x) together with the left-multiplication
    representation for which the identity map is an O-operator."""
    report = check_rel_pre_poisson(pp)
    if not report.ok:
        raise PreconditionError(
            f"not a relative pre-Poisson algebra: {', '.join(report.axioms_failed())}",
            report,
        )
    n = pp.dim
    dot_table = tuple(
        tuple(vec_add(pp.star.product(i, j), pp.star.product(j, i)) for j in range(n))
        for i in range(n)
    )
    br_table = tuple(
        tuple(vec_sub(pp.circ.product(i, j), pp.circ.product(j, i)) for j in range(n))
        for i in range(n)
    )
    alg = RelPoissonAlgebra(
        pp.space,
        BilinearOp(pp.space, dot_table),
        BilinearOp(pp.space, br_table),
        pp.derivation,
    )
    rep = RepData(
        algebra=alg,
        space=pp.space,
        dot_action=tuple(pp.star.left_matrix(i) for i in range(n)),
        bracket_action=tuple(pp.circ.left_matrix(i) for i in range(n)),
        der_action=pp.derivation.entries,
    )
    return alg, rep


def prepoisson_to_rmatrix(
    pp: RelPrePoissonAlgebra,
) -> tuple[RelPoissonAlgebra, Tensor2]:
    """The canonical antisymmetric YBE solution of a relative pre-Poisson
    algebra: the identity O-operator on the sub-adjacent algebra, embedded
    in the semi-direct double on A + A* with derivation D - D^T."""
    alg, rep = subadjacent(pp)
    neg_der = tuple(tuple(-x for x in row) for row in pp.derivation.entries)
    codrv = LinearMap(pp.space, pp.space, neg_der)
    return o_operator_to_rmatrix(rep, neg_der, codrv, LinearMap.identity(pp.space))
