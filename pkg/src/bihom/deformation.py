"""Linear deformations of BiHom-pre-Lie algebras and Nijenhuis operators.

A bilinear candidate pi (twist-equivariant: ``pi(alpha x, alpha y) =
alpha pi(x, y)`` and the beta analogue) generates a linear deformation of
the product P when ``P + t pi`` remains BiHom-pre-Lie for every t.  The
"for all t" condition is discharged exactly by coefficient extraction: the
twisted-associator symmetry of ``P + t pi`` is quadratic in t, so it holds
for all t iff the t^0 part (the algebra's own identity), the t^1 part (the
mixed cocycle condition) and the t^2 part (pi alone is BiHom-pre-Lie) each
vanish on all basis triples.  The t^1 part is precisely the 2-cocycle
condition for pi in the adjoint complex.

Two deformations pi1, pi2 are equivalent via N when ``Id + t N`` is an
algebra morphism from ``P + t pi2`` to ``P + t pi1`` for all t; expanding in
t gives the commutation of N with the twists plus

    (1)  pi2(x,y) - pi1(x,y) = N(x).y + x.N(y) - N(x.y)
    (2)  pi1(x, N y) + pi1(N x, y) = N(pi2(x,y)) - N(x).N(y)
    (3)  pi1(N x, N y) = 0.

A Nijenhuis operator is a twist-commuting N with ``N(x).N(y) = N(x *_N y)``
where ``x *_N y = N(x).y + x.N(y) - N(x.y)``; it generates the trivial
deformation pi = *_N.  Everything descends to the sub-adjacent BiHom-Lie
algebra, where the same t-extraction discharges the Jacobi identity of
``[.,.] + t pi``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import (
    AxiomError,
    AxiomReport,
    BiHomLieAlgebra,
    BiHomPreLieAlgebra,
    BilinearProduct,
    Violation,
    _Collector,
    check_bihom_lie,
    check_prelie,
    merge_reports,
    subadjacent,
)
from .linalg import Matrix, basis_vector, vec_add, vec_sub, zero_vector

__all__ = [
    "DeformationCandidate",
    "NijenhuisOperator",
    "zero_deformation",
    "check_linear_deformation",
    "check_equivalence",
    "check_nijenhuis_prelie",
    "deformed_product",
    "nijenhuis_trivial_deformation",
    "push_deformation_to_lie",
    "check_nijenhuis_lie",
    "check_lie_linear_deformation",
]


@dataclass(frozen=True)
class DeformationCandidate:
    """The linear term pi of a one-parameter family ``P + t pi``."""

    pi: BilinearProduct


@dataclass(frozen=True)
class NijenhuisOperator:
    """A linear operator generating a trivial linear deformation."""

    matrix: Matrix

    def __post_init__(self) -> None:
        if not self.matrix.is_square:
            raise ValueError("Nijenhuis operators are square matrices")


def zero_deformation(dim: int) -> DeformationCandidate:
    return DeformationCandidate(BilinearProduct.zero(dim))


def _as_pi(pi: DeformationCandidate | BilinearProduct, dim: int) -> BilinearProduct:
    tensor = pi.pi if isinstance(pi, DeformationCandidate) else pi
    if tensor.dim != dim:
        raise ValueError("deformation tensor has the wrong dimension")
    return tensor


def _as_operator(N: NijenhuisOperator | Matrix, dim: int) -> Matrix:
    mat = N.matrix if isinstance(N, NijenhuisOperator) else N
    if mat.rows != dim or mat.cols != dim:
        raise ValueError(f"operator must be {dim}x{dim}")
    return mat


def _prefixed(report: AxiomReport, prefix: str) -> AxiomReport:
    return AxiomReport(tuple(
        Violation(f"{prefix}{v.axiom}", v.indices, v.residual)
        for v in report.violations))


def _equivariance_violations(col: _Collector, pi: BilinearProduct,
                             alpha: Matrix, beta: Matrix) -> None:
    n = pi.dim
    for name, m in (("alpha", alpha), ("beta", beta)):
        cols = [m.col(i) for i in range(n)]
        for i in range(n):
            for j in range(n):
                col.check(f"pi-{name}-equivariance", (i, j),
                          vec_sub(m.apply(pi.basis_value(i, j)),
                                  pi.value(cols[i], cols[j])))


# ---------------------------------------------------------------------------
# pre-Lie side
# ---------------------------------------------------------------------------

def check_linear_deformation(a: BiHomPreLieAlgebra,
                             pi: DeformationCandidate | BilinearProduct) -> AxiomReport:
    """Does pi generate a linear deformation of a?

    Reports, separately: equivariance of pi (a precondition of the notion),
    the base algebra's own axioms (prefixed ``base:``), the t^1 cocycle
    condition and the t^2 condition that pi alone is BiHom-pre-Lie.  The
    report passes iff ``P + t pi`` is BiHom-pre-Lie for every t.
    """
    tensor = _as_pi(pi, a.dim)
    col = _Collector()
    _equivariance_violations(col, tensor, a.alpha, a.beta)
    n = a.dim
    alpha, beta = a.alpha, a.beta
    ab = alpha @ beta
    acol = [alpha.col(i) for i in range(n)]
    bcol = [beta.col(i) for i in range(n)]
    abcol = [ab.col(i) for i in range(n)]

    def ls_expr(P: BilinearProduct, Q: BilinearProduct,
                x: int, y: int, z: int) -> tuple[Fraction, ...]:
        left = P.value(Q.value(bcol[x], acol[y]), bcol[z])
        right = P.value(abcol[x], Q.value(acol[y], basis_vector(n, z)))
        return vec_sub(left, right)

    P = a.product

    def t1(x: int, y: int, z: int) -> tuple[Fraction, ...]:
        return vec_add(ls_expr(P, tensor, x, y, z), ls_expr(tensor, P, x, y, z))

    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                col.check("deformation-cocycle", (i, j, k),
                          vec_sub(t1(i, j, k), t1(j, i, k)))
                col.check("deformation-square", (i, j, k),
                          vec_sub(ls_expr(tensor, tensor, i, j, k),
                                  ls_expr(tensor, tensor, j, i, k)))
    return merge_reports(_prefixed(check_prelie(a), "base:"), col.report())


def check_equivalence(a: BiHomPreLieAlgebra,
                      pi1: DeformationCandidate | BilinearProduct,
                      pi2: DeformationCandidate | BilinearProduct,
                      N: NijenhuisOperator | Matrix) -> AxiomReport:
    """Is ``Id + t N`` a morphism from ``P + t pi2`` to ``P + t pi1`` for
    all t?  Checks the twist commutations of N and the three coefficient
    identities on every ordered basis pair."""
    t1 = _as_pi(pi1, a.dim)
    t2 = _as_pi(pi2, a.dim)
    mat = _as_operator(N, a.dim)
    col = _Collector()
    col.check_matrix("N-alpha-commutation", (), mat @ a.alpha - a.alpha @ mat)
    col.check_matrix("N-beta-commutation", (), mat @ a.beta - a.beta @ mat)
    n = a.dim
    P = a.product
    ncol = [mat.col(i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            e_i, e_j = basis_vector(n, i), basis_vector(n, j)
            derived = vec_sub(
                vec_add(P.value(ncol[i], e_j), P.value(e_i, ncol[j])),
                mat.apply(P.basis_value(i, j)))
            col.check("equivalence-linear", (i, j),
                      vec_sub(vec_sub(t2.basis_value(i, j), t1.basis_value(i, j)),
                              derived))
            lhs = vec_add(t1.value(e_i, ncol[j]), t1.value(ncol[i], e_j))
            rhs = vec_sub(mat.apply(t2.basis_value(i, j)),
                          P.value(ncol[i], ncol[j]))
            col.check("equivalence-quadratic", (i, j), vec_sub(lhs, rhs))
            col.check("equivalence-cubic", (i, j), t1.value(ncol[i], ncol[j]))
    return col.report()


def deformed_product(a: BiHomPreLieAlgebra,
                     N: NijenhuisOperator | Matrix) -> BilinearProduct:
    """The product ``x *_N y = N(x).y + x.N(y) - N(x.y)``.

    Requires N to commute with both twists (otherwise the result is not
    twist-multiplicative and the notion breaks down).
    """
    mat = _as_operator(N, a.dim)
    col = _Collector()
    col.check_matrix("N-alpha-commutation", (), mat @ a.alpha - a.alpha @ mat)
    col.check_matrix("N-beta-commutation", (), mat @ a.beta - a.beta @ mat)
    report = col.report()
    if not report.passed:
        raise AxiomError("operator does not commute with the twist maps", report)
    return _deformed_product_raw(a.product, mat)


def _deformed_product_raw(P: BilinearProduct, mat: Matrix) -> BilinearProduct:
    n = P.dim
    ncol = [mat.col(i) for i in range(n)]
    entries = tuple(
        tuple(vec_sub(vec_add(P.value(ncol[i], basis_vector(n, j)),
                              P.value(basis_vector(n, i), ncol[j])),
                      mat.apply(P.basis_value(i, j)))
              for j in range(n))
        for i in range(n))
    return BilinearProduct(n, entries)


def check_nijenhuis_prelie(a: BiHomPreLieAlgebra,
                           N: NijenhuisOperator | Matrix) -> AxiomReport:
    """Twist commutation plus ``N(x).N(y) = N(x *_N y)`` on basis pairs."""
    mat = _as_operator(N, a.dim)
    col = _Collector()
    col.check_matrix("N-alpha-commutation", (), mat @ a.alpha - a.alpha @ mat)
    col.check_matrix("N-beta-commutation", (), mat @ a.beta - a.beta @ mat)
    n = a.dim
    P = a.product
    deformed = _deformed_product_raw(P, mat)
    ncol = [mat.col(i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            col.check("nijenhuis-identity", (i, j),
                      vec_sub(P.value(ncol[i], ncol[j]),
                              mat.apply(deformed.basis_value(i, j))))
    return col.report()


def nijenhuis_trivial_deformation(
        a: BiHomPreLieAlgebra,
        N: NijenhuisOperator | Matrix) -> tuple[DeformationCandidate, AxiomReport]:
    """The trivial deformation generated by a Nijenhuis operator.

    Returns ``pi = *_N`` together with its (passing) deformation report.
    The operator must pass :func:`check_nijenhuis_prelie`; the conclusions
    (pi deforms the product linearly, and is equivalent to the zero
    deformation via ``Id + t N``) are asserted and a failure there is a
    defect, not a data condition.
    """
    mat = _as_operator(N, a.dim)
    nij = check_nijenhuis_prelie(a, mat)
    if not nij.passed:
        raise AxiomError("not a Nijenhuis operator", nij)
    candidate = DeformationCandidate(_deformed_product_raw(a.product, mat))
    deform = check_linear_deformation(a, candidate)
    if not deform.passed:
        raise RuntimeError("internal defect: Nijenhuis image is not a linear "
                           "deformation\n" + deform.summary())
    equiv = check_equivalence(a, zero_deformation(a.dim), candidate, mat)
    if not equiv.passed:
        raise RuntimeError("internal defect: Nijenhuis deformation is not "
                           "trivial\n" + equiv.summary())
    return candidate, merge_reports(deform, equiv)


# ---------------------------------------------------------------------------
# BiHom-Lie side
# ---------------------------------------------------------------------------

def push_deformation_to_lie(a: BiHomPreLieAlgebra,
                            pi: DeformationCandidate | BilinearProduct
                            ) -> DeformationCandidate:
    """Push a pre-Lie deformation down to the sub-adjacent BiHom-Lie
    algebra: ``pi_C(x, y) = pi(x, y) - pi(alpha^-1 beta y, alpha beta^-1 x)``.

    The input must pass :func:`check_linear_deformation`; the output is
    asserted to pass :func:`check_lie_linear_deformation` over
    ``subadjacent(a)``.
    """
    tensor = _as_pi(pi, a.dim)
    report = check_linear_deformation(a, tensor)
    if not report.passed:
        raise AxiomError("not a linear deformation of the algebra", report)
    n = a.dim
    ainv_b = a.twists.alpha_inv @ a.beta
    a_binv = a.alpha @ a.twists.beta_inv
    entries = tuple(
        tuple(vec_sub(tensor.basis_value(i, j),
                      tensor.value(ainv_b.col(j), a_binv.col(i)))
              for j in range(n))
        for i in range(n))
    candidate = DeformationCandidate(BilinearProduct(n, entries))
    lie_report = check_lie_linear_deformation(subadjacent(a), candidate)
    if not lie_report.passed:
        raise RuntimeError("internal defect: pushed deformation fails the "
                           "BiHom-Lie conditions\n" + lie_report.summary())
    return candidate


def check_nijenhuis_lie(g: BiHomLieAlgebra,
                        N: NijenhuisOperator | Matrix) -> AxiomReport:
    """Nijenhuis condition on a BiHom-Lie algebra:
    ``[N(x), N(y)] = N([x, y]_N)`` with
    ``[x, y]_N = [N x, y] + [x, N y] - N[x, y]``.

    Commutation with alpha and with beta are reported as separate axioms;
    the alpha-only reading of the notion is recoverable by filtering out
    ``N-beta-commutation`` violations.
    """
    mat = _as_operator(N, g.dim)
    col = _Collector()
    col.check_matrix("N-alpha-commutation", (), mat @ g.alpha - g.alpha @ mat)
    col.check_matrix("N-beta-commutation", (), mat @ g.beta - g.beta @ mat)
    deformed = _deformed_product_raw(g.bracket, mat)
    n = g.dim
    ncol = [mat.col(i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            col.check("nijenhuis-identity", (i, j),
                      vec_sub(g.bracket.value(ncol[i], ncol[j]),
                              mat.apply(deformed.basis_value(i, j))))
    return col.report()


def check_lie_linear_deformation(g: BiHomLieAlgebra,
                                 pi: DeformationCandidate | BilinearProduct
                                 ) -> AxiomReport:
    """Does pi generate a linear deformation of the BiHom-Lie algebra?

    Preconditions (reported with their own axiom names): pi is
    twist-equivariant and BiHom-skew.  The bracket ``[.,.] + t pi`` then
    satisfies all BiHom-Lie axioms for every t iff the base algebra does
    (prefixed ``base:``), the mixed t^1 Jacobi condition holds, and pi alone
    satisfies the BiHom-Jacobi identity (the t^2 part).
    """
    tensor = _as_pi(pi, g.dim)
    col = _Collector()
    _equivariance_violations(col, tensor, g.alpha, g.beta)
    n = g.dim
    alpha, beta = g.alpha, g.beta
    acol = [alpha.col(i) for i in range(n)]
    bcol = [beta.col(i) for i in range(n)]
    b2 = beta @ beta
    b2col = [b2.col(i) for i in range(n)]
    for i in range(n):
        for j in range(i, n):
            col.check("pi-bihom-skew", (i, j),
                      vec_add(tensor.value(bcol[i], acol[j]),
                              tensor.value(bcol[j], acol[i])))

    def jac_expr(P: BilinearProduct, Q: BilinearProduct,
                 x: int, y: int, z: int) -> tuple[Fraction, ...]:
        total = zero_vector(n)
        for p, q, s in ((x, y, z), (y, z, x), (z, x, y)):
            total = vec_add(total, P.value(b2col[p], Q.value(bcol[q], acol[s])))
        return total

    B = g.bracket
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if i <= j and i <= k:
                    mixed = vec_add(jac_expr(B, tensor, i, j, k),
                                    jac_expr(tensor, B, i, j, k))
                    col.check("lie-deformation-cocycle", (i, j, k), mixed)
                    col.check("lie-deformation-jacobi", (i, j, k),
                              jac_expr(tensor, tensor, i, j, k))
    return merge_reports(_prefixed(check_bihom_lie(g), "base:"), col.report())
