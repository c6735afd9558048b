"""O-operators and Rota-Baxter operators on BiHom-Lie algebras, and the
BiHom-pre-Lie structures they induce.

Given a representation (V, rho, phi, psi) of a BiHom-Lie algebra g, an
O-operator is a linear map T: V -> g satisfying

    [T(u), T(v)] = T( rho(T(u)) v  -  rho(T(phi^-1 psi v)) (phi psi^-1)(u) ).

T is additionally required to intertwine the twists, ``T phi = alpha T`` and
``T psi = beta T``; without that the induced map is not a morphism of BiHom
structures, so the intertwining failure is reported separately from the
defining identity.  A Rota-Baxter operator (weight 0) is the special case of
the adjoint representation: a twist-commuting R: g -> g with

    [R(x), R(y)] = R([R(x), y] + [x, R(y)]).

Every O-operator induces a BiHom-pre-Lie product ``u * v = rho(T(u)) v`` on
V; an invertible one transports it onto g as ``x . y = T(rho(x) T^-1(y))``,
whose sub-adjacent bracket recovers the original bracket exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (
    AxiomError,
    AxiomReport,
    BiHomLieAlgebra,
    BiHomPreLieAlgebra,
    BilinearProduct,
    TwistPair,
    _Collector,
    check_prelie,
    is_lie_morphism,
    subadjacent,
)
from .linalg import Matrix, basis_vector, inverse, rank, vec_sub
from .representation import LieRep

__all__ = [
    "LinearOperator",
    "check_o_operator",
    "induced_prelie_from_o",
    "induced_prelie_on_image",
    "check_rota_baxter",
    "rb_induced_prelie",
    "compatible_prelie_from_invertible_o",
]


@dataclass(frozen=True)
class LinearOperator:
    """A linear map between coordinate spaces, tagged with its dimensions."""

    matrix: Matrix
    source_dim: int
    target_dim: int

    def __post_init__(self) -> None:
        if self.matrix.rows != self.target_dim or self.matrix.cols != self.source_dim:
            raise ValueError(
                f"operator matrix must be {self.target_dim}x{self.source_dim}, "
                f"got {self.matrix.rows}x{self.matrix.cols}")


def _operator_matrix(T: LinearOperator | Matrix, source_dim: int,
                     target_dim: int) -> Matrix:
    m = T.matrix if isinstance(T, LinearOperator) else T
    if m.rows != target_dim or m.cols != source_dim:
        raise ValueError(
            f"operator must be {target_dim}x{source_dim}, got {m.rows}x{m.cols}")
    return m


def check_o_operator(T: LinearOperator | Matrix, r: LieRep) -> AxiomReport:
    """Verify that T is an O-operator for the representation r.

    Reports twist-intertwining failures (``T phi = alpha T``,
    ``T psi = beta T``) separately from failures of the defining identity,
    which is checked on every ordered pair of carrier basis vectors.
    """
    g = r.algebra
    n, m = g.dim, r.vdim
    mat = _operator_matrix(T, m, n)
    col = _Collector()
    col.check_matrix("T-phi-intertwining", (), g.alpha @ mat - mat @ r.phi)
    col.check_matrix("T-psi-intertwining", (), g.beta @ mat - mat @ r.psi)

    phinv_psi = inverse(r.phi) @ r.psi
    phi_psinv = r.phi @ inverse(r.psi)
    tcol = [mat.col(b) for b in range(m)]
    for u in range(m):
        for v in range(m):
            lhs = g.bracket.value(tcol[u], tcol[v])
            first = r.rho_of(tcol[u]).col(v)
            twisted = mat.apply(phinv_psi.col(v))
            second = r.rho_of(twisted).apply(phi_psinv.col(u))
            rhs = mat.apply(vec_sub(first, second))
            col.check("o-operator-identity", (u, v), vec_sub(lhs, rhs))
    return col.report()


def induced_prelie_from_o(T: LinearOperator | Matrix,
                          r: LieRep) -> BiHomPreLieAlgebra:
    """BiHom-pre-Lie product ``u * v = rho(T(u)) v`` on the carrier of r.

    Requires a valid O-operator.  The output is verified to satisfy the
    pre-Lie axioms and T is verified to be a BiHom-Lie morphism from the
    sub-adjacent algebra of the output to the ambient algebra; failure of
    either signals a defect, not a data condition.
    """
    report = check_o_operator(T, r)
    if not report.passed:
        raise AxiomError("not an O-operator for this representation", report)
    g = r.algebra
    n, m = g.dim, r.vdim
    mat = _operator_matrix(T, m, n)
    entries = tuple(
        tuple(r.rho_of(mat.col(a)).col(b) for b in range(m))
        for a in range(m))
    out = BiHomPreLieAlgebra(BilinearProduct(m, entries),
                             TwistPair(r.phi, r.psi))
    check = check_prelie(out)
    if not check.passed:
        raise RuntimeError(
            "internal defect: O-operator induced a non-pre-Lie product\n"
            + check.summary())
    morphism = is_lie_morphism(mat, subadjacent(out), g)
    if not morphism.passed:
        raise RuntimeError(
            "internal defect: O-operator is not a morphism of the induced "
            "sub-adjacent algebra\n" + morphism.summary())
    return out


def induced_prelie_on_image(T: LinearOperator | Matrix,
                            r: LieRep) -> BiHomPreLieAlgebra:
    """The induced pre-Lie structure on the subspace T(V) of the ambient
    algebra, expressed in the image basis ``T(v_1), ..., T(v_m)``.

    Needs T injective so that ``T(u) o T(v) = T(u * v)`` is well defined; in
    the image basis the structure constants coincide with those of the
    induced product on V, and the restricted ambient twists act as
    (phi, psi).
    """
    g = r.algebra
    mat = _operator_matrix(T, r.vdim, g.dim)
    if rank(mat) != r.vdim:
        raise ValueError("operator must be injective to carry the product "
                         "onto its image")
    return induced_prelie_from_o(mat, r)


def check_rota_baxter(R: LinearOperator | Matrix,
                      g: BiHomLieAlgebra) -> AxiomReport:
    """Verify the weight-zero Rota-Baxter conditions on all basis pairs:
    commutation with both twists and
    ``[R(x), R(y)] = R([R(x), y] + [x, R(y)])``."""
    n = g.dim
    mat = _operator_matrix(R, n, n)
    col = _Collector()
    col.check_matrix("R-alpha-commutation", (), mat @ g.alpha - g.alpha @ mat)
    col.check_matrix("R-beta-commutation", (), mat @ g.beta - g.beta @ mat)
    rcol = [mat.col(i) for i in range(n)]
    for i in range(n):
        for j in range(n):
            lhs = g.bracket.value(rcol[i], rcol[j])
            inner = tuple(
                x + y for x, y in zip(
                    g.bracket.value(rcol[i], basis_vector(n, j)),
                    g.bracket.value(basis_vector(n, i), rcol[j])))
            col.check("rota-baxter-identity", (i, j),
                      vec_sub(lhs, mat.apply(inner)))
    return col.report()


def rb_induced_prelie(R: LinearOperator | Matrix,
                      g: BiHomLieAlgebra) -> BiHomPreLieAlgebra:
    """BiHom-pre-Lie product ``x * y = [R(x), y]`` induced by a Rota-Baxter
    operator of weight zero; coincides with the O-operator construction for
    the adjoint representation with T = R."""
    report = check_rota_baxter(R, g)
    if not report.passed:
        raise AxiomError("not a Rota-Baxter operator of weight zero", report)
    n = g.dim
    mat = _operator_matrix(R, n, n)
    entries = tuple(
        tuple(g.bracket.value(mat.col(i), basis_vector(n, j)) for j in range(n))
        for i in range(n))
    return BiHomPreLieAlgebra(BilinearProduct(n, entries), g.twists)


def compatible_prelie_from_invertible_o(T: LinearOperator | Matrix,
                                        r: LieRep) -> BiHomPreLieAlgebra:
    """Compatible pre-Lie structure ``x . y = T(rho(x) T^-1(y))`` on the
    algebra of r, defined by an invertible O-operator.

    The sub-adjacent bracket of the result equals the ambient bracket; that
    equality is asserted exactly.
    """
    g = r.algebra
    n = g.dim
    mat = _operator_matrix(T, r.vdim, n)
    tinv = inverse(mat)  # raises for singular T; also forces vdim == n
    report = check_o_operator(mat, r)
    if not report.passed:
        raise AxiomError("not an O-operator for this representation", report)
    entries = tuple(
        tuple(mat.apply((r.rho[i] @ tinv).col(j)) for j in range(n))
        for i in range(n))
    out = BiHomPreLieAlgebra(BilinearProduct(n, entries), g.twists)
    if subadjacent(out).bracket != g.bracket:
        raise RuntimeError("internal defect: induced product is not compatible "
                           "with the original bracket")
    return out
