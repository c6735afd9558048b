"""Representations of BiHom-pre-Lie and BiHom-Lie algebras.

A representation of a BiHom-pre-Lie algebra (A, ., alpha, beta) on a space V
with commuting twist maps (phi, psi) is a pair of action families L, R with

  (rep-1)  phi L(x) = L(alpha x) phi,   psi L(x) = L(beta x) psi,
           phi R(x) = R(alpha x) phi,   psi R(x) = R(beta x) psi;
  (rep-2)  L(beta(x).alpha(y)) psi - L(alpha beta x) L(alpha y)
           symmetric in x <-> y;
  (rep-3)  R(beta x) L(beta y) phi - L(alpha beta y) R(x) phi
             = R(beta x) R(alpha y) psi - R(alpha(y).x) phi psi.

A representation of a BiHom-Lie algebra is a single action family rho with

  (1)  rho(alpha x) phi = phi rho(x);
  (2)  rho(beta x) psi = psi rho(x);
  (3)  rho([beta x, y]) psi = rho(alpha beta x) rho(y) - rho(beta y) rho(alpha x).

Action families are stored as one carrier-sized matrix per algebra basis
vector and extended linearly.  The constructors validate shapes only, so
defective data can be represented and diagnosed by the check functions;
operations that need phi/psi inverses raise for singular twists.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .algebra import (
    AxiomError,
    AxiomReport,
    BiHomLieAlgebra,
    BiHomPreLieAlgebra,
    BilinearProduct,
    TwistPair,
    _Collector,
    subadjacent,
)
from .linalg import (
    Matrix,
    block_diag,
    inverse,
    linear_combination,
    vec_sub,
)

__all__ = [
    "PreLieRep",
    "LieRep",
    "check_prelie_rep",
    "check_lie_rep",
    "adjoint_rep",
    "adjoint_lie_rep",
    "trivial_rep",
    "semidirect_prelie",
    "semidirect_lie",
    "induced_lie_rep",
    "twist_rep",
    "tensor_rep",
]


def _check_action_family(name: str, mats: Sequence[Matrix], n: int, m: int) -> None:
    if len(mats) != n:
        raise ValueError(f"{name} must provide one matrix per algebra basis vector")
    for mat in mats:
        if mat.rows != m or mat.cols != m:
            raise ValueError(f"{name} matrices must be {m}x{m}")


def _check_carrier_twist(name: str, mat: Matrix, m: int) -> None:
    if mat.rows != m or mat.cols != m:
        raise ValueError(f"carrier twist {name} must be {m}x{m}")


@dataclass(frozen=True)
class PreLieRep:
    """Representation (V, L, R, phi, psi) of a BiHom-pre-Lie algebra.

    ``L[i]`` / ``R[i]`` are the actions of the i-th algebra basis vector on
    the carrier V of dimension ``vdim``.
    """

    algebra: BiHomPreLieAlgebra
    vdim: int
    L: tuple[Matrix, ...]
    R: tuple[Matrix, ...]
    phi: Matrix
    psi: Matrix

    def __post_init__(self) -> None:
        n = self.algebra.dim
        _check_action_family("L", self.L, n, self.vdim)
        _check_action_family("R", self.R, n, self.vdim)
        _check_carrier_twist("phi", self.phi, self.vdim)
        _check_carrier_twist("psi", self.psi, self.vdim)

    def L_of(self, v: Sequence[Fraction]) -> Matrix:
        """Action L(x) of the algebra element with coordinates v."""
        return linear_combination(self.L, tuple(v))

    def R_of(self, v: Sequence[Fraction]) -> Matrix:
        return linear_combination(self.R, tuple(v))


@dataclass(frozen=True)
class LieRep:
    """Representation (V, rho, phi, psi) of a BiHom-Lie algebra."""

    algebra: BiHomLieAlgebra
    vdim: int
    rho: tuple[Matrix, ...]
    phi: Matrix
    psi: Matrix

    def __post_init__(self) -> None:
        _check_action_family("rho", self.rho, self.algebra.dim, self.vdim)
        _check_carrier_twist("phi", self.phi, self.vdim)
        _check_carrier_twist("psi", self.psi, self.vdim)

    def rho_of(self, v: Sequence[Fraction]) -> Matrix:
        return linear_combination(self.rho, tuple(v))


# ---------------------------------------------------------------------------
# axiom checks
# ---------------------------------------------------------------------------

def check_prelie_rep(r: PreLieRep) -> AxiomReport:
    """Verify rep-1 (all four intertwinings), rep-2 and rep-3 on basis pairs.

    Also reports non-commuting carrier twists.  rep-2's residual is
    antisymmetric in the pair, so it is checked once per i < j; rep-3 is not
    symmetric and runs over all ordered pairs.
    """
    col = _Collector()
    a = r.algebra
    n, phi, psi = a.dim, r.phi, r.psi
    alpha, beta = a.alpha, a.beta
    ab = alpha @ beta
    acol = [alpha.col(i) for i in range(n)]
    bcol = [beta.col(i) for i in range(n)]
    abcol = [ab.col(i) for i in range(n)]
    P = a.product

    col.check_matrix("phi-psi-commutation", (), phi @ psi - psi @ phi)
    for i in range(n):
        col.check_matrix("rep1-phi-L", (i,), phi @ r.L[i] - r.L_of(acol[i]) @ phi)
        col.check_matrix("rep1-psi-L", (i,), psi @ r.L[i] - r.L_of(bcol[i]) @ psi)
        col.check_matrix("rep1-phi-R", (i,), phi @ r.R[i] - r.R_of(acol[i]) @ phi)
        col.check_matrix("rep1-psi-R", (i,), psi @ r.R[i] - r.R_of(bcol[i]) @ psi)

    def rep2_half(x: int, y: int) -> Matrix:
        return r.L_of(P.value(bcol[x], acol[y])) @ psi - r.L_of(abcol[x]) @ r.L_of(acol[y])

    for i in range(n):
        for j in range(i + 1, n):
            col.check_matrix("rep2", (i, j), rep2_half(i, j) - rep2_half(j, i))

    for i in range(n):
        for j in range(n):
            lhs = r.R_of(bcol[i]) @ r.L_of(bcol[j]) @ phi - r.L_of(abcol[j]) @ r.R[i] @ phi
            rhs = (r.R_of(bcol[i]) @ r.R_of(acol[j]) @ psi
                   - r.R_of(P.value(acol[j], _basis(n, i))) @ phi @ psi)
            col.check_matrix("rep3", (i, j), lhs - rhs)
    return col.report()


def _basis(n: int, i: int) -> tuple[Fraction, ...]:
    return tuple(Fraction(1 if j == i else 0) for j in range(n))


def check_lie_rep(r: LieRep) -> AxiomReport:
    """Verify the three BiHom-Lie representation identities on basis pairs."""
    col = _Collector()
    g = r.algebra
    n, phi, psi = g.dim, r.phi, r.psi
    alpha, beta = g.alpha, g.beta
    ab = alpha @ beta
    acol = [alpha.col(i) for i in range(n)]
    bcol = [beta.col(i) for i in range(n)]
    abcol = [ab.col(i) for i in range(n)]
    B = g.bracket

    col.check_matrix("phi-psi-commutation", (), phi @ psi - psi @ phi)
    for i in range(n):
        col.check_matrix("lie-rep-1", (i,), r.rho_of(acol[i]) @ phi - phi @ r.rho[i])
        col.check_matrix("lie-rep-2", (i,), r.rho_of(bcol[i]) @ psi - psi @ r.rho[i])
    for i in range(n):
        for j in range(n):
            lhs = r.rho_of(B.value(bcol[i], _basis(n, j))) @ psi
            rhs = r.rho_of(abcol[i]) @ r.rho[j] - r.rho_of(bcol[j]) @ r.rho_of(acol[i])
            col.check_matrix("lie-rep-3", (i, j), lhs - rhs)
    return col.report()


# ---------------------------------------------------------------------------
# standard representations
# ---------------------------------------------------------------------------

def adjoint_rep(a: BiHomPreLieAlgebra) -> PreLieRep:
    """Adjoint representation: L = left multiplication, R = right
    multiplication, carrier twists (alpha, beta)."""
    return PreLieRep(a, a.dim, a.product.left_matrices(),
                     a.product.right_matrices(), a.alpha, a.beta)


def adjoint_lie_rep(g: BiHomLieAlgebra) -> LieRep:
    """Adjoint representation ``ad_x = [x, -]`` of a BiHom-Lie algebra."""
    return LieRep(g, g.dim, g.bracket.left_matrices(), g.alpha, g.beta)


def trivial_rep(a: BiHomPreLieAlgebra) -> PreLieRep:
    """One-dimensional representation with zero actions and unit twists."""
    zero = Matrix.zeros(1, 1)
    one = Matrix.identity(1)
    n = a.dim
    return PreLieRep(a, 1, (zero,) * n, (zero,) * n, one, one)


# ---------------------------------------------------------------------------
# semidirect products
# ---------------------------------------------------------------------------

def semidirect_prelie(r: PreLieRep) -> BiHomPreLieAlgebra:
    """Semidirect product on A + V: ``(x+u).(y+v) = x.y + L(x)v + R(y)u``
    with twists alpha+phi and beta+psi (algebra basis first, carrier after).

    The input must pass :func:`check_prelie_rep`; the construction is a
    BiHom-pre-Lie algebra exactly when it does.
    """
    report = check_prelie_rep(r)
    if not report.passed:
        raise AxiomError("representation does not satisfy the axioms", report)
    return _semidirect_prelie_raw(r)


def _semidirect_prelie_raw(r: PreLieRep) -> BiHomPreLieAlgebra:
    """The semidirect construction itself, with no validity check.

    Split out so the failure direction of the semidirect characterisation
    (defective representation -> defective algebra) can be exercised.
    """
    a = r.algebra
    n, m = a.dim, r.vdim
    N = n + m
    zero = [Fraction(0)] * N

    def pad_algebra(v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        return tuple(v) + (Fraction(0),) * m

    def pad_carrier(v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        return (Fraction(0),) * n + tuple(v)

    entries = [[tuple(zero)] * N for _ in range(N)]
    for i in range(n):
        for j in range(n):
            entries[i][j] = pad_algebra(a.product.basis_value(i, j))
        for b in range(m):
            entries[i][n + b] = pad_carrier(r.L[i].col(b))
    for aa in range(m):
        for j in range(n):
            entries[n + aa][j] = pad_carrier(r.R[j].col(aa))
    product = BilinearProduct(N, tuple(tuple(row) for row in entries))
    twists = TwistPair(block_diag(a.alpha, r.phi), block_diag(a.beta, r.psi))
    return BiHomPreLieAlgebra(product, twists)


def semidirect_lie(r: LieRep) -> BiHomLieAlgebra:
    """Semidirect product on g + V with bracket
    ``[x+u, y+v] = [x,y] + rho(x)v - rho(alpha^-1 beta y) phi psi^-1 u``."""
    report = check_lie_rep(r)
    if not report.passed:
        raise AxiomError("representation does not satisfy the axioms", report)
    return _semidirect_lie_raw(r)


def _semidirect_lie_raw(r: LieRep) -> BiHomLieAlgebra:
    g = r.algebra
    n, m = g.dim, r.vdim
    N = n + m
    ainv_b = g.twists.alpha_inv @ g.beta
    phi_psinv = r.phi @ inverse(r.psi)
    zero = (Fraction(0),) * N

    def pad_algebra(v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        return tuple(v) + (Fraction(0),) * m

    def pad_carrier(v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        return (Fraction(0),) * n + tuple(v)

    entries = [[zero] * N for _ in range(N)]
    for i in range(n):
        for j in range(n):
            entries[i][j] = pad_algebra(g.bracket.basis_value(i, j))
        for b in range(m):
            entries[i][n + b] = pad_carrier(r.rho[i].col(b))
    for aa in range(m):
        for j in range(n):
            action = r.rho_of(ainv_b.col(j)) @ phi_psinv
            entries[n + aa][j] = pad_carrier(tuple(-x for x in action.col(aa)))
    bracket = BilinearProduct(N, tuple(tuple(row) for row in entries))
    twists = TwistPair(block_diag(g.alpha, r.phi), block_diag(g.beta, r.psi))
    return BiHomLieAlgebra(bracket, twists)


# ---------------------------------------------------------------------------
# induced, twisted and tensor representations
# ---------------------------------------------------------------------------

def induced_lie_rep(r: PreLieRep, variant: str = "full") -> LieRep:
    """Representation of the sub-adjacent BiHom-Lie algebra induced by a
    pre-Lie representation.

    ``variant="l-only"`` keeps rho = L; ``variant="full"`` uses

        rho(x) = L(x) - R(alpha beta^-1 x) . phi^-1 psi.

    Either family satisfies the BiHom-Lie representation identities over
    ``subadjacent(r.algebra)`` whenever the input is valid.
    """
    if variant not in ("full", "l-only"):
        raise ValueError(f"unknown variant {variant!r}; use 'full' or 'l-only'")
    glie = subadjacent(r.algebra)
    if variant == "l-only":
        return LieRep(glie, r.vdim, r.L, r.phi, r.psi)
    a_binv = r.algebra.alpha @ r.algebra.twists.beta_inv
    phinv_psi = inverse(r.phi) @ r.psi
    rho = tuple(r.L[i] - r.R_of(a_binv.col(i)) @ phinv_psi
                for i in range(r.algebra.dim))
    return LieRep(glie, r.vdim, rho, r.phi, r.psi)


def twist_rep(classical: PreLieRep, alpha: Matrix, beta: Matrix,
              phi: Matrix, psi: Matrix) -> PreLieRep:
    """Twist an untwisted representation into one of the twisted algebra.

    The input must be a representation of an untwisted algebra (identity
    twists on both the algebra and the carrier).  Given commuting pairs
    (alpha, beta) on A and (phi, psi) on V that intertwine the original
    actions (``phi L(x) = L(alpha x) phi`` and the three analogues) and are
    multiplicative for the original product, the output is the
    representation

        LL(x) = L(alpha x) psi,   RR(x) = R(beta x) phi

    of the twisted algebra ``x * y = alpha(x).beta(y)`` with twists
    (alpha, beta) and carrier twists (phi, psi).  Violated hypotheses raise
    :class:`AxiomError` naming each one.
    """
    a = classical.algebra
    n, m = a.dim, classical.vdim
    if not (a.alpha.is_identity and a.beta.is_identity):
        raise ValueError("twist_rep requires an algebra with identity twists")
    if not (classical.phi.is_identity and classical.psi.is_identity):
        raise ValueError("twist_rep requires a representation with identity twists")

    col = _Collector()
    col.check_matrix("alpha-beta-commutation", (), alpha @ beta - beta @ alpha)
    col.check_matrix("phi-psi-commutation", (), phi @ psi - psi @ phi)
    acol = [alpha.col(i) for i in range(n)]
    bcol = [beta.col(i) for i in range(n)]
    for name, mat in (("alpha", alpha), ("beta", beta)):
        cols = acol if name == "alpha" else bcol
        for i in range(n):
            for j in range(n):
                lhs = mat.apply(a.product.basis_value(i, j))
                rhs = a.product.value(cols[i], cols[j])
                col.check(f"{name}-multiplicative", (i, j), vec_sub(lhs, rhs))
    for i in range(n):
        col.check_matrix("phi-L-intertwining", (i,),
                         phi @ classical.L[i] - classical.L_of(acol[i]) @ phi)
        col.check_matrix("psi-L-intertwining", (i,),
                         psi @ classical.L[i] - classical.L_of(bcol[i]) @ psi)
        col.check_matrix("phi-R-intertwining", (i,),
                         phi @ classical.R[i] - classical.R_of(acol[i]) @ phi)
        col.check_matrix("psi-R-intertwining", (i,),
                         psi @ classical.R[i] - classical.R_of(bcol[i]) @ psi)
    report = col.report()
    if not report.passed:
        raise AxiomError("twisting hypotheses are violated", report)

    twisted = BilinearProduct(n, tuple(
        tuple(a.product.value(acol[i], bcol[j]) for j in range(n))
        for i in range(n)))
    algebra2 = BiHomPreLieAlgebra(twisted, TwistPair(alpha, beta))
    LL = tuple(classical.L_of(acol[i]) @ psi for i in range(n))
    RR = tuple(classical.R_of(bcol[i]) @ phi for i in range(n))
    return PreLieRep(algebra2, m, LL, RR, phi, psi)


def tensor_rep(rv: PreLieRep, rw: PreLieRep) -> PreLieRep:
    """Tensor product of two representations of the same algebra.

    Carrier V tensor W with the lexicographic basis ``v_i (x) w_j`` (i
    outer); actions

        L(x) = L_V(x) (x) psi_W
               + psi_V (x) (L_W(x) - R_W(alpha beta^-1 x) phi_W^-1 psi_W),
        R(x) = R_V(x) (x) phi_W,

    and twists ``phi_V (x) phi_W``, ``psi_V (x) psi_W``.
    """
    if rv.algebra != rw.algebra:
        raise ValueError("tensor factors must represent the same algebra")
    a = rv.algebra
    n = a.dim
    a_binv = a.alpha @ a.twists.beta_inv
    phiw_inv = inverse(rw.phi)
    L = []
    R = []
    for i in range(n):
        lw_twisted = rw.L[i] - rw.R_of(a_binv.col(i)) @ phiw_inv @ rw.psi
        L.append(rv.L[i].kron(rw.psi) + rv.psi.kron(lw_twisted))
        R.append(rv.R[i].kron(rw.phi))
    return PreLieRep(a, rv.vdim * rw.vdim, tuple(L), tuple(R),
                     rv.phi.kron(rw.phi), rv.psi.kron(rw.psi))
