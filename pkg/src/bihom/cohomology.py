"""Cochain complex of a BiHom-pre-Lie algebra with coefficients in a
representation.

An n-cochain (n >= 1) is a multilinear map ``f: A^n -> V`` that is
skew-symmetric in its first n-1 arguments and intertwines the twists:

    phi . f = f . alpha^(x n)      and      psi . f = f . beta^(x n).

It is stored as the full value tensor ``t[i_1]...[i_n][k]`` on basis tuples,
with skewness kept as an invariant rather than packing a triangular layout;
the coboundary formula permutes arguments freely and clarity wins at these
dimensions.  The degree-n coboundary is the four-sum operator

  (d f)(x_1, ..., x_{n+1}) =
      sum_{i<=n} (-1)^(i+1) L(alpha^(n-1) beta^(n-1) x_i)
                 f(alpha x_1, ..^i.., alpha x_n, x_{n+1})
    + sum_{i<=n} (-1)^(i+1) R(beta^(n-1) x_{n+1})
                 f(beta x_1, ..^i.., beta x_n, alpha^(n-1) x_i)
    - sum_{i<=n} (-1)^(i+1)
                 f(ab x_1, ..^i.., ab x_n, alpha^(n-1)(x_i) . x_{n+1})
    + sum_{i<j<=n} (-1)^(i+j)
                 f([beta x_i, alpha x_j]_C, ab x_1, ..^i..^j.., ab x_n,
                   beta x_{n+1})

where ``ab = alpha beta``, ``..^i..`` omits the i-th argument and
``[.,.]_C`` is the sub-adjacent bracket.  The operator maps C^n into C^(n+1)
and composes to zero; both facts are asserted on every evaluation, and an
assertion failure signals an implementation defect, never a data condition.

Degrees start at n = 1 (the complex has no degree-0 term), so the space of
1-coboundaries is {0} and H^1 equals the 1-cocycles.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .algebra import BiHomPreLieAlgebra, BilinearProduct, subadjacent
from .linalg import (
    Matrix,
    basis_vector,
    kernel_basis,
    nonzero_items,
    rank,
    rational_from_json,
    rational_to_json,
    try_solve,
    vec_is_zero,
    zero_vector,
)
from .representation import PreLieRep

__all__ = [
    "Cochain",
    "CochainSpace",
    "CohomologyReport",
    "cochain_space",
    "coboundary",
    "coboundary_matrix",
    "cohomology_dims",
    "cohomology_table",
    "is_cocycle",
    "is_coboundary",
    "coboundary_preimage",
    "cochain_from_linear_map",
    "cochain_from_bilinear",
]


def _nest(adim: int, depth: int,
          get: Callable[[tuple[int, ...]], tuple[Fraction, ...]]):
    def build(prefix: tuple[int, ...], d: int):
        if d == 0:
            return get(prefix)
        return tuple(build(prefix + (i,), d - 1) for i in range(adim))
    return build((), depth)


@dataclass(frozen=True)
class Cochain:
    """Degree-n multilinear map A^n -> V expanded on basis tuples."""

    degree: int
    adim: int
    vdim: int
    tensor: tuple

    def __post_init__(self) -> None:
        if self.degree < 1:
            raise ValueError("cochains have degree >= 1")

        def walk(node, depth: int) -> None:
            if depth == 0:
                if len(node) != self.vdim:
                    raise ValueError("cochain values must have carrier dimension")
                return
            if len(node) != self.adim:
                raise ValueError("cochain tensor does not match algebra dimension")
            for child in node:
                walk(child, depth - 1)

        walk(self.tensor, self.degree)

    @classmethod
    def zero(cls, degree: int, adim: int, vdim: int) -> "Cochain":
        return cls(degree, adim, vdim,
                   _nest(adim, degree, lambda _: zero_vector(vdim)))

    @classmethod
    def from_map(cls, degree: int, adim: int, vdim: int,
                 get: Callable[[tuple[int, ...]], Sequence[Fraction]]) -> "Cochain":
        return cls(degree, adim, vdim,
                   _nest(adim, degree, lambda idx: tuple(get(idx))))

    def at(self, idx: tuple[int, ...]) -> tuple[Fraction, ...]:
        node = self.tensor
        for i in idx:
            node = node[i]
        return node

    def value(self, args: Sequence[Sequence[Fraction]]) -> tuple[Fraction, ...]:
        """Multilinear evaluation on coordinate vectors (sparsity-aware)."""
        if len(args) != self.degree:
            raise ValueError("argument count must equal the degree")
        acc = list(zero_vector(self.vdim))

        def rec(depth: int, coeff: Fraction, node) -> None:
            if depth == self.degree:
                for k, val in enumerate(node):
                    if val:
                        acc[k] += coeff * val
                return
            for i, c in nonzero_items(args[depth]):
                rec(depth + 1, coeff * c, node[i])

        rec(0, Fraction(1), self.tensor)
        return tuple(acc)

    @property
    def is_zero(self) -> bool:
        return all(vec_is_zero(self.at(idx)) for idx in
                   itertools.product(range(self.adim), repeat=self.degree))

    def flatten(self) -> tuple[Fraction, ...]:
        """Row-major flattening over (basis tuple, carrier index)."""
        out: list[Fraction] = []
        for idx in itertools.product(range(self.adim), repeat=self.degree):
            out.extend(self.at(idx))
        return tuple(out)

    def __add__(self, other: "Cochain") -> "Cochain":
        self._compatible(other)
        return Cochain.from_map(
            self.degree, self.adim, self.vdim,
            lambda idx: tuple(a + b for a, b in zip(self.at(idx), other.at(idx))))

    def __sub__(self, other: "Cochain") -> "Cochain":
        self._compatible(other)
        return Cochain.from_map(
            self.degree, self.adim, self.vdim,
            lambda idx: tuple(a - b for a, b in zip(self.at(idx), other.at(idx))))

    def scale(self, q: Fraction | int) -> "Cochain":
        c = Fraction(q)
        return Cochain.from_map(
            self.degree, self.adim, self.vdim,
            lambda idx: tuple(c * a for a in self.at(idx)))

    def _compatible(self, other: "Cochain") -> None:
        if (self.degree, self.adim, self.vdim) != (other.degree, other.adim, other.vdim):
            raise ValueError("cochains have different shapes")

    def to_json(self) -> dict:
        def encode(node, depth: int):
            if depth == 0:
                return [rational_to_json(a) for a in node]
            return [encode(child, depth - 1) for child in node]
        return {"degree": self.degree, "tensor": encode(self.tensor, self.degree)}

    @classmethod
    def from_json(cls, data: dict, adim: int, vdim: int) -> "Cochain":
        degree = data["degree"]
        if not isinstance(degree, int):
            raise ValueError("cochain degree must be an integer")

        def decode(node, depth: int):
            if not isinstance(node, list):
                raise ValueError("cochain tensor must be a nested array")
            if depth == 0:
                return tuple(rational_from_json(a) for a in node)
            return tuple(decode(child, depth - 1) for child in node)

        return cls(degree, adim, vdim, decode(data["tensor"], degree))


def cochain_from_linear_map(m: Matrix) -> Cochain:
    """Degree-1 cochain from a matrix (column convention)."""
    return Cochain.from_map(1, m.cols, m.rows, lambda idx: m.col(idx[0]))


def cochain_from_bilinear(p: BilinearProduct) -> Cochain:
    """Degree-2 cochain with values in the algebra itself."""
    return Cochain(2, p.dim, p.dim, p.c)


# ---------------------------------------------------------------------------
# invariant checks
# ---------------------------------------------------------------------------

def skew_violations(f: Cochain) -> list[tuple[int, ...]]:
    """Basis tuples at which skewness in the first degree-1 slots fails.

    Adjacent-transposition identities generate full skewness (including the
    vanishing on repeated arguments, since the base field has
    characteristic zero), so only adjacent swaps are tested.
    """
    bad = []
    n = f.degree
    for idx in itertools.product(range(f.adim), repeat=n):
        for p in range(n - 2):
            swapped = list(idx)
            swapped[p], swapped[p + 1] = swapped[p + 1], swapped[p]
            lhs = f.at(idx)
            rhs = f.at(tuple(swapped))
            if any(a + b != 0 for a, b in zip(lhs, rhs)):
                bad.append(idx)
                break
    return bad


def equivariance_violations(f: Cochain, a: BiHomPreLieAlgebra,
                            r: PreLieRep) -> list[tuple[str, tuple[int, ...]]]:
    """Failures of ``phi f = f alpha^n`` and ``psi f = f beta^n`` on basis
    tuples, tagged with the twist name."""
    bad = []
    for name, outer, inner in (("phi", r.phi, a.alpha), ("psi", r.psi, a.beta)):
        cols = [inner.col(i) for i in range(a.dim)]
        for idx in itertools.product(range(f.adim), repeat=f.degree):
            lhs = outer.apply(f.at(idx))
            rhs = f.value([cols[i] for i in idx])
            if lhs != rhs:
                bad.append((name, idx))
    return bad


def _require_cochain(f: Cochain, a: BiHomPreLieAlgebra, r: PreLieRep) -> None:
    if f.adim != a.dim or f.vdim != r.vdim:
        raise ValueError("cochain shape does not match the algebra and "
                         "representation")
    if skew_violations(f):
        raise ValueError("not a cochain: fails skew-symmetry in the leading "
                         "arguments")
    if equivariance_violations(f, a, r):
        raise ValueError("not a cochain: fails twist equivariance")


# ---------------------------------------------------------------------------
# the cochain space as an exact kernel
# ---------------------------------------------------------------------------

def _resolve(idx: tuple[int, ...]) -> tuple[int, tuple[int, ...] | None]:
    """Express a full index tuple through the canonical (sorted-head) one.

    Returns ``(sign, canonical)``; the sign is the parity of the sort and
    ``canonical`` is None when the head has a repeated index (the skew value
    is then zero).
    """
    head = list(idx[:-1])
    if len(set(head)) != len(head):
        return 0, None
    sign = 1
    for i in range(len(head)):
        for j in range(i + 1, len(head)):
            if head[i] > head[j]:
                sign = -sign
    return sign, tuple(sorted(head)) + (idx[-1],)


def _free_indices(adim: int, vdim: int, n: int) -> tuple[list, dict]:
    """Free coordinates of a skew tensor: strictly increasing head, free
    last algebra slot, free carrier slot."""
    coords = []
    for head in itertools.combinations(range(adim), n - 1):
        for last in range(adim):
            for k in range(vdim):
                coords.append((head + (last,), k))
    return coords, {c: pos for pos, c in enumerate(coords)}


@dataclass(frozen=True)
class CochainSpace:
    """A solved basis of the space of degree-n cochains."""

    degree: int
    basis: tuple[Cochain, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coordinates_of(self, f: Cochain) -> tuple[Fraction, ...]:
        """Coordinates of f in this basis (f must lie in the span)."""
        if not self.basis:
            if f.is_zero:
                return ()
            raise ValueError("cochain does not lie in the zero space")
        matrix = Matrix(len(self.basis[0].flatten()), self.dim, tuple(
            zip(*(g.flatten() for g in self.basis))))
        coords = try_solve(matrix, f.flatten())
        if coords is None:
            raise ValueError("cochain does not lie in the span of the basis")
        return coords

    def combine(self, coords: Sequence[Fraction]) -> Cochain:
        if len(coords) != self.dim:
            raise ValueError("coordinate count does not match the dimension")
        g = self.basis[0] if self.basis else None
        if g is None:
            raise ValueError("cannot combine over an empty basis")
        out = Cochain.zero(g.degree, g.adim, g.vdim)
        for c, b in zip(coords, self.basis):
            if c:
                out = out + b.scale(c)
        return out


def cochain_space(a: BiHomPreLieAlgebra, r: PreLieRep, n: int) -> CochainSpace:
    """Solve for a basis of C^n: all tensors that are skew in the first n-1
    slots and equivariant for both twist pairs.

    The equivariance conditions are assembled as an exact linear system over
    the free coordinates of skew tensors and the kernel basis is returned.
    """
    if n < 1:
        raise ValueError("cochain spaces are defined for degree >= 1")
    if r.algebra != a:
        raise ValueError("representation is over a different algebra")
    adim, vdim = a.dim, r.vdim
    coords, pos = _free_indices(adim, vdim, n)
    if not coords:
        return CochainSpace(n, ())

    rows: list[list[Fraction]] = []
    for outer, inner in ((r.phi, a.alpha), (r.psi, a.beta)):
        inner_cols = [nonzero_items(inner.col(i)) for i in range(adim)]
        for idx in itertools.product(range(adim), repeat=n):
            sign_l, canon_l = _resolve(idx)
            for k in range(vdim):
                row = [Fraction(0)] * len(coords)
                # left side: outer twist applied to the value at idx
                if canon_l is not None:
                    for kk in range(vdim):
                        if outer.entries[k][kk]:
                            row[pos[(canon_l, kk)]] += sign_l * outer.entries[k][kk]
                # right side: value at the twisted arguments
                for pairs in itertools.product(*(inner_cols[i] for i in idx)):
                    jdx = tuple(p[0] for p in pairs)
                    coeff = Fraction(1)
                    for p in pairs:
                        coeff *= p[1]
                    sign_r, canon_r = _resolve(jdx)
                    if canon_r is not None:
                        row[pos[(canon_r, k)]] -= sign_r * coeff
                if any(row):
                    rows.append(row)

    if rows:
        system = Matrix(len(rows), len(coords), tuple(tuple(r_) for r_ in rows))
        kernel = kernel_basis(system)
    else:
        kernel = [basis_vector(len(coords), i) for i in range(len(coords))]

    def unpack(vec: Sequence[Fraction]) -> Cochain:
        def get(idx: tuple[int, ...]) -> tuple[Fraction, ...]:
            sign, canon = _resolve(idx)
            if canon is None:
                return zero_vector(vdim)
            return tuple(sign * vec[pos[(canon, k)]] for k in range(vdim))
        return Cochain.from_map(n, adim, vdim, get)

    return CochainSpace(n, tuple(unpack(v) for v in kernel))


# ---------------------------------------------------------------------------
# the coboundary operator
# ---------------------------------------------------------------------------

def coboundary(f: Cochain, a: BiHomPreLieAlgebra, r: PreLieRep) -> Cochain:
    """Apply the four-sum coboundary operator to a degree-n cochain.

    The input is rejected (ValueError) if it violates the cochain
    invariants.  The output is asserted to be skew in its first n slots and
    equivariant; a failed assertion raises RuntimeError and means the
    implementation, not the data, is wrong.
    """
    _require_cochain(f, a, r)
    n = f.degree
    adim, vdim = a.dim, r.vdim
    alpha, beta = a.alpha, a.beta
    an1 = alpha.power(n - 1)
    bn1 = beta.power(n - 1)
    an1bn1 = an1 @ bn1
    ab = alpha @ beta
    acols = [alpha.col(i) for i in range(adim)]
    bcols = [beta.col(i) for i in range(adim)]
    abcols = [ab.col(i) for i in range(adim)]
    an1cols = [an1.col(i) for i in range(adim)]
    lmat = [r.L_of(an1bn1.col(i)) for i in range(adim)]
    rmat = [r.R_of(bn1.col(i)) for i in range(adim)]
    prod_an1 = [[a.product.value(an1cols[p], basis_vector(adim, q))
                 for q in range(adim)] for p in range(adim)]
    sub = subadjacent(a).bracket
    bkt = [[sub.value(bcols[p], acols[q]) for q in range(adim)]
           for p in range(adim)]

    def image(X: tuple[int, ...]) -> tuple[Fraction, ...]:
        total = list(zero_vector(vdim))

        def accumulate(vec: Sequence[Fraction], sign: int) -> None:
            if sign == 1:
                for k, val in enumerate(vec):
                    if val:
                        total[k] += val
            else:
                for k, val in enumerate(vec):
                    if val:
                        total[k] -= val

        last = X[n]
        for i0 in range(n):
            sign = 1 if i0 % 2 == 0 else -1
            head = [t for t in range(n) if t != i0]
            # L-term
            args = [acols[X[t]] for t in head] + [basis_vector(adim, last)]
            accumulate(lmat[X[i0]].apply(f.value(args)), sign)
            # R-term
            args = [bcols[X[t]] for t in head] + [an1cols[X[i0]]]
            accumulate(rmat[last].apply(f.value(args)), sign)
            # product term (enters with the opposite sign)
            args = [abcols[X[t]] for t in head] + [prod_an1[X[i0]][last]]
            accumulate(f.value(args), -sign)
        for i0 in range(n):
            for j0 in range(i0 + 1, n):
                sign = 1 if (i0 + j0) % 2 == 0 else -1
                args = [bkt[X[i0]][X[j0]]]
                args += [abcols[X[t]] for t in range(n) if t not in (i0, j0)]
                args += [bcols[last]]
                accumulate(f.value(args), sign)
        return tuple(total)

    out = Cochain.from_map(n + 1, adim, vdim, image)
    if skew_violations(out):
        raise RuntimeError("internal defect: coboundary image is not skew")
    if equivariance_violations(out, a, r):
        raise RuntimeError("internal defect: coboundary image is not "
                           "twist-equivariant")
    return out


def coboundary_matrix(a: BiHomPreLieAlgebra, r: PreLieRep, n: int,
                      source: CochainSpace | None = None,
                      target: CochainSpace | None = None) -> Matrix:
    """Matrix of the degree-n coboundary with respect to the solved bases of
    C^n (columns) and C^(n+1) (rows).

    Each image is expanded exactly in the target basis; an inexpressible
    image raises RuntimeError since the operator must map C^n into C^(n+1).
    """
    if n < 1:
        raise ValueError("coboundary matrices are defined for degree >= 1")
    if source is None:
        source = cochain_space(a, r, n)
    if target is None:
        target = cochain_space(a, r, n + 1)
    if source.dim == 0:
        return Matrix.zeros(target.dim, 0)
    images = [coboundary(g, a, r) for g in source.basis]
    if target.dim == 0:
        for img in images:
            if not img.is_zero:
                raise RuntimeError("internal defect: coboundary image falls "
                                   "outside the cochain space")
        return Matrix.zeros(0, source.dim)
    flat_len = len(target.basis[0].flatten())
    basis_matrix = Matrix(flat_len, target.dim,
                          tuple(zip(*(g.flatten() for g in target.basis))))
    columns = []
    for img in images:
        coords = try_solve(basis_matrix, img.flatten())
        if coords is None:
            raise RuntimeError("internal defect: coboundary image falls "
                               "outside the cochain space")
        columns.append(coords)
    return Matrix(target.dim, source.dim,
                  tuple(tuple(col[i] for col in columns)
                        for i in range(target.dim)))


@dataclass(frozen=True)
class CohomologyReport:
    """Cocycle, coboundary and cohomology dimensions at one degree."""

    degree: int
    dimZ: int
    dimB: int
    dimH: int

    def __post_init__(self) -> None:
        if self.dimH != self.dimZ - self.dimB or self.dimH < 0:
            raise ValueError("inconsistent cohomology dimensions")


def cohomology_dims(a: BiHomPreLieAlgebra, r: PreLieRep, n: int) -> CohomologyReport:
    """dim Z^n = dim ker d^n, dim B^n = rank d^(n-1) (zero at n = 1),
    dim H^n = dim Z^n - dim B^n."""
    return cohomology_table(a, r, [n])[0]


def cohomology_table(a: BiHomPreLieAlgebra, r: PreLieRep,
                     degrees: Iterable[int]) -> list[CohomologyReport]:
    """Cohomology dimensions for several degrees, sharing the solved cochain
    spaces between consecutive boundary matrices."""
    wanted = sorted(set(degrees))
    if not wanted:
        return []
    if wanted[0] < 1:
        raise ValueError("cohomology degrees start at 1")
    lo = max(1, wanted[0] - 1)
    hi = wanted[-1] + 1
    spaces = {m: cochain_space(a, r, m) for m in range(lo, hi + 1)}
    matrices: dict[int, Matrix] = {}

    def matrix_at(m: int) -> Matrix:
        if m not in matrices:
            matrices[m] = coboundary_matrix(a, r, m, source=spaces[m],
                                            target=spaces[m + 1])
        return matrices[m]

    reports = []
    for m in wanted:
        mat = matrix_at(m)
        dim_z = mat.cols - rank(mat)
        dim_b = 0 if m == 1 else rank(matrix_at(m - 1))
        reports.append(CohomologyReport(m, dim_z, dim_b, dim_z - dim_b))
    return reports


def is_cocycle(f: Cochain, a: BiHomPreLieAlgebra, r: PreLieRep) -> bool:
    """True iff the coboundary of f vanishes identically."""
    return coboundary(f, a, r).is_zero


def coboundary_preimage(f: Cochain, a: BiHomPreLieAlgebra,
                        r: PreLieRep) -> Cochain | None:
    """A degree-(n-1) cochain g with dg = f, or None when f is not a
    coboundary.  At degree 1 the coboundary space is {0}, so only the zero
    cochain qualifies and it has no structural preimage (None is returned).
    """
    _require_cochain(f, a, r)
    n = f.degree
    if n == 1:
        return None
    source = cochain_space(a, r, n - 1)
    target = cochain_space(a, r, n)
    mat = coboundary_matrix(a, r, n - 1, source=source, target=target)
    coords_f = target.coordinates_of(f)
    x = try_solve(mat, coords_f)
    if x is None:
        return None
    if source.dim == 0:
        return Cochain.zero(n - 1, f.adim, f.vdim)
    return source.combine(x)


def is_coboundary(f: Cochain, a: BiHomPreLieAlgebra, r: PreLieRep) -> bool:
    """Membership in the image of the previous coboundary, via an exact
    linear solve; at degree 1 this means f = 0."""
    _require_cochain(f, a, r)
    if f.degree == 1:
        return f.is_zero
    return coboundary_preimage(f, a, r) is not None
