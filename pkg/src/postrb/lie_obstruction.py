"""Obstruction machinery for inner post-Lie algebras.

Given an inner post-Lie algebra with witness w (so ad_{w(x)} is the left
multiplication by x), the defect c(x,y) = [w(x), w(y)] - w([x,y]_sub) is a
center-valued 2-cocycle on the sub-adjacent algebra.  The structure comes
from a Rota-Baxter operator exactly when that cocycle is a coboundary
c(x,y) = -t([x,y]_sub) for some t into the center, and then w - t is such
an operator.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, NamedTuple, Sequence

from .errors import NontrivialObstructionError, NotInnerError
from .lie import LieAlgebra, Subspace, center, check_jacobi
from .postlie import (
    LinearMap,
    PostLieAlgebra,
    check_rota_baxter,
    from_rota_baxter,
    innerness_witness,
    is_witness,
    sub_adjacent,
)
from .scalars import (
    ExactMatrix,
    ScalarLike,
    Vector,
    ZERO,
    is_zero_vector,
    nullspace,
    solve_affine,
    vec_add,
    vec_scale,
    vector,
    zero_vector,
)


@dataclass(frozen=True)
class LieTwoCochain:
    """An alternating 2-cochain on K^n with values inside a center subspace."""

    ambient: int
    center_basis: Subspace
    values: tuple[tuple[Vector, ...], ...]

    def __post_init__(self) -> None:
        n = self.ambient
        if len(self.values) != n or any(len(row) != n for row in self.values):
            raise ValueError("cochain table shape mismatch")
        for i in range(n):
            if not is_zero_vector(self.values[i][i]):
                raise ValueError("cochain not alternating on the diagonal")
            for j in range(i + 1, n):
                if self.values[j][i] != tuple(-x for x in self.values[i][j]):
                    raise ValueError("cochain table not antisymmetric")
                if not self.center_basis.contains(self.values[i][j]):
                    raise ValueError(
                        f"cochain value at ({i},{j}) lies outside the center"
                    )

    @staticmethod
    def from_pairs(
        ambient: int,
        center_basis: Subspace,
        pairs: Mapping[tuple[int, int], Sequence[ScalarLike]],
    ) -> "LieTwoCochain":
        table = [[list(zero_vector(ambient)) for _ in range(ambient)] for _ in range(ambient)]
        for (i, j), value in pairs.items():
            if not (0 <= i < j < ambient):
                raise ValueError("cochain pairs must satisfy i < j")
            v = vector(value)
            table[i][j] = list(v)
            table[j][i] = [-x for x in v]
        return LieTwoCochain(
            ambient,
            center_basis,
            tuple(tuple(tuple(r) for r in row) for row in table),
        )

    def value(self, i: int, j: int) -> Vector:
        return self.values[i][j]

    def evaluate(self, x: Sequence[ScalarLike], y: Sequence[ScalarLike]) -> Vector:
        u, v = vector(x), vector(y)
        out = zero_vector(self.ambient)
        for i in range(self.ambient):
            for j in range(i + 1, self.ambient):
                c = u[i] * v[j] - u[j] * v[i]
                if c:
                    out = vec_add(out, vec_scale(c, self.values[i][j]))
        return out

    def is_zero(self) -> bool:
        return all(
            is_zero_vector(self.values[i][j])
            for i in range(self.ambient)
            for j in range(i + 1, self.ambient)
        )


class RbReconstruction(NamedTuple):
    operator: LinearMap
    witness: LinearMap
    cocycle: LieTwoCochain
    correction: LinearMap


def obstruction_cocycle(p: PostLieAlgebra, witness: LinearMap) -> LieTwoCochain:
    """The defect [w(x), w(y)] - w([x,y]_sub) on basis pairs.

    Values must land in the center; anything else means the supplied map is
    not a witness and is rejected.
    """
    if not is_witness(p, witness):
        raise ValueError("supplied map is not an innerness witness for this product")
    n = p.dim
    sub = sub_adjacent(p)
    z = center(p.base)
    pairs = {}
    for i in range(n):
        for j in range(i + 1, n):
            value = vec_add(
                p.base.bracket(witness.column(i), witness.column(j)),
                tuple(-x for x in witness.apply(sub.sc[i][j])),
            )
            pairs[(i, j)] = value
    return LieTwoCochain.from_pairs(n, z, pairs)


def verify_lie_2cocycle(cochain: LieTwoCochain, sub: LieAlgebra) -> bool:
    """Cyclic cocycle identity over the sub-adjacent bracket on basis triples."""
    n = sub.dim
    if cochain.ambient != n:
        raise ValueError("cochain and algebra dimensions differ")
    units = [tuple(1 if q == k else 0 for q in range(n)) for k in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                total = cochain.evaluate(sub.sc[i][j], units[k])
                total = vec_add(total, cochain.evaluate(sub.sc[j][k], units[i]))
                total = vec_add(total, cochain.evaluate(sub.sc[k][i], units[j]))
                if not is_zero_vector(total):
                    return False
    return True


def coboundary_solve(cochain: LieTwoCochain, sub: LieAlgebra) -> LinearMap | None:
    """Find t into the center with cochain(x,y) = -t([x,y]_sub), or None.

    The unknowns are the coordinates of t against the center basis, so the
    result maps into the center by construction; free variables are zero.
    """
    n = sub.dim
    if cochain.ambient != n:
        raise ValueError("cochain and algebra dimensions differ")
    z = cochain.center_basis
    r = z.dim
    if r == 0:
        if cochain.is_zero():
            return LinearMap.zero(n)
        return None
    rows = []
    rhs = []
    for i in range(n):
        for j in range(i + 1, n):
            coords = z.coordinates_of(cochain.value(i, j))
            if coords is None:
                raise ValueError("cochain value escapes the center basis")
            bracket = sub.sc[i][j]
            for m in range(r):
                row = [ZERO] * (r * n)
                for l in range(n):
                    if bracket[l]:
                        row[m * n + l] = -bracket[l]
                rows.append(row)
                rhs.append(coords[m])
    system = ExactMatrix.from_rows(rows, width=r * n) if rows else ExactMatrix.zeros(0, r * n)
    solution = solve_affine(system, rhs)
    if solution is None:
        return None
    flat = solution.particular
    columns = []
    for l in range(n):
        col = zero_vector(n)
        for m in range(r):
            if flat[m * n + l]:
                col = vec_add(col, vec_scale(flat[m * n + l], z.basis[m]))
        columns.append(col)
    return LinearMap.from_columns(columns)


def construct_rb_from_obstruction(
    p: PostLieAlgebra, witness: LinearMap | None = None
) -> RbReconstruction:
    """Full pipeline: witness, defect cocycle, coboundary solve, operator.

    Assumes the post-Lie axioms hold (callers validate).  Raises
    NotInnerError when some left multiplication is not inner and
    NontrivialObstructionError when the cocycle is not a coboundary.  On
    success the reconstructed operator provably induces the given product.
    """
    if witness is None:
        witness = innerness_witness(p)
        if witness is None:
            raise NotInnerError("left multiplications are not all inner derivations")
    elif not is_witness(p, witness):
        raise ValueError("supplied map is not an innerness witness for this product")
    cochain = obstruction_cocycle(p, witness)
    sub = sub_adjacent(p)
    if not verify_lie_2cocycle(cochain, sub):
        raise AssertionError("defect of a valid witness must be a 2-cocycle")
    correction = coboundary_solve(cochain, sub)
    if correction is None:
        raise NontrivialObstructionError(
            "obstruction class is nonzero: no Rota-Baxter operator induces this product"
        )
    operator = witness - correction
    if not check_rota_baxter(p.base, operator):
        raise AssertionError("reconstructed operator fails the Rota-Baxter identity")
    if from_rota_baxter(p.base, operator).tc != p.tc:
        raise AssertionError("reconstructed operator does not reproduce the product")
    return RbReconstruction(operator, witness, cochain, correction)


def pullback_algebra(p: PostLieAlgebra) -> LieAlgebra:
    """Subalgebra of sub-adjacent (+) base pairs (x, y) with ad_y = left mult by x.

    Dimension is dim + dim center; rejects non-inner input since then the
    first projection would not be onto.
    """
    n = p.dim
    if innerness_witness(p) is None:
        raise NotInnerError("pullback requires an inner post-Lie algebra")
    sub = sub_adjacent(p)
    z = center(p.base)
    rows = []
    for k in range(n):
        for j in range(n):
            row = [ZERO] * (2 * n)
            for i in range(n):
                if p.tc[i][j][k]:
                    row[i] = row[i] + p.tc[i][j][k]
            for c in range(n):
                if p.base.sc[c][j][k]:
                    row[n + c] = row[n + c] - p.base.sc[c][j][k]
            rows.append(row)
    constraint = ExactMatrix.from_rows(rows, width=2 * n)
    basis = Subspace.from_spanning(2 * n, nullspace(constraint))
    if basis.dim != n + z.dim:
        raise AssertionError("pullback dimension differs from dim + dim center")
    table = []
    for a in range(basis.dim):
        row = []
        for b in range(basis.dim):
            va, vb = basis.basis[a], basis.basis[b]
            product = sub.bracket(va[:n], vb[:n]) + p.base.bracket(va[n:], vb[n:])
            coords = basis.coordinates_of(product)
            if coords is None:
                raise AssertionError("pullback is not closed under the bracket")
            row.append(coords)
        table.append(tuple(row))
    result = LieAlgebra(tuple(table))
    if not check_jacobi(result):
        raise AssertionError("pullback bracket fails Jacobi")
    return result


def rb_difference_cocycle(
    algebra: LieAlgebra, first: LinearMap, second: LinearMap
) -> LinearMap | None:
    """Difference of two Rota-Baxter operators inducing the same product.

    Returns t = second - first after verifying it maps into the center and
    kills sub-adjacent brackets; returns None when the induced products
    differ.  Both inputs must satisfy the Rota-Baxter identity.
    """
    for candidate in (first, second):
        if not check_rota_baxter(algebra, candidate):
            raise ValueError("both maps must be Rota-Baxter operators")
    p1 = from_rota_baxter(algebra, first)
    p2 = from_rota_baxter(algebra, second)
    if p1.tc != p2.tc:
        return None
    difference = second - first
    z = center(algebra)
    n = algebra.dim
    for i in range(n):
        if not z.contains(difference.column(i)):
            raise AssertionError("difference of equal-product operators must be central")
    sub = sub_adjacent(p1)
    for i in range(n):
        for j in range(i + 1, n):
            if not is_zero_vector(difference.apply(sub.sc[i][j])):
                raise AssertionError("difference must vanish on sub-adjacent brackets")
    return difference
