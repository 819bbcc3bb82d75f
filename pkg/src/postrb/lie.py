"""Finite-dimensional Lie algebras presented by exact structure constants.

A ``LieAlgebra`` stores the full 3-index table c[i][j][k] with
[e_i, e_j] = sum_k c[i][j][k] e_k; antisymmetry is enforced at construction,
the Jacobi identity is a checkable property.  Subspaces are kept in reduced
row echelon form so equality and membership are plain entry comparisons.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .scalars import (
    ExactMatrix,
    GaussianRational,
    ScalarLike,
    Vector,
    ZERO,
    is_zero_vector,
    nullspace,
    rref,
    unit_vector,
    vec_add,
    vec_scale,
    vector,
    vstack,
    zero_vector,
)

StructureTable = tuple[tuple[Vector, ...], ...]


@dataclass(frozen=True)
class LieAlgebra:
    sc: StructureTable

    def __post_init__(self) -> None:
        n = len(self.sc)
        for i in range(n):
            if len(self.sc[i]) != n:
                raise ValueError("structure table is not cubic")
            for j in range(n):
                if len(self.sc[i][j]) != n:
                    raise ValueError("structure table is not cubic")
                for k in range(n):
                    if self.sc[i][j][k] != -self.sc[j][i][k]:
                        raise ValueError(
                            f"structure constants not antisymmetric at ({i},{j},{k})"
                        )

    @property
    def dim(self) -> int:
        return len(self.sc)

    @staticmethod
    def from_table(table: Sequence[Sequence[Sequence[ScalarLike]]]) -> "LieAlgebra":
        cooked = tuple(tuple(vector(v) for v in row) for row in table)
        return LieAlgebra(cooked)

    @staticmethod
    def from_brackets(
        dim: int, brackets: Mapping[tuple[int, int], Sequence[ScalarLike]]
    ) -> "LieAlgebra":
        """Build from the brackets of basis pairs; unspecified pairs are zero.

        Keys are 0-based (i, j) with i != j; the (j, i) bracket is derived by
        antisymmetry, and giving both inconsistently is rejected.
        """
        table = [[list(zero_vector(dim)) for _ in range(dim)] for _ in range(dim)]
        seen: set[tuple[int, int]] = set()
        for (i, j), value in brackets.items():
            if not (0 <= i < dim and 0 <= j < dim):
                raise ValueError(f"bracket index ({i},{j}) out of range")
            if i == j:
                raise ValueError(f"bracket [e{i},e{i}] must be zero, not given")
            v = vector(value)
            if len(v) != dim:
                raise ValueError(f"bracket value for ({i},{j}) has wrong length")
            if (j, i) in seen:
                if tuple(table[i][j]) != v:
                    raise ValueError(f"inconsistent brackets for pair ({i},{j})")
                continue
            table[i][j] = list(v)
            table[j][i] = [-x for x in v]
            seen.add((i, j))
        return LieAlgebra(tuple(tuple(tuple(r) for r in row) for row in table))

    @staticmethod
    def abelian(dim: int) -> "LieAlgebra":
        z = zero_vector(dim)
        return LieAlgebra(tuple(tuple(z for _ in range(dim)) for _ in range(dim)))

    def basis_bracket(self, i: int, j: int) -> Vector:
        return self.sc[i][j]

    def bracket(self, x: Sequence[ScalarLike], y: Sequence[ScalarLike]) -> Vector:
        n = self.dim
        u, v = vector(x), vector(y)
        out = [ZERO] * n
        for i in range(n):
            if not u[i]:
                continue
            for j in range(n):
                if not v[j]:
                    continue
                c = u[i] * v[j]
                row = self.sc[i][j]
                for k in range(n):
                    if row[k]:
                        out[k] = out[k] + c * row[k]
        return tuple(out)


@dataclass(frozen=True)
class Subspace:
    """A subspace of K^n held as canonical rref basis rows."""

    ambient_dim: int
    basis: tuple[Vector, ...]
    pivots: tuple[int, ...]

    @staticmethod
    def from_spanning(
        ambient_dim: int, vectors: Iterable[Sequence[ScalarLike]]
    ) -> "Subspace":
        rows = [vector(v) for v in vectors]
        for r in rows:
            if len(r) != ambient_dim:
                raise ValueError("spanning vector has wrong length")
        if not rows:
            return Subspace(ambient_dim, (), ())
        red, pivots = rref(ExactMatrix.from_rows(rows, width=ambient_dim))
        basis = tuple(red.entries[r] for r in range(len(pivots)))
        return Subspace(ambient_dim, basis, pivots)

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, (), ())

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace.from_spanning(
            ambient_dim, [unit_vector(ambient_dim, k) for k in range(ambient_dim)]
        )

    @property
    def dim(self) -> int:
        return len(self.basis)

    def reduce(self, vec: Sequence[ScalarLike]) -> Vector:
        v = list(vector(vec))
        if len(v) != self.ambient_dim:
            raise ValueError("vector has wrong length")
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c:
                for k in range(self.ambient_dim):
                    v[k] = v[k] - c * row[k]
        return tuple(v)

    def contains(self, vec: Sequence[ScalarLike]) -> bool:
        return is_zero_vector(self.reduce(vec))

    def coordinates_of(self, vec: Sequence[ScalarLike]) -> Vector | None:
        """Coefficients against the canonical basis, or None if outside."""
        v = list(vector(vec))
        coords = []
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            coords.append(c)
            if c:
                for k in range(self.ambient_dim):
                    v[k] = v[k] - c * row[k]
        if not is_zero_vector(tuple(v)):
            return None
        return tuple(coords)

    def contains_subspace(self, other: "Subspace") -> bool:
        return all(self.contains(b) for b in other.basis)

    def plus(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        return Subspace.from_spanning(self.ambient_dim, self.basis + other.basis)

    def intersect(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("ambient dimension mismatch")
        if not self.basis or not other.basis:
            return Subspace.zero(self.ambient_dim)
        cols = [list(b) for b in self.basis] + [[-x for x in b] for b in other.basis]
        system = ExactMatrix.from_columns(cols)
        vectors = []
        for combo in nullspace(system):
            acc = zero_vector(self.ambient_dim)
            for c, b in zip(combo[: len(self.basis)], self.basis):
                if c:
                    acc = vec_add(acc, vec_scale(c, b))
            vectors.append(acc)
        return Subspace.from_spanning(self.ambient_dim, vectors)


@dataclass(frozen=True)
class Fingerprint:
    """Isomorphism-invariant summary used as evidence, not proof."""

    dim: int
    center_dim: int
    killing_rank: int
    derived_dims: tuple[int, ...]
    lower_central_dims: tuple[int, ...]
    derivation_dim: int


def jacobi_violations(algebra: LieAlgebra) -> tuple[tuple[int, int, int], ...]:
    """Basis triples i<j<k where the cyclic Jacobi sum is nonzero."""
    n = algebra.dim
    bad = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                total = algebra.bracket(algebra.sc[i][j], unit_vector(n, k))
                total = vec_add(
                    total, algebra.bracket(algebra.sc[j][k], unit_vector(n, i))
                )
                total = vec_add(
                    total, algebra.bracket(algebra.sc[k][i], unit_vector(n, j))
                )
                if not is_zero_vector(total):
                    bad.append((i, j, k))
    return tuple(bad)


def check_jacobi(algebra: LieAlgebra) -> bool:
    return not jacobi_violations(algebra)


def ad_matrix(algebra: LieAlgebra, x: Sequence[ScalarLike]) -> ExactMatrix:
    """Matrix of y -> [x, y] in the algebra basis (columns are images)."""
    n = algebra.dim
    v = vector(x)
    if len(v) != n:
        raise ValueError("vector has wrong length")
    cols = []
    for j in range(n):
        col = [ZERO] * n
        for i in range(n):
            if v[i]:
                row = algebra.sc[i][j]
                for k in range(n):
                    if row[k]:
                        col[k] = col[k] + v[i] * row[k]
        cols.append(tuple(col))
    return ExactMatrix.from_columns(cols)


def center(algebra: LieAlgebra) -> Subspace:
    """Nullspace of the stacked adjoint matrices of the basis vectors."""
    n = algebra.dim
    if n == 0:
        return Subspace.zero(0)
    stacked = ad_matrix(algebra, unit_vector(n, 0))
    for i in range(1, n):
        stacked = vstack(stacked, ad_matrix(algebra, unit_vector(n, i)))
    return Subspace.from_spanning(n, nullspace(stacked))


def _vec_matrix(matrix: ExactMatrix) -> Vector:
    """Row-major flattening; index (r, c) -> r*cols + c."""
    return tuple(x for row in matrix.entries for x in row)


def _matrix_from_vec(flat: Sequence[GaussianRational], n: int) -> ExactMatrix:
    rows = tuple(tuple(flat[r * n + c] for c in range(n)) for r in range(n))
    return ExactMatrix(rows, n)


def derivations(algebra: LieAlgebra) -> Subspace:
    """Solution space of D[x,y] = [Dx,y] + [x,Dy], flattened row-major in K^(n^2)."""
    n = algebra.dim
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(n):
                row = [ZERO] * (n * n)
                # D applied to [e_i, e_j], component k
                for q in range(n):
                    if algebra.sc[i][j][q]:
                        row[k * n + q] = row[k * n + q] + algebra.sc[i][j][q]
                # [D e_i, e_j]: unknown D[p][i]
                for p in range(n):
                    if algebra.sc[p][j][k]:
                        row[p * n + i] = row[p * n + i] - algebra.sc[p][j][k]
                # [e_i, D e_j]: unknown D[p][j]
                for p in range(n):
                    if algebra.sc[i][p][k]:
                        row[p * n + j] = row[p * n + j] - algebra.sc[i][p][k]
                rows.append(row)
    if not rows:
        return Subspace.full(n * n)
    system = ExactMatrix.from_rows(rows, width=n * n)
    return Subspace.from_spanning(n * n, nullspace(system))


def inner_derivations(algebra: LieAlgebra) -> Subspace:
    n = algebra.dim
    return Subspace.from_spanning(
        n * n,
        [_vec_matrix(ad_matrix(algebra, unit_vector(n, i))) for i in range(n)],
    )


def killing_semisimple(algebra: LieAlgebra) -> tuple[ExactMatrix, bool]:
    """Killing form K(x,y) = tr(ad x ad y) on the basis and nondegeneracy."""
    n = algebra.dim
    ads = [ad_matrix(algebra, unit_vector(n, i)) for i in range(n)]
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            prod = ads[i] @ ads[j]
            row.append(sum((prod.entries[k][k] for k in range(n)), ZERO))
        rows.append(tuple(row))
    form = ExactMatrix(tuple(rows), n)
    return form, form.rank() == n


def is_complete(algebra: LieAlgebra) -> bool:
    """Zero center and every derivation inner."""
    if center(algebra).dim != 0:
        return False
    return derivations(algebra).dim == inner_derivations(algebra).dim


def _bracket_subspace(algebra: LieAlgebra, a: Subspace, b: Subspace) -> Subspace:
    spans = []
    for u in a.basis:
        for v in b.basis:
            spans.append(algebra.bracket(u, v))
    return Subspace.from_spanning(algebra.dim, spans)


def _series_dims(algebra: LieAlgebra, lower_central: bool) -> tuple[int, ...]:
    full = Subspace.full(algebra.dim)
    dims: list[int] = []
    current = full
    while True:
        nxt = _bracket_subspace(
            algebra, full if lower_central else current, current
        )
        if dims and nxt.dim == dims[-1]:
            break
        dims.append(nxt.dim)
        if nxt.dim == 0:
            break
        current = nxt
    return tuple(dims)


def invariant_fingerprint(algebra: LieAlgebra) -> Fingerprint:
    form, _ = killing_semisimple(algebra)
    return Fingerprint(
        dim=algebra.dim,
        center_dim=center(algebra).dim,
        killing_rank=form.rank(),
        derived_dims=_series_dims(algebra, lower_central=False),
        lower_central_dims=_series_dims(algebra, lower_central=True),
        derivation_dim=derivations(algebra).dim,
    )


def change_basis(algebra: LieAlgebra, transform: ExactMatrix) -> LieAlgebra:
    """Push the bracket through an invertible transform (columns = new basis)."""
    n = algebra.dim
    if transform.rows != n or transform.cols != n:
        raise ValueError("transform shape does not match the algebra")
    inv = transform.inverse()
    table = []
    for i in range(n):
        row = []
        for j in range(n):
            w = algebra.bracket(transform.column(i), transform.column(j))
            row.append(inv.apply(w))
        table.append(tuple(row))
    return LieAlgebra(tuple(table))
