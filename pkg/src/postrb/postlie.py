"""Post-Lie algebras: axioms, sub-adjacent bracket, Rota-Baxter constructions.

The extra product is stored like a second structure-constant table:
t[i][j][k] with e_i > e_j = sum_k t[i][j][k] e_k.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .errors import NotRotaBaxterError
from .lie import LieAlgebra, StructureTable, check_jacobi
from .scalars import (
    ExactMatrix,
    ScalarLike,
    Vector,
    ZERO,
    solve_affine,
    vec_add,
    vec_sub,
    vector,
    zero_vector,
)


@dataclass(frozen=True)
class LinearMap:
    """A linear operator on the algebra; matrix columns are basis images."""

    matrix: ExactMatrix

    def __post_init__(self) -> None:
        if self.matrix.rows != self.matrix.cols:
            raise ValueError("linear maps on an algebra must be square")

    @staticmethod
    def from_columns(cols: Sequence[Sequence[ScalarLike]]) -> "LinearMap":
        return LinearMap(ExactMatrix.from_columns(cols))

    @staticmethod
    def from_rows(rows: Sequence[Sequence[ScalarLike]]) -> "LinearMap":
        return LinearMap(ExactMatrix.from_rows(rows))

    @staticmethod
    def zero(n: int) -> "LinearMap":
        return LinearMap(ExactMatrix.zeros(n, n))

    @staticmethod
    def identity(n: int) -> "LinearMap":
        return LinearMap(ExactMatrix.identity(n))

    @property
    def dim(self) -> int:
        return self.matrix.rows

    def apply(self, vec: Sequence[ScalarLike]) -> Vector:
        return self.matrix.apply(vec)

    def column(self, j: int) -> Vector:
        return self.matrix.column(j)

    def __add__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.matrix + other.matrix)

    def __sub__(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.matrix - other.matrix)

    def __neg__(self) -> "LinearMap":
        return LinearMap(-self.matrix)

    def compose(self, other: "LinearMap") -> "LinearMap":
        return LinearMap(self.matrix @ other.matrix)

    def plus_identity(self) -> "LinearMap":
        return LinearMap(self.matrix + ExactMatrix.identity(self.dim))


@dataclass(frozen=True)
class PostLieAlgebra:
    base: LieAlgebra
    tc: StructureTable

    def __post_init__(self) -> None:
        n = self.base.dim
        if len(self.tc) != n or any(
            len(row) != n or any(len(v) != n for v in row) for row in self.tc
        ):
            raise ValueError("triangle table shape does not match the base algebra")

    @property
    def dim(self) -> int:
        return self.base.dim

    @staticmethod
    def from_table(
        base: LieAlgebra, table: Sequence[Sequence[Sequence[ScalarLike]]]
    ) -> "PostLieAlgebra":
        cooked = tuple(tuple(vector(v) for v in row) for row in table)
        return PostLieAlgebra(base, cooked)

    @staticmethod
    def from_products(
        base: LieAlgebra, products: Mapping[tuple[int, int], Sequence[ScalarLike]]
    ) -> "PostLieAlgebra":
        n = base.dim
        table = [[list(zero_vector(n)) for _ in range(n)] for _ in range(n)]
        for (i, j), value in products.items():
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"product index ({i},{j}) out of range")
            table[i][j] = list(vector(value))
        return PostLieAlgebra(
            base, tuple(tuple(tuple(r) for r in row) for row in table)
        )

    def basis_triangle(self, i: int, j: int) -> Vector:
        return self.tc[i][j]

    def triangle(self, x: Sequence[ScalarLike], y: Sequence[ScalarLike]) -> Vector:
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
                row = self.tc[i][j]
                for k in range(n):
                    if row[k]:
                        out[k] = out[k] + c * row[k]
        return tuple(out)

    def left_multiplication(self, i: int) -> ExactMatrix:
        """Matrix of y -> e_i > y (columns are images)."""
        return ExactMatrix.from_columns([self.tc[i][j] for j in range(self.dim)])


@dataclass(frozen=True)
class PostLieReport:
    """All violating basis triples, empty means the axioms hold."""

    derivation_failures: tuple[tuple[int, int, int], ...]
    weighted_failures: tuple[tuple[int, int, int], ...]

    @property
    def ok(self) -> bool:
        return not self.derivation_failures and not self.weighted_failures


def check_postlie_axioms(p: PostLieAlgebra) -> PostLieReport:
    """Check x>[y,z] = [x>y,z]+[y,x>z] and the weighted associativity."""
    n = p.dim
    base = p.base
    derivation_bad = []
    weighted_bad = []
    units = [tuple(1 if q == k else 0 for q in range(n)) for k in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                lhs = p.triangle(units[i], base.sc[j][k])
                rhs = vec_add(
                    base.bracket(p.tc[i][j], units[k]),
                    base.bracket(units[j], p.tc[i][k]),
                )
                if lhs != rhs:
                    derivation_bad.append((i, j, k))
    for i in range(n):
        for j in range(n):
            sub = vec_add(base.sc[i][j], vec_sub(p.tc[i][j], p.tc[j][i]))
            for k in range(n):
                lhs = p.triangle(sub, units[k])
                rhs = vec_sub(
                    p.triangle(units[i], p.tc[j][k]),
                    p.triangle(units[j], p.tc[i][k]),
                )
                if lhs != rhs:
                    weighted_bad.append((i, j, k))
    return PostLieReport(tuple(derivation_bad), tuple(weighted_bad))


def sub_adjacent(p: PostLieAlgebra) -> LieAlgebra:
    """The bracket x>y - y>x + [x,y]; valid input yields a Lie algebra."""
    n = p.dim
    table = tuple(
        tuple(
            vec_add(vec_sub(p.tc[i][j], p.tc[j][i]), p.base.sc[i][j])
            for j in range(n)
        )
        for i in range(n)
    )
    result = LieAlgebra(table)
    if not check_jacobi(result):
        raise ValueError("sub-adjacent bracket fails Jacobi: input is not post-Lie")
    return result


def check_rota_baxter(algebra: LieAlgebra, operator: LinearMap) -> bool:
    """Weight-1 identity [Rx,Ry] = R([Rx,y] + [x,Ry] + [x,y]) on basis pairs."""
    n = algebra.dim
    if operator.dim != n:
        raise ValueError("operator dimension does not match the algebra")
    # Both sides are bilinear and antisymmetric, so pairs i < j suffice.
    for i in range(n):
        ri = operator.column(i)
        for j in range(i + 1, n):
            rj = operator.column(j)
            lhs = algebra.bracket(ri, rj)
            inner = vec_add(
                vec_add(
                    algebra.bracket(ri, tuple(1 if q == j else 0 for q in range(n))),
                    algebra.bracket(tuple(1 if q == i else 0 for q in range(n)), rj),
                ),
                algebra.sc[i][j],
            )
            if lhs != operator.apply(inner):
                return False
    return True


def from_rota_baxter(algebra: LieAlgebra, operator: LinearMap) -> PostLieAlgebra:
    """The induced product x > y = [R(x), y]; rejects non-Rota-Baxter input."""
    if not check_rota_baxter(algebra, operator):
        raise NotRotaBaxterError("operator fails the weight-1 Rota-Baxter identity")
    n = algebra.dim
    units = [tuple(1 if q == k else 0 for q in range(n)) for k in range(n)]
    table = tuple(
        tuple(algebra.bracket(operator.column(i), units[j]) for j in range(n))
        for i in range(n)
    )
    return PostLieAlgebra(algebra, table)


def _ad_coefficient_matrix(algebra: LieAlgebra) -> ExactMatrix:
    """Matrix of y -> vec(ad_y) with row-major flattening of the n x n image."""
    n = algebra.dim
    rows = []
    for k in range(n):
        for j in range(n):
            rows.append(tuple(algebra.sc[c][j][k] for c in range(n)))
    return ExactMatrix(tuple(rows), n)


def innerness_witness(p: PostLieAlgebra) -> LinearMap | None:
    """Canonical witness with ad_{w(e_i)} equal to the left multiplication by e_i.

    Solves one linear system per basis vector with free variables set to
    zero, so the witness is deterministic.  Returns None when some left
    multiplication is not an inner derivation.
    """
    n = p.dim
    system = _ad_coefficient_matrix(p.base)
    columns = []
    for i in range(n):
        target = p.left_multiplication(i)
        flat = tuple(x for row in target.entries for x in row)
        solution = solve_affine(system, flat)
        if solution is None:
            return None
        columns.append(solution.particular)
    witness = LinearMap.from_columns(columns)
    for i in range(n):
        for j in range(n):
            unit = tuple(1 if q == j else 0 for q in range(n))
            if p.base.bracket(witness.column(i), unit) != p.tc[i][j]:
                raise AssertionError("witness solve failed to reproduce the product")
    return witness


def is_witness(p: PostLieAlgebra, candidate: LinearMap) -> bool:
    """True when [candidate(x), y] equals x > y on all basis pairs."""
    n = p.dim
    if candidate.dim != n:
        return False
    for i in range(n):
        col = candidate.column(i)
        for j in range(n):
            unit = tuple(1 if q == j else 0 for q in range(n))
            if p.base.bracket(col, unit) != p.tc[i][j]:
                return False
    return True
