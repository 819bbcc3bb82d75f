"""Grid scan for inner post-Lie structures with nonzero obstruction class.

Every inner product has the shape x > y = [w(x), y] for a linear w, and two
such w induce the same product exactly when they differ by a map into the
center.  The scan therefore enumerates w with columns in a complement of the
center over a small coefficient grid, keeps those where the weighted
associativity holds (the derivation identity is automatic for this shape),
and classifies each structure by the coboundary solve.  Findings are
reported, not asserted: this is an exploration harness.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .lie import LieAlgebra, center
from .lie_obstruction import coboundary_solve, obstruction_cocycle
from .postlie import LinearMap, PostLieAlgebra, sub_adjacent
from .scalars import ScalarLike, unit_vector, vector, zero_vector


@dataclass(frozen=True)
class ScanFinding:
    algebra_name: str
    witness: LinearMap
    trivial_class: bool


@dataclass(frozen=True)
class ScanSummary:
    candidates: int
    valid_post_lie: int
    trivial_class: int
    nontrivial_class: int
    nontrivial_examples: tuple[ScanFinding, ...]

    def describe(self) -> str:
        lines = [
            f"candidates scanned: {self.candidates}",
            f"valid inner post-Lie structures: {self.valid_post_lie}",
            f"trivial obstruction class: {self.trivial_class}",
            f"nontrivial obstruction class: {self.nontrivial_class}",
        ]
        for finding in self.nontrivial_examples:
            lines.append(
                f"nontrivial example on {finding.algebra_name}: witness rows "
                + "; ".join(
                    " ".join(str(x) for x in row)
                    for row in finding.witness.matrix.entries
                )
            )
        return "\n".join(lines)


def default_catalog() -> list[tuple[str, LieAlgebra]]:
    """Small named Lie algebras of dimension at most three."""
    return [
        ("abelian-1", LieAlgebra.abelian(1)),
        ("abelian-2", LieAlgebra.abelian(2)),
        ("affine-2", LieAlgebra.from_brackets(2, {(0, 1): [0, 1]})),
        ("abelian-3", LieAlgebra.abelian(3)),
        ("affine-3", LieAlgebra.from_brackets(3, {(0, 1): [0, 1, 0]})),
        ("heisenberg", LieAlgebra.from_brackets(3, {(0, 1): [0, 0, 1]})),
        (
            "simple-3",
            LieAlgebra.from_brackets(
                3, {(0, 1): [0, 0, 1], (1, 2): [1, 0, 0], (2, 0): [0, 1, 0]}
            ),
        ),
    ]


def _center_complement(algebra: LieAlgebra) -> list[int]:
    """Indices of standard basis vectors spanning a complement of the center."""
    pivots = set(center(algebra).pivots)
    return [k for k in range(algebra.dim) if k not in pivots]


def _weighted_associativity_holds(post: PostLieAlgebra) -> bool:
    """Early-exit variant of the second axiom; the first one (the derivation
    identity) holds automatically for products of the shape [w(x), y]."""
    n = post.dim
    base = post.base
    units = [unit_vector(n, k) for k in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            sub = tuple(
                a + b - c
                for a, b, c in zip(base.sc[i][j], post.tc[i][j], post.tc[j][i])
            )
            for k in range(n):
                lhs = post.triangle(sub, units[k])
                rhs = tuple(
                    a - b
                    for a, b in zip(
                        post.triangle(units[i], post.tc[j][k]),
                        post.triangle(units[j], post.tc[i][k]),
                    )
                )
                if lhs != rhs:
                    return False
    return True


def scan_algebra(
    name: str,
    algebra: LieAlgebra,
    coefficients: Sequence[ScalarLike] = (-1, 0, 1),
    max_examples: int = 3,
) -> ScanSummary:
    """Scan one algebra; inner products are parametrized by the witness grid."""
    n = algebra.dim
    complement = _center_complement(algebra)
    coeffs = vector(coefficients)
    column_choices = list(product(coeffs, repeat=len(complement)))
    candidates = 0
    valid = 0
    trivial = 0
    nontrivial = 0
    examples: list[ScanFinding] = []
    for columns in product(column_choices, repeat=n):
        candidates += 1
        witness_columns = []
        for choice in columns:
            col = list(zero_vector(n))
            for value, slot in zip(choice, complement):
                col[slot] = value
            witness_columns.append(tuple(col))
        witness = LinearMap.from_columns(witness_columns)
        products = {
            (i, j): algebra.bracket(witness.column(i), unit_vector(n, j))
            for i in range(n)
            for j in range(n)
        }
        post = PostLieAlgebra.from_products(algebra, products)
        if not _weighted_associativity_holds(post):
            continue
        valid += 1
        cochain = obstruction_cocycle(post, witness)
        if coboundary_solve(cochain, sub_adjacent(post)) is None:
            nontrivial += 1
            if len(examples) < max_examples:
                examples.append(ScanFinding(name, witness, trivial_class=False))
        else:
            trivial += 1
    return ScanSummary(candidates, valid, trivial, nontrivial, tuple(examples))


def scan_catalog(
    catalog: Sequence[tuple[str, LieAlgebra]] | None = None,
    coefficients: Sequence[ScalarLike] = (-1, 0, 1),
) -> dict[str, ScanSummary]:
    """Scan every catalog entry; returns a name-keyed summary map."""
    results: dict[str, ScanSummary] = {}
    for name, algebra in catalog if catalog is not None else default_catalog():
        results[name] = scan_algebra(name, algebra, coefficients)
    return results
