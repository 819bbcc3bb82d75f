"""Shared constructions: the two worked Lie examples, desk-scale groups,
and a seeded generator of random Rota-Baxter instances for property suites.
"""

from __future__ import annotations

import random
from fractions import Fraction

import pytest

from postrb.groups import FiniteGroup, cyclic_group
from postrb.lie import LieAlgebra, center, change_basis
from postrb.postlie import LinearMap, check_rota_baxter
from postrb.scalars import ExactMatrix, gaussian
from postrb import sub_adjacent, from_rota_baxter


def make_sl2() -> LieAlgebra:
    """[e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2 (0-based indices in code)."""
    return LieAlgebra.from_brackets(
        3,
        {
            (0, 1): [0, 0, 1],
            (1, 2): [1, 0, 0],
            (2, 0): [0, 1, 0],
        },
    )


def make_sl2_operator() -> LinearMap:
    """P(e1)=e1, P(e2)=-e2/2+i e3/2, P(e3)=-i e2/2 - e3/2."""
    half = Fraction(1, 2)
    return LinearMap.from_columns(
        [
            [1, 0, 0],
            [0, gaussian(-half), gaussian(0, half)],
            [0, gaussian(0, -half), gaussian(-half)],
        ]
    )


def sl2_triangle_table():
    """The nine products of the worked three-dimensional simple example."""
    half = Fraction(1, 2)
    z = gaussian(0)
    return (
        (
            (z, z, z),
            (z, z, gaussian(1)),
            (z, gaussian(-1), z),
        ),
        (
            (z, gaussian(0, half), gaussian(half)),
            (gaussian(0, -half), z, z),
            (gaussian(-half), z, z),
        ),
        (
            (z, gaussian(-half), gaussian(0, half)),
            (gaussian(half), z, z),
            (gaussian(0, -half), z, z),
        ),
    )


def make_solvable() -> LieAlgebra:
    """Three-dimensional algebra with the single product [e1,e2] = e2."""
    return LieAlgebra.from_brackets(3, {(0, 1): [0, 1, 0]})


def solvable_witness(alpha=0, beta=0, gamma=0) -> LinearMap:
    """Columns (1,0,alpha), (0,-1,beta), (0,0,gamma)."""
    return LinearMap.from_columns(
        [[1, 0, alpha], [0, -1, beta], [0, 0, gamma]]
    )


def make_heisenberg() -> LieAlgebra:
    """[e1,e2] = e3, everything else zero."""
    return LieAlgebra.from_brackets(3, {(0, 1): [0, 0, 1]})


def compose_perms(p, q):
    """Apply q first, then p."""
    return tuple(p[q[k]] for k in range(len(p)))


def group_from_perms(generators) -> FiniteGroup:
    degree = len(generators[0])
    identity = tuple(range(degree))
    elements = [identity]
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for elem in frontier:
            for gen in generators:
                product = compose_perms(elem, tuple(gen))
                if product not in seen:
                    seen.add(product)
                    elements.append(product)
                    nxt.append(product)
        frontier = nxt
    index = {p: k for k, p in enumerate(elements)}
    table = tuple(
        tuple(index[compose_perms(a, b)] for b in elements) for a in elements
    )
    return FiniteGroup.from_table(table)


def make_s3() -> FiniteGroup:
    return group_from_perms([(1, 0, 2), (1, 2, 0)])


def make_d4() -> FiniteGroup:
    return group_from_perms([(1, 2, 3, 0), (2, 1, 0, 3)])


def make_q8() -> FiniteGroup:
    """Quaternion group; indices 2k, 2k+1 are +/- of (1, i, j, k)."""
    signs = {
        (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }

    def mul(a: int, b: int) -> int:
        sa, xa = (1 if a % 2 == 0 else -1), a // 2
        sb, xb = (1 if b % 2 == 0 else -1), b // 2
        if xa == 0:
            s, ax = 1, xb
        elif xb == 0:
            s, ax = 1, xa
        else:
            s, ax = signs[(xa, xb)]
        sign = sa * sb * s
        return ax * 2 + (0 if sign == 1 else 1)

    return FiniteGroup.from_table(
        [[mul(a, b) for b in range(8)] for a in range(8)]
    )


@pytest.fixture
def sl2():
    return make_sl2()


@pytest.fixture
def sl2_operator():
    return make_sl2_operator()


@pytest.fixture
def solvable():
    return make_solvable()


@pytest.fixture
def heisenberg():
    return make_heisenberg()


@pytest.fixture
def s3():
    return make_s3()


@pytest.fixture
def d4():
    return make_d4()


@pytest.fixture
def z2():
    return cyclic_group(2)


@pytest.fixture
def z4():
    return cyclic_group(4)


# --- random Rota-Baxter instance generation -------------------------------

def _random_invertible(rng: random.Random, n: int) -> ExactMatrix:
    while True:
        rows = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
        m = ExactMatrix.from_rows(rows, width=n)
        if m.rank() == n:
            return m


def _central_cocycle_tweak(
    rng: random.Random, algebra: LieAlgebra, operator: LinearMap
) -> LinearMap:
    """Add a random central-valued map killing sub-adjacent brackets."""
    from postrb.scalars import ExactMatrix as EM, nullspace, vec_add, vec_scale, zero_vector, ZERO

    n = algebra.dim
    z = center(algebra)
    if z.dim == 0:
        return operator
    sub = sub_adjacent(from_rota_baxter(algebra, operator))
    rows = []
    for i in range(n):
        for j in range(i + 1, n):
            bracket = sub.sc[i][j]
            for m in range(z.dim):
                row = [ZERO] * (z.dim * n)
                for l in range(n):
                    if bracket[l]:
                        row[m * n + l] = bracket[l]
                rows.append(row)
    if rows:
        kernel = nullspace(EM.from_rows(rows, width=z.dim * n))
    else:
        kernel = tuple(
            tuple(gaussian(1) if q == k else gaussian(0) for q in range(z.dim * n))
            for k in range(z.dim * n)
        )
    if not kernel:
        return operator
    flat = [gaussian(0)] * (z.dim * n)
    for basis_vec in kernel:
        c = gaussian(rng.randint(-2, 2))
        if c:
            flat = [a + c * b for a, b in zip(flat, basis_vec)]
    columns = []
    for l in range(n):
        col = zero_vector(n)
        for m in range(z.dim):
            if flat[m * n + l]:
                col = vec_add(col, vec_scale(flat[m * n + l], z.basis[m]))
        columns.append(col)
    tweak = LinearMap.from_columns(columns)
    return operator + tweak


def _seed_instance(rng: random.Random) -> tuple[LieAlgebra, LinearMap]:
    kind = rng.choice(
        ["abelian", "affine", "heisenberg", "filiform", "solvable4", "trivial"]
    )
    if kind == "abelian":
        n = rng.randint(1, 4)
        algebra = LieAlgebra.abelian(n)
        rows = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
        return algebra, LinearMap.from_rows(rows)
    if kind == "affine":
        algebra = make_solvable()
        op = solvable_witness(alpha=rng.randint(-2, 2), beta=0, gamma=rng.randint(-2, 2))
        return algebra, op
    if kind == "heisenberg":
        algebra = make_heisenberg()
        a, b = rng.randint(-2, 2), rng.randint(-2, 2)
        op = LinearMap.from_rows([[0, 0, 0], [0, 0, 0], [a, b, 0]])
        return algebra, op
    if kind == "filiform":
        algebra = LieAlgebra.from_brackets(
            4, {(0, 1): [0, 0, 1, 0], (0, 2): [0, 0, 0, 1]}
        )
        if rng.random() < 0.5:
            a, b = rng.randint(-2, 2), rng.randint(-2, 2)
            op = LinearMap.from_rows(
                [[0] * 4, [0] * 4, [0] * 4, [a, b, 0, 0]]
            )
        else:
            op = LinearMap.from_rows(
                [[0, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, -1]]
            )
        return algebra, op
    if kind == "solvable4":
        c = rng.choice([1, 2, -1])
        algebra = LieAlgebra.from_brackets(
            4, {(0, 1): [0, 1, 0, 0], (0, 2): [0, 0, c, 0]}
        )
        op = LinearMap.from_rows(
            [[0, 0, 0, 0], [0, -1, 0, 0], [0, 0, -1, 0], [0, 0, 0, 0]]
        )
        return algebra, op
    n = rng.randint(2, 4)
    algebra = make_solvable() if n == 3 else LieAlgebra.abelian(n)
    op = LinearMap.zero(algebra.dim) if rng.random() < 0.5 else -LinearMap.identity(algebra.dim)
    return algebra, op


def random_rb_instance(rng: random.Random) -> tuple[LieAlgebra, LinearMap]:
    """A random Rota-Baxter pair: structured seed, central tweak, basis change."""
    algebra, operator = _seed_instance(rng)
    if rng.random() < 0.5:
        operator = _central_cocycle_tweak(rng, algebra, operator)
    if rng.random() < 0.8:
        transform = _random_invertible(rng, algebra.dim)
        algebra = change_basis(algebra, transform)
        inv = transform.inverse()
        operator = LinearMap(inv @ operator.matrix @ transform)
    assert check_rota_baxter(algebra, operator)
    return algebra, operator
