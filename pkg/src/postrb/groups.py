"""Finite groups as Cayley tables with 0-based element indices.

Desk scale throughout (order <= ~64): exhaustive scans are the norm and all
results are deterministic in the input element order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .scalars import IntMatrix, smith_normal_form


@dataclass(frozen=True)
class FiniteGroup:
    table: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]
    names: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        n = len(self.table)
        for row in self.table:
            if len(row) != n:
                raise ValueError("Cayley table is not square")
            for x in row:
                if not (0 <= x < n):
                    raise ValueError("Cayley table entry out of range")
        if len(self.inverse) != n:
            raise ValueError("inverse table length does not match the order")
        if self.names is not None and len(self.names) != n:
            raise ValueError("name list length does not match the order")

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def conjugate(self, c: int, b: int) -> int:
        return self.table[self.table[c][b]][self.inverse[c]]

    def name_of(self, a: int) -> str:
        return self.names[a] if self.names is not None else str(a)

    @staticmethod
    def from_table(
        table: Sequence[Sequence[int]],
        names: Sequence[str] | None = None,
        strict: bool = True,
    ) -> "FiniteGroup":
        """Build from a Cayley table, deriving identity and inverses.

        With ``strict=False`` a missing identity or inverse falls back to
        element 0 / the element itself so that the axiom checker can report
        the violation instead of construction failing.
        """
        cooked = tuple(tuple(int(x) for x in row) for row in table)
        n = len(cooked)
        identity = None
        for e in range(n):
            if all(cooked[e][b] == b for b in range(n)) and all(
                cooked[a][e] == a for a in range(n)
            ):
                identity = e
                break
        if identity is None:
            if strict:
                raise ValueError("table has no identity element")
            identity = 0
        inverse = []
        for a in range(n):
            inv = None
            for b in range(n):
                if cooked[a][b] == identity and cooked[b][a] == identity:
                    inv = b
                    break
            if inv is None:
                if strict:
                    raise ValueError(f"element {a} has no inverse")
                inv = a
            inverse.append(inv)
        return FiniteGroup(
            cooked,
            identity,
            tuple(inverse),
            tuple(str(s) for s in names) if names is not None else None,
        )


@dataclass(frozen=True)
class GroupMap:
    """A total map on element indices (not assumed to be a homomorphism)."""

    images: tuple[int, ...]

    def __call__(self, a: int) -> int:
        return self.images[a]

    @property
    def size(self) -> int:
        return len(self.images)

    @staticmethod
    def identity(n: int) -> "GroupMap":
        return GroupMap(tuple(range(n)))

    @staticmethod
    def constant(n: int, value: int) -> "GroupMap":
        return GroupMap((value,) * n)

    @staticmethod
    def of(images: Iterable[int]) -> "GroupMap":
        return GroupMap(tuple(int(x) for x in images))

    def is_permutation(self) -> bool:
        return sorted(self.images) == list(range(len(self.images)))


def group_violations(group: FiniteGroup, limit: int = 10) -> tuple[str, ...]:
    """Human-readable axiom violations, at most ``limit`` of them."""
    n = group.order
    out: list[str] = []
    e = group.identity
    for b in range(n):
        if group.table[e][b] != b or group.table[b][e] != b:
            out.append(f"identity fails at element {b}")
    for a in range(n):
        b = group.inverse[a]
        if group.table[a][b] != e or group.table[b][a] != e:
            out.append(f"inverse fails at element {a}")
    for a in range(n):
        if len(out) >= limit:
            break
        for b in range(n):
            if len(out) >= limit:
                break
            ab = group.table[a][b]
            for c in range(n):
                if group.table[ab][c] != group.table[a][group.table[b][c]]:
                    out.append(f"associativity fails at triple ({a},{b},{c})")
                    if len(out) >= limit:
                        break
    return tuple(out)


def check_group(group: FiniteGroup) -> bool:
    return not group_violations(group, limit=1)


def center_group(group: FiniteGroup) -> tuple[int, ...]:
    n = group.order
    return tuple(
        z
        for z in range(n)
        if all(group.table[z][g] == group.table[g][z] for g in range(n))
    )


def inner_automorphism(group: FiniteGroup, c: int) -> GroupMap:
    return GroupMap(tuple(group.conjugate(c, b) for b in range(group.order)))


def is_group_homomorphism(
    mapping: GroupMap, source_table: Sequence[Sequence[int]], target: FiniteGroup
) -> bool:
    n = len(source_table)
    for a in range(n):
        for b in range(n):
            if mapping(source_table[a][b]) != target.mul(mapping(a), mapping(b)):
                return False
    return True


def cyclic_group(n: int) -> FiniteGroup:
    if n <= 0:
        raise ValueError("cyclic group order must be positive")
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return FiniteGroup.from_table(table)


@dataclass(frozen=True)
class AbelianDecomposition:
    """Invariant-factor coordinates on a finite abelian subgroup.

    ``elements`` are the ambient element indices of the subgroup;
    ``invariant_factors`` is d1 | d2 | ... (entries > 1 only) and the two
    mappings translate between elements and exponent tuples.
    """

    elements: tuple[int, ...]
    invariant_factors: tuple[int, ...]
    coords: dict[int, tuple[int, ...]]
    elements_by_coords: dict[tuple[int, ...], int]

    def to_coords(self, element: int) -> tuple[int, ...]:
        return self.coords[element]

    def from_coords(self, coordinates: Sequence[int]) -> int:
        key = tuple(
            int(c) % d for c, d in zip(coordinates, self.invariant_factors, strict=True)
        )
        return self.elements_by_coords[key]


def abelian_decomposition(
    group: FiniteGroup, subset: Sequence[int]
) -> AbelianDecomposition:
    """Decompose an abelian subgroup given by element indices.

    Presents the subgroup by one generator per element with all product
    relations and reads the invariant factors off the Smith normal form of
    the relation matrix.
    """
    elements = tuple(dict.fromkeys(int(x) for x in subset))
    m = len(elements)
    index = {g: k for k, g in enumerate(elements)}
    if group.identity not in index:
        raise ValueError("subset does not contain the identity")
    for a in elements:
        if group.inverse[a] not in index:
            raise ValueError("subset is not closed under inverses")
        for b in elements:
            if group.mul(a, b) not in index:
                raise ValueError("subset is not closed under the product")
            if group.mul(a, b) != group.mul(b, a):
                raise ValueError("subset is not abelian")

    if m == 1:
        e = elements[0]
        return AbelianDecomposition((e,), (), {e: ()}, {(): e})

    # Relations e_a + e_b - e_{ab} = 0 as columns; subgroup = Z^m / column span.
    relations = []
    for a in elements:
        for b in elements:
            row = [0] * m
            row[index[a]] += 1
            row[index[b]] += 1
            row[index[group.mul(a, b)]] -= 1
            relations.append(row)
    presentation = IntMatrix.from_rows(relations, width=m).transpose()
    u, d, _ = smith_normal_form(presentation)
    diag = list(d.diagonal()) + [0] * (m - min(d.rows, d.cols))
    if any(x == 0 for x in diag):
        raise AssertionError("finite subgroup produced an infinite presentation")
    keep = [k for k, x in enumerate(diag) if x > 1]
    factors = tuple(diag[k] for k in keep)

    coords: dict[int, tuple[int, ...]] = {}
    for g in elements:
        col = [u.entries[r][index[g]] for r in range(m)]
        coords[g] = tuple(col[k] % diag[k] for k in keep)

    u_inverse = u.to_exact().inverse()
    elements_by_coords: dict[tuple[int, ...], int] = {}
    order_bound = m

    def power(base: int, exponent: int) -> int:
        exponent %= order_bound
        acc = group.identity
        for _ in range(exponent):
            acc = group.mul(acc, base)
        return acc

    def combos(position: int, current: tuple[int, ...]) -> None:
        if position == len(keep):
            lifted = [0] * m
            for slot, k in enumerate(keep):
                lifted[k] = current[slot]
            exponents = u_inverse.apply(lifted)
            acc = group.identity
            for idx, exp in enumerate(exponents):
                if exp.im or exp.re.denominator != 1:
                    raise AssertionError("unimodular inverse produced a non-integer")
                acc = group.mul(acc, power(elements[idx], int(exp.re)))
            elements_by_coords[current] = acc
            return
        for value in range(factors[position]):
            combos(position + 1, current + (value,))

    combos(0, ())

    total = 1
    for dfac in factors:
        total *= dfac
    if total != m or len(elements_by_coords) != m:
        raise AssertionError("invariant factors do not multiply to the subgroup order")
    for g in elements:
        if elements_by_coords[coords[g]] != g:
            raise AssertionError("coordinate round-trip failed")
    return AbelianDecomposition(elements, factors, coords, elements_by_coords)
