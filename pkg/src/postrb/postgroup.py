"""Post-groups on finite groups, and Rota-Baxter operators on groups.

The enumeration of all Rota-Baxter maps does an incremental depth-first
search: whenever B(a) and B(b) are known, the defining identity forces
B(a * B(a) b B(a)^-1) = B(a)B(b), which is propagated to a fixpoint before
branching.  That prunes |G|^|G| down to a tiny tree at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import NotRotaBaxterError
from .groups import FiniteGroup, GroupMap, group_violations


@dataclass(frozen=True)
class PostGroup:
    base: FiniteGroup
    triangle: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = self.base.order
        if len(self.triangle) != n or any(len(r) != n for r in self.triangle):
            raise ValueError("triangle table shape does not match the group")
        for row in self.triangle:
            for x in row:
                if not (0 <= x < n):
                    raise ValueError("triangle table entry out of range")

    @property
    def order(self) -> int:
        return self.base.order

    def op(self, a: int, b: int) -> int:
        return self.triangle[a][b]

    @staticmethod
    def from_table(base: FiniteGroup, table: Sequence[Sequence[int]]) -> "PostGroup":
        return PostGroup(base, tuple(tuple(int(x) for x in row) for row in table))


@dataclass(frozen=True)
class PostGroupReport:
    non_bijective: tuple[int, ...]
    automorphism_failures: tuple[tuple[int, int, int], ...]
    weighted_failures: tuple[tuple[int, int, int], ...]

    @property
    def ok(self) -> bool:
        return not (
            self.non_bijective or self.automorphism_failures or self.weighted_failures
        )


def check_postgroup_axioms(pg: PostGroup) -> PostGroupReport:
    """Each left multiplication must be a group automorphism and the
    weighted associativity (a(a>b)) > c = a > (b>c) must hold."""
    g = pg.base
    n = g.order
    non_bijective = []
    distrib = []
    weighted = []
    for a in range(n):
        row = pg.triangle[a]
        if sorted(row) != list(range(n)):
            non_bijective.append(a)
        for b in range(n):
            for c in range(n):
                if row[g.mul(b, c)] != g.mul(row[b], row[c]):
                    distrib.append((a, b, c))
    for a in range(n):
        for b in range(n):
            left = g.mul(a, pg.triangle[a][b])
            for c in range(n):
                if pg.triangle[left][c] != pg.triangle[a][pg.triangle[b][c]]:
                    weighted.append((a, b, c))
    return PostGroupReport(tuple(non_bijective), tuple(distrib), tuple(weighted))


def sub_adjacent_group(pg: PostGroup) -> FiniteGroup:
    """The group a o b = a (a > b); valid input always yields a group."""
    g = pg.base
    n = g.order
    table = tuple(
        tuple(g.mul(a, pg.triangle[a][b]) for b in range(n)) for a in range(n)
    )
    result = FiniteGroup.from_table(table, names=g.names)
    problems = group_violations(result, limit=1)
    if problems:
        raise ValueError(f"sub-adjacent table is not a group: {problems[0]}")
    return result


def check_rb_group(group: FiniteGroup, operator: GroupMap) -> bool:
    """B(a) B(b) = B(a * B(a) b B(a)^-1) on all pairs."""
    n = group.order
    if operator.size != n:
        raise ValueError("operator size does not match the group order")
    for a in range(n):
        ba = operator(a)
        for b in range(n):
            twisted = group.mul(a, group.conjugate(ba, b))
            if group.mul(ba, operator(b)) != operator(twisted):
                return False
    return True


def from_rb_group(group: FiniteGroup, operator: GroupMap) -> PostGroup:
    """The induced product a > b = B(a) b B(a)^-1; rejects non-Rota-Baxter maps."""
    if not check_rb_group(group, operator):
        raise NotRotaBaxterError("map fails the group Rota-Baxter identity")
    n = group.order
    triangle = tuple(
        tuple(group.conjugate(operator(a), b) for b in range(n)) for a in range(n)
    )
    return PostGroup(group, triangle)


def innerness_witness_group(pg: PostGroup) -> GroupMap | None:
    """Smallest-index conjugator per element, renormalized to fix the identity.

    Assumes the post-group axioms hold.  Returns None as soon as one left
    multiplication is not conjugation by anything.
    """
    g = pg.base
    n = g.order
    by_conjugation: dict[tuple[int, ...], int] = {}
    for c in range(n):
        key = tuple(g.conjugate(c, b) for b in range(n))
        by_conjugation.setdefault(key, c)
    raw = []
    for a in range(n):
        c = by_conjugation.get(tuple(pg.triangle[a]))
        if c is None:
            return None
        raw.append(c)
    # The witness at the identity is central, so dividing it out stays in
    # each conjugator coset while pinning the normalization.
    shift = g.inv(raw[g.identity])
    return GroupMap(tuple(g.mul(c, shift) for c in raw))


def enumerate_rb_operators(group: FiniteGroup, cap: int = 8**8) -> list[GroupMap]:
    """All Rota-Baxter maps on the group, in deterministic search order.

    Refuses when the raw search space |G|^|G| exceeds ``cap``; the actual
    search is incremental with constraint propagation, so the bound is a
    guard, not a cost estimate.
    """
    n = group.order
    if n**n > cap:
        raise ValueError(
            f"search space {n}^{n} exceeds the cap {cap}; raise it explicitly"
        )
    mul = group.mul
    conj = [[group.conjugate(c, b) for b in range(n)] for c in range(n)]
    images: list[int | None] = [None] * n
    results: list[GroupMap] = []

    def propagate(seed: int, trail: list[int]) -> bool:
        """Close the partial map under the defining identity; False on clash."""
        queue = [seed]
        while queue:
            x = queue.pop()
            bx = images[x]
            assert bx is not None
            known = [y for y in range(n) if images[y] is not None]
            for y in known:
                for a, b in ((x, y), (y, x)):
                    ba = images[a]
                    bb = images[b]
                    if ba is None or bb is None:
                        continue
                    target = mul(a, conj[ba][b])
                    value = mul(ba, bb)
                    seen = images[target]
                    if seen is None:
                        images[target] = value
                        trail.append(target)
                        queue.append(target)
                    elif seen != value:
                        return False
        return True

    def extend() -> None:
        free = next((a for a in range(n) if images[a] is None), None)
        if free is None:
            candidate = GroupMap(tuple(images))  # type: ignore[arg-type]
            if not check_rb_group(group, candidate):
                raise AssertionError("propagation admitted a non-Rota-Baxter map")
            results.append(candidate)
            return
        for value in range(n):
            trail = [free]
            images[free] = value
            if propagate(free, trail):
                extend()
            for touched in trail:
                images[touched] = None

    extend()
    return results
