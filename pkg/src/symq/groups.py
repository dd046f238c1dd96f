"""Finite groups as Cayley tables, their automorphisms, and orbit machinery.

Elements are 0-based indices into an order-n multiplication table.  All types
are immutable after construction and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from . import perms
from .budget import SearchBudget
from .errors import (
    MalformedPermutation,
    MalformedTable,
    NoIdentity,
    NoInverse,
    NotAbelian,
    NotAssociative,
    NotBijective,
    NotMultiplicative,
    UnsupportedOrder,
)

__all__ = [
    "FiniteGroup",
    "GroupAutomorphism",
    "ElementSet",
    "OrbitPartition",
    "validate_group",
    "is_abelian",
    "inversion_automorphism",
    "identity_automorphism",
    "validate_automorphism",
    "enumerate_automorphisms",
    "centralizer_in_aut",
    "fixed_two_torsion",
    "orbits_under",
    "cyclic_group",
    "dihedral_group",
    "symmetric_group",
    "alternating_group",
    "quaternion_group",
    "direct_product",
]

# Plain permutation scan is used up to this order; beyond it the
# generator-image backtracking takes over.
_SCAN_MAX_ORDER = 8


@dataclass(frozen=True)
class FiniteGroup:
    """Order-n group: multiplication table, identity index, inverse table."""

    order: int
    product: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]

    def mul(self, a: int, b: int) -> int:
        return self.product[a][b]

    def inv_of(self, a: int) -> int:
        return self.inverse[a]

    def elements(self) -> range:
        return range(self.order)


@dataclass(frozen=True)
class GroupAutomorphism:
    """Multiplicative bijection of a group's element indices."""

    group: FiniteGroup
    perm: tuple[int, ...]

    def apply(self, x: int) -> int:
        return self.perm[x]

    def inverse_perm(self) -> tuple[int, ...]:
        return perms.invert(self.perm)

    def is_identity(self) -> bool:
        return self.perm == perms.identity_perm(self.group.order)


@dataclass(frozen=True)
class ElementSet:
    """Sorted, duplicate-free set of element indices of one group."""

    group: FiniteGroup
    members: tuple[int, ...]

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class OrbitPartition:
    """Partition of 0..n-1 into orbits, labelled by smallest member order."""

    size: int
    orbit_id: tuple[int, ...]
    orbits: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.orbits)


# -- validation ---------------------------------------------------------------

def _check_table_shape(table: Sequence[Sequence[int]]) -> list[list[int]]:
    n = len(table)
    if n == 0:
        raise MalformedTable("table is empty")
    rows: list[list[int]] = []
    for i, raw in enumerate(table):
        row = list(raw)
        if len(row) != n:
            raise MalformedTable(f"row {i} has {len(row)} entries, expected {n}")
        for j, x in enumerate(row):
            if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n:
                raise MalformedTable(f"entry ({i}, {j}) = {x!r} out of range 0..{n - 1}")
        rows.append(row)
    return rows


def validate_group(product_table: Sequence[Sequence[int]]) -> FiniteGroup:
    """Certify a multiplication table and derive identity and inverses.

    Checks run in a fixed order so that a broken table always reports the
    same first failure: shape, row/column permutations, identity, inverses,
    associativity.  A row or column with a repeated entry means the
    corresponding element cannot be cancelled, which is reported as
    NoInverse for that index.
    """
    rows = _check_table_shape(product_table)
    n = len(rows)
    full = set(range(n))
    for i, row in enumerate(rows):
        if set(row) != full:
            raise NoInverse(i, "row is not a permutation")
    for j in range(n):
        if {rows[i][j] for i in range(n)} != full:
            raise NoInverse(j, "column is not a permutation")

    identity = None
    for c in range(n):
        if all(rows[c][i] == i and rows[i][c] == i for i in range(n)):
            identity = c
            break
    if identity is None:
        raise NoIdentity()

    inverse = []
    for i in range(n):
        j = next(
            (j for j in range(n) if rows[i][j] == identity and rows[j][i] == identity),
            None,
        )
        if j is None:
            raise NoInverse(i)
        inverse.append(j)

    for i in range(n):
        for j in range(n):
            ij = rows[i][j]
            row_i = rows[i]
            for k in range(n):
                if rows[ij][k] != row_i[rows[j][k]]:
                    raise NotAssociative(i, j, k)

    return FiniteGroup(
        order=n,
        product=tuple(tuple(row) for row in rows),
        identity=identity,
        inverse=tuple(inverse),
    )


# -- constructors (identity always at index 0) --------------------------------

def _group_from_rows(rows: list[list[int]]) -> FiniteGroup:
    n = len(rows)
    inverse = [0] * n
    for i in range(n):
        inverse[i] = rows[i].index(0)
    return FiniteGroup(
        order=n,
        product=tuple(tuple(row) for row in rows),
        identity=0,
        inverse=tuple(inverse),
    )


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise UnsupportedOrder(f"cyclic group needs order >= 1, got {n}")
    rows = [[(i + j) % n for j in range(n)] for i in range(n)]
    return _group_from_rows(rows)


def dihedral_group(m: int) -> FiniteGroup:
    """Symmetries of a regular m-gon, order 2m.

    Index f*m + i encodes s^f r^i; rotations come first, so the identity
    sits at index 0 and indices m..2m-1 are the m reflections.
    """
    if m < 1:
        raise UnsupportedOrder(f"dihedral group needs m >= 1, got {m}")
    n = 2 * m

    def mul(a: int, b: int) -> int:
        f1, i1 = divmod(a, m)
        f2, i2 = divmod(b, m)
        if f2 == 0:
            return f1 * m + (i1 + i2) % m
        return (f1 ^ 1) * m + (i2 - i1) % m

    rows = [[mul(a, b) for b in range(n)] for a in range(n)]
    return _group_from_rows(rows)


def _perm_table(elements: list[tuple[int, ...]]) -> FiniteGroup:
    index = {p: i for i, p in enumerate(elements)}
    rows = [
        [index[perms.compose(p, q)] for q in elements]
        for p in elements
    ]
    return _group_from_rows(rows)


def symmetric_group(k: int) -> FiniteGroup:
    """All permutations of k points in lexicographic order; order k!."""
    if k < 1:
        raise UnsupportedOrder(f"symmetric group needs k >= 1, got {k}")
    elements = sorted(permutations(range(k)))
    return _perm_table(elements)


def alternating_group(k: int) -> FiniteGroup:
    """Even permutations of k points in lexicographic order."""
    if k < 3:
        raise UnsupportedOrder(f"alternating group needs k >= 3, got {k}")
    elements = sorted(p for p in permutations(range(k)) if _is_even(p))
    return _perm_table(elements)


def _is_even(perm: tuple[int, ...]) -> bool:
    transpositions = sum(length - 1 for length in perms.cycle_type(perm))
    return transpositions % 2 == 0


def quaternion_group() -> FiniteGroup:
    """The order-8 quaternion group; index f*4 + i encodes b^f a^i."""
    def mul(x: int, y: int) -> int:
        f1, i1 = divmod(x, 4)
        f2, i2 = divmod(y, 4)
        if f1 == 0:
            return f2 * 4 + (i1 + i2) % 4
        if f2 == 0:
            return 4 + (i1 - i2) % 4
        return (i1 - i2 + 2) % 4

    rows = [[mul(a, b) for b in range(8)] for a in range(8)]
    return _group_from_rows(rows)


def direct_product(factors: Sequence[FiniteGroup]) -> FiniteGroup:
    """Direct product with mixed-radix index packing, leftmost factor first."""
    if len(factors) < 2:
        raise UnsupportedOrder("direct product needs at least two factors")
    group = factors[0]
    for rhs in factors[1:]:
        group = _product_of_two(group, rhs)
    return group


def _product_of_two(g1: FiniteGroup, g2: FiniteGroup) -> FiniteGroup:
    n2 = g2.order
    n = g1.order * n2
    rows = []
    for a in range(n):
        a1, a2 = divmod(a, n2)
        row = []
        p1 = g1.product[a1]
        p2 = g2.product[a2]
        for b in range(n):
            b1, b2 = divmod(b, n2)
            row.append(p1[b1] * n2 + p2[b2])
        rows.append(row)
    return _group_from_rows(rows)


# -- predicates and automorphisms ---------------------------------------------

def is_abelian(group: FiniteGroup) -> bool:
    p = group.product
    n = group.order
    return all(p[i][j] == p[j][i] for i in range(n) for j in range(i + 1, n))


def inversion_automorphism(group: FiniteGroup) -> GroupAutomorphism:
    """The map g -> g^-1, which is an automorphism exactly on abelian groups."""
    if not is_abelian(group):
        raise NotAbelian("inversion is not multiplicative on a nonabelian group")
    return GroupAutomorphism(group=group, perm=group.inverse)


def identity_automorphism(group: FiniteGroup) -> GroupAutomorphism:
    return GroupAutomorphism(group=group, perm=perms.identity_perm(group.order))


def validate_automorphism(
    group: FiniteGroup, perm: Sequence[int]
) -> GroupAutomorphism:
    """Verify bijectivity and multiplicativity of a candidate automorphism."""
    n = group.order
    try:
        p = perms.as_permutation(perm, n)
    except MalformedPermutation as exc:
        raise NotBijective(str(exc)) from None
    table = group.product
    for i in range(n):
        for j in range(n):
            if p[table[i][j]] != table[p[i]][p[j]]:
                raise NotMultiplicative(i, j)
    return GroupAutomorphism(group=group, perm=p)


def _element_orders(group: FiniteGroup) -> list[int]:
    orders = []
    for a in range(group.order):
        x = a
        k = 1
        while x != group.identity:
            x = group.product[x][a]
            k += 1
        orders.append(k)
    return orders


def _generating_sequence(group: FiniteGroup) -> list[int]:
    """Greedy generating sequence, always picking the smallest outside element."""
    n = group.order
    span = {group.identity}
    gens: list[int] = []
    while len(span) < n:
        nxt = min(i for i in range(n) if i not in span)
        gens.append(nxt)
        span.add(nxt)
        changed = True
        while changed:
            changed = False
            current = list(span)
            for a in current:
                row = group.product[a]
                for b in current:
                    c = row[b]
                    if c not in span:
                        span.add(c)
                        changed = True
    return gens


def _automorphisms_by_scan(group: FiniteGroup, budget: SearchBudget) -> list[tuple[int, ...]]:
    """Filter every permutation that fixes the identity; only sane for small n."""
    n = group.order
    e = group.identity
    table = group.product
    found = []
    rng = range(n)
    for cand in permutations(rng):
        budget.spend()
        if cand[e] != e:
            continue
        ok = True
        for i in rng:
            ci = cand[i]
            row = table[i]
            trow = table[ci]
            for j in rng:
                if cand[row[j]] != trow[cand[j]]:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(cand)
    return found


def _automorphisms_by_backtracking(
    group: FiniteGroup, budget: SearchBudget
) -> list[tuple[int, ...]]:
    """Backtrack over generator images, pruning candidates by element order.

    A partial choice of generator images is extended by closure: whenever two
    elements have images, their product must map to the product of the images.
    Any clash kills the branch; a full, injective image is an automorphism.
    """
    n = group.order
    table = group.product
    orders = _element_orders(group)
    gens = _generating_sequence(group)
    img = [-1] * n
    img[group.identity] = group.identity
    known = [group.identity]
    results: list[tuple[int, ...]] = []

    def close_over(start: int) -> list[int] | None:
        """Extend img by products with all known elements; None on clash."""
        added = []
        queue = [start]
        while queue:
            c = queue.pop()
            budget.spend()
            for a in list(known):
                for x, y in ((a, c), (c, a), (c, c)):
                    z = table[x][y]
                    iz = table[img[x]][img[y]]
                    if img[z] < 0:
                        img[z] = iz
                        known.append(z)
                        added.append(z)
                        queue.append(z)
                    elif img[z] != iz:
                        for w in added:
                            img[w] = -1
                        del known[len(known) - len(added):]
                        return None
        return added

    def undo(added: list[int]) -> None:
        for w in added:
            img[w] = -1
        del known[len(known) - len(added):]

    def rec(gi: int) -> None:
        if gi == len(gens):
            if len(set(img)) == n:
                results.append(tuple(img))
            return
        g = gens[gi]
        want = orders[g]
        for h in range(n):
            if orders[h] != want:
                continue
            budget.spend()
            img[g] = h
            known.append(g)
            added = close_over(g)
            if added is not None:
                rec(gi + 1)
                undo(added)
            img[g] = -1
            known.pop()

    rec(0)
    return results


def enumerate_automorphisms(
    group: FiniteGroup, budget: int | None = None
) -> list[GroupAutomorphism]:
    """All automorphisms, in lexicographic order of their one-line notation."""
    tracker = SearchBudget(budget)
    if group.order <= _SCAN_MAX_ORDER:
        found = _automorphisms_by_scan(group, tracker)
    else:
        found = _automorphisms_by_backtracking(group, tracker)
    return [GroupAutomorphism(group=group, perm=p) for p in sorted(found)]


def centralizer_in_aut(
    group: FiniteGroup, phi: GroupAutomorphism, budget: int | None = None
) -> list[GroupAutomorphism]:
    """Automorphisms commuting with phi, a subgroup containing id and phi."""
    return [
        psi
        for psi in enumerate_automorphisms(group, budget)
        if perms.compose(psi.perm, phi.perm) == perms.compose(phi.perm, psi.perm)
    ]


def fixed_two_torsion(group: FiniteGroup, phi: GroupAutomorphism) -> ElementSet:
    """Elements fixed by phi whose square is the identity; always contains e."""
    members = tuple(
        r
        for r in range(group.order)
        if phi.perm[r] == r and group.product[r][r] == group.identity
    )
    return ElementSet(group=group, members=members)


def orbits_under(maps: Sequence[Sequence[int]], n: int) -> OrbitPartition:
    """Finest partition of 0..n-1 closed under the given permutations.

    Closure under a permutation and its inverse coincide, so plain
    union-find over x ~ map(x) suffices.  Orbits are sorted by smallest
    member and labelled by their position in that order.
    """
    checked = [perms.as_permutation(m, n) for m in maps]
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for m in checked:
        for x in range(n):
            rx, ry = find(x), find(m[x])
            if rx != ry:
                parent[max(rx, ry)] = min(rx, ry)

    groups: dict[int, list[int]] = {}
    for x in range(n):
        groups.setdefault(find(x), []).append(x)
    orbits = tuple(tuple(sorted(members)) for _, members in sorted(groups.items()))
    orbit_id = [0] * n
    for label, orbit in enumerate(orbits):
        for x in orbit:
            orbit_id[x] = label
    return OrbitPartition(size=n, orbit_id=tuple(orbit_id), orbits=orbits)
