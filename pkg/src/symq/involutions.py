"""Good involutions: decision, enumeration, and classification.

An involution rho of a quandle is *good* when it commutes with every inner
permutation (rho(x^y) = rho(x)^y) and acting through it inverts columns
(x^rho(y) = x^(y^-1)).  The pair (quandle, rho) is a symmetric quandle.

The enumerator here is the package's independent oracle: classification
shortcuts are always cross-checked against it, never substituted for it.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from . import perms
from .budget import SearchBudget
from .errors import (
    HypothesisNotMet,
    InternalConsistencyError,
    MalformedPermutation,
    NotFixedTwoTorsion,
)
from .groups import (
    ElementSet,
    FiniteGroup,
    GroupAutomorphism,
    centralizer_in_aut,
    fixed_two_torsion,
    orbits_under,
)
from .quandles import (
    FiniteQuandle,
    GalexOrigin,
    QuandleMap,
    _iso_search,
    galex,
    inner_orbits,
    is_kei,
    kei_witness,
)

__all__ = [
    "GoodInvolution",
    "SymmetricQuandle",
    "InvolutionViolation",
    "TheoremClass",
    "SqClassification",
    "check_good_involution",
    "is_good_involution",
    "enumerate_good_involutions",
    "enumerate_good_involutions_by_filter",
    "exists_good_involution_galex",
    "rho_r",
    "good_involutions_closed_form",
    "symmetric_quandle",
    "symmetric_quandle_isomorphic",
    "classify_sq_bruteforce",
    "classify_sq_theorem",
    "cross_check_sq",
]

# The plain-filter oracle walks every involutive permutation; past this order
# the count explodes and the constraint-propagation enumerator must be used.
_FILTER_MAX_ORDER = 12


@dataclass(frozen=True)
class GoodInvolution:
    quandle: FiniteQuandle
    rho: tuple[int, ...]


@dataclass(frozen=True)
class SymmetricQuandle:
    quandle: FiniteQuandle
    rho: tuple[int, ...]


@dataclass(frozen=True)
class InvolutionViolation:
    """First failed condition ('involution', 'equivariance', 'column') and witness."""

    condition: str
    witness: tuple[int, ...]


@dataclass(frozen=True)
class TheoremClass:
    """One orbit of the centralizer action on the fixed self-inverse elements."""

    representative: int
    members: tuple[int, ...]


@dataclass(frozen=True)
class SqClassification:
    """Symmetric-quandle classes of one quandle, by one or both routes.

    `classes_bruteforce` partitions `good_involutions` (index lists) via
    exhaustive pairwise isomorphism searches; `classes_theorem` lists
    centralizer orbits on the fixed self-inverse elements when the quandle
    is a connected kei built from a (group, automorphism) pair.
    """

    order: int
    origin: GalexOrigin | None
    good_involutions: tuple[tuple[int, ...], ...]
    classes_bruteforce: tuple[tuple[int, ...], ...] | None
    classes_theorem: tuple[TheoremClass, ...] | None
    agreement: bool | None
    notes: tuple[str, ...]

    @property
    def bruteforce_count(self) -> int | None:
        return None if self.classes_bruteforce is None else len(self.classes_bruteforce)

    @property
    def theorem_count(self) -> int | None:
        return None if self.classes_theorem is None else len(self.classes_theorem)


# -- the decision procedure -----------------------------------------------------

def check_good_involution(
    q: FiniteQuandle, rho: Sequence[int]
) -> InvolutionViolation | None:
    """None if rho is a good involution, else the first violated condition.

    Conditions are scanned in a fixed order (involution, equivariance,
    column) with lexicographically smallest witnesses.
    """
    n = q.order
    p = perms.as_permutation(rho, n)
    for x in range(n):
        if p[p[x]] != x:
            return InvolutionViolation("involution", (x,))
    op = q.op
    for x in range(n):
        row = op[x]
        prow = op[p[x]]
        for y in range(n):
            if p[row[y]] != prow[y]:
                return InvolutionViolation("equivariance", (x, y))
    inv_op = q.inv_op
    for x in range(n):
        row = op[x]
        irow = inv_op[x]
        for y in range(n):
            if row[p[y]] != irow[y]:
                return InvolutionViolation("column", (x, y))
    return None


def is_good_involution(q: FiniteQuandle, rho: Sequence[int]) -> bool:
    return check_good_involution(q, rho) is None


def symmetric_quandle(q: FiniteQuandle, rho: Sequence[int]) -> SymmetricQuandle:
    violation = check_good_involution(q, rho)
    if violation is not None:
        raise MalformedPermutation(
            f"not a good involution: {violation.condition} fails at {violation.witness}"
        )
    return SymmetricQuandle(quandle=q, rho=tuple(rho))


# -- enumeration ----------------------------------------------------------------

def _candidate_sets(q: FiniteQuandle) -> list[tuple[int, ...]]:
    """For each y, the elements whose column equals y's inverse column.

    The column condition forces rho(y) into this set, because acting through
    rho(y) must equal acting through y inverse on every element.
    """
    n = q.order
    by_column: dict[tuple[int, ...], list[int]] = {}
    for z in range(n):
        by_column.setdefault(q.column(z), []).append(z)
    out = []
    for y in range(n):
        inverse_column = tuple(q.inv_op[x][y] for x in range(n))
        out.append(tuple(by_column.get(inverse_column, ())))
    return out


def _enumerate_rhos(q: FiniteQuandle, budget: SearchBudget) -> list[tuple[int, ...]]:
    """Constraint-propagation enumeration of all good involutions.

    Per-element candidate sets come from the column condition.  Equivariance
    makes the choice at one representative propagate across its whole inner
    orbit, so the search branches only over orbit representatives.  The
    involution requirement is enforced incrementally: assigning rho(x) = z
    books the reverse assignment rho(z) = x and prunes any branch that later
    contradicts it.  Output is the complete set, sorted lexicographically.
    """
    n = q.order
    cands = _candidate_sets(q)
    if any(not c for c in cands):
        return []
    cand_sets = [frozenset(c) for c in cands]
    part = inner_orbits(q)
    orbits = part.orbits
    singleton = [len(orbits[part.orbit_id[x]]) == 1 for x in range(n)]
    op = q.op

    rho = [-1] * n
    need = [-1] * n
    results: list[tuple[int, ...]] = []

    def set_value(x: int, z: int, trail: list[tuple[str, int]]) -> bool:
        if rho[x] >= 0:
            return rho[x] == z
        if need[x] >= 0 and need[x] != z:
            return False
        if z not in cand_sets[x]:
            return False
        back = rho[z]
        if back >= 0:
            if back != x:
                return False
        elif need[z] < 0:
            need[z] = x
            trail.append(("n", z))
        elif need[z] != x:
            return False
        rho[x] = z
        trail.append(("r", x))
        return True

    def assign_orbit(orbit: tuple[int, ...], v: int, trail: list) -> bool:
        rep = orbit[0]
        if singleton[rep]:
            # equivariance collapses to: the image must be a fixed point of
            # every inner permutation as well
            return singleton[v] and set_value(rep, v, trail)
        if not set_value(rep, v, trail):
            return False
        queue = [rep]
        qi = 0
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            budget.spend()
            row = op[x]
            image_row = op[rho[x]]
            for y in range(n):
                x2 = row[y]
                z2 = image_row[y]
                if rho[x2] >= 0:
                    if rho[x2] != z2:
                        return False
                else:
                    if not set_value(x2, z2, trail):
                        return False
                    queue.append(x2)
        return True

    def undo(trail: list[tuple[str, int]]) -> None:
        for kind, idx in reversed(trail):
            if kind == "r":
                rho[idx] = -1
            else:
                need[idx] = -1

    def rec(k: int) -> None:
        if k == len(orbits):
            results.append(tuple(rho))
            return
        orbit = orbits[k]
        rep = orbit[0]
        forced = need[rep]
        options = cands[rep] if forced < 0 else (forced,)
        for v in options:
            budget.spend()
            trail: list[tuple[str, int]] = []
            if assign_orbit(orbit, v, trail):
                rec(k + 1)
            undo(trail)

    rec(0)
    results.sort()
    return results


def enumerate_good_involutions(
    q: FiniteQuandle, budget: int | None = None
) -> list[GoodInvolution]:
    """Complete, duplicate-free list of good involutions, lexicographic order."""
    tracker = SearchBudget(budget)
    return [GoodInvolution(quandle=q, rho=p) for p in _enumerate_rhos(q, tracker)]


def enumerate_good_involutions_by_filter(q: FiniteQuandle) -> list[GoodInvolution]:
    """Self-test oracle: filter every involutive permutation directly."""
    if q.order > _FILTER_MAX_ORDER:
        raise ValueError(
            f"plain filter only runs up to order {_FILTER_MAX_ORDER}, got {q.order}"
        )
    return [
        GoodInvolution(quandle=q, rho=p)
        for p in perms.involutions(q.order)
        if check_good_involution(q, p) is None
    ]


def exists_good_involution_galex(group: FiniteGroup, phi: GroupAutomorphism) -> bool:
    """A twisted-conjugation quandle admits a good involution iff it is a kei."""
    return is_kei(galex(group, phi))


# -- the closed form --------------------------------------------------------------

def rho_r(group: FiniteGroup, phi: GroupAutomorphism, r: int) -> tuple[int, ...]:
    """Left translation x -> r x for a fixed self-inverse element r."""
    if r not in fixed_two_torsion(group, phi):
        raise NotFixedTwoTorsion(r)
    return tuple(group.product[r][x] for x in range(group.order))


def good_involutions_closed_form(
    group: FiniteGroup, phi: GroupAutomorphism
) -> list[GoodInvolution]:
    """Left translations by fixed self-inverse elements, for connected keis.

    Every returned map is re-verified against the definition; off the
    connected-kei hypotheses the closed form is wrong, so this refuses
    rather than guessing (see the dihedral quandle of order 4).
    """
    q = galex(group, phi)
    witness = kei_witness(q)
    if witness is not None:
        raise HypothesisNotMet("kei", f"operation differs from its inverse at {witness}")
    if inner_orbits(q).count != 1:
        raise HypothesisNotMet("connected", "quandle has more than one inner orbit")
    out = []
    for r in fixed_two_torsion(group, phi).members:
        p = rho_r(group, phi, r)
        violation = check_good_involution(q, p)
        if violation is not None:
            raise InternalConsistencyError(
                f"translation by {r} is not a good involution: {violation}"
            )
        out.append(GoodInvolution(quandle=q, rho=p))
    out.sort(key=lambda g: g.rho)
    return out


# -- classification ----------------------------------------------------------------

def symmetric_quandle_isomorphic(
    a: SymmetricQuandle, b: SymmetricQuandle, budget: int | None = None
) -> QuandleMap | None:
    """First op-preserving bijection intertwining the two involutions, if any.

    Absence is conclusive: the underlying search is exhaustive (up to its
    node budget, which raises rather than silently truncating).
    """
    if a.quandle.order != b.quandle.order:
        return None
    tracker = SearchBudget(budget)
    found = _iso_search(
        a.quandle,
        b.quandle,
        find_all=False,
        budget=tracker,
        rho1=a.rho,
        rho2=b.rho,
    )
    if not found:
        return None
    return QuandleMap(source=a.quandle, target=b.quandle, perm=found[0])


def _witness_search(
    q: FiniteQuandle,
    rho1: tuple[int, ...],
    rho2: tuple[int, ...],
    budget: SearchBudget,
) -> tuple[int, ...] | None:
    found = _iso_search(
        q, q, find_all=False, budget=budget, rho1=rho1, rho2=rho2
    )
    return found[0] if found else None


def _partition_by_isomorphism(
    q: FiniteQuandle,
    rhos: list[tuple[int, ...]],
    budget: SearchBudget,
) -> tuple[tuple[int, ...], ...]:
    """Union-find partition of the involution list under symmetric isomorphism.

    Only pairs with equal cycle type are searched (conjugate permutations
    must share it).  Every witness f found is also applied as a conjugation
    f . rho . f^-1 across the whole list, which links far more pairs than the
    single search that produced it; the searches themselves stay exhaustive,
    so a failure against every representative is conclusive.
    """
    m = len(rhos)
    index = {p: i for i, p in enumerate(rhos)}
    types = [perms.cycle_type(p) for p in rhos]
    parent = list(range(m))

    def find(i: int) -> int:
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i: int, j: int) -> None:
        ri, rj = find(i), find(j)
        if ri != rj:
            parent[max(ri, rj)] = min(ri, rj)

    def apply_witness(f: tuple[int, ...]) -> None:
        f_inv = perms.invert(f)
        for i, p in enumerate(rhos):
            conj = tuple(f[p[f_inv[x]]] for x in range(len(f)))
            j = index.get(conj)
            if j is None:
                raise InternalConsistencyError(
                    "conjugate of a good involution is missing from the oracle list"
                )
            union(i, j)

    reps: list[int] = []
    for i in range(m):
        root = find(i)
        if any(find(r) == root for r in reps):
            continue
        placed = False
        tried: set[int] = set()
        for r in reps:
            if types[r] != types[i]:
                continue
            rr = find(r)
            if rr in tried:
                continue
            tried.add(rr)
            witness = _witness_search(q, rhos[r], rhos[i], budget)
            if witness is not None:
                union(r, i)
                apply_witness(witness)
                placed = True
                break
        if not placed:
            reps.append(i)

    classes: dict[int, list[int]] = {}
    for i in range(m):
        classes.setdefault(find(i), []).append(i)
    return tuple(tuple(members) for _, members in sorted(classes.items()))


def classify_sq_bruteforce(
    q: FiniteQuandle, budget: int | None = None
) -> SqClassification:
    """Enumerate good involutions, then partition them by exhaustive search."""
    tracker = SearchBudget(budget)
    rhos = _enumerate_rhos(q, tracker)
    classes = _partition_by_isomorphism(q, rhos, tracker)
    return SqClassification(
        order=q.order,
        origin=q.origin,
        good_involutions=tuple(rhos),
        classes_bruteforce=classes,
        classes_theorem=None,
        agreement=None,
        notes=(),
    )


def _theorem_classes(
    group: FiniteGroup,
    phi: GroupAutomorphism,
    budget: int | None = None,
) -> tuple[tuple[TheoremClass, ...], ElementSet]:
    fixed = fixed_two_torsion(group, phi)
    members = fixed.members
    position = {r: i for i, r in enumerate(members)}
    restricted = []
    for psi in centralizer_in_aut(group, phi, budget):
        images = [psi.perm[r] for r in members]
        if any(img not in position for img in images):
            raise InternalConsistencyError(
                "fixed self-inverse set is not stable under the centralizer"
            )
        restricted.append([position[img] for img in images])
    part = orbits_under(restricted, len(members))
    classes = tuple(
        TheoremClass(
            representative=members[orbit[0]],
            members=tuple(members[i] for i in orbit),
        )
        for orbit in part.orbits
    )
    return classes, fixed


def classify_sq_theorem(
    group: FiniteGroup, phi: GroupAutomorphism, budget: int | None = None
) -> SqClassification:
    """Classify via centralizer orbits on the fixed self-inverse elements.

    Valid only when the twisted-conjugation quandle is a connected kei; on
    anything else this raises and the caller must fall back to the
    brute-force route.
    """
    q = galex(group, phi)
    witness = kei_witness(q)
    if witness is not None:
        raise HypothesisNotMet("kei", f"operation differs from its inverse at {witness}")
    if inner_orbits(q).count != 1:
        raise HypothesisNotMet("connected", "quandle has more than one inner orbit")
    classes, _ = _theorem_classes(group, phi, budget)
    rhos = sorted(rho_r(group, phi, r) for r in fixed_two_torsion(group, phi).members)
    return SqClassification(
        order=q.order,
        origin=q.origin,
        good_involutions=tuple(rhos),
        classes_bruteforce=None,
        classes_theorem=classes,
        agreement=None,
        notes=(),
    )


def cross_check_sq(
    group: FiniteGroup, phi: GroupAutomorphism, budget: int | None = None
) -> SqClassification:
    """Run the brute-force classifier, and the orbit classifier when it applies.

    Agreement means: equal class counts, and the translations belonging to
    each centralizer orbit all land in one brute-force class, distinct
    orbits in distinct classes.  When a hypothesis fails the orbit route is
    skipped and the notes say which one.
    """
    q = galex(group, phi)
    tracker = SearchBudget(budget)
    rhos = _enumerate_rhos(q, tracker)
    classes = _partition_by_isomorphism(q, rhos, tracker)

    notes: list[str] = []
    theorem: tuple[TheoremClass, ...] | None = None
    agreement: bool | None = None

    witness = kei_witness(q)
    connected = inner_orbits(q).count == 1
    if witness is not None:
        notes.append(
            f"not a kei: operation and inverse operation differ at {witness}"
        )
    elif not connected:
        notes.append(
            f"not connected: {inner_orbits(q).count} inner orbits"
        )
    else:
        theorem, _ = _theorem_classes(group, phi, budget)
        agreement = _classes_agree(group, phi, rhos, classes, theorem)

    return SqClassification(
        order=q.order,
        origin=q.origin,
        good_involutions=tuple(rhos),
        classes_bruteforce=classes,
        classes_theorem=theorem,
        agreement=agreement,
        notes=tuple(notes),
    )


def _classes_agree(
    group: FiniteGroup,
    phi: GroupAutomorphism,
    rhos: list[tuple[int, ...]],
    brute: tuple[tuple[int, ...], ...],
    theorem: tuple[TheoremClass, ...],
) -> bool:
    if len(brute) != len(theorem):
        return False
    index = {p: i for i, p in enumerate(rhos)}
    member_class = {}
    for label, members in enumerate(brute):
        for i in members:
            member_class[i] = label
    seen_labels = set()
    for cls in theorem:
        labels = set()
        for r in cls.members:
            p = rho_r(group, phi, r)
            if p not in index:
                return False
            labels.add(member_class[index[p]])
        if len(labels) != 1:
            return False
        label = labels.pop()
        if label in seen_labels:
            return False
        seen_labels.add(label)
    return True
