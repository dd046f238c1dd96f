"""Sweep families of small groups and cross-check both classification routes.

The family for a maximum order N: every abelian group of order <= N (one
per invariant-factor chain), the proper dihedral groups with 2M <= N, the
quaternion group once N >= 8, and the symmetric group on three points once
N >= 6.  Isomorphic entries coming from different constructors are kept,
deduplication would need isomorphism testing which this tool does not do.
The two order-12-and-up heavyweights (symmetric and alternating on four
points) join only on request.
"""

from __future__ import annotations

from dataclasses import dataclass

from .budget import SearchBudget, resolve_budget
from .errors import SearchBudgetExceeded
from .groups import (
    FiniteGroup,
    GroupAutomorphism,
    alternating_group,
    dihedral_group,
    enumerate_automorphisms,
    fixed_two_torsion,
    quaternion_group,
    symmetric_group,
)
from .involutions import _enumerate_rhos, cross_check_sq
from .quandles import galex, inner_orbits, kei_witness
from .report import quandle_report
from .specs import build_group

__all__ = [
    "CatalogLimits",
    "CatalogEntry",
    "catalog_family",
    "abelian_invariant_chains",
    "run_catalog",
    "entry_report",
]


@dataclass(frozen=True)
class CatalogLimits:
    """Soft size limits; when one binds, the report notes it and skips the step."""

    oracle_max_order: int = 64
    pairwise_max_order: int = 16


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    group: FiniteGroup
    aut: GroupAutomorphism


def abelian_invariant_chains(order: int) -> list[tuple[int, ...]]:
    """Divisor chains d1 | d2 | ... with product `order`, each di >= 2."""
    chains: list[tuple[int, ...]] = []

    def extend(remaining: int, cap: int, chain: tuple[int, ...]) -> None:
        if remaining == 1:
            chains.append(chain)
            return
        for d in range(2, min(cap, remaining) + 1):
            if remaining % d == 0 and cap % d == 0:
                extend(remaining // d, d, (d,) + chain)

    if order == 1:
        return [()]
    extend(order, order, ())
    chains.sort()
    return chains


def _abelian_spec(chain: tuple[int, ...]) -> str:
    if not chain:
        return "cyclic:1"
    if len(chain) == 1:
        return f"cyclic:{chain[0]}"
    return "product:" + ",".join(f"cyclic:{d}" for d in chain)


def catalog_family(
    max_order: int, include_extras: bool = False
) -> list[tuple[str, FiniteGroup]]:
    """Deterministic (label, group) list for the sweep, ascending by order."""
    family: list[tuple[str, FiniteGroup]] = []
    for order in range(1, max_order + 1):
        for chain in abelian_invariant_chains(order):
            spec = _abelian_spec(chain)
            family.append((spec, build_group(spec)))
        if order % 2 == 0 and order >= 6:
            m = order // 2
            family.append((f"dihedral:{m}", dihedral_group(m)))
        if order == 6:
            family.append(("symmetric:3", symmetric_group(3)))
        if order == 8:
            family.append(("quaternion", quaternion_group()))
        if order == 12 and include_extras:
            family.append(("alternating:4", alternating_group(4)))
    if include_extras and max_order >= 12:
        family.append(("symmetric:4", symmetric_group(4)))
    return family


def catalog_entries(
    max_order: int, include_extras: bool = False, budget: int | None = None
) -> list[CatalogEntry]:
    entries = []
    for label, group in catalog_family(max_order, include_extras):
        for aut in enumerate_automorphisms(group, budget):
            entries.append(CatalogEntry(label=label, group=group, aut=aut))
    return entries


def entry_report(
    entry: CatalogEntry,
    budget: int | None = None,
    limits: CatalogLimits = CatalogLimits(),
    elapsed_ms: int | None = None,
) -> dict:
    """Full cross-checked report for one (group, automorphism) pair.

    Budget exhaustion and binding size limits never raise out of here; they
    leave the affected fields null and explain themselves in the notes.
    """
    group, aut = entry.group, entry.aut
    q = galex(group, aut)
    witness = kei_witness(q)
    part = inner_orbits(q)
    fixed = list(fixed_two_torsion(group, aut).members)

    involutions: list[list[int]] | None = None
    brute_count: int | None = None
    theorem_count: int | None = None
    agreement: bool | None = None
    notes: list[str] = []

    if q.order > limits.oracle_max_order:
        notes.append(
            f"enumeration skipped: order {q.order} exceeds the oracle limit "
            f"{limits.oracle_max_order}"
        )
    elif q.order > limits.pairwise_max_order:
        notes.append(
            f"classification skipped: order {q.order} exceeds the pairwise "
            f"limit {limits.pairwise_max_order}"
        )
        try:
            rhos = _enumerate_rhos(q, SearchBudget(budget))
            involutions = [list(p) for p in rhos]
        except SearchBudgetExceeded as exc:
            notes.append(f"enumeration aborted: {exc}")
    else:
        try:
            result = cross_check_sq(group, aut, budget)
            involutions = [list(p) for p in result.good_involutions]
            brute_count = result.bruteforce_count
            theorem_count = result.theorem_count
            agreement = result.agreement
            notes.extend(result.notes)
        except SearchBudgetExceeded as exc:
            notes.append(f"cross-check aborted: {exc}")

    return quandle_report(
        group_spec=entry.label,
        order=q.order,
        automorphism=list(aut.perm),
        is_kei=witness is None,
        kei_witness=None if witness is None else list(witness),
        is_connected=part.count == 1,
        orbit_count=part.count,
        good_involutions=involutions,
        fixed_two_torsion=fixed,
        sq_classes_bruteforce=brute_count,
        sq_classes_theorem=theorem_count,
        agreement=agreement,
        notes=notes,
        elapsed_ms=elapsed_ms,
    )


def _group_only_report(label: str, group: FiniteGroup, detail: str) -> dict:
    """Placeholder entry when automorphism enumeration itself ran out of budget."""
    return quandle_report(
        group_spec=label,
        order=group.order,
        automorphism=None,
        is_kei=None,
        kei_witness=None,
        is_connected=None,
        orbit_count=None,
        good_involutions=None,
        fixed_two_torsion=None,
        sq_classes_bruteforce=None,
        sq_classes_theorem=None,
        agreement=None,
        notes=[f"automorphism enumeration aborted: {detail}"],
        elapsed_ms=None,
    )


def run_catalog(
    max_order: int = 12,
    *,
    include_extras: bool = False,
    budget: int | None = None,
    limits: CatalogLimits = CatalogLimits(),
) -> tuple[list[dict], dict]:
    """Reports for every family entry plus a summary of the cross-checks.

    Per-entry elapsed_ms is null so that two identical runs emit identical
    bytes; wall-clock time belongs to the caller.  Any disagreement between
    the two classification routes is counted, never swallowed.
    """
    resolved = resolve_budget(budget)
    reports = []
    hypothesis_met = 0
    failures = 0
    budget_notes = 0
    for label, group in catalog_family(max_order, include_extras):
        try:
            auts = enumerate_automorphisms(group, resolved)
        except SearchBudgetExceeded as exc:
            reports.append(_group_only_report(label, group, str(exc)))
            budget_notes += 1
            continue
        for aut in auts:
            entry = CatalogEntry(label=label, group=group, aut=aut)
            report = entry_report(entry, resolved, limits, elapsed_ms=None)
            reports.append(report)
            if report["agreement"] is not None:
                hypothesis_met += 1
                if report["agreement"] is False:
                    failures += 1
            if any(
                "budget" in note or "aborted" in note for note in report["notes"]
            ):
                budget_notes += 1
    summary = {
        "entries": len(reports),
        "hypothesis_met": hypothesis_met,
        "agreement_failures": failures,
        "budget_notes": budget_notes,
    }
    return reports, summary
