"""Mini-languages naming groups and automorphisms on the command line.

Group specs:   cyclic:N | product:<spec>,<spec>[,...] | dihedral:M
               | symmetric:K | quaternion | file:PATH
Aut specs:     id | inv | perm:i,j,... | conj:g

Parsing is total: any input yields either a value or a positioned
SpecParseError, never a crash.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotAbelian, SpecParseError, UnsupportedOrder
from .groups import (
    FiniteGroup,
    GroupAutomorphism,
    cyclic_group,
    dihedral_group,
    direct_product,
    identity_automorphism,
    inversion_automorphism,
    is_abelian,
    quaternion_group,
    symmetric_group,
    validate_automorphism,
    validate_group,
)
from .errors import BadElement
from .tableio import read_table

__all__ = [
    "GroupSpec",
    "AutSpec",
    "parse_group_spec",
    "parse_aut_spec",
    "build_group",
    "MAX_BUILT_ORDER",
]

# Guard against accidentally materializing a table too large to be useful;
# everything downstream is desk-scale anyway.
MAX_BUILT_ORDER = 1024

_KINDS = ("cyclic", "product", "dihedral", "symmetric", "quaternion", "file")


@dataclass(frozen=True)
class GroupSpec:
    raw: str
    kind: str
    number: int | None = None
    parts: tuple["GroupSpec", ...] = field(default=())
    path: str | None = None


@dataclass(frozen=True)
class AutSpec:
    raw: str
    kind: str
    perm: tuple[int, ...] | None = None
    element: int | None = None


class _Cursor:
    __slots__ = ("text", "pos")

    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message: str) -> SpecParseError:
        return SpecParseError(message, self.pos)

    def take_keyword(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isalpha():
            self.pos += 1
        if self.pos == start:
            raise self.fail("expected a group kind")
        return self.text[start : self.pos]

    def expect(self, char: str) -> None:
        if self.pos >= len(self.text) or self.text[self.pos] != char:
            raise self.fail(f"expected {char!r}")
        self.pos += 1

    def take_int(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.fail("expected an unsigned integer")
        return int(self.text[start : self.pos])

    def take_path(self) -> str:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos] != ",":
            self.pos += 1
        if self.pos == start:
            raise self.fail("expected a file path")
        return self.text[start : self.pos]

    def peek(self) -> str | None:
        return self.text[self.pos] if self.pos < len(self.text) else None

    def done(self) -> bool:
        return self.pos >= len(self.text)


def _parse_spec(cur: _Cursor) -> GroupSpec:
    start = cur.pos
    kind = cur.take_keyword()
    if kind not in _KINDS:
        cur.pos = start
        raise cur.fail(f"unknown group kind {kind!r}")
    if kind == "quaternion":
        return GroupSpec(raw=cur.text[start : cur.pos], kind=kind)
    cur.expect(":")
    if kind == "file":
        path = cur.take_path()
        return GroupSpec(raw=cur.text[start : cur.pos], kind=kind, path=path)
    if kind == "product":
        parts = [_parse_spec(cur)]
        while cur.peek() == ",":
            cur.expect(",")
            parts.append(_parse_spec(cur))
        if len(parts) < 2:
            raise cur.fail("product needs at least two factors")
        return GroupSpec(
            raw=cur.text[start : cur.pos], kind=kind, parts=tuple(parts)
        )
    number = cur.take_int()
    return GroupSpec(raw=cur.text[start : cur.pos], kind=kind, number=number)


def parse_group_spec(spec: str) -> GroupSpec:
    cur = _Cursor(spec)
    parsed = _parse_spec(cur)
    if not cur.done():
        raise cur.fail("unexpected trailing characters")
    return parsed


def _spec_order(spec: GroupSpec) -> int:
    if spec.kind == "cyclic":
        return max(spec.number or 0, 0)
    if spec.kind == "dihedral":
        return 2 * (spec.number or 0)
    if spec.kind == "symmetric":
        out = 1
        for i in range(2, (spec.number or 0) + 1):
            out *= i
        return out
    if spec.kind == "quaternion":
        return 8
    if spec.kind == "product":
        out = 1
        for part in spec.parts:
            out *= _spec_order(part)
        return out
    return 0  # file: unknown until read


def _realize(spec: GroupSpec) -> FiniteGroup:
    if spec.kind == "cyclic":
        return cyclic_group(spec.number)
    if spec.kind == "dihedral":
        return dihedral_group(spec.number)
    if spec.kind == "symmetric":
        return symmetric_group(spec.number)
    if spec.kind == "quaternion":
        return quaternion_group()
    if spec.kind == "product":
        return direct_product([_realize(part) for part in spec.parts])
    return validate_group(read_table(spec.path))


def build_group(spec: str | GroupSpec) -> FiniteGroup:
    """Build the group a spec string names; index 0 is the identity for all
    built-in constructors, file-loaded tables keep theirs wherever it sits."""
    parsed = parse_group_spec(spec) if isinstance(spec, str) else spec
    declared = _spec_order(parsed)
    if declared > MAX_BUILT_ORDER:
        raise UnsupportedOrder(
            f"spec {parsed.raw!r} names a group of order {declared}, "
            f"beyond the build cap of {MAX_BUILT_ORDER}"
        )
    return _realize(parsed)


def parse_aut_spec(spec: str, group: FiniteGroup) -> GroupAutomorphism:
    """Resolve an automorphism spec against an already-built group."""
    parsed = _parse_aut(spec)
    if parsed.kind == "id":
        return identity_automorphism(group)
    if parsed.kind == "inv":
        if not is_abelian(group):
            raise NotAbelian("spec 'inv' requires an abelian group")
        return inversion_automorphism(group)
    if parsed.kind == "perm":
        return validate_automorphism(group, parsed.perm)
    g = parsed.element
    if not 0 <= g < group.order:
        raise BadElement(g, group.order)
    ginv = group.inverse[g]
    perm = [group.product[group.product[g][x]][ginv] for x in range(group.order)]
    return validate_automorphism(group, perm)


def _parse_aut(spec: str) -> AutSpec:
    cur = _Cursor(spec)
    kind = cur.take_keyword()
    if kind in ("id", "inv"):
        if not cur.done():
            raise cur.fail("unexpected trailing characters")
        return AutSpec(raw=spec, kind=kind)
    if kind == "perm":
        cur.expect(":")
        values = [cur.take_int()]
        while cur.peek() == ",":
            cur.expect(",")
            values.append(cur.take_int())
        if not cur.done():
            raise cur.fail("unexpected trailing characters")
        return AutSpec(raw=spec, kind=kind, perm=tuple(values))
    if kind == "conj":
        cur.expect(":")
        g = cur.take_int()
        if not cur.done():
            raise cur.fail("unexpected trailing characters")
        return AutSpec(raw=spec, kind=kind, element=g)
    cur.pos = 0
    raise cur.fail(f"unknown automorphism kind {kind!r}")
