"""Plain-text table and permutation files.

Format shared by group and quandle tables: '#' starts a comment, the first
token is the order n, then n*n whitespace-separated indices follow (written
canonically as n rows).  Permutation files are a single line of n indices.
All files are ASCII with LF line endings.
"""

from __future__ import annotations

from pathlib import Path

from .errors import MalformedTable


def _tokens(text: str) -> list[str]:
    out = []
    for line in text.splitlines():
        body = line.split("#", 1)[0]
        out.extend(body.split())
    return out


def parse_table_text(text: str) -> list[list[int]]:
    tokens = _tokens(text)
    if not tokens:
        raise MalformedTable("file contains no data")
    try:
        values = [int(t) for t in tokens]
    except ValueError as exc:
        raise MalformedTable(f"non-integer token: {exc}") from None
    n = values[0]
    if n < 1:
        raise MalformedTable(f"declared order {n} is not positive")
    body = values[1:]
    if len(body) != n * n:
        raise MalformedTable(
            f"expected {n * n} entries for order {n}, found {len(body)}"
        )
    return [body[i * n : (i + 1) * n] for i in range(n)]


def read_table(path: str | Path) -> list[list[int]]:
    return parse_table_text(Path(path).read_text(encoding="ascii"))


def format_table(table: list[list[int]] | tuple) -> str:
    n = len(table)
    lines = [str(n)]
    lines.extend(" ".join(str(x) for x in row) for row in table)
    return "\n".join(lines) + "\n"


def write_table(path: str | Path, table) -> None:
    Path(path).write_text(format_table(table), encoding="ascii", newline="\n")


def parse_permutation_text(text: str) -> list[int]:
    tokens = _tokens(text)
    if not tokens:
        raise MalformedTable("file contains no data")
    try:
        return [int(t) for t in tokens]
    except ValueError as exc:
        raise MalformedTable(f"non-integer token: {exc}") from None


def read_permutation(path: str | Path) -> list[int]:
    return parse_permutation_text(Path(path).read_text(encoding="ascii"))


def format_permutation(perm) -> str:
    return " ".join(str(x) for x in perm) + "\n"


def write_permutation(path: str | Path, perm) -> None:
    Path(path).write_text(format_permutation(perm), encoding="ascii", newline="\n")
