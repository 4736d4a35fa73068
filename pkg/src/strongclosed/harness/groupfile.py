"""Line-oriented group files.

    # comment
    degree: 5
    gen: (1 2 3 4 5)
    gen: (1 2)

``degree`` appears at most once (it defaults to the largest point used);
every ``gen`` line holds one permutation in cycle notation. Blank lines and
``#`` comments are ignored.
"""

from __future__ import annotations

import os

from ..errors import GroupFileError
from ..group import Group
from ..perm import Permutation
from .catalog import CatalogEntry
from .constructors import MAX_DEGREE


def _parse_lines(lines: list[str], path: str | None) -> tuple[int, list[Permutation]]:
    degree = None
    degree_line = None
    raw: list[tuple[int, str]] = []
    for n, line in enumerate(lines, start=1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        key, sep, value = text.partition(":")
        key = key.strip().lower()
        value = value.strip()
        if not sep:
            raise GroupFileError(f"expected 'degree:' or 'gen:', got {text!r}", n, path)
        if key == "degree":
            if degree is not None:
                raise GroupFileError(f"degree already given on line {degree_line}", n, path)
            try:
                degree = int(value)
            except ValueError:
                raise GroupFileError(f"degree must be an integer, got {value!r}", n, path) from None
            if not 1 <= degree <= MAX_DEGREE:
                raise GroupFileError(f"degree must lie in 1..{MAX_DEGREE}", n, path)
            degree_line = n
        elif key == "gen":
            if value.count("(") != value.count(")"):
                raise GroupFileError("unbalanced cycle", n, path)
            raw.append((n, value))
        else:
            raise GroupFileError(f"unknown key {key!r}", n, path)
    gens = []
    for n, value in raw:
        try:
            gens.append(Permutation.parse(value, degree))
        except ValueError as exc:
            raise GroupFileError(str(exc), n, path) from None
    if degree is None:
        degree = max((g.degree for g in gens), default=1)
        gens = [Permutation.parse(str(g), degree) for g in gens]
    return degree, gens


def parse_group_text(text: str, path: str | None = None) -> tuple[int, list[Permutation]]:
    return _parse_lines(text.splitlines(), path)


def group_expression(degree: int, gens: list[Permutation]) -> str:
    """Constructor expression rebuilding the same permutation group."""
    args = ", ".join([str(degree)] + [repr(str(g)) for g in gens])
    return f"permutation_group({args})"


def parse_group_file(path: str) -> CatalogEntry:
    with open(path, encoding="utf-8") as fh:
        degree, gens = parse_group_text(fh.read(), path)
    G = Group(gens, degree)
    gid = os.path.splitext(os.path.basename(path))[0]
    entry = CatalogEntry(gid, group_expression(degree, gens), G.order())
    G.name = gid
    entry._group = G
    return entry


def format_group(G: Group, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.append(f"# {comment}")
    lines.append(f"degree: {G.degree}")
    lines += [f"gen: {g}" for g in G.generators]
    return "\n".join(lines) + "\n"


def write_group_file(G: Group, path: str, comment: str | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_group(G, comment))
