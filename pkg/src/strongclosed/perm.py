"""Permutations of {1..n}.

Permutations act on the right: ``x^(ab) = (x^a)^b``, so ``a * b`` means
"apply ``a`` first, then ``b``" and conjugation is ``a^g = g^-1 a g``.
Internally images are stored 0-based; everything user-facing is 1-based.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Sequence

from .errors import DegreeMismatch

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class Permutation:
    """An immutable bijection of ``{1..degree}``."""

    __slots__ = ("_a", "_hash")

    def __init__(self, images: Sequence[int], *, zero_based: bool = False):
        a = tuple(int(x) for x in images)
        if not zero_based:
            a = tuple(x - 1 for x in a)
        if sorted(a) != list(range(len(a))):
            raise ValueError(f"not a permutation: {images!r}")
        if not a:
            raise ValueError("degree must be positive")
        self._a = a
        self._hash = hash(a)

    @classmethod
    def _raw(cls, a: tuple[int, ...]) -> "Permutation":
        p = object.__new__(cls)
        p._a = a
        p._hash = hash(a)
        return p

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Permutation":
        """Build from 1-based cycles, e.g. ``[(1, 2, 3), (4, 5)]``."""
        img = list(range(degree))
        seen: set[int] = set()
        for cyc in cycles:
            pts = [int(x) - 1 for x in cyc]
            for x in pts:
                if not 0 <= x < degree:
                    raise ValueError(f"point {x + 1} outside 1..{degree}")
                if x in seen:
                    raise ValueError(f"point {x + 1} repeated in cycle notation")
                seen.add(x)
            for i, x in enumerate(pts):
                img[x] = pts[(i + 1) % len(pts)]
        return cls._raw(tuple(img))

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> "Permutation":
        """Parse cycle notation such as ``"(1 2 3)(4 5)"`` or ``"()"``."""
        s = text.strip()
        cycles = []
        pos = 0
        for m in _CYCLE_RE.finditer(s):
            if s[pos:m.start()].strip():
                raise ValueError(f"unexpected text {s[pos:m.start()]!r} in {text!r}")
            body = m.group(1).replace(",", " ").split()
            cycles.append([int(x) for x in body])
            pos = m.end()
        if s[pos:].strip():
            raise ValueError(f"unbalanced or trailing text in {text!r}")
        if degree is None:
            degree = max((max(c) for c in cycles if c), default=1)
        return cls.from_cycles([c for c in cycles if c], degree)

    @property
    def degree(self) -> int:
        return len(self._a)

    @property
    def images(self) -> tuple[int, ...]:
        """1-based images of the points ``1..degree``."""
        return tuple(x + 1 for x in self._a)

    @property
    def array_form(self) -> tuple[int, ...]:
        """0-based images; the internal representation."""
        return self._a

    def __call__(self, point: int) -> int:
        return self._a[point - 1] + 1

    def _check(self, other: "Permutation") -> None:
        if len(self._a) != len(other._a):
            raise DegreeMismatch(f"degrees differ: {len(self._a)} vs {len(other._a)}")

    def __mul__(self, other: "Permutation") -> "Permutation":
        self._check(other)
        b = other._a
        return Permutation._raw(tuple(b[x] for x in self._a))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self._a)
        for i, x in enumerate(self._a):
            inv[x] = i
        return Permutation._raw(tuple(inv))

    def __pow__(self, k: int) -> "Permutation":
        if k < 0:
            return self.inverse() ** (-k)
        result = Permutation.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __xor__(self, g: "Permutation") -> "Permutation":
        """``a ^ g`` is the conjugate ``g^-1 a g``."""
        return conjugate_elem(self, g)

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self._a))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, 1-based, each starting at its smallest point."""
        seen = [False] * len(self._a)
        out = []
        for i in range(len(self._a)):
            if seen[i] or self._a[i] == i:
                continue
            cyc = [i]
            seen[i] = True
            j = self._a[i]
            while j != i:
                seen[j] = True
                cyc.append(j)
                j = self._a[j]
            out.append(tuple(x + 1 for x in cyc))
        return out

    def order(self) -> int:
        return math.lcm(1, *(len(c) for c in self.cycles()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return self._a == other._a

    def __lt__(self, other: "Permutation") -> bool:
        return self._a < other._a

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)

    def __repr__(self) -> str:
        return f"Permutation.parse({str(self)!r}, {self.degree})"


def compose(a: Permutation, b: Permutation) -> Permutation:
    """``a`` followed by ``b``."""
    return a * b


def inverse(a: Permutation) -> Permutation:
    return a.inverse()


def conjugate_elem(a: Permutation, g: Permutation) -> Permutation:
    """``a^g = g^-1 a g``."""
    a._check(g)
    ga, aa = g._a, a._a
    # x -> g^-1 -> a -> g, written as: image of g[i] is g[a[i]]
    out = [0] * len(ga)
    for i in range(len(ga)):
        out[ga[i]] = ga[aa[i]]
    return Permutation._raw(tuple(out))
