"""Deterministic Schreier-Sims stabilizer chains on 0-based image arrays."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

Perm = Any  # tuple[int, ...] for small degrees, numpy array above NUMPY_DEGREE

NUMPY_DEGREE = 64


def _mul(a: Perm, b: Perm) -> Perm:
    if isinstance(a, np.ndarray):
        return b[a]
    return tuple([b[x] for x in a])


def _inv(a: Perm) -> Perm:
    if isinstance(a, np.ndarray):
        return np.argsort(a)
    out = [0] * len(a)
    for i, x in enumerate(a):
        out[x] = i
    return tuple(out)


def _same(a: Perm, b: Perm) -> bool:
    if isinstance(a, np.ndarray):
        return bool(np.array_equal(a, b))
    return a == b


def _first_moved(a: Perm) -> int:
    if isinstance(a, np.ndarray):
        moved = np.flatnonzero(a != np.arange(len(a)))
        if moved.size:
            return int(moved[0])
    else:
        for i, x in enumerate(a):
            if i != x:
                return i
    raise ValueError("identity moves no point")


@dataclass
class StabilizerChain:
    """Base, strong generators per level, and orbit transversals.

    ``transversals[i][b]`` maps ``base[i]`` to ``b`` and lies in the pointwise
    stabilizer of ``base[:i]``. Base points are chosen as the smallest point
    moved by the permutation that forces a new level.
    """

    degree: int
    base: list[int] = field(default_factory=list)
    strong: list[list[Perm]] = field(default_factory=list)
    transversals: list[dict[int, Perm]] = field(default_factory=list)
    inverse_transversals: list[dict[int, Perm]] = field(default_factory=list)

    @property
    def identity(self) -> Perm:
        if self.degree > NUMPY_DEGREE:
            return np.arange(self.degree)
        return tuple(range(self.degree))

    def order(self) -> int:
        n = 1
        for t in self.transversals:
            n *= len(t)
        return n

    def orbit_sizes(self) -> list[int]:
        return [len(t) for t in self.transversals]

    def sift(self, g: Perm, start: int = 0) -> tuple[Perm, int]:
        """Strip ``g`` through levels ``start..``; return residue and stop level."""
        for i in range(start, len(self.base)):
            b = int(g[self.base[i]])
            tinv = self.inverse_transversals[i].get(b)
            if tinv is None:
                return g, i
            g = _mul(g, tinv)
        return g, len(self.base)

    def contains(self, g: Perm) -> bool:
        if self.degree > NUMPY_DEGREE:
            g = np.asarray(g)
        r, j = self.sift(g)
        return j == len(self.base) and _same(r, self.identity)

    def _rebuild_level(self, i: int) -> None:
        point = self.base[i]
        ident = self.identity
        trans = {point: ident}
        queue = [point]
        gens = self.strong[i]
        for pt in queue:
            u = trans[pt]
            for s in gens:
                q = int(s[pt])
                if q not in trans:
                    trans[q] = _mul(u, s)
                    queue.append(q)
        self.transversals[i] = trans
        self.inverse_transversals[i] = {b: _inv(u) for b, u in trans.items()}

    def _add_level(self, point: int) -> None:
        self.base.append(point)
        self.strong.append([])
        self.transversals.append({})
        self.inverse_transversals.append({})


def build_chain(generators: list[Perm], degree: int) -> StabilizerChain:
    ch = StabilizerChain(degree)
    ident = ch.identity
    gens: list[Perm] = []
    for g in generators:
        if degree > NUMPY_DEGREE:
            g = np.asarray(g)
        if not _same(g, ident) and not any(_same(g, h) for h in gens):
            gens.append(g)
    for g in gens:
        if all(g[b] == b for b in ch.base):
            ch._add_level(_first_moved(g))
    for i in range(len(ch.base)):
        fixed = ch.base[:i]
        ch.strong[i] = [g for g in gens if all(g[b] == b for b in fixed)]
        ch._rebuild_level(i)

    i = len(ch.base) - 1
    while i >= 0:
        jumped = False
        trans = ch.transversals[i]
        tinv = ch.inverse_transversals[i]
        for b in list(trans):
            u = trans[b]
            for s in ch.strong[i]:
                h = _mul(_mul(u, s), tinv[int(s[b])])
                if _same(h, ident):
                    continue
                r, j = ch.sift(h, i + 1)
                if _same(r, ident):
                    continue
                if j == len(ch.base):
                    ch._add_level(_first_moved(r))
                for lvl in range(i + 1, j + 1):
                    ch.strong[lvl].append(r)
                    ch._rebuild_level(lvl)
                i = j
                jumped = True
                break
            if jumped:
                break
        if not jumped:
            i -= 1
    return ch
