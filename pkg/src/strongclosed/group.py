"""Permutation groups, their indexed element sets, and subgroups.

A ``Group`` is given by generators and owns a stabilizer chain. Once its
order is within ``BOUNDS.elements`` it can be enumerated into an
``ElementIndex``: every element gets an integer index (lexicographic order on
image arrays, identity = 0) and products are computed in bulk with numpy.
A ``Subgroup`` is a membership mask over the index of its ambient group, so
subgroup identity, containment and intersection are array operations.
"""

from __future__ import annotations

import threading
from typing import Iterable, Iterator, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from . import bounds as _bounds
from .chain import StabilizerChain, build_chain
from .errors import DegreeMismatch, EnumerationBoundExceeded, NotASubgroup, NotNormal
from .perm import Permutation


class ElementIndex:
    """All elements of a group as rows of an (order x degree) array.

    An element is fixed by its images of the base points, so products only
    need the base images of the left factor and one gather into the right.
    """

    def __init__(self, chain: StabilizerChain):
        self.degree = chain.degree
        self.base = np.asarray(chain.base, dtype=np.int64)
        dtype = np.int16 if self.degree < 2**15 else np.int32
        perms = np.arange(self.degree, dtype=dtype)[None, :]
        for trans in reversed(chain.transversals):
            u = np.array(list(trans.values()), dtype=dtype)
            # rows h*u for h in perms, u in transversal: (h*u)[x] = u[h[x]]
            perms = u[np.arange(len(u))[None, :, None], perms[:, None, :]]
            perms = perms.reshape(-1, self.degree)
        order = np.lexsort(perms.T[::-1])
        self.perms = np.ascontiguousarray(perms[order])
        self.perms.setflags(write=False)
        self.n = len(self.perms)
        self._setup_codes(chain)
        self._table: np.ndarray | None = None
        self._orders: np.ndarray | None = None
        self.arange = np.arange(self.n)
        self.inv = self._inverses()

    def _setup_codes(self, chain: StabilizerChain) -> None:
        # Base image of base[i] lies in the G-orbit of base[i]; code it by its
        # position in that orbit, mixed radix over orbit sizes.
        k = len(self.base)
        pos = np.full((max(k, 1), self.degree), -1, dtype=np.int64)
        radix = []
        for i in range(k):
            orbit = np.unique(self.perms[:, self.base[i]])
            pos[i, orbit] = np.arange(len(orbit))
            radix.append(len(orbit))
        weights = []
        w = 1
        for r in radix:
            weights.append(w)
            w *= r
        self._pos = pos
        self._fallback = w >= 2**62
        if self._fallback:
            self._lookup = {self.perms[i, self.base].tobytes(): i for i in range(self.n)}
        else:
            self._weights = np.asarray(weights, dtype=np.int64)
            codes = self._code(self.perms[:, self.base]) if k else np.zeros(self.n, np.int64)
            self._code_order = np.argsort(codes, kind="stable")
            self._codes_sorted = codes[self._code_order]

    def _code(self, base_images: np.ndarray) -> np.ndarray:
        k = len(self.base)
        p = self._pos[np.arange(k), base_images]
        return p @ self._weights

    def locate_base_images(self, base_images: np.ndarray) -> np.ndarray:
        """Indices of the elements with the given base images (shape (..., k))."""
        shape = base_images.shape[:-1]
        if len(self.base) == 0:
            return np.zeros(shape, dtype=np.int64)
        flat = base_images.reshape(-1, len(self.base))
        if self._fallback:
            b = flat.astype(self.perms.dtype)
            out = np.fromiter((self._lookup[r.tobytes()] for r in b), dtype=np.int64, count=len(b))
            return out.reshape(shape)
        codes = self._code(flat)
        return self._code_order[np.searchsorted(self._codes_sorted, codes)].reshape(shape)

    def locate(self, perm: Permutation | Sequence[int]) -> int:
        """Index of a member permutation (0-based images); -1 if not a member."""
        a = perm.array_form if isinstance(perm, Permutation) else tuple(perm)
        if len(a) != self.degree:
            raise DegreeMismatch(f"degree {len(a)} vs {self.degree}")
        if len(self.base) == 0:
            return 0 if a == tuple(range(self.degree)) else -1
        bi = np.asarray(a, dtype=np.int64)[self.base]
        if self._fallback:
            i = self._lookup.get(bi.astype(self.perms.dtype).tobytes(), -1)
        else:
            if np.any(self._pos[np.arange(len(self.base)), bi] < 0):
                return -1
            code = self._code(bi[None, :])[0]
            j = np.searchsorted(self._codes_sorted, code)
            if j >= self.n or self._codes_sorted[j] != code:
                return -1
            i = int(self._code_order[j])
        if i < 0 or tuple(self.perms[i].tolist()) != a:
            return -1
        return i

    def _inverses(self) -> np.ndarray:
        n, d = self.perms.shape
        inv = np.empty_like(self.perms)
        np.put_along_axis(inv, self.perms.astype(np.int64), np.broadcast_to(np.arange(d, dtype=inv.dtype), (n, d)), axis=1)
        return self.locate_base_images(inv[:, self.base].astype(np.int64))

    def _mul_raw(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        a, b = np.broadcast_arrays(np.asarray(a), np.asarray(b))
        if len(self.base) == 0:
            return np.zeros(a.shape, dtype=np.int64)
        fa, fb = a.ravel(), b.ravel()
        out = np.empty(fa.size, dtype=np.int64)
        # bound the temporary (products x base length) to a few million entries
        step = max(1, 2**22 // len(self.base))
        for s in range(0, fa.size, step):
            ab = self.perms[fa[s:s + step]][:, self.base]
            prod = self.perms[fb[s:s + step, None], ab]
            out[s:s + step] = self.locate_base_images(prod.astype(np.int64))
        return out.reshape(a.shape)

    @property
    def table(self) -> np.ndarray | None:
        if self._table is None and self.n <= _bounds.BOUNDS.table:
            t = np.empty((self.n, self.n), dtype=np.int32 if self.n >= 2**15 else np.int16)
            step = max(1, 2**20 // max(self.n, 1))
            for s in range(0, self.n, step):
                rows = self.arange[s:s + step]
                t[s:s + step] = self._mul_raw(rows[:, None], self.arange[None, :])
            t.setflags(write=False)
            self._table = t
        return self._table

    def mul(self, a, b) -> np.ndarray:
        """Indices of ``a*b`` (numpy broadcasting over index arrays)."""
        t = self.table
        if t is not None:
            return t[a, b].astype(np.int64)
        return self._mul_raw(a, b)

    def conj(self, a, g) -> np.ndarray:
        """Indices of ``g^-1 a g``."""
        g = np.asarray(g)
        return self.mul(self.mul(self.inv[g], a), g)

    def comm(self, a, b) -> np.ndarray:
        """Indices of ``a^-1 b^-1 a b``."""
        return self.mul(self.mul(self.inv[a], self.inv[b]), self.mul(a, b))

    @property
    def orders(self) -> np.ndarray:
        """Element orders, by index."""
        if self._orders is None:
            orders = np.ones(self.n, dtype=np.int64)
            cur = self.arange.copy()
            pending = cur != 0
            k = 1
            while pending.any():
                k += 1
                idx = np.flatnonzero(pending)
                cur[idx] = self.mul(cur[idx], idx)
                done = idx[cur[idx] == 0]
                orders[done] = k
                pending[done] = False
            orders.setflags(write=False)
            self._orders = orders
        return self._orders

    def power(self, x: int, k: int) -> int:
        k %= int(self.orders[x])
        r, base = 0, int(x)
        while k:
            if k & 1:
                r = int(self.mul(r, base))
            base = int(self.mul(base, base))
            k >>= 1
        return r

    def perm(self, i: int) -> Permutation:
        return Permutation._raw(tuple(self.perms[int(i)].tolist()))


class Group:
    """A permutation group of a fixed degree given by generators."""

    def __init__(self, generators: Iterable[Permutation] = (), degree: int | None = None, *, name: str | None = None):
        gens = tuple(generators)
        if degree is None:
            if not gens:
                raise ValueError("degree is required for a group without generators")
            degree = gens[0].degree
        for g in gens:
            if g.degree != degree:
                raise DegreeMismatch(f"generator {g} has degree {g.degree}, expected {degree}")
        self.degree = int(degree)
        self.generators = gens
        self.name = name
        self._lock = threading.RLock()
        self._chain: StabilizerChain | None = None
        self._index: ElementIndex | None = None
        self._whole: Subgroup | None = None

    def __repr__(self) -> str:
        label = self.name or "Group"
        return f"<{label} degree={self.degree} gens={len(self.generators)}>"

    @property
    def chain(self) -> StabilizerChain:
        if self._chain is None:
            with self._lock:
                if self._chain is None:
                    self._chain = build_chain([g.array_form for g in self.generators], self.degree)
        return self._chain

    def order(self) -> int:
        return self.chain.order()

    def contains(self, a: Permutation) -> bool:
        if a.degree != self.degree:
            raise DegreeMismatch(f"degree {a.degree} vs {self.degree}")
        return self.chain.contains(a.array_form)

    __contains__ = contains

    def __len__(self) -> int:
        return self.order()

    @property
    def index(self) -> ElementIndex:
        if self._index is None:
            with self._lock:
                if self._index is None:
                    n = self.order()
                    if n > _bounds.BOUNDS.elements:
                        raise EnumerationBoundExceeded(
                            f"group of order {n} exceeds the element bound {_bounds.BOUNDS.elements}")
                    self._index = ElementIndex(self.chain)
        return self._index

    def elements(self) -> Iterator[Permutation]:
        idx = self.index
        for i in range(idx.n):
            yield idx.perm(i)

    @property
    def whole(self) -> "Subgroup":
        """The group as a subgroup of itself."""
        if self._whole is None:
            U = self.index
            mask = np.ones(U.n, dtype=bool)
            gens = tuple(U.locate(g) for g in self.generators if not g.is_identity())
            self._whole = Subgroup(self, mask, tuple(dict.fromkeys(gens)))
        return self._whole

    def subgroup(self, generators: Iterable[Permutation]) -> "Subgroup":
        """Subgroup generated by member permutations."""
        U = self.index
        gi = []
        for g in generators:
            i = U.locate(g)
            if i < 0:
                raise NotASubgroup(f"{g} is not an element of {self!r}")
            gi.append(i)
        return generate(self, gi)

    def trivial(self) -> "Subgroup":
        mask = np.zeros(self.index.n, dtype=bool)
        mask[0] = True
        return Subgroup(self, mask, ())


class Subgroup:
    """A subgroup of an enumerated ambient group, stored as a membership mask.

    ``canonical_key`` is the sorted tuple of element indices; since the
    ambient index is lexicographic on image arrays this is the same ordering
    as sorting the elements themselves.
    """

    __slots__ = ("parent", "mask", "idx", "_gens", "_key", "_group", "cache")

    def __init__(self, parent: Group, mask: np.ndarray, gens: Sequence[int] | None = None):
        self.parent = parent
        mask = np.asarray(mask, dtype=bool)
        mask.setflags(write=False)
        self.mask = mask
        self.idx = np.flatnonzero(mask)
        self._gens = None if gens is None else tuple(int(g) for g in gens if g != 0)
        self._key: bytes | None = None
        self._group: Group | None = None
        self.cache: dict = {}

    @property
    def universe(self) -> ElementIndex:
        return self.parent.index

    @property
    def order(self) -> int:
        return len(self.idx)

    def __len__(self) -> int:
        return len(self.idx)

    @property
    def key(self) -> bytes:
        if self._key is None:
            self._key = np.packbits(self.mask).tobytes()
        return self._key

    @property
    def canonical_key(self) -> tuple[int, ...]:
        return tuple(self.idx.tolist())

    @property
    def gens(self) -> tuple[int, ...]:
        if self._gens is None:
            self._gens = _generating_set(self)
        return self._gens

    @property
    def generators(self) -> list[Permutation]:
        U = self.universe
        return [U.perm(i) for i in self.gens]

    @property
    def group(self) -> Group:
        """A standalone ``Group`` generated by this subgroup's generators."""
        if self._group is None:
            self._group = Group(self.generators, self.parent.degree)
        return self._group

    def elements(self) -> list[Permutation]:
        U = self.universe
        return [U.perm(i) for i in self.idx]

    def __contains__(self, x) -> bool:
        if isinstance(x, Permutation):
            i = self.universe.locate(x)
            return i >= 0 and bool(self.mask[i])
        return bool(self.mask[int(x)])

    def _same_parent(self, other: "Subgroup") -> None:
        if other.parent is not self.parent:
            raise NotASubgroup("subgroups live in different ambient groups")

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return other.parent is self.parent and other.key == self.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __le__(self, other: "Subgroup") -> bool:
        self._same_parent(other)
        return not np.any(self.mask & ~other.mask)

    def __lt__(self, other: "Subgroup") -> bool:
        return self <= other and self.order < other.order

    def __repr__(self) -> str:
        return f"<Subgroup order={self.order} of {self.parent!r}>"

    def sort_key(self) -> tuple:
        """Deterministic total order: by order, then canonical key."""
        return (self.order, self.canonical_key)

    def is_whole(self) -> bool:
        return self.order == self.universe.n


GroupLike = Group | Subgroup


def as_subgroup(G: GroupLike) -> Subgroup:
    return G.whole if isinstance(G, Group) else G


def _require_le(H: Subgroup, G: Subgroup) -> None:
    if H.parent is not G.parent or not H <= G:
        raise NotASubgroup("first argument is not contained in the ambient group")


def _closure_mask(U: ElementIndex, gens: np.ndarray, start: np.ndarray | None = None) -> np.ndarray:
    if start is None:
        mask = np.zeros(U.n, dtype=bool)
        mask[0] = True
        frontier = np.array([0])
    else:
        mask = start.copy()
        frontier = np.flatnonzero(mask)
    gens = np.asarray(gens, dtype=np.int64)
    if gens.size == 0:
        return mask
    while frontier.size:
        prod = U.mul(frontier[:, None], gens[None, :]).ravel()
        new = np.unique(prod[~mask[prod]])
        mask[new] = True
        frontier = new
    return mask


def generate(parent: Group, gens: Iterable[int]) -> Subgroup:
    """Subgroup of ``parent`` generated by element indices.

    Long generator lists are thinned on the way: an element already in the
    closure of the earlier ones is dropped.
    """
    gens = tuple(dict.fromkeys(int(g) for g in gens if int(g) != 0))
    U = parent.index
    if len(gens) <= 8:
        return Subgroup(parent, _closure_mask(U, np.array(gens, dtype=np.int64)), gens)
    mask = np.zeros(U.n, dtype=bool)
    mask[0] = True
    kept: list[int] = []
    for g in gens:
        if mask[g]:
            continue
        kept.append(g)
        mask = _closure_mask(U, np.array(kept, dtype=np.int64), mask)
    return Subgroup(parent, mask, kept)


def join(H: Subgroup, extra: Iterable[int] | Subgroup) -> Subgroup:
    """``<H, extra>``."""
    if isinstance(extra, Subgroup):
        H._same_parent(extra)
        if extra <= H:
            return H
        xs = [g for g in extra.gens if not H.mask[g]]
    else:
        xs = [int(g) for g in extra if not H.mask[int(g)]]
    xs = list(dict.fromkeys(xs))
    if not xs:
        return H
    U = H.universe
    gens = list(H.gens) + xs
    mask = _closure_mask(U, np.array(gens, dtype=np.int64), H.mask)
    return Subgroup(H.parent, mask, gens)


def _generating_set(H: Subgroup) -> tuple[int, ...]:
    U = H.universe
    if H.order == 1:
        return ()
    orders = U.orders[H.idx]
    cand = H.idx[np.lexsort((H.idx, -orders))]
    cur = np.zeros(U.n, dtype=bool)
    cur[0] = True
    gens: list[int] = []
    for x in cand:
        if cur[x]:
            continue
        gens.append(int(x))
        cur = _closure_mask(U, np.array(gens), cur)
        if cur.sum() == H.order:
            break
    return tuple(gens)


def subgroup_from_mask(parent: Group, mask: np.ndarray) -> Subgroup:
    return Subgroup(parent, mask)


def intersection(A: Subgroup, B: Subgroup) -> Subgroup:
    A._same_parent(B)
    return Subgroup(A.parent, A.mask & B.mask)


def conjugate_subgroup(H: Subgroup, g: int) -> Subgroup:
    """``H^g`` for an element index ``g``."""
    U = H.universe
    mask = np.zeros(U.n, dtype=bool)
    mask[U.conj(H.idx, g)] = True
    gens = None if H._gens is None else U.conj(np.array(H._gens, dtype=np.int64), g).tolist()
    return Subgroup(H.parent, mask, gens)


# --- spec-level operations -------------------------------------------------

def group_from_generators(gens: Sequence[Permutation], degree: int | None = None) -> Group:
    return Group(gens, degree)


def order(G: GroupLike) -> int:
    return G.order() if isinstance(G, Group) else G.order


def contains(G: GroupLike, a: Permutation) -> bool:
    return a in G


def elements(G: GroupLike) -> Iterator[Permutation]:
    if isinstance(G, Group):
        return G.elements()
    return iter(G.elements())


def _require_bound(G: Subgroup) -> None:
    if G.order > _bounds.BOUNDS.elements:
        raise EnumerationBoundExceeded(f"order {G.order} exceeds the element bound")


def normalizer(G: GroupLike, H: Subgroup) -> Subgroup:
    """``N_G(H)`` by filtering the elements of ``G``."""
    G = as_subgroup(G)
    _require_le(H, G)
    U = G.universe
    keep = G.idx
    for h in H.gens:
        keep = keep[H.mask[U.conj(h, keep)]]
    mask = np.zeros(U.n, dtype=bool)
    mask[keep] = True
    return Subgroup(G.parent, mask)


def centralizer(G: GroupLike, H: Subgroup | Iterable[int]) -> Subgroup:
    """``C_G(H)``; ``H`` may also be an iterable of element indices."""
    G = as_subgroup(G)
    if isinstance(H, Subgroup):
        G._same_parent(H)
        hs = H.gens
    else:
        hs = [int(h) for h in H]
    U = G.universe
    keep = G.idx
    for h in hs:
        keep = keep[U.mul(h, keep) == U.mul(keep, h)]
    mask = np.zeros(U.n, dtype=bool)
    mask[keep] = True
    return Subgroup(G.parent, mask)


def center(G: GroupLike) -> Subgroup:
    G = as_subgroup(G)
    if "center" not in G.cache:
        G.cache["center"] = centralizer(G, G)
    return G.cache["center"]


def is_normal(G: GroupLike, H: Subgroup) -> bool:
    G = as_subgroup(G)
    _require_le(H, G)
    if not H.gens or H.order == G.order:
        return True
    U = G.universe
    c = U.conj(np.array(H.gens)[:, None], np.array(G.gens)[None, :])
    return bool(H.mask[c].all())


def normal_closure(G: GroupLike, H: Subgroup) -> Subgroup:
    """Smallest normal subgroup of ``G`` containing ``H``."""
    G = as_subgroup(G)
    _require_le(H, G)
    U = G.universe
    K = H
    ggens = np.array(G.gens, dtype=np.int64)
    while K.gens and ggens.size:
        c = U.conj(np.array(K.gens)[:, None], ggens[None, :]).ravel()
        missing = np.unique(c[~K.mask[c]])
        if not missing.size:
            break
        K = join(K, missing.tolist())
    return K


def is_subnormal(G: GroupLike, H: Subgroup) -> bool:
    """True iff the chain ``G, <H^G>, <H^<H^G>>, ...`` descends to ``H``."""
    M = as_subgroup(G)
    _require_le(H, M)
    while True:
        C = normal_closure(M, H)
        if C == M:
            return M == H
        M = C


def conjugacy_labels(G: GroupLike) -> np.ndarray:
    """Label per universe element: equal labels iff ``G``-conjugate (elements of ``G`` only)."""
    G = as_subgroup(G)
    if "class_labels" not in G.cache:
        U = G.universe
        src = np.repeat(G.idx, max(len(G.gens), 1))
        if G.gens:
            dst = U.conj(G.idx[:, None], np.array(G.gens)[None, :]).ravel()
        else:
            dst = src
        graph = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(U.n, U.n))
        _, labels = connected_components(graph, directed=True, connection="weak")
        labels = labels.astype(np.int64)
        labels[~G.mask] = -1
        labels.setflags(write=False)
        G.cache["class_labels"] = labels
    return G.cache["class_labels"]


def conjugacy_class_reps(G: GroupLike) -> list[int]:
    """Smallest index in each conjugacy class of ``G``, in increasing order."""
    G = as_subgroup(G)
    labels = conjugacy_labels(G)[G.idx]
    _, first = np.unique(labels, return_index=True)
    return sorted(int(G.idx[i]) for i in first)


def conjugating_element(G: GroupLike, a: int, b: int) -> int | None:
    """Smallest ``g`` in ``G`` with ``a^g = b``, or ``None``."""
    G = as_subgroup(G)
    U = G.universe
    hits = G.idx[U.conj(a, G.idx) == b]
    return int(hits[0]) if hits.size else None


def right_transversal(G: GroupLike, H: Subgroup) -> list[int]:
    """Smallest representative of each right coset ``Hg`` of ``H`` in ``G``."""
    G = as_subgroup(G)
    _require_le(H, G)
    U = G.universe
    seen = np.zeros(U.n, dtype=bool)
    reps = []
    for x in G.idx:
        if seen[x]:
            continue
        reps.append(int(x))
        seen[U.mul(H.idx, x)] = True
    return reps


def homomorphism_images(G: GroupLike, target: ElementIndex, gen_images: Sequence[int]) -> np.ndarray | None:
    """Extend generator images to a map ``G -> target`` (indices).

    Returns an array over the universe (``-1`` outside ``G``), or ``None`` if
    the generator assignment does not define a homomorphism.
    """
    G = as_subgroup(G)
    U = G.universe
    gens = np.array(G.gens, dtype=np.int64)
    gimg = np.asarray(gen_images, dtype=np.int64)
    if len(gimg) != len(gens):
        raise ValueError("one image per generator is required")
    img = np.full(U.n, -1, dtype=np.int64)
    img[0] = 0
    frontier = np.array([0])
    while frontier.size:
        new_all = []
        for g, t in zip(gens, gimg):
            y = U.mul(frontier, g)
            ybar = target.mul(img[frontier], t)
            known = img[y] >= 0
            if np.any(img[y[known]] != ybar[known]):
                return None
            fresh = ~known
            img[y[fresh]] = ybar[fresh]
            new_all.append(np.unique(y[fresh]))
        frontier = np.unique(np.concatenate(new_all)) if new_all else np.array([], dtype=np.int64)
    # every edge of the Cayley graph must respect the map
    for g, t in zip(gens, gimg):
        if np.any(img[U.mul(G.idx, g)] != target.mul(img[G.idx], t)):
            return None
    return img


class Projection:
    """Natural map ``G -> G/N`` on element indices of the ambient universe."""

    def __init__(self, source: Subgroup, kernel: Subgroup, quotient: Group, images: np.ndarray):
        self.source = source
        self.kernel = kernel
        self.quotient = quotient
        self.images = images

    def __call__(self, x: Permutation | int) -> Permutation:
        if isinstance(x, Permutation):
            x = self.source.universe.locate(x)
            if x < 0 or not self.source.mask[x]:
                raise NotASubgroup("element is not in the source group")
        return self.quotient.index.perm(self.images[int(x)])

    def image(self, H: Subgroup) -> Subgroup:
        _require_le(H, self.source)
        Q = self.quotient
        gens = np.unique(self.images[np.array(H.gens, dtype=np.int64)]) if H.gens else []
        return generate(Q, [int(g) for g in gens])

    def preimage(self, Hbar: Subgroup) -> Subgroup:
        if Hbar.parent is not self.quotient:
            raise NotASubgroup("subgroup does not live in the quotient")
        U = self.source.universe
        mask = np.zeros(U.n, dtype=bool)
        mask[self.source.idx] = Hbar.mask[self.images[self.source.idx]]
        return Subgroup(self.source.parent, mask)


def quotient_group(G: GroupLike, N: Subgroup) -> tuple[Group, Projection]:
    """``G/N`` as the action of ``G`` on the right cosets of ``N``, with the projection."""
    G = as_subgroup(G)
    _require_le(N, G)
    if not is_normal(G, N):
        raise NotNormal("quotient requires a normal subgroup")
    U = G.universe
    m = G.order // N.order
    if m > _bounds.BOUNDS.elements:
        raise EnumerationBoundExceeded(f"quotient degree {m} exceeds the bound")
    labels = np.full(U.n, -1, dtype=np.int64)
    if N.order * G.order <= 4_000_000:
        # coset Nx is labelled by its smallest element
        smallest = U.mul(N.idx[:, None], G.idx[None, :]).min(axis=0)
        reps_arr, inverse = np.unique(smallest, return_inverse=True)
        labels[G.idx] = inverse
    else:
        reps: list[int] = []
        for x in G.idx:
            if labels[x] >= 0:
                continue
            labels[U.mul(N.idx, x)] = len(reps)
            reps.append(int(x))
        reps_arr = np.array(reps, dtype=np.int64)
    perms = []
    for g in G.gens:
        perms.append(Permutation._raw(tuple(labels[U.mul(reps_arr, g)].tolist())))
    Q = Group(perms, m)
    QI = Q.index
    gen_images = [QI.locate(p) for p in perms]
    images = homomorphism_images(G, QI, gen_images)
    assert images is not None
    return Q, Projection(G, N, Q, images)
