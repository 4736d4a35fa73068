"""Built-in catalog of small groups.

Every entry is a constructor expression plus its declared order; the group is
built on first use. The declared order is what ``--max-order`` filters on, and
the tests check it against the built group.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..errors import InvalidParameter
from ..group import Group
from .constructors import construct


@dataclass
class CatalogEntry:
    id: str
    construction: str
    order: int
    _group: Group | None = field(default=None, repr=False, compare=False)

    @property
    def group(self) -> Group:
        if self._group is None:
            G = construct(self.construction)
            if G.order() != self.order:
                raise InvalidParameter(f"{self.id}: built order {G.order()} != declared {self.order}")
            G.name = self.id
            self._group = G
        return self._group

    def to_json(self) -> dict:
        return {"id": self.id, "order": self.order, "construction": self.construction}


# Semidirect products: A-generator j sends P-generator i to action[j][i].
_SEMIDIRECT = [
    ("C3:C4", "semidirect_product(cyclic(3), cyclic(4), [['x1^-1']])", 12),
    ("C5:C4", "semidirect_product(cyclic(5), cyclic(4), [['x1^2']])", 20),
    ("C7:C3", "semidirect_product(cyclic(7), cyclic(3), [['x1^2']])", 21),
    ("C3:C8", "semidirect_product(cyclic(3), cyclic(8), [['x1^-1']])", 24),
    ("C3:Q8", "semidirect_product(cyclic(3), quaternion(8), [['x1^-1'], ['x1^-1']])", 24),
    ("Q8:C3", "semidirect_product(quaternion(8), cyclic(3), [['x2', 'x1*x2']])", 24),
    ("C9:C4", "semidirect_product(cyclic(9), cyclic(4), [['x1^-1']])", 36),
    ("C3^2:C4", "semidirect_product(elementary_abelian(3, 2), cyclic(4), [['x2', 'x1^-1']])", 36),
    ("C2^2:C9", "semidirect_product(elementary_abelian(2, 2), cyclic(9), [['x2', 'x1*x2']])", 36),
    ("C13:C3", "semidirect_product(cyclic(13), cyclic(3), [['x1^3']])", 39),
    ("C5:C8", "semidirect_product(cyclic(5), cyclic(8), [['x1^2']])", 40),
    ("C5:Q8", "semidirect_product(cyclic(5), quaternion(8), [['x1^-1'], ['x1^-1']])", 40),
    ("C7:C6", "semidirect_product(cyclic(7), cyclic(6), [['x1^3']])", 42),
    ("C4^2:C3", "semidirect_product(direct_product(cyclic(4), cyclic(4)), cyclic(3), [['x2', 'x1^-1*x2^-1']])", 48),
    ("C3:C16", "semidirect_product(cyclic(3), cyclic(16), [['x1^-1']])", 48),
    ("C2^4:C3", "semidirect_product(elementary_abelian(2, 4), cyclic(3), [['x2', 'x1*x2', 'x4', 'x3*x4']])", 48),
    ("C11:C5", "semidirect_product(cyclic(11), cyclic(5), [['x1^3']])", 55),
    ("C2^3:C7", "semidirect_product(elementary_abelian(2, 3), cyclic(7), [['x2', 'x3', 'x1*x2']])", 56),
    ("C7:C9", "semidirect_product(cyclic(7), cyclic(9), [['x1^2']])", 63),
    ("C3^2:Q8", "semidirect_product(elementary_abelian(3, 2), quaternion(8), [['x2', 'x1^-1'], ['x1*x2', 'x1*x2^-1']])", 72),
    ("Q8:C9", "semidirect_product(quaternion(8), cyclic(9), [['x2', 'x1*x2']])", 72),
    ("C2^4:C5", "semidirect_product(elementary_abelian(2, 4), cyclic(5), [['x2', 'x3', 'x4', 'x1*x2*x3*x4']])", 80),
    ("C19:C9", "semidirect_product(cyclic(19), cyclic(9), [['x1^4']])", 171),
    ("C2^4:C15", "semidirect_product(elementary_abelian(2, 4), cyclic(15), [['x2', 'x3', 'x4', 'x1*x4']])", 240),
]

_DIRECT = [
    ("C2xC2xC2", "elementary_abelian(2, 3)", 8),
    ("C4xC2", "direct_product(cyclic(4), cyclic(2))", 8),
    ("C3xC3", "elementary_abelian(3, 2)", 9),
    ("S3xC2", "direct_product(symmetric(3), cyclic(2))", 12),
    ("C2^4", "elementary_abelian(2, 4)", 16),
    ("C4xC4", "direct_product(cyclic(4), cyclic(4))", 16),
    ("D8xC2", "direct_product(dihedral(8), cyclic(2))", 16),
    ("Q8xC2", "direct_product(quaternion(8), cyclic(2))", 16),
    ("S3xC3", "direct_product(symmetric(3), cyclic(3))", 18),
    ("D8xC3", "direct_product(dihedral(8), cyclic(3))", 24),
    ("Q8xC3", "direct_product(quaternion(8), cyclic(3))", 24),
    ("A4xC2", "direct_product(alternating(4), cyclic(2))", 24),
    ("S3xC4", "direct_product(symmetric(3), cyclic(4))", 24),
    ("S3xS3", "direct_product(symmetric(3), symmetric(3))", 36),
    ("A4xC3", "direct_product(alternating(4), cyclic(3))", 36),
    ("D10xC3", "direct_product(dihedral(10), cyclic(3))", 30),
    ("S4xC2", "direct_product(symmetric(4), cyclic(2))", 48),
    ("SL2_3xC2", "direct_product(special_linear_2(3), cyclic(2))", 48),
    ("S3xD8", "direct_product(symmetric(3), dihedral(8))", 48),
    ("S3xQ8", "direct_product(symmetric(3), quaternion(8))", 48),
    ("D8xD8", "direct_product(dihedral(8), dihedral(8))", 64),
    ("S4xC3", "direct_product(symmetric(4), cyclic(3))", 72),
    ("SL2_3xC3", "direct_product(special_linear_2(3), cyclic(3))", 72),
    ("C7:C3xC2", "direct_product(semidirect_product(cyclic(7), cyclic(3), [['x1^2']]), cyclic(2))", 42),
    ("A5xC2", "direct_product(alternating(5), cyclic(2))", 120),
    ("A4xA4", "direct_product(alternating(4), alternating(4))", 144),
    ("S4xS3", "direct_product(symmetric(4), symmetric(3))", 144),
    ("A5xC3", "direct_product(alternating(5), cyclic(3))", 180),
    ("S5xC2", "direct_product(symmetric(5), cyclic(2))", 240),
    ("SL2_5xC3", "direct_product(special_linear_2(5), cyclic(3))", 360),
    ("A5xS3", "direct_product(alternating(5), symmetric(3))", 360),
]


def _families() -> list[tuple[str, str, int]]:
    out = [("C1", "trivial()", 1)]
    for n in list(range(2, 17)) + [18, 20, 24, 27, 30, 32, 36, 60, 64]:
        out.append((f"C{n}", f"cyclic({n})", n))
    for m in [4, 6, 8, 10, 12, 14, 16, 18, 20, 22, 24, 26, 28, 30, 32, 36, 40, 48, 56, 60, 64, 128]:
        out.append((f"D{m}", f"dihedral({m})", m))
    for m in [8, 16, 32, 64, 128]:
        out.append((f"Q{m}", f"quaternion({m})", m))
    out += [("S3", "symmetric(3)", 6), ("S4", "symmetric(4)", 24), ("S5", "symmetric(5)", 120)]
    out += [("A4", "alternating(4)", 12), ("A5", "alternating(5)", 60)]
    for q in [3, 5, 7]:
        out.append((f"SL2_{q}", f"special_linear_2({q})", q * (q * q - 1)))
    out.append(("PSL2_7", "projective_special_linear_2(7)", 168))
    out.append(("PSL2_17", "projective_special_linear_2(17)", 2448))
    out.append(("SL2_17", "special_linear_2(17)", 4896))
    return out


def builtin_catalog() -> list[CatalogEntry]:
    rows = _families() + _DIRECT + _SEMIDIRECT
    seen = set()
    out = []
    for gid, expr, n in rows:
        if gid in seen:
            raise AssertionError(f"duplicate catalog id {gid}")
        seen.add(gid)
        out.append(CatalogEntry(gid, expr, n))
    return sorted(out, key=lambda e: (e.order, e.id))


DISTINGUISHED = ("SL2_17", "PSL2_17")


def select(max_order: int | None = None, ids: list[str] | None = None,
           include_distinguished: bool = True) -> list[CatalogEntry]:
    """Entries up to ``max_order`` (plus the two large ones when asked), or the named ids."""
    cat = builtin_catalog()
    if ids:
        by_id = {e.id: e for e in cat}
        missing = [i for i in ids if i not in by_id]
        if missing:
            raise InvalidParameter(f"unknown catalog ids: {', '.join(missing)}")
        return [by_id[i] for i in ids]
    out = []
    for e in cat:
        if max_order is None or e.order <= max_order or (include_distinguished and e.id in DISTINGUISHED):
            out.append(e)
    return out


def lookup(gid: str) -> CatalogEntry:
    for e in builtin_catalog():
        if e.id == gid:
            return e
    raise KeyError(gid)
