"""Odd-order groups acting on 2-groups, for the coprime-action lemma checks."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..closure import Reading
from ..errors import InvalidParameter
from ..group import Group, Subgroup
from ..subgroups import is_p_group
from .checks import Verdict, check_lemma
from .constructors import construct, holomorph_extension


@dataclass
class CoprimeActionInstance:
    """``P`` extended by the image of ``A`` in ``Aut(P)``, on the ``|P|`` elements of ``P``.

    ``normal`` and ``complement`` are the two factors inside ``semidirect``;
    ``complement`` is the faithful image of ``A``, so the order is
    ``|P| * |A| / kernel_order``.
    """

    id: str
    P: Group
    A: Group
    action: list
    semidirect: Group = field(init=False)
    kernel_order: int = field(init=False)

    def __post_init__(self):
        if not is_p_group(self.P.whole, 2):
            raise InvalidParameter(f"{self.id}: P must be a 2-group")
        if self.A.order() % 2 == 0:
            raise InvalidParameter(f"{self.id}: A must have odd order")
        data = holomorph_extension(self.P, self.A, self.action)
        self.semidirect = data.group
        self.semidirect.name = self.id
        self.kernel_order = data.kernel_order
        self._normal_gens = data.normal_gens
        self._complement_gens = data.complement_gens

    @property
    def normal(self) -> Subgroup:
        return self.semidirect.subgroup(self._normal_gens)

    @property
    def complement(self) -> Subgroup:
        return self.semidirect.subgroup(self._complement_gens)

    @property
    def acts_trivially(self) -> bool:
        return self.kernel_order == self.A.order()


def _lemma_verdict(inst: CoprimeActionInstance, lemma_id: str, reading: Reading) -> Verdict:
    return check_lemma(inst.semidirect.whole, lemma_id, f"coprime:{inst.id}", reading,
                       pair=(inst.normal, inst.complement))


def lemma_2_9_check(inst: CoprimeActionInstance) -> Verdict:
    return _lemma_verdict(inst, "L29", "normalizer")


def lemma_2_10_check(inst: CoprimeActionInstance) -> Verdict:
    return _lemma_verdict(inst, "L210", "normalizer")


def lemma_2_11_check(inst: CoprimeActionInstance, target_order: int | None = None) -> Verdict:
    """All valid target orders, or just ``target_order`` when given."""
    v = _lemma_verdict(inst, "L211", "normalizer")
    if target_order is None:
        return v
    return check_lemma(inst.semidirect.whole, "L211", f"coprime:{inst.id}", "normalizer",
                       pair=(inst.normal, inst.complement), target_order=target_order)


# (id, P, A, images of each A-generator on the P-generators)
_SPECS = [
    ("C4|C1", "cyclic(4)", "trivial()", []),
    ("V4|C3", "elementary_abelian(2, 2)", "cyclic(3)", [["x2", "x1*x2"]]),
    ("V4|C3-trivial", "elementary_abelian(2, 2)", "cyclic(3)", [["x1", "x2"]]),
    ("V4|C9", "elementary_abelian(2, 2)", "cyclic(9)", [["x2", "x1*x2"]]),
    ("C2^3|C7", "elementary_abelian(2, 3)", "cyclic(7)", [["x2", "x3", "x1*x2"]]),
    ("C2^3|C7-alt", "elementary_abelian(2, 3)", "cyclic(7)", [["x2", "x3", "x1*x3"]]),
    ("C2^3|C3", "elementary_abelian(2, 3)", "cyclic(3)", [["x2", "x1*x2", "x3"]]),
    ("C2^3|C21", "elementary_abelian(2, 3)", "cyclic(21)", [["x2", "x3", "x1*x2"]]),
    ("C2^4|C3", "elementary_abelian(2, 4)", "cyclic(3)", [["x2", "x1*x2", "x4", "x3*x4"]]),
    ("C2^4|C3-plane", "elementary_abelian(2, 4)", "cyclic(3)", [["x2", "x1*x2", "x3", "x4"]]),
    ("C2^4|C5", "elementary_abelian(2, 4)", "cyclic(5)", [["x2", "x3", "x4", "x1*x2*x3*x4"]]),
    ("C2^4|C15", "elementary_abelian(2, 4)", "cyclic(15)", [["x2", "x3", "x4", "x1*x4"]]),
    ("C2^4|C3xC3", "elementary_abelian(2, 4)", "elementary_abelian(3, 2)",
     [["x2", "x1*x2", "x3", "x4"], ["x1", "x2", "x4", "x3*x4"]]),
    ("C2^5|C31", "elementary_abelian(2, 5)", "cyclic(31)", [["x2", "x3", "x4", "x5", "x1*x3"]]),
    ("Q8|C3", "quaternion(8)", "cyclic(3)", [["x2", "x1*x2"]]),
    ("Q8|C9", "quaternion(8)", "cyclic(9)", [["x2", "x1*x2"]]),
    ("Q8xC2|C3", "direct_product(quaternion(8), cyclic(2))", "cyclic(3)", [["x2", "x1*x2", "x3"]]),
    ("C4^2|C3", "direct_product(cyclic(4), cyclic(4))", "cyclic(3)", [["x2", "x1^-1*x2^-1"]]),
    ("C4^2xC2|C3", "direct_product(cyclic(4), cyclic(4), cyclic(2))", "cyclic(3)",
     [["x2", "x1^-1*x2^-1", "x3"]]),
    ("D8|C3", "dihedral(8)", "cyclic(3)", [["x1", "x2"]]),
    ("C8|C5", "cyclic(8)", "cyclic(5)", [["x1"]]),
    ("Q16|C3", "quaternion(16)", "cyclic(3)", [["x1", "x2"]]),
    ("C4xC2|C3", "direct_product(cyclic(4), cyclic(2))", "cyclic(3)", [["x1", "x2"]]),
    ("C2^2xC4|C3", "direct_product(cyclic(2), cyclic(2), cyclic(4))", "cyclic(3)", [["x2", "x1*x2", "x3"]]),
]


def coprime_instances() -> list[CoprimeActionInstance]:
    out = []
    for iid, p_expr, a_expr, action in _SPECS:
        out.append(CoprimeActionInstance(iid, construct(p_expr), construct(a_expr), action))
    return out


def coprime_instance(iid: str) -> CoprimeActionInstance:
    for spec in _SPECS:
        if spec[0] == iid:
            iid, p_expr, a_expr, action = spec
            return CoprimeActionInstance(iid, construct(p_expr), construct(a_expr), action)
    raise KeyError(iid)


COPRIME_IDS = tuple(s[0] for s in _SPECS)
