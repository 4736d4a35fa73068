"""Permutation representations of the standard families.

``special_linear_2(q)`` acts on the nonzero row vectors of the plane over the
q-element field, ``projective_special_linear_2(q)`` on its q+1 lines.
Quaternion and semidirect products use regular representations.
"""

from __future__ import annotations

import ast
import math
import re
from typing import Sequence

import numpy as np

from ..errors import InvalidParameter
from ..group import Group, homomorphism_images
from ..numtheory import is_prime
from ..perm import Permutation

MAX_DEGREE = 10_000


def _check_degree(d: int) -> None:
    if d > MAX_DEGREE:
        raise InvalidParameter(f"degree {d} exceeds {MAX_DEGREE}")


def _perm(images: Sequence[int]) -> Permutation:
    return Permutation(images, zero_based=True)


def trivial(degree: int = 1) -> Group:
    return Group([], degree, name="C1")


def cyclic(n: int) -> Group:
    if n < 1:
        raise InvalidParameter("cyclic(n) needs n >= 1")
    _check_degree(n)
    if n == 1:
        return trivial()
    return Group([_perm([(i + 1) % n for i in range(n)])], n, name=f"C{n}")


def dihedral(order: int) -> Group:
    """Dihedral group of the given order (2n); natural n-gon action for n >= 3."""
    if order < 2 or order % 2:
        raise InvalidParameter("dihedral(2n) needs an even order >= 2")
    n = order // 2
    if n == 1:
        return Group([_perm([1, 0])], 2, name="D2")
    if n == 2:
        return Group([_perm([1, 0, 2, 3]), _perm([0, 1, 3, 2])], 4, name="D4")
    _check_degree(n)
    rot = _perm([(i + 1) % n for i in range(n)])
    ref = _perm([(-i) % n for i in range(n)])
    return Group([rot, ref], n, name=f"D{order}")


def generalized_quaternion(order: int) -> Group:
    """Q_{2^n}, n >= 3, in its regular representation.

    Elements x^i y^j with x of order m = order/2, y^2 = x^(m/2), x^y = x^-1.
    """
    if order < 8 or order & (order - 1):
        raise InvalidParameter("generalized_quaternion needs a power of 2, at least 8")
    _check_degree(order)
    m = order // 2

    def mul(i, j, k, l):
        e = i + (k if j == 0 else -k)
        if j == 1 and l == 1:
            e += m // 2
        return e % m, (j + l) % 2

    def right(k, l):
        # point 2*i + j stands for x^i y^j
        out = []
        for i in range(m):
            for j in range(2):
                a, b = mul(i, j, k, l)
                out.append(2 * a + b)
        return _perm(out)

    return Group([right(1, 0), right(0, 1)], order, name=f"Q{order}")


def symmetric(n: int) -> Group:
    if n < 1:
        raise InvalidParameter("symmetric(n) needs n >= 1")
    if n == 1:
        return trivial()
    if n == 2:
        return Group([_perm([1, 0])], 2, name="S2")
    return Group([_perm([(i + 1) % n for i in range(n)]), _perm([1, 0] + list(range(2, n)))], n, name=f"S{n}")


def alternating(n: int) -> Group:
    if n < 1:
        raise InvalidParameter("alternating(n) needs n >= 1")
    if n < 3:
        return Group([], n, name=f"A{n}")
    gens = [Permutation.from_cycles([(1, 2, i)], n) for i in range(3, n + 1)]
    return Group(gens, n, name=f"A{n}")


def _check_q(q: int) -> None:
    if not is_prime(q) or q > 31:
        raise InvalidParameter("q must be a prime <= 31")


def special_linear_2(q: int) -> Group:
    """SL_2(q) on the q^2 - 1 nonzero vectors (row vectors, right action)."""
    _check_q(q)
    vecs = [(x, y) for x in range(q) for y in range(q) if (x, y) != (0, 0)]
    where = {v: i for i, v in enumerate(vecs)}

    def act(a, b, c, d):
        return _perm([where[((x * a + y * c) % q, (x * b + y * d) % q)] for x, y in vecs])

    return Group([act(1, 1, 0, 1), act(1, 0, 1, 1)], len(vecs), name=f"SL2_{q}")


def projective_special_linear_2(q: int) -> Group:
    """PSL_2(q) on the q + 1 points of the projective line."""
    _check_q(q)
    pts = [(1, y) for y in range(q)] + [(0, 1)]
    where = {v: i for i, v in enumerate(pts)}

    def norm(x, y):
        if x % q:
            inv = pow(x, -1, q)
            return (1, (y * inv) % q)
        return (0, 1)

    def act(a, b, c, d):
        return _perm([where[norm(x * a + y * c, x * b + y * d)] for x, y in pts])

    return Group([act(1, 1, 0, 1), act(1, 0, 1, 1)], len(pts), name=f"PSL2_{q}")


def direct_product(*factors: Group) -> Group:
    """Direct product acting on the disjoint union of the factors' points."""
    if not factors:
        return trivial()
    degree = sum(f.degree for f in factors)
    _check_degree(degree)
    gens = []
    shift = 0
    for f in factors:
        for g in f.generators:
            img = list(range(degree))
            for i, x in enumerate(g.array_form):
                img[shift + i] = shift + x
            gens.append(_perm(img))
        shift += f.degree
    if not gens:
        return Group([], degree)
    return Group(gens, degree)


def elementary_abelian(p: int, k: int) -> Group:
    return direct_product(*[cyclic(p) for _ in range(k)])


_WORD_RE = re.compile(r"^x(\d+)(?:\^(-?\d+))?$")


def parse_word(G: Group, word: str | Permutation) -> Permutation:
    """Evaluate a word such as ``"x1^2*x2^-1"`` in the generators of ``G``.

    ``"1"`` or ``""`` is the identity; a Permutation passes through.
    """
    if isinstance(word, Permutation):
        return word
    result = Permutation.identity(G.degree)
    w = word.replace(" ", "")
    if w in ("", "1", "e"):
        return result
    for factor in w.split("*"):
        m = _WORD_RE.match(factor)
        if not m:
            raise InvalidParameter(f"cannot parse word factor {factor!r}")
        i = int(m.group(1))
        if not 1 <= i <= len(G.generators):
            raise InvalidParameter(f"generator x{i} out of range")
        e = int(m.group(2)) if m.group(2) else 1
        result = result * G.generators[i - 1] ** e
    return result


class SemidirectData:
    """A semidirect product ``P : A`` with its two factors' generators inside it."""

    def __init__(self, group: Group, normal_gens: list[Permutation], complement_gens: list[Permutation],
                 automorphisms: np.ndarray, kernel_order: int):
        self.group = group
        self.normal_gens = normal_gens
        self.complement_gens = complement_gens
        self.automorphisms = automorphisms
        self.kernel_order = kernel_order


def action_table(P: Group, A: Group, action: Sequence[Sequence[str | Permutation]]) -> tuple[np.ndarray, int]:
    """Automorphism table of a right action ``A -> Aut(P)`` given on generators.

    A-generator j sends P-generator i to ``action[j][i]`` (``a^-1 p a = p^a``).
    Row ``a`` of the table maps each P-index to the index of its image under
    ``a``. Both the automorphism property and the homomorphism ``A -> Aut(P)``
    are verified. Returns the table and the order of the kernel.
    """
    PI, AI = P.index, A.index
    np_, na = PI.n, AI.n
    pgens = list(P.generators)
    agens = list(A.generators)
    if len(action) != len(agens):
        raise InvalidParameter(f"need images for {len(agens)} complement generators, got {len(action)}")
    Pw = P.whole
    pgen_idx = [PI.locate(g) for g in pgens]
    autos = []
    for j, imgs in enumerate(action):
        if len(imgs) != len(pgens):
            raise InvalidParameter(f"generator {j + 1}: need {len(pgens)} images, got {len(imgs)}")
        targets = []
        for w in imgs:
            t = PI.locate(parse_word(P, w))
            if t < 0:
                raise InvalidParameter(f"image {w} is not in the normal factor")
            targets.append(t)
        # homomorphism_images works on the subgroup's own generating set
        ordered = [targets[pgen_idx.index(g)] for g in Pw.gens]
        phi = homomorphism_images(Pw, PI, ordered)
        if phi is None or len(np.unique(phi)) != np_:
            raise InvalidParameter(f"images for complement generator {j + 1} do not define an automorphism")
        autos.append(phi)
    if np_ == 1 or not agens:
        return np.tile(np.arange(np_), (na, 1)), na
    aut_perms = [Permutation(a.tolist(), zero_based=True) for a in autos]
    AutG = Group(aut_perms, np_)
    Aw = A.whole
    agen_idx = [AI.locate(g) for g in agens]
    aut_idx = [AutG.index.locate(p) for p in aut_perms]
    ordered = [aut_idx[agen_idx.index(g)] for g in Aw.gens]
    img = homomorphism_images(Aw, AutG.index, ordered)
    if img is None:
        raise InvalidParameter("the action does not define a homomorphism into Aut(P)")
    return AutG.index.perms[img].astype(np.int64), int(np.sum(img == 0))


def semidirect_data(P: Group, A: Group, action: Sequence[Sequence[str | Permutation]]) -> SemidirectData:
    """Build ``P : A`` in the regular representation on ``|P|*|A|`` points.

    The result has order ``|P|*|A|`` even when the action has a kernel.
    """
    PI, AI = P.index, A.index
    np_, na = PI.n, AI.n
    _check_degree(np_ * na)
    table, kernel = action_table(P, A, action)
    # points p*|A| + a; (p,a)(q,b) = (p * q^(a^-1), a*b)
    p_all = np.repeat(np.arange(np_), na)
    a_all = np.tile(np.arange(na), np_)
    gens = []
    for g in P.generators:
        q = PI.locate(g)
        twisted = table[AI.inv[a_all], q]
        newp = PI.mul(p_all, twisted)
        gens.append(_perm((newp * na + a_all).tolist()))
    npg = len(gens)
    for g in A.generators:
        b = AI.locate(g)
        newa = AI.mul(a_all, b)
        gens.append(_perm((p_all * na + newa).tolist()))
    G = Group(gens, np_ * na)
    return SemidirectData(G, gens[:npg], gens[npg:], table, kernel)


def holomorph_extension(P: Group, A: Group, action: Sequence[Sequence[str | Permutation]]) -> SemidirectData:
    """``P`` extended by the image of ``A`` in ``Aut(P)``, acting on the ``|P|`` elements of ``P``.

    ``P`` acts by right multiplication and ``A`` through its automorphisms,
    so the order is ``|P| * |A / kernel|``.
    """
    PI = P.index
    table, kernel = action_table(P, A, action)
    pts = np.arange(PI.n)
    pgens = [_perm(PI.mul(pts, PI.locate(g)).tolist()) for g in P.generators]
    agens = [_perm(table[A.index.locate(g)].tolist()) for g in A.generators]
    G = Group(pgens + agens, PI.n)
    return SemidirectData(G, pgens, agens, table, kernel)


def semidirect_product(P: Group, A: Group, action: Sequence[Sequence[str | Permutation]]) -> Group:
    return semidirect_data(P, A, action).group


def permutation_group(degree: int, *gens: str) -> Group:
    """Group generated by permutations in cycle notation, e.g. ``"(1 2 3)"``."""
    _check_degree(degree)
    return Group([Permutation.parse(g, degree) for g in gens], degree)


CONSTRUCTORS = {
    "trivial": trivial,
    "cyclic": cyclic,
    "dihedral": dihedral,
    "generalized_quaternion": generalized_quaternion,
    "quaternion": generalized_quaternion,
    "symmetric": symmetric,
    "alternating": alternating,
    "special_linear_2": special_linear_2,
    "projective_special_linear_2": projective_special_linear_2,
    "direct_product": direct_product,
    "semidirect_product": semidirect_product,
    "elementary_abelian": elementary_abelian,
    "permutation_group": permutation_group,
}


def _eval(node: ast.AST):
    if isinstance(node, ast.Call) and isinstance(node.func, ast.Name):
        fn = CONSTRUCTORS.get(node.func.id)
        if fn is None:
            raise InvalidParameter(f"unknown constructor {node.func.id!r}")
        if node.keywords:
            raise InvalidParameter("keyword arguments are not supported")
        return fn(*[_eval(a) for a in node.args])
    if isinstance(node, ast.Constant) and isinstance(node.value, (int, str)):
        return node.value
    if isinstance(node, (ast.List, ast.Tuple)):
        return [_eval(e) for e in node.elts]
    raise InvalidParameter(f"unsupported expression: {ast.dump(node)}")


def construct(expr: str) -> Group:
    """Evaluate a constructor expression like ``"direct_product(dihedral(8), cyclic(3))"``."""
    try:
        tree = ast.parse(expr.strip(), mode="eval")
    except SyntaxError as exc:
        raise InvalidParameter(f"cannot parse {expr!r}: {exc.msg}") from None
    G = _eval(tree.body)
    if not isinstance(G, Group):
        raise InvalidParameter(f"{expr!r} does not evaluate to a group")
    return G


def expected_order(name: str, *args: int) -> int:
    """Closed-form orders of the families, used as constructor oracles."""
    if name == "cyclic":
        return args[0]
    if name in ("dihedral", "generalized_quaternion"):
        return args[0]
    if name == "symmetric":
        return math.factorial(args[0])
    if name == "alternating":
        return max(1, math.factorial(args[0]) // 2)
    q = args[0]
    if name == "special_linear_2":
        return q * (q * q - 1)
    if name == "projective_special_linear_2":
        return q * (q * q - 1) // math.gcd(2, q - 1)
    raise KeyError(name)
