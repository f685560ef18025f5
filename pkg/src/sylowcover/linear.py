"""Matrix groups over small finite fields and their family deciders.

GL(n,q) and SL(n,q) are enumerated from unipotent generators (plus a scalar
stretch for GL); PSL(2,q) is realized as the faithful permutation action of
SL(2,q) on the q+1 points of the projective line.  Enumerated orders are
always verified against the closed-form order formulas.

The module also houses the closed-form redundancy deciders for the SL/PSL
and GL families and the structural checks used to cross-validate them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Optional

from .errors import ClosureBudgetExceeded, DomainError, HypothesisFailed
from .fields import Field, make_field
from .groups import FiniteGroup, Subgroup, enumerate_group, resolve_cap
from .numtheory import is_prime, p_part, prime_power_decomposition
from .perm import Permutation


class SquareMatrix:
    """An invertible n-by-n matrix over GF(q), entries packed row-major in bytes."""

    __slots__ = ("field", "dim", "key")

    def __init__(self, field_: Field, entries, _key: Optional[bytes] = None):
        self.field = field_
        if _key is not None:
            self.dim = math.isqrt(len(_key))
            self.key = _key
            return
        flat = _flatten(entries)
        dim = math.isqrt(len(flat))
        if dim * dim != len(flat):
            raise DomainError(f"{len(flat)} entries do not form a square matrix")
        if any(not 0 <= e < field_.q for e in flat):
            raise DomainError(f"entries must be field encodings in [0, {field_.q})")
        self.dim = dim
        self.key = bytes(flat)
        if self.det() == 0:
            raise DomainError("matrix is singular")

    @property
    def entries(self) -> tuple[int, ...]:
        return tuple(self.key)

    def rows(self) -> list[list[int]]:
        n = self.dim
        return [list(self.key[i * n:(i + 1) * n]) for i in range(n)]

    @classmethod
    def identity(cls, field_: Field, dim: int) -> "SquareMatrix":
        entries = [[1 if i == j else 0 for j in range(dim)] for i in range(dim)]
        return cls(field_, entries)

    def __mul__(self, other: "SquareMatrix") -> "SquareMatrix":
        ops = self.group_ops()
        if not ops.same_shape(other.group_ops()):
            raise DomainError("cannot multiply matrices of different shapes/fields")
        return SquareMatrix(self.field, None, _key=ops.mul(self.key, other.key))

    def inverse(self) -> "SquareMatrix":
        return SquareMatrix(self.field, None, _key=self.group_ops().inv(self.key))

    def det(self) -> int:
        return _det_key(self.key, self.dim, self.field)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SquareMatrix)
            and other.field.q == self.field.q
            and other.key == self.key
        )

    def __hash__(self) -> int:
        return hash((self.field.q, self.key))

    def __repr__(self) -> str:
        return f"SquareMatrix({self.render()})"

    def render(self) -> str:
        return _render_key(self.key, self.dim, self.field)

    def group_ops(self) -> "MatrixOps":
        return MatrixOps.for_shape(self.field, self.dim)


def _flatten(entries) -> list[int]:
    if entries and isinstance(entries[0], (list, tuple)):
        return [int(e) for row in entries for e in row]
    return [int(e) for e in entries]


def _det_key(key: bytes, n: int, f: Field) -> int:
    rows = [list(key[i * n:(i + 1) * n]) for i in range(n)]
    det = 1
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col]), None)
        if pivot is None:
            return 0
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = f.neg(det)
        det = f.mul(det, rows[col][col])
        inv_p = f.inv(rows[col][col])
        for r in range(col + 1, n):
            factor = f.mul(rows[r][col], inv_p)
            if factor:
                for c in range(col, n):
                    rows[r][c] = f.sub(rows[r][c], f.mul(factor, rows[col][c]))
    return det


def _render_key(key: bytes, n: int, f: Field) -> str:
    rows = ["[" + ",".join(str(e) for e in key[i * n:(i + 1) * n]) + "]" for i in range(n)]
    return "[" + ",".join(rows) + f"] over GF({f.q})"


class MatrixOps:
    """Key-level matrix arithmetic for the group engine."""

    _instances: dict[tuple[int, int], "MatrixOps"] = {}

    def __init__(self, field_: Field, dim: int):
        self.field = field_
        self.dim = dim

    @classmethod
    def for_shape(cls, field_: Field, dim: int) -> "MatrixOps":
        shape = (field_.q, dim)
        inst = cls._instances.get(shape)
        if inst is None:
            inst = cls(field_, dim)
            cls._instances[shape] = inst
        return inst

    def identity_key(self) -> bytes:
        n = self.dim
        return bytes(1 if i % (n + 1) == 0 else 0 for i in range(n * n))

    def mul(self, a: bytes, b: bytes) -> bytes:
        n = self.dim
        add = self.field.add_table
        mul = self.field.mul_table
        out = bytearray(n * n)
        for i in range(n):
            row = a[i * n:(i + 1) * n]
            base = i * n
            for j in range(n):
                acc = 0
                for k in range(n):
                    acc = add[acc][mul[row[k]][b[k * n + j]]]
                out[base + j] = acc
        return bytes(out)

    def inv(self, a: bytes) -> bytes:
        n = self.dim
        f = self.field
        rows = [list(a[i * n:(i + 1) * n]) + [1 if j == i else 0 for j in range(n)] for i in range(n)]
        for col in range(n):
            pivot = next((r for r in range(col, n) if rows[r][col]), None)
            if pivot is None:
                raise DomainError("matrix is singular")
            rows[col], rows[pivot] = rows[pivot], rows[col]
            inv_p = f.inv(rows[col][col])
            rows[col] = [f.mul(x, inv_p) for x in rows[col]]
            for r in range(n):
                if r != col and rows[r][col]:
                    factor = rows[r][col]
                    rows[r] = [f.sub(x, f.mul(factor, y)) for x, y in zip(rows[r], rows[col])]
        out = bytearray(n * n)
        for i in range(n):
            out[i * n:(i + 1) * n] = bytes(rows[i][n:])
        return bytes(out)

    def wrap(self, key: bytes) -> SquareMatrix:
        return SquareMatrix(self.field, None, _key=key)

    def unwrap(self, element: object) -> bytes:
        if (
            not isinstance(element, SquareMatrix)
            or element.dim != self.dim
            or element.field.q != self.field.q
        ):
            raise DomainError(f"expected a {self.dim}x{self.dim} matrix over GF({self.field.q})")
        return element.key

    def render(self, key: bytes) -> str:
        return _render_key(key, self.dim, self.field)

    def describe(self) -> str:
        return f"matrix group of dimension {self.dim} over GF({self.field.q})"

    def same_shape(self, other: object) -> bool:
        return (
            isinstance(other, MatrixOps)
            and other.dim == self.dim
            and other.field.q == self.field.q
        )


@dataclass
class FamilyVerdict:
    """Closed-form decision for a classical family, with the clause that fired."""

    family: str
    params: dict[str, Any]
    redundant: bool
    reason: str


def gl_order(n: int, q: int) -> int:
    order = 1
    qn = q**n
    for i in range(n):
        order *= qn - q**i
    return order


def sl_order(n: int, q: int) -> int:
    return gl_order(n, q) // (q - 1)


def psl_order(n: int, q: int) -> int:
    return sl_order(n, q) // math.gcd(n, q - 1)


def _transvection(f: Field, n: int, i: int, j: int, value: int) -> SquareMatrix:
    entries = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    entries[i][j] = value
    return SquareMatrix(f, entries)


def _sl_generators(f: Field, n: int) -> list[SquareMatrix]:
    """Adjacent-position transvections with coefficients spanning GF(q) over its prime field."""
    if f.k == 1:
        basis = [1]
    else:
        # a multiplicative generator has degree k, so its first k powers form a basis
        basis = [f.pow(f.generator, m) for m in range(f.k)]
    gens = []
    for i in range(n - 1):
        for c in basis:
            gens.append(_transvection(f, n, i, i + 1, c))
            gens.append(_transvection(f, n, i + 1, i, c))
    return gens


def _scalar_stretch(f: Field, n: int) -> SquareMatrix:
    entries = [[1 if r == c else 0 for c in range(n)] for r in range(n)]
    entries[0][0] = f.generator
    return SquareMatrix(f, entries)


def _projective_points(f: Field) -> list[tuple[int, int]]:
    """The q+1 points of the projective line: [x:1] for x in GF(q), then [1:0]."""
    return [(x, 1) for x in f.elements()] + [(1, 0)]


def _projective_action(gen: SquareMatrix, points: list[tuple[int, int]], f: Field) -> Permutation:
    a, b, c, d = gen.entries
    index = {pt: i for i, pt in enumerate(points)}
    images = []
    for x, y in points:
        nx = f.add(f.mul(a, x), f.mul(b, y))
        ny = f.add(f.mul(c, x), f.mul(d, y))
        if ny:
            pt = (f.mul(nx, f.inv(ny)), 1)
        else:
            pt = (1, 0)
        images.append(index[pt])
    return Permutation(images)


def build_group(family: str, n: int, q: int, cap: Optional[int] = None) -> FiniteGroup:
    """Enumerate GL(n,q), SL(n,q), or PSL(2,q); orders verified against formulas."""
    f = make_field(q)
    if family == "GL":
        expected = gl_order(n, q)
        _check_cap(expected, cap)
        gens = _sl_generators(f, n)
        if q > 2:
            gens.append(_scalar_stretch(f, n))
        group = enumerate_group(gens, name=f"GL({n},{q})", cap=cap)
    elif family == "SL":
        expected = sl_order(n, q)
        _check_cap(expected, cap)
        group = enumerate_group(_sl_generators(f, n), name=f"SL({n},{q})", cap=cap)
    elif family == "PSL":
        if n != 2:
            raise DomainError("PSL is only built for dimension 2")
        expected = psl_order(2, q)
        _check_cap(expected, cap)
        points = _projective_points(f)
        gens = [_projective_action(m, points, f) for m in _sl_generators(f, 2)]
        group = enumerate_group(gens, name=f"PSL(2,{q})", cap=cap)
    else:
        raise DomainError(f"unknown family {family!r}")
    if group.order != expected:
        raise RuntimeError(
            f"{group.describe()} enumerated to order {group.order}, expected {expected}"
        )
    return group


def _check_cap(expected: int, cap: Optional[int]) -> None:
    limit = resolve_cap(cap)
    if expected > limit:
        raise ClosureBudgetExceeded(limit)


def is_two_power_neighbor(q: int) -> Optional[str]:
    """Classify q as 2^k, 2^k+1, or 2^k-1 (smallest matching form), else None."""
    if q < 2:
        raise DomainError(f"q must be at least 2, got {q}")
    if q & (q - 1) == 0:
        return f"2^{q.bit_length() - 1}"
    if (q - 1) & (q - 2) == 0:
        return f"2^{(q - 1).bit_length() - 1}+1"
    if (q + 1) & q == 0:
        return f"2^{(q + 1).bit_length() - 1}-1"
    return None


def theorem_D_decide(family: str, q: int, p: int) -> FamilyVerdict:
    """Closed-form redundancy decision for SL(2,q) and PSL(2,q).

    Redundant exactly when p = 2, q is odd, and q is not adjacent to (or
    itself) a power of two.
    """
    if family not in ("SL2", "PSL2"):
        raise DomainError(f"family must be SL2 or PSL2, got {family!r}")
    char, _ = prime_power_decomposition(q)
    if not is_prime(p):
        raise DomainError(f"p must be prime, got {p}")
    params = {"q": q, "p": p}
    if p == char:
        return FamilyVerdict(family, params, False, "characteristic p: Sylow subgroups intersect trivially")
    if p != 2:
        return FamilyVerdict(family, params, False, "odd p away from the characteristic: cyclic Sylow subgroups")
    neighbor = is_two_power_neighbor(q)
    if neighbor is not None:
        return FamilyVerdict(family, params, False, f"q = {neighbor}: an element of maximal 2-power order is a unique-Sylow witness")
    return FamilyVerdict(family, params, True, "p = 2 and q not of the form 2^k, 2^k+1, 2^k-1")


def theorem_51_decide(n: int, q: int, p: int) -> FamilyVerdict:
    """Closed-form redundancy decision for GL(n,q) when p exactly divides q-1.

    Requires p odd, p | q-1, p^2 not | q-1, and 1 < n <= p; then GL(n,q) is
    redundant exactly for n = p.
    """
    if not is_prime(p) or p == 2:
        raise HypothesisFailed(f"p must be an odd prime, got {p}")
    prime_power_decomposition(q)
    if (q - 1) % p != 0:
        raise HypothesisFailed(f"p = {p} does not divide q-1 = {q - 1}")
    if (q - 1) % (p * p) == 0:
        raise HypothesisFailed(f"p^2 = {p * p} divides q-1 = {q - 1}")
    if not 1 < n <= p:
        raise HypothesisFailed(f"n must satisfy 1 < n <= p, got n = {n}")
    params = {"n": n, "q": q, "p": p}
    if n == p:
        return FamilyVerdict("GL", params, True, "n = p: every p-element fixes more than one frame of eigen-lines")
    return FamilyVerdict("GL", params, False, "n < p: a p-element with distinct eigenvalues fixes a unique frame")


def sl2_structure_checks(q: int, cap: Optional[int] = None) -> dict[str, Any]:
    """Structural facts about the Sylow 2-subgroups of SL(2,q) and PSL(2,q), q odd.

    Computes normalizer indices, Sylow counts, and (when q-1, q, q+1 are all
    off the powers of two) the centralizer-order divisibility of 2-elements.
    For q > 13 the normalizer index must be 3 when q = +-3 (mod 8) and 1
    otherwise, in both groups, and the two Sylow counts must agree; those
    facts are enforced, not just reported.
    """
    from .sylow import enumerate_sylows

    char, _ = prime_power_decomposition(q)
    if char == 2:
        raise DomainError("structure checks require odd q")
    sl = build_group("SL", 2, q, cap=cap)
    psl = build_group("PSL", 2, q, cap=cap)
    report: dict[str, Any] = {"q": q}
    sl_sys = enumerate_sylows(sl, 2)
    psl_sys = enumerate_sylows(psl, 2)
    report["sl_order"] = sl.order
    report["psl_order"] = psl.order
    report["sl_sylow_order"] = sl_sys.sylow_order
    report["psl_sylow_order"] = psl_sys.sylow_order
    report["sl_normalizer_index"] = sl_sys.normalizer_order // sl_sys.sylow_order
    report["psl_normalizer_index"] = psl_sys.normalizer_order // psl_sys.sylow_order
    report["nu2_sl"] = sl_sys.nu
    report["nu2_psl"] = psl_sys.nu
    if q > 13:
        expected_index = 3 if q % 8 in (3, 5) else 1
        if report["sl_normalizer_index"] != expected_index:
            raise RuntimeError(
                f"SL(2,{q}) normalizer index {report['sl_normalizer_index']}, expected {expected_index}"
            )
        if report["psl_normalizer_index"] != expected_index:
            raise RuntimeError(
                f"PSL(2,{q}) normalizer index {report['psl_normalizer_index']}, expected {expected_index}"
            )
        if sl_sys.nu != psl_sys.nu:
            raise RuntimeError(f"nu_2 differs between SL(2,{q}) and PSL(2,{q})")
    report["centralizer_divisibility_checked"] = False
    if is_two_power_neighbor(q) is None:
        for x in sl.p_elements(2):
            c_order = sl.centralizer(x).order
            if c_order % (q - 1) != 0 and c_order % (q + 1) != 0:
                raise RuntimeError(
                    f"2-element {sl.render(x)} of SL(2,{q}) has centralizer order {c_order}, "
                    f"divisible by neither {q - 1} nor {q + 1}"
                )
        report["centralizer_divisibility_checked"] = True
    return report


def wreath_cpcp(p: int, cap: Optional[int] = None) -> FiniteGroup:
    """C_p wr C_p as a permutation group on p^2 points."""
    degree = p * p
    base_cycle = Permutation.from_cycles(degree, [tuple(range(1, p + 1))])
    block_shift = Permutation([(i + p) % degree for i in range(degree)])
    group = enumerate_group([base_cycle, block_shift], name=f"C{p} wr C{p}", cap=cap)
    if group.order != p ** (p + 1):
        raise RuntimeError(f"wreath product enumerated to order {group.order}, expected {p**(p+1)}")
    return group


def _frattini_subgroup(group: FiniteGroup, sub: Subgroup, p: int) -> Subgroup:
    """Frattini subgroup of a p-subgroup: generated by commutators and p-th powers."""
    seed = {group.identity}
    for x in sub.indices:
        seed.add(group.power(x, p))
    for x in sub.indices:
        xinv = group.inv(x)
        for y in sub.indices:
            seed.add(group.mul(group.mul(group.mul(xinv, group.inv(y)), x), y))
    return group.subgroup_closure(seed)


def maximal_subgroups_of_p_group(group: FiniteGroup, sub: Subgroup, p: int) -> list[Subgroup]:
    """All index-p subgroups of a p-subgroup with Frattini quotient of rank 2.

    Maximal subgroups of a p-group are the preimages of the index-p subgroups
    of its (elementary abelian) Frattini quotient; for rank 2 each of the p+1
    of them is generated by the Frattini subgroup and one coset
    representative.
    """
    phi = _frattini_subgroup(group, sub, p)
    if sub.order != phi.order * p * p:
        raise DomainError("only p-groups with a rank-2 Frattini quotient are supported")
    phi_set = phi.member_set()
    maximal: set[frozenset[int]] = set()
    for x in sub.indices:
        if x in phi_set:
            continue
        candidate = group.subgroup_closure(list(phi.indices) + [x])
        maximal.add(candidate.member_set())
    if len(maximal) != p + 1:
        raise RuntimeError(f"found {len(maximal)} maximal subgroups, expected {p + 1}")
    return [Subgroup(group, members) for members in sorted(maximal, key=sorted)]


def gl_wreath_checks(p: int, q: int, cap: Optional[int] = None, group: Optional[FiniteGroup] = None) -> dict[str, Any]:
    """Invariants of the Sylow p-subgroup of GL(p,q) when p exactly divides q-1.

    Verifies order p^(p+1), exponent p^2, and a unique abelian maximal
    subgroup.  When GL(p,q) is beyond the enumeration cap the same invariants
    are checked on C_p wr C_p built directly.  A prebuilt GL(p,q) may be
    passed to reuse its cached Sylow data.
    """
    if not is_prime(p) or p == 2:
        raise HypothesisFailed(f"p must be an odd prime, got {p}")
    if (q - 1) % p != 0 or (q - 1) % (p * p) == 0:
        raise HypothesisFailed(f"p = {p} must exactly divide q-1 = {q - 1}")
    limit = resolve_cap(cap)
    report: dict[str, Any] = {"p": p, "q": q}
    if group is not None or gl_order(p, q) <= limit:
        from .sylow import find_sylow

        if group is None:
            group = build_group("GL", p, q, cap=cap)
        sylow = find_sylow(group, p)
        report["group"] = group.describe()
    else:
        group = wreath_cpcp(p, cap=cap)
        sylow = group.full_subgroup()
        report["group"] = group.describe()
    report["sylow_order"] = sylow.order
    if sylow.order != p ** (p + 1):
        raise RuntimeError(f"Sylow order {sylow.order}, expected p^(p+1) = {p**(p+1)}")
    report["exponent"] = sylow.exponent()
    if report["exponent"] != p * p:
        raise RuntimeError(f"Sylow exponent {report['exponent']}, expected p^2 = {p * p}")
    maximal = maximal_subgroups_of_p_group(group, sylow, p)
    report["maximal_subgroup_count"] = len(maximal)
    abelian = [m for m in maximal if m.is_abelian()]
    report["abelian_maximal_count"] = len(abelian)
    if len(abelian) != 1:
        raise RuntimeError(f"expected exactly one abelian maximal subgroup, found {len(abelian)}")
    return report
