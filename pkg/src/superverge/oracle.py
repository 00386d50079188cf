"""Brute-force verification backend.

Everything here recomputes predictions of the orbit calculus from first
principles at tiny scale: exact cyclotomic linear algebra on orbit
modules, concrete pattern-group computations (commutators, conjugacy
classes, abelianizations), and irreducible-degree multisets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .action import (GroupElement, NilMatrix, ScaledIdempotent,
                     act_left_elem, act_right_elem)
from .errors import (BTooLarge, BudgetExceeded, HookConnected,
                     HookDisconnected, NotClosed, RankNotDivisible,
                     SizeMismatch, TheoremViolation)
from .field import FieldSpec
from .minimality import is_hook_disconnected, side_sets
from .orbits import Orbit, VergeData
from .rootcomb import PatternSet, Pos, is_closed

DEFAULT_GROUP_BUDGET = 1 << 20


# ---------------------------------------------------------------- cyclotomic

@dataclass(frozen=True)
class CycNumber:
    """An element of Z[zeta_p] in the power basis 1, z, ..., z^(p-2)."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        assert len(self.coeffs) == self.p - 1

    @classmethod
    def zero(cls, p: int) -> "CycNumber":
        return cls(p, (0,) * (p - 1))

    @classmethod
    def from_int(cls, p: int, value: int) -> "CycNumber":
        return cls(p, (value,) + (0,) * (p - 2))

    @classmethod
    def root(cls, p: int, exponent: int) -> "CycNumber":
        """zeta_p ** exponent."""
        e = exponent % p
        if e < p - 1:
            return cls(p, tuple(1 if i == e else 0 for i in range(p - 1)))
        return cls(p, (-1,) * (p - 1))

    def __add__(self, other: "CycNumber") -> "CycNumber":
        return CycNumber(self.p, tuple(a + b for a, b in
                                       zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "CycNumber":
        return CycNumber(self.p, tuple(-a for a in self.coeffs))

    def __sub__(self, other: "CycNumber") -> "CycNumber":
        return self + (-other)

    def __mul__(self, other: "CycNumber") -> "CycNumber":
        p = self.p
        folded = [0] * p  # exponents mod p
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        folded[(i + j) % p] += a * b
        top = folded[p - 1]
        return CycNumber(p, tuple(folded[i] - top for i in range(p - 1)))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def mult_matrix(self) -> list[list[int]]:
        """Integer matrix of multiplication by self on Z[zeta_p]."""
        cols = []
        for j in range(self.p - 1):
            cols.append((self * CycNumber.root(self.p, j)).coeffs)
        return [[cols[j][i] for j in range(self.p - 1)]
                for i in range(self.p - 1)]


def rational_rank(matrix: list[list[int]]) -> int:
    """Exact rank over Q by fraction-free-ish Gaussian elimination."""
    m = [[Fraction(x) for x in row] for row in matrix]
    rank = 0
    cols = len(m[0]) if m else 0
    row = 0
    for col in range(cols):
        piv = next((r for r in range(row, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        inv = 1 / m[row][col]
        m[row] = [x * inv for x in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col]:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[row])]
        row += 1
        rank += 1
        if row == len(m):
            break
    return rank


# ------------------------------------------------------------- orbit vectors

@dataclass
class OrbitVector:
    """A formal Z[zeta_p]-combination of the labels of a right orbit."""

    orbit: Orbit
    coords: dict  # NilMatrix -> CycNumber

    def __post_init__(self):
        self.coords = {lab: c for lab, c in self.coords.items()
                       if not c.is_zero()}
        for lab in self.coords:
            if lab not in self.orbit:
                raise SizeMismatch(f"label {lab.entries} outside the orbit")

    @classmethod
    def basis(cls, orbit: Orbit, label: NilMatrix) -> "OrbitVector":
        p = label.field.p
        return cls(orbit, {label: CycNumber.from_int(p, 1)})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OrbitVector):
            return NotImplemented
        return self.coords == other.coords

    def __add__(self, other: "OrbitVector") -> "OrbitVector":
        coords = dict(self.coords)
        for lab, c in other.coords.items():
            coords[lab] = coords.get(lab, CycNumber.zero(c.p)) + c
        return OrbitVector(self.orbit, coords)

    def scale(self, z: CycNumber) -> "OrbitVector":
        return OrbitVector(self.orbit,
                           {lab: z * c for lab, c in self.coords.items()})


def apply(vec: OrbitVector, x) -> OrbitVector:
    """Right action of a formal sum of (CycNumber, GroupElement) pairs,
    extended linearly from the monomial action on labels."""
    out = OrbitVector(vec.orbit, {})
    for z, u in x:
        for label, c in vec.coords.items():
            s = act_right_elem(ScaledIdempotent.of(label), u)
            zc = z * c * CycNumber.root(label.field.p, s.exponent)
            cur = out.coords.get(s.matrix)
            out.coords[s.matrix] = zc if cur is None else cur + zc
    return OrbitVector(vec.orbit, out.coords)


def apply_left(vec: OrbitVector, x) -> OrbitVector:
    out = OrbitVector(vec.orbit, {})
    for z, u in x:
        for label, c in vec.coords.items():
            s = act_left_elem(ScaledIdempotent.of(label), u)
            zc = z * c * CycNumber.root(label.field.p, s.exponent)
            cur = out.coords.get(s.matrix)
            out.coords[s.matrix] = zc if cur is None else cur + zc
    return OrbitVector(vec.orbit, out.coords)


def scaled_root_idempotent(F: FieldSpec, n: int, pos: Pos, beta: int):
    """q * f^beta at the root position, as a formal sum over x_pos(alpha)
    with Z[zeta_p] coefficients (scaling by q keeps everything integral)."""
    terms = []
    for alpha in F.elements():
        e = F.trace(F.mul(F.neg(beta), alpha))
        terms.append((CycNumber.root(F.p, e),
                      GroupElement.root(n, F, pos, alpha)))
    return terms


def rank(vectors) -> int:
    """Rank of orbit vectors over the fraction field of Z[zeta_p], via
    the companion-block embedding into an exact rational matrix."""
    vectors = list(vectors)
    if not vectors:
        return 0
    orbit = vectors[0].orbit
    members = list(orbit.matrices())
    p = orbit.base.field.p
    blocked = []
    for vec in vectors:
        if vec.orbit.members != orbit.members:
            raise SizeMismatch("vectors must share one orbit")
        block_rows = [[] for _ in range(p - 1)]
        for lab in members:
            z = vec.coords.get(lab, CycNumber.zero(p))
            mm = z.mult_matrix()
            for r in range(p - 1):
                block_rows[r].extend(mm[r])
        blocked.extend(block_rows)
    r = rational_rank(blocked)
    if r % (p - 1):
        raise RankNotDivisible(f"blocked rank {r} not divisible by {p - 1}")
    return r // (p - 1)


def hom_dimension(v: VergeData, cap: int = 1 << 22) -> int:
    """dim Hom(C O^r, C O^r) = |O^l ∩ O^r|, checked against q^b and the
    hook-meeting description."""
    from .orbits import orbit_intersection_size
    return orbit_intersection_size(v, cap)


# ------------------------------------------------------------ pattern groups

def _add_basis(F: FieldSpec) -> list[int]:
    return [F.p ** t for t in range(F.k)]


def pattern_group_elements(J: PatternSet, F: FieldSpec,
                           budget: int = DEFAULT_GROUP_BUDGET):
    """All elements of U_J, enumerated by free entries on J."""
    if not is_closed(J):
        raise NotClosed(f"{J.positions()} is not closed")
    pos = sorted(J.positions())
    if F.q ** len(pos) > budget:
        raise BudgetExceeded(f"|U_J| = q^{len(pos)} exceeds budget {budget}")
    for fill in product(F.elements(), repeat=len(pos)):
        yield GroupElement.of(J.n, F, list(zip(pos, fill)))


def _canonicalize(g: GroupElement, modulo: PatternSet | None) -> GroupElement:
    """Canonical coset representative of g modulo the normal pattern
    subgroup on `modulo`: clear those coordinates level by level."""
    if modulo is None:
        return g
    F = g.field
    pos = sorted(modulo.positions(), key=lambda t: (t[0] - t[1], t))
    for p in pos:
        c = g.get(p)
        if c:
            g = g * GroupElement.root(g.n, F, p, F.neg(c))
    return g


def _commutator(g: GroupElement, h: GroupElement) -> GroupElement:
    return g * h * g.inverse() * h.inverse()


def _mulclose(gens, mul, budget: int):
    els = set(gens)
    frontier = list(els)
    while frontier:
        nxt = []
        for a in gens:
            for b in frontier:
                c = mul(a, b)
                if c not in els:
                    if len(els) >= budget:
                        raise BudgetExceeded("group closure exceeds budget")
                    els.add(c)
                    nxt.append(c)
        frontier = nxt
    return els


def pattern_group_stats(J: PatternSet, F: FieldSpec,
                        modulo: PatternSet | None = None,
                        budget: int = DEFAULT_GROUP_BUDGET) -> dict:
    """Exact group computation on U_J (or U_J / U_modulo): order, derived
    subgroup support, abelianization order, conjugacy class count."""
    if modulo is not None:
        if not is_closed(modulo):
            raise NotClosed("modulo set must be closed")
        if modulo.mask & ~J.mask:
            raise NotClosed("modulo set must lie inside J")

    def mul(g, h):
        return _canonicalize(g * h, modulo)

    def inv(g):
        return _canonicalize(g.inverse(), modulo)

    gens = [_canonicalize(GroupElement.root(J.n, F, p, a), modulo)
            for p in sorted((J - modulo).positions() if modulo else J.positions())
            for a in _add_basis(F)]
    identity = GroupElement.identity(J.n, F)
    elements = _mulclose(gens + [identity], mul, budget)
    order = len(elements)

    # derived subgroup: normal closure of generator commutators
    seed = set()
    for a in gens:
        for b in gens:
            seed.add(_canonicalize(_commutator(a, b), modulo))
    closed_set = set(seed)
    frontier = list(seed)
    while frontier:
        nxt = []
        for s in frontier:
            for g in gens:
                t = _canonicalize(g * s * g.inverse(), modulo)
                if t not in closed_set:
                    closed_set.add(t)
                    nxt.append(t)
        frontier = nxt
    derived = _mulclose(closed_set | {identity}, mul, budget)

    support = set()
    for g in derived:
        support |= {p for p, _ in g.entries}
    derived_support = PatternSet.of(J.n, support)

    # conjugacy classes by orbit partition under conjugation
    seen = set()
    classes = 0
    for g in elements:
        if g in seen:
            continue
        classes += 1
        cls_frontier = [g]
        seen.add(g)
        while cls_frontier:
            nxt = []
            for x in cls_frontier:
                for h in gens:
                    y = _canonicalize(h * x * h.inverse(), modulo)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            cls_frontier = nxt
        # conjugation by generators suffices: they generate the group

    return {"order": order,
            "derived_order": len(derived),
            "derived_support": derived_support,
            "abelianization_order": order // len(derived),
            "class_count": classes}


# -------------------------------------------------------- degree accounting

def degree_multiset(v: VergeData,
                    budget: int = DEFAULT_GROUP_BUDGET) -> dict[int, int]:
    """Irreducible degree multiset {m: n_m} of the endomorphism group H,
    i.e. constituent dimensions q^(a-b+m) with multiplicities q^m."""
    P = v.P
    if not is_hook_disconnected(P):
        raise HookConnected(f"P = {P.conditions} is hook connected")
    from .rootcomb import b_count
    b = b_count(P)
    if b > 5:
        raise BTooLarge("b > 5: degree system is underdetermined")
    F = v.field
    q = F.q
    ss = side_sets(P)
    stats = pattern_group_stats(ss.Lhat_minus, F, modulo=ss.Lo, budget=budget)
    if stats["order"] != q ** b:
        raise TheoremViolation("|H| != q^b")
    n0 = stats["abelianization_order"]
    k = stats["class_count"]
    # n0 + n1 q^2 + n2 q^4 = q^b and n0 + n1 + n2 = k, with m <= 2 for b <= 5
    rem = q ** b - n0
    cnt = k - n0
    num = rem - cnt * q * q
    den = q ** 4 - q * q
    n2, check = divmod(num, den) if num else (0, 0)
    if check:
        raise TheoremViolation("degree system has no integer solution")
    n1 = cnt - n2
    if n1 < 0 or n2 < 0 or n0 + n1 * q * q + n2 * q ** 4 != q ** b:
        raise TheoremViolation("degree system solution inconsistent")
    out = {0: n0}
    if n1:
        out[1] = n1
    if n2:
        out[2] = n2
    return out


def no_linear_character_check(v: VergeData,
                              budget: int = DEFAULT_GROUP_BUDGET) -> bool:
    """For hook-connected P: certify that theta_A is nontrivial on the
    derived subgroup of U_Lhat, so no minimal constituents exist."""
    P = v.P
    if is_hook_disconnected(P):
        raise HookDisconnected(f"P = {P.conditions} is hook disconnected")
    ss = side_sets(P)
    stats = pattern_group_stats(ss.Lhat, v.field, budget=budget)
    return bool(stats["derived_support"].mask & P.pattern().mask)


def projective_stabilizer(A: NilMatrix,
                          budget: int = DEFAULT_GROUP_BUDGET) -> set[GroupElement]:
    """{u in U : [A]u is a scalar multiple of [A]}, by exhaustion."""
    full = PatternSet.full(A.n)
    out = set()
    for u in pattern_group_elements(full, A.field, budget):
        if act_right_elem(ScaledIdempotent.of(A), u).matrix == A:
            out.add(u)
    return out
