"""Orbit enumeration and template/verge classification.

Right orbits are generated by truncated column operations, left orbits
by truncated row operations.  For a verge base the BFS result must match
the combinatorial description (arbitrary fillings of the hook arms
resp. legs), of size q^a.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from . import kernel
from .action import NilMatrix
from .errors import (InputError, MemoryBudgetExceeded, MultipleTemplates,
                     NoTemplate, NotAVerge, TheoremViolation)
from .field import FieldSpec
from .rootcomb import (MainConditionSet, Pos, arm_total, b_count, hook,
                       hook_intersections, tri_positions)

DEFAULT_ORBIT_CAP = 1 << 22


@dataclass(frozen=True)
class VergeData:
    """A set of main conditions together with its nonzero values."""

    n: int
    field: FieldSpec
    values: tuple[tuple[Pos, int], ...]

    @classmethod
    def of(cls, n: int, field: FieldSpec, values) -> "VergeData":
        if hasattr(values, "items"):
            values = values.items()
        vals = tuple(sorted((tuple(pos), code) for pos, code in values))
        for pos, code in vals:
            if not (1 <= code < field.q):
                raise NotAVerge(f"verge value at {pos} must be nonzero")
        MainConditionSet.of(n, [pos for pos, _ in vals])  # validates shape
        return cls(n, field, vals)

    @classmethod
    def from_matrix(cls, A: NilMatrix) -> "VergeData":
        res = classify(A)
        if not res.is_verge:
            raise NotAVerge(f"{A.entries} is not a verge")
        return cls.of(A.n, A.field, A.entries)

    @property
    def P(self) -> MainConditionSet:
        return MainConditionSet.of(self.n, [pos for pos, _ in self.values])

    def value(self, pos: Pos) -> int:
        return dict(self.values).get(pos, 0)

    def matrix(self) -> NilMatrix:
        return NilMatrix.of(self.n, self.field, self.values)

    def a(self) -> int:
        return arm_total(self.P)

    def b(self) -> int:
        return b_count(self.P)


@dataclass(frozen=True)
class ClassifyResult:
    is_verge: bool
    is_template: bool
    main: tuple[Pos, ...]
    suppl: tuple[Pos, ...]

    def to_json(self) -> dict:
        return {"is_verge": self.is_verge, "is_template": self.is_template,
                "main": [list(p) for p in self.main],
                "suppl": [list(p) for p in self.suppl]}


def main_conditions(A: NilMatrix) -> tuple[Pos, ...]:
    """Lowest nonzero position in each nonzero column."""
    lowest: dict[int, int] = {}
    for (i, j), _ in A.entries:
        lowest[j] = max(lowest.get(j, 0), i)
    return tuple(sorted((i, j) for j, i in lowest.items()))


def suppl_positions(n: int, main: tuple[Pos, ...]) -> tuple[Pos, ...]:
    """Positions strictly above main conditions that are not hook meetings."""
    legs = set()
    for pos in main:
        legs |= hook(n, pos)[1]
    try:
        meets = {m for _, m in hook_intersections(MainConditionSet.of(n, main))}
    except InputError:
        meets = set()
    return tuple(sorted(legs - meets))


def classify(A: NilMatrix) -> ClassifyResult:
    """Template/verge classification of an idempotent label."""
    main = main_conditions(A)
    arm_pos = set()
    for pos in main:
        arm_pos |= hook(A.n, pos)[0]
    support = set(A.support())
    is_template = not (support & arm_pos)
    rows = [i for i, _ in support]
    cols = [j for _, j in support]
    is_verge = len(set(rows)) == len(rows) and len(set(cols)) == len(cols)
    return ClassifyResult(is_verge=is_verge, is_template=is_template,
                          main=main, suppl=suppl_positions(A.n, main))


@dataclass(frozen=True)
class Orbit:
    side: str
    base: NilMatrix
    members: frozenset  # dense byte vectors

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, A: NilMatrix) -> bool:
        return A.to_vec() in self.members

    def matrices(self):
        n, F = self.base.n, self.base.field
        for vec in sorted(self.members):
            yield NilMatrix.from_vec(n, F, vec)


def _additive_generators(F: FieldSpec) -> list[int]:
    # base-p digit codes: {p^t} generates (F_q, +)
    return [F.p ** t for t in range(F.k)]


def orbit_bfs(A: NilMatrix, side: str = "right",
              cap: int = DEFAULT_ORBIT_CAP) -> Orbit:
    """Breadth-first closure of {A} under all truncated root operations."""
    if side not in ("right", "left"):
        raise InputError(f"side must be 'right' or 'left', got {side!r}")
    F, n = A.field, A.n
    mul = bytes(F.mul_table)
    sub = bytes(F.add_table[x * F.q + F.neg_table[y]]
                for x in range(F.q) for y in range(F.q))
    gens = [(i, j, alpha) for (i, j) in tri_positions(n)
            for alpha in _additive_generators(F)]
    try:
        members = kernel.orbit_closure(A.to_vec(), n, F.q, side,
                                       mul, sub, gens, cap)
    except MemoryError:
        raise MemoryBudgetExceeded(
            f"orbit of {A.entries} exceeds cap {cap}") from None
    return Orbit(side=side, base=A, members=frozenset(members))


def template_of_orbit(o: Orbit) -> NilMatrix:
    """The unique template in a right orbit; two hits or none means
    an implementation bug."""
    if o.side != "right":
        raise InputError("templates live in right orbits")
    found = None
    for B in o.matrices():
        if classify(B).is_template:
            if found is not None:
                raise MultipleTemplates(f"{found.entries} and {B.entries}")
            found = B
    if found is None:
        raise NoTemplate(f"orbit of {o.base.entries} has no template")
    return found


def templates_of_verge(v: VergeData) -> set[NilMatrix]:
    """All templates over v: free values on the hook legs minus the hook
    meetings; there are q^(a-b) of them."""
    n, F = v.n, v.field
    legs = set()
    for pos in v.P:
        legs |= hook(n, pos)[1]
    meets = {m for _, m in hook_intersections(v.P)}
    free = sorted(legs - meets)
    base = dict(v.values)
    out = set()
    for fill in product(F.elements(), repeat=len(free)):
        d = dict(base)
        for pos, code in zip(free, fill):
            if code:
                d[pos] = code
        out.add(NilMatrix.of(n, F, d))
    if len(out) != F.q ** (v.a() - v.b()):
        raise TheoremViolation("template count != q^(a-b)")
    return out


def orbit_intersection_size(v: VergeData, cap: int = DEFAULT_ORBIT_CAP) -> int:
    """|right orbit ∩ left orbit| of a verge, cross-checked against q^b
    and against the free-fill description of the hook meetings."""
    A = v.matrix()
    right = orbit_bfs(A, "right", cap)
    left = orbit_bfs(A, "left", cap)
    size = len(right.members & left.members)
    if size != v.field.q ** v.b():
        raise TheoremViolation(
            f"|O^l ∩ O^r| = {size} != q^b for verge {v.values}")
    return size


def regular_checksum(n: int, F: FieldSpec) -> bool:
    """Sum over all main-condition sets of (q-1)^|P| q^(2a-b) must equal
    |U| = q^(n(n-1)/2)."""
    from .census import enumerate_main_sets
    q = F.q
    total = 0
    for P in enumerate_main_sets(n):
        total += (q - 1) ** len(P) * q ** (2 * arm_total(P) - b_count(P))
    return total == q ** (n * (n - 1) // 2)
