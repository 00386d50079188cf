"""Combinatorics of the positive roots (i,j), 1 <= j < i <= n.

Positions are 1-based (row, column) tuples in the strictly lower
triangle.  Pattern sets are stored as bitmasks over a fixed row-major
linearization of the triangle, so union/intersection/closure scans are
cheap integer operations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import InputError

Pos = tuple[int, int]


def check_pos(n: int, pos: Pos) -> None:
    i, j = pos
    if not (1 <= j < i <= n):
        raise InputError(f"{pos} is not in the strictly lower triangle of size {n}")


def tri_index(pos: Pos) -> int:
    """Row-major index of a lower-triangle position, independent of n."""
    i, j = pos
    return (i - 1) * (i - 2) // 2 + (j - 1)


@lru_cache(maxsize=None)
def tri_positions(n: int) -> tuple[Pos, ...]:
    return tuple((i, j) for i in range(2, n + 1) for j in range(1, i))


def tri_size(n: int) -> int:
    return n * (n - 1) // 2


@dataclass(frozen=True)
class PatternSet:
    """A subset of the lower triangle of size n, bitmask-backed."""

    n: int
    mask: int = 0

    @classmethod
    def of(cls, n: int, positions) -> "PatternSet":
        mask = 0
        for pos in positions:
            check_pos(n, pos)
            mask |= 1 << tri_index(pos)
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> "PatternSet":
        return cls(n, (1 << tri_size(n)) - 1)

    def positions(self) -> tuple[Pos, ...]:
        return tuple(p for p in tri_positions(self.n)
                     if self.mask >> tri_index(p) & 1)

    def __contains__(self, pos: Pos) -> bool:
        i, j = pos
        if not (1 <= j < i <= self.n):
            return False
        return bool(self.mask >> tri_index(pos) & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self):
        return iter(self.positions())

    def __or__(self, other: "PatternSet") -> "PatternSet":
        assert self.n == other.n
        return PatternSet(self.n, self.mask | other.mask)

    def __and__(self, other: "PatternSet") -> "PatternSet":
        assert self.n == other.n
        return PatternSet(self.n, self.mask & other.mask)

    def __sub__(self, other: "PatternSet") -> "PatternSet":
        assert self.n == other.n
        return PatternSet(self.n, self.mask & ~other.mask)

    def to_json(self) -> list[list[int]]:
        return [list(p) for p in self.positions()]


def is_closed(s: PatternSet) -> bool:
    """True iff (i,j),(j,k) in s implies (i,k) in s."""
    pos = s.positions()
    for i, j in pos:
        for jj, k in pos:
            if jj == j and (i, k) not in s and k < i:
                return False
    return True


def commutator_positions(s: PatternSet) -> PatternSet:
    """D(J) = {(i,k) : (i,j),(j,k) in J}, the one-step commutator support."""
    out = 0
    pos = s.positions()
    for i, j in pos:
        for jj, k in pos:
            if jj == j:
                out |= 1 << tri_index((i, k))
    return PatternSet(s.n, out)


@dataclass(frozen=True)
class MainConditionSet:
    """Positions with pairwise distinct rows and pairwise distinct columns."""

    n: int
    conditions: tuple[Pos, ...]

    def __post_init__(self):
        for pos in self.conditions:
            check_pos(self.n, pos)
        rows = [i for i, _ in self.conditions]
        cols = [j for _, j in self.conditions]
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise InputError(f"rows/columns not pairwise distinct: {self.conditions}")
        object.__setattr__(self, "conditions", tuple(sorted(self.conditions)))

    @classmethod
    def of(cls, n: int, positions) -> "MainConditionSet":
        return cls(n, tuple(positions))

    def __iter__(self):
        return iter(self.conditions)

    def __len__(self) -> int:
        return len(self.conditions)

    def pattern(self) -> PatternSet:
        return PatternSet.of(self.n, self.conditions)


def hook(n: int, pos: Pos):
    """Arm (same row, right of pos) and leg (same column, above pos)."""
    check_pos(n, pos)
    i, j = pos
    arm = {(i, k) for k in range(j + 1, i)}
    leg = {(l, j) for l in range(j + 1, i)}
    return arm, leg


def hook_meeting(p1: Pos, p2: Pos) -> Pos | None:
    """The single meeting position of two hooks inside the triangle, if any.

    Hooks at (i,j), (r,s) meet in the triangle iff j < s < i < r after
    ordering by column; the meeting is then (i,s).  Contact at the
    diagonal (j = r or s = i on the nose) does not count.
    """
    (i, j), (r, s) = sorted([p1, p2], key=lambda t: t[1])
    if j < s < i < r:
        return (i, s)
    return None


def hook_intersections(P: MainConditionSet):
    """All meeting positions of pairs of hooks centered at P; |result| = b."""
    out = []
    for p1, p2 in combinations(P.conditions, 2):
        m = hook_meeting(p1, p2)
        if m is not None:
            out.append((tuple(sorted([p1, p2], key=lambda t: t[1])), m))
    return out


def b_count(P: MainConditionSet) -> int:
    return len(hook_intersections(P))


def arm_total(P: MainConditionSet) -> int:
    """a = sum of arm lengths i - j - 1 over the main conditions."""
    return sum(i - j - 1 for i, j in P.conditions)
