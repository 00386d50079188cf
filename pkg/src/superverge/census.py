"""Counting minimal-degree irreducibles: enumeration of main-condition
sets and the counting polynomial d_n in t = q - 1.

The contribution of a hook-disconnected P is t^|P| (t+1)^c, which keeps
every coefficient a nonnegative integer by construction; the evaluation
oracle count_direct certifies the polynomial identity numerically.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .errors import CapExceeded, TheoremViolation
from .minimality import is_hook_disconnected, side_sets
from .rootcomb import MainConditionSet, arm_total, b_count, tri_positions

DEFAULT_N_CAP = 8


@dataclass(frozen=True)
class CountingPolynomial:
    """Integer polynomial in t = q - 1; index = degree."""

    coefficients: tuple[int, ...]

    def __add__(self, other: "CountingPolynomial") -> "CountingPolynomial":
        a, b = self.coefficients, other.coefficients
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return CountingPolynomial(_trim(out))

    def evaluate(self, t: int) -> int:
        acc = 0
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def degree(self) -> int:
        return len(self.coefficients) - 1

    def check_nonnegative(self) -> None:
        if any(c < 0 for c in self.coefficients):
            raise TheoremViolation(
                f"negative coefficient in {self.coefficients}")

    def to_json(self) -> dict:
        return {f"t^{d}": c for d, c in
                sorted(enumerate(self.coefficients), reverse=True)}


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


ZERO = CountingPolynomial((0,))


def _t_power_shifted(k: int, c: int) -> CountingPolynomial:
    """t^k * (t+1)^c, expanded with binomial coefficients."""
    coeffs = [0] * k + [_binom(c, i) for i in range(c + 1)]
    return CountingPolynomial(tuple(coeffs))


def _binom(nn: int, kk: int) -> int:
    out = 1
    for i in range(kk):
        out = out * (nn - i) // (i + 1)
    return out


def enumerate_main_sets(n: int, cap: int = DEFAULT_N_CAP) -> Iterator[MainConditionSet]:
    """All subsets of the lower triangle with pairwise distinct rows and
    columns, streamed smallest-first in lexicographic order."""
    if n > cap:
        raise CapExceeded(f"n = {n} exceeds the enumeration cap {cap}")
    positions = sorted(tri_positions(n))
    by_size: list[list[tuple]] = [[()]]
    size = 0
    yield MainConditionSet.of(n, ())
    while by_size[size]:
        nxt = []
        for chosen in by_size[size]:
            rows = {i for i, _ in chosen}
            cols = {j for _, j in chosen}
            start = positions.index(chosen[-1]) + 1 if chosen else 0
            for pos in positions[start:]:
                i, j = pos
                if i in rows or j in cols:
                    continue
                nxt.append(chosen + (pos,))
        nxt.sort()
        for chosen in nxt:
            yield MainConditionSet.of(n, chosen)
        by_size.append(nxt)
        size += 1


def c_of(P: MainConditionSet) -> int:
    """The abelianization exponent c of a hook-disconnected P."""
    ss = side_sets(P)
    return len(ss.Lhat_minus) - len(ss.I_left)


def d_polynomial(n: int, cap: int = DEFAULT_N_CAP) -> CountingPolynomial:
    """d_n(t): sum of t^|P| (t+1)^c over hook-disconnected P."""
    out = ZERO
    for P in enumerate_main_sets(n, cap):
        if is_hook_disconnected(P):
            out = out + _t_power_shifted(len(P), c_of(P))
    out.check_nonnegative()
    return out


def stratified_polynomial(n: int, delta: int,
                          cap: int = DEFAULT_N_CAP) -> CountingPolynomial:
    """The degree stratum: same sum restricted to a - b = delta."""
    if delta < 0:
        raise CapExceeded("stratum exponent must be >= 0")
    out = ZERO
    for P in enumerate_main_sets(n, cap):
        if arm_total(P) - b_count(P) == delta and is_hook_disconnected(P):
            out = out + _t_power_shifted(len(P), c_of(P))
    out.check_nonnegative()
    return out


def max_delta(n: int) -> int:
    """Largest possible minimal-dimension exponent at size n."""
    best = 0
    for P in enumerate_main_sets(n):
        if is_hook_disconnected(P):
            best = max(best, arm_total(P) - b_count(P))
    return best


def count_direct(n: int, q: int, cap: int = DEFAULT_N_CAP) -> int:
    """Numeric evaluation oracle: sum of (q-1)^|P| q^c over disconnected P."""
    total = 0
    for P in enumerate_main_sets(n, cap):
        if is_hook_disconnected(P):
            total += (q - 1) ** len(P) * q ** c_of(P)
    return total
