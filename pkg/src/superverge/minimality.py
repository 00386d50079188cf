"""Minimal-degree constituent machinery: the side pattern sets, the
perp bijection between hat positions, the hook-disconnected classifier,
the shift identities, and monomial sources.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

from .action import ScaledIdempotent, act_left_root, act_right_root
from .errors import (HookConnected, NotAHatPosition, TheoremViolation)
from .orbits import VergeData
from .rootcomb import (MainConditionSet, PatternSet, Pos, arm_total, b_count,
                       commutator_positions, hook_meeting, is_closed,
                       tri_positions, tri_size)


@dataclass(frozen=True)
class SideSets:
    """The nested pattern sets attached to a main-condition set.

    Left side: Lo ⊆ L = Lo ∪ P ⊆ Lhat; right side mirrors it with rows
    and columns exchanged.  I_left / I_right carry the commutator
    supports used to read off c.
    """

    P: MainConditionSet
    Lo: PatternSet
    L: PatternSet
    Lhat: PatternSet
    Ro: PatternSet
    R: PatternSet
    Rhat: PatternSet
    I_left: PatternSet
    I_right: PatternSet

    @property
    def Lhat_minus(self) -> PatternSet:
        return self.Lhat - self.P.pattern()

    @property
    def Rhat_minus(self) -> PatternSet:
        return self.Rhat - self.P.pattern()


def _hat_extension(P: MainConditionSet, side: str) -> set[Pos]:
    out = set()
    for (i, j) in P:
        for (r, s) in P:
            if j < s < i < r:
                out.add((r, i) if side == "left" else (s, j))
    return out


def side_sets(P: MainConditionSet) -> SideSets:
    """Compute all side pattern sets of P and assert their closure laws."""
    n = P.n
    rows = {i for i, _ in P}
    cols = {j for _, j in P}
    col_main = {j: i for i, j in P}
    row_main = {i: j for i, j in P}

    Lo = PatternSet.of(n, [(i, j) for (i, j) in tri_positions(n)
                           if i not in rows or j < row_main[i]])
    Ro = PatternSet.of(n, [(i, j) for (i, j) in tri_positions(n)
                           if j not in cols or i > col_main[j]])
    Pp = P.pattern()
    L = Lo | Pp
    R = Ro | Pp
    Lhat = L | PatternSet.of(n, _hat_extension(P, "left"))
    Rhat = R | PatternSet.of(n, _hat_extension(P, "right"))

    for name, s in [("Lo", Lo), ("L", L), ("Lhat", Lhat),
                    ("Ro", Ro), ("R", R), ("Rhat", Rhat)]:
        if not is_closed(s):
            raise TheoremViolation(f"{name} is not closed for P = {P.conditions}")
    b = b_count(P)
    if len(Lhat - L) != b or len(Rhat - R) != b:
        raise TheoremViolation("hat extensions do not have size b")

    def commutator_extra(hat_minus: PatternSet, base: PatternSet) -> PatternSet:
        extra = hat_minus - base
        out = set()
        for (i, a) in extra:
            for (aa, bb) in extra:
                if aa == a:
                    out.add((i, bb))
        return base | PatternSet.of(n, out)

    I_left = commutator_extra(Lhat - Pp, Lo)
    I_right = commutator_extra(Rhat - Pp, Ro)

    ss = SideSets(P=P, Lo=Lo, L=L, Lhat=Lhat, Ro=Ro, R=R, Rhat=Rhat,
                  I_left=I_left, I_right=I_right)
    if is_hook_disconnected(P):
        for name, s in [("Lhat_minus", ss.Lhat_minus),
                        ("Rhat_minus", ss.Rhat_minus)]:
            if not is_closed(s):
                raise TheoremViolation(
                    f"{name} not closed for disconnected P = {P.conditions}")
    return ss


def perp(pos: Pos, P: MainConditionSet) -> Pos:
    """(r,i) -> (s,j) for the witnesses (i,j),(r,s) in P with j<s<i<r."""
    r, i = pos
    row_main = {a: b for a, b in P}
    if i in row_main and r in row_main:
        j, s = row_main[i], row_main[r]
        if j < s < i < r:
            return (s, j)
    raise NotAHatPosition(f"{pos} is not in Lhat \\ L for P = {P.conditions}")


def _meet_size(p1: Pos, p2: Pos) -> int:
    """Number of triangle positions shared by the hooks at p1, p2."""
    if p1 == p2:
        i, j = p1
        return 2 * (i - j - 1) + 1
    return 0 if hook_meeting(p1, p2) is None else 1


def is_hook_disconnected(P: MainConditionSet) -> bool:
    """No pair of main conditions meets at the diagonal while some hook
    of P meets both hooks in exactly one triangle position each."""
    conds = P.conditions
    for nu in conds:
        for mu in conds:
            if nu >= mu:
                continue
            if nu[1] != mu[0] and mu[1] != nu[0]:
                continue
            for rho in conds:
                if _meet_size(rho, nu) == 1 and _meet_size(rho, mu) == 1:
                    return False
    return True


def is_hook_disconnected_derived(P: MainConditionSet) -> bool:
    """The criterion the endomorphism-ring argument actually uses:
    connected iff some main condition lies in the one-step commutator
    support of Lhat."""
    Lhat = side_sets_raw_lhat(P)
    return not (commutator_positions(Lhat).mask & P.pattern().mask)


def side_sets_raw_lhat(P: MainConditionSet) -> PatternSet:
    """Lhat without the closure assertions (used by the derived
    connectedness criterion, which must not presuppose them)."""
    n = P.n
    rows = {i for i, _ in P}
    row_main = {i: j for i, j in P}
    Lo = PatternSet.of(n, [(i, j) for (i, j) in tri_positions(n)
                           if i not in rows or j < row_main[i]])
    return Lo | P.pattern() | PatternSet.of(n, _hat_extension(P, "left"))


@dataclass(frozen=True)
class ThetaA:
    """The linear character data of a verge: value of A at each main
    condition, defining theta_nu on the corresponding root subgroup."""

    values: tuple[tuple[Pos, int], ...]

    @classmethod
    def of(cls, v: VergeData) -> "ThetaA":
        return cls(v.values)

    def value(self, pos: Pos) -> int:
        return dict(self.values).get(pos, 0)


@dataclass(frozen=True)
class MinimalityReport:
    disconnected: bool
    a: int
    b: int
    c: int
    k: int
    minimal_dim_exponent: int
    count_minimal: int

    def to_json(self) -> dict:
        return {"disconnected": self.disconnected, "a": self.a, "b": self.b,
                "c": self.c, "k": self.k,
                "minimal_dim_exponent": self.minimal_dim_exponent,
                "count_minimal": self.count_minimal,
                "multiplicity": 1 if self.disconnected else None}


def analyze(v: VergeData) -> MinimalityReport:
    """Count and size the minimal-dimension constituents of the right
    orbit module of v."""
    P = v.P
    a, b = arm_total(P), b_count(P)
    disconnected = is_hook_disconnected(P)
    c = 0
    if disconnected:
        ss = side_sets(P)
        c_left = len(ss.Lhat_minus) - len(ss.I_left)
        c_right = len(ss.Rhat_minus) - len(ss.I_right)
        if c_left != c_right:
            raise TheoremViolation(
                f"left/right c disagree ({c_left} vs {c_right}) for {P.conditions}")
        c = c_left
        if not (0 <= c <= b):
            raise TheoremViolation(f"c = {c} outside [0, b] for {P.conditions}")
    q = v.field.q
    return MinimalityReport(
        disconnected=disconnected, a=a, b=b, c=c, k=len(P),
        minimal_dim_exponent=a - b,
        count_minimal=q ** c if disconnected else 0)


def upsilon_sigma(v: VergeData, pos: Pos) -> int:
    """The shift ratio sigma = A_rs / A_ij for a hat position (r,i)."""
    P = v.P
    s, j = perp(pos, P)
    r, i = pos
    return v.field.div(v.value((r, s)), v.value((i, j)))


def verify_upsilon(v: VergeData) -> bool:
    """Check the left-to-right shift identities on [A]:
    x_ri(alpha)[A] = [A] x_sj(alpha sigma) for all hat positions, and the
    commutator compatibility of the shift on composable hat pairs."""
    F = v.field
    P = v.P
    ss = side_sets(P)
    A = ScaledIdempotent.of(v.matrix())
    hat = (ss.Lhat - ss.L).positions()
    for pos in hat:
        sj = perp(pos, P)
        sigma = upsilon_sigma(v, pos)
        for alpha in F.elements():
            lhs = act_left_root(A, pos, alpha)
            rhs = act_right_root(A, sj, F.mul(alpha, sigma))
            if lhs != rhs:
                return False
    if is_hook_disconnected(P):
        if not _verify_upsilon_commutators(v, ss):
            return False
    return True


def _commutator_action_left(A, p1, alpha, p2, beta):
    out = A
    for pos, val in [(p2, A.matrix.field.neg(beta)),
                     (p1, A.matrix.field.neg(alpha)),
                     (p2, beta), (p1, alpha)]:
        out = act_left_root(out, pos, val)
    return out


def _commutator_action_right(A, p1, alpha, p2, beta):
    out = A
    for pos, val in [(p1, alpha), (p2, beta),
                     (p1, A.matrix.field.neg(alpha)),
                     (p2, A.matrix.field.neg(beta))]:
        out = act_right_root(out, pos, val)
    return out


def _verify_upsilon_commutators(v: VergeData, ss: SideSets) -> bool:
    # [x_ar(alpha), x_ri(beta)] [A] must equal
    # [A] [Y(x_ar(alpha)), Y(x_ri(beta))] for composable hat pairs
    F = v.field
    P = v.P
    hat = (ss.Lhat - ss.L).positions()
    A = ScaledIdempotent.of(v.matrix())
    for (a, r) in hat:
        for (rr, i) in hat:
            if rr != r:
                continue
            p1_perp = perp((a, r), P)
            p2_perp = perp((r, i), P)
            s1 = upsilon_sigma(v, (a, r))
            s2 = upsilon_sigma(v, (r, i))
            for alpha, beta in product(F.elements(), repeat=2):
                lhs = _commutator_action_left(A, (a, r), alpha, (r, i), beta)
                rhs = _commutator_action_right(
                    A, p1_perp, F.mul(alpha, s1), p2_perp, F.mul(beta, s2))
                if lhs != rhs:
                    return False
    return True


@dataclass(frozen=True)
class LinearCharSpec:
    """A linear character of the pattern subgroup on `domain`, given by
    coefficients beta: u = prod x_ab(alpha_ab) -> theta(sum beta_ab alpha_ab)."""

    domain: PatternSet
    beta: tuple[tuple[Pos, int], ...]

    def value_exponent(self, F, assignments) -> int:
        """Character exponent on the element with the given root values."""
        acc = 0
        bd = dict(self.beta)
        for pos, alpha in assignments:
            acc = F.add(acc, F.mul(bd.get(pos, 0), alpha))
        return F.trace(acc)

    def to_json(self) -> dict:
        return {"domain": self.domain.to_json(),
                "beta": [[i, j, c] for (i, j), c in self.beta]}


def monomial_sources(v: VergeData) -> list[LinearCharSpec]:
    """All linear characters of U_Rhat that are trivial on U_Ro and
    restrict to theta_A on the main conditions; there are q^c of them and
    each, paired with Rhat, is a monomial source of a minimal constituent."""
    P = v.P
    if not is_hook_disconnected(P):
        raise HookConnected(f"P = {P.conditions} is hook connected")
    F = v.field
    ss = side_sets(P)
    D = commutator_positions(ss.Rhat)
    if D.mask & P.pattern().mask:
        raise TheoremViolation(
            "a main condition lies in the commutator support of Rhat")
    free = sorted((ss.Rhat_minus - ss.I_right).positions())
    if any(pos in D for pos in free):
        raise TheoremViolation("free character position inside commutator support")
    report = analyze(v)
    if len(free) != report.c:
        raise TheoremViolation(
            f"free position count {len(free)} != c = {report.c}")
    if tri_size(v.n) - len(ss.Rhat) != report.a - report.b:
        raise TheoremViolation("[U : U_Rhat] != q^(a-b)")
    out = []
    for fill in product(F.elements(), repeat=len(free)):
        beta = dict(v.values)
        for pos, code in zip(free, fill):
            if code:
                beta[pos] = code
        out.append(LinearCharSpec(domain=ss.Rhat,
                                  beta=tuple(sorted(beta.items()))))
    return out
