"""The two-sided monomial action of U_n(q) on idempotent labels.

A label is a strictly lower triangular matrix A over F_q; the group acts
by truncated column operations (right) and truncated row operations
(left).  Every coefficient picked up along the way is a p-th root of
unity and is stored as an exponent in Z/p.

Two independent implementations of the right action by a full group
element are provided: composition of root-element factors, and the
closed matrix formula truncate(A . u^-t) with its character coefficient.
The test suite checks them against each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InputError, SizeMismatch
from .field import FieldSpec, theta_exponent
from .rootcomb import Pos, check_pos, tri_index, tri_positions, tri_size


@dataclass(frozen=True)
class NilMatrix:
    """A strictly lower triangular matrix over F_q, stored sparsely.

    `entries` holds only the nonzero entries, sorted by position, which
    makes the value hashable and canonical.
    """

    n: int
    field: FieldSpec
    entries: tuple[tuple[Pos, int], ...]

    @classmethod
    def of(cls, n: int, field: FieldSpec, entries) -> "NilMatrix":
        items = {}
        if hasattr(entries, "items"):
            entries = entries.items()
        for pos, code in entries:
            pos = tuple(pos)
            check_pos(n, pos)
            if not (0 <= code < field.q):
                raise InputError(f"entry code {code} out of range for q={field.q}")
            if code:
                items[pos] = code
        return cls(n, field, tuple(sorted(items.items())))

    @classmethod
    def zero(cls, n: int, field: FieldSpec) -> "NilMatrix":
        return cls(n, field, ())

    def get(self, pos: Pos) -> int:
        for p, c in self.entries:
            if p == pos:
                return c
        return 0

    def as_dict(self) -> dict[Pos, int]:
        return dict(self.entries)

    def support(self):
        return tuple(p for p, _ in self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def to_vec(self) -> bytes:
        """Dense byte vector over the row-major triangle linearization."""
        if self.field.q > 256:
            raise InputError("dense byte vectors require q <= 256")
        vec = bytearray(tri_size(self.n))
        for pos, code in self.entries:
            vec[tri_index(pos)] = code
        return bytes(vec)

    @classmethod
    def from_vec(cls, n: int, field: FieldSpec, vec: bytes) -> "NilMatrix":
        entries = tuple((pos, vec[idx]) for idx, pos in enumerate(tri_positions(n))
                        if vec[idx])
        return cls(n, field, entries)

    def to_json(self) -> dict:
        return {"n": self.n, "q": self.field.name(),
                "entries": [[i, j, c] for (i, j), c in self.entries]}


@dataclass(frozen=True)
class ScaledIdempotent:
    """zeta_p^exponent times the idempotent labelled by `matrix`."""

    exponent: int
    matrix: NilMatrix

    def __post_init__(self):
        object.__setattr__(self, "exponent",
                           self.exponent % self.matrix.field.p)

    @classmethod
    def of(cls, matrix: NilMatrix, exponent: int = 0) -> "ScaledIdempotent":
        return cls(exponent, matrix)


@dataclass(frozen=True)
class GroupElement:
    """An element of U_n(q): implicit unit diagonal, sparse lower part."""

    n: int
    field: FieldSpec
    entries: tuple[tuple[Pos, int], ...]

    @classmethod
    def of(cls, n: int, field: FieldSpec, entries) -> "GroupElement":
        items = {}
        if hasattr(entries, "items"):
            entries = entries.items()
        for pos, code in entries:
            pos = tuple(pos)
            check_pos(n, pos)
            if code % field.q:
                items[pos] = code % field.q
        return cls(n, field, tuple(sorted(items.items())))

    @classmethod
    def identity(cls, n: int, field: FieldSpec) -> "GroupElement":
        return cls(n, field, ())

    @classmethod
    def root(cls, n: int, field: FieldSpec, pos: Pos, alpha: int) -> "GroupElement":
        return cls.of(n, field, [(pos, alpha)])

    def get(self, pos: Pos) -> int:
        if pos[0] == pos[1]:
            return 1
        for p, c in self.entries:
            if p == pos:
                return c
        return 0

    def dense(self) -> list[list[int]]:
        m = [[1 if i == j else 0 for j in range(self.n)] for i in range(self.n)]
        for (i, j), c in self.entries:
            m[i - 1][j - 1] = c
        return m

    @classmethod
    def from_dense(cls, n: int, field: FieldSpec, m) -> "GroupElement":
        entries = [((i + 1, j + 1), m[i][j])
                   for i in range(n) for j in range(i) if m[i][j]]
        return cls(n, field, tuple(sorted(entries)))

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        if self.n != other.n or self.field != other.field:
            raise SizeMismatch("mismatched group elements")
        F, n = self.field, self.n
        a, b = self.dense(), other.dense()
        out = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i + 1):
                acc = 0
                for k in range(j, i + 1):
                    acc = F.add(acc, F.mul(a[i][k], b[k][j]))
                out[i][j] = acc
        return GroupElement.from_dense(n, F, out)

    def inverse(self) -> "GroupElement":
        # forward substitution on the unitriangular system u * x = 1
        F, n = self.field, self.n
        a = self.dense()
        inv = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
        for j in range(n):
            for i in range(j + 1, n):
                acc = 0
                for k in range(j, i):
                    acc = F.add(acc, F.mul(a[i][k], inv[k][j]))
                inv[i][j] = F.neg(acc)
        return GroupElement.from_dense(n, F, inv)

    def factors(self) -> list[tuple[Pos, int]]:
        """Root-element factorization: columns left to right, bottom-up
        rows within each column.  The product in this order reproduces
        the matrix entrywise."""
        order = sorted(self.entries, key=lambda t: (t[0][1], -t[0][0]))
        return [(pos, c) for pos, c in order]


def act_right_root(s: ScaledIdempotent, pos: Pos, alpha: int) -> ScaledIdempotent:
    """[A] x_ij(alpha): truncated column operation, coefficient theta(alpha A_ij)."""
    A = s.matrix
    F = A.field
    check_pos(A.n, pos)
    i, j = pos
    exp = s.exponent + theta_exponent(F, F.mul(alpha, A.get(pos)))
    if alpha == 0:
        return ScaledIdempotent(exp, A)
    d = A.as_dict()
    # add -alpha * column j to column i, keep only rows below i
    for r in range(i + 1, A.n + 1):
        v = F.sub(d.get((r, i), 0), F.mul(alpha, d.get((r, j), 0)))
        if v:
            d[(r, i)] = v
        else:
            d.pop((r, i), None)
    return ScaledIdempotent(exp, NilMatrix.of(A.n, F, d))


def act_left_root(s: ScaledIdempotent, pos: Pos, alpha: int) -> ScaledIdempotent:
    """x_il(alpha) [A]: truncated row operation, coefficient theta(alpha A_il)."""
    A = s.matrix
    F = A.field
    check_pos(A.n, pos)
    i, l = pos
    exp = s.exponent + theta_exponent(F, F.mul(alpha, A.get(pos)))
    if alpha == 0:
        return ScaledIdempotent(exp, A)
    d = A.as_dict()
    # add -alpha * row i to row l, keep only columns left of l
    for c in range(1, l):
        v = F.sub(d.get((l, c), 0), F.mul(alpha, d.get((i, c), 0)))
        if v:
            d[(l, c)] = v
        else:
            d.pop((l, c), None)
    return ScaledIdempotent(exp, NilMatrix.of(A.n, F, d))


def permute_right(A: NilMatrix, u: GroupElement) -> NilMatrix:
    """The permutation part truncate(A . u^-t) of the right action."""
    F, n = A.field, A.n
    ut = u.inverse().dense()  # lower; we use its transpose on the right
    d = {}
    for r in range(2, n + 1):
        for c in range(1, r):
            # (A * u^-t)_{rc} = sum_k A_{rk} * (u^-1)_{ck}
            acc = 0
            for k in range(1, c + 1):
                a = A.get((r, k)) if k < r else 0
                if a:
                    acc = F.add(acc, F.mul(a, ut[c - 1][k - 1]))
            if acc:
                d[(r, c)] = acc
    return NilMatrix.of(n, F, d)


def act_right_elem(s: ScaledIdempotent, u: GroupElement,
                   method: str = "closed") -> ScaledIdempotent:
    """[A] u, by the closed formula of the orbit calculus or by composing
    the root-element factors of u; both paths agree."""
    A = s.matrix
    if A.n != u.n or A.field != u.field:
        raise SizeMismatch("idempotent and group element sizes differ")
    if method == "factors":
        out = s
        for pos, alpha in u.factors():
            out = act_right_root(out, pos, alpha)
        return out
    if method != "closed":
        raise InputError(f"unknown method {method!r}")
    F = A.field
    B = permute_right(A, u)
    # coefficient chi_{A.u}(u - 1) = theta(sum B_ij * u_ij)
    acc = 0
    for pos, c in B.entries:
        acc = F.add(acc, F.mul(c, u.get(pos)))
    return ScaledIdempotent(s.exponent + theta_exponent(F, acc), B)


def act_left_elem(s: ScaledIdempotent, u: GroupElement) -> ScaledIdempotent:
    """u [A], as the composition of the root factors of u (right to left)."""
    A = s.matrix
    if A.n != u.n or A.field != u.field:
        raise SizeMismatch("idempotent and group element sizes differ")
    out = s
    for pos, alpha in reversed(u.factors()):
        out = act_left_root(out, pos, alpha)
    return out


def permute_left(A: NilMatrix, u: GroupElement) -> NilMatrix:
    """The permutation part truncate(u^-t . A) of the left action."""
    F, n = A.field, A.n
    ui = u.inverse().dense()
    d = {}
    for r in range(2, n + 1):
        for c in range(1, r):
            # (u^-t * A)_{rc} = sum_k (u^-1)_{kr} * A_{kc}
            acc = 0
            for k in range(r, n + 1):
                a = A.get((k, c)) if c < k else 0
                if a:
                    acc = F.add(acc, F.mul(ui[k - 1][r - 1], a))
            if acc:
                d[(r, c)] = acc
    return NilMatrix.of(n, F, d)
