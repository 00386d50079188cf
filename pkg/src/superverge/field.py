"""Exact arithmetic in F_q (q = p^k) with table-driven operations.

Elements are dense integer codes 0..q-1; code c encodes the polynomial
c_0 + c_1 x + ... + c_{k-1} x^{k-1} over F_p via base-p digits, reduced
modulo a monic irreducible polynomial of degree k.  The fixed nontrivial
additive character is theta(x) = zeta_p ** trace(x), stored purely as the
exponent trace(x) in Z/p, so no floating point ever enters the library.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotPrime, ReduciblePolynomial, UnsupportedSize

MAX_Q = 1 << 16

# Conway-style defining polynomials, coefficient lists c_0..c_k (ascending).
BUILTIN_POLYS = {
    4: (1, 1, 1),           # x^2 + x + 1
    8: (1, 1, 0, 1),        # x^3 + x + 1
    9: (2, 2, 1),           # x^2 + 2x + 2
    16: (1, 1, 0, 0, 1),    # x^4 + x + 1
    25: (2, 4, 1),          # x^2 + 4x + 2
    27: (1, 2, 0, 1),       # x^3 + 2x + 1
}


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    """Remainder of num / den over F_p; den monic, lists ascending."""
    num = list(num)
    dn = len(den) - 1
    for top in range(len(num) - 1, dn - 1, -1):
        c = num[top] % p
        if c:
            for t in range(dn + 1):
                num[top - dn + t] = (num[top - dn + t] - c * den[t]) % p
    return [c % p for c in num[:dn]]


def _poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _check_irreducible(poly: list[int], p: int) -> None:
    """Exhaustive divisor search, feasible for the supported degrees k <= 4."""
    k = len(poly) - 1
    for deg in range(1, k // 2 + 1):
        # all monic divisor candidates of this degree
        for code in range(p ** deg):
            cand = []
            c = code
            for _ in range(deg):
                cand.append(c % p)
                c //= p
            cand.append(1)
            if not any(_poly_mod(poly, cand, p)):
                raise ReduciblePolynomial(
                    f"{poly} has a monic factor {cand} over F_{p}")


@dataclass(frozen=True)
class FieldSpec:
    """The field F_q with all operation tables precomputed."""

    p: int
    k: int
    q: int
    poly: tuple[int, ...]              # c_0..c_k ascending, monic
    add_table: tuple[int, ...] = field(repr=False, default=())
    mul_table: tuple[int, ...] = field(repr=False, default=())
    neg_table: tuple[int, ...] = field(repr=False, default=())
    inv_table: tuple[int, ...] = field(repr=False, default=())
    trace_table: tuple[int, ...] = field(repr=False, default=())

    def add(self, x: int, y: int) -> int:
        return self.add_table[x * self.q + y]

    def sub(self, x: int, y: int) -> int:
        return self.add_table[x * self.q + self.neg_table[y]]

    def neg(self, x: int) -> int:
        return self.neg_table[x]

    def mul(self, x: int, y: int) -> int:
        return self.mul_table[x * self.q + y]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.inv_table[x]

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def trace(self, x: int) -> int:
        return self.trace_table[x]

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        return range(1, self.q)

    def name(self) -> str:
        return str(self.p) if self.k == 1 else f"{self.p}^{self.k}"

    def __hash__(self) -> int:
        return hash((self.p, self.k, self.poly))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.k, self.poly) == (other.p, other.k, other.poly)


def _digits(code: int, p: int, k: int) -> list[int]:
    out = []
    for _ in range(k):
        out.append(code % p)
        code //= p
    return out


def _code(digits: list[int], p: int) -> int:
    c = 0
    for d in reversed(digits):
        c = c * p + d
    return c


def make_field(p: int, k: int = 1, poly=None) -> FieldSpec:
    """Construct F_{p^k}; for k > 1 a defining polynomial is required
    unless q is one of the built-in sizes."""
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise UnsupportedSize("extension degree must be >= 1")
    q = p ** k
    if q > MAX_Q:
        raise UnsupportedSize(f"q = {q} exceeds the table bound {MAX_Q}")

    if k == 1:
        poly = [0, 1]  # unused
    elif poly is None:
        if q not in BUILTIN_POLYS:
            raise UnsupportedSize(
                f"no built-in polynomial for q = {q}; pass one explicitly")
        poly = list(BUILTIN_POLYS[q])
    else:
        poly = [c % p for c in poly]
        if len(poly) != k + 1 or poly[k] != 1:
            raise ReduciblePolynomial(
                f"defining polynomial must be monic of degree {k}")
        _check_irreducible(poly, p)

    add = [0] * (q * q)
    mul = [0] * (q * q)
    neg = [0] * q
    inv = [0] * q
    tr = [0] * q
    for x in range(q):
        dx = _digits(x, p, k)
        neg[x] = _code([(-d) % p for d in dx], p)
        for y in range(x, q):
            dy = _digits(y, p, k)
            s = _code([(a + b) % p for a, b in zip(dx, dy)], p)
            add[x * q + y] = add[y * q + x] = s
            m = _code(_poly_mod(_poly_mul(dx, dy, p), poly, p), p)
            mul[x * q + y] = mul[y * q + x] = m
    for x in range(1, q):
        # q is tiny: linear search for the inverse is fine
        for y in range(1, q):
            if mul[x * q + y] == 1:
                inv[x] = y
                break
        else:
            raise ReduciblePolynomial(
                f"{x} has no inverse: defining polynomial is reducible")
    for x in range(q):
        # Tr(x) = x + x^p + ... + x^(p^(k-1)), lands in the prime subfield
        acc, frob = 0, x
        for _ in range(k):
            acc = add[acc * q + frob]
            y = frob
            for _ in range(p - 1):
                y = mul[y * q + frob]
            frob = y
        if acc >= p:
            raise ReduciblePolynomial("trace left the prime subfield")
        tr[x] = acc

    return FieldSpec(p=p, k=k, q=q, poly=tuple(poly),
                     add_table=tuple(add), mul_table=tuple(mul),
                     neg_table=tuple(neg), inv_table=tuple(inv),
                     trace_table=tuple(tr))


def theta_exponent(spec: FieldSpec, x: int) -> int:
    """Exponent e in Z/p with theta(x) = zeta_p^e, i.e. the trace of x."""
    return spec.trace_table[x]


def parse_field_name(name: str, poly=None) -> FieldSpec:
    """Parse a "p" or "p^k" field name as used on the CLI."""
    parts = name.split("^")
    try:
        if len(parts) == 1:
            p, k = int(parts[0]), 1
        elif len(parts) == 2:
            p, k = int(parts[0]), int(parts[1])
        else:
            raise ValueError
    except ValueError:
        raise UnsupportedSize(f"cannot parse field name {name!r}") from None
    return make_field(p, k, poly)
