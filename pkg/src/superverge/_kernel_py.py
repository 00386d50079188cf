"""Pure-Python orbit kernel: truncated row/column operations on dense
byte vectors and breadth-first orbit closure.

This is the fallback twin of the compiled kernel in ``_kernel_c``; both
expose the same functions over the same representation (one field code
per lower-triangle position, row-major).  Requires q <= 256.
"""

from __future__ import annotations

IMPLEMENTATION = "python"


def _tri(i: int, j: int) -> int:
    return (i - 1) * (i - 2) // 2 + (j - 1)


def right_op(vec: bytes, n: int, i: int, j: int, alpha: int,
             mul: bytes, sub: bytes, q: int) -> bytes:
    """Truncated column operation at (i,j): col i -= alpha * col j,
    rows > i only."""
    out = bytearray(vec)
    for r in range(i + 1, n + 1):
        a = vec[_tri(r, j)]
        idx = _tri(r, i)
        out[idx] = sub[vec[idx] * q + mul[alpha * q + a]]
    return bytes(out)


def left_op(vec: bytes, n: int, i: int, l: int, alpha: int,
            mul: bytes, sub: bytes, q: int) -> bytes:
    """Truncated row operation at (i,l): row l -= alpha * row i,
    columns < l only."""
    out = bytearray(vec)
    base = _tri(l, 1)
    ibase = _tri(i, 1)
    for c in range(l - 1):
        out[base + c] = sub[vec[base + c] * q + mul[alpha * q + vec[ibase + c]]]
    return bytes(out)


def orbit_closure(seed: bytes, n: int, q: int, side: str,
                  mul: bytes, sub: bytes, gens, cap: int) -> set:
    """BFS closure of {seed} under the generator moves.

    ``gens`` is a sequence of (i, j, alpha) triples.  Returns the member
    set, or raises MemoryError once it would exceed ``cap``.
    """
    op = right_op if side == "right" else left_op
    members = {seed}
    frontier = [seed]
    while frontier:
        nxt = []
        for vec in frontier:
            for (i, j, alpha) in gens:
                w = op(vec, n, i, j, alpha, mul, sub, q)
                if w not in members:
                    if len(members) >= cap:
                        raise MemoryError("orbit cap exceeded")
                    members.add(w)
                    nxt.append(w)
        frontier = nxt
    return members
