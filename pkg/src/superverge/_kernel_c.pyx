# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled orbit kernel: same contract as ``_kernel_py``."""

IMPLEMENTATION = "cython"


cdef inline Py_ssize_t _tri(int i, int j):
    return (i - 1) * (i - 2) // 2 + (j - 1)


def right_op(bytes vec, int n, int i, int j, int alpha,
             bytes mul, bytes sub, int q):
    cdef bytearray out = bytearray(vec)
    cdef const unsigned char* v = vec
    cdef const unsigned char* m = mul
    cdef const unsigned char* s = sub
    cdef unsigned char* o = out
    cdef int r, a
    cdef Py_ssize_t idx
    for r in range(i + 1, n + 1):
        a = v[_tri(r, j)]
        idx = _tri(r, i)
        o[idx] = s[v[idx] * q + m[alpha * q + a]]
    return bytes(out)


def left_op(bytes vec, int n, int i, int l, int alpha,
            bytes mul, bytes sub, int q):
    cdef bytearray out = bytearray(vec)
    cdef const unsigned char* v = vec
    cdef const unsigned char* m = mul
    cdef const unsigned char* s = sub
    cdef unsigned char* o = out
    cdef Py_ssize_t base = _tri(l, 1)
    cdef Py_ssize_t ibase = _tri(i, 1)
    cdef int c
    for c in range(l - 1):
        o[base + c] = s[v[base + c] * q + m[alpha * q + v[ibase + c]]]
    return bytes(out)


def orbit_closure(bytes seed, int n, int q, str side,
                  bytes mul, bytes sub, gens, Py_ssize_t cap):
    cdef bint right = side == "right"
    cdef set members = {seed}
    cdef list frontier = [seed]
    cdef list nxt
    cdef bytes vec, w
    cdef int i, j, alpha
    while frontier:
        nxt = []
        for vec in frontier:
            for (i, j, alpha) in gens:
                if right:
                    w = right_op(vec, n, i, j, alpha, mul, sub, q)
                else:
                    w = left_op(vec, n, i, j, alpha, mul, sub, q)
                if w not in members:
                    if len(members) >= cap:
                        raise MemoryError("orbit cap exceeded")
                    members.add(w)
                    nxt.append(w)
        frontier = nxt
    return members
