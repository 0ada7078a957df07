# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; semantics identical to ``_kernels_py``.

Everything runs on C int64. Inputs are range-checked against COORD_LIMIT,
which is chosen so no intermediate here can overflow: the largest value is
the squared-distance sum in division, at most 16 * norm(b)^2 with
norm(b) <= COORD_LIMIT^2 = 2^28.
"""

from libc.stdint cimport int64_t

COORD_LIMIT = 1 << 14

cdef int64_t _LIMIT = 1 << 14

# 24 units in doubled coordinates, lexicographically sorted (same table as
# the pure backend)
cdef int64_t[24][4] _UNITS
cdef int _n_units = 0

cdef void _init_units():
    global _n_units
    cdef int a, b, c, d
    rows = []
    for a in (-2, 0, 2):
        for b in (-2, 0, 2):
            for c in (-2, 0, 2):
                for d in (-2, 0, 2):
                    if a * a + b * b + c * c + d * d == 4:
                        rows.append((a, b, c, d))
    for a in (-1, 1):
        for b in (-1, 1):
            for c in (-1, 1):
                for d in (-1, 1):
                    rows.append((a, b, c, d))
    rows.sort()
    for i, row in enumerate(rows):
        _UNITS[i][0] = row[0]
        _UNITS[i][1] = row[1]
        _UNITS[i][2] = row[2]
        _UNITS[i][3] = row[3]
    _n_units = len(rows)

_init_units()


cdef inline int64_t _fdiv(int64_t num, int64_t den) nogil:
    # floor division, den > 0
    cdef int64_t q = num / den
    if num % den != 0 and num < 0:
        q -= 1
    return q


cdef int _unpack(object t, int64_t* out) except -1:
    cdef int i
    cdef object v
    if len(t) != 4:
        raise ValueError("expected a 4-tuple of doubled coordinates")
    for i in range(4):
        v = t[i]
        out[i] = v
        if out[i] < -_LIMIT or out[i] > _LIMIT:
            raise OverflowError(
                f"doubled coordinate {t[i]} outside supported range +-{COORD_LIMIT}"
            )
    return 0


cdef inline void _cmul(const int64_t* x, const int64_t* y, int64_t* out) nogil:
    out[0] = x[0] * y[0] - x[1] * y[1] - x[2] * y[2] - x[3] * y[3]
    out[1] = x[0] * y[1] + x[1] * y[0] + x[2] * y[3] - x[3] * y[2]
    out[2] = x[0] * y[2] - x[1] * y[3] + x[2] * y[0] + x[3] * y[1]
    out[3] = x[0] * y[3] + x[1] * y[2] - x[2] * y[1] + x[3] * y[0]


cdef int _halve(int64_t* v) except -1:
    if (v[0] | v[1] | v[2] | v[3]) & 1:
        raise ValueError("non-integral product; parity constraint violated")
    v[0] >>= 1
    v[1] >>= 1
    v[2] >>= 1
    v[3] >>= 1
    return 0


cdef int64_t _cnorm(const int64_t* x) except -1:
    cdef int64_t s = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3]
    if s & 3:
        raise ValueError("non-integral norm; parity constraint violated")
    return s >> 2


cdef int _cdivmod(const int64_t* a, const int64_t* b, int64_t* q, int64_t* r) except -1:
    cdef int64_t n = _cnorm(b)
    cdef int64_t bc[4]
    cdef int64_t m[4]
    cdef int64_t lo[4]
    cdef int64_t cand[4]
    cdef int64_t qb[4]
    cdef int64_t best_s = -1, s, d
    cdef int64_t best_q[4]
    cdef int parity, bits, l, better

    bc[0] = b[0]; bc[1] = -b[1]; bc[2] = -b[2]; bc[3] = -b[3]
    _cmul(a, bc, m)
    _halve(m)

    for parity in range(2):
        for l in range(4):
            if parity == 0:
                lo[l] = 2 * _fdiv(m[l], 2 * n)
            else:
                lo[l] = 2 * _fdiv(m[l] - n, 2 * n) + 1
        for bits in range(16):
            cand[0] = lo[0] + ((bits & 1) << 1)
            cand[1] = lo[1] + (bits & 2)
            cand[2] = lo[2] + ((bits & 4) >> 1)
            cand[3] = lo[3] + ((bits & 8) >> 2)
            s = 0
            for l in range(4):
                d = m[l] - n * cand[l]
                s += d * d
            better = 0
            if best_s < 0 or s < best_s:
                better = 1
            elif s == best_s:
                for l in range(4):
                    if cand[l] != best_q[l]:
                        if cand[l] < best_q[l]:
                            better = 1
                        break
            if better:
                best_s = s
                for l in range(4):
                    best_q[l] = cand[l]

    for l in range(4):
        q[l] = best_q[l]
    _cmul(best_q, b, qb)
    _halve(qb)
    for l in range(4):
        r[l] = a[l] - qb[l]
    if _cnorm(r) >= n:
        raise ValueError("division failed to reduce the norm")
    return 0


def mul(x, y):
    """Hamilton product of two doubled-coordinate quadruples."""
    cdef int64_t cx[4]
    cdef int64_t cy[4]
    cdef int64_t out[4]
    _unpack(x, cx)
    _unpack(y, cy)
    _cmul(cx, cy, out)
    _halve(out)
    return (out[0], out[1], out[2], out[3])


def norm(x):
    cdef int64_t cx[4]
    _unpack(x, cx)
    return _cnorm(cx)


def right_divmod(a, b):
    """Return (q, r) with a = q*b + r and norm(r) < norm(b).

    Same quotient choice as the pure backend: nearest Hurwitz point with
    lexicographic tie-break. b must be nonzero.
    """
    cdef int64_t ca[4]
    cdef int64_t cb[4]
    cdef int64_t q[4]
    cdef int64_t r[4]
    _unpack(a, ca)
    _unpack(b, cb)
    _cdivmod(ca, cb, q, r)
    return (q[0], q[1], q[2], q[3]), (r[0], r[1], r[2], r[3])


def gcrd(a, b):
    """Last nonzero remainder of the right-division Euclidean loop."""
    cdef int64_t ca[4]
    cdef int64_t cb[4]
    cdef int64_t q[4]
    cdef int64_t r[4]
    cdef int l
    _unpack(a, ca)
    _unpack(b, cb)
    while cb[0] | cb[1] | cb[2] | cb[3]:
        _cdivmod(ca, cb, q, r)
        for l in range(4):
            ca[l] = cb[l]
            cb[l] = r[l]
    return (ca[0], ca[1], ca[2], ca[3])


def canonical_min(h):
    """Lexicographic minimum of the 24 left-associates u * h."""
    cdef int64_t ch[4]
    cdef int64_t c[4]
    cdef int64_t best[4]
    cdef int i, l, better, have = 0
    _unpack(h, ch)
    for i in range(_n_units):
        _cmul(_UNITS[i], ch, c)
        _halve(c)
        better = 0
        if not have:
            better = 1
        else:
            for l in range(4):
                if c[l] != best[l]:
                    if c[l] < best[l]:
                        better = 1
                    break
        if better:
            have = 1
            for l in range(4):
                best[l] = c[l]
    return (best[0], best[1], best[2], best[3])
