# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled secp256k1 kernel.

Same API as the pure backend: affine ``(x, y)`` int pairs, ``None`` for the
identity.  Field elements are 4x64-bit limbs (little-endian) with unsigned
128-bit accumulators; reduction exploits p = 2^256 - 0x1000003D1.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

ctypedef unsigned long long u64

NAME = "cython"

P = 0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFEFFFFFC2F
N = 0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFEBAAEDCE6AF48A03BBFD25E8CD0364141
GX = 0x79BE667EF9DCBBAC55A06295CE870B07029BFCDB2DCE28D959F2815B16F81798
GY = 0x483ADA7726A3C4655DA4FBFC0E1108A8FD17B448A68554199C47D08FFB10D4B8
B = 7

cdef u64 FOLD = 0x1000003D1ULL  # 2^256 - p

cdef u64[4] P_LIMBS
P_LIMBS[0] = 0xFFFFFFFEFFFFFC2F
P_LIMBS[1] = 0xFFFFFFFFFFFFFFFF
P_LIMBS[2] = 0xFFFFFFFFFFFFFFFF
P_LIMBS[3] = 0xFFFFFFFFFFFFFFFF

# p - 2, bits consumed by fe_inv.
cdef u64[4] PM2_LIMBS
PM2_LIMBS[0] = 0xFFFFFFFEFFFFFC2D
PM2_LIMBS[1] = 0xFFFFFFFFFFFFFFFF
PM2_LIMBS[2] = 0xFFFFFFFFFFFFFFFF
PM2_LIMBS[3] = 0xFFFFFFFFFFFFFFFF


# ---------------------------------------------------------------- field ops

cdef inline bint fe_is_zero(const u64* a) nogil:
    return a[0] == 0 and a[1] == 0 and a[2] == 0 and a[3] == 0


cdef inline bint fe_eq(const u64* a, const u64* b) nogil:
    return a[0] == b[0] and a[1] == b[1] and a[2] == b[2] and a[3] == b[3]


cdef inline void fe_set(u64* r, const u64* a) nogil:
    r[0] = a[0]; r[1] = a[1]; r[2] = a[2]; r[3] = a[3]


cdef inline bint fe_gte_p(const u64* a) nogil:
    cdef int i
    for i in range(3, -1, -1):
        if a[i] > P_LIMBS[i]:
            return True
        if a[i] < P_LIMBS[i]:
            return False
    return True


cdef inline void fe_sub_p(u64* a) nogil:
    cdef u128 acc = 0
    cdef int i
    cdef u64 borrow = 0
    for i in range(4):
        acc = <u128>a[i] - P_LIMBS[i] - borrow
        a[i] = <u64>acc
        borrow = 1 if (acc >> 64) else 0


cdef void fe_reduce_carry(u64* r, u64 carry) nogil:
    # value = r + carry * 2^256 == r + carry * FOLD (mod p)
    cdef u128 acc
    cdef int i
    while carry:
        acc = <u128>r[0] + <u128>carry * FOLD
        r[0] = <u64>acc
        acc >>= 64
        i = 1
        while acc and i < 4:
            acc += r[i]
            r[i] = <u64>acc
            acc >>= 64
            i += 1
        carry = <u64>acc
    if fe_gte_p(r):
        fe_sub_p(r)


cdef void fe_add(u64* r, const u64* a, const u64* b) nogil:
    cdef u128 acc = 0
    cdef int i
    for i in range(4):
        acc += a[i]
        acc += b[i]
        r[i] = <u64>acc
        acc >>= 64
    fe_reduce_carry(r, <u64>acc)


cdef void fe_sub(u64* r, const u64* a, const u64* b) nogil:
    cdef u128 acc
    cdef u64 borrow = 0
    cdef int i
    for i in range(4):
        acc = <u128>a[i] - b[i] - borrow
        r[i] = <u64>acc
        borrow = 1 if (acc >> 64) else 0
    if borrow:
        # add p back
        acc = 0
        for i in range(4):
            acc += r[i]
            acc += P_LIMBS[i]
            r[i] = <u64>acc
            acc >>= 64
    if fe_gte_p(r):
        fe_sub_p(r)


cdef void fe_reduce512(u64* r, u128* col) nogil:
    # col[0..8] -> normalized 8 limbs -> fold high half twice
    cdef u64 t[8]
    cdef int i
    for i in range(8):
        t[i] = <u64>col[i]
        col[i + 1] += col[i] >> 64
    cdef u128 acc = 0
    for i in range(4):
        acc += t[i]
        acc += <u128>t[4 + i] * FOLD
        r[i] = <u64>acc
        acc >>= 64
    fe_reduce_carry(r, <u64>acc)


cdef void fe_mul(u64* r, const u64* a, const u64* b) nogil:
    cdef u128 col[9]
    cdef u128 prod
    cdef int i, j
    memset(col, 0, sizeof(col))
    for i in range(4):
        for j in range(4):
            prod = <u128>a[i] * b[j]
            col[i + j] += <u64>prod
            col[i + j + 1] += prod >> 64
    fe_reduce512(r, col)


cdef void fe_sqr(u64* r, const u64* a) nogil:
    cdef u128 col[9]
    cdef u128 prod
    cdef int i, j
    memset(col, 0, sizeof(col))
    for i in range(4):
        prod = <u128>a[i] * a[i]
        col[2 * i] += <u64>prod
        col[2 * i + 1] += prod >> 64
        for j in range(i + 1, 4):
            prod = <u128>a[i] * a[j]
            col[i + j] += <u128>(<u64>prod) * 2
            col[i + j + 1] += (prod >> 64) * 2
    fe_reduce512(r, col)


cdef void fe_inv(u64* r, const u64* a) nogil:
    # a^(p-2) by left-to-right square-and-multiply
    cdef u64 acc[4]
    cdef u64 base[4]
    cdef int limb, bit
    cdef bint started = 0
    fe_set(base, a)
    for limb in range(3, -1, -1):
        for bit in range(63, -1, -1):
            if started:
                fe_sqr(acc, acc)
            if (PM2_LIMBS[limb] >> bit) & 1:
                if started:
                    fe_mul(acc, acc, base)
                else:
                    fe_set(acc, base)
                    started = 1
    fe_set(r, acc)


cdef void fe_from_int(u64* r, object v):
    cdef bytes raw = int(v).to_bytes(32, "little")
    cdef const unsigned char* s = raw
    cdef int i, j
    for i in range(4):
        r[i] = 0
        for j in range(7, -1, -1):
            r[i] = (r[i] << 8) | s[8 * i + j]


cdef object fe_to_int(const u64* a):
    return (int(a[0]) | (int(a[1]) << 64) | (int(a[2]) << 128)
            | (int(a[3]) << 192))


# ---------------------------------------------------------------- point ops

cdef struct JPt:
    u64 x[4]
    u64 y[4]
    u64 z[4]


cdef inline bint pt_is_inf(const JPt* p) nogil:
    return fe_is_zero(p.z)


cdef inline void pt_set_inf(JPt* p) nogil:
    memset(p, 0, sizeof(JPt))


cdef void pt_double(JPt* r, const JPt* p) nogil:
    # safe when r aliases p: all reads of p happen before writes to r
    cdef u64 a[4], b[4], c[4], d[4], e[4], f[4], t[4], z3[4]
    if pt_is_inf(p) or fe_is_zero(p.y):
        pt_set_inf(r)
        return
    fe_mul(z3, p.y, p.z)
    fe_add(z3, z3, z3)
    fe_sqr(a, p.x)
    fe_sqr(b, p.y)
    fe_sqr(c, b)
    fe_add(t, p.x, b)
    fe_sqr(t, t)
    fe_sub(t, t, a)
    fe_sub(t, t, c)
    fe_add(d, t, t)
    fe_add(e, a, a)
    fe_add(e, e, a)
    fe_sqr(f, e)
    fe_sub(t, f, d)
    fe_sub(r.x, t, d)
    fe_sub(t, d, r.x)
    fe_mul(t, e, t)
    fe_add(c, c, c)
    fe_add(c, c, c)
    fe_add(c, c, c)
    fe_sub(r.y, t, c)
    fe_set(r.z, z3)


cdef void pt_add(JPt* r, const JPt* p, const JPt* q) nogil:
    cdef u64 z1s[4], z2s[4], u1[4], u2[4], s1[4], s2[4]
    cdef u64 h[4], rr[4], h2[4], h3[4], u1h2[4], t[4]
    if pt_is_inf(p):
        r[0] = q[0]
        return
    if pt_is_inf(q):
        r[0] = p[0]
        return
    fe_sqr(z1s, p.z)
    fe_sqr(z2s, q.z)
    fe_mul(u1, p.x, z2s)
    fe_mul(u2, q.x, z1s)
    fe_mul(t, z2s, q.z)
    fe_mul(s1, p.y, t)
    fe_mul(t, z1s, p.z)
    fe_mul(s2, q.y, t)
    fe_sub(h, u2, u1)
    fe_sub(rr, s2, s1)
    if fe_is_zero(h):
        if fe_is_zero(rr):
            pt_double(r, p)
        else:
            pt_set_inf(r)
        return
    fe_sqr(h2, h)
    fe_mul(h3, h2, h)
    fe_mul(u1h2, u1, h2)
    fe_sqr(t, rr)
    fe_sub(t, t, h3)
    fe_sub(t, t, u1h2)
    fe_sub(r.x, t, u1h2)
    fe_sub(t, u1h2, r.x)
    fe_mul(t, rr, t)
    fe_mul(h3, s1, h3)
    fe_sub(r.y, t, h3)
    fe_mul(t, p.z, q.z)
    fe_mul(r.z, t, h)


cdef void pt_mul_window(JPt* r, const JPt* p, const unsigned char* nibs) nogil:
    # nibs: 64 nibbles, most significant first
    cdef JPt table[16]
    cdef int i
    pt_set_inf(&table[0])
    table[1] = p[0]
    for i in range(2, 16):
        pt_add(&table[i], &table[i - 1], p)
    pt_set_inf(r)
    for i in range(64):
        pt_double(r, r)
        pt_double(r, r)
        pt_double(r, r)
        pt_double(r, r)
        if nibs[i]:
            pt_add(r, r, &table[nibs[i]])


cdef void scalar_nibbles(object k, unsigned char* nibs):
    cdef bytes raw = int(k).to_bytes(32, "big")
    cdef const unsigned char* s = raw
    cdef int i
    for i in range(32):
        nibs[2 * i] = s[i] >> 4
        nibs[2 * i + 1] = s[i] & 0xF


cdef object pt_to_py(const JPt* p):
    cdef u64 zi[4], zi2[4], xa[4], ya[4]
    if pt_is_inf(p):
        return None
    fe_inv(zi, p.z)
    fe_sqr(zi2, zi)
    fe_mul(xa, p.x, zi2)
    fe_mul(zi2, zi2, zi)
    fe_mul(ya, p.y, zi2)
    return (fe_to_int(xa), fe_to_int(ya))


cdef int pt_from_py(JPt* r, object pt) except -1:
    if pt is None:
        pt_set_inf(r)
        return 0
    fe_from_int(r.x, pt[0])
    fe_from_int(r.y, pt[1])
    memset(r.z, 0, sizeof(r.z))
    r.z[0] = 1
    return 0


# ------------------------------------------------------------- fixed base G

cdef JPt G_TABLE[64][16]

cdef void _init_g_table():
    cdef JPt base
    cdef int w, m
    fe_from_int(base.x, GX)
    fe_from_int(base.y, GY)
    memset(base.z, 0, sizeof(base.z))
    base.z[0] = 1
    for w in range(64):
        pt_set_inf(&G_TABLE[w][0])
        for m in range(1, 16):
            pt_add(&G_TABLE[w][m], &G_TABLE[w][m - 1], &base)
        pt_double(&base, &base)
        pt_double(&base, &base)
        pt_double(&base, &base)
        pt_double(&base, &base)

_init_g_table()


# ------------------------------------------------------------- public shims

def is_on_curve(pt):
    if pt is None:
        return True
    x, y = pt
    if not (0 <= x < P and 0 <= y < P):
        return False
    return (y * y - x * x * x - B) % P == 0


def lift_x(x, odd_y):
    """Recover the affine point with the given x and y-parity, or None."""
    if not 0 <= x < P:
        return None
    y2 = (x * x * x + B) % P
    y = pow(y2, (P + 1) // 4, P)
    if y * y % P != y2:
        return None
    if (y & 1) != odd_y:
        y = P - y
    return (x, y)


def point_neg(pt):
    if pt is None:
        return None
    return (pt[0], (P - pt[1]) % P)


def point_add(p1, p2):
    cdef JPt a, b, r
    pt_from_py(&a, p1)
    pt_from_py(&b, p2)
    pt_add(&r, &a, &b)
    return pt_to_py(&r)


def point_mul(pt, k):
    cdef JPt p, r
    cdef unsigned char nibs[64]
    k = k % N
    if k == 0 or pt is None:
        return None
    pt_from_py(&p, pt)
    scalar_nibbles(k, nibs)
    pt_mul_window(&r, &p, nibs)
    return pt_to_py(&r)


def generator_mul(k):
    cdef JPt acc
    cdef int w, nib
    k = k % N
    if k == 0:
        return None
    pt_set_inf(&acc)
    for w in range(64):
        nib = k & 0xF
        if nib:
            pt_add(&acc, &acc, &G_TABLE[w][nib])
        k >>= 4
    return pt_to_py(&acc)


def multi_mul(pairs):
    """Product of pt_i^(k_i): interleaved 4-bit windows (Straus)."""
    cdef int n, i, w
    cdef JPt* tables
    cdef unsigned char* nibs
    cdef JPt acc
    cdef unsigned char nib

    reduced = []
    for pt, k in pairs:
        k = k % N
        if k and pt is not None:
            reduced.append((pt, k))
    n = len(reduced)
    if n == 0:
        return None

    tables = <JPt*>malloc(n * 16 * sizeof(JPt))
    nibs = <unsigned char*>malloc(n * 64)
    if tables == NULL or nibs == NULL:
        free(tables)
        free(nibs)
        raise MemoryError()
    try:
        for i in range(n):
            pt_from_py(&tables[i * 16 + 1], reduced[i][0])
            pt_set_inf(&tables[i * 16])
            for w in range(2, 16):
                pt_add(&tables[i * 16 + w], &tables[i * 16 + w - 1],
                       &tables[i * 16 + 1])
            scalar_nibbles(reduced[i][1], &nibs[i * 64])
        pt_set_inf(&acc)
        for w in range(64):
            pt_double(&acc, &acc)
            pt_double(&acc, &acc)
            pt_double(&acc, &acc)
            pt_double(&acc, &acc)
            for i in range(n):
                nib = nibs[i * 64 + w]
                if nib:
                    pt_add(&acc, &acc, &tables[i * 16 + nib])
        return pt_to_py(&acc)
    finally:
        free(tables)
        free(nibs)
