"""Pure-Python secp256k1 arithmetic.

Fallback backend used when the compiled kernel is unavailable, and the
correctness oracle the compiled kernel is tested against.  Points cross the
API boundary as affine ``(x, y)`` integer pairs with ``None`` for the
identity; internally everything runs in Jacobian coordinates so a scalar
multiplication costs a single field inversion.
"""

from __future__ import annotations

import heapq

NAME = "pure"

P = 0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFEFFFFFC2F
N = 0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFEBAAEDCE6AF48A03BBFD25E8CD0364141
GX = 0x79BE667EF9DCBBAC55A06295CE870B07029BFCDB2DCE28D959F2815B16F81798
GY = 0x483ADA7726A3C4655DA4FBFC0E1108A8FD17B448A68554199C47D08FFB10D4B8
B = 7

# Jacobian triples (X, Y, Z); Z == 0 encodes the point at infinity.
_J_INF = (0, 0, 0)


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


def _to_jacobian(pt):
    if pt is None:
        return _J_INF
    return (pt[0], pt[1], 1)


def _from_jacobian(j):
    x, y, z = j
    if z == 0:
        return None
    zi = pow(z, P - 2, P)
    zi2 = zi * zi % P
    return (x * zi2 % P, y * zi2 * zi % P)


def _j_double(j):
    x, y, z = j
    if z == 0 or y == 0:
        return _J_INF
    a = x * x % P
    b = y * y % P
    c = b * b % P
    d = 2 * ((x + b) * (x + b) - a - c) % P
    e = 3 * a % P
    f = e * e % P
    x3 = (f - 2 * d) % P
    y3 = (e * (d - x3) - 8 * c) % P
    z3 = 2 * y * z % P
    return (x3, y3, z3)


def _j_add(j1, j2):
    x1, y1, z1 = j1
    x2, y2, z2 = j2
    if z1 == 0:
        return j2
    if z2 == 0:
        return j1
    z1s = z1 * z1 % P
    z2s = z2 * z2 % P
    u1 = x1 * z2s % P
    u2 = x2 * z1s % P
    s1 = y1 * z2s * z2 % P
    s2 = y2 * z1s * z1 % P
    h = (u2 - u1) % P
    r = (s2 - s1) % P
    if h == 0:
        if r == 0:
            return _j_double(j1)
        return _J_INF
    h2 = h * h % P
    h3 = h2 * h % P
    u1h2 = u1 * h2 % P
    x3 = (r * r - h3 - 2 * u1h2) % P
    y3 = (r * (u1h2 - x3) - s1 * h3) % P
    z3 = h * z1 * z2 % P
    return (x3, y3, z3)


def _j_mul(j, k):
    k %= N
    if k == 0 or j[2] == 0:
        return _J_INF
    acc = _J_INF
    for bit in bin(k)[2:]:
        acc = _j_double(acc)
        if bit == "1":
            acc = _j_add(acc, j)
    return acc


def point_add(p1, p2):
    return _from_jacobian(_j_add(_to_jacobian(p1), _to_jacobian(p2)))


def point_neg(pt):
    if pt is None:
        return None
    return (pt[0], (P - pt[1]) % P)


def point_mul(pt, k):
    return _from_jacobian(_j_mul(_to_jacobian(pt), k))


# Fixed-base table for G: 4-bit windows, built lazily on first use.
_G_WINDOWS = 64
_g_table = None


def _build_g_table():
    table = []
    base = _to_jacobian((GX, GY))
    for _ in range(_G_WINDOWS):
        row = [_J_INF]
        for m in range(15):
            row.append(_j_add(row[m], base))
        table.append(row)
        base = _j_double(_j_double(_j_double(_j_double(base))))
    return table


def generator_mul(k):
    global _g_table
    if _g_table is None:
        _g_table = _build_g_table()
    k %= N
    acc = _J_INF
    w = 0
    while k:
        nib = k & 0xF
        if nib:
            acc = _j_add(acc, _g_table[w][nib])
        k >>= 4
        w += 1
    return _from_jacobian(acc)


def multi_mul(pairs):
    """Product of pt_i^(k_i) via Bos-Coster's algorithm.

    The classic subtract-largest loop degenerates when one exponent dwarfs
    the rest, so the reduction step uses the quotient variant: the largest
    exponent is reduced mod the second largest and the quotient multiple is
    folded in by a binary multiplication (quotient is 1 for similar-sized
    exponents, which is the common case).
    """
    heap = []
    for pt, k in pairs:
        k %= N
        if k and pt is not None:
            # heapq is a min-heap; negate for max-extraction.
            heapq.heappush(heap, (-k, _to_jacobian(pt)))
    if not heap:
        return None
    while len(heap) > 1:
        k1, j1 = heapq.heappop(heap)
        k2, j2 = heap[0]
        k1, k2 = -k1, -k2
        q, r = divmod(k1, k2)
        folded = _j_add(j2, _j_mul(j1, q) if q > 1 else j1)
        heapq.heapreplace(heap, (-k2, folded))
        if r:
            heapq.heappush(heap, (-r, j1))
    k, j = heap[0]
    return _from_jacobian(_j_mul(j, -k))
