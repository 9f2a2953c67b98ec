"""Prime-order group abstraction shared by every protocol layer.

Two parameterizations:

* :class:`CurveGroup` -- secp256k1, the production group.  Elements are
  affine ``(x, y)`` tuples (``None`` = identity); the hot operations are
  delegated to the selected curve backend.
* :class:`ToyGroup` -- a small multiplicative Schnorr subgroup (default
  p=23, q=11, g=2) where every value can be checked by hand or by
  exhaustive enumeration.  First-class, so oracle tests run the identical
  code paths as production.

Scalars are plain Python ints, always kept in ``[0, q)``.  Elements encode
to a fixed 33 bytes so wire sizes are the same for both parameterizations.

Group instances count the exponentiations they perform (``exp_count``);
the simulator reports these in its metrics, and the counter is the only
mutable state on a group object.
"""

from __future__ import annotations

import hashlib

from . import backend

ENC_LEN = 33


class GroupError(ValueError):
    """Invalid element bytes or off-group value."""


class CurveGroup:
    """secp256k1 with compressed SEC1-style encodings."""

    name = "secp256k1"

    def __init__(self, ec=None):
        self._ec = ec or backend.active
        self.q = self._ec.N
        self.g = (self._ec.GX, self._ec.GY)
        self.identity = None
        self.exp_count = 0

    def is_valid(self, e) -> bool:
        return self._ec.is_on_curve(e)

    def mul(self, a, b):
        return self._ec.point_add(a, b)

    def inv(self, a):
        return self._ec.point_neg(a)

    def exp(self, base, k: int):
        self.exp_count += 1
        return self._ec.point_mul(base, k)

    def exp_g(self, k: int):
        self.exp_count += 1
        return self._ec.generator_mul(k)

    def multiexp(self, pairs):
        """Product of base^k over (base, k) pairs; counts one exp per pair."""
        pairs = list(pairs)
        self.exp_count += len(pairs)
        return self._ec.multi_mul(pairs)

    def encode(self, e) -> bytes:
        if e is None:
            return b"\x00" * ENC_LEN
        if not self._ec.is_on_curve(e):
            raise GroupError("point not on curve")
        x, y = e
        return bytes([2 + (y & 1)]) + x.to_bytes(32, "big")

    def decode(self, raw: bytes):
        if len(raw) != ENC_LEN:
            raise GroupError(f"expected {ENC_LEN} bytes, got {len(raw)}")
        if raw == b"\x00" * ENC_LEN:
            return None
        if raw[0] not in (2, 3):
            raise GroupError("bad point prefix")
        pt = self._ec.lift_x(int.from_bytes(raw[1:], "big"), raw[0] & 1)
        if pt is None:
            raise GroupError("x not on curve")
        return pt

    def hash_to_group(self, seed: bytes):
        """Try-and-increment; the discrete log of the result is unknown."""
        ctr = 0
        while True:
            h = hashlib.sha256(b"h2g" + seed + ctr.to_bytes(4, "big")).digest()
            pt = self._ec.lift_x(int.from_bytes(h, "big") % self._ec.P, 0)
            if pt is not None:
                return pt
            ctr += 1


class ToyGroup:
    """Order-q multiplicative subgroup of Z_p*; small enough to enumerate."""

    name = "toy"

    def __init__(self, p: int = 23, q: int = 11, g: int = 2):
        if pow(g, q, p) != 1 or g == 1:
            raise GroupError("generator does not have order q")
        self.p = p
        self.q = q
        self.g = g
        self.identity = 1
        self.exp_count = 0

    def is_valid(self, e) -> bool:
        return isinstance(e, int) and 0 < e < self.p and pow(e, self.q, self.p) == 1

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        return pow(a, self.p - 2, self.p)

    def exp(self, base, k: int):
        self.exp_count += 1
        return pow(base, k % self.q, self.p)

    def exp_g(self, k: int):
        self.exp_count += 1
        return pow(self.g, k % self.q, self.p)

    def multiexp(self, pairs):
        pairs = list(pairs)
        self.exp_count += len(pairs)
        out = 1
        for base, k in pairs:
            out = out * pow(base, k % self.q, self.p) % self.p
        return out

    def encode(self, e) -> bytes:
        if not self.is_valid(e):
            raise GroupError("element not in subgroup")
        return e.to_bytes(ENC_LEN, "big")

    def decode(self, raw: bytes):
        if len(raw) != ENC_LEN:
            raise GroupError(f"expected {ENC_LEN} bytes, got {len(raw)}")
        v = int.from_bytes(raw, "big")
        if not self.is_valid(v):
            raise GroupError("off-group bytes")
        return v

    def hash_to_group(self, seed: bytes):
        ctr = 0
        while True:
            h = hashlib.sha256(b"h2g" + seed + ctr.to_bytes(4, "big")).digest()
            v = int.from_bytes(h, "big") % self.p
            if v > 1 and self.is_valid(v):
                return v
            ctr += 1


def get_group(name: str):
    if name == "secp256k1":
        return CurveGroup()
    if name == "toy":
        return ToyGroup()
    raise GroupError(f"unknown group {name!r}")


def random_scalar(group, rng) -> int:
    """Uniform nonzero scalar in [1, q)."""
    return rng.randrange(1, group.q)
