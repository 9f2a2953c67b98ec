"""Domain-separated hashing and canonical encodings.

All protocol hashes go through one framing rule: a single tag byte, then
each input part prefixed with its 4-byte big-endian length.  Distinct tags
or distinct part boundaries therefore never collide on the framed input.

Tags and what they key:

==========  =====================================================
``UID``     event identifier over (sorted key list, timestamp)
``COM``     commitment binding a reveal message
``AGG``     per-member key-aggregation coefficients
``APP``     approval challenge
``MASK``    digest of a reconstruction parameter
``VID``     identity/commitment/cluster-key hashes for audit
``SIG``     plain signature challenge (key-prefixed)
``KDF``     pairwise mask / symmetric-key / nonce derivation
==========  =====================================================
"""

from __future__ import annotations

import hashlib

TAGS = {
    "UID": 0x01,
    "COM": 0x02,
    "AGG": 0x03,
    "APP": 0x04,
    "MASK": 0x05,
    "VID": 0x06,
    "SIG": 0x07,
    "KDF": 0x08,
}

DIGEST_LEN = 32


class UnknownTagError(KeyError):
    pass


def domain_hash(tag: str, parts) -> bytes:
    """256-bit digest of the framed parts under the given domain tag."""
    try:
        tag_byte = TAGS[tag]
    except KeyError:
        raise UnknownTagError(tag) from None
    h = hashlib.sha256()
    h.update(bytes([tag_byte]))
    for part in parts:
        h.update(len(part).to_bytes(4, "big"))
        h.update(part)
    return h.digest()


def domain_hash_scalar(tag: str, parts, q: int) -> int:
    """Digest reduced mod q; bias is negligible for 256-bit digests."""
    return int.from_bytes(domain_hash(tag, parts), "big") % q


def canonical_encode_keys(group, pks) -> bytes:
    """Order-independent encoding of a public-key list.

    Keys are encoded, sorted bytewise, and concatenated behind a 4-byte
    element count, so any permutation of the same keys yields identical
    bytes and distinct key multisets yield distinct bytes.
    """
    if not pks:
        raise ValueError("empty key list")
    enc = sorted(group.encode(pk) for pk in pks)
    return len(enc).to_bytes(4, "big") + b"".join(enc)


def compute_uid(group, pks, tmp1: int) -> bytes:
    """Digest identifying one aggregation event: (cluster keys, timestamp)."""
    return domain_hash(
        "UID", [canonical_encode_keys(group, pks), int(tmp1).to_bytes(8, "big")]
    )
