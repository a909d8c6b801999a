"""Small shared helpers."""

from __future__ import annotations

import hashlib


def derive_seed(*parts) -> int:
    """Stable 64-bit seed from arbitrary repr-able parts.

    Uses sha256 rather than hash() so results do not depend on the process's
    hash randomization; identical inputs give identical streams everywhere.
    """
    blob = "\x1f".join(repr(p) for p in parts).encode()
    return int.from_bytes(hashlib.sha256(blob).digest()[:8], "big")
