"""Counter-based deterministic randomness.

Every randomized routine in the package derives its bits from explicit
(seed, index, ...) tuples through splitmix64, so outputs are reproducible
across platforms and runs. There is no global RNG state anywhere.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _mix(x: int) -> int:
    x &= _MASK
    x = ((x ^ (x >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    x = ((x ^ (x >> 27)) * 0x94D049BB133111EB) & _MASK
    return x ^ (x >> 31)


def blend(seed: int, *indices: int) -> int:
    """64-bit hash of (seed, *indices); uniform and platform-stable."""
    h = _mix((seed + _GOLDEN) & _MASK)
    for ix in indices:
        h = _mix(h ^ _mix((ix + _GOLDEN) & _MASK))
    return h


def coin(seed: int, *indices: int) -> int:
    """A single deterministic coin flip in {0, 1}."""
    return blend(seed, *indices) & 1


def below(seed: int, bound: int, *indices: int) -> int:
    """Deterministic integer in [0, bound).

    Modulo bias is negligible for bound << 2**64.
    """
    return blend(seed, *indices) % bound
