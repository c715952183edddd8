"""Basis blades encoded as bitmasks.

Bit ``a - 1`` of a blade index is set iff generator ``e_a`` occurs in the
blade.  The empty mask is the identity ``e``.  All sign logic is integer
arithmetic; nothing here touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import UnsupportedDimension

MAX_GENERATORS = 12


@dataclass(frozen=True)
class Signature:
    """Metric signature ``(p, q)``: ``p`` generators square to +1, ``q`` to -1."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError(f"negative signature ({self.p}, {self.q})")
        if self.p + self.q < 1:
            raise ValueError("algebra needs at least one generator")
        if self.p + self.q > MAX_GENERATORS:
            raise UnsupportedDimension(
                f"n = {self.p + self.q} exceeds the cap of {MAX_GENERATORS} generators")

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def eta(self) -> tuple[int, ...]:
        return (1,) * self.p + (-1,) * self.q

    @property
    def negative_mask(self) -> int:
        """Bitmask of the generators squaring to -1."""
        return ((1 << self.q) - 1) << self.p


def grade(blade: int) -> int:
    return int(blade).bit_count()


def indices(blade: int) -> tuple[int, ...]:
    """1-based generator indices of ``blade`` in ascending order."""
    return tuple(a + 1 for a in range(blade.bit_length()) if blade >> a & 1)


def from_indices(idx) -> int:
    """Bitmask for a strictly ascending sequence of 1-based indices."""
    blade = 0
    for a in idx:
        blade |= 1 << (a - 1)
    return blade


def blade_name(blade: int) -> str:
    idx = indices(blade)
    if not idx:
        return "e"
    if max(idx) < 10:
        return "e" + "".join(str(a) for a in idx)
    return "e[" + ",".join(str(a) for a in idx) + "]"


def _reorder_parity(a: int, b: int) -> int:
    # transpositions needed to sort the concatenation e_A e_B
    a >>= 1
    swaps = 0
    while a:
        swaps += (a & b).bit_count()
        a >>= 1
    return swaps & 1


def blade_product(a: int, b: int, sig: Signature) -> tuple[int, int]:
    """Return ``(sign, c)`` with ``e_a e_b = sign * e_c``."""
    parity = _reorder_parity(a, b) + (a & b & sig.negative_mask).bit_count()
    return (-1 if parity & 1 else 1), a ^ b


def blade_inverse(a: int, sig: Signature) -> tuple[int, int]:
    """Return ``(sign, a)`` with ``(e_a)^-1 = sign * e_a``."""
    k = grade(a)
    parity = (k * (k - 1) // 2) + (a & sig.negative_mask).bit_count()
    return (-1 if parity & 1 else 1), a


def involution_signs(k: int) -> tuple[int, int]:
    """Signs applied to grade ``k`` by grade involution and by reversion."""
    hat = -1 if k & 1 else 1
    tilde = -1 if (k * (k - 1) // 2) & 1 else 1
    return hat, tilde


@lru_cache(maxsize=None)
def product_tables(sig: Signature) -> tuple[np.ndarray, np.ndarray]:
    """Sign table ``S[a, c]`` and partner table ``I[a, c] = a ^ c``.

    Arranged so that the coefficient of ``e_c`` in a product is
    ``sum_a S[a, c] * x[a] * y[I[a, c]]``.
    """
    n = sig.n
    size = 1 << n
    blades = np.arange(size)
    bits = (blades[:, None] >> np.arange(n)) & 1
    # strictly_above[i, j] = 1 when generator i comes after generator j
    strictly_above = np.tril(np.ones((n, n), dtype=np.int64), -1)
    swaps = bits @ strictly_above @ bits.T
    neg = np.array([1 if a >= sig.p else 0 for a in range(n)], dtype=np.int64)
    squares = (bits * neg) @ bits.T
    signs = 1 - 2 * ((swaps + squares) & 1)
    partner = blades[:, None] ^ blades[None, :]
    rows = blades[:, None]
    table = signs[rows, partner].astype(np.int8)
    table.setflags(write=False)
    partner.setflags(write=False)
    return table, partner


@lru_cache(maxsize=None)
def grade_array(n: int) -> np.ndarray:
    g = np.array([grade(a) for a in range(1 << n)], dtype=np.int64)
    g.setflags(write=False)
    return g


@lru_cache(maxsize=None)
def inverse_signs(sig: Signature) -> np.ndarray:
    s = np.array([blade_inverse(a, sig)[0] for a in range(1 << sig.n)], dtype=np.int8)
    s.setflags(write=False)
    return s
