"""Scalars and square matrices over R, C and the quaternions H.

Quaternion arrays carry the components in a trailing axis of length 4 in
``(w, x, y, z)`` order, meaning ``w + x i + y j + z k``.  Real and complex
matrices are plain float64 / complex128 arrays.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NotSquare, RingMismatch, SizeMismatch

RINGS = ("R", "C", "H")

_QCONJ = np.array([1.0, -1.0, -1.0, -1.0])


def qmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Elementwise quaternion product of broadcastable ``(..., 4)`` arrays."""
    aw, ax, ay, az = np.moveaxis(a, -1, 0)
    bw, bx, by, bz = np.moveaxis(b, -1, 0)
    return np.stack([
        aw * bw - ax * bx - ay * by - az * bz,
        aw * bx + ax * bw + ay * bz - az * by,
        aw * by - ax * bz + ay * bw + az * bx,
        aw * bz + ax * by - ay * bx + az * bw,
    ], axis=-1)


def qmatmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product of quaternion matrices stored as ``(m, k, 4)`` and ``(k, n, 4)`` arrays."""
    aw, ax, ay, az = np.moveaxis(a, -1, 0)
    bw, bx, by, bz = np.moveaxis(b, -1, 0)
    return np.stack([
        aw @ bw - ax @ bx - ay @ by - az @ bz,
        aw @ bx + ax @ bw + ay @ bz - az @ by,
        aw @ by - ax @ bz + ay @ bw + az @ bx,
        aw @ bz + ax @ by - ay @ bx + az @ bw,
    ], axis=-1)


def qconj(a: np.ndarray) -> np.ndarray:
    return a * _QCONJ


@dataclass(frozen=True)
class Quaternion:
    w: float = 0.0
    x: float = 0.0
    y: float = 0.0
    z: float = 0.0

    @classmethod
    def from_array(cls, a) -> "Quaternion":
        return cls(*(float(v) for v in a))

    def to_array(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z])

    def __add__(self, other):
        other = as_quaternion(other)
        return Quaternion.from_array(self.to_array() + other.to_array())

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-as_quaternion(other))

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        return Quaternion.from_array(qmul(self.to_array(), as_quaternion(other).to_array()))

    def __rmul__(self, other):
        return Quaternion.from_array(qmul(as_quaternion(other).to_array(), self.to_array()))

    def conj(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def __abs__(self) -> float:
        return float(np.sqrt(self.w ** 2 + self.x ** 2 + self.y ** 2 + self.z ** 2))

    @property
    def real(self) -> float:
        return self.w


def as_quaternion(v) -> Quaternion:
    if isinstance(v, Quaternion):
        return v
    if isinstance(v, (complex, np.complexfloating)):
        return Quaternion(v.real, v.imag)
    return Quaternion(float(v))


def ring_conj(a):
    if isinstance(a, Quaternion):
        return a.conj()
    return np.conj(a)


def ring_inverse(a):
    if abs(a) == 0:
        raise ZeroDivisionError("inverse of zero ring element")
    if isinstance(a, Quaternion):
        n2 = abs(a) ** 2
        c = a.conj()
        return Quaternion(c.w / n2, c.x / n2, c.y / n2, c.z / n2)
    return 1 / a


def real_part(a) -> float:
    return float(a.real)


# matrices ---------------------------------------------------------------

def _entry_shape(ring: str) -> tuple[int, ...]:
    return (4,) if ring == "H" else ()


def _dtype(ring: str):
    return np.complex128 if ring == "C" else np.float64


@dataclass(frozen=True, eq=False)
class RingMatrix:
    """Square matrix over ``ring``; ``blocks == 2`` marks a two-block diagonal matrix."""

    ring: str
    data: np.ndarray
    blocks: int = 1

    def __post_init__(self):
        if self.ring not in RINGS:
            raise ValueError(f"unknown ring {self.ring!r}")
        data = np.asarray(self.data, dtype=_dtype(self.ring))
        shape = data.shape
        if len(shape) != 2 + len(_entry_shape(self.ring)) or shape[0] != shape[1]:
            raise NotSquare(f"not a square {self.ring}-matrix: shape {shape}")
        if self.blocks not in (1, 2) or shape[0] % self.blocks:
            raise SizeMismatch(f"cannot split size {shape[0]} into {self.blocks} blocks")
        object.__setattr__(self, "data", data)

    @property
    def size(self) -> int:
        return self.data.shape[0]

    # constructors
    @classmethod
    def identity(cls, ring: str, size: int, blocks: int = 1) -> "RingMatrix":
        return cls.diag(ring, np.ones(size), blocks)

    @classmethod
    def diag(cls, ring: str, values, blocks: int = 1) -> "RingMatrix":
        """Matrix with real ``values`` on the diagonal."""
        values = np.asarray(values, dtype=float)
        size = len(values)
        data = np.zeros((size, size) + _entry_shape(ring), dtype=_dtype(ring))
        if ring == "H":
            data[np.arange(size), np.arange(size), 0] = values
        else:
            data[np.arange(size), np.arange(size)] = values
        return cls(ring, data, blocks)

    @classmethod
    def from_blocks(cls, first: "RingMatrix", second: "RingMatrix") -> "RingMatrix":
        _check_pair(first, second)
        h = first.size
        data = np.zeros((2 * h, 2 * h) + _entry_shape(first.ring), dtype=_dtype(first.ring))
        data[:h, :h] = first.data
        data[h:, h:] = second.data
        return cls(first.ring, data, 2)

    def block(self, i: int) -> "RingMatrix":
        h = self.size // self.blocks
        return RingMatrix(self.ring, self.data[i * h:(i + 1) * h, i * h:(i + 1) * h])

    def split(self) -> list["RingMatrix"]:
        return [self.block(i) for i in range(self.blocks)]

    # algebra
    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        _check_pair(self, other)
        return RingMatrix(self.ring, self.data + other.data, _join_blocks(self, other))

    def __sub__(self, other: "RingMatrix") -> "RingMatrix":
        _check_pair(self, other)
        return RingMatrix(self.ring, self.data - other.data, _join_blocks(self, other))

    def __neg__(self) -> "RingMatrix":
        return RingMatrix(self.ring, -self.data, self.blocks)

    def scale(self, lam: float) -> "RingMatrix":
        """Multiply by a real scalar (central in every ring)."""
        return RingMatrix(self.ring, self.data * float(lam), self.blocks)

    def __matmul__(self, other: "RingMatrix") -> "RingMatrix":
        _check_pair(self, other)
        if self.ring == "H":
            data = qmatmul(self.data, other.data)
        else:
            data = self.data @ other.data
        return RingMatrix(self.ring, data, _join_blocks(self, other))

    def conj_transpose(self) -> "RingMatrix":
        """Transpose (R), Hermitian transpose (C) or quaternion conjugate transpose (H)."""
        if self.ring == "H":
            data = qconj(self.data.transpose(1, 0, 2))
        else:
            data = np.conj(self.data.T)
        return RingMatrix(self.ring, data, self.blocks)

    @property
    def H(self) -> "RingMatrix":
        return self.conj_transpose()

    def real_trace(self) -> float:
        """Real part of the trace (the ``w`` component for quaternions)."""
        d = np.arange(self.size)
        if self.ring == "H":
            return float(self.data[d, d, 0].sum())
        return float(np.real(self.data[d, d].sum()))

    def norm(self) -> float:
        """Frobenius norm."""
        return float(np.sqrt(np.sum(np.abs(self.data) ** 2)))

    def entry(self, i: int, j: int):
        v = self.data[i, j]
        if self.ring == "H":
            return Quaternion.from_array(v)
        return v.item()

    def is_real_diagonal(self, atol: float = 0.0) -> bool:
        """True when every off-diagonal entry and every non-real part is within ``atol``."""
        d = np.arange(self.size)
        mask = np.ones((self.size, self.size), dtype=bool)
        mask[d, d] = False
        data = self.data
        if self.ring == "H":
            off = np.abs(data[mask]).max(initial=0.0)
            imag = np.abs(data[d, d, 1:]).max(initial=0.0)
        else:
            off = np.abs(data[mask]).max(initial=0.0)
            imag = np.abs(np.imag(data[d, d])).max(initial=0.0)
        return bool(off <= atol and imag <= atol)

    def diagonal_real(self) -> np.ndarray:
        d = np.arange(self.size)
        if self.ring == "H":
            return self.data[d, d, 0].copy()
        return np.real(self.data[d, d]).copy()

    def to_complex(self) -> "RingMatrix":
        """Lift an R-matrix to C, or an H-matrix to its complex adjoint."""
        if self.ring == "R":
            return RingMatrix("C", self.data.astype(complex), self.blocks)
        if self.ring == "H":
            return complex_adjoint(self)
        return self

    def to_quaternion(self) -> "RingMatrix":
        """Embed R or C entries into H (``x + y i`` with ``i`` the first unit)."""
        if self.ring == "H":
            return self
        data = np.zeros(self.data.shape + (4,))
        data[..., 0] = np.real(self.data)
        data[..., 1] = np.imag(self.data)
        return RingMatrix("H", data, self.blocks)

    def allclose(self, other: "RingMatrix", atol: float = 1e-10) -> bool:
        _check_pair(self, other)
        return bool(np.max(np.abs(self.data - other.data), initial=0.0) <= atol)


def _check_pair(a: RingMatrix, b: RingMatrix):
    if a.ring != b.ring:
        raise RingMismatch(f"{a.ring} vs {b.ring}")
    if a.size != b.size:
        raise SizeMismatch(f"{a.size} vs {b.size}")


def _join_blocks(a: RingMatrix, b: RingMatrix) -> int:
    return a.blocks if a.blocks == b.blocks else 1


def complex_adjoint(a: RingMatrix) -> RingMatrix:
    """Map an H-matrix of size d to the C-matrix of size 2d.

    With ``q = z1 + z2 j`` (``z1 = w + x i``, ``z2 = y + z i``) each entry
    becomes the block ``[[z1, z2], [-conj(z2), conj(z1)]]``; the map
    preserves sums, products and conjugate transposes.
    """
    if a.ring != "H":
        raise RingMismatch("complex_adjoint expects a quaternion matrix")
    z1 = a.data[..., 0] + 1j * a.data[..., 1]
    z2 = a.data[..., 2] + 1j * a.data[..., 3]
    return RingMatrix("C", np.block([[z1, z2], [-np.conj(z2), np.conj(z1)]]))
