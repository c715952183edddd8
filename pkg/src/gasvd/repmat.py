"""The fixed faithful matrix representation of G(p,q) and G^C(p,q).

Real algebras are built recursively from five small base cases with three
signature-changing rules; complexified algebras are built by doubling from
``n = 1``.  During the real recursion every matrix is held as a quaternion
array and only downcast to R or C once the final ring is known.
"""
from __future__ import annotations

from functools import lru_cache, reduce

import numpy as np

from . import blades as _b
from .algebra import AlgebraContext, BasisElement, Multivector
from .errors import ContextMismatch, InternalInvariantViolation, RingMismatch, SizeMismatch
from .rings import RingMatrix, qmatmul

_UNITS = np.eye(4)  # 1, i, j, k


def _qeye(m: int) -> np.ndarray:
    out = np.zeros((m, m, 4))
    out[np.arange(m), np.arange(m), 0] = 1.0
    return out


def _qdiag(*units_and_signs) -> np.ndarray:
    m = len(units_and_signs)
    out = np.zeros((m, m, 4))
    for r, (unit, sign) in enumerate(units_and_signs):
        out[r, r, unit] = sign
    return out


_qmm = qmatmul


def _qblock(tl, tr, bl, br) -> np.ndarray:
    top = np.concatenate([tl, tr], axis=1)
    bottom = np.concatenate([bl, br], axis=1)
    return np.concatenate([top, bottom], axis=0)


def _qdiag2(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    z = np.zeros_like(x)
    return _qblock(x, z, z, y)


def _omega(m: int) -> np.ndarray:
    h = m // 2
    z = np.zeros((h, h, 4))
    return _qblock(z, -_qeye(h), _qeye(h), z)


@lru_cache(maxsize=None)
def _real_generators(p: int, q: int) -> tuple[tuple[np.ndarray, ...], int]:
    """Quaternion-array generator images and matrix size for G(p,q)."""
    if (p, q) == (0, 0):
        return (), 1
    if (p, q) == (1, 0):
        return (_qdiag((0, 1), (0, -1)),), 2
    if (p, q) == (0, 1):
        return (_qdiag((1, 1)),), 1
    if (p, q) == (0, 2):
        return (_qdiag((1, 1)), _qdiag((2, 1))), 1
    if (p, q) == (0, 3):
        return tuple(_qdiag((u, 1), (u, -1)) for u in (1, 2, 3)), 2

    if p >= 1 and q >= 1:
        src, d = _real_generators(p - 1, q - 1)
        if (p - q) % 4 != 1 or _is_split(src, d):
            return _raise_pq(src, d, p - 1, q - 1), 2 * d
        # the Omega rule needs diag(X, -X) sources; reach G(p,q) from G(q+1, p-1) instead
        return _swap_rule(*_real_generators(q + 1, p - 1), q + 1)
    if q == 0:
        # G(p, 0) from G(1, p-1)
        return _swap_rule(*_real_generators(1, p - 1), 1)
    # p == 0, q >= 4: G(0, q) from G(4, q-4)
    src, d = _real_generators(4, q - 4)
    head = reduce(_qmm, src[:4])
    return tuple(_qmm(b, head) for b in src[:4]) + tuple(src[4:]), d


def _swap_rule(src, d: int, p: int):
    """G(q+1, p-1) from G(p, q): e_1 -> b_1, e_i -> b_i b_1.

    Images of the source's positive generators 2..p square to -1 and are
    moved behind the rest so the target keeps positives first.
    """
    first = src[0]
    turned = [_qmm(b, first) for b in src[1:]]
    return (first,) + tuple(turned[p - 1:]) + tuple(turned[:p - 1]), d


def _is_split(src, d: int) -> bool:
    # every generator has the block form diag(X, -X)
    h = d // 2
    for b in src:
        if np.any(b[:h, h:]) or np.any(b[h:, :h]) or not np.array_equal(b[h:, h:], -b[:h, :h]):
            return False
    return True


def _raise_pq(src, d: int, p: int, q: int) -> tuple[np.ndarray, ...]:
    """Generators of G(p+1, q+1) from those of G(p, q)."""
    n = p + q
    lifted = [_qdiag2(b, -b) for b in src]
    if (p - q) % 4 == 1:
        om = _omega(d)
        pseudo = reduce(_qmm, src, _qeye(d))
        x = _qmm(pseudo, om)
        extra_pos = _qdiag2(x, -x)
        extra_neg = _qdiag2(om, -om)
    else:
        z = np.zeros((d, d, 4))
        extra_pos = _qblock(z, _qeye(d), _qeye(d), z)
        extra_neg = _qblock(z, -_qeye(d), _qeye(d), z)
    out = lifted[:p] + [extra_pos] + lifted[p:n] + [extra_neg]
    return tuple(out)


def _complex_generators(n: int) -> list[np.ndarray]:
    """Generator images of G^C(n, 0)."""
    gens = [np.diag([1.0 + 0j, -1.0])]
    while len(gens) < n:
        m = len(gens)
        size = gens[0].shape[0]
        if m % 2 == 1:
            h = size // 2
            z = np.zeros((h, h))
            gens.append(np.block([[z, np.eye(h)], [np.eye(h), z]]).astype(complex))
        else:
            k = (m - 2) // 2
            top = (1j ** (k + 1)) * reduce(np.matmul, gens)
            z = np.zeros((size, size))
            gens = [np.block([[b, z], [z, -b]]) for b in gens]
            gens.append(np.block([[top, z], [z, -top]]))
    return gens


def _downcast(a: np.ndarray, ring: str) -> np.ndarray:
    if ring == "H":
        return a
    if ring == "R":
        if np.any(a[..., 1:] != 0):
            raise InternalInvariantViolation("non-real entry in a real representation")
        return a[..., 0].copy()
    if np.any(a[..., 2:] != 0):
        raise InternalInvariantViolation("j/k entry in a complex representation")
    return a[..., 0] + 1j * a[..., 1]


class RepTable:
    """Cached images of every basis blade of one algebra context."""

    def __init__(self, ctx: AlgebraContext):
        self.ctx = ctx
        ring, blocks = ctx.ring, ctx.blocks
        if ctx.complexified:
            gens = _complex_generators(ctx.n)
            gens = [g if a < ctx.p else 1j * g for a, g in enumerate(gens)]
        else:
            qgens, _ = _real_generators(ctx.p, ctx.q)
            gens = [_downcast(g, ring) for g in qgens]
        size = gens[0].shape[0]
        if size != ctx.matrix_size:
            raise InternalInvariantViolation(
                f"built size {size} for {ctx}, expected {ctx.matrix_size}")
        self.size = size

        images = np.empty((ctx.dim,) + gens[0].shape, dtype=gens[0].dtype)
        images[0] = RingMatrix.identity(ring, size).data
        for a in range(1, ctx.dim):
            top = a.bit_length() - 1
            images[a] = _mm(ring, images[a ^ (1 << top)], gens[top])
        images.setflags(write=False)
        self.images = images
        self.generators = [RingMatrix(ring, g, blocks) for g in gens]
        # real-component view used by the trace projection
        flat = images.reshape(ctx.dim, -1)
        if ring == "C" and not ctx.complexified:
            flat = np.concatenate([flat.real, flat.imag], axis=1)
        self._flat = flat
        self.k_members = self._scan_k()
        self.omega = RingMatrix(ring, _downcast(_omega(size), ring)) if size % 2 == 0 else None

    def _scan_k(self) -> tuple[BasisElement, ...]:
        out = []
        for a in range(self.ctx.dim):
            img = self.blade_image(a)
            if img.is_real_diagonal():
                out.append(BasisElement(a))
            elif self.ctx.complexified and RingMatrix("C", 1j * img.data).is_real_diagonal():
                out.append(BasisElement(a, True))
        if len(out) != self.size:
            raise InternalInvariantViolation(
                f"K-subspace of {self.ctx} has {len(out)} members, expected {self.size}")
        return tuple(out)

    def blade_image(self, blade: int) -> RingMatrix:
        return RingMatrix(self.ctx.ring, self.images[blade], self.ctx.blocks)

    def forward(self, m: Multivector) -> RingMatrix:
        if m.ctx != self.ctx:
            raise ContextMismatch(f"{m.ctx} vs {self.ctx}")
        data = np.tensordot(m.coeffs, self.images, axes=1)
        return RingMatrix(self.ctx.ring, data, self.ctx.blocks)

    def inverse(self, x: RingMatrix) -> Multivector:
        ctx = self.ctx
        if x.ring != ctx.ring:
            raise RingMismatch(f"{x.ring}-matrix for a {ctx.ring} representation of {ctx}")
        if x.size != self.size:
            raise SizeMismatch(f"size {x.size}, expected {self.size}")
        flat = x.data.reshape(-1)
        if ctx.complexified:
            coeffs = np.conj(self._flat) @ flat / self.size
        else:
            if ctx.ring == "C":
                flat = np.concatenate([flat.real, flat.imag])
            coeffs = self._flat @ flat / self.size
        return Multivector(ctx, coeffs)


def _mm(ring: str, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    return _qmm(a, b) if ring == "H" else a @ b


@lru_cache(maxsize=None)
def build_rep(ctx: AlgebraContext) -> RepTable:
    # lru_cache may build twice under a concurrent first call; both results are identical
    return RepTable(ctx)


def rep_forward(m: Multivector, rep: RepTable | None = None) -> RingMatrix:
    return (rep or build_rep(m.ctx)).forward(m)


def rep_inverse(x: RingMatrix, rep: RepTable) -> Multivector:
    return rep.inverse(x)


def dagger_consistency_check(m: Multivector, rep: RepTable | None = None) -> bool:
    """Does the representation carry Hermitian conjugation to the ring conjugate transpose?"""
    rep = rep or build_rep(m.ctx)
    lhs = rep.forward(m.dagger())
    rhs = rep.forward(m).conj_transpose()
    scale = max(1.0, rhs.norm())
    return (lhs - rhs).norm() <= 1e-10 * scale
