"""SVD and polar decomposition of square matrices over R, C and H.

A single cyclic one-sided Jacobi iteration serves all three rings: each
column pair is rotated by a 2x2 ring-unitary matrix built from a real
Jacobi rotation and the unit phase of the pair's inner product.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence
from .rings import RingMatrix, qconj, qmul

DEFAULT_TOL = 1e-12
DEFAULT_MAX_SWEEPS = 60


class _Columns:
    """Column kernels for one ring; quaternion entries use a trailing axis of 4."""

    def __init__(self, ring: str):
        self.quat = ring == "H"

    def inner(self, x, y):
        if self.quat:
            return qmul(qconj(x), y).sum(axis=0)
        return np.vdot(x, y)

    def sqnorm(self, x) -> float:
        return float(np.sum(np.abs(x) ** 2))

    def absval(self, s) -> float:
        return float(np.sqrt(np.sum(np.abs(s) ** 2))) if self.quat else float(abs(s))

    def conj(self, s):
        return qconj(s) if self.quat else np.conj(s)

    def rmul(self, x, s):
        # column times ring scalar, scalar on the right
        return qmul(x, s[None, :]) if self.quat else x * s

    def unit(self, size: int, k: int, dtype):
        v = np.zeros((size, 4) if self.quat else size, dtype=dtype)
        if self.quat:
            v[k, 0] = 1.0
        else:
            v[k] = 1.0
        return v


@dataclass(frozen=True)
class MatrixSvd:
    """``A = U diag(sigma) V^H`` with ring-unitary ``U``, ``V``."""

    U: RingMatrix
    sigma: np.ndarray
    V: RingMatrix
    sweeps_used: int

    @property
    def Sigma(self) -> RingMatrix:
        return RingMatrix.diag(self.U.ring, self.sigma, self.U.blocks)

    def reconstruct(self) -> RingMatrix:
        return self.U @ self.Sigma @ self.V.conj_transpose()


def unitarity_residual(u: RingMatrix) -> float:
    """Frobenius distance of ``U^H U`` from the identity."""
    eye = RingMatrix.identity(u.ring, u.size, u.blocks)
    return (u.conj_transpose() @ u - eye).norm()


def svd(a: RingMatrix, tol: float = DEFAULT_TOL, max_sweeps: int = DEFAULT_MAX_SWEEPS) -> MatrixSvd:
    """Singular value decomposition of a square ring matrix.

    Two-block matrices are decomposed block by block; singular values are
    sorted in decreasing order within each block.

    Raises
    ------
    NoConvergence
        If a column pair still needs rotating after ``max_sweeps`` sweeps.
    """
    if tol <= 0:
        raise ValueError("tol must be positive")
    if a.blocks == 2:
        first, second = (_svd_single(b, tol, max_sweeps) for b in a.split())
        return MatrixSvd(
            RingMatrix.from_blocks(first.U, second.U),
            np.concatenate([first.sigma, second.sigma]),
            RingMatrix.from_blocks(first.V, second.V),
            max(first.sweeps_used, second.sweeps_used),
        )
    return _svd_single(a, tol, max_sweeps)


def _svd_single(a: RingMatrix, tol: float, max_sweeps: int) -> MatrixSvd:
    ops = _Columns(a.ring)
    size = a.size
    work = a.data.copy()
    v = RingMatrix.identity(a.ring, size).data.copy()
    anorm = a.norm()

    sweeps = 0
    converged = size < 2
    while not converged:
        if sweeps == max_sweeps:
            raise NoConvergence(f"Jacobi SVD not converged after {max_sweeps} sweeps")
        sweeps += 1
        rotated = False
        for p in range(size - 1):
            for q in range(p + 1, size):
                rotated |= _rotate(ops, work, v, p, q, tol)
        converged = not rotated

    sigma = np.sqrt([ops.sqnorm(work[:, j]) for j in range(size)])
    order = np.argsort(-sigma, kind="stable")
    sigma = sigma[order]
    work = work[:, order]
    v = v[:, order]

    u = np.zeros_like(work)
    cutoff = tol * anorm
    live = [j for j in range(size) if sigma[j] > cutoff and sigma[j] > 0]
    for j in live:
        u[:, j] = work[:, j] / sigma[j]
    dead = [j for j in range(size) if j not in live]
    sigma[dead] = 0.0
    _complete_basis(ops, u, live, dead)

    return MatrixSvd(RingMatrix(a.ring, u), sigma, RingMatrix(a.ring, v), sweeps)


def _rotate(ops: _Columns, work, v, p: int, q: int, tol: float) -> bool:
    ap, aq = work[:, p], work[:, q]
    alpha, beta = ops.sqnorm(ap), ops.sqnorm(aq)
    gamma = ops.inner(ap, aq)
    g = ops.absval(gamma)
    if g == 0.0 or g <= tol * np.sqrt(alpha * beta):
        return False
    omega = gamma / g
    omega_bar = ops.conj(omega)
    # real Jacobi rotation for [[alpha, g], [g, beta]]
    zeta = (beta - alpha) / (2.0 * g)
    t = -np.copysign(1.0, zeta) / (abs(zeta) + np.hypot(1.0, zeta))
    c = 1.0 / np.hypot(1.0, t)
    s = c * t
    for mat in (work, v):
        xp, xq = mat[:, p].copy(), mat[:, q].copy()
        mat[:, p] = c * xp + s * ops.rmul(xq, omega_bar)
        mat[:, q] = c * xq - s * ops.rmul(xp, omega)
    return True


def _complete_basis(ops: _Columns, u, live, dead):
    """Fill the ``dead`` columns of ``u`` with an orthonormal completion.

    Candidates are the canonical basis vectors in index order, each
    orthogonalized twice against the columns accepted so far.
    """
    size = u.shape[0]
    accepted = list(live)
    candidates = iter(range(size))
    for j in dead:
        for k in candidates:
            x = ops.unit(size, k, u.dtype)
            for _ in range(2):
                for i in accepted:
                    x = x - ops.rmul(u[:, i], ops.inner(u[:, i], x))
            nrm = np.sqrt(ops.sqnorm(x))
            if nrm > 0.5:
                u[:, j] = x / nrm
                accepted.append(j)
                break
        else:  # pragma: no cover - size columns always span
            raise NoConvergence("could not complete the left singular basis")


def polar_from_svd(s: MatrixSvd) -> tuple[RingMatrix, RingMatrix, RingMatrix]:
    """Return ``(W, P, S)`` with ``A = W P = S W``."""
    vh = s.V.conj_transpose()
    sig = s.Sigma
    w = s.U @ vh
    p = s.V @ sig @ vh
    left = s.U @ sig @ s.U.conj_transpose()
    return w, p, left
