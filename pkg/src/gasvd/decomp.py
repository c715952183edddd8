"""Singular value and polar decomposition of multivectors.

Both decompositions pass through the fixed matrix representation: the
multivector's image is decomposed over its ring and the factors are mapped
back.  Every result is a multivector; ``U``, ``V`` and ``W`` lie in the unit
group, ``Sigma`` in the real span K of the basis elements whose images are
real diagonal.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import AlgebraContext, BasisElement, Multivector, norm
from .errors import InternalInvariantViolation, NegativeDiagonal
from .groups import group_dimension
from .repmat import RepTable, build_rep
from .ring_svd import DEFAULT_MAX_SWEEPS, DEFAULT_TOL, svd
from .rings import RingMatrix


@dataclass(frozen=True)
class KSubspace:
    ctx: AlgebraContext
    members: tuple[BasisElement, ...]

    @property
    def dim(self) -> int:
        return len(self.members)

    @property
    def labels(self) -> list[str]:
        return [m.label for m in self.members]


def k_subspace(ctx: AlgebraContext) -> KSubspace:
    return KSubspace(ctx, build_rep(ctx).k_members)


def k_coordinates(sigma: Multivector) -> np.ndarray:
    """Real coordinates of ``sigma`` along the K members, in member order."""
    out = []
    for el in build_rep(sigma.ctx).k_members:
        c = sigma.coeffs[el.blade]
        out.append(np.imag(c) if el.imaginary else np.real(c))
    return np.array(out, dtype=float)


def _clamp_to_k(m: Multivector, rep: RepTable, threshold: float) -> Multivector:
    """Zero every component of ``m`` outside the real span of K."""
    coeffs = m.coeffs.copy()
    keep = np.zeros(len(coeffs), dtype=coeffs.dtype)
    for el in rep.k_members:
        c = coeffs[el.blade]
        keep[el.blade] = 1j * np.imag(c) if el.imaginary else np.real(c)
    stray = np.max(np.abs(coeffs - keep), initial=0.0)
    if stray > 100 * threshold:
        raise InternalInvariantViolation(f"Sigma leaves K by {stray:.3e}")
    return Multivector(m.ctx, keep)


def _hermitian_part(m: Multivector) -> Multivector:
    return (m + m.dagger()) * 0.5


@dataclass(frozen=True)
class SvdResult:
    """``M = U Sigma dagger(V)``."""

    M: Multivector
    U: Multivector
    Sigma: Multivector
    V: Multivector
    singular_values: np.ndarray

    def reconstruct(self) -> Multivector:
        return self.U * self.Sigma * self.V.dagger()

    def residuals(self) -> dict[str, float]:
        e = self.M.ctx.scalar(1.0)
        return {
            "reconstruction": norm(self.reconstruct() - self.M),
            "u_unitarity": norm(self.U.dagger() * self.U - e),
            "v_unitarity": norm(self.V.dagger() * self.V - e),
        }


@dataclass(frozen=True)
class PolarResult:
    """``M = W P = S W`` with witnesses ``P = dagger(B) B`` and ``S = dagger(C) C``."""

    M: Multivector
    W: Multivector
    P: Multivector
    S: Multivector
    B: Multivector
    C: Multivector

    def residuals(self) -> dict[str, float]:
        m, e = self.M, self.M.ctx.scalar(1.0)
        return {
            "right_polar": norm(self.W * self.P - m),
            "left_polar": norm(self.S * self.W - m),
            "w_unitarity": norm(self.W.dagger() * self.W - e),
            "p_hermitian": norm(self.P.dagger() - self.P),
            "s_hermitian": norm(self.S.dagger() - self.S),
            "p_squared": norm(self.P * self.P - m.dagger() * m),
            "s_squared": norm(self.S * self.S - m * m.dagger()),
            "b_witness": norm(self.B.dagger() * self.B - self.P),
            "c_witness": norm(self.C.dagger() * self.C - self.S),
        }


def svd_ga(m: Multivector, tol: float = DEFAULT_TOL, max_sweeps: int = DEFAULT_MAX_SWEEPS) -> SvdResult:
    """SVD of a multivector.

    Singular values are listed in decreasing order within each diagonal
    block of the representation; for two-block algebras the first block's
    values come first.  ``U`` and ``V`` are not unique when singular values
    repeat or vanish.
    """
    rep = build_rep(m.ctx)
    s = svd(rep.forward(m), tol=tol, max_sweeps=max_sweeps)
    sigma = _clamp_to_k(rep.inverse(s.Sigma), rep, tol * max(1.0, norm(m)))
    return SvdResult(m, rep.inverse(s.U), sigma, rep.inverse(s.V), s.sigma)


def sigma_sqrt(sigma: Multivector, atol: float = 1e-12) -> Multivector:
    """Multivector on K whose image is the entrywise square root of ``sigma``'s image."""
    rep = build_rep(sigma.ctx)
    x = rep.forward(sigma)
    scale = max(1.0, x.norm())
    if not x.is_real_diagonal(atol * scale):
        raise ValueError("Sigma does not have a real diagonal image")
    diag = x.diagonal_real()
    if np.any(diag < -atol * scale):
        raise NegativeDiagonal(f"negative diagonal entry {diag.min():.3e}")
    root = RingMatrix.diag(x.ring, np.sqrt(np.clip(diag, 0.0, None)), x.blocks)
    return _clamp_to_k(rep.inverse(root), rep, atol * scale)


def polar_ga(m: Multivector, tol: float = DEFAULT_TOL, max_sweeps: int = DEFAULT_MAX_SWEEPS) -> PolarResult:
    return polar_from_svd_ga(svd_ga(m, tol=tol, max_sweeps=max_sweeps))


def polar_from_svd_ga(res: SvdResult) -> PolarResult:
    u, sig, v = res.U, res.Sigma, res.V
    ud, vd = u.dagger(), v.dagger()
    root = sigma_sqrt(sig)
    return PolarResult(
        M=res.M,
        W=u * vd,
        P=_hermitian_part(v * sig * vd),
        S=_hermitian_part(u * sig * ud),
        B=root * vd,
        C=root * ud,
    )


def dimension_identity(ctx: AlgebraContext) -> tuple[int, int]:
    """``(dim K + 2 dim G, closed form)``; the two agree for every context."""
    n = ctx.n
    lhs = ctx.matrix_size + 2 * group_dimension(ctx)
    if ctx.complexified:
        return lhs, (1 << (n + 1)) + (1 << ((n + 1) // 2))
    r = ctx.residue
    if r in (0, 1, 2):
        rhs = 1 << n
    elif r in (3, 7):
        rhs = (1 << n) + (1 << ((n - 1) // 2))
    elif r in (4, 6):
        rhs = (1 << n) + 3 * (1 << ((n - 2) // 2))
    else:
        rhs = (1 << n) + 3 * (1 << ((n - 1) // 2))
    return lhs, rhs
