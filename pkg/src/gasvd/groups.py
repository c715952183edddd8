"""The group of multivectors with ``dagger(M) M = e`` and its Lie algebra."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .algebra import AlgebraContext, BasisElement, Multivector

DEFAULT_MEMBERSHIP_TOL = 1e-10


@dataclass(frozen=True)
class GroupInfo:
    """Classical matrix group isomorphic to the unit group of ``ctx``.

    ``family`` is ``"O"``, ``"U"`` or ``"Sp"``; ``factors == 2`` denotes the
    direct product of two copies of ``family(k)``.
    """

    ctx: AlgebraContext
    family: str
    k: int
    factors: int
    dim: int

    @property
    def name(self) -> str:
        one = f"{self.family}({self.k})"
        return one if self.factors == 1 else f"{one}x{one}"


def membership_residual(m: Multivector) -> float:
    return (m.dagger() * m - m.ctx.scalar(1.0)).norm()


def is_group_element(m: Multivector, tol: float = DEFAULT_MEMBERSHIP_TOL) -> bool:
    return membership_residual(m) <= tol


def lie_algebra_basis(ctx: AlgebraContext) -> list[BasisElement]:
    """Anti-Hermitian basis elements, found by enumeration.

    In a complexified algebra exactly one of ``e_A`` and ``i e_A`` is
    anti-Hermitian for every blade.
    """
    out = []
    for a in range(ctx.dim):
        candidates = [BasisElement(a)]
        if ctx.complexified:
            candidates.append(BasisElement(a, True))
        for el in candidates:
            m = el.multivector(ctx)
            if m.dagger() == -m:
                out.append(el)
    return out


def group_dimension(ctx: AlgebraContext) -> int:
    n = ctx.n
    if ctx.complexified:
        return 1 << n
    r = ctx.residue
    half = 1 << (n - 1)
    if r in (0, 2):
        return half - (1 << ((n - 2) // 2))
    if r == 1:
        return half - (1 << ((n - 1) // 2))
    if r in (3, 7):
        return half
    if r in (4, 6):
        return half + (1 << ((n - 2) // 2))
    return half + (1 << ((n - 1) // 2))


def iso_class(ctx: AlgebraContext) -> GroupInfo:
    n = ctx.n
    if ctx.complexified:
        if n % 2 == 0:
            family, k, factors = "U", 1 << (n // 2), 1
        else:
            family, k, factors = "U", 1 << ((n - 1) // 2), 2
    else:
        r = ctx.residue
        family, k, factors = {
            0: ("O", n // 2, 1), 2: ("O", n // 2, 1),
            1: ("O", (n - 1) // 2, 2),
            3: ("U", (n - 1) // 2, 1), 7: ("U", (n - 1) // 2, 1),
            4: ("Sp", (n - 2) // 2, 1), 6: ("Sp", (n - 2) // 2, 1),
            5: ("Sp", (n - 3) // 2, 2),
        }[r]
        k = 1 << k
    return GroupInfo(ctx, family, k, factors, group_dimension(ctx))


def random_group_element(ctx: AlgebraContext, rng: np.random.Generator, length: int = 4) -> Multivector:
    """Product of random unit combinations ``cos t e + sin t b`` with ``b`` anti-Hermitian.

    Each factor ``f`` satisfies ``dagger(f) f = e`` because ``b^2 = -e`` for an
    anti-Hermitian basis element ``b``.
    """
    basis = lie_algebra_basis(ctx)
    out = ctx.scalar(1.0)
    for _ in range(length):
        b = basis[rng.integers(len(basis))].multivector(ctx)
        t = rng.uniform(0, 2 * np.pi)
        out = out * (ctx.scalar(np.cos(t)) + np.sin(t) * b)
    return out
