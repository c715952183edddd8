"""Algebra contexts and dense multivectors for G(p,q) and its complexification."""
from __future__ import annotations

import numbers
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import blades as _b
from .blades import Signature
from .errors import ComplexScalarInRealContext, ContextMismatch, GradeOutOfRange

# (p - q) mod 8 -> (ring, number of diagonal blocks)
_REAL_CLASS = {
    0: ("R", 1), 2: ("R", 1),
    1: ("R", 2),
    3: ("C", 1), 7: ("C", 1),
    4: ("H", 1), 6: ("H", 1),
    5: ("H", 2),
}


@dataclass(frozen=True)
class AlgebraContext:
    """A real algebra G(p,q), or its complexification when ``complexified``.

    The ring, block count and matrix size follow the Cartan-Bott table for
    real algebras and the parity of ``n`` for complexified ones.
    """

    sig: Signature
    complexified: bool = False

    @classmethod
    def of(cls, p: int, q: int, complexified: bool = False) -> "AlgebraContext":
        return cls(Signature(p, q), bool(complexified))

    @property
    def p(self) -> int:
        return self.sig.p

    @property
    def q(self) -> int:
        return self.sig.q

    @property
    def n(self) -> int:
        return self.sig.n

    @property
    def dim(self) -> int:
        return 1 << self.n

    @property
    def residue(self) -> int:
        return (self.p - self.q) % 8

    @property
    def ring(self) -> str:
        if self.complexified:
            return "C"
        return _REAL_CLASS[self.residue][0]

    @property
    def blocks(self) -> int:
        if self.complexified:
            return 2 if self.n % 2 else 1
        return _REAL_CLASS[self.residue][1]

    @property
    def matrix_size(self) -> int:
        """``d`` for real algebras, ``N`` for complexified ones."""
        n = self.n
        if self.complexified:
            return 1 << ((n + 1) // 2)
        r = self.residue
        if r in (0, 2):
            return 1 << (n // 2)
        if r == 1:
            return 1 << ((n + 1) // 2)
        if r in (3, 5, 7):
            return 1 << ((n - 1) // 2)
        return 1 << ((n - 2) // 2)

    @property
    def dtype(self):
        return np.complex128 if self.complexified else np.float64

    def __str__(self):
        prefix = "G^C" if self.complexified else "G"
        return f"{prefix}({self.p},{self.q})"

    # constructors ---------------------------------------------------------

    def zero(self) -> "Multivector":
        return Multivector(self, np.zeros(self.dim, dtype=self.dtype))

    def scalar(self, value=1.0) -> "Multivector":
        return self.blade(0, value)

    def blade(self, blade, coeff=1.0) -> "Multivector":
        """Multivector ``coeff * e_A``; ``blade`` is a bitmask or index sequence."""
        if not isinstance(blade, numbers.Integral):
            blade = _b.from_indices(blade)
        if not 0 <= blade < self.dim:
            raise ValueError(f"blade {blade} out of range for {self}")
        out = np.zeros(self.dim, dtype=self.dtype)
        out[blade] = _check_scalar(self, coeff)
        return Multivector(self, out)

    def basis(self) -> list["Multivector"]:
        return [self.blade(a) for a in range(self.dim)]

    def from_dict(self, terms: dict) -> "Multivector":
        """Build from ``{blade: coeff}`` with bitmask or index-tuple keys."""
        out = self.zero()
        for key, value in terms.items():
            out = out + self.blade(key, value)
        return out

    def random(self, rng: np.random.Generator, low=-1.0, high=1.0) -> "Multivector":
        """Coefficients uniform in [low, high] (real and imaginary parts independently)."""
        c = rng.uniform(low, high, self.dim)
        if self.complexified:
            c = c + 1j * rng.uniform(low, high, self.dim)
        return Multivector(self, c)


@dataclass(frozen=True)
class BasisElement:
    """Real basis element ``e_A``, or ``i e_A`` when ``imaginary`` (complexified only)."""

    blade: int
    imaginary: bool = False

    @property
    def label(self) -> str:
        return ("i" if self.imaginary else "") + _b.blade_name(self.blade)

    def multivector(self, ctx: AlgebraContext) -> "Multivector":
        return ctx.blade(self.blade, 1j if self.imaginary else 1.0)

    def __repr__(self):
        return f"BasisElement({self.label})"


def _check_scalar(ctx: AlgebraContext, value):
    if isinstance(value, (complex, np.complexfloating)) and not ctx.complexified:
        if value.imag != 0:
            raise ComplexScalarInRealContext(f"complex scalar {value} in {ctx}")
        return value.real
    return value


class Multivector:
    """Dense coefficient vector over the ``2**n`` basis blades of ``ctx``.

    Coefficients are float64 in real contexts and complex128 in complexified
    ones; the arithmetic operators use ``*`` for the geometric product.
    """

    __slots__ = ("ctx", "coeffs")
    __array_priority__ = 100

    def __init__(self, ctx: AlgebraContext, coeffs):
        coeffs = np.asarray(coeffs)
        if coeffs.shape != (ctx.dim,):
            raise ValueError(f"expected {ctx.dim} coefficients, got shape {coeffs.shape}")
        if not ctx.complexified and np.iscomplexobj(coeffs):
            if np.any(coeffs.imag != 0):
                raise ComplexScalarInRealContext(f"complex coefficients in {ctx}")
            coeffs = coeffs.real
        self.ctx = ctx
        self.coeffs = np.array(coeffs, dtype=ctx.dtype)

    def _same(self, other: "Multivector"):
        if not isinstance(other, Multivector):
            return NotImplemented
        if other.ctx != self.ctx:
            raise ContextMismatch(f"{self.ctx} vs {other.ctx}")
        return other

    def __add__(self, other):
        if isinstance(other, numbers.Number):
            other = self.ctx.scalar(other)
        if self._same(other) is NotImplemented:
            return NotImplemented
        return Multivector(self.ctx, self.coeffs + other.coeffs)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, numbers.Number):
            other = self.ctx.scalar(other)
        if self._same(other) is NotImplemented:
            return NotImplemented
        return Multivector(self.ctx, self.coeffs - other.coeffs)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return Multivector(self.ctx, -self.coeffs)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            return gp(self, other)
        if isinstance(other, numbers.Number):
            return scale(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, numbers.Number):
            return scale(self, other)
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, numbers.Number):
            return scale(self, 1 / other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.ctx == other.ctx and np.array_equal(self.coeffs, other.coeffs)

    __hash__ = None

    def __getitem__(self, blade):
        if not isinstance(blade, numbers.Integral):
            blade = _b.from_indices(blade)
        return self.coeffs[blade]

    def __repr__(self):
        terms = [f"{c.item()!r}*{_b.blade_name(a)}" for a, c in enumerate(self.coeffs) if c != 0]
        return f"Multivector({self.ctx}, {' + '.join(terms) or '0'})"

    def terms(self):
        """Yield ``(blade, coeff)`` for every nonzero coefficient."""
        for a in np.flatnonzero(self.coeffs):
            yield int(a), self.coeffs[a]

    # method sugar
    def grade(self, k: int) -> "Multivector":
        return grade_project(self, k)

    def reversion(self) -> "Multivector":
        return reversion(self)

    def grade_involution(self) -> "Multivector":
        return grade_involution(self)

    def conj(self) -> "Multivector":
        return complex_conjugate(self)

    def dagger(self) -> "Multivector":
        return dagger(self)

    def norm(self) -> float:
        return norm(self)

    def scalar_part(self):
        return self.coeffs[0]

    def allclose(self, other: "Multivector", atol=1e-10) -> bool:
        self._same(other)
        return bool(np.max(np.abs(self.coeffs - other.coeffs), initial=0.0) <= atol)


def gp(m1: Multivector, m2: Multivector) -> Multivector:
    """Geometric product."""
    if m1.ctx != m2.ctx:
        raise ContextMismatch(f"{m1.ctx} vs {m2.ctx}")
    table, partner = _b.product_tables(m1.ctx.sig)
    out = np.einsum("ac,a,ac->c", table, m1.coeffs, m2.coeffs[partner])
    return Multivector(m1.ctx, out)


def add(m1: Multivector, m2: Multivector) -> Multivector:
    return m1 + m2


def scale(m: Multivector, lam) -> Multivector:
    lam = _check_scalar(m.ctx, lam)
    return Multivector(m.ctx, m.coeffs * lam)


def grade_project(m: Multivector, k: int) -> Multivector:
    if not 0 <= k <= m.ctx.n:
        raise GradeOutOfRange(f"grade {k} outside 0..{m.ctx.n}")
    keep = _b.grade_array(m.ctx.n) == k
    return Multivector(m.ctx, np.where(keep, m.coeffs, 0))


def _per_grade(m: Multivector, which: int) -> Multivector:
    g = _b.grade_array(m.ctx.n)
    signs = np.array([_b.involution_signs(k)[which] for k in range(m.ctx.n + 1)])
    return Multivector(m.ctx, m.coeffs * signs[g])


def grade_involution(m: Multivector) -> Multivector:
    return _per_grade(m, 0)


def reversion(m: Multivector) -> Multivector:
    return _per_grade(m, 1)


def complex_conjugate(m: Multivector) -> Multivector:
    """Conjugate the coefficients; the identity in real contexts."""
    return Multivector(m.ctx, np.conj(m.coeffs))


def dagger(m: Multivector) -> Multivector:
    """Hermitian conjugation: each blade goes to its inverse, coefficients are conjugated."""
    return Multivector(m.ctx, np.conj(m.coeffs) * _b.inverse_signs(m.ctx.sig))


def _ordered_blade(ctx: AlgebraContext, lo: int, hi: int) -> Multivector:
    # e_{lo+1 ... hi}; identity for an empty range
    mask = ((1 << hi) - 1) ^ ((1 << lo) - 1)
    return ctx.blade(mask)


def dagger_alt(m: Multivector, variant: str = "left") -> Multivector:
    """Hermitian conjugation evaluated as a sandwich by ``e_{1..p}`` or ``e_{p+1..n}``.

    ``variant="left"`` conjugates with ``e_{1..p}``, ``variant="right"`` with
    ``e_{p+1..n}``.  Both agree with :func:`dagger`.
    """
    ctx = m.ctx
    if variant == "left":
        frame = _ordered_blade(ctx, 0, ctx.p)
        use_hat = ctx.p % 2 == 0
    elif variant == "right":
        frame = _ordered_blade(ctx, ctx.p, ctx.n)
        use_hat = ctx.q % 2 == 1
    else:
        raise ValueError(f"unknown variant {variant!r}")
    inner = reversion(m)
    if use_hat:
        inner = grade_involution(inner)
    inner = complex_conjugate(inner)
    sign, blade = _b.blade_inverse(next(iter(frame.terms()))[0], ctx.sig)
    return frame * inner * ctx.blade(blade, float(sign))


def scalar_product(m1: Multivector, m2: Multivector):
    """``<dagger(m1) m2>_0``; complex-valued in complexified contexts."""
    if m1.ctx != m2.ctx:
        raise ContextMismatch(f"{m1.ctx} vs {m2.ctx}")
    # only the blade-diagonal terms reach grade 0, and e_A^-1 e_A = e
    return np.sum(np.conj(m1.coeffs) * m2.coeffs)


def norm(m: Multivector) -> float:
    return float(np.sqrt(np.real(scalar_product(m, m))))
