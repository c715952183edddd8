"""JSON documents for multivectors.

A document looks like::

    {"p": 2, "q": 0, "complexified": false,
     "terms": [{"blade": [], "re": 5.0}, {"blade": [1], "re": 4.0}]}

``blade`` lists generator indices in strictly ascending order; the empty
list is the identity.  ``im`` is optional and must be zero for real algebras.
"""
from __future__ import annotations

import numbers

import numpy as np

from . import blades as _b
from .algebra import AlgebraContext, Multivector
from .blades import MAX_GENERATORS


class DocumentError(ValueError):
    """Malformed multivector document."""


def _int(doc, key):
    v = doc.get(key)
    if isinstance(v, bool) or not isinstance(v, int) or v < 0:
        raise DocumentError(f"{key!r} must be a nonnegative integer")
    return v


def _real(term, key, default=None):
    v = term.get(key, default)
    if isinstance(v, bool) or not isinstance(v, numbers.Real) or not np.isfinite(v):
        raise DocumentError(f"term field {key!r} must be a finite number")
    return float(v)


def parse_context(doc) -> AlgebraContext:
    if not isinstance(doc, dict):
        raise DocumentError("document must be a JSON object")
    p, q = _int(doc, "p"), _int(doc, "q")
    cx = doc.get("complexified", False)
    if not isinstance(cx, bool):
        raise DocumentError("'complexified' must be a boolean")
    if not 1 <= p + q <= MAX_GENERATORS:
        raise DocumentError(f"p + q must lie in 1..{MAX_GENERATORS}")
    return AlgebraContext.of(p, q, cx)


def parse_multivector(doc) -> Multivector:
    ctx = parse_context(doc)
    terms = doc.get("terms")
    if not isinstance(terms, list):
        raise DocumentError("'terms' must be a list")
    coeffs = np.zeros(ctx.dim, dtype=ctx.dtype)
    seen = set()
    for term in terms:
        if not isinstance(term, dict) or "blade" not in term:
            raise DocumentError("each term needs a 'blade'")
        idx = term["blade"]
        if not isinstance(idx, list) or any(isinstance(a, bool) or not isinstance(a, int) for a in idx):
            raise DocumentError("'blade' must be a list of integers")
        if any(a < 1 or a > ctx.n for a in idx):
            raise DocumentError(f"blade index outside 1..{ctx.n}: {idx}")
        if any(b <= a for a, b in zip(idx, idx[1:])):
            raise DocumentError(f"blade indices must be strictly ascending: {idx}")
        blade = _b.from_indices(idx)
        if blade in seen:
            raise DocumentError(f"duplicate blade {idx}")
        seen.add(blade)
        re, im = _real(term, "re"), _real(term, "im", 0.0)
        if im != 0 and not ctx.complexified:
            raise DocumentError("nonzero 'im' in a real algebra")
        coeffs[blade] = complex(re, im) if ctx.complexified else re
    return Multivector(ctx, coeffs)


def serialize_multivector(m: Multivector) -> dict:
    """Canonical document: blades in bitmask order, zero terms dropped."""
    ctx = m.ctx
    terms = []
    for blade, c in m.terms():
        term = {"blade": list(_b.indices(blade)), "re": float(np.real(c))}
        if ctx.complexified:
            term["im"] = float(np.imag(c))
        terms.append(term)
    return {"p": ctx.p, "q": ctx.q, "complexified": ctx.complexified, "terms": terms}
