import numpy as np
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from gasvd import AlgebraContext, Multivector

coefficient = st.floats(-1, 1, allow_nan=False, allow_infinity=False)


@st.composite
def contexts(draw, nmax=4, complexified=None):
    n = draw(st.integers(1, nmax))
    p = draw(st.integers(0, n))
    cx = draw(st.booleans()) if complexified is None else complexified
    return AlgebraContext.of(p, n - p, cx)


def multivectors_in(ctx):
    real = arrays(np.float64, ctx.dim, elements=coefficient)
    if not ctx.complexified:
        return real.map(lambda c: Multivector(ctx, c))
    return st.tuples(real, real).map(lambda ri: Multivector(ctx, ri[0] + 1j * ri[1]))


@st.composite
def multivector_tuples(draw, count, nmax=4, complexified=None):
    ctx = draw(contexts(nmax, complexified))
    return tuple(draw(multivectors_in(ctx)) for _ in range(count))
