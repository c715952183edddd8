"""Independent reference computations used by the tests.

Nothing here imports the code paths under test beyond plain containers.
"""
import numpy as np


def brute_blade_product(a_idx, b_idx, eta):
    """Multiply two generator words by bubble-sorting and contracting squares."""
    seq = list(a_idx) + list(b_idx)
    sign = 1
    changed = True
    while changed:
        changed = False
        for i in range(len(seq) - 1):
            if seq[i] > seq[i + 1]:
                seq[i], seq[i + 1] = seq[i + 1], seq[i]
                sign = -sign
                changed = True
    out = []
    for x in seq:
        if out and out[-1] == x:
            out.pop()
            sign *= eta[x - 1]
        else:
            out.append(x)
    return sign, tuple(out)


def bits_to_idx(mask):
    return tuple(a + 1 for a in range(mask.bit_length()) if mask >> a & 1)


def adjoint_singular_values(q):
    """Singular values of an (n, n, 4) quaternion array via its complex adjoint.

    Every value appears twice in the adjoint; one copy of each pair is returned.
    """
    z1 = q[..., 0] + 1j * q[..., 1]
    z2 = q[..., 2] + 1j * q[..., 3]
    big = np.block([[z1, z2], [-np.conj(z2), np.conj(z1)]])
    s = np.linalg.svd(big, compute_uv=False)
    return s[::2], s[1::2]


def all_signatures(nmax, nmin=1):
    return [(p, n - p) for n in range(nmin, nmax + 1) for p in range(n + 1)]


def hermitian_sqrt(h):
    """Principal square root of a positive semidefinite Hermitian matrix via eigh."""
    w, q = np.linalg.eigh((h + h.conj().T) / 2)
    return (q * np.sqrt(np.clip(w, 0, None))) @ q.conj().T


def sine_group_dimension(p, q, complexified=False):
    """Group dimension from the closed sine formula, evaluated with sympy."""
    import sympy

    n = p + q
    if complexified:
        return int(sympy.Integer(2) ** n)
    val = 2 ** sympy.Integer(n - 1) - sympy.sqrt(2) ** (n - 1) * sympy.sin(sympy.pi * (p - q + 1) / 4)
    val = sympy.nsimplify(sympy.simplify(val))
    assert val.is_Integer, val
    return int(val)
