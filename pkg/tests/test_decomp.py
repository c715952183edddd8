import numpy as np
import pytest

from gasvd import (
    AlgebraContext, build_rep, dimension_identity, k_coordinates, k_subspace, polar_ga,
    rep_forward, rep_inverse, sigma_sqrt, svd_ga,
)
from gasvd.errors import NegativeDiagonal
from gasvd.rings import RingMatrix, complex_adjoint
from oracles import all_signatures, hermitian_sqrt


def test_k_examples():
    assert k_subspace(AlgebraContext.of(2, 0)).labels == ["e", "e2"]
    assert k_subspace(AlgebraContext.of(1, 3)).labels == ["e", "e14"]
    assert k_subspace(AlgebraContext.of(2, 1)).labels == ["e", "e1", "e23", "e123"]
    assert k_subspace(AlgebraContext.of(3, 0, True)).labels == ["e", "e1", "ie23", "ie123"]


def test_real_example(g20):
    m = g20.from_dict({0: 5, (1,): 4, (2,): 3})
    res = svd_ga(m)
    assert np.allclose(res.singular_values, [10, 0], atol=1e-12)
    assert res.Sigma.allclose(g20.from_dict({0: 5, (2,): -5}), 1e-12)
    assert res.residuals()["reconstruction"] < 1e-12
    assert np.allclose(k_coordinates(res.Sigma), [5, -5])


def test_defective_example(g20):
    m = g20.from_dict({(1,): 0.5, (1, 2): 0.5})
    res = svd_ga(m)
    assert res.Sigma.allclose(g20.from_dict({0: 0.5, (2,): -0.5}), 1e-12)
    assert np.allclose(res.singular_values, [1, 0])
    assert max(res.residuals().values()) < 1e-12


def test_complex_example(g20c):
    m = g20c.from_dict({0: 1 + 1j, (1,): 1 - 1j, (2,): 1 + 1j, (1, 2): -1 + 1j})
    res = svd_ga(m)
    assert np.allclose(res.singular_values, [4, 0])
    assert res.Sigma.allclose(g20c.from_dict({0: 2, (1,): 2}), 1e-12)
    pol = polar_ga(m)
    assert pol.P.allclose(g20c.from_dict({0: 2, (1, 2): 2j}), 1e-12)
    assert pol.S.allclose(g20c.from_dict({0: 2, (2,): 2}), 1e-12)
    assert max(pol.residuals().values()) < 1e-12


def test_zero_and_identity(g20c):
    res = svd_ga(g20c.zero())
    e = g20c.scalar(1)
    assert res.Sigma == g20c.zero()
    assert res.U == e and res.V == e
    pol = polar_ga(e)
    assert pol.W.allclose(e, 1e-14) and pol.P.allclose(e, 1e-14) and pol.S.allclose(e, 1e-14)


def test_sigma_sqrt(g20):
    root = sigma_sqrt(g20.from_dict({0: 5, (2,): -5}))
    expected = rep_inverse(RingMatrix.diag("R", [np.sqrt(10), 0]), build_rep(g20))
    assert root.allclose(expected, 1e-14)
    assert root.allclose(g20.from_dict({0: np.sqrt(10) / 2, (2,): -np.sqrt(10) / 2}), 1e-14)
    assert sigma_sqrt(g20.zero()) == g20.zero()
    assert sigma_sqrt(g20.scalar(1)) == g20.scalar(1)
    with pytest.raises(NegativeDiagonal):
        sigma_sqrt(g20.scalar(-1))


def test_random_g13_polar(rng):
    ctx = AlgebraContext.of(1, 3)
    m = ctx.random(rng)
    pol = polar_ga(m)
    assert (pol.P * pol.P).allclose(m.dagger() * m, 1e-9)


@pytest.mark.parametrize("cx", [False, True])
@pytest.mark.parametrize("p, q", [(2, 0), (1, 2), (3, 0), (0, 3), (2, 2), (4, 1), (0, 5)])
def test_singular_value_invariance(p, q, cx, rng):
    ctx = AlgebraContext.of(p, q, cx)
    m = ctx.random(rng)
    base = np.sort(svd_ga(m).singular_values)
    assert np.allclose(np.sort(svd_ga(m.dagger()).singular_values), base, atol=1e-10)
    for blade in rng.integers(ctx.dim, size=3):
        g = ctx.blade(int(blade))
        assert np.allclose(np.sort(svd_ga(g * m).singular_values), base, atol=1e-10)


def _matrix_sqrt(x: RingMatrix) -> np.ndarray:
    h = x.H @ x
    if x.ring == "H":
        return hermitian_sqrt(complex_adjoint(h).data)
    return hermitian_sqrt(np.asarray(h.data, dtype=complex))


@pytest.mark.parametrize("cx", [False, True])
@pytest.mark.parametrize("p, q", [(2, 0), (1, 3), (2, 1), (0, 3), (3, 2), (1, 4)])
def test_polar_p_is_unique_root(p, q, cx, rng):
    # P must equal the principal root of dagger(M) M, computed independently by eigh
    ctx = AlgebraContext.of(p, q, cx)
    m = ctx.random(rng)
    x = rep_forward(m)
    p_img = rep_forward(polar_ga(m).P)
    got = complex_adjoint(p_img).data if x.ring == "H" else np.asarray(p_img.data, dtype=complex)
    assert np.allclose(got, _matrix_sqrt(x), atol=1e-10)


@pytest.mark.parametrize("cx", [False, True])
@pytest.mark.parametrize("p, q", all_signatures(6))
def test_norm_via_trace(p, q, cx, rng):
    ctx = AlgebraContext.of(p, q, cx)
    m = ctx.random(rng)
    x = rep_forward(m)
    assert m.norm() ** 2 == pytest.approx((x.H @ x).real_trace() / x.size, rel=1e-12)
    assert m.norm() ** 2 == pytest.approx(np.sum(np.abs(m.coeffs) ** 2), rel=1e-12)
    assert np.sum(svd_ga(m).singular_values ** 2) / x.size == pytest.approx(m.norm() ** 2, rel=1e-10)


def test_dimension_identity_examples():
    assert dimension_identity(AlgebraContext.of(2, 0)) == (4, 4)
    assert dimension_identity(AlgebraContext.of(1, 3)) == (22, 22)
    assert dimension_identity(AlgebraContext.of(2, 0, True)) == (10, 10)


@pytest.mark.parametrize("cx", [False, True])
@pytest.mark.parametrize("p, q", all_signatures(8))
def test_dimension_identity_holds(p, q, cx):
    ctx = AlgebraContext.of(p, q, cx)
    lhs, rhs = dimension_identity(ctx)
    assert lhs == rhs >= ctx.dim
    assert k_subspace(ctx).dim == ctx.matrix_size
