import numpy as np
import pytest

from gasvd import Quaternion, RingMatrix, complex_adjoint
from gasvd.errors import NotSquare, RingMismatch, SizeMismatch
from gasvd.rings import qmul, ring_conj, ring_inverse

I, J, K = Quaternion(0, 1), Quaternion(0, 0, 1), Quaternion(0, 0, 0, 1)


def test_quaternion_table():
    assert I * J == K
    assert J * K == I
    assert K * I == J
    assert J * I == -K
    assert I * I == Quaternion(-1.0)
    assert Quaternion(1, 2, -1).conj() == Quaternion(1, -2, 1)


def test_inverse():
    q = Quaternion(1, 2, 3, 4)
    assert np.allclose((q * ring_inverse(q)).to_array(), [1, 0, 0, 0])
    assert ring_inverse(2 + 0j) == 0.5
    with pytest.raises(ZeroDivisionError):
        ring_inverse(Quaternion())
    assert ring_conj(1 + 2j) == 1 - 2j


def test_quaternion_laws(rng):
    for _ in range(200):
        a, b, c = rng.normal(size=(3, 4))
        assert np.allclose(qmul(qmul(a, b), c), qmul(a, qmul(b, c)), rtol=1e-12, atol=1e-12)
        nab = np.linalg.norm(qmul(a, b))
        assert nab == pytest.approx(np.linalg.norm(a) * np.linalg.norm(b), rel=1e-12)


def _random(ring, n, rng):
    if ring == "R":
        return RingMatrix("R", rng.normal(size=(n, n)))
    if ring == "C":
        return RingMatrix("C", rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n)))
    return RingMatrix("H", rng.normal(size=(n, n, 4)))


def test_conj_transpose_of_quaternion_diagonal():
    m = RingMatrix("H", np.array([[[0, 1, 0, 0], [0, 0, 0, 0]], [[0, 0, 0, 0], [0, -1, 0, 0]]], float))
    expected = RingMatrix("H", np.array([[[0, -1, 0, 0], [0, 0, 0, 0]], [[0, 0, 0, 0], [0, 1, 0, 0]]], float))
    assert m.conj_transpose().allclose(expected, 0)


@pytest.mark.parametrize("ring", ["R", "C", "H"])
def test_matrix_identities(ring, rng):
    a, b = _random(ring, 3, rng), _random(ring, 3, rng)
    eye = RingMatrix.identity(ring, 3)
    assert (eye @ a).allclose(a, 0)
    assert (a @ b).conj_transpose().allclose(b.conj_transpose() @ a.conj_transpose(), 1e-12)
    assert a.conj_transpose().conj_transpose().allclose(a, 0)


def test_quaternion_matmul_against_entrywise(rng):
    a, b = _random("H", 3, rng), _random("H", 3, rng)
    c = a @ b
    for i in range(3):
        for k in range(3):
            acc = Quaternion()
            for j in range(3):
                acc = acc + a.entry(i, j) * b.entry(j, k)
            assert np.allclose(acc.to_array(), c.data[i, k], atol=1e-12)


def test_complex_adjoint_examples(rng):
    j = RingMatrix("H", np.array([[[0.0, 0, 1, 0]]]))
    assert np.array_equal(complex_adjoint(j).data, [[0, 1], [-1, 0]])
    assert np.array_equal(complex_adjoint(RingMatrix.identity("H", 3)).data, np.eye(6))
    for _ in range(20):
        a, b = _random("H", 2, rng), _random("H", 2, rng)
        assert complex_adjoint(a @ b).allclose(complex_adjoint(a) @ complex_adjoint(b), 1e-12)
        assert complex_adjoint(a + b).allclose(complex_adjoint(a) + complex_adjoint(b), 1e-12)
        assert complex_adjoint(a.H).allclose(complex_adjoint(a).H, 1e-12)


def test_complex_adjoint_doubles_singular_values(rng):
    a = _random("H", 4, rng)
    s = np.linalg.svd(complex_adjoint(a).data, compute_uv=False)
    assert np.allclose(s[::2], s[1::2], atol=1e-12)


def test_errors(rng):
    with pytest.raises(NotSquare):
        RingMatrix("R", np.zeros((2, 3)))
    with pytest.raises(RingMismatch):
        _random("R", 2, rng) @ _random("C", 2, rng)
    with pytest.raises(SizeMismatch):
        _random("R", 2, rng) + _random("R", 3, rng)
    with pytest.raises(SizeMismatch):
        RingMatrix("R", np.zeros((3, 3)), blocks=2)


def test_blocks(rng):
    a, b = _random("C", 2, rng), _random("C", 2, rng)
    m = RingMatrix.from_blocks(a, b)
    assert m.blocks == 2 and m.size == 4
    assert m.block(0).allclose(a, 0) and m.block(1).allclose(b, 0)
    assert (m @ m).blocks == 2
