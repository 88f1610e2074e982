import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from horospinor.errors import DomainError
from horospinor.quaternion import (
    I, J, K, ONE, ZERO, Quaternion, conjugate, inverse, para_dot_cross, paravector_sqrt,
    polar_decompose, qexp, rotate_paravector, sigma_apply, sigma_matrix, sigma_rotation_data,
)

finite = st.floats(-10, 10, allow_nan=False)
quats = st.builds(Quaternion, finite, finite, finite, finite)
paravectors = st.builds(Quaternion.paravector, finite, finite, finite)


def as_complex(q):
    # Independent model: H inside 2x2 complex matrices.
    return np.array([[q.a + 1j * q.b, q.c + 1j * q.d], [-q.c + 1j * q.d, q.a - 1j * q.b]])


def close(p, q, tol=1e-12):
    return abs(Quaternion.coerce(p) - Quaternion.coerce(q)) <= tol * max(1.0, abs(Quaternion.coerce(p)))


def test_hamilton_relations():
    assert I * I == -ONE and J * J == -ONE and K * K == -ONE
    assert I * J == K and J * K == I and K * I == J
    assert J * I == -K


@given(quats, quats)
def test_product_matches_complex_matrix_model(p, q):
    lhs = as_complex(p * q)
    rhs = as_complex(p) @ as_complex(q)
    assert np.allclose(lhs, rhs, atol=1e-9)


def test_conjugate_examples():
    q = Quaternion(1, 2, 3, 4)
    assert conjugate(q, "prime") == Quaternion(1, -2, -3, 4)
    assert conjugate(q, "bar") == Quaternion(1, -2, -3, -4)
    assert conjugate(q, "star") == Quaternion(1, 2, 3, -4)
    for kind in ("prime", "bar", "star"):
        assert conjugate(5, kind) == Quaternion(5)
    with pytest.raises(DomainError):
        conjugate(q, "hat")


@given(quats, quats)
def test_conjugation_homomorphism_types(p, q):
    assert close((p * q).prime(), p.prime() * q.prime(), 1e-9)
    assert close((p * q).bar(), q.bar() * p.bar(), 1e-9)
    assert close((p * q).star(), q.star() * p.star(), 1e-9)


@given(quats)
def test_conjugation_identities(q):
    assert q.bar() == q.prime().star()
    assert q + q.bar() - q.star() - q.prime() == ZERO


def test_inverse_examples():
    assert inverse(I) == -I
    assert inverse(2) == Quaternion(0.5)
    assert inverse(Quaternion(1, 1)) == Quaternion(0.5, -0.5)
    with pytest.raises(DomainError):
        inverse(0)


@given(quats)
def test_inverse_both_sides(q):
    if abs(q) < 1e-3:
        return
    assert close(q * q.inverse(), ONE, 1e-9)
    assert close(q.inverse() * q, ONE, 1e-9)


def test_right_division():
    q = Quaternion(1, 2, -1, 0.5)
    p = Quaternion(0.3, -1, 2, 1)
    assert close((q / p) * p, q)


def test_polar_examples():
    r, u, t = polar_decompose(K)
    assert (r, u, t) == (1.0, K, math.pi / 2)
    r, u, t = polar_decompose(-3)
    assert r == 3.0 and u == I and t == math.pi
    r, u, t = polar_decompose(Quaternion(1, 0, 1))
    assert math.isclose(r, math.sqrt(2)) and close(u, J) and math.isclose(t, math.pi / 4)
    with pytest.raises(DomainError):
        polar_decompose(0)


@given(quats)
def test_polar_reconstructs(q):
    if abs(q) < 1e-6:
        return
    r, u, t = polar_decompose(q)
    assert 0 <= t <= math.pi
    assert math.isclose(abs(u), 1.0)
    assert close((ONE * math.cos(t) + u * math.sin(t)) * r, q, 1e-9)
    assert close(qexp(u * t) * r, q, 1e-9)


def test_dot_cross_examples():
    assert para_dot_cross(I, J) == (0.0, ONE)
    assert para_dot_cross(ONE, I) == (0.0, J)
    assert para_dot_cross(J, ONE) == (0.0, I)
    v = Quaternion(1, 2, 3)
    dot, cross = para_dot_cross(v, v)
    assert dot == 14.0 and cross == ZERO
    with pytest.raises(DomainError):
        para_dot_cross(K, I)


@given(paravectors, paravectors)
def test_dot_cross_match_numpy(v, w):
    # (1, i, j) plays the role of (e1, e2, e3).
    dot, cross = para_dot_cross(v, w)
    a, b = np.array(v.to_paravector_list()), np.array(w.to_paravector_list())
    assert math.isclose(dot, float(a @ b), abs_tol=1e-9)
    assert np.allclose(cross.to_paravector_list(), np.cross(a, b), atol=1e-9)


def test_sigma_examples():
    x = Quaternion(0.2, -1, 3, 0.7)
    assert sigma_apply(ONE, x) == x
    assert sigma_apply(J, I) == I
    assert sigma_apply(J, ONE) == -ONE
    assert sigma_apply(J, J) == -J
    assert sigma_apply(K, I) == -I
    assert sigma_apply(K, ONE) == ONE


@given(quats, paravectors)
def test_sigma_keeps_paravectors_and_scales_k(q, v):
    out = sigma_apply(q, v)
    assert abs(out.d) <= 1e-9 * max(1.0, q.norm2() * abs(v))
    kk = sigma_apply(q, K)
    assert close(kk, K * q.norm2(), 1e-9)


def test_sigma_rotation_examples():
    axis, angle, dil = sigma_rotation_data(qexp(K * (math.pi / 4)))
    assert close(axis, ONE) and math.isclose(angle, math.pi / 2) and math.isclose(dil, 1.0)
    axis, angle, dil = sigma_rotation_data(2)
    assert angle == 0.0 and dil == 4.0
    axis, angle, dil = sigma_rotation_data(J)
    assert close(axis, -I) and math.isclose(angle, math.pi) and math.isclose(dil, 1.0)


@given(quats, paravectors)
def test_sigma_is_rotation_plus_dilation(q, v):
    if abs(q) < 1e-3:
        return
    axis, angle, dil = sigma_rotation_data(q)
    expect = rotate_paravector(v, axis, angle) * dil
    assert close(sigma_apply(q, v), expect, 1e-8 * max(1.0, dil))


def test_sigma_matrix_is_scaled_rotation():
    q = Quaternion(0.4, -1.1, 0.3, 2.0)
    M = sigma_matrix(q) / q.norm2()
    assert np.allclose(M.T @ M, np.eye(3))
    assert math.isclose(np.linalg.det(M), 1.0)


def test_paravector_sqrt_examples():
    assert paravector_sqrt(4) == Quaternion(2)
    assert close(paravector_sqrt(Quaternion(0, 2)), Quaternion(1, 1))
    assert paravector_sqrt(0) == ZERO
    assert close(paravector_sqrt(-4), Quaternion(0, 2))
    # Denormal imaginary parts must still give the right magnitude.
    for v in (Quaternion(-2, 0, 5e-324, 0), Quaternion(-1, 5e-324, 5e-324, 0)):
        w = paravector_sqrt(v)
        assert close(w * w, v, 1e-12)


@given(paravectors)
def test_paravector_sqrt_squares_back(v):
    w = paravector_sqrt(v)
    assert w.d == 0.0
    assert close(w * w, v, 1e-9)
