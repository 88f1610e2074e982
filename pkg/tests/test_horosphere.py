import math

import numpy as np
import pytest

from horospinor.clifford import INF, act_spinor, is_inf, parabolic_from_spinor, random_clifford
from horospinor.errors import DomainError
from horospinor.horosphere import (
    boundary_to_uhs, decorated_horosphere_from_spinor, disc_boundary_to_uhs, horosphere_center,
    hyperboloid_boundary_to_disc, hyperboloid_to_disc, phi2,
)
from horospinor.minkowski_flags import P0, act_minkowski, minkowski_inner, phi1
from horospinor.quaternion import I, J, ZERO, Quaternion, para_dot_cross, sigma_matrix
from horospinor.spinor import random_quaternion, random_spinor

Q0 = np.array([1.0, 0, 0, 0, 0])


def test_phi2_examples():
    h = phi2(P0)
    assert h.contains(Q0)
    assert minkowski_inner(Q0, P0) == 1.0
    assert not phi2([2, 0, 0, 0, 2]).contains(Q0)
    with pytest.raises(DomainError):
        phi2([1, 0, 0, 0, 0.5])
    with pytest.raises(DomainError):
        phi2([-1, 0, 0, 0, 1])


def test_phi2_equivariance():
    rng = np.random.default_rng(51)
    for _ in range(50):
        A = random_clifford(rng)
        h = phi2(P0).act(A)
        assert h.contains(act_minkowski(A, Q0), 1e-8)


def test_boundary_to_uhs_examples():
    assert boundary_to_uhs([1, 0, 0, 0, 1]) is INF
    assert boundary_to_uhs([1, 0, 0, 0, -1]) == ZERO
    assert boundary_to_uhs([2, 2, 0, 0, 0]) == Quaternion(1)


def test_disc_maps_examples():
    assert np.array_equal(hyperboloid_to_disc(Q0), np.zeros(4))
    assert np.array_equal(hyperboloid_boundary_to_disc([1, 0, 0, 0, 1]), [0, 0, 0, 1])
    assert np.array_equal(hyperboloid_boundary_to_disc([1, 0, 0, 0, -1]), [0, 0, 0, -1])
    assert disc_boundary_to_uhs([0, 0, 0, 1]) is INF
    assert disc_boundary_to_uhs([0, 0, 0, -1]) == ZERO
    assert disc_boundary_to_uhs([1, 0, 0, 0]) == Quaternion(1)
    with pytest.raises(DomainError):
        hyperboloid_to_disc([1, 1, 0, 0, 0])


def test_hyperboloid_interior_lands_in_ball():
    rng = np.random.default_rng(52)
    for _ in range(100):
        u = rng.standard_normal(4) * 2
        x = np.concatenate(([math.sqrt(1 + u @ u)], u))
        assert np.linalg.norm(hyperboloid_to_disc(x)) < 1


def test_model_maps_compose():
    rng = np.random.default_rng(53)
    for _ in range(200):
        p = phi1(random_spinor(rng))
        direct = boundary_to_uhs(p)
        via_disc = disc_boundary_to_uhs(hyperboloid_boundary_to_disc(p), 1e-9)
        if is_inf(direct):
            assert is_inf(via_disc)
        else:
            assert direct.isclose(via_disc, 1e-8)


def test_decorated_examples():
    h = decorated_horosphere_from_spinor((1, 0))
    assert h.center is INF and h.size == 1.0 and h.dir_i == I and h.dir_j == J
    h = decorated_horosphere_from_spinor((0, 1))
    assert h.center == ZERO and h.size == 1.0 and h.dir_i == I and h.dir_j == J
    h = decorated_horosphere_from_spinor((J, 1))
    assert h.center == J and h.size == 1.0 and h.dir_i == I and h.dir_j == J
    assert decorated_horosphere_from_spinor((0, 2)).size == 0.25
    assert h.as_dict() == {"center": [0.0, 0.0, 1.0], "size": 1.0, "dir_i": [0.0, 1.0, 0.0], "dir_j": [0.0, 0.0, 1.0]}
    assert decorated_horosphere_from_spinor((1, 0)).as_dict()["center"] == "inf"


def test_center_matches_light_cone():
    for s in range(500):
        k = random_spinor(s)
        c = horosphere_center(k)
        if k.eta == ZERO:
            assert is_inf(c)
        else:
            expect = k.xi * k.eta.inverse()
            assert c.isclose(Quaternion(expect.a, expect.b, expect.c), 1e-9)
    assert horosphere_center((1, 0)) is INF
    assert horosphere_center((0, 1)) == ZERO


def test_directions_orthonormal():
    for s in range(300):
        h = decorated_horosphere_from_spinor(random_spinor(s))
        dot, _ = para_dot_cross(h.dir_i, h.dir_j)
        assert abs(dot) < 1e-12
        assert math.isclose(abs(h.dir_i), 1.0) and math.isclose(abs(h.dir_j), 1.0)


def test_positive_scaling_shrinks_diameter():
    rng = np.random.default_rng(54)
    for _ in range(100):
        k = random_spinor(rng, p_inf=0.0)
        r = 0.2 + 3 * rng.random()
        h, hr = decorated_horosphere_from_spinor(k), decorated_horosphere_from_spinor(k * r)
        assert math.isclose(hr.size, h.size / r ** 2)
        assert hr.center.isclose(h.center) and hr.dir_i.isclose(h.dir_i) and hr.dir_j.isclose(h.dir_j)


def test_unit_right_multiplication_rotates_decoration():
    rng = np.random.default_rng(55)
    for _ in range(100):
        k = random_spinor(rng)
        x = random_quaternion(rng)
        x = x * (1.0 / abs(x))
        h, hx = decorated_horosphere_from_spinor(k), decorated_horosphere_from_spinor(k * x)
        assert math.isclose(hx.size, h.size)
        assert is_inf(h.center) == is_inf(hx.center)
        if not is_inf(h.center):
            assert hx.center.isclose(h.center, 1e-9)
        # the new directions are the old frame turned by some R in SO(3)
        old = np.array([h.dir_i.to_paravector_list(), h.dir_j.to_paravector_list()])
        new = np.array([hx.dir_i.to_paravector_list(), hx.dir_j.to_paravector_list()])
        B_old = np.column_stack([np.cross(*old), *old])
        B_new = np.column_stack([np.cross(*new), *new])
        R = B_new @ B_old.T
        assert np.allclose(R @ R.T, np.eye(3), atol=1e-9) and math.isclose(np.linalg.det(R), 1.0)


def test_finite_directions_follow_sigma():
    # eta^-1* v eta^-1 is sigma(eta^-1*) applied to v
    k = random_spinor(56, p_inf=0.0)
    e = k.eta.inverse().star()
    M = sigma_matrix(e)
    h = decorated_horosphere_from_spinor(k)
    assert np.allclose(h.dir_i.to_paravector_list(), M[:, 1] / np.linalg.norm(M[:, 1]))


def test_parabolic_fixes_decorated_horosphere():
    rng = np.random.default_rng(57)
    for _ in range(100):
        k = random_spinor(rng)
        A = parabolic_from_spinor(k.xi, k.eta)
        assert decorated_horosphere_from_spinor(act_spinor(A, k, 1e-8)).isclose(
            decorated_horosphere_from_spinor(k), 1e-7
        )
