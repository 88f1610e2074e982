import numpy as np
import pytest

from horospinor.clifford import Mat2
from horospinor.errors import DegenerateConfigurationError, DomainError, UndefinedQuasideterminantError
from horospinor.lambda_length import lambda_pdet, ptolemy_residual
from horospinor.quasiplucker import (
    SpinorQuad, gr_plucker_residual, gr_skew_symmetry_residual, quasi_plucker, quasi_plucker_bracket,
    quasidet_2x2, spinor_quasidets,
)
from horospinor.quaternion import ONE, Quaternion
from horospinor.spinor import bracket, random_quaternion, random_spinor

QUAD = [(1, 0), (0, 1), (1, 1), (1, -1)]


def random_quad(rng):
    return SpinorQuad([random_spinor(rng, p_inf=0.0) for _ in range(4)])


def test_quasidet_examples():
    assert quasidet_2x2([[1, 2], [3, 4]], 1, 1) == Quaternion(-0.5)
    assert quasidet_2x2([[1, 0], [0, 1]], 1, 1) == ONE
    with pytest.raises(UndefinedQuasideterminantError):
        quasidet_2x2([[1, 0], [0, 1]], 1, 2)
    with pytest.raises(DomainError):
        quasidet_2x2([[1, 0], [0, 1]], 3, 1)


def test_quasidets_match_real_inverse_matrix():
    # Over the reals |A|_pq = 1 / (A^-1)_qp.
    rng = np.random.default_rng(71)
    for _ in range(50):
        A = rng.standard_normal((2, 2))
        inv = np.linalg.inv(A)
        for p in (1, 2):
            for q in (1, 2):
                val = quasidet_2x2(A.tolist(), p, q)
                assert abs(val.a - 1 / inv[q - 1, p - 1]) <= 1e-9 * max(1, abs(val.a))


def test_quasidets_general_quaternion_matrix():
    # |A|_11 (A^-1)_11 = 1 for a generic quaternionic matrix, with the inverse from numpy on a 4x4 real form.
    def real_form(q):
        a, b, c, d = q
        return np.array([[a, -b, -c, -d], [b, a, -d, c], [c, d, a, -b], [d, -c, b, a]])

    rng = np.random.default_rng(72)
    for _ in range(50):
        entries = [random_quaternion(rng) for _ in range(4)]
        M = Mat2(*entries)
        big = np.block([[real_form(entries[0]), real_form(entries[1])], [real_form(entries[2]), real_form(entries[3])]])
        inv = np.linalg.inv(big)
        inv11 = Quaternion(*inv[0:4, 0])
        assert (quasidet_2x2(M, 1, 1) * inv11).isclose(ONE, 1e-9)


def test_spinor_closed_forms():
    rng = np.random.default_rng(73)
    for _ in range(200):
        k1, k2 = random_spinor(rng, p_inf=0.0), random_spinor(rng, p_inf=0.0)
        M = Mat2.from_columns(k1, k2)
        D = bracket(k1, k2)
        closed = spinor_quasidets(k1, k2)
        assert closed[1, 1].isclose(k2.eta.inverse().star() * D.star())
        for (p, q), val in closed.items():
            assert quasidet_2x2(M, p, q).isclose(val, 1e-9)


def test_closed_forms_skip_zero_entries():
    closed = spinor_quasidets((1, 0), (0, 1))
    assert closed[1, 1] == ONE and closed[2, 2] == ONE
    assert closed[1, 2] is None and closed[2, 1] is None


def test_quasi_plucker_examples():
    assert quasi_plucker(QUAD, 0, 1, 2) == -ONE
    assert quasi_plucker(QUAD, 0, 1, 2, s=2) == -ONE
    with pytest.raises(DomainError):
        quasi_plucker(QUAD, 1, 1, 2)
    with pytest.raises(DomainError):
        quasi_plucker(QUAD, 0, 1, 4)
    with pytest.raises(DomainError):
        quasi_plucker(QUAD, 0, 1, 2, s=3)


def test_row_choice_fallback():
    # column 1 = (0, 1) has xi = 0, so row 2 is undefined there and row 1 is used.
    assert quasi_plucker(QUAD, 0, 2, 1) == quasi_plucker(QUAD, 0, 2, 1, s=1)
    with pytest.raises(UndefinedQuasideterminantError):
        quasi_plucker(QUAD, 0, 2, 1, s=2)
    # column 0 = (1, 0): row 1 undefined, default falls back to row 2
    with pytest.raises(UndefinedQuasideterminantError):
        quasi_plucker(QUAD, 1, 2, 0, s=1)
    assert quasi_plucker(QUAD, 1, 2, 0) == quasi_plucker(QUAD, 1, 2, 0, s=2)


def test_row_choice_and_bracket_route_agree():
    rng = np.random.default_rng(74)
    for _ in range(200):
        quad = random_quad(rng)
        for l, m, n in ((0, 1, 2), (3, 0, 1), (2, 3, 0)):
            p1 = quasi_plucker(quad, l, m, n, 1)
            p2 = quasi_plucker(quad, l, m, n, 2)
            assert p1.isclose(p2, 1e-10)
            lam = lambda_pdet(quad[n], quad[l]).inverse() * lambda_pdet(quad[n], quad[m])
            assert p1.isclose(lam, 1e-10)
            assert p1.isclose(quasi_plucker_bracket(quad, l, m, n), 1e-10)


def test_skew_symmetry():
    assert abs(gr_skew_symmetry_residual(QUAD, 0, 1, 2)) <= 1e-12
    rng = np.random.default_rng(75)
    for _ in range(200):
        quad = random_quad(rng)
        assert abs(gr_skew_symmetry_residual(quad, 0, 1, 2)) <= 1e-9
        assert abs(gr_skew_symmetry_residual(quad, 3, 1, 0)) <= 1e-9
    with pytest.raises(UndefinedQuasideterminantError):
        gr_skew_symmetry_residual([(1, 0), (1, 0), (1, 1), (1, -1)], 0, 1, 2)


def test_plucker_relation_and_ptolemy_bridge():
    assert abs(gr_plucker_residual(QUAD, 2, 1, 0, 3)) <= 1e-14
    rng = np.random.default_rng(76)
    for _ in range(200):
        quad = random_quad(rng)
        r = gr_plucker_residual(quad, 2, 1, 0, 3)
        assert abs(r) <= 1e-8
        assert abs(gr_plucker_residual(quad, 0, 3, 2, 1)) <= 1e-8
        assert abs(r - ptolemy_residual(*quad)) <= 1e-10
    degenerate = [(1, 0), (0, 1), (1, 0), (1, -1)]
    with pytest.raises(UndefinedQuasideterminantError):
        gr_plucker_residual(degenerate, 2, 1, 0, 3)
    with pytest.raises(DegenerateConfigurationError):
        ptolemy_residual(*degenerate)
    with pytest.raises(DomainError):
        gr_plucker_residual(QUAD, 2, 2, 0, 3)
