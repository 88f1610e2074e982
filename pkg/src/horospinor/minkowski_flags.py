"""Minkowski space R^{1,4}, the light cone map phi1, flags and decorated ideal points.

Points of R^{1,4} are numpy arrays (T, W, X, Y, Z) with the form
dT^2 - dW^2 - dX^2 - dY^2 - dZ^2. They correspond to 2x2 Hermitian
matrices with paravector entries

    S = 1/2 [[T + Z, W + Xi + Yj], [W - Xi - Yj, T - Z]],

so that Tr S = T and 4 det S = <p, p>. A spinor kappa goes to the future
null vector phi1(kappa) = kappa kappa~^T.

Orientation: (T, W, X, Y, Z) is positively oriented. A basis (B1, B2, B3)
of the tangent space to the celestial sphere {T = T0} at p is outward when
(B1, B2, B3, d_minus, d_T) is positive, where d_minus = (0, W, X, Y, Z).
"""

import math
from dataclasses import dataclass

import numpy as np

from .clifford import Mat2
from .errors import DomainError
from .quaternion import I, J, ONE, Quaternion, default_tol
from .spinor import Spinor, as_pair, section_s

METRIC = np.diag([1.0, -1.0, -1.0, -1.0, -1.0])

P0 = np.array([1.0, 0.0, 0.0, 0.0, 1.0])
D_T, D_W, D_X, D_Y, D_Z = np.eye(5)


def _tol(tol):
    return default_tol() if tol is None else tol


def as_point(p):
    p = np.asarray(p, dtype=float)
    if p.shape != (5,):
        raise DomainError("a point of R^{1,4} has 5 coordinates (T, W, X, Y, Z)")
    return p


def minkowski_inner(p, q):
    return float(as_point(p) @ METRIC @ as_point(q))


def is_null(p, tol=None):
    p = as_point(p)
    return abs(minkowski_inner(p, p)) <= _tol(tol) * max(1.0, float(p @ p))


def is_future(p):
    return as_point(p)[0] > 0.0


def point_to_hermitian(p):
    T, W, X, Y, Z = as_point(p)
    off = Quaternion(W, X, Y, 0.0) * 0.5
    return Mat2(Quaternion((T + Z) / 2), off, off.bar(), Quaternion((T - Z) / 2))


def hermitian_to_point(S, tol=None):
    """Inverse of point_to_hermitian; checks the paravector-Hermitian shape."""
    tol = _tol(tol)
    scale = max(1.0, S.norm())
    s11, s12, s21, s22 = S.a, S.b, S.c, S.d
    bad = max(
        math.sqrt(s11.b ** 2 + s11.c ** 2 + s11.d ** 2),
        math.sqrt(s22.b ** 2 + s22.c ** 2 + s22.d ** 2),
        abs(s12.d),
        abs(s21 - s12.bar()),
    )
    if bad > tol * scale:
        raise DomainError("matrix is not paravector-Hermitian (defect {:.3g})".format(bad))
    off = (s12 + s21.bar()) * 0.5
    return np.array([s11.a + s22.a, 2 * off.a, 2 * off.b, 2 * off.c, s11.a - s22.a])


def hermitian_det(S):
    """det of a Hermitian quaternionic matrix: s11 s22 - |s12|^2."""
    return S.a.a * S.d.a - S.b.norm2()


def phi1_matrix(k):
    xi, eta = as_pair(k)
    return Mat2(xi * xi.bar(), xi * eta.bar(), eta * xi.bar(), eta * eta.bar())


def phi1(k):
    """phi1(kappa) = kappa kappa~^T as a point (T, W, X, Y, Z).

    T = |xi|^2 + |eta|^2, W + Xi + Yj = 2 xi eta~, Z = |xi|^2 - |eta|^2.
    """
    return hermitian_to_point(phi1_matrix(k), tol=1e-8)


def dphi1_matrix(k, nu):
    """Derivative of phi1 at kappa along nu: kappa nu~^T + nu kappa~^T."""
    xi, eta = as_pair(k)
    al, be = as_pair(nu)
    return Mat2(
        xi * al.bar() + al * xi.bar(),
        xi * be.bar() + al * eta.bar(),
        eta * al.bar() + be * xi.bar(),
        eta * be.bar() + be * eta.bar(),
    )


def dphi1(k, nu, tol=None):
    """D_kappa phi1 (nu) as a point; nu must be tangent to the spinors at kappa."""
    return hermitian_to_point(dphi1_matrix(k, nu), tol=1e-8 if tol is None else tol)


def act_minkowski(A, p):
    """A.p, computed as A S A~^T on the Hermitian matrix of p."""
    S = point_to_hermitian(p)
    At = Mat2(A.a.bar(), A.c.bar(), A.b.bar(), A.d.bar())
    return hermitian_to_point(Mat2.__matmul__(Mat2.__matmul__(A, S), At), tol=1e-8)


def fibre_phase(k1, k2):
    """The unit-candidate alpha = <kappa1, kappa2>_H / |kappa1|^2 with kappa2 ~ kappa1 alpha."""
    xi1, eta1 = as_pair(k1)
    xi2, eta2 = as_pair(k2)
    n2 = xi1.norm2() + eta1.norm2()
    return (xi1.bar() * xi2 + eta1.bar() * eta2) * (1.0 / n2)


def slice_representative(p, v):
    """Representative of v mod pR in the slice T = 0: v - (v_T / p_T) p."""
    p = as_point(p)
    v = as_point(v)
    return v - (v[0] / p[0]) * p


def slice_direction(p, v):
    w = slice_representative(p, v)
    n = float(np.linalg.norm(w))
    if n == 0.0:
        raise DomainError("flag direction is parallel to the flagpole")
    return w / n


@dataclass(frozen=True, eq=False)
class Flag:
    """The flag [[p, v]]: a null ray pR with the half-plane p R + v R_{>0}."""

    p: np.ndarray
    v: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "p", as_point(self.p))
        object.__setattr__(self, "v", as_point(self.v))

    def check(self, tol=None):
        tol = _tol(tol)
        p, v = self.p, self.v
        if not (is_future(p) and is_null(p, tol)):
            raise DomainError("flagpole must be a future null vector")
        if abs(minkowski_inner(p, v)) > tol * max(1.0, np.linalg.norm(p) * np.linalg.norm(v)):
            raise DomainError("flag direction must be Minkowski-orthogonal to the flagpole")
        slice_direction(p, v)
        return self

    def direction(self):
        return slice_direction(self.p, self.v)


def _points_close(p, q, tol):
    return float(np.linalg.norm(p - q)) <= tol * max(1.0, float(np.linalg.norm(p)), float(np.linalg.norm(q)))


def flags_equal(f1, f2, tol=None):
    """Same flagpole and the same oriented direction modulo the flagpole."""
    tol = _tol(tol)
    if not _points_close(f1.p, f2.p, tol):
        return False
    return float(np.linalg.norm(f1.direction() - f2.direction())) <= tol


def flag_angle(f1, f2, tol=None):
    """Angle in [0, pi] between two flags on a common flagpole.

    Uses the Minkowski form on the raw direction vectors; adding multiples
    of the null flagpole does not change it.
    """
    tol = _tol(tol)
    if not _points_close(f1.p, f2.p, tol):
        raise DomainError("flags have different flagpoles")
    vv = minkowski_inner(f1.v, f1.v)
    ww = minkowski_inner(f2.v, f2.v)
    c = -minkowski_inner(f1.v, f2.v) / math.sqrt(vv * ww)
    return math.acos(min(1.0, max(-1.0, c)))


@dataclass(frozen=True, eq=False)
class Multiflag:
    """Two orthogonal flags [[p, vi]] and [[p, vj]] on the same flagpole."""

    p: np.ndarray
    vi: np.ndarray
    vj: np.ndarray

    def __post_init__(self):
        for name in ("p", "vi", "vj"):
            object.__setattr__(self, name, as_point(getattr(self, name)))

    @property
    def flag_i(self):
        return Flag(self.p, self.vi)

    @property
    def flag_j(self):
        return Flag(self.p, self.vj)

    def check(self, tol=None):
        tol = _tol(tol)
        self.flag_i.check(tol)
        self.flag_j.check(tol)
        scale = math.sqrt(abs(minkowski_inner(self.vi, self.vi) * minkowski_inner(self.vj, self.vj)))
        if abs(minkowski_inner(self.vi, self.vj)) > tol * max(1.0, scale):
            raise DomainError("the i- and j-flags are not orthogonal")
        return self

    def as_dict(self):
        return {"p": self.p.tolist(), "vi": self.vi.tolist(), "vj": self.vj.tolist()}


def multiflags_equal(m1, m2, tol=None):
    return flags_equal(m1.flag_i, m2.flag_i, tol) and flags_equal(m1.flag_j, m2.flag_j, tol)


def multiflag_from_spinor(k):
    """[[phi1(k), D phi1(s_i k), D phi1(s_j k)]]."""
    k = Spinor.coerce(k)
    return Multiflag(phi1(k), dphi1(k, section_s(I, k)), dphi1(k, section_s(J, k)))


def act_multiflag(A, mf):
    return Multiflag(act_minkowski(A, mf.p), act_minkowski(A, mf.vi), act_minkowski(A, mf.vj))


def orientation_sign(p, b1, b2, b3):
    """+1 if (b1, b2, b3) is outward at p on the celestial sphere, -1 if inward.

    The b's are first moved to the slice T = 0 modulo pR, then
    det(b1, b2, b3, d_minus, d_T) is evaluated in (T, W, X, Y, Z).
    """
    p = as_point(p)
    d_minus = np.concatenate(([0.0], p[1:]))
    cols = [slice_representative(p, b) for b in (b1, b2, b3)] + [d_minus, D_T]
    det = float(np.linalg.det(np.column_stack(cols)))
    if det == 0.0:
        raise DomainError("vectors do not form a basis modulo the flagpole")
    return 1 if det > 0 else -1


@dataclass(frozen=True, eq=False)
class DecoratedIdealPoint:
    """A null direction ell with a conformal, outward-oriented map psi.

    ell is stored with T = 1. psi1, psii, psij are representatives in the
    slice T = 0 of psi(1), psi(i), psi(j) in ell-perp / ell; all three have
    Minkowski norm equal to the scale factor K < 0.
    """

    ell: np.ndarray
    psi1: np.ndarray
    psii: np.ndarray
    psij: np.ndarray

    def __post_init__(self):
        for name in ("ell", "psi1", "psii", "psij"):
            object.__setattr__(self, name, as_point(getattr(self, name)))

    @property
    def scale_factor(self):
        return minkowski_inner(self.psii, self.psii)

    @property
    def basepoint(self):
        """The point on ell whose T-coordinate T0 satisfies K = -4 T0^2."""
        return self.ell * (math.sqrt(-self.scale_factor) / 2.0)

    def psi(self, v):
        """psi applied to a paravector v, as a slice representative."""
        v = Quaternion.coerce(v)
        return v.a * self.psi1 + v.b * self.psii + v.c * self.psij

    def check(self, tol=None):
        tol = _tol(tol)
        K = self.scale_factor
        if not K < 0:
            raise DomainError("scale factor must be negative")
        vecs = (self.psi1, self.psii, self.psij)
        for v in vecs:
            if abs(minkowski_inner(v, self.ell)) > tol * math.sqrt(-K):
                raise DomainError("psi values must lie in ell-perp")
            if abs(minkowski_inner(v, v) - K) > tol * -K:
                raise DomainError("psi is not conformal: unequal norms")
        for a, b in ((0, 1), (0, 2), (1, 2)):
            if abs(minkowski_inner(vecs[a], vecs[b])) > tol * -K:
                raise DomainError("psi is not conformal: images not orthogonal")
        if orientation_sign(self.ell, *vecs) < 0:
            raise DomainError("psi is not orientation-preserving for the outward orientation")
        return self

    def as_dict(self):
        return {
            "ell": self.ell.tolist(),
            "psi1": self.psi1.tolist(),
            "psii": self.psii.tolist(),
            "psij": self.psij.tolist(),
        }


def _outward_completion(p, wi, wj, length):
    """Unit-length (times `length`) vector in the slice completing (., wi, wj) outward."""
    P = p[1:]
    basis = np.column_stack([P, wi[1:], wj[1:]])
    # The slice tangent space at p is P-perp in R^4; take its part orthogonal to wi, wj.
    q, _ = np.linalg.qr(basis, mode="complete")
    w = np.concatenate(([0.0], q[:, 3]))
    w *= length / float(np.linalg.norm(w))
    if orientation_sign(p, w, wi, wj) < 0:
        w = -w
    return w


def multiflag_to_ideal_decoration(mf):
    """Rescale the flag directions to Minkowski norm -4 T0^2 and complete outward.

    psi(i), psi(j) are the rescaled flag directions and psi(1) is the unique
    vector of the same norm making (psi(1), psi(i), psi(j)) an outward basis.
    """
    p = mf.p
    T0 = p[0]
    length = 2.0 * T0
    wi = slice_representative(p, mf.vi)
    wj = slice_representative(p, mf.vj)
    wi = wi * (length / math.sqrt(-minkowski_inner(wi, wi)))
    wj = wj * (length / math.sqrt(-minkowski_inner(wj, wj)))
    w1 = _outward_completion(p, wi, wj, length)
    return DecoratedIdealPoint(p / T0, w1, wi, wj)


def ideal_decoration_to_multiflag(dip):
    """Basepoint from K = -4 T0^2 and the lifts of psi(i), psi(j) as flag directions."""
    return Multiflag(dip.basepoint, dip.psii, dip.psij)


def ideal_decoration_from_spinor(k):
    """(phi1(k) R, psi) via the multiflag of k."""
    return multiflag_to_ideal_decoration(multiflag_from_spinor(k))


__all__ = [
    "METRIC", "P0", "D_T", "D_W", "D_X", "D_Y", "D_Z", "ONE",
    "as_point", "minkowski_inner", "is_null", "is_future",
    "point_to_hermitian", "hermitian_to_point", "hermitian_det",
    "phi1", "phi1_matrix", "dphi1", "dphi1_matrix", "act_minkowski", "fibre_phase",
    "slice_representative", "slice_direction", "Flag", "flags_equal", "flag_angle",
    "Multiflag", "multiflags_equal", "multiflag_from_spinor", "act_multiflag",
    "orientation_sign", "DecoratedIdealPoint", "multiflag_to_ideal_decoration",
    "ideal_decoration_to_multiflag", "ideal_decoration_from_spinor",
]
