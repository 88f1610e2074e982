"""Quaternionic lambda lengths between spin-decorated horospheres.

Two routes are provided. lambda_pdet evaluates the bracket
{k1, k2} = xi1* eta2 - eta1* xi2. lambda_geometric moves the pair to
standard position (centres INF and 0) with explicit generators, measures
the signed distance rho between the horospheres along the vertical
geodesic and the rotation taking the inward frame of the first decoration
to the outward frame of the second, and returns exp((rho + theta v k) / 2).
The frame route only sees non-spin frames, so its value is defined up to sign.

Frame conventions in the upper half-space, coordinates (w, x, y, z):
a frame (v1, vi, vj, N) is positively oriented. Both the inward frame of a
horosphere centred at INF and the outward frame of a horosphere centred
at 0, taken at the top/bottom point on the z-axis, have N = -d_z, which
forces v1 = -(vi x vj) with the cross product taken in the wxy 3-plane.
"""

import math
from dataclasses import dataclass

import numpy as np
from scipy.spatial.transform import Rotation

from .clifford import INF, CliffordMatrix, IDENTITY, Mat2, compose, is_inf, mobius_apply, translation
from .errors import DegenerateConfigurationError, DomainError, NumericalDriftError
from .horosphere import decorated_horosphere_from_spinor
from .quaternion import K, ONE, ZERO, Quaternion, default_tol
from .spinor import Spinor, bracket


def _tol(tol):
    return default_tol() if tol is None else tol


def lambda_pdet(k1, k2):
    """The lambda length {k1, k2} = xi1* eta2 - eta1* xi2."""
    return bracket(k1, k2)


@dataclass(frozen=True)
class QuaternionicDistance:
    """rho + theta (v k): translation rho, then rotation by theta about the paravector v."""

    rho: float
    theta: float
    axis: Quaternion

    def lambda_length(self):
        vk = self.axis * K
        h = self.theta / 2.0
        return (ONE * math.cos(h) + vk * math.sin(h)) * math.exp(self.rho / 2.0)

    @classmethod
    def from_lambda(cls, lam):
        """Inverse of lambda_length for lam != 0, with theta in [0, 2 pi]."""
        lam = Quaternion.coerce(lam)
        r = abs(lam)
        if r == 0.0:
            raise DomainError("lambda length 0 has no quaternionic distance")
        u = lam * (1.0 / r)
        s = math.sqrt(u.b ** 2 + u.c ** 2 + u.d ** 2)
        half = math.atan2(s, u.a)
        w = Quaternion(0.0, u.b / s, u.c / s, u.d / s) if s > 0 else Quaternion(0.0, 0.0, 0.0, 1.0)
        axis = -(w * K)
        return cls(2.0 * math.log(r), 2.0 * half, Quaternion(axis.a, axis.b, axis.c, 0.0))


def _center(k, tol):
    if abs(k.eta) <= tol * abs(k):
        return INF
    c = k.xi * k.eta.inverse()
    return Quaternion(c.a, c.b, c.c, 0.0)


def _same_center(z1, z2, tol):
    if is_inf(z1) or is_inf(z2):
        return is_inf(z1) and is_inf(z2)
    return z1.isclose(z2, tol)


def _apply(A, k):
    a, c = Mat2.__matmul__(A, (k.xi, k.eta))
    return a, c


def reduce_to_standard(k1, k2, tol=None):
    """Return (A, A k1, A k2) with A k1 centred at INF and A k2 centred at 0.

    A is built from the centres z1, z2 alone: the inversion
    [[0, -1], [1, -z1]] (skipped when z1 = INF) followed by the translation
    by minus the image of z2. The tiny leftover eta of A k1 and xi of A k2
    are set to zero after checking they are rounding noise.
    """
    tol = _tol(tol)
    k1 = Spinor.coerce(k1)
    k2 = Spinor.coerce(k2)
    z1 = _center(k1, tol)
    z2 = _center(k2, tol)
    if _same_center(z1, z2, tol):
        raise DomainError("horospheres share a centre; no standard position")
    A = IDENTITY
    if not is_inf(z1):
        A = CliffordMatrix(ZERO, -ONE, ONE, -z1)
    w2 = mobius_apply(A, z2, tol)
    if is_inf(w2):
        raise NumericalDriftError("second centre was sent to infinity")
    A = compose(translation(-w2), A, tol=1e-8)

    xi1, eta1 = _apply(A, k1)
    xi2, eta2 = _apply(A, k2)
    loose = math.sqrt(tol)
    if abs(eta1) > loose * math.sqrt(xi1.norm2() + eta1.norm2()):
        raise NumericalDriftError("first spinor did not reach the centre INF")
    if abs(xi2) > loose * math.sqrt(xi2.norm2() + eta2.norm2()):
        raise NumericalDriftError("second spinor did not reach the centre 0")
    return A, Spinor(xi1, ZERO), Spinor(ZERO, eta2)


def _vec3(q):
    return np.array([q.a, q.b, q.c])


def _frame_matrix(dir_i, dir_j):
    """Columns (v1, vi, vj) in wxy coordinates with v1 = -(vi x vj)."""
    vi = _vec3(dir_i)
    vj = _vec3(dir_j)
    return np.column_stack([-np.cross(vi, vj), vi, vj])


def standard_frames(k1, k2, tol=None):
    """rho and the frame matrices B1 (inward, horosphere 1) and B2 (outward, horosphere 2)."""
    tol = _tol(tol)
    k1 = Spinor.coerce(k1)
    k2 = Spinor.coerce(k2)
    if abs(k1.eta) > tol * abs(k1) or abs(k2.xi) > tol * abs(k2):
        raise DomainError("spinors are not in standard position (centres INF and 0)")
    h1 = decorated_horosphere_from_spinor(k1, tol)
    h2 = decorated_horosphere_from_spinor(k2, tol)
    # The geodesic runs down the z-axis from height h1 to height D2.
    rho = math.log(h1.size / h2.size)
    return rho, _frame_matrix(h1.dir_i, h1.dir_j), _frame_matrix(h2.dir_i, h2.dir_j)


def quaternionic_distance_standard(k1, k2, tol=None):
    """Quaternionic distance from the inward frame of k1 to the outward frame of k2.

    Vertical transport keeps Euclidean directions, so the remaining rotation
    is C = B1^-1 B2 written in the paravector identification of frame 1.
    """
    rho, B1, B2 = standard_frames(k1, k2, tol)
    C = np.linalg.solve(B1, B2)
    rotvec = Rotation.from_matrix(C).as_rotvec()
    theta = float(np.linalg.norm(rotvec))
    if theta == 0.0:
        axis = Quaternion(1.0)
    else:
        v = rotvec / theta
        axis = Quaternion(v[0], v[1], v[2], 0.0)
    return QuaternionicDistance(rho, theta, axis)


def lambda_geometric_standard(k1, k2, tol=None):
    """exp(d / 2) for spinors in standard position; defined up to sign."""
    return quaternionic_distance_standard(k1, k2, tol).lambda_length()


def lambda_geometric(k1, k2, tol=None):
    """Frame-based lambda length after reduce_to_standard; defined up to sign."""
    _, s1, s2 = reduce_to_standard(k1, k2, tol)
    return lambda_geometric_standard(s1, s2, tol)


def signed_match_residual(a, b):
    """min over s = +1, -1 of |a - s b| / max(1, |a|, |b|)."""
    a = Quaternion.coerce(a)
    b = Quaternion.coerce(b)
    scale = max(1.0, abs(a), abs(b))
    return min(abs(a - b), abs(a + b)) / scale


def antisymmetry_residual(k1, k2):
    """|lambda12 + lambda21*|."""
    return abs(lambda_pdet(k1, k2) + lambda_pdet(k2, k1).star())


def _lambda_checked(ka, kb, tol, label):
    lam = lambda_pdet(ka, kb)
    if abs(lam) <= tol * abs(Spinor.coerce(ka)) * abs(Spinor.coerce(kb)):
        raise DegenerateConfigurationError("lambda_{} vanishes".format(label))
    return lam


def ptolemy_lhs(k0, k1, k2, k3, tol=None):
    """l02^-1 l01 l31^-1 l32 + l02^-1 l03 l13^-1 l12 (all six lambdas must be nonzero)."""
    tol = _tol(tol)
    ks = (k0, k1, k2, k3)
    lam = {}
    for a, b in ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)):
        lam[a, b] = _lambda_checked(ks[a], ks[b], tol, "{}{}".format(a, b))
        lam[b, a] = -lam[a, b].star()
    inv02 = lam[0, 2].inverse()
    return (
        inv02 * lam[0, 1] * lam[3, 1].inverse() * lam[3, 2]
        + inv02 * lam[0, 3] * lam[1, 3].inverse() * lam[1, 2]
    )


def ptolemy_residual(k0, k1, k2, k3, tol=None):
    """Left side of the quaternionic Ptolemy equation minus 1."""
    return ptolemy_lhs(k0, k1, k2, k3, tol) - 1.0


def triangle_holonomy(k1, k2, k3, tol=None):
    """lambda12 lambda32^-1 lambda31, or INF when lambda32 = 0."""
    tol = _tol(tol)
    l32 = lambda_pdet(k3, k2)
    if abs(l32) <= tol * abs(Spinor.coerce(k3)) * abs(Spinor.coerce(k2)):
        return INF
    return lambda_pdet(k1, k2) * l32.inverse() * lambda_pdet(k3, k1)


def holonomy_residual(k1, k2, k3, tol=None):
    """|k-component| / (1 + |h|) of the triangle holonomy h (0 for INF)."""
    h = triangle_holonomy(k1, k2, k3, tol)
    if is_inf(h):
        return 0.0
    return abs(h.d) / (1.0 + abs(h))
