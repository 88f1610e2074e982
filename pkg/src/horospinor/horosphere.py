"""Horospheres in the hyperboloid and upper half-space models of H^4.

A future null vector p defines the horosphere {x : <x, x> = 1, T > 0,
<x, p> = 1}. In the upper half-space model a horosphere is a Euclidean
3-sphere tangent to the boundary paravector space at its centre, or a
horizontal hyperplane when the centre is infinity.
"""

from dataclasses import dataclass

import numpy as np

from .clifford import INF, is_inf
from .errors import DomainError
from .minkowski_flags import act_minkowski, as_point, is_future, is_null, minkowski_inner, phi1
from .quaternion import I, J, Quaternion, default_tol
from .spinor import Spinor


def _tol(tol):
    return default_tol() if tol is None else tol


@dataclass(frozen=True, eq=False)
class HorosphereHyp:
    """The horosphere <x, p> = 1 on the hyperboloid, stored as its null vector p."""

    p: np.ndarray

    def contains(self, x, tol=None):
        tol = _tol(tol)
        x = as_point(x)
        on_hyperboloid = abs(minkowski_inner(x, x) - 1.0) <= tol * max(1.0, float(x @ x))
        return bool(on_hyperboloid and x[0] > 0 and abs(minkowski_inner(x, self.p) - 1.0) <= tol * max(1.0, float(np.linalg.norm(x) * np.linalg.norm(self.p))))

    def act(self, A):
        return HorosphereHyp(act_minkowski(A, self.p))


def phi2(p, tol=None):
    p = as_point(p)
    if not (is_future(p) and is_null(p, tol)):
        raise DomainError("a horosphere needs a future null vector")
    return HorosphereHyp(p)


def boundary_to_uhs(p, tol=None):
    """(W + Xi + Yj) / (T - Z) for a future null p; INF when T - Z <= tol T."""
    T, W, X, Y, Z = as_point(p)
    den = T - Z
    if den <= _tol(tol) * T:
        return INF
    return Quaternion(W / den, X / den, Y / den, 0.0)


def hyperboloid_to_disc(x, tol=None):
    """(T, W, X, Y, Z) -> (W, X, Y, Z) / (1 + T)."""
    x = as_point(x)
    if x[0] <= 0 or abs(minkowski_inner(x, x) - 1.0) > _tol(tol) * max(1.0, float(x @ x)):
        raise DomainError("point is not on the upper sheet of the hyperboloid")
    return x[1:] / (1.0 + x[0])


def hyperboloid_boundary_to_disc(p, tol=None):
    """Boundary version: future null p -> (W, X, Y, Z) / T on the unit sphere."""
    p = as_point(p)
    if not (is_future(p) and is_null(p, tol)):
        raise DomainError("point is not a future null vector")
    return p[1:] / p[0]


def disc_boundary_to_uhs(u, tol=None):
    """(w + xi + yj) / (1 - z) for (w, x, y, z) on the unit sphere; INF at z = 1."""
    w, x, y, z = np.asarray(u, dtype=float)
    tol = _tol(tol)
    if abs(w * w + x * x + y * y + z * z - 1.0) > tol:
        raise DomainError("point is not on the unit sphere")
    den = 1.0 - z
    if den <= tol:
        return INF
    return Quaternion(w / den, x / den, y / den, 0.0)


def _unit_paravector(q):
    q = Quaternion(q.a, q.b, q.c, 0.0)
    return q * (1.0 / abs(q))


@dataclass(frozen=True, eq=False)
class DecoratedHorosphereUHS:
    """Centre, size and the two unit decoration directions of a horosphere.

    size is the Euclidean diameter for a finite centre and the height above
    the boundary when the centre is INF. The directions are the i- and
    j-directions at the north pole (or anywhere on the horizontal plane).
    """

    center: object
    size: float
    dir_i: Quaternion
    dir_j: Quaternion

    def isclose(self, other, tol=None):
        tol = _tol(tol)
        if is_inf(self.center) != is_inf(other.center):
            return False
        if not is_inf(self.center) and not self.center.isclose(other.center, tol):
            return False
        return (
            abs(self.size - other.size) <= tol * max(1.0, self.size, other.size)
            and self.dir_i.isclose(other.dir_i, tol)
            and self.dir_j.isclose(other.dir_j, tol)
        )

    def as_dict(self):
        return {
            "center": "inf" if is_inf(self.center) else self.center.to_paravector_list(),
            "size": self.size,
            "dir_i": self.dir_i.to_paravector_list(),
            "dir_j": self.dir_j.to_paravector_list(),
        }


def decorated_horosphere_from_spinor(k, tol=None):
    """Explicit horosphere and decoration of a spinor (xi, eta).

    eta != 0: centre xi eta^-1, diameter |eta|^-2, directions along
    eta^-1* i eta^-1 and eta^-1* j eta^-1.
    eta = 0 (|eta| <= tol |kappa|): centre INF, height |xi|^2, directions
    along xi i xi* and xi j xi*.
    """
    k = Spinor.coerce(k)
    xi, eta = k.xi, k.eta
    if abs(eta) <= _tol(tol) * abs(k):
        return DecoratedHorosphereUHS(
            INF,
            xi.norm2(),
            _unit_paravector(xi * I * xi.star()),
            _unit_paravector(xi * J * xi.star()),
        )
    e = eta.inverse()
    es = e.star()
    center = xi * e
    return DecoratedHorosphereUHS(
        Quaternion(center.a, center.b, center.c, 0.0),
        1.0 / eta.norm2(),
        _unit_paravector(es * I * e),
        _unit_paravector(es * J * e),
    )


def horosphere_center(k, tol=None):
    """Centre of the horosphere of k via the light cone: boundary_to_uhs(phi1(k))."""
    return boundary_to_uhs(phi1(k), tol)
