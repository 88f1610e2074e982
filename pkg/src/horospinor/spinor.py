"""Quaternionic spinors: validation, bracket, complementary spinors, tangent data.

A spinor is a nonzero pair kappa = (xi, eta) of quaternions such that
xi eta~ is a paravector. Tangent vectors to the space of spinors are plain
pairs of quaternions, passed around as 2-tuples.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotASpinorError
from .quaternion import ZERO, Quaternion, as_paravector, default_tol


def spinor_residual(xi, eta):
    """x0 y3 + x1 y2 - x2 y1 - x3 y0, the k-component of xi* eta."""
    return xi.a * eta.d + xi.b * eta.c - xi.c * eta.b - xi.d * eta.a


@dataclass(frozen=True)
class SpinorCheck:
    """Outcome of checking a quaternion pair against the spinor conditions.

    Residuals are the k-components of xi eta~, of xi* eta, and the
    coordinate expression x0 y3 + x1 y2 - x2 y1 - x3 y0. The first equals
    minus the other two, so all three vanish together.
    """

    valid: bool
    reason: str
    residual_bar: float
    residual_star: float
    residual_coords: float
    threshold: float

    def as_dict(self):
        return {
            "valid": self.valid,
            "reason": self.reason,
            "residual_xi_etabar": self.residual_bar,
            "residual_xistar_eta": self.residual_star,
            "residual_coords": self.residual_coords,
            "threshold": self.threshold,
        }


def check_spinor(xi, eta, tol=None):
    xi = Quaternion.coerce(xi)
    eta = Quaternion.coerce(eta)
    tol = default_tol() if tol is None else tol
    r_bar = (xi * eta.bar()).d
    r_star = (xi.star() * eta).d
    r_coords = spinor_residual(xi, eta)
    threshold = tol * (abs(xi) * abs(eta) + 1.0)
    if xi.norm2() == 0.0 and eta.norm2() == 0.0:
        return SpinorCheck(False, "zero spinor", r_bar, r_star, r_coords, threshold)
    worst = max(abs(r_bar), abs(r_star), abs(r_coords))
    if worst > threshold:
        return SpinorCheck(False, "not a spinor", r_bar, r_star, r_coords, threshold)
    return SpinorCheck(True, "ok", r_bar, r_star, r_coords, threshold)


class Spinor:
    """A validated spinor (xi, eta).

    Construction checks the spinor condition with the relative tolerance
    tol * (|xi||eta| + 1) and then rebuilds the smaller component from the
    larger so the condition holds exactly. Rounding then does not pile up
    along long chains.
    """

    __slots__ = ("xi", "eta")

    def __init__(self, xi, eta, tol=None):
        xi = Quaternion.coerce(xi)
        eta = Quaternion.coerce(eta)
        check = check_spinor(xi, eta, tol)
        if not check.valid:
            raise NotASpinorError(
                "{}: residual {!r}".format(check.reason, check.residual_coords),
                residual=check.residual_coords,
            )
        if check.residual_bar != 0.0:
            # Rebuild the smaller component from the larger one, which keeps
            # the correction well conditioned.
            w = xi * eta.bar()
            w = Quaternion(w.a, w.b, w.c, 0.0)
            if xi.norm2() >= eta.norm2():
                eta = (xi.inverse() * w).bar()
            else:
                xi = w * eta.bar().inverse()
        object.__setattr__(self, "xi", xi)
        object.__setattr__(self, "eta", eta)

    def __setattr__(self, name, value):
        raise AttributeError("Spinor is immutable")

    @classmethod
    def coerce(cls, k, tol=None):
        if isinstance(k, Spinor):
            return k
        if isinstance(k, dict):
            return cls(k["xi"], k["eta"], tol)
        xi, eta = k
        return cls(xi, eta, tol)

    def __iter__(self):
        yield self.xi
        yield self.eta

    def __getitem__(self, i):
        return (self.xi, self.eta)[i]

    def __len__(self):
        return 2

    def __repr__(self):
        return "Spinor({!r}, {!r})".format(self.xi, self.eta)

    def __eq__(self, other):
        if not isinstance(other, Spinor):
            return NotImplemented
        return self.xi == other.xi and self.eta == other.eta

    def __hash__(self):
        return hash((self.xi, self.eta))

    def __neg__(self):
        return Spinor(-self.xi, -self.eta)

    def __mul__(self, x):
        """Right multiplication kappa x, again a spinor for x != 0."""
        x = Quaternion.coerce(x)
        return Spinor(self.xi * x, self.eta * x)

    def norm2(self):
        return self.xi.norm2() + self.eta.norm2()

    def __abs__(self):
        return math.sqrt(self.norm2())

    def isclose(self, other, tol=None):
        other = Spinor.coerce(other)
        tol = default_tol() if tol is None else tol
        scale = max(1.0, abs(self), abs(other))
        diff = math.sqrt((self.xi - other.xi).norm2() + (self.eta - other.eta).norm2())
        return diff <= tol * scale

    def as_dict(self):
        return {"xi": self.xi.to_list(), "eta": self.eta.to_list()}


def validate_spinor(xi, eta, tol=None):
    """Return the validated Spinor or raise NotASpinorError with the residual."""
    return Spinor(xi, eta, tol)


def as_pair(k):
    """View a Spinor or any 2-sequence of quaternion-likes as a quaternion pair."""
    a, b = k
    return Quaternion.coerce(a), Quaternion.coerce(b)


def pair_add(p, q):
    return (p[0] + q[0], p[1] + q[1])


def pair_scale(p, s):
    return (p[0] * s, p[1] * s)


def pair_right_mul(p, x):
    x = Quaternion.coerce(x)
    return (p[0] * x, p[1] * x)


def pair_norm(p):
    return math.sqrt(p[0].norm2() + p[1].norm2())


def bracket(k1, k2):
    """{k1, k2} = xi1* eta2 - eta1* xi2, the pseudo-determinant of the columns."""
    xi1, eta1 = as_pair(k1)
    xi2, eta2 = as_pair(k2)
    return xi1.star() * eta2 - eta1.star() * xi2


def inner_product(k1, k2):
    """Re(xi1 xi2~ + eta1 eta2~), the Euclidean inner product on H^2."""
    xi1, eta1 = as_pair(k1)
    xi2, eta2 = as_pair(k2)
    return (xi1 * xi2.bar() + eta1 * eta2.bar()).a


def complementary(k):
    """The complementary spinor (eta', -xi')."""
    xi, eta = as_pair(k)
    out = (eta.prime(), -xi.prime())
    if isinstance(k, Spinor):
        return Spinor(*out)
    return out


def section_s(v, k, tol=None):
    """s_v(k) = k-check v for a paravector v, a tangent vector at k."""
    v = as_paravector(v, tol)
    c = complementary(as_pair(k))
    return (c[0] * v, c[1] * v)


@dataclass(frozen=True)
class TangentDecomposition:
    """Coefficients with nu = kappa x + kappa-check y."""

    x: Quaternion
    y: Quaternion

    def reconstruct(self, k):
        kc = complementary(as_pair(k))
        xi, eta = as_pair(k)
        return (xi * self.x + kc[0] * self.y, eta * self.x + kc[1] * self.y)


def decompose_tangent(k, nu):
    """Split nu = (alpha, beta) as kappa x + kappa-check y.

    x = (xi~ alpha + eta~ beta) / |kappa|^2 and
    y = (eta* alpha - xi* beta) / |kappa|^2.
    """
    xi, eta = as_pair(k)
    alpha, beta = as_pair(nu)
    n2 = xi.norm2() + eta.norm2()
    x = (xi.bar() * alpha + eta.bar() * beta) * (1.0 / n2)
    y = (eta.star() * alpha - xi.star() * beta) * (1.0 / n2)
    return TangentDecomposition(x, y)


def tangent_residual(k, nu):
    """k-component of alpha eta~ + xi beta~; zero iff nu is tangent to the spinors at k."""
    xi, eta = as_pair(k)
    alpha, beta = as_pair(nu)
    return (alpha * eta.bar() + xi * beta.bar()).d


def _rng(seed):
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_quaternion(seed):
    """Quaternion with independent standard normal components."""
    return Quaternion(*_rng(seed).standard_normal(4))


def random_paravector(seed):
    return Quaternion(*_rng(seed).standard_normal(3), 0.0)


def random_spinor(seed=None, p_inf=0.05):
    """A spinor that satisfies the spinor condition exactly.

    Draws u ~ U(0, 1); if u < p_inf returns (xi, 0) with xi standard normal,
    otherwise returns (v eta, eta) with eta a standard normal quaternion and
    v a standard normal paravector, so that xi eta~ = v |eta|^2.
    The generator is numpy's PCG64 via default_rng.
    """
    rng = _rng(seed)
    if rng.random() < p_inf:
        return Spinor(random_quaternion(rng), ZERO)
    eta = random_quaternion(rng)
    v = random_paravector(rng)
    return Spinor(v * eta, eta)
