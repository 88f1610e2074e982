"""Quaternion arithmetic, the three conjugations, and paravector geometry.

A quaternion is q = a + bi + cj + dk with i^2 = j^2 = -1 and ij = k.
Paravectors are the quaternions with d = 0; they model Euclidean 3-space
through (x, y, z) <-> x + yi + zj, with (1, i, j) as the oriented basis.

Three conjugations are used throughout:

    prime  q' = a - bi - cj + dk   (an automorphism)
    bar    q~ = a - bi - cj - dk   (an anti-automorphism)
    star   q* = a + bi + cj - dk   (an anti-automorphism, fixes paravectors)
"""

import cmath
import math

import numpy as np

from .errors import DomainError

_DEFAULT_TOL = 1e-9


def default_tol():
    """Return the package-wide relative comparison tolerance."""
    return _DEFAULT_TOL


def set_default_tol(tol):
    """Change the package-wide relative comparison tolerance."""
    global _DEFAULT_TOL
    if not tol >= 0:
        raise DomainError("tolerance must be non-negative")
    _DEFAULT_TOL = float(tol)


def _tol(tol):
    return _DEFAULT_TOL if tol is None else tol


class Quaternion:
    """Immutable quaternion a + bi + cj + dk with float components."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0.0, b=0.0, c=0.0, d=0.0):
        object.__setattr__(self, "a", float(a))
        object.__setattr__(self, "b", float(b))
        object.__setattr__(self, "c", float(c))
        object.__setattr__(self, "d", float(d))

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    @classmethod
    def coerce(cls, x):
        """Turn a real number, a length-4 sequence or a Quaternion into a Quaternion."""
        if isinstance(x, Quaternion):
            return x
        if isinstance(x, (int, float, np.integer, np.floating)):
            return cls(x)
        seq = list(x)
        if len(seq) == 3:
            return cls(seq[0], seq[1], seq[2], 0.0)
        if len(seq) != 4:
            raise DomainError("expected 4 quaternion components (or 3 for a paravector)")
        return cls(*seq)

    @classmethod
    def paravector(cls, x, y=0.0, z=0.0):
        return cls(x, y, z, 0.0)

    def __iter__(self):
        yield from (self.a, self.b, self.c, self.d)

    def __getstate__(self):
        return (self.a, self.b, self.c, self.d)

    def __setstate__(self, state):
        for name, value in zip(self.__slots__, state):
            object.__setattr__(self, name, value)

    def __repr__(self):
        return "Quaternion({!r}, {!r}, {!r}, {!r})".format(self.a, self.b, self.c, self.d)

    def __str__(self):
        return "{:g}{:+g}i{:+g}j{:+g}k".format(self.a, self.b, self.c, self.d)

    def __eq__(self, other):
        try:
            other = Quaternion.coerce(other)
        except (TypeError, DomainError):
            return NotImplemented
        return tuple(self) == tuple(other)

    def __hash__(self):
        return hash(tuple(self))

    def __add__(self, other):
        o = Quaternion.coerce(other)
        return Quaternion(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __sub__(self, other):
        o = Quaternion.coerce(other)
        return Quaternion(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __rsub__(self, other):
        return Quaternion.coerce(other) - self

    def __neg__(self):
        return Quaternion(-self.a, -self.b, -self.c, -self.d)

    def __pos__(self):
        return self

    def __mul__(self, other):
        if isinstance(other, (int, float, np.integer, np.floating)):
            s = float(other)
            return Quaternion(self.a * s, self.b * s, self.c * s, self.d * s)
        o = Quaternion.coerce(other)
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = o.a, o.b, o.c, o.d
        return Quaternion(
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        )

    def __rmul__(self, other):
        # Only reached for scalars and sequences on the left.
        if isinstance(other, (int, float, np.integer, np.floating)):
            return self * other
        return Quaternion.coerce(other) * self

    def __truediv__(self, other):
        """Right division: q / p = q p^-1."""
        if isinstance(other, (int, float, np.integer, np.floating)):
            if other == 0:
                raise DomainError("division by zero")
            return self * (1.0 / other)
        return self * Quaternion.coerce(other).inverse()

    def __abs__(self):
        return math.sqrt(self.norm2())

    def norm2(self):
        return self.a * self.a + self.b * self.b + self.c * self.c + self.d * self.d

    @property
    def real(self):
        return self.a

    def bar(self):
        return Quaternion(self.a, -self.b, -self.c, -self.d)

    def prime(self):
        return Quaternion(self.a, -self.b, -self.c, self.d)

    def star(self):
        return Quaternion(self.a, self.b, self.c, -self.d)

    def inverse(self):
        n2 = self.norm2()
        if n2 == 0.0:
            raise DomainError("zero quaternion has no inverse")
        return Quaternion(self.a / n2, -self.b / n2, -self.c / n2, -self.d / n2)

    def is_paravector(self, tol=None):
        return abs(self.d) <= _tol(tol) * (1.0 + abs(self))

    def isclose(self, other, tol=None):
        """Relative closeness: |q - p| <= tol * max(1, |q|, |p|)."""
        o = Quaternion.coerce(other)
        scale = max(1.0, abs(self), abs(o))
        return abs(self - o) <= _tol(tol) * scale

    def to_list(self):
        return [self.a, self.b, self.c, self.d]

    def to_paravector_list(self):
        return [self.a, self.b, self.c]


ZERO = Quaternion(0.0)
ONE = Quaternion(1.0)
I = Quaternion(0.0, 1.0)
J = Quaternion(0.0, 0.0, 1.0)
K = Quaternion(0.0, 0.0, 0.0, 1.0)
PARAVECTOR_BASIS = (ONE, I, J)


def conjugate(q, kind):
    """Apply one of the conjugations 'prime', 'bar' or 'star'."""
    q = Quaternion.coerce(q)
    if kind == "prime":
        return q.prime()
    if kind == "bar":
        return q.bar()
    if kind == "star":
        return q.star()
    raise DomainError("unknown conjugation {!r}".format(kind))


def inverse(q):
    return Quaternion.coerce(q).inverse()


def as_paravector(q, tol=None):
    """Check that q is a paravector and return it with the k-part set to 0."""
    q = Quaternion.coerce(q)
    if not q.is_paravector(tol):
        raise DomainError("not a paravector: k-component {!r}".format(q.d))
    return Quaternion(q.a, q.b, q.c, 0.0)


def polar_decompose(q):
    """Return (r, u, theta) with q = r (cos theta + u sin theta).

    u is a unit imaginary quaternion and theta lies in [0, pi]. When q is
    real the imaginary direction is undetermined and u = i is used.
    """
    q = Quaternion.coerce(q)
    r = abs(q)
    if r == 0.0:
        raise DomainError("zero quaternion has no polar form")
    s = math.sqrt(q.b * q.b + q.c * q.c + q.d * q.d)
    theta = math.atan2(s, q.a)
    if s == 0.0:
        return r, I, theta
    return r, Quaternion(0.0, q.b / s, q.c / s, q.d / s), theta


def qexp(q):
    """Quaternion exponential e^q."""
    q = Quaternion.coerce(q)
    s = math.sqrt(q.b * q.b + q.c * q.c + q.d * q.d)
    ea = math.exp(q.a)
    if s == 0.0:
        return Quaternion(ea)
    f = ea * math.sin(s) / s
    return Quaternion(ea * math.cos(s), f * q.b, f * q.c, f * q.d)


def para_dot_cross(v, w, tol=None):
    """Dot and cross product of paravectors, read off from v w~ = dot - cross k."""
    v = as_paravector(v, tol)
    w = as_paravector(w, tol)
    vw = v * w.bar()
    dot = vw.a
    cross = (vw - w * v.bar()) * K * 0.5
    return dot, Quaternion(cross.a, cross.b, cross.c, 0.0)


def sigma_apply(q, x):
    """sigma(q)(x) = q x q*."""
    q = Quaternion.coerce(q)
    return q * Quaternion.coerce(x) * q.star()


def sigma_matrix(q):
    """3x3 real matrix of sigma(q) on paravectors in the basis (1, i, j)."""
    q = Quaternion.coerce(q)
    cols = [sigma_apply(q, e) for e in PARAVECTOR_BASIS]
    return np.array([[c.a, c.b, c.c] for c in cols]).T


def rotate_paravector(x, axis, angle):
    """Right-handed rotation of the paravector x about a unit paravector axis."""
    x = Quaternion.coerce(x)
    v = np.array(Quaternion.coerce(axis).to_paravector_list())
    p = np.array(x.to_paravector_list())
    cos_t, sin_t = math.cos(angle), math.sin(angle)
    out = p * cos_t + np.cross(v, p) * sin_t + v * np.dot(v, p) * (1.0 - cos_t)
    return Quaternion(out[0], out[1], out[2], 0.0)


def sigma_rotation_data(q):
    """Return (axis, angle, dilation) describing sigma(q) on paravectors.

    For q = r e^{theta u}, sigma(q) is the rotation by 2 theta about the
    unit paravector -u k, composed with dilation by r^2.
    """
    r, u, theta = polar_decompose(q)
    axis = -(u * K)
    axis = Quaternion(axis.a, axis.b, axis.c, 0.0)
    angle = math.fmod(2.0 * theta, 2.0 * math.pi)
    return axis, angle, r * r


def paravector_sqrt(v, tol=None):
    """A paravector w with w^2 = v.

    Writing v = x + y u with u a unit in span{i, j} and y >= 0, the square
    root of the complex number x + yi gives w = a + b u.
    """
    v = as_paravector(v, tol)
    y = math.hypot(v.b, v.c)
    root = cmath.sqrt(complex(v.a, y))
    if y == 0.0:
        # u is free here; i keeps sqrt of a negative real inside span{1, i}.
        return Quaternion(root.real, root.imag, 0.0, 0.0)
    # Rescale before normalising so denormal components keep their direction.
    m = max(abs(v.b), abs(v.c))
    ub, uc = v.b / m, v.c / m
    n = math.hypot(ub, uc)
    return Quaternion(root.real, root.imag * (ub / n), root.imag * (uc / n), 0.0)
