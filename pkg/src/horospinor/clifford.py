"""Clifford (Vahlen) matrices: the group SL2 over the paravectors.

A 2x2 quaternionic matrix [[a, b], [c, d]] belongs to the group when its
columns (a, c) and (b, d) are spinors and its pseudo-determinant
a* d - c* b equals 1. Such matrices act on spinors by matrix-vector
multiplication and on paravectors plus infinity by v -> (av + b)(cv + d)^-1.
"""

import math
from dataclasses import dataclass

from .errors import NotASpinorError, NotCliffordError, NumericalDriftError
from .quaternion import ONE, ZERO, Quaternion, as_paravector, default_tol
from .spinor import Spinor, _rng, as_pair, check_spinor, complementary, random_paravector, random_quaternion


class _Infinity:
    """The point at infinity of the paravectors."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INF"

    def __reduce__(self):
        return (_Infinity, ())


INF = _Infinity()


def is_inf(z):
    return z is INF


class Mat2:
    """A 2x2 quaternionic matrix [[a, b], [c, d]] with no constraints."""

    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a, b, c, d):
        object.__setattr__(self, "a", Quaternion.coerce(a))
        object.__setattr__(self, "b", Quaternion.coerce(b))
        object.__setattr__(self, "c", Quaternion.coerce(c))
        object.__setattr__(self, "d", Quaternion.coerce(d))

    def __setattr__(self, name, value):
        raise AttributeError("matrices are immutable")

    @classmethod
    def from_columns(cls, k1, k2):
        a, c = as_pair(k1)
        b, d = as_pair(k2)
        return cls(a, b, c, d)

    @classmethod
    def from_dict(cls, m):
        return cls(m["a"], m["b"], m["c"], m["d"])

    def entries(self):
        return (self.a, self.b, self.c, self.d)

    def columns(self):
        return (self.a, self.c), (self.b, self.d)

    def __repr__(self):
        return "{}([[{!r}, {!r}], [{!r}, {!r}]])".format(
            type(self).__name__, self.a, self.b, self.c, self.d
        )

    def __eq__(self, other):
        if not isinstance(other, Mat2):
            return NotImplemented
        return self.entries() == other.entries()

    def __hash__(self):
        return hash(self.entries())

    def __matmul__(self, other):
        if isinstance(other, Mat2):
            return Mat2(
                self.a * other.a + self.b * other.c,
                self.a * other.b + self.b * other.d,
                self.c * other.a + self.d * other.c,
                self.c * other.b + self.d * other.d,
            )
        x, y = as_pair(other)
        return (self.a * x + self.b * y, self.c * x + self.d * y)

    def __sub__(self, other):
        return Mat2(self.a - other.a, self.b - other.b, self.c - other.c, self.d - other.d)

    def __neg__(self):
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def norm(self):
        return math.sqrt(sum(q.norm2() for q in self.entries()))

    def isclose(self, other, tol=None):
        tol = default_tol() if tol is None else tol
        scale = max(1.0, self.norm(), other.norm())
        return (self - other).norm() <= tol * scale

    def as_dict(self):
        return {k: q.to_list() for k, q in zip("abcd", self.entries())}


IDENTITY_MAT = Mat2(ONE, ZERO, ZERO, ONE)


def pdet(m):
    """Pseudo-determinant a* d - c* b of a 2x2 quaternionic matrix."""
    return m.a.star() * m.d - m.c.star() * m.b


def _redundant_residual(m):
    a, b, c, d = m.entries()
    para = [a * b.star(), c * d.star(), c.star() * a, d.star() * b,
            b * a.star(), d * c.star(), a.star() * c, b.star() * d]
    ones = [a * d.star() - b * c.star(), d * a.star() - c * b.star(),
            d.star() * a - b.star() * c, a.star() * d - c.star() * b]
    worst = max(abs(q.d) for q in para)
    worst = max(worst, max(abs(q - ONE) for q in ones))
    return worst


@dataclass(frozen=True)
class CliffordCheck:
    """Diagnostics from checking a matrix against the SL2 conditions.

    Acceptance uses the minimal conditions (spinor columns and pdet = 1);
    redundant_residual is the largest violation among the full list of
    paravector and unit conditions, reported as a cross-check.
    """

    valid: bool
    reason: str
    column_residuals: tuple
    pdet: Quaternion
    pdet_residual: float
    redundant_residual: float
    threshold: float

    def as_dict(self):
        return {
            "valid": self.valid,
            "reason": self.reason,
            "column_residuals": list(self.column_residuals),
            "pdet": self.pdet.to_list(),
            "pdet_residual": self.pdet_residual,
            "redundant_residual": self.redundant_residual,
            "threshold": self.threshold,
        }


def check_clifford(m, tol=None):
    tol = default_tol() if tol is None else tol
    col1 = check_spinor(m.a, m.c, tol)
    col2 = check_spinor(m.b, m.d, tol)
    p = pdet(m)
    p_res = abs(p - ONE)
    threshold = tol * (1.0 + abs(m.a) * abs(m.d) + abs(m.c) * abs(m.b))
    redundant = _redundant_residual(m)
    cols = (col1.residual_coords, col2.residual_coords)
    if not col1.valid or not col2.valid:
        reason = "column not spinor"
        if col1.reason == "zero spinor" or col2.reason == "zero spinor":
            reason = "zero column"
        return CliffordCheck(False, reason, cols, p, p_res, redundant, threshold)
    if p_res > threshold:
        return CliffordCheck(False, "pdet != 1", cols, p, p_res, redundant, threshold)
    return CliffordCheck(True, "ok", cols, p, p_res, redundant, threshold)


class CliffordMatrix(Mat2):
    """A validated element of SL2 over the paravectors.

    After validation the columns are re-projected onto the spinor condition
    and the matrix is rescaled by a real factor so that Re pdet = 1.
    """

    __slots__ = ()

    def __init__(self, a, b, c, d, tol=None):
        m = Mat2(a, b, c, d)
        check = check_clifford(m, tol)
        if not check.valid:
            residual = check.pdet_residual if check.reason == "pdet != 1" else check.column_residuals
            raise NotCliffordError("{} (pdet = {})".format(check.reason, check.pdet), residual=residual)
        k1 = Spinor(m.a, m.c, tol)
        k2 = Spinor(m.b, m.d, tol)
        m = Mat2.from_columns(k1, k2)
        re = pdet(m).a
        if re > 0 and re != 1.0:
            s = 1.0 / math.sqrt(re)
            m = Mat2(m.a * s, m.b * s, m.c * s, m.d * s)
        super().__init__(m.a, m.b, m.c, m.d)

    @classmethod
    def coerce(cls, m, tol=None):
        if isinstance(m, CliffordMatrix):
            return m
        if isinstance(m, dict):
            return cls(m["a"], m["b"], m["c"], m["d"], tol)
        if isinstance(m, Mat2):
            return cls(*m.entries(), tol=tol)
        (a, b), (c, d) = m
        return cls(a, b, c, d, tol)


def validate_clifford(a, b, c, d, tol=None):
    """Return the validated CliffordMatrix or raise NotCliffordError."""
    return CliffordMatrix(a, b, c, d, tol)


IDENTITY = CliffordMatrix(ONE, ZERO, ZERO, ONE)
INVERSION = CliffordMatrix(ZERO, -ONE, ONE, ZERO)
P0 = CliffordMatrix(ONE, ONE, ZERO, ONE)


def translation(v, tol=None):
    """[[1, v], [0, 1]] for a paravector v."""
    return CliffordMatrix(ONE, as_paravector(v, tol), ZERO, ONE)


def diagonal(a):
    """[[a, 0], [0, a^-1*]], acting on paravectors by v -> a v a*."""
    a = Quaternion.coerce(a)
    return CliffordMatrix(a, ZERO, ZERO, a.inverse().star())


def inverse(A):
    """[[d*, -b*], [-c*, a*]]."""
    return CliffordMatrix(A.d.star(), -A.b.star(), -A.c.star(), A.a.star())


def compose(A, B, tol=None):
    """Matrix product A B, re-validated against drift."""
    m = Mat2.__matmul__(A, B)
    try:
        return CliffordMatrix(*m.entries(), tol=tol)
    except NotCliffordError as exc:
        raise NumericalDriftError("product left SL2: {}".format(exc)) from exc


def act_spinor(A, k, tol=None):
    """A kappa, checked to be a spinor again."""
    out = Mat2.__matmul__(A, as_pair(k))
    try:
        return Spinor(*out, tol=tol)
    except NotASpinorError as exc:
        raise NumericalDriftError("image left the spinors: {}".format(exc)) from exc


def mobius_apply(A, v, tol=None):
    """v -> (av + b)(cv + d)^-1 on paravectors plus INF."""
    tol = default_tol() if tol is None else tol
    if is_inf(v):
        if abs(A.c) <= tol * (abs(A.a) + abs(A.c)):
            return INF
        return as_paravector(A.a * A.c.inverse(), math.sqrt(tol))
    v = as_paravector(v, tol)
    den = A.c * v + A.d
    if abs(den) <= tol * (1.0 + abs(A.c) * abs(v) + abs(A.d)):
        return INF
    # Loose check on the output: the k-part is rounding of a product chain.
    return as_paravector((A.a * v + A.b) * den.inverse(), math.sqrt(tol))


@dataclass(frozen=True)
class ParabolicCheck:
    """Result of the parabolicity test with the accompanying structural checks."""

    parabolic: bool
    square_residual: float
    distance_from_identity: float
    trace_residual: float
    b_residual: float
    c_residual: float

    def __bool__(self):
        return self.parabolic

    def as_dict(self):
        return {
            "parabolic": self.parabolic,
            "square_residual": self.square_residual,
            "distance_from_identity": self.distance_from_identity,
            "trace_residual": self.trace_residual,
            "b_residual": self.b_residual,
            "c_residual": self.c_residual,
        }


def is_parabolic(A, tol=None):
    """A != 1 and (A - 1)^2 = 0, with scale-aware thresholds.

    When parabolic, also reports |a + d* - 2| and the k-parts of b and c
    (all should vanish), relative to the size of A - 1.
    """
    tol = default_tol() if tol is None else tol
    N = A - IDENTITY_MAT
    n = N.norm()
    sq = Mat2.__matmul__(N, N).norm()
    scale = max(1.0, n)
    square_residual = sq / (scale * scale)
    parabolic = n > tol * max(1.0, A.norm()) and square_residual <= tol
    trace_res = abs(A.a + A.d.star() - 2.0) / scale
    return ParabolicCheck(
        parabolic,
        square_residual,
        n,
        trace_res,
        abs(A.b.d) / scale,
        abs(A.c.d) / scale,
    )


def parabolic_from_spinor(a, c, tol=None):
    """[[1 - a c*, a a*], [-c c*, 1 + c a*]], the parabolic fixing (a, c)."""
    k = Spinor(a, c, tol)
    a, c = k.xi, k.eta
    return CliffordMatrix(ONE - a * c.star(), a * a.star(), -(c * c.star()), ONE + c * a.star(), tol)


def column_completion(k, tol=None):
    """(kappa, -kappa-check / |kappa|^2), a matrix in SL2 with first column kappa."""
    k = Spinor.coerce(k, tol)
    n2 = k.norm2()
    kc = complementary(k)
    return CliffordMatrix(k.xi, kc.xi * (-1.0 / n2), k.eta, kc.eta * (-1.0 / n2), tol)


def random_clifford(seed=None, length=3):
    """Product of `length` random generators.

    Each factor is chosen uniformly among a translation [[1, v], [0, 1]]
    (v standard normal paravector), the inversion [[0, -1], [1, 0]] and a
    diagonal [[a, 0], [0, a^-1*]] (a standard normal quaternion).
    """
    rng = _rng(seed)
    A = IDENTITY
    for _ in range(length):
        kind = rng.integers(3)
        if kind == 0:
            G = translation(random_paravector(rng))
        elif kind == 1:
            G = INVERSION
        else:
            G = diagonal(random_quaternion(rng))
        A = compose(A, G, tol=1e-8)
    return A

