"""Quasideterminants of 2x2 quaternionic matrices and left quasi-Plucker coordinates.

A 2x4 matrix is given by four spinor columns k0, k1, k2, k3 (0-based).
Quasideterminant positions (p, q) and the row choice s are 1-based, as
is usual for matrix entries.
"""

from .clifford import Mat2
from .errors import DomainError, UndefinedQuasideterminantError
from .quaternion import Quaternion, default_tol
from .spinor import Spinor, as_pair, bracket


def _tol(tol):
    return default_tol() if tol is None else tol


def _as_mat(M):
    if isinstance(M, Mat2):
        return M
    (a, b), (c, d) = M
    return Mat2(a, b, c, d)


def _inv(x, scale, tol):
    if abs(x) <= tol * scale:
        raise UndefinedQuasideterminantError("quasideterminant inverts a zero entry")
    return x.inverse()


def quasidet_2x2(M, p, q, tol=None):
    """|M|_{pq} for p, q in {1, 2}.

    |M|11 = a - b d^-1 c    |M|12 = b - a c^-1 d
    |M|21 = c - d b^-1 a    |M|22 = d - c a^-1 b
    """
    M = _as_mat(M)
    a, b, c, d = M.entries()
    tol = _tol(tol)
    scale = max(1.0, M.norm())
    if (p, q) == (1, 1):
        return a - b * _inv(d, scale, tol) * c
    if (p, q) == (1, 2):
        return b - a * _inv(c, scale, tol) * d
    if (p, q) == (2, 1):
        return c - d * _inv(b, scale, tol) * a
    if (p, q) == (2, 2):
        return d - c * _inv(a, scale, tol) * b
    raise DomainError("quasideterminant position must be in {1, 2} x {1, 2}")


def spinor_quasidets(k1, k2):
    """Closed forms of the four quasideterminants of the matrix with columns k1, k2.

    With D = {k1, k2}: |A|11 = eta2^-1* D*, |A|12 = -eta1^-1* D,
    |A|21 = -xi2^-1* D*, |A|22 = xi1^-1* D. Entries whose formula needs the
    inverse of a zero are None.
    """
    xi1, eta1 = as_pair(k1)
    xi2, eta2 = as_pair(k2)
    D = bracket(k1, k2)

    def inv_star(x):
        return None if x.norm2() == 0.0 else x.inverse().star()

    out = {}
    for key, x, sign, val in (
        ((1, 1), eta2, 1.0, D.star()),
        ((1, 2), eta1, -1.0, D),
        ((2, 1), xi2, -1.0, D.star()),
        ((2, 2), xi1, 1.0, D),
    ):
        xs = inv_star(x)
        out[key] = None if xs is None else xs * val * sign
    return out


class SpinorQuad:
    """Four spinors viewed as the columns of a 2x4 quaternionic matrix."""

    __slots__ = ("columns",)

    def __init__(self, columns):
        cols = tuple(Spinor.coerce(k) for k in columns)
        if len(cols) != 4:
            raise DomainError("a quad has exactly four spinor columns")
        object.__setattr__(self, "columns", cols)

    def __setattr__(self, name, value):
        raise AttributeError("SpinorQuad is immutable")

    def __getitem__(self, i):
        return self.columns[i]

    def __iter__(self):
        return iter(self.columns)

    def submatrix(self, l, n):
        return Mat2.from_columns(self.columns[l], self.columns[n])

    @classmethod
    def coerce(cls, quad):
        return quad if isinstance(quad, SpinorQuad) else cls(quad)


def _check_indices(*idx):
    if len(set(idx)) != len(idx) or any(i not in (0, 1, 2, 3) for i in idx):
        raise DomainError("quasi-Plucker indices must be distinct and in 0..3")


def quasi_plucker(quad, l, m, n, s=None, tol=None):
    """p^n_{lm} = |(k_l, k_n)|_{s1}^-1 |(k_m, k_n)|_{s1}.

    s = None uses row 1 when defined and falls back to row 2.
    """
    quad = SpinorQuad.coerce(quad)
    _check_indices(l, m, n)
    if s is None:
        try:
            return quasi_plucker(quad, l, m, n, 1, tol)
        except UndefinedQuasideterminantError:
            return quasi_plucker(quad, l, m, n, 2, tol)
    if s not in (1, 2):
        raise DomainError("row choice s must be 1 or 2")
    tol = _tol(tol)
    left = quasidet_2x2(quad.submatrix(l, n), s, 1, tol)
    right = quasidet_2x2(quad.submatrix(m, n), s, 1, tol)
    scale = max(1.0, quad.submatrix(l, n).norm())
    return _inv(left, scale, tol) * right


def quasi_plucker_bracket(quad, l, m, n):
    """{k_n, k_l}^-1 {k_n, k_m}, the same coordinate through the bracket."""
    quad = SpinorQuad.coerce(quad)
    _check_indices(l, m, n)
    lam = bracket(quad[n], quad[l])
    if lam.norm2() == 0.0:
        raise UndefinedQuasideterminantError("bracket {k_n, k_l} vanishes")
    return lam.inverse() * bracket(quad[n], quad[m])


def gr_skew_symmetry_residual(quad, l, m, n, s=None, tol=None):
    """p^n_{lm} p^l_{mn} p^m_{nl} + 1."""
    quad = SpinorQuad.coerce(quad)
    prod = (
        quasi_plucker(quad, l, m, n, s, tol)
        * quasi_plucker(quad, m, n, l, s, tol)
        * quasi_plucker(quad, n, l, m, s, tol)
    )
    return prod + 1.0


def gr_plucker_residual(quad, a, b, l, m, s=None, tol=None):
    """p^l_{ab} p^m_{ba} + p^l_{am} p^b_{ma} - 1."""
    quad = SpinorQuad.coerce(quad)
    _check_indices(a, b, l, m)
    lhs = (
        quasi_plucker(quad, a, b, l, s, tol) * quasi_plucker(quad, b, a, m, s, tol)
        + quasi_plucker(quad, a, m, l, s, tol) * quasi_plucker(quad, m, a, b, s, tol)
    )
    return lhs - Quaternion(1.0)
