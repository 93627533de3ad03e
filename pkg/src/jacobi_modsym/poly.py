"""Homogeneous polynomials in X, Y with exact rational coefficients.

A polynomial of degree ``w`` is stored as ``w + 1`` coefficients, entry ``l``
being the coefficient of ``X**l * Y**(w - l)``.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

__all__ = ["HomPoly", "Mat2", "act", "evaluate", "bracket", "qf_power", "parse_poly", "format_poly"]


def _num(x):
    # keep integers as int; Fraction only when a denominator is present
    if isinstance(x, Fraction) and x.denominator == 1:
        return x.numerator
    return x


@dataclass(frozen=True)
class HomPoly:
    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(_num(Fraction(c)) for c in self.coeffs))
        if not self.coeffs:
            raise ValueError("a homogeneous polynomial needs at least one coefficient")

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @classmethod
    def monomial(cls, w, l, coeff=1):
        """``coeff * X**l * Y**(w - l)``."""
        c = [0] * (w + 1)
        c[l] = coeff
        return cls(tuple(c))

    @classmethod
    def zero(cls, w):
        return cls((0,) * (w + 1))

    @classmethod
    def from_linear_power(cls, u, v, w):
        """``(u*X + v*Y)**w``."""
        return cls(tuple(comb(w, l) * Fraction(u) ** l * Fraction(v) ** (w - l) for l in range(w + 1)))

    def is_zero(self):
        return not any(self.coeffs)

    def __add__(self, other):
        _check_degrees(self, other)
        return HomPoly(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other):
        _check_degrees(self, other)
        return HomPoly(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self):
        return HomPoly(tuple(-a for a in self.coeffs))

    def scale(self, s):
        return HomPoly(tuple(s * a for a in self.coeffs))

    def __mul__(self, other):
        if not isinstance(other, HomPoly):
            return self.scale(other)
        out = [0] * (self.degree + other.degree + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return HomPoly(tuple(out))

    __rmul__ = scale

    def __call__(self, x, y=1):
        """Homogeneous evaluation ``P(x, y)``."""
        return _num(sum(Fraction(c) * Fraction(x) ** l * Fraction(y) ** (self.degree - l)
                        for l, c in enumerate(self.coeffs)))

    def __str__(self):
        return format_poly(self)


def _check_degrees(p1, p2):
    if p1.degree != p2.degree:
        raise ValueError("degree mismatch: %d vs %d" % (p1.degree, p2.degree))


@dataclass(frozen=True)
class Mat2:
    """Integral 2x2 matrix ``[[a, b], [c, d]]`` of determinant +-1."""

    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.det not in (1, -1):
            raise ValueError("matrix %r is not unimodular (det %d)" % (self.rows(), self.det))

    @property
    def det(self):
        return self.a * self.d - self.b * self.c

    def rows(self):
        return [[self.a, self.b], [self.c, self.d]]

    def inverse(self):
        e = self.det  # 1/det == det for det = +-1
        return Mat2(e * self.d, -e * self.b, -e * self.c, e * self.a)

    def __matmul__(self, other):
        return Mat2(self.a * other.a + self.b * other.c, self.a * other.b + self.b * other.d,
                    self.c * other.a + self.d * other.c, self.c * other.b + self.d * other.d)

    def apply(self, x, y):
        """Column vector product ``A (x; y)``."""
        return self.a * x + self.b * y, self.c * x + self.d * y


IDENTITY = Mat2(1, 0, 0, 1)


def _linear_powers(u, v, n):
    # coefficient lists of (u X + v Y)^j for j = 0..n
    out = [[1]]
    for _ in range(n):
        prev = out[-1]
        nxt = [0] * (len(prev) + 1)
        for i, c in enumerate(prev):
            nxt[i] += v * c
            nxt[i + 1] += u * c
        out.append(nxt)
    return out


def act(A, P):
    """``(A.P)(X, Y) = P(A^{-1} (X; Y))`` for unimodular ``A``."""
    if not isinstance(A, Mat2):
        A = Mat2(*A)
    w = P.degree
    inv = A.inverse()
    # X' = inv.a X + inv.b Y,  Y' = inv.c X + inv.d Y
    xs = _linear_powers(inv.a, inv.b, w)
    ys = _linear_powers(inv.c, inv.d, w)
    out = [0] * (w + 1)
    for l, coeff in enumerate(P.coeffs):
        if not coeff:
            continue
        xl, yl = xs[l], ys[w - l]
        for i, x in enumerate(xl):
            if x:
                for j, y in enumerate(yl):
                    out[i + j] += coeff * x * y
    return HomPoly(tuple(out))


def evaluate(P, alpha):
    """``P(alpha) = P(alpha, 1)``, with ``P(inf) = P(1, 0)``.

    ``alpha`` may be a number, the string ``"inf"`` or any object with
    integer attributes ``p`` and ``q`` (a cusp ``p/q``, ``q = 0`` meaning
    infinity).
    """
    if isinstance(alpha, str):
        if alpha.strip().lower() in ("inf", "oo", "infinity"):
            return P.coeffs[-1]
        alpha = Fraction(alpha)
    if hasattr(alpha, "p") and hasattr(alpha, "q"):
        if alpha.q == 0:
            return P.coeffs[-1]
        alpha = Fraction(alpha.p, alpha.q)
    return P(alpha, 1)


def bracket_weights(P):
    """Integer weights ``(-1)^l l! (w-l)! a_l`` so that ``[P | R] = sum_l weight_l r_{w-l} / w!``."""
    w = P.degree
    return [(-1) ** l * factorial(l) * factorial(w - l) * a for l, a in enumerate(P.coeffs)]


def bracket(P1, P2):
    """The pairing ``[P1 | P2] = sum_l (-1)^l binom(w, l)^{-1} a_l b_{w-l}``."""
    _check_degrees(P1, P2)
    w = P1.degree
    weights = bracket_weights(P1)
    total = sum(u * b for u, b in zip(weights, reversed(P2.coeffs)))
    return _num(Fraction(total) / factorial(w))


def qf_power(Q, e):
    """Coefficients of ``(a X^2 + b XY + c Y^2)^e`` as a :class:`HomPoly`."""
    a, b, c = Q
    return HomPoly(tuple(quadratic_power_coeffs(a, b, c, e)))


def quadratic_power_coeffs(a, b, c, e):
    out = [1]
    for _ in range(e):
        nxt = [0] * (len(out) + 2)
        for i, x in enumerate(out):
            if x:
                nxt[i] += x * c
                nxt[i + 1] += x * b
                nxt[i + 2] += x * a
        out = nxt
    return out


def parse_poly(text, degree=None):
    """Parse ``[c0, c1, ..., cw]`` (entries integers or ``a/b``)."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError("polynomial must be written as [c0,c1,...], got %r" % text)
    body = s[1:-1].strip()
    if not body:
        raise ValueError("empty polynomial coefficient list")
    try:
        coeffs = tuple(Fraction(tok.strip()) for tok in body.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError("bad polynomial coefficient in %r: %s" % (text, exc)) from None
    if degree is not None and len(coeffs) != degree + 1:
        raise ValueError("expected %d coefficients (degree %d), got %d" % (degree + 1, degree, len(coeffs)))
    return HomPoly(coeffs)


def format_poly(P):
    return "[" + ",".join(str(c) for c in P.coeffs) + "]"
