"""Exact arithmetic in the golden field Q(phi) and the cyclotomic ring Z[zeta5].

Two number types back every geometric predicate in the package:

* :class:`GoldenNumber` -- a + b*phi with rational a, b, where phi is the
  golden ratio, the positive root of x^2 = x + 1.
* :class:`Cyclotomic5` -- c0 + c1*z + c2*z^2 + c3*z^3 with integer
  coefficients and z = exp(2*pi*i/5).  The basis (1, z, z^2, z^3) gives a
  unique representation; z^4 is rewritten as -1 - z - z^2 - z^3.

Floating point appears only in the embeddings used for rendering and
diagnostics; signs, comparisons and equality are decided with integer
arithmetic throughout.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

Rational = Union[int, Fraction]

# phi and the four primitive embeddings of zeta5, as fixed double literals so
# rendered output is byte-stable across platforms/libms.
PHI = 1.618033988749895
_COS = (1.0, 0.30901699437494745, -0.8090169943749473, -0.8090169943749475)
_SIN = (0.0, 0.9510565162951535, 0.5877852522924731, -0.5877852522924732)


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def gn_sign_int(a, b) -> int:
    """Exact sign of a + b*phi for integer (or rational) a, b.

    Writes a + b*phi = ((2a + b) + b*sqrt(5)) / 2 and compares (2a+b)^2
    with 5 b^2, so only integer arithmetic is involved.
    """
    if b == 0:
        return _sign(a)
    u = 2 * a + b
    if u >= 0 and b > 0:
        return 1
    if u <= 0 and b < 0:
        return -1
    # u and b have strictly opposite signs here
    d = u * u - 5 * b * b
    return _sign(d) if u > 0 else -_sign(d)


class GoldenNumber:
    """An exact element a + b*phi of Q(phi).

    Coefficients are stored as :class:`fractions.Fraction`, which keeps them
    in lowest terms with positive denominators.  Values are immutable and
    hashable; all arithmetic is closed (phi^2 is reduced via phi^2 = phi+1).
    """

    __slots__ = ("a", "b")

    def __init__(self, a: Rational = 0, b: Rational = 0) -> None:
        object.__setattr__(self, "a", a if type(a) is Fraction else Fraction(a))
        object.__setattr__(self, "b", b if type(b) is Fraction else Fraction(b))

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("GoldenNumber is immutable")

    def __repr__(self) -> str:
        return f"GoldenNumber({self.a}, {self.b})"

    def __str__(self) -> str:
        return f"{self.a} + {self.b}*phi"

    # -- ring/field operations -------------------------------------------

    def __add__(self, other) -> GoldenNumber:
        other = _as_golden(other)
        if other is NotImplemented:
            return NotImplemented
        return GoldenNumber(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other) -> GoldenNumber:
        other = _as_golden(other)
        if other is NotImplemented:
            return NotImplemented
        return GoldenNumber(self.a - other.a, self.b - other.b)

    def __rsub__(self, other) -> GoldenNumber:
        return _as_golden(other) - self

    def __neg__(self) -> GoldenNumber:
        return GoldenNumber(-self.a, -self.b)

    def __mul__(self, other) -> GoldenNumber:
        other = _as_golden(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        bd = b * d
        return GoldenNumber(a * c + bd, a * d + b * c + bd)

    __rmul__ = __mul__

    def inverse(self) -> GoldenNumber:
        # (a + b*phi)(a + b - b*phi) = a^2 + a*b - b^2, the field norm.
        n = self.a * self.a + self.a * self.b - self.b * self.b
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(phi)")
        return GoldenNumber((self.a + self.b) / n, -self.b / n)

    def __truediv__(self, other) -> GoldenNumber:
        other = _as_golden(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> GoldenNumber:
        return _as_golden(other) * self.inverse()

    def __pow__(self, n: int) -> GoldenNumber:
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        result = GoldenNumber(1, 0)
        for _ in range(abs(n)):
            result = result * base
        return result

    # -- comparisons (exact, via gn_sign) --------------------------------

    def sign(self) -> int:
        """Exact sign in {-1, 0, +1}; zero only when a = b = 0."""
        da, db = self.a.denominator, self.b.denominator
        # clear denominators; the common positive factor keeps the sign
        return gn_sign_int(self.a.numerator * db, self.b.numerator * da)

    def __eq__(self, other) -> bool:
        other = _as_golden(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __hash__(self) -> int:
        return hash((self.a, self.b))

    def __lt__(self, other) -> bool:
        return (self - _as_golden(other)).sign() < 0

    def __le__(self, other) -> bool:
        return (self - _as_golden(other)).sign() <= 0

    def __gt__(self, other) -> bool:
        return (self - _as_golden(other)).sign() > 0

    def __ge__(self, other) -> bool:
        return (self - _as_golden(other)).sign() >= 0

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * PHI

    def floor(self) -> int:
        """Largest integer <= self, decided exactly."""
        n = math.floor(float(self))
        # fix up the float guess with exact comparisons
        while (self - n).sign() < 0:
            n -= 1
        while (self - (n + 1)).sign() >= 0:
            n += 1
        return n

    def ceil(self) -> int:
        """Smallest integer >= self, decided exactly."""
        return -(-self).floor()

    def is_integer(self) -> bool:
        return self.b == 0 and self.a.denominator == 1


def _as_golden(x) -> GoldenNumber:
    if isinstance(x, GoldenNumber):
        return x
    if isinstance(x, (int, Fraction)):
        return GoldenNumber(x, 0)
    return NotImplemented


GN_ZERO = GoldenNumber(0, 0)
GN_ONE = GoldenNumber(1, 0)
GN_PHI = GoldenNumber(0, 1)
GN_PHI_INV = GoldenNumber(-1, 1)  # 1/phi = phi - 1
GN_HALF_PHI = GoldenNumber(0, Fraction(1, 2))  # cos 36
GN_HALF_PHI_M1 = GoldenNumber(Fraction(-1, 2), Fraction(1, 2))  # cos 72

# cos(72 j degrees) for j = 0..4 as exact golden numbers
GN_COS = (
    GN_ONE,
    GN_HALF_PHI_M1,
    -GN_HALF_PHI,
    -GN_HALF_PHI,
    GN_HALF_PHI_M1,
)

# sin(72 j)/sin(72) for j = 0..4; the common factor sin 72 drops out of
# every predicate on pentagrid intersections.
GN_SIN_RATIO = (
    GN_ZERO,
    GN_ONE,
    GN_PHI_INV,
    -GN_PHI_INV,
    -GN_ONE,
)


def gn_mul(x: GoldenNumber, y: GoldenNumber) -> GoldenNumber:
    """Exact product in Q(phi): (a,b)(c,d) = (ac+bd, ad+bc+bd)."""
    return x * y


def gn_sign(x: GoldenNumber) -> int:
    """Exact sign of a + b*phi; see :meth:`GoldenNumber.sign`."""
    return x.sign()


# ---------------------------------------------------------------------------
# Z[zeta5]
# ---------------------------------------------------------------------------


class Cyclotomic5:
    """An exact element c0 + c1*z + c2*z^2 + c3*z^3 of Z[zeta5].

    Products are reduced modulo the minimal polynomial
    1 + x + x^2 + x^3 + x^4, so the 4-tuple of coefficients is unique.
    Instances are immutable and hashable; geometric code treats them as
    exact points of the plane via :meth:`embed`.
    """

    __slots__ = ("c",)

    def __init__(self, c0: int = 0, c1: int = 0, c2: int = 0, c3: int = 0) -> None:
        object.__setattr__(self, "c", (c0, c1, c2, c3))

    @classmethod
    def from_tuple(cls, c) -> Cyclotomic5:
        v = object.__new__(cls)
        object.__setattr__(v, "c", (c[0], c[1], c[2], c[3]))
        return v

    @classmethod
    def zeta(cls, j: int = 1) -> Cyclotomic5:
        """zeta5^j for any integer j."""
        j %= 5
        if j < 4:
            c = [0, 0, 0, 0]
            c[j] = 1
            return cls(*c)
        return cls(-1, -1, -1, -1)

    def __setattr__(self, name, value):  # pragma: no cover
        raise AttributeError("Cyclotomic5 is immutable")

    def __repr__(self) -> str:
        return f"Cyclotomic5{self.c}"

    def __add__(self, other) -> Cyclotomic5:
        other = _as_cyc(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.c, other.c
        return Cyclotomic5(a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3])

    __radd__ = __add__

    def __sub__(self, other) -> Cyclotomic5:
        other = _as_cyc(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.c, other.c
        return Cyclotomic5(a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3])

    def __rsub__(self, other) -> Cyclotomic5:
        return _as_cyc(other) - self

    def __neg__(self) -> Cyclotomic5:
        a = self.c
        return Cyclotomic5(-a[0], -a[1], -a[2], -a[3])

    def __mul__(self, other) -> Cyclotomic5:
        other = _as_cyc(other)
        if other is NotImplemented:
            return NotImplemented
        x0, x1, x2, x3 = self.c
        y0, y1, y2, y3 = other.c
        p0 = x0 * y0
        p1 = x0 * y1 + x1 * y0
        p2 = x0 * y2 + x1 * y1 + x2 * y0
        p3 = x0 * y3 + x1 * y2 + x2 * y1 + x3 * y0
        p4 = x1 * y3 + x2 * y2 + x3 * y1
        p5 = x2 * y3 + x3 * y2
        p6 = x3 * y3
        # zeta^4 = -(1 + zeta + zeta^2 + zeta^3), zeta^5 = 1, zeta^6 = zeta
        return Cyclotomic5(p0 - p4 + p5, p1 - p4 + p6, p2 - p4, p3 - p4)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        other = _as_cyc(other)
        if other is NotImplemented:
            return NotImplemented
        return self.c == other.c

    def __hash__(self) -> int:
        return hash(self.c)

    def __bool__(self) -> bool:
        return self.c != (0, 0, 0, 0)

    # -- structure maps ----------------------------------------------------

    def conjugate(self) -> Cyclotomic5:
        """Complex conjugation zeta^j -> zeta^(5-j); an involutive ring map."""
        c0, c1, c2, c3 = self.c
        return Cyclotomic5(c0 - c1, -c1, c3 - c1, c2 - c1)

    def phi_times(self) -> Cyclotomic5:
        """Exact product with phi = -zeta^2 - zeta^3 (Z[zeta5] is closed under it)."""
        c0, c1, c2, c3 = self.c
        return Cyclotomic5(c1 - c3, c1 + c2 - c3, -c0 + c1 + c2, -c0 + c2)

    def phi_inv_times(self) -> Cyclotomic5:
        """Exact product with 1/phi = phi - 1 (phi is a unit in Z[phi])."""
        return self.phi_times() - self

    # -- exact real/imaginary data ----------------------------------------

    def real_part(self) -> GoldenNumber:
        """Re(self) as an exact golden number (cos 72 = (phi-1)/2 etc.)."""
        c0, c1, c2, c3 = self.c
        # c0 + c1*(phi-1)/2 - (c2+c3)*phi/2
        return GoldenNumber(
            Fraction(2 * c0 - c1, 2), Fraction(c1 - c2 - c3, 2)
        )

    def imag_sign(self) -> int:
        """Exact sign of Im(self); Im = sin36 * (c1*phi + c2 - c3)."""
        c0, c1, c2, c3 = self.c
        return gn_sign_int(c2 - c3, c1)

    def is_real(self) -> bool:
        return self.imag_sign() == 0

    def norm_squared(self) -> GoldenNumber:
        """|self|^2 as an exact golden number."""
        return (self * self.conjugate()).real_part()

    def embed(self) -> tuple[float, float]:
        """Float (re, im); for rendering and diagnostics only."""
        c0, c1, c2, c3 = self.c
        return (
            c0 * _COS[0] + c1 * _COS[1] + c2 * _COS[2] + c3 * _COS[3],
            c1 * _SIN[1] + c2 * _SIN[2] + c3 * _SIN[3],
        )

    def embed_complex(self) -> complex:
        re, im = self.embed()
        return complex(re, im)


def _as_cyc(x) -> Cyclotomic5:
    if isinstance(x, Cyclotomic5):
        return x
    if isinstance(x, int):
        return Cyclotomic5(x, 0, 0, 0)
    return NotImplemented


CYC_ZERO = Cyclotomic5(0, 0, 0, 0)
CYC_ONE = Cyclotomic5(1, 0, 0, 0)
CYC_PHI = Cyclotomic5(0, 0, -1, -1)
# exp(i*36 deg) = -zeta^3 generates the ten edge directions of the tilings
CYC_ROT36 = Cyclotomic5(0, 0, 0, -1)


def cyc_mul(u: Cyclotomic5, v: Cyclotomic5) -> Cyclotomic5:
    """Exact product in Z[zeta5], reduced mod 1 + x + x^2 + x^3 + x^4."""
    return u * v


def phi_times(u: Cyclotomic5) -> Cyclotomic5:
    """phi * u exactly; equals cyc_mul(u, Cyclotomic5(0, 0, -1, -1))."""
    return u.phi_times()


def cyc_embed(u: Cyclotomic5) -> tuple[float, float]:
    """Float embedding sum(c_j * zeta^j); never used in legality predicates."""
    return u.embed()


def cyc_reflect(u: Cyclotomic5) -> Cyclotomic5:
    """Mirror isometry zeta^j -> zeta^(5-j) (complex conjugation)."""
    return u.conjugate()


def rot36(u: Cyclotomic5, k: int) -> Cyclotomic5:
    """Rotate by k * 36 degrees: multiply by (-zeta^3)^k."""
    k %= 10
    sign = -1 if k & 1 else 1
    v = u * Cyclotomic5.zeta(3 * k)
    return v if sign == 1 else -v


def direction_index(u: Cyclotomic5) -> int | None:
    """Index k in 0..9 with u = r * exp(i*36k deg), r > 0, or None.

    Decided exactly: u lies on the ray iff rotating it back by k steps gives
    a real positive value.
    """
    if not u:
        return None
    for k in range(10):
        v = rot36(u, -k)
        if v.imag_sign() == 0 and v.real_part().sign() > 0:
            return k
    return None
