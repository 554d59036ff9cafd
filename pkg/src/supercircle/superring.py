"""Functions on the supercircle: f0(x) + xi*f1(x) with polynomial coefficients.

Coefficients are exact rationals (:class:`fractions.Fraction`).  Everything
here is immutable, so values can be shared freely between threads.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction
Scalar = Union[int, Fraction]


def rational(value) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def format_rational(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


class Poly:
    """Polynomial in x with Fraction coefficients, lowest degree first.

    Trailing zeros are stripped, so the zero polynomial has an empty
    coefficient tuple and degree -1.
    """

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self._hash = None

    @classmethod
    def monomial(cls, power: int, coeff: Scalar = 1) -> "Poly":
        return cls([0] * power + [coeff])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == Poly([other]).coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def __repr__(self):
        return f"Poly({[format_rational(c) for c in self.coeffs]})"

    def __getitem__(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __neg__(self):
        return Poly([-c for c in self.coeffs])

    def __add__(self, other: "Poly") -> "Poly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Poly(out)

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO_POLY
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return Poly(out)

    __rmul__ = __mul__

    def scale(self, c: Scalar) -> "Poly":
        if c == 0:
            return ZERO_POLY
        return Poly([c * a for a in self.coeffs])

    def deriv(self) -> "Poly":
        return Poly([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


ZERO_POLY = Poly()
ONE_POLY = Poly([1])


class Parity(enum.Enum):
    EVEN = 0
    ODD = 1
    MIXED = 2


class SuperFunction:
    """The element even + xi*odd of the function superalgebra.

    ``even`` and ``odd`` are the polynomials f0 and f1; xi**2 = 0 is built
    into multiplication.  Sign rules for odd objects are only meaningful on
    homogeneous parts; use :meth:`homogeneous_split` for mixed inputs.
    """

    __slots__ = ("even", "odd", "_hash")

    def __init__(self, even: Poly = ZERO_POLY, odd: Poly = ZERO_POLY):
        self.even = even if isinstance(even, Poly) else Poly(even)
        self.odd = odd if isinstance(odd, Poly) else Poly(odd)
        self._hash = None

    @classmethod
    def const(cls, c: Scalar) -> "SuperFunction":
        return cls(Poly([c]))

    @classmethod
    def monomial(cls, power: int, odd: bool = False, coeff: Scalar = 1) -> "SuperFunction":
        """coeff * x**power, times xi when ``odd``."""
        p = Poly.monomial(power, coeff)
        return cls(ZERO_POLY, p) if odd else cls(p, ZERO_POLY)

    def is_zero(self) -> bool:
        return not self.even and not self.odd

    def __bool__(self):
        return not self.is_zero()

    @property
    def parity(self) -> Parity:
        if not self.odd:
            return Parity.EVEN
        if not self.even:
            return Parity.ODD
        return Parity.MIXED

    def homogeneous_split(self) -> tuple["SuperFunction", "SuperFunction"]:
        return SuperFunction(self.even, ZERO_POLY), SuperFunction(ZERO_POLY, self.odd)

    def homogeneous_parts(self) -> list[tuple[int, "SuperFunction"]]:
        """Nonzero homogeneous components as ``(parity_bit, part)`` pairs."""
        parts = []
        if self.even:
            parts.append((0, SuperFunction(self.even, ZERO_POLY)))
        if self.odd:
            parts.append((1, SuperFunction(ZERO_POLY, self.odd)))
        return parts

    def __eq__(self, other):
        if isinstance(other, SuperFunction):
            return self.even == other.even and self.odd == other.odd
        if isinstance(other, (int, Fraction)):
            return self == SuperFunction.const(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.even, self.odd))
        return self._hash

    def __repr__(self):
        return f"SuperFunction({format_superfunction(self)!r})"

    def __str__(self):
        return format_superfunction(self)

    def __neg__(self):
        return SuperFunction(-self.even, -self.odd)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SuperFunction.const(other)
        return SuperFunction(self.even + other.even, self.odd + other.odd)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = SuperFunction.const(other)
        return SuperFunction(self.even - other.even, self.odd - other.odd)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SuperFunction(self.even.scale(other), self.odd.scale(other))
        return sf_mul(self, other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SuperFunction(self.even.scale(other), self.odd.scale(other))
        return NotImplemented

    def partial_x(self) -> "SuperFunction":
        return SuperFunction(self.even.deriv(), self.odd.deriv())

    def partial_xi(self) -> "SuperFunction":
        return SuperFunction(self.odd, ZERO_POLY)

    def at(self, x: Scalar) -> tuple[Fraction, Fraction]:
        return self.even(x), self.odd(x)


ZERO = SuperFunction()
ONE = SuperFunction.const(1)
X = SuperFunction.monomial(1)
XI = SuperFunction.monomial(0, odd=True)


def sf_mul(f: SuperFunction, g: SuperFunction) -> SuperFunction:
    # (f0 + xi f1)(g0 + xi g1) = f0 g0 + xi (f0 g1 + f1 g0)
    return SuperFunction(f.even * g.even, f.even * g.odd + f.odd * g.even)


def parity(f: SuperFunction) -> Parity:
    return f.parity


def homogeneous_split(f: SuperFunction) -> tuple[SuperFunction, SuperFunction]:
    return f.homogeneous_split()


def partial_x(f: SuperFunction) -> SuperFunction:
    return f.partial_x()


def partial_xi(f: SuperFunction) -> SuperFunction:
    return f.partial_xi()


def d_of(f: SuperFunction) -> SuperFunction:
    """D = d/dxi + xi d/dx."""
    return SuperFunction(f.odd, f.even.deriv())


def dbar_of(f: SuperFunction) -> SuperFunction:
    """Dbar = d/dxi - xi d/dx, the generator of the contact distribution."""
    return SuperFunction(f.odd, -f.even.deriv())


def d_power(f: SuperFunction, n: int) -> SuperFunction:
    for _ in range(n):
        f = d_of(f)
    return f


def dbar_power(f: SuperFunction, n: int) -> SuperFunction:
    for _ in range(n):
        f = dbar_of(f)
    return f


def koszul_sign(p: int, q: int) -> int:
    return -1 if (p & q & 1) else 1


def _format_poly_terms(poly: Poly, prefix: str = "") -> list[tuple[int, str]]:
    """(sign, body) pairs for each nonzero term, ascending in x."""
    terms = []
    for i, c in enumerate(poly.coeffs):
        if not c:
            continue
        sign = -1 if c < 0 else 1
        mag = abs(c)
        factors = []
        if mag != 1 or (not prefix and i == 0):
            factors.append(format_rational(mag))
        if prefix:
            factors.append(prefix)
        if i == 1:
            factors.append("x")
        elif i > 1:
            factors.append(f"x^{i}")
        terms.append((sign, "*".join(factors)))
    return terms


def join_terms(terms: list[tuple[int, str]]) -> str:
    if not terms:
        return "0"
    out = []
    for k, (sign, body) in enumerate(terms):
        if k == 0:
            out.append(("-" if sign < 0 else "") + body)
        else:
            out.append((" - " if sign < 0 else " + ") + body)
    return "".join(out)


def superfunction_terms(f: SuperFunction) -> list[tuple[int, str]]:
    return _format_poly_terms(f.even) + _format_poly_terms(f.odd, prefix="xi")


def format_superfunction(f: SuperFunction) -> str:
    """Render in the CLI grammar: even part ascending in x, then the xi part."""
    return join_terms(superfunction_terms(f))
