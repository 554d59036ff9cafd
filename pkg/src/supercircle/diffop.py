"""Differential operators F_lam -> F_mu written as sum_i a_i(x, xi) Dbar^i.

Coefficients sit to the left of the Dbar powers.  Composition normal-orders
with the graded Leibniz rule Dbar o (b.) = Dbar(b). + (-1)^{p(b)} b. o Dbar.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .contact import HALF, Density, WeightMismatch
from .superring import (
    XI,
    ZERO,
    SuperFunction,
    d_of,
    d_power,
    dbar_of,
    dbar_power,
    format_rational,
    join_terms,
    koszul_sign,
    rational,
    sf_mul,
    superfunction_terms,
)


class ZeroOperator(ValueError):
    """Order and principal symbol are undefined for the zero operator."""


def _trim(coeffs: Iterable[SuperFunction]) -> tuple[SuperFunction, ...]:
    cs = list(coeffs)
    while cs and cs[-1].is_zero():
        cs.pop()
    return tuple(cs)


def _flip(c: SuperFunction) -> SuperFunction:
    """(-1)^{p(c)} c, extended linearly to mixed c."""
    return SuperFunction(c.even, -c.odd)


def _dbar_left(coeffs: Sequence[SuperFunction]) -> list[SuperFunction]:
    """Normal-ordered coefficients of Dbar o (sum c_j Dbar^j)."""
    out = [ZERO] * (len(coeffs) + 1)
    for j, c in enumerate(coeffs):
        if c.is_zero():
            continue
        out[j] = out[j] + dbar_of(c)
        out[j + 1] = out[j + 1] + _flip(c)
    return out


def _add_coeffs(a: Sequence[SuperFunction], b: Sequence[SuperFunction]) -> list[SuperFunction]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = out[i] + c
    return out


class DiffOperator:
    """sum_i coeffs[i] * Dbar^i as a map F_src -> F_dst."""

    __slots__ = ("src", "dst", "coeffs")

    def __init__(self, src, dst, coeffs: Iterable[SuperFunction] = ()):
        self.src = rational(src)
        self.dst = rational(dst)
        self.coeffs = _trim(coeffs)

    @classmethod
    def multiplication(cls, a: SuperFunction, src, dst) -> "DiffOperator":
        return cls(src, dst, [a])

    @classmethod
    def monomial(cls, a: SuperFunction, k: int, src, dst) -> "DiffOperator":
        return cls(src, dst, [ZERO] * k + [a])

    @classmethod
    def dbar_power(cls, k: int, src, dst) -> "DiffOperator":
        return cls.monomial(SuperFunction.const(1), k, src, dst)

    @classmethod
    def zero(cls, src, dst) -> "DiffOperator":
        return cls(src, dst, [])

    def coeff(self, i: int) -> SuperFunction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    @property
    def top_index(self) -> int:
        """Highest Dbar power with nonzero coefficient, -1 for the zero operator."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def with_weights(self, src, dst) -> "DiffOperator":
        return DiffOperator(src, dst, self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, DiffOperator):
            return NotImplemented
        return (self.src, self.dst, self.coeffs) == (other.src, other.dst, other.coeffs)

    def __hash__(self):
        return hash((self.src, self.dst, self.coeffs))

    def __repr__(self):
        return (
            f"DiffOperator({format_rational(self.src)} -> {format_rational(self.dst)}: "
            f"{format_operator(self)})"
        )

    def __str__(self):
        return format_operator(self)

    def _check_same(self, other: "DiffOperator"):
        if (self.src, self.dst) != (other.src, other.dst):
            raise WeightMismatch(
                f"operators act {self.src}->{self.dst} and {other.src}->{other.dst}"
            )

    def __add__(self, other: "DiffOperator") -> "DiffOperator":
        self._check_same(other)
        return DiffOperator(self.src, self.dst, _add_coeffs(self.coeffs, other.coeffs))

    def __sub__(self, other: "DiffOperator") -> "DiffOperator":
        return self + (-other)

    def __neg__(self) -> "DiffOperator":
        return DiffOperator(self.src, self.dst, [-c for c in self.coeffs])

    def scale(self, c) -> "DiffOperator":
        return DiffOperator(self.src, self.dst, [a * c for a in self.coeffs])

    def left_multiply(self, g: SuperFunction) -> "DiffOperator":
        return DiffOperator(self.src, self.dst, [sf_mul(g, a) for a in self.coeffs])

    def __matmul__(self, other: "DiffOperator") -> "DiffOperator":
        return compose(self, other)

    def __call__(self, phi: Density) -> Density:
        return apply(self, phi)

    def homogeneous_parts(self) -> list[tuple[int, "DiffOperator"]]:
        """Split by total parity p(a_i) + i."""
        even, odd = [], []
        for i, c in enumerate(self.coeffs):
            ce, co = c.homogeneous_split()
            if i % 2:
                even.append(co)
                odd.append(ce)
            else:
                even.append(ce)
                odd.append(co)
        parts = []
        E = DiffOperator(self.src, self.dst, even)
        O = DiffOperator(self.src, self.dst, odd)
        if not E.is_zero():
            parts.append((0, E))
        if not O.is_zero():
            parts.append((1, O))
        return parts

    @property
    def parity(self) -> int | None:
        """0 or 1 for homogeneous nonzero operators, None otherwise."""
        parts = self.homogeneous_parts()
        return parts[0][0] if len(parts) == 1 else None


def apply(A: DiffOperator, phi: Density) -> Density:
    if phi.weight != A.src:
        raise WeightMismatch(f"operator expects weight {A.src}, got {phi.weight}")
    out = ZERO
    f = phi.fn
    for a in A.coeffs:
        if not a.is_zero():
            out = out + sf_mul(a, f)
        f = dbar_of(f)
    return Density(out, A.dst)


def compose_coeffs(a: Sequence[SuperFunction], b: Sequence[SuperFunction]) -> list[SuperFunction]:
    out: list[SuperFunction] = []
    shifted = list(b)
    for ai in a:
        if not ai.is_zero():
            out = _add_coeffs(out, [sf_mul(ai, c) for c in shifted])
        shifted = _dbar_left(shifted)
    return out


def compose(A: DiffOperator, B: DiffOperator) -> DiffOperator:
    """A o B, with B applied first."""
    if B.dst != A.src:
        raise WeightMismatch(f"cannot compose {A.src}->{A.dst} after {B.src}->{B.dst}")
    return DiffOperator(B.src, A.dst, compose_coeffs(A.coeffs, B.coeffs))


def lie_derivative_operator(h: SuperFunction, lam) -> DiffOperator:
    """L^lam_{X_h} = lam h' - h Dbar^2 + 1/2 D(h) Dbar on F_lam."""
    lam = rational(lam)
    return DiffOperator(lam, lam, [h.partial_x() * lam, d_of(h) * HALF, -h])


def lie_action(h: SuperFunction, A: DiffOperator) -> DiffOperator:
    """L^mu o A - (-1)^{p(h)p(A)} A o L^lam, extended bilinearly."""
    out = DiffOperator.zero(A.src, A.dst)
    for p, H in h.homogeneous_parts():
        L_src = lie_derivative_operator(H, A.src)
        L_dst = lie_derivative_operator(H, A.dst)
        for q, Aq in A.homogeneous_parts():
            out = out + compose(L_dst, Aq) - compose(Aq, L_src).scale(koszul_sign(p, q))
    return out


def order(A: DiffOperator) -> Fraction:
    """Half-integer order m/2 where m is the top Dbar power."""
    if A.is_zero():
        raise ZeroOperator("the zero operator has no order")
    return Fraction(A.top_index, 2)


def principal_symbol(A: DiffOperator) -> Density:
    if A.is_zero():
        raise ZeroOperator("the zero operator has no principal symbol")
    m = A.top_index
    return Density(A.coeffs[m], A.dst - A.src - Fraction(m, 2))


def conjugation_sign(k: int) -> int:
    """(Dbar^k)* = (-1)^{floor((k+1)/2)} Dbar^k."""
    return -1 if ((k + 1) // 2) % 2 else 1


def conjugate(A: DiffOperator) -> DiffOperator:
    """Adjoint F_{1/2-mu} -> F_{1/2-lam}.

    Generated by (a.)* = a., Dbar* = -Dbar and
    (P o Q)* = (-1)^{p(P)p(Q)} Q* o P*; for a homogeneous monomial this gives
    (a Dbar^k)* = (-1)^{p(a)k} (Dbar^k)* o a.
    """
    coeffs: list[SuperFunction] = []
    for k, a in enumerate(A.coeffs):
        for p, part in a.homogeneous_parts():
            s = conjugation_sign(k) * koszul_sign(p, k)
            term = compose_coeffs([ZERO] * k + [SuperFunction.const(1)], [part])
            coeffs = _add_coeffs(coeffs, [c * s for c in term])
    half = Fraction(1, 2)
    return DiffOperator(half - A.dst, half - A.src, coeffs)


class DOrderedOperator:
    """sum_i coeffs[i] * D^i as a map F_src -> F_dst."""

    __slots__ = ("src", "dst", "coeffs")

    def __init__(self, src, dst, coeffs: Iterable[SuperFunction] = ()):
        self.src = rational(src)
        self.dst = rational(dst)
        self.coeffs = _trim(coeffs)

    def __eq__(self, other):
        if not isinstance(other, DOrderedOperator):
            return NotImplemented
        return (self.src, self.dst, self.coeffs) == (other.src, other.dst, other.coeffs)

    def __hash__(self):
        return hash((self.src, self.dst, self.coeffs))

    def __repr__(self):
        terms = [f"({c})*D^{i}" for i, c in enumerate(self.coeffs) if c]
        return f"DOrderedOperator({' + '.join(terms) or '0'})"

    def __add__(self, other: "DOrderedOperator") -> "DOrderedOperator":
        if (self.src, self.dst) != (other.src, other.dst):
            raise WeightMismatch("weights differ")
        return DOrderedOperator(self.src, self.dst, _add_coeffs(self.coeffs, other.coeffs))

    def __call__(self, phi: Density) -> Density:
        if phi.weight != self.src:
            raise WeightMismatch(f"operator expects weight {self.src}, got {phi.weight}")
        out = ZERO
        f = phi.fn
        for b in self.coeffs:
            out = out + sf_mul(b, f)
            f = d_of(f)
        return Density(out, self.dst)


def to_d_basis(A: DiffOperator) -> DOrderedOperator:
    """Rewrite in powers of D using Dbar = D - 2 xi D^2.

    b_{2i+1} = (-1)^i a_{2i+1} and b_{2i} = (-1)^i (a_{2i} + 2 a_{2i-1} xi).
    For an odd-coefficient a_{2i-1} the last term equals -2 xi a_{2i-1}.
    """
    n = len(A.coeffs)
    b = [ZERO] * (n + 1)
    for j in range(n + 1):
        s = -1 if (j // 2) % 2 else 1
        if j % 2:
            b[j] = A.coeff(j) * s
        else:
            b[j] = (A.coeff(j) + sf_mul(A.coeff(j - 1), XI) * 2) * s
    return DOrderedOperator(A.src, A.dst, b)


def from_d_basis(B: DOrderedOperator) -> DiffOperator:
    n = len(B.coeffs)
    a = [ZERO] * (n + 1)
    for j in range(n + 1):
        s = -1 if (j // 2) % 2 else 1
        b = B.coeffs[j] if j < n else ZERO
        if j % 2:
            a[j] = b * s
        else:
            prev = a[j - 1] if j else ZERO
            a[j] = b * s - sf_mul(prev, XI) * 2
    return DiffOperator(B.src, B.dst, a)


def _probe(i: int) -> SuperFunction:
    # Dbar^i(probe_i) = 1 and Dbar^l(probe_i) = 0 for l > i.
    j = i // 2
    c = Fraction((-1) ** j, _factorial(j))
    return SuperFunction.monomial(j, odd=bool(i % 2), coeff=c)


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def operator_from_action(
    action: Callable[[SuperFunction], SuperFunction], src, dst, max_index: int
) -> DiffOperator:
    """Recover sum c_i Dbar^i (i <= max_index) from a linear map on functions.

    Probes with functions whose Dbar-powers are triangular; the caller is
    responsible for the map actually being a differential operator of that
    size (verify with ``apply`` if in doubt).
    """
    cs: list[SuperFunction] = []
    for i in range(max_index + 1):
        t = _probe(i)
        rest = action(t)
        for l, c in enumerate(cs):
            rest = rest - sf_mul(c, dbar_power(t, l))
        cs.append(rest)
    return DiffOperator(src, dst, cs)


def format_operator(A: DiffOperator | Sequence[SuperFunction]) -> str:
    """Text form in the CLI grammar, Dbar powers descending."""
    coeffs = A.coeffs if isinstance(A, DiffOperator) else _trim(A)
    terms: list[tuple[int, str]] = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if c.is_zero():
            continue
        if k == 0:
            terms.extend(superfunction_terms(c))
            continue
        dpart = "Dbar" if k == 1 else f"Dbar^{k}"
        cterms = superfunction_terms(c)
        if len(cterms) == 1:
            sign, body = cterms[0]
            body = dpart if body == "1" else f"{body}*{dpart}"
            terms.append((sign, body))
        else:
            terms.append((1, f"({join_terms(cterms)})*{dpart}"))
    return join_terms(terms)


__all__ = [
    "DiffOperator",
    "DOrderedOperator",
    "ZeroOperator",
    "WeightMismatch",
    "apply",
    "compose",
    "conjugate",
    "conjugation_sign",
    "d_power",
    "format_operator",
    "from_d_basis",
    "lie_action",
    "lie_derivative_operator",
    "operator_from_action",
    "order",
    "principal_symbol",
    "to_d_basis",
]
