"""Bol operators, the odd cocycles gamma_k and obstruction classes.

Cochains on osp(1|2) are stored by their values on the five basis
Hamiltonians (1, x, x^2, xi, x*xi) and extended linearly.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, Union

from .contact import OSP_HAMILTONIANS, OSP_NAMES, contact_bracket, lie_derivative, Density, osp_coordinates
from .diffop import DiffOperator, lie_action, operator_from_action
from .equivcalc import NonResonant, classify_resonance
from .linalg import RowReducer
from .superring import ZERO, SuperFunction, d_power, koszul_sign, rational


class EvenOrder(ValueError):
    """Bol operators and the cocycles gamma_k exist only for odd k."""


class NotResonant(ValueError):
    """Obstruction classes are only defined at resonant weights."""


def _require_odd(k: int):
    if k < 1 or k % 2 == 0:
        raise EvenOrder(f"k must be odd and positive, got {k}")


def bol_weights(k: int) -> tuple[Fraction, Fraction]:
    return Fraction(1 - k, 4), Fraction(1 + k, 4)


def bol_operator(k: int) -> DiffOperator:
    """Dbar^k : F_{(1-k)/4} -> F_{(1+k)/4}, invariant under osp(1|2)."""
    _require_odd(k)
    return DiffOperator.dbar_power(k, *bol_weights(k))


def _parity_bit(h: SuperFunction) -> int:
    return 1 if h.odd else 0


@dataclass(frozen=True)
class Cochain1:
    """A linear map osp(1|2) -> D_{src,dst} given on the basis Hamiltonians."""

    src: Fraction
    dst: Fraction
    values: tuple[DiffOperator, ...]

    def __post_init__(self):
        if len(self.values) != len(OSP_HAMILTONIANS):
            raise ValueError("a cochain needs one value per osp(1|2) basis element")

    @classmethod
    def from_function(cls, fn: Callable[[SuperFunction], DiffOperator], src, dst) -> "Cochain1":
        return cls(rational(src), rational(dst), tuple(fn(h) for h in OSP_HAMILTONIANS))

    def __call__(self, h: SuperFunction) -> DiffOperator:
        out = DiffOperator.zero(self.src, self.dst)
        for c, v in zip(osp_coordinates(h), self.values):
            if c:
                out = out + v.scale(c)
        return out

    def __eq__(self, other):
        if not isinstance(other, Cochain1):
            return NotImplemented
        return (self.src, self.dst, self.values) == (other.src, other.dst, other.values)

    def __hash__(self):
        return hash((self.src, self.dst, self.values))

    def scale(self, c) -> "Cochain1":
        return Cochain1(self.src, self.dst, tuple(v.scale(c) for v in self.values))

    def __sub__(self, other: "Cochain1") -> "Cochain1":
        return Cochain1(self.src, self.dst, tuple(a - b for a, b in zip(self.values, other.values)))

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values)

    @property
    def parity(self) -> int | None:
        """p(c) with p(c(X)) = p(X) + p(c); None if mixed or zero."""
        seen = set()
        for h, v in zip(OSP_HAMILTONIANS, self.values):
            for q, _ in v.homogeneous_parts():
                seen.add((q + _parity_bit(h)) % 2)
        return seen.pop() if len(seen) == 1 else None

    def items(self):
        return zip(OSP_NAMES, self.values)


def gamma_cocycle(k: int, h: SuperFunction, lam=None) -> DiffOperator:
    """gamma_k(X_h) = D^3(h) Dbar^{k-1} + (k-1)/2 D^4(h) Dbar^{k-2}.

    Lives in D_{(1-k)/4,(1+k)/4}, or in D_{lam, lam+k/2} when ``lam`` is given.
    """
    _require_odd(k)
    osp_coordinates(h)
    if lam is None:
        src, dst = bol_weights(k)
    else:
        src = rational(lam)
        dst = src + Fraction(k, 2)
    coeffs = [ZERO] * k
    coeffs[k - 1] = d_power(h, 3)
    if k >= 2:
        coeffs[k - 2] = d_power(h, 4) * Fraction(k - 1, 2)
    return DiffOperator(src, dst, coeffs)


def gamma(k: int, lam=None) -> Cochain1:
    if lam is None:
        src, dst = bol_weights(k)
    else:
        src, dst = rational(lam), rational(lam) + Fraction(k, 2)
    return Cochain1.from_function(lambda h: gamma_cocycle(k, h, lam), src, dst)


def coboundary(B: DiffOperator) -> Cochain1:
    """(delta B)(X_h) = L^mu o B - (-1)^{p(h)p(B)} B o L^lam."""
    return Cochain1.from_function(lambda h: lie_action(h, B), B.src, B.dst)


# Sign conventions for the graded 1-cocycle identity
#   c({f,g}) = s1 L_f c(g) - s2 L_g c(f),
# with s1 = (-1)^{a p(f) p(c)} and s2 = (-1)^{p(f)p(g) + b p(g) p(c)}.
COCYCLE_CONVENTIONS: dict[str, tuple[int, int]] = {
    "plain": (0, 0),
    "left": (1, 0),
    "right": (0, 1),
    "both": (1, 1),
}
# Frozen by calibrate_cocycle_convention() on random coboundaries.
COCYCLE_CONVENTION = "plain"


def cocycle_defect(c: Cochain1, convention: str = COCYCLE_CONVENTION) -> list[tuple[str, str, DiffOperator]]:
    """Nonzero defects of the cocycle identity over all 25 ordered basis pairs."""
    a, b = COCYCLE_CONVENTIONS[convention]
    defects = []
    for f, fname in zip(OSP_HAMILTONIANS, OSP_NAMES):
        pf = _parity_bit(f)
        for g, gname in zip(OSP_HAMILTONIANS, OSP_NAMES):
            pg = _parity_bit(g)
            lhs = c(contact_bracket(f, g))
            # Bilinear in the cochain: evaluate each homogeneous piece with its own parity.
            rhs = DiffOperator.zero(c.src, c.dst)
            for pc in (0, 1):
                cg = _parity_piece(c(g), pc, pg)
                cf = _parity_piece(c(f), pc, pf)
                s1 = (-1) ** (a * pf * pc)
                s2 = (-1) ** (pf * pg + b * pg * pc)
                rhs = rhs + lie_action(f, cg).scale(s1) - lie_action(g, cf).scale(s2)
            diff = lhs - rhs
            if not diff.is_zero():
                defects.append((fname, gname, diff))
    return defects


def _parity_piece(value: DiffOperator, pc: int, ph: int) -> DiffOperator:
    """Part of c(X_h) coming from the parity-pc component of c."""
    target = (pc + ph) % 2
    for q, part in value.homogeneous_parts():
        if q == target:
            return part
    return DiffOperator.zero(value.src, value.dst)


def check_cocycle(c: Cochain1, convention: str = COCYCLE_CONVENTION) -> bool:
    return not cocycle_defect(c, convention)


def calibrate_cocycle_convention(samples: Sequence[DiffOperator]) -> list[str]:
    """Conventions under which every coboundary in ``samples`` is a cocycle."""
    return [
        name
        for name in COCYCLE_CONVENTIONS
        if all(check_cocycle(coboundary(B), name) for B in samples)
    ]


# --- obstruction classes -----------------------------------------------------


@dataclass(frozen=True)
class ObstructionReport:
    lam: Fraction
    mu: Fraction
    m: int
    cbar: Cochain1
    expected_factor: Fraction
    observed_factor: Fraction
    matches: bool

    @property
    def vanishes(self) -> bool:
        return self.cbar.is_zero()

    @property
    def proportional(self) -> bool:
        """Whether cbar is exactly observed_factor * gamma_1."""
        return self.cbar == gamma(1).scale(self.observed_factor)

    def __str__(self):
        kind = "odd" if self.m % 2 else "even"
        verdict = "match" if self.matches else f"MISMATCH (x^2 component gives {self.observed_factor})"
        return f"m={self.m} ({kind}): cbar expected {self.expected_factor} * gamma_1 [{verdict}]"


def expected_obstruction_factor(lam, m: int) -> Fraction:
    """lam + (m-1)/4 for odd m, m/2 for even m."""
    return rational(lam) + Fraction(m - 1, 4) if m % 2 else Fraction(m, 2)


def obstruction_class(lam, mu) -> ObstructionReport:
    """Class of 0 -> D^{(m-1)/2} -> D^{m/2} -> F_0 -> 0 pushed to Hom(F_0, F_{1/2}).

    The section a -> a Dbar^m is a linear map of parity m, so on homogeneous
    a it is tau(a) = (-1)^{m p(a)} a Dbar^m, and
    c(X)(a) = L_X tau(a) - (-1)^{m p(X)} tau(L_X a).
    cbar(X)(a) is the Dbar^{m-1} coefficient of c(X)(a); that projection has
    parity m-1 and picks up (-1)^{(m-1) p(a)} when moved past the argument.
    """
    lam, mu = rational(lam), rational(mu)
    if isinstance(classify_resonance(lam, mu), NonResonant):
        raise NotResonant(f"(lambda, mu) = ({lam}, {mu}) is not resonant")
    m = int(2 * (mu - lam))
    half = Fraction(1, 2)

    def tau(a: SuperFunction) -> DiffOperator:
        out = DiffOperator.zero(lam, mu)
        for p, part in a.homogeneous_parts():
            out = out + DiffOperator.monomial(part, m, lam, mu).scale(koszul_sign(m, p))
        return out

    def cbar_value(h: SuperFunction) -> DiffOperator:
        ph = _parity_bit(h)

        def action(a: SuperFunction) -> SuperFunction:
            out = ZERO
            for pa, part in a.homogeneous_parts():
                moved = lie_derivative(h, Density(part, 0)).fn
                c = lie_action(h, tau(part)) - tau(moved).scale(koszul_sign(m, ph))
                if c.top_index > m - 1:
                    raise AssertionError("c_tau left the submodule D^{(m-1)/2}")
                out = out + c.coeff(m - 1) * koszul_sign(m - 1, pa)
            return out

        # cbar(X) is a differential operator F_0 -> F_{1/2}; probe up to Dbar^3.
        op = operator_from_action(action, 0, half, 3)
        for probe in _verification_probes():
            if op(Density(probe, 0)).fn != action(probe):
                raise AssertionError("cbar is not an operator of order <= 3/2")
        return op

    cbar = Cochain1.from_function(cbar_value, 0, half)
    expected = expected_obstruction_factor(lam, m)
    # gamma_1(X_{x^2}) = 2 xi, so the x^2 component fixes the proportionality factor.
    observed = cbar.values[2].coeff(0).odd[0] / 2
    return ObstructionReport(lam, mu, m, cbar, expected, observed, cbar == gamma(1).scale(expected))


def _verification_probes() -> list[SuperFunction]:
    return [SuperFunction.monomial(p, odd) for p in range(4) for odd in (False, True)]


# --- bounded nontriviality search ---------------------------------------------


@dataclass(frozen=True)
class Found:
    operator: DiffOperator

    def __str__(self):
        return f"Found({self.operator})"


@dataclass(frozen=True)
class NoneUpTo:
    deg_bound: int

    def __str__(self):
        return f"NoneUpTo({self.deg_bound})"


SearchResult = Union[Found, NoneUpTo]


def _flatten_operator(tag: int, A: DiffOperator):
    for i, c in enumerate(A.coeffs):
        for part, poly in ((0, c.even), (1, c.odd)):
            for d, v in enumerate(poly.coeffs):
                if v:
                    yield (tag, i, part, d), v


def nontriviality_search(k: int, deg_bound: int, target: Cochain1 | None = None) -> SearchResult:
    """Look for A with delta A = target (default gamma_k) at the Bol weights,
    among A = sum_{i<=k} a_i Dbar^i with deg a_i <= deg_bound.

    A negative answer is bounded-degree evidence that the cocycle is
    nontrivial, not a proof.
    """
    _require_odd(k)
    src, dst = bol_weights(k)
    if target is None:
        target = gamma(k)
    unknowns: list[DiffOperator] = []
    for i in range(k + 1):
        for d in range(deg_bound + 1):
            for odd in (False, True):
                unknowns.append(DiffOperator.monomial(SuperFunction.monomial(d, odd), i, src, dst))
    rows: dict[tuple, dict[int, Fraction]] = {}
    rhs: dict[tuple, Fraction] = {}
    for t, h in enumerate(OSP_HAMILTONIANS):
        for col, U in enumerate(unknowns):
            for key, v in _flatten_operator(t, lie_action(h, U)):
                rows.setdefault(key, {})[col] = v
        for key, v in _flatten_operator(t, target.values[t]):
            rhs[key] = v
    red = RowReducer()
    for col in range(len(unknowns)):
        red.add_column(col)
    for key in set(rows) | set(rhs):
        if not red.add_row(rows.get(key, {}), rhs.get(key, 0)):
            return NoneUpTo(deg_bound)
    sol = red.particular_solution()
    A = DiffOperator.zero(src, dst)
    for col, v in sol.items():
        A = A + unknowns[col].scale(v)
    return Found(A)
